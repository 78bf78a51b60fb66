use super::{mixed_area_measure, mixed_area_measure_in_subspace, BodyCollection};
use crate::error::{Error, Result};
use crate::ratgeo::{binomial, dot, positive_multiple, QVector, Rational, ScaledRational, Subspace};
use num_traits::Zero;

/// Where an atom of `S_{C_1,…,C_{n−1}}` sits relative to the propeller.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AtomLocation {
    /// Inside `E⊥`.
    Shaft,
    /// Inside the open half-space `F_z⁺` for the atom `z` of the measure in `E`.
    Blade { z: QVector },
    /// Neither; a support-inclusion failure.
    Stray,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropellerAtom {
    pub normal: QVector,
    pub weight: ScaledRational,
    pub location: AtomLocation,
    /// Weight identity on the blade; `None` on the shaft.
    pub identity: Option<bool>,
}

impl PropellerAtom {
    pub fn passes(&self) -> bool {
        match self.location {
            AtomLocation::Shaft => true,
            AtomLocation::Blade { .. } => self.identity == Some(true),
            AtomLocation::Stray => false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropellerReport {
    /// Atom directions `z` of the measure of the first `k` bodies inside `E`.
    pub blades: Vec<QVector>,
    pub atoms: Vec<PropellerAtom>,
    /// Atoms of some blade measure with `⟨z,x⟩ > 0` that the full measure lacks.
    pub missing: Vec<QVector>,
}

impl PropellerReport {
    pub fn all_pass(&self) -> bool {
        self.missing.is_empty() && self.atoms.iter().all(PropellerAtom::passes)
    }

    pub fn shaft_count(&self) -> usize {
        self.atoms
            .iter()
            .filter(|a| a.location == AtomLocation::Shaft)
            .count()
    }

    pub fn blade_count(&self) -> usize {
        self.atoms
            .iter()
            .filter(|a| matches!(a.location, AtomLocation::Blade { .. }))
            .count()
    }
}

/// Verifies the shaft-and-blade structure of `S_{C_1,…,C_{n−1}}` when
/// `C_1,…,C_k` lie in translates of `E` with `dim E = k + 1`.
///
/// On the blade of `z`, the full measure must equal
/// `S_{C_1..C_k}(z)·S_{P_F C_{k+1},…,P_F C_{n−1}} / binom(n−1,k)` where
/// `F = span(E⊥, z)`, restricted to `⟨z,x⟩ > 0`.
pub fn verify_propeller(e: &Subspace, c: &BodyCollection, k: usize) -> Result<PropellerReport> {
    let n = c.ambient_dim();
    if e.ambient_dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: e.ambient_dim(),
        });
    }
    if c.len() + 1 != n {
        return Err(Error::Arity {
            expected: n.saturating_sub(1),
            found: c.len(),
        });
    }
    if k == 0 || k >= n {
        return Err(Error::precondition(format!("k must lie in 1..{}, got {k}", n - 1)));
    }
    if e.dim() != k + 1 {
        return Err(Error::precondition(format!(
            "dim E = {} but k + 1 = {}",
            e.dim(),
            k + 1
        )));
    }
    let first = c.select(&(0..k).collect::<Vec<_>>());
    let rest = c.select(&(k..n - 1).collect::<Vec<_>>());
    let inner = mixed_area_measure_in_subspace(e, &first)?;
    let full = mixed_area_measure(c)?;
    let coeff = Rational::from_integer(binomial(n - 1, k));
    let e_perp = e.orthogonal_complement();

    // blade measures, one per atom z of the inner measure
    let mut blade_measures = Vec::new();
    for z in inner.atoms() {
        let f = e_perp.sum(&Subspace::span(n, &[z.normal.clone()])?)?;
        let s = mixed_area_measure_in_subspace(&f, &rest.project(&f)?)?;
        blade_measures.push((z, s));
    }

    let mut atoms = Vec::new();
    for a in full.atoms() {
        let pe = e.project(&a.normal)?;
        if pe.iter().all(Zero::is_zero) {
            atoms.push(PropellerAtom {
                normal: a.normal.clone(),
                weight: a.weight.clone(),
                location: AtomLocation::Shaft,
                identity: None,
            });
            continue;
        }
        let blade = blade_measures
            .iter()
            .find(|(z, _)| positive_multiple(&z.normal, &pe).is_some());
        let (location, identity) = match blade {
            None => (AtomLocation::Stray, None),
            Some((z, s)) => {
                let lhs = a.weight.scale(&coeff);
                let rhs = z.weight.mul(&s.weight_at(&a.normal));
                (
                    AtomLocation::Blade {
                        z: z.normal.clone(),
                    },
                    Some(lhs == rhs),
                )
            }
        };
        atoms.push(PropellerAtom {
            normal: a.normal.clone(),
            weight: a.weight.clone(),
            location,
            identity,
        });
    }

    let mut missing = Vec::new();
    for (z, s) in &blade_measures {
        for x in s.atoms() {
            if dot(&z.normal, &x.normal) > Rational::zero() && full.weight_at(&x.normal).is_zero() {
                missing.push(x.normal.clone());
            }
        }
    }

    Ok(PropellerReport {
        blades: inner.support(),
        atoms,
        missing,
    })
}
