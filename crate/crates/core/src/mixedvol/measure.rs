use super::{mixed_volume_in_subspace, polarization, BodyCollection};
use crate::error::{Error, Result};
use crate::polytope::VPolytope;
use crate::ratgeo::{self, primitive, QVector, RadicalSum, Rational, ScaledRational, Subspace};
use num_bigint::BigInt;
use num_traits::Zero;

/// A point mass of a mixed area measure at the direction of `normal`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Atom {
    /// Primitive integer representative of the direction.
    pub normal: QVector,
    /// Mass at the unit direction `normal/|normal|`.
    pub weight: ScaledRational,
}

impl Atom {
    /// `weight/|normal|`, the factor multiplying `h(normal)` in normal-scaled sums.
    pub fn scaled_weight(&self) -> ScaledRational {
        let len = ScaledRational::sqrt(ratgeo::norm_sq(&self.normal)).expect("normal is nonzero");
        self.weight.div(&len).expect("normal is nonzero")
    }
}

/// Finite atomic measure on directions; signed when built from differences.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MixedAreaMeasure {
    ambient_dim: usize,
    atoms: Vec<Atom>,
}

impl MixedAreaMeasure {
    pub fn new(ambient_dim: usize, mut atoms: Vec<Atom>) -> Result<Self> {
        for a in atoms.iter_mut() {
            if a.normal.len() != ambient_dim {
                return Err(Error::DimensionMismatch {
                    expected: ambient_dim,
                    found: a.normal.len(),
                });
            }
            if ratgeo::is_zero_vec(&a.normal) {
                return Err(Error::ZeroVector);
            }
            a.normal = primitive(&a.normal);
        }
        atoms.retain(|a| !a.weight.is_zero());
        atoms.sort_by(|a, b| a.normal.cmp(&b.normal));
        for w in atoms.windows(2) {
            if w[0].normal == w[1].normal {
                return Err(Error::precondition("atoms must have pairwise distinct directions"));
            }
        }
        Ok(MixedAreaMeasure { ambient_dim, atoms })
    }

    pub fn zero(ambient_dim: usize) -> Self {
        MixedAreaMeasure {
            ambient_dim,
            atoms: Vec::new(),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.atoms
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    /// True for the zero measure.
    pub fn is_zero(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn support(&self) -> Vec<QVector> {
        self.atoms.iter().map(|a| a.normal.clone()).collect()
    }

    /// Mass at the direction of `u` (zero when `u` is not an atom).
    pub fn weight_at(&self, u: &[Rational]) -> ScaledRational {
        let p = primitive(u);
        self.atoms
            .binary_search_by(|a| a.normal.as_slice().cmp(p.as_slice()))
            .map(|i| self.atoms[i].weight.clone())
            .unwrap_or_else(|_| ScaledRational::zero())
    }

    /// `self + coeff·other`. Masses at a common direction share a radicand class.
    pub fn combine(&self, other: &MixedAreaMeasure, coeff: &Rational) -> Result<Self> {
        let mut atoms = self.atoms.clone();
        for b in &other.atoms {
            let add = b.weight.scale(coeff);
            match atoms.iter_mut().find(|a| a.normal == b.normal) {
                Some(a) => a.weight = a.weight.checked_add(&add)?,
                None => atoms.push(Atom {
                    normal: b.normal.clone(),
                    weight: add,
                }),
            }
        }
        Self::new(self.ambient_dim, atoms)
    }

    /// Closure: `Σ_u weight(u)·u/|u| = 0`, checked coordinate-wise with grouped radicands.
    pub fn is_closed(&self) -> bool {
        (0..self.ambient_dim).all(|k| {
            let mut sum = RadicalSum::new();
            for a in &self.atoms {
                sum.add(&a.scaled_weight().scale(&a.normal[k]));
            }
            sum.is_zero()
        })
    }

    /// `(1/n)·Σ_u h(u)·weight(u)/|u|` for a function given at the primitive normals.
    pub fn integrate(&self, f: impl Fn(&QVector) -> Rational) -> RadicalSum {
        let mut sum = RadicalSum::new();
        for a in &self.atoms {
            sum.add(&a.scaled_weight().scale(&f(&a.normal)));
        }
        sum
    }
}

/// `f = h_plus − scale·h_minus`, a difference of support functions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupportDifference {
    pub plus: VPolytope,
    pub minus: VPolytope,
    pub scale: Rational,
}

impl SupportDifference {
    pub fn new(plus: VPolytope, minus: VPolytope, scale: Rational) -> Result<Self> {
        if plus.ambient_dim() != minus.ambient_dim() {
            return Err(Error::DimensionMismatch {
                expected: plus.ambient_dim(),
                found: minus.ambient_dim(),
            });
        }
        Ok(SupportDifference { plus, minus, scale })
    }

    pub fn ambient_dim(&self) -> usize {
        self.plus.ambient_dim()
    }

    pub fn eval(&self, u: &[Rational]) -> Result<Rational> {
        Ok(self.plus.support_value(u)? - &self.scale * self.minus.support_value(u)?)
    }

    /// The signed measure `S_{f, C_1, …, C_{n−2}}`, by linearity in the first slot.
    pub fn measure(&self, reference: &BodyCollection) -> Result<MixedAreaMeasure> {
        let sp = mixed_area_measure(&reference.with_front(&[self.plus.clone()])?)?;
        let sm = mixed_area_measure(&reference.with_front(&[self.minus.clone()])?)?;
        sp.combine(&sm, &-self.scale.clone())
    }
}

/// `S_{C_1, …, C_{n−1}}` in `Q^n`.
pub fn mixed_area_measure(c: &BodyCollection) -> Result<MixedAreaMeasure> {
    let n = c.ambient_dim();
    if c.len() + 1 != n {
        return Err(Error::Arity {
            expected: n.saturating_sub(1),
            found: c.len(),
        });
    }
    mixed_area_measure_in_subspace(&Subspace::full(n), c)
}

/// Mixed area measure of `dim W − 1` bodies lying in translates of `W`,
/// computed inside `W`. Atoms are primitive normals in `W`; each mass is the
/// intrinsic mixed volume of the faces inside `W ∩ u⊥`.
pub fn mixed_area_measure_in_subspace(w: &Subspace, c: &BodyCollection) -> Result<MixedAreaMeasure> {
    let d = w.dim();
    if c.len() + 1 != d {
        return Err(Error::Arity {
            expected: d.saturating_sub(1),
            found: c.len(),
        });
    }
    for (i, b) in c.bodies().iter().enumerate() {
        if b.num_vertices() > 1 && !w.contains_subspace(b.direction()) {
            return Err(Error::NotContained { index: i });
        }
    }
    let sum = c.sum()?;
    let dir = sum.direction();
    let candidates: Vec<QVector> = if dir.dim() == d {
        sum.facet_normals()?
    } else if dir.dim() + 1 == d {
        let normal_space = w.intersection(&dir.orthogonal_complement())?;
        let nu = primitive(&normal_space.basis()[0]);
        vec![nu.clone(), ratgeo::neg(&nu)]
    } else {
        Vec::new()
    };
    let mut atoms = Vec::new();
    for nu in candidates {
        let faces = c.faces(&nu)?;
        let hyper = w.meet_hyperplane(&nu)?;
        let weight = mixed_volume_in_subspace(&hyper, &faces)?;
        if !weight.is_zero() {
            atoms.push(Atom { normal: nu, weight });
        }
    }
    MixedAreaMeasure::new(w.ambient_dim(), atoms)
}

/// Both sides of `V_n(K, C_1, …, C_{n−1}) = (1/n)·Σ_u h_K(u)·S_C(u)`, the
/// right side evaluated at primitive normals as `h_K(n_u)·weight/|n_u|`.
pub fn mixvolarea_sides(k: &VPolytope, c: &BodyCollection) -> Result<(RadicalSum, RadicalSum)> {
    let n = c.ambient_dim();
    let full = c.with_front(&[k.clone()])?;
    let mut lhs = RadicalSum::new();
    lhs.add(&ScaledRational::rational(polarization(&full.refs())));
    let s = mixed_area_measure(c)?;
    let mut rhs = RadicalSum::new();
    let inv_n = Rational::new(BigInt::from(1), BigInt::from(n));
    for a in s.atoms() {
        let h = k.support_value(&a.normal)?;
        if h.is_zero() {
            continue;
        }
        rhs.add(&a.scaled_weight().scale(&(h * &inv_n)));
    }
    Ok((lhs, rhs))
}

pub fn mixvolarea_check(k: &VPolytope, c: &BodyCollection) -> Result<bool> {
    let (l, r) = mixvolarea_sides(k, c)?;
    Ok(l == r)
}
