use super::background::{build_background, FacetGraph};
use super::system::alexandrov_system;
use crate::criticality::{classify, CriticalityClass, CriticalityReport};
use crate::error::{Error, Result};
use crate::mixedvol::{mixed_area_measure_in_subspace, BodyCollection, MixedAreaMeasure, SupportDifference};
use crate::ratgeo::{self, dot, kernel_basis, positive_multiple, QMatrix, QVector, Rational, Subspace};
use num_traits::Zero;

/// The degenerate directions attached to one maximal set `β_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    /// Indices of `β_j` in the original collection.
    pub beta: Vec<usize>,
    /// `W_j`, the span of the projected bodies of `β_j`.
    pub space: Subspace,
    /// `Ω_j`: atom normals of the mixed area measure of the projected `β_j` bodies inside `W_j`.
    pub omega: Vec<QVector>,
    /// Positive rational multiples of `weight(ω)/|n_ω|`, sharing one scale per component.
    pub coefficients: Vec<Rational>,
    /// `|Ω_j| − |β_j| − 2`.
    pub dim: usize,
}

/// Unique split `ζ_i = ⟨s, n_i⟩ + Σ_j φ_j(P_{W_j} n_i)` on active facets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    /// Linear part, in `L⊥`.
    pub s: QVector,
    /// Values of each degenerate part at the normals of `Ω_j`.
    pub components: Vec<QVector>,
}

impl Decomposition {
    pub fn is_linear(&self) -> bool {
        self.components.iter().all(|c| ratgeo::is_zero_vec(c))
    }
}

/// Extremal functions restricted to the active facet normals, in normal-scaled
/// coordinates `ζ_i = f(n_i)`.
#[derive(Clone, Debug)]
pub struct ExtremalSpace {
    pub graph: FacetGraph,
    pub criticality: CriticalityReport,
    pub system: QMatrix,
    /// Kernel basis of `S` restricted to active facets, padded with zeros to length `N`.
    pub basis: Vec<QVector>,
    /// Basis of `L⊥` used for the linear part.
    pub linear_basis: Vec<QVector>,
    pub dim_l: usize,
    pub components: Vec<Component>,
    map: QMatrix,
    constraints: QMatrix,
    map_rank: usize,
}

impl ExtremalSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// `dim L + Σ_j (|Ω_j| − |β_j| − 2)`.
    pub fn formula_dim(&self) -> usize {
        self.dim_l + self.components.iter().map(|c| c.dim).sum::<usize>()
    }

    /// Rank of the decomposition map on its constrained domain.
    pub fn decomposition_rank(&self) -> usize {
        self.map_rank
    }

    pub fn active(&self) -> &[usize] {
        &self.graph.active_vertices
    }

    /// Whether `ζ` restricted to active facets solves the system.
    pub fn contains(&self, zeta: &[Rational]) -> Result<bool> {
        let v = self.system.mul_vec(zeta)?;
        Ok(self.active().iter().all(|&i| v[i].is_zero()))
    }

    /// `s` with `ζ_i = ⟨s, n_i⟩` at every active facet, when one exists.
    pub fn linear_fit(&self, zeta: &[Rational]) -> Result<Option<QVector>> {
        let n = self.graph.ambient_dim();
        let rows: Vec<QVector> = self.active().iter().map(|&i| self.graph.normals[i].clone()).collect();
        if rows.is_empty() {
            return Ok(Some(ratgeo::zero_vec(n)));
        }
        let b: Vec<Rational> = self.active().iter().map(|&i| zeta[i].clone()).collect();
        QMatrix::from_rows(&rows, n)?.solve(&b)
    }

    /// Splits an extremal support vector into its linear and degenerate parts.
    pub fn decompose(&self, zeta: &[Rational]) -> Result<Decomposition> {
        let big_n = self.graph.num_facets();
        if zeta.len() != big_n {
            return Err(Error::DimensionMismatch {
                expected: big_n,
                found: zeta.len(),
            });
        }
        let cols = self.map.cols();
        let mut rows = self.map.row_vectors();
        rows.extend(self.constraints.row_vectors());
        let mut rhs: Vec<Rational> = self.active().iter().map(|&i| zeta[i].clone()).collect();
        rhs.extend(std::iter::repeat(Rational::zero()).take(self.constraints.rows()));
        let x = QMatrix::from_rows(&rows, cols)?
            .solve(&rhs)?
            .ok_or_else(|| Error::Unsolvable {
                residual: "support vector is not in the span of linear and degenerate parts".into(),
            })?;
        let n = self.graph.ambient_dim();
        let mut s = ratgeo::zero_vec(n);
        for (c, b) in x.iter().zip(&self.linear_basis) {
            s = ratgeo::add(&s, &ratgeo::scale(b, c));
        }
        let mut offset = self.dim_l;
        let mut components = Vec::new();
        for comp in &self.components {
            components.push(x[offset..offset + comp.omega.len()].to_vec());
            offset += comp.omega.len();
        }
        Ok(Decomposition { s, components })
    }
}

fn component(
    graph: &FacetGraph,
    report: &CriticalityReport,
    beta: &[usize],
    space: &Subspace,
) -> Result<Component> {
    let l_perp = report.l_eta.orthogonal_complement();
    let bodies = graph.reference.select(beta).project(&l_perp)?;
    let measure = mixed_area_measure_in_subspace(space, &bodies)?;
    let first = measure
        .atoms()
        .first()
        .ok_or_else(|| Error::invariant("maximal set with an empty measure"))?
        .scaled_weight();
    let coefficients = measure
        .atoms()
        .iter()
        .map(|a| {
            a.scaled_weight()
                .ratio(&first)
                .ok_or_else(|| Error::invariant("atom weights of one component in distinct radicand classes"))
        })
        .collect::<Result<Vec<_>>>()?;
    let omega = measure.support();
    let dim = (omega.len() as i64 - beta.len() as i64 - 2).max(0) as usize;
    Ok(Component {
        beta: beta.to_vec(),
        space: space.clone(),
        omega,
        coefficients,
        dim,
    })
}

/// Builds the extremal space with the default background seed.
pub fn extremal_space(p: &BodyCollection) -> Result<ExtremalSpace> {
    extremal_space_with_seed(p, 0)
}

pub fn extremal_space_with_seed(p: &BodyCollection, seed: u64) -> Result<ExtremalSpace> {
    let report = classify(p);
    if report.class == CriticalityClass::Null {
        return Err(Error::precondition("null collection: every function is extremal"));
    }
    let graph = build_background(p, seed)?;
    let system = alexandrov_system(&graph, None)?;
    let active = graph.active_vertices.clone();
    let big_n = graph.num_facets();

    let restricted = system.select(&active, &active);
    let basis: Vec<QVector> = kernel_basis(&restricted)
        .into_iter()
        .map(|k| {
            let mut full = ratgeo::zero_vec(big_n);
            for (pos, &i) in active.iter().enumerate() {
                full[i] = k[pos].clone();
            }
            full
        })
        .collect();

    let linear_basis = report.l_eta.orthogonal_complement().basis().to_vec();
    let dim_l = linear_basis.len();
    let components = report
        .maximal_sets
        .iter()
        .zip(&report.l_j)
        .map(|(beta, space)| component(&graph, &report, beta, space))
        .collect::<Result<Vec<_>>>()?;

    // decomposition map: rows are active facets, columns are s-coordinates then φ_j values
    let cols = dim_l + components.iter().map(|c| c.omega.len()).sum::<usize>();
    let mut map = QMatrix::zeros(active.len(), cols);
    for (row, &i) in active.iter().enumerate() {
        let ni = &graph.normals[i];
        for (c, b) in linear_basis.iter().enumerate() {
            map.set(row, c, dot(b, ni));
        }
        let mut offset = dim_l;
        for comp in &components {
            let proj = comp.space.project(ni)?;
            if !ratgeo::is_zero_vec(&proj) {
                let hit = comp
                    .omega
                    .iter()
                    .enumerate()
                    .find_map(|(k, w)| positive_multiple(&proj, w).map(|mu| (k, mu)));
                let (k, mu) = hit.ok_or_else(|| {
                    Error::invariant(format!("active normal {i} projects off the atoms of a component"))
                })?;
                map.set(row, offset + k, mu);
            }
            offset += comp.omega.len();
        }
    }
    let mut constraint_rows = Vec::new();
    let mut offset = dim_l;
    for comp in &components {
        let mut normalization = ratgeo::zero_vec(cols);
        for (k, c) in comp.coefficients.iter().enumerate() {
            normalization[offset + k] = c.clone();
        }
        constraint_rows.push(normalization);
        for v in comp.space.basis() {
            let mut row = ratgeo::zero_vec(cols);
            for (k, (c, w)) in comp.coefficients.iter().zip(&comp.omega).enumerate() {
                row[offset + k] = c * dot(v, w);
            }
            constraint_rows.push(row);
        }
        offset += comp.omega.len();
    }
    let constraints = QMatrix::from_rows(&constraint_rows, cols)?;

    let domain = if constraint_rows.is_empty() {
        (0..cols).map(|c| ratgeo::unit_vec(cols, c)).collect()
    } else {
        kernel_basis(&constraints)
    };
    let mut images = Vec::new();
    for d in &domain {
        let zeta_v = map.mul_vec(d)?;
        if !restricted.mul_vec(&zeta_v)?.iter().all(Zero::is_zero) {
            return Err(Error::invariant("decomposition map leaves the kernel"));
        }
        images.push(zeta_v);
    }
    let map_rank = if images.is_empty() {
        0
    } else {
        QMatrix::from_rows(&images, active.len())?.rank()
    };

    Ok(ExtremalSpace {
        graph,
        criticality: report,
        system,
        basis,
        linear_basis,
        dim_l,
        components,
        map,
        constraints,
        map_rank,
    })
}

/// Result of testing `S_{f,P} = 0`.
#[derive(Clone, Debug)]
pub struct ExtremalityOutcome {
    pub extremal: bool,
    /// The signed measure `S_{f,P}`.
    pub measure: MixedAreaMeasure,
    /// Present when `f` is extremal and the collection is not null.
    pub decomposition: Option<Decomposition>,
}

/// Tests `S_{f,P} = 0` and, when it holds, decomposes `f`.
pub fn extremality_test(p: &BodyCollection, f: &SupportDifference) -> Result<ExtremalityOutcome> {
    let measure = f.measure(p)?;
    if !measure.is_zero() || classify(p).class == CriticalityClass::Null {
        return Ok(ExtremalityOutcome {
            extremal: measure.is_zero(),
            measure,
            decomposition: None,
        });
    }
    let space = extremal_space(p)?;
    extremality_test_in(&space, f)
}

/// Like [`extremality_test`] with a precomputed space.
pub fn extremality_test_in(space: &ExtremalSpace, f: &SupportDifference) -> Result<ExtremalityOutcome> {
    let measure = f.measure(&space.graph.reference)?;
    if !measure.is_zero() {
        return Ok(ExtremalityOutcome {
            extremal: false,
            measure,
            decomposition: None,
        });
    }
    let zeta: Vec<Rational> = space
        .graph
        .normals
        .iter()
        .map(|n| f.eval(n))
        .collect::<Result<_>>()?;
    if !space.contains(&zeta)? {
        return Err(Error::invariant("vanishing measure but support vector outside the kernel"));
    }
    let decomposition = space.decompose(&zeta)?;
    Ok(ExtremalityOutcome {
        extremal: true,
        measure,
        decomposition: Some(decomposition),
    })
}
