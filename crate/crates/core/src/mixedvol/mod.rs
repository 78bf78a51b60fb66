//! Mixed volumes, mixed area measures and the identities relating them.

mod measure;
pub mod oracle;
mod propeller;

pub use measure::{
    mixed_area_measure, mixed_area_measure_in_subspace, mixvolarea_check, Atom, MixedAreaMeasure,
    SupportDifference,
};
pub use propeller::{verify_propeller, AtomLocation, PropellerAtom, PropellerReport};

use crate::error::{Error, Result};
use crate::polytope::{convex_hull, dim_of_sum, minkowski_sum, VPolytope};
use crate::ratgeo::{self, binomial, factorial, QVector, Rational, ScaledRational, Subspace};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

/// An ordered list of polytopes in a common ambient space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BodyCollection {
    ambient_dim: usize,
    bodies: Vec<VPolytope>,
}

impl BodyCollection {
    pub fn new(ambient_dim: usize, bodies: Vec<VPolytope>) -> Result<Self> {
        for b in &bodies {
            if b.ambient_dim() != ambient_dim {
                return Err(Error::DimensionMismatch {
                    expected: ambient_dim,
                    found: b.ambient_dim(),
                });
            }
        }
        Ok(BodyCollection { ambient_dim, bodies })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn bodies(&self) -> &[VPolytope] {
        &self.bodies
    }

    pub fn len(&self) -> usize {
        self.bodies.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bodies.is_empty()
    }

    pub fn refs(&self) -> Vec<&VPolytope> {
        self.bodies.iter().collect()
    }

    /// The collection with `extra` prepended.
    pub fn with_front(&self, extra: &[VPolytope]) -> Result<Self> {
        let mut bodies = extra.to_vec();
        bodies.extend(self.bodies.iter().cloned());
        Self::new(self.ambient_dim, bodies)
    }

    /// Bodies at the given indices, in that order.
    pub fn select(&self, indices: &[usize]) -> Self {
        BodyCollection {
            ambient_dim: self.ambient_dim,
            bodies: indices.iter().map(|&i| self.bodies[i].clone()).collect(),
        }
    }

    /// The collection without body `r`.
    pub fn without(&self, r: usize) -> Self {
        let idx: Vec<usize> = (0..self.len()).filter(|&i| i != r).collect();
        self.select(&idx)
    }

    /// Faces `F(C_i, u)` of every body.
    pub fn faces(&self, u: &[Rational]) -> Result<Self> {
        let bodies = self
            .bodies
            .iter()
            .map(|b| b.face(u).map(|f| f.polytope))
            .collect::<Result<Vec<_>>>()?;
        Self::new(self.ambient_dim, bodies)
    }

    /// Orthogonal projections `P_E C_i`.
    pub fn project(&self, e: &Subspace) -> Result<Self> {
        let bodies = self
            .bodies
            .iter()
            .map(|b| b.project(e))
            .collect::<Result<Vec<_>>>()?;
        Self::new(self.ambient_dim, bodies)
    }

    pub fn sum(&self) -> Result<VPolytope> {
        crate::polytope::minkowski_sum_all(&self.refs(), self.ambient_dim)
    }
}

/// Groups identical bodies: returns distinct bodies and their multiplicities.
fn group(bodies: &[&VPolytope]) -> (Vec<VPolytope>, Vec<usize>) {
    let mut distinct: Vec<VPolytope> = Vec::new();
    let mut counts = Vec::new();
    for b in bodies {
        match distinct.iter().position(|d| d == *b) {
            Some(i) => counts[i] += 1,
            None => {
                distinct.push((*b).clone());
                counts.push(1);
            }
        }
    }
    (distinct, counts)
}

/// `V_k(C_1, …, C_k)` for `k` bodies in `Q^k` by polarization:
/// `(1/k!)·Σ_{∅≠S} (−1)^{k−|S|} Vol(Σ_{i∈S} C_i)`, with repeated bodies grouped.
pub(crate) fn polarization(bodies: &[&VPolytope]) -> Rational {
    let k = bodies.len();
    if k == 0 {
        return Rational::one();
    }
    let n = bodies[0].ambient_dim();
    debug_assert_eq!(n, k);
    let (distinct, counts) = group(bodies);
    let m = distinct.len();

    // all multiplicity vectors a ≤ counts, enumerated by total size
    let total: usize = counts.iter().map(|c| c + 1).product();
    let mut vectors: Vec<Vec<usize>> = (0..total)
        .map(|mut code| {
            counts
                .iter()
                .map(|c| {
                    let digit = code % (c + 1);
                    code /= c + 1;
                    digit
                })
                .collect()
        })
        .collect();
    vectors.sort_by_key(|a| a.iter().sum::<usize>());

    // Minkowski sums level by level: sum(a) = sum(a - e_j) + C_j for the last nonzero j
    let mut sums: std::collections::HashMap<Vec<usize>, VPolytope> = std::collections::HashMap::new();
    sums.insert(vec![0; m], VPolytope::point(ratgeo::zero_vec(n)));
    let max_level = counts.iter().sum::<usize>();
    for level in 1..=max_level {
        let todo: Vec<&Vec<usize>> = vectors.iter().filter(|a| a.iter().sum::<usize>() == level).collect();
        let built: Vec<(Vec<usize>, VPolytope)> = todo
            .par_iter()
            .map(|a| {
                let j = a.iter().rposition(|&x| x > 0).expect("level ≥ 1");
                let mut prev = (*a).clone();
                prev[j] -= 1;
                let s = minkowski_sum(&sums[&prev], &distinct[j]).expect("common dimension");
                ((*a).clone(), s)
            })
            .collect();
        sums.extend(built);
    }

    let terms: Vec<Rational> = vectors
        .par_iter()
        .filter(|a| a.iter().any(|&x| x > 0))
        .map(|a| {
            let s = &sums[a];
            if !s.is_full_dim() {
                return Rational::zero();
            }
            let size: usize = a.iter().sum();
            let mut mult = BigInt::one();
            for (ai, ci) in a.iter().zip(&counts) {
                mult *= binomial(*ci, *ai);
            }
            let sign = if (k - size) % 2 == 0 { 1 } else { -1 };
            s.volume() * Rational::from_integer(mult * BigInt::from(sign))
        })
        .collect();
    let total: Rational = terms.into_iter().fold(Rational::zero(), |acc, t| acc + t);
    total / Rational::from_integer(factorial(k))
}

fn check_arity(c: &BodyCollection, expected: usize) -> Result<()> {
    if c.len() != expected {
        return Err(Error::Arity {
            expected,
            found: c.len(),
        });
    }
    Ok(())
}

/// `V_n(C_1, …, C_n)`; the result is rational (radicand 1).
pub fn mixed_volume(c: &BodyCollection) -> Result<ScaledRational> {
    check_arity(c, c.ambient_dim())?;
    Ok(ScaledRational::rational(polarization(&c.refs())))
}

/// Rational mixed volume for callers that know the collection is well formed.
pub fn mixed_volume_q(bodies: &[&VPolytope]) -> Result<Rational> {
    let n = bodies.first().map_or(0, |b| b.ambient_dim());
    if bodies.iter().any(|b| b.ambient_dim() != n) {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: bodies.iter().map(|b| b.ambient_dim()).find(|&d| d != n).unwrap_or(n),
        });
    }
    if bodies.len() != n {
        return Err(Error::Arity {
            expected: n,
            found: bodies.len(),
        });
    }
    Ok(polarization(bodies))
}

/// Bodies expressed in the pivot chart of `E`; errors unless each lies in a translate of `E`.
pub(crate) fn to_chart(e: &Subspace, bodies: &[&VPolytope]) -> Result<Vec<VPolytope>> {
    bodies
        .iter()
        .enumerate()
        .map(|(i, b)| {
            if b.ambient_dim() != e.ambient_dim() {
                return Err(Error::DimensionMismatch {
                    expected: e.ambient_dim(),
                    found: b.ambient_dim(),
                });
            }
            if b.num_vertices() > 1 && !e.contains_subspace(b.direction()) {
                return Err(Error::NotContained { index: i });
            }
            let pts: Vec<QVector> = b.vertices().iter().map(|v| e.chart_coords(v)).collect();
            convex_hull(&pts)
        })
        .collect()
}

/// Mixed volume in the pivot chart of `E`, without the metric factor.
pub(crate) fn chart_mixed_volume(e: &Subspace, bodies: &[&VPolytope]) -> Result<Rational> {
    if bodies.len() != e.dim() {
        return Err(Error::Arity {
            expected: e.dim(),
            found: bodies.len(),
        });
    }
    let chart = to_chart(e, bodies)?;
    Ok(polarization(&chart.iter().collect::<Vec<_>>()))
}

/// `V_E(C_1, …, C_m)` for bodies lying in translates of the `m`-dimensional subspace `E`.
pub fn mixed_volume_in_subspace(e: &Subspace, c: &BodyCollection) -> Result<ScaledRational> {
    let q = chart_mixed_volume(e, &c.refs())?;
    Ok(ScaledRational::rational(q).mul(&e.gram_sqrt()))
}

/// Condition (c) of the dimension criterion: `dim(C_{i_1} + … + C_{i_k}) ≥ k`
/// for every nonempty set of indices.
pub fn positivity(c: &BodyCollection) -> bool {
    positivity_of(&c.refs(), c.ambient_dim())
}

pub(crate) fn positivity_of(bodies: &[&VPolytope], ambient_dim: usize) -> bool {
    let m = bodies.len();
    (1u32..(1 << m)).all(|mask| {
        let subset: Vec<&VPolytope> = (0..m).filter(|i| mask >> i & 1 == 1).map(|i| bodies[i]).collect();
        dim_of_sum(&subset, ambient_dim) >= subset.len()
    })
}

/// Checks `n·V_n([0,u], C_1, …, C_{n−1}) = |u|·V_{n−1}(P_{u⊥}C_1, …, P_{u⊥}C_{n−1})`,
/// the segment projection formula for the direction `u` (`|u|` appears because
/// `[0,u]` has length `|u|`).
pub fn projection_check(u: &[Rational], c: &BodyCollection) -> Result<bool> {
    let (lhs, rhs) = projection_sides(u, c)?;
    Ok(lhs == rhs)
}

/// Both sides of [`projection_check`].
pub fn projection_sides(u: &[Rational], c: &BodyCollection) -> Result<(ScaledRational, ScaledRational)> {
    let n = c.ambient_dim();
    check_arity(c, n - 1)?;
    if u.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: u.len(),
        });
    }
    if ratgeo::is_zero_vec(u) {
        return Err(Error::ZeroVector);
    }
    let seg = VPolytope::segment(ratgeo::zero_vec(n), u.to_vec())?;
    let full = c.with_front(&[seg])?;
    let lhs = mixed_volume(&full)?.scale(&Rational::from_integer(BigInt::from(n)));
    let perp = Subspace::span(n, &[u.to_vec()])?.orthogonal_complement();
    let projected = c.project(&perp)?;
    let length = ScaledRational::sqrt(ratgeo::norm_sq(u))?;
    let rhs = mixed_volume_in_subspace(&perp, &projected)?.mul(&length);
    Ok((lhs, rhs))
}

/// Checks `binom(n,m)·V_n(C) = V_E(C_1..C_m)·V_{E⊥}(P_{E⊥}C_{m+1}, …, P_{E⊥}C_n)`
/// where `m = dim E` and the first `m` bodies lie in translates of `E`.
pub fn projection_formula_check(e: &Subspace, c: &BodyCollection) -> Result<bool> {
    let (lhs, rhs) = projection_formula_sides(e, c)?;
    Ok(lhs == rhs)
}

pub fn projection_formula_sides(e: &Subspace, c: &BodyCollection) -> Result<(ScaledRational, ScaledRational)> {
    let n = c.ambient_dim();
    check_arity(c, n)?;
    let m = e.dim();
    let first = c.select(&(0..m).collect::<Vec<_>>());
    let rest = c.select(&(m..n).collect::<Vec<_>>());
    let lhs = mixed_volume(c)?.scale(&Rational::from_integer(binomial(n, m)));
    let perp = e.orthogonal_complement();
    let rhs = mixed_volume_in_subspace(e, &first)?.mul(&mixed_volume_in_subspace(&perp, &rest.project(&perp)?)?);
    Ok((lhs, rhs))
}
