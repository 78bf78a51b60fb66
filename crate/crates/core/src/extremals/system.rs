use super::background::{ridge_weight, FacetGraph};
use crate::error::{Error, Result};
use crate::polytope::{convex_hull, VPolytope};
use crate::ratgeo::{dot, norm_sq, QMatrix, QVector, Rational};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

/// Symmetric matrix `S` with `Σ_j S_ij ζ_j = (Az)_i / |n_i|` for `ζ_i = |n_i|·z_i`.
///
/// Off the diagonal `S_ij = w_ij/G_ij` on neighboring facets, and
/// `S_ii = −Σ_k (w_ik/G_ik)·⟨n_i,n_k⟩/|n_i|²`, where `w_ij = ω_ij·√G_ij`. With
/// `r = Some(r)` the weights are `V_{n−2}(P^{ij}, P^{ij}_s : s ≠ r)·√G_ij`,
/// i.e. the background polytope takes the place of `P_r`. Indices are 0-based.
pub fn alexandrov_system(graph: &FacetGraph, r: Option<usize>) -> Result<QMatrix> {
    let weights: Vec<Rational> = match r {
        None => graph.edges.iter().map(|e| e.weight.clone()).collect(),
        Some(r) => {
            if r >= graph.reference.len() {
                return Err(Error::precondition(format!(
                    "r = {} is out of range for {} reference bodies",
                    r + 1,
                    graph.reference.len()
                )));
            }
            let reduced = graph.reference.without(r);
            graph
                .edges
                .par_iter()
                .map(|e| {
                    let u = crate::ratgeo::add(&graph.normals[e.i], &graph.normals[e.j]);
                    let faces = reduced.faces(&u)?.with_front(&[graph.background.face(&u)?.polytope])?;
                    Ok(ridge_weight(&graph.normals, e.i, e.j, &faces)?.1)
                })
                .collect::<Result<_>>()?
        }
    };
    let big_n = graph.num_facets();
    let mut s = QMatrix::zeros(big_n, big_n);
    for (e, w) in graph.edges.iter().zip(&weights) {
        if w.is_zero() {
            continue;
        }
        let c = w / &e.gram;
        s.set(e.i, e.j, c.clone());
        s.set(e.j, e.i, c.clone());
        let ni = &graph.normals[e.i];
        let nj = &graph.normals[e.j];
        let d = dot(ni, nj);
        let ii = s.get(e.i, e.i) - &c * &d / norm_sq(ni);
        s.set(e.i, e.i, ii);
        let jj = s.get(e.j, e.j) - &c * &d / norm_sq(nj);
        s.set(e.j, e.j, jj);
    }
    Ok(s)
}

/// Support-vector realization: the polytope `Q` with `h_Q(n_i) = h_P(n_i) + t·ζ_i`
/// for every facet, strongly isomorphic to the background, and the step `t > 0`.
///
/// `t` starts at 1 and is halved until every vertex of `Q` stays strictly inside
/// the facets it does not lie on.
pub fn realization(graph: &FacetGraph, zeta: &[Rational]) -> Result<(VPolytope, Rational)> {
    let big_n = graph.num_facets();
    if zeta.len() != big_n {
        return Err(Error::DimensionMismatch {
            expected: big_n,
            found: zeta.len(),
        });
    }
    let n = graph.ambient_dim();
    let two = Rational::from_integer(BigInt::from(2));
    let mut t = Rational::one();
    for _ in 0..64 {
        let rhs: Vec<Rational> = graph
            .heights
            .iter()
            .zip(zeta)
            .map(|(h, z)| h + &t * z)
            .collect();
        let mut points: Vec<QVector> = Vec::with_capacity(graph.vertices.len());
        let mut ok = true;
        for v in &graph.vertices {
            let rows: Vec<QVector> = v.facets.iter().map(|&k| graph.normals[k].clone()).collect();
            let b: Vec<Rational> = v.facets.iter().map(|&k| rhs[k].clone()).collect();
            let x = QMatrix::from_rows(&rows, n)?
                .solve(&b)?
                .ok_or_else(|| Error::invariant("vertex normals are dependent"))?;
            if (0..big_n).any(|k| v.facets.binary_search(&k).is_err() && dot(&graph.normals[k], &x) >= rhs[k]) {
                ok = false;
                break;
            }
            points.push(x);
        }
        if ok {
            return Ok((convex_hull(&points)?, t));
        }
        t /= &two;
    }
    Err(Error::RetryExhausted {
        attempts: 64,
        reason: "no step keeps the support vector realizable".into(),
    })
}
