use super::background::FacetGraph;
use super::system::{alexandrov_system, realization};
use crate::criticality::classify;
use crate::error::{Error, Result};
use crate::mixedvol::chart_mixed_volume;
use crate::polytope::VPolytope;
use crate::ratgeo::{QMatrix, QVector, Rational, Subspace};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rayon::prelude::*;

/// Outcome of the local extension for one kernel vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalAfExtension {
    /// `z'` with `z'_i = z_i` on active facets and the reduced system satisfied elsewhere.
    pub z: QVector,
    /// Per facet, a positive multiple of `V_{n−1}(g^i, g^i, P^i_s : s ≠ r)` for
    /// `g = h_Q − h_P`, `h_Q = h_P + t·z'`.
    pub quadratic: Vec<Rational>,
}

impl LocalAfExtension {
    pub fn audit_passes(&self) -> bool {
        self.quadratic.iter().all(|q| !q.is_positive())
    }
}

/// Extends a kernel vector off the active facets by solving
/// `z'_i = z_i (i active)`, `(S̄ z')_i = 0 (i inactive)` for the system in
/// which the background replaces `P_r`, then audits the quadratic sign at every
/// facet. `r` is 0-based.
pub fn local_af_extension(graph: &FacetGraph, r: usize, z: &[Rational]) -> Result<LocalAfExtension> {
    let big_n = graph.num_facets();
    if z.len() != big_n {
        return Err(Error::DimensionMismatch {
            expected: big_n,
            found: z.len(),
        });
    }
    if !classify(&graph.reference).class.is_critical() {
        return Err(Error::precondition("local extension needs a critical collection"));
    }
    let s = alexandrov_system(graph, None)?;
    if !s.mul_vec(z)?.iter().all(Zero::is_zero) {
        return Err(Error::precondition("z is not in the kernel of the system"));
    }
    let s_bar = alexandrov_system(graph, Some(r))?;

    let mut rows = Vec::with_capacity(big_n);
    let mut rhs = Vec::with_capacity(big_n);
    for i in 0..big_n {
        if graph.is_active_vertex(i) {
            let mut row = vec![Rational::zero(); big_n];
            row[i] = Rational::from_integer(BigInt::from(1));
            rows.push(row);
            rhs.push(z[i].clone());
        } else {
            rows.push(s_bar.row(i));
            rhs.push(Rational::zero());
        }
    }
    let m = QMatrix::from_rows(&rows, big_n)?;
    let Some(z_prime) = m.solve(&rhs)? else {
        let mut aug = rows.clone();
        for (row, b) in aug.iter_mut().zip(&rhs) {
            row.push(b.clone());
        }
        let rank_aug = QMatrix::from_rows(&aug, big_n + 1)?.rank();
        return Err(Error::Unsolvable {
            residual: format!("rank {} but augmented rank {}", m.rank(), rank_aug),
        });
    };

    let quadratic = quadratic_audit(graph, r, &z_prime)?;
    Ok(LocalAfExtension {
        z: z_prime,
        quadratic,
    })
}

/// `V(Q^i,Q^i,R) − 2V(Q^i,P^i,R) + V(P^i,P^i,R)` in the chart of `n_i⊥`,
/// with `R = (F(P_s, n_i))_{s≠r}` and `Q` the realization of `z'`.
fn quadratic_audit(graph: &FacetGraph, r: usize, z: &[Rational]) -> Result<Vec<Rational>> {
    let (q, _) = realization(graph, z)?;
    let n = graph.ambient_dim();
    let reduced = graph.reference.without(r);
    let two = Rational::from_integer(BigInt::from(2));
    (0..graph.num_facets())
        .into_par_iter()
        .map(|i| {
            let u = &graph.normals[i];
            let space = Subspace::span(n, &[u.clone()])?.orthogonal_complement();
            let qi = q.face(u)?.polytope;
            let pi = graph.background.face(u)?.polytope;
            let rest = reduced.faces(u)?;
            let mv = |a: &VPolytope, b: &VPolytope| -> Result<Rational> {
                let mut bodies = vec![a, b];
                bodies.extend(rest.bodies().iter());
                chart_mixed_volume(&space, &bodies)
            };
            Ok(mv(&qi, &qi)? - &two * mv(&qi, &pi)? + mv(&pi, &pi)?)
        })
        .collect()
}
