use crate::error::{Error, Result};
use crate::mixedvol::{mixed_volume_in_subspace, positivity_of, BodyCollection};
use crate::polytope::{convex_hull, minkowski_sum, VPolytope};
use crate::ratgeo::{self, dot, norm_sq, QMatrix, QVector, Rational, ScaledRational, Subspace};
use num_bigint::BigInt;
use num_traits::{One, Signed};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

/// Attempts made by [`build_background`] before giving up.
pub const DEFAULT_RETRY_BOUND: usize = 32;

/// A vertex of the simple background polytope with the facets through it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphVertex {
    /// Exactly `n` facet indices, sorted.
    pub facets: Vec<usize>,
    pub point: QVector,
}

/// Data on a pair of neighboring facets `(i, j)`, `i < j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeData {
    pub i: usize,
    pub j: usize,
    /// `G_ij = |n_i|²|n_j|² − ⟨n_i, n_j⟩²`.
    pub gram: Rational,
    /// `n_j = a·n_i + b·m` with `m ⊥ n_i` and `b = 1`.
    pub a: Rational,
    pub b: Rational,
    pub m: QVector,
    /// `V_{n−2}(P_1^{ij}, …, P_{n−2}^{ij})`, computed intrinsically in `span(n_i, n_j)⊥`.
    pub omega: ScaledRational,
    /// `ω_ij·√G_ij`, always rational.
    pub weight: Rational,
    pub active: bool,
}

/// The facet graph of a simple background polytope `P = P_0 + P_1 + … + P_{n−2}`.
#[derive(Clone, Debug)]
pub struct FacetGraph {
    pub reference: BodyCollection,
    pub background: VPolytope,
    /// Primitive outer normals `n_i`.
    pub normals: Vec<QVector>,
    /// `h_P(n_i)`.
    pub heights: Vec<Rational>,
    pub vertices: Vec<GraphVertex>,
    pub edges: Vec<EdgeData>,
    pub active_vertices: Vec<usize>,
    /// Seed and attempt that produced the background.
    pub seed: u64,
    pub attempts: usize,
}

impl FacetGraph {
    pub fn ambient_dim(&self) -> usize {
        self.reference.ambient_dim()
    }

    pub fn num_facets(&self) -> usize {
        self.normals.len()
    }

    pub fn is_active_vertex(&self, i: usize) -> bool {
        self.active_vertices.binary_search(&i).is_ok()
    }

    pub fn active_edges(&self) -> impl Iterator<Item = &EdgeData> {
        self.edges.iter().filter(|e| e.active)
    }

    pub fn edge(&self, i: usize, j: usize) -> Option<&EdgeData> {
        let (a, b) = if i < j { (i, j) } else { (j, i) };
        self.edges.iter().find(|e| e.i == a && e.j == b)
    }

    /// Neighbors of facet `i` in `E_P`.
    pub fn neighbors(&self, i: usize) -> Vec<usize> {
        self.edges
            .iter()
            .filter_map(|e| {
                if e.i == i {
                    Some(e.j)
                } else if e.j == i {
                    Some(e.i)
                } else {
                    None
                }
            })
            .collect()
    }

    /// Index of the facet with primitive normal `u`.
    pub fn facet_index(&self, u: &[Rational]) -> Option<usize> {
        let p = ratgeo::primitive(u);
        self.normals.iter().position(|n| *n == p)
    }

    /// `(h_C(n_i))_i`, the support vector of `C` in normal-scaled coordinates.
    pub fn support_vector(&self, c: &VPolytope) -> Result<QVector> {
        self.normals.iter().map(|n| c.support_value(n)).collect()
    }

    /// `F(P_r, n_i)` for every reference body.
    pub fn facet_faces(&self, i: usize) -> Result<BodyCollection> {
        self.reference.faces(&self.normals[i])
    }

    /// `F(P_r, n_i + n_j)` for every reference body.
    pub fn ridge_faces(&self, i: usize, j: usize) -> Result<BodyCollection> {
        self.reference
            .faces(&ratgeo::add(&self.normals[i], &self.normals[j]))
    }

    /// `span(n_i, n_j)⊥`.
    pub fn ridge_space(&self, i: usize, j: usize) -> Result<Subspace> {
        Ok(Subspace::span(
            self.ambient_dim(),
            &[self.normals[i].clone(), self.normals[j].clone()],
        )?
        .orthogonal_complement())
    }
}

fn gram(a: &[Rational], b: &[Rational]) -> Rational {
    let d = dot(a, b);
    norm_sq(a) * norm_sq(b) - &d * &d
}

/// `weight = V_{span(n_i,n_j)⊥}(bodies)·√G_ij`, which is rational.
pub(crate) fn ridge_weight(
    normals: &[QVector],
    i: usize,
    j: usize,
    bodies: &BodyCollection,
) -> Result<(ScaledRational, Rational)> {
    let n = bodies.ambient_dim();
    let space = Subspace::span(n, &[normals[i].clone(), normals[j].clone()])?.orthogonal_complement();
    let omega = mixed_volume_in_subspace(&space, bodies)?;
    let root = ScaledRational::sqrt(gram(&normals[i], &normals[j]))?;
    let weight = omega
        .mul(&root)
        .as_rational()
        .ok_or_else(|| Error::invariant(format!("ridge weight {i}-{j} is irrational")))?;
    Ok((omega, weight))
}

struct Candidate {
    /// Facet normals of the base polytope, in the order of the polar points.
    normals: Vec<QVector>,
    vertices: Vec<GraphVertex>,
    edges: Vec<(usize, usize)>,
}

/// One attempt: perturb the polar of `base` and check that the perturbed polar
/// is simplicial and refines the normal fan of `base`.
fn attempt(base: &VPolytope, rng: &mut ChaCha8Rng, eps: &Rational, perturb: bool) -> Result<Option<Candidate>> {
    let n = base.ambient_dim();
    let facets = base.facets();
    let polar: Vec<QVector> = facets
        .iter()
        .map(|f| {
            let factor = if perturb {
                let delta = Rational::new(BigInt::from(rng.gen_range(1..=997)), BigInt::from(997));
                Rational::one() + eps * delta
            } else {
                Rational::one()
            };
            ratgeo::scale(&f.normal, &(factor / &f.offset))
        })
        .collect();
    let hull = convex_hull(&polar)?;
    if hull.num_vertices() != polar.len() || !hull.is_full_dim() {
        return Ok(None);
    }
    let index: Vec<usize> = hull
        .vertices()
        .iter()
        .map(|v| polar.iter().position(|p| p == v).expect("hull vertices are input points"))
        .collect();
    let mut vertices = Vec::new();
    let mut edges = std::collections::BTreeSet::new();
    for f in hull.facets() {
        if f.vertices.len() != n {
            return Ok(None);
        }
        let mut sigma: Vec<usize> = f.vertices.iter().map(|&v| index[v]).collect();
        sigma.sort_unstable();
        // a vertex of the base polytope on every facet in sigma
        let common = (0..base.num_vertices()).find(|&v| sigma.iter().all(|&k| facets[k].vertices.contains(&v)));
        let Some(common) = common else {
            return Ok(None);
        };
        let rows: Vec<QVector> = sigma.iter().map(|&k| polar[k].clone()).collect();
        let m = QMatrix::from_rows(&rows, n)?;
        let y = m
            .solve(&vec![Rational::one(); n])?
            .ok_or_else(|| Error::invariant("simplicial facet with dependent normals"))?;
        let point = ratgeo::add(&base.vertices()[common], &y);
        for a in 0..n {
            for b in a + 1..n {
                edges.insert((sigma[a], sigma[b]));
            }
        }
        vertices.push(GraphVertex { facets: sigma, point });
    }
    Ok(Some(Candidate {
        normals: facets.iter().map(|f| f.normal.clone()).collect(),
        vertices,
        edges: edges.into_iter().collect(),
    }))
}

/// Builds a simple background polytope `P = P_0 + ΣP_i` and its facet graph.
///
/// `P_0` is the polar of a seeded perturbation of the polar of `Q = ΣP_i`
/// (plus a unit cube when `Q` is not full-dimensional), so `P` is simple and
/// its facet normals are those of `Q`. The first attempt uses no perturbation.
/// Simplicity is audited on the result.
pub fn build_background(p: &BodyCollection, seed: u64) -> Result<FacetGraph> {
    build_background_with(p, seed, DEFAULT_RETRY_BOUND)
}

pub fn build_background_with(p: &BodyCollection, seed: u64, retry_bound: usize) -> Result<FacetGraph> {
    let n = p.ambient_dim();
    if n < 2 {
        return Err(Error::precondition("background needs ambient dimension at least 2"));
    }
    let mut q = p.sum()?;
    if !q.is_full_dim() {
        q = minkowski_sum(&q, &VPolytope::cube(n))?;
    }
    let q = q.translate(&ratgeo::neg(&q.vertex_centroid()))?;

    let mut eps = Rational::new(BigInt::from(1), BigInt::from(8));
    let mut found = None;
    for k in 0..retry_bound {
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(k as u64));
        if let Some(c) = attempt(&q, &mut rng, &eps, k > 0)? {
            found = Some((c, k + 1));
            break;
        }
        if k > 0 {
            eps /= Rational::from_integer(BigInt::from(2));
        }
    }
    let Some((cand, attempts)) = found else {
        return Err(Error::RetryExhausted {
            attempts: retry_bound,
            reason: "no perturbation gave a simple background polytope".into(),
        });
    };

    // heights from any incident vertex, then the simplicity audit
    let big_n = cand.normals.len();
    let mut heights: Vec<Option<Rational>> = vec![None; big_n];
    for v in &cand.vertices {
        for &k in &v.facets {
            heights[k].get_or_insert_with(|| dot(&cand.normals[k], &v.point));
        }
    }
    let heights: Vec<Rational> = heights
        .into_iter()
        .map(|h| h.ok_or_else(|| Error::invariant("facet without vertices")))
        .collect::<Result<_>>()?;
    for v in &cand.vertices {
        for k in 0..big_n {
            let val = dot(&cand.normals[k], &v.point);
            let on = v.facets.binary_search(&k).is_ok();
            if (on && val != heights[k]) || (!on && val >= heights[k]) {
                return Err(Error::invariant("background polytope failed the simplicity audit"));
            }
        }
    }
    let background = convex_hull(&cand.vertices.iter().map(|v| v.point.clone()).collect::<Vec<_>>())?;
    if background.num_vertices() != cand.vertices.len() || background.facets().len() != big_n {
        return Err(Error::invariant("background hull disagrees with its combinatorics"));
    }

    let normals = cand.normals;
    let edges: Vec<EdgeData> = cand
        .edges
        .par_iter()
        .map(|&(i, j)| -> Result<EdgeData> {
            let faces = p.faces(&ratgeo::add(&normals[i], &normals[j]))?;
            let (omega, weight) = ridge_weight(&normals, i, j, &faces)?;
            // the dimension criterion must agree with the sign of the weight
            let space = Subspace::span(n, &[normals[i].clone(), normals[j].clone()])?.orthogonal_complement();
            let positive = positivity_of(&faces.refs(), n);
            let active = weight.is_positive();
            if positive != active || weight.is_negative() {
                return Err(Error::invariant(format!(
                    "ridge {i}-{j}: weight {weight} disagrees with the dimension test in a {}-space",
                    space.dim()
                )));
            }
            let a = dot(&normals[i], &normals[j]) / norm_sq(&normals[i]);
            let m = ratgeo::sub(&normals[j], &ratgeo::scale(&normals[i], &a));
            Ok(EdgeData {
                i,
                j,
                gram: gram(&normals[i], &normals[j]),
                a,
                b: Rational::one(),
                m,
                omega,
                weight,
                active,
            })
        })
        .collect::<Result<_>>()?;
    let mut active_vertices: Vec<usize> = edges
        .iter()
        .filter(|e| e.active)
        .flat_map(|e| [e.i, e.j])
        .collect();
    active_vertices.sort_unstable();
    active_vertices.dedup();

    Ok(FacetGraph {
        reference: p.clone(),
        background,
        normals,
        heights,
        vertices: cand.vertices,
        edges,
        active_vertices,
        seed,
        attempts,
    })
}

/// Membership of the direction of `u` in the support of `S_{B,P}`.
///
/// Evaluated by the dimension condition on the faces `F(P_i, u)` and checked
/// against the arc description: `u` must lie in `cone(n_i, n_j)` for an active
/// edge. Disagreement is reported as an error.
pub fn support_of_sb(graph: &FacetGraph, u: &[Rational]) -> Result<bool> {
    let n = graph.ambient_dim();
    if u.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: u.len(),
        });
    }
    if ratgeo::is_zero_vec(u) {
        return Err(Error::ZeroVector);
    }
    let faces = graph.reference.faces(u)?;
    let by_dimension = positivity_of(&faces.refs(), n);
    let on_arc = graph.active_edges().any(|e| in_cone(&graph.normals[e.i], &graph.normals[e.j], u));
    if by_dimension != on_arc {
        return Err(Error::invariant(format!(
            "support tests disagree: dimension {by_dimension}, arc {on_arc}"
        )));
    }
    Ok(by_dimension)
}

/// Whether `u = a·x + b·y` with `a, b ≥ 0`.
fn in_cone(x: &[Rational], y: &[Rational], u: &[Rational]) -> bool {
    let n = u.len();
    let m = match QMatrix::from_cols(&[x.to_vec(), y.to_vec()], n) {
        Ok(m) => m,
        Err(_) => return false,
    };
    match m.solve(u) {
        Ok(Some(c)) => !c[0].is_negative() && !c[1].is_negative(),
        _ => false,
    }
}
