//! Rational polytopes in vertex representation.

mod hull;

use crate::error::{Error, Result};
use crate::ratgeo::{
    self, dot, is_zero_vec, primitive, sub, QVector, Rational, ScaledRational, Subspace,
};
use hull::IVec;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use std::sync::{Arc, OnceLock};

/// A facet of a polytope inside its affine hull.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Facet {
    /// Primitive integer outer normal, lying in the direction space of the polytope.
    pub normal: QVector,
    /// `⟨normal, x⟩` for `x` on the facet.
    pub offset: Rational,
    /// Indices into the parent's vertex list.
    pub vertices: Vec<usize>,
}

#[derive(Debug)]
struct Structure {
    direction: Subspace,
    facets: Vec<Facet>,
}

/// Convex hull of finitely many rational points, stored by its extreme points
/// in lexicographic order.
#[derive(Clone, Debug)]
pub struct VPolytope {
    ambient_dim: usize,
    vertices: Vec<QVector>,
    structure: OnceLock<Arc<Structure>>,
}

impl PartialEq for VPolytope {
    fn eq(&self, other: &Self) -> bool {
        self.ambient_dim == other.ambient_dim && self.vertices == other.vertices
    }
}

impl Eq for VPolytope {}

/// A face `F(C, u)` together with the direction that exposes it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub normal: QVector,
    pub polytope: VPolytope,
}

/// Integer chart of a point set: coordinates at the pivot columns of the
/// direction space, scaled by a common denominator.
struct Chart {
    direction: Subspace,
    points: Vec<IVec>,
    scale: BigInt,
}

fn chart_of(points: &[QVector]) -> Result<Chart> {
    let n = points[0].len();
    let base = &points[0];
    let diffs: Vec<QVector> = points[1..].iter().map(|p| sub(p, base)).collect();
    let direction = Subspace::span(n, &diffs)?;
    let pivots = direction.pivots().to_vec();
    let mut scale = BigInt::one();
    for p in points {
        for &c in &pivots {
            scale = scale.lcm(p[c].denom());
        }
    }
    let ipoints = points
        .iter()
        .map(|p| pivots.iter().map(|&c| (&p[c] * &scale).to_integer()).collect())
        .collect();
    Ok(Chart {
        direction,
        points: ipoints,
        scale,
    })
}

fn dedup_sorted(points: &[QVector]) -> Vec<QVector> {
    let mut pts = points.to_vec();
    pts.sort();
    pts.dedup();
    pts
}

impl VPolytope {
    /// `conv(points)` reduced to its extreme points.
    pub fn new(points: &[QVector]) -> Result<Self> {
        convex_hull(points)
    }

    pub fn point(p: QVector) -> Self {
        VPolytope {
            ambient_dim: p.len(),
            vertices: vec![p],
            structure: OnceLock::new(),
        }
    }

    pub fn segment(a: QVector, b: QVector) -> Result<Self> {
        convex_hull(&[a, b])
    }

    /// Axis-parallel box `Π [lo_i, hi_i]`.
    pub fn boxed(lo: &[Rational], hi: &[Rational]) -> Result<Self> {
        if lo.len() != hi.len() {
            return Err(Error::DimensionMismatch {
                expected: lo.len(),
                found: hi.len(),
            });
        }
        let n = lo.len();
        let mut pts = Vec::with_capacity(1 << n);
        for mask in 0u32..(1 << n) {
            pts.push(
                (0..n)
                    .map(|i| if mask >> i & 1 == 1 { hi[i].clone() } else { lo[i].clone() })
                    .collect(),
            );
        }
        convex_hull(&pts)
    }

    /// `[0,1]^n`.
    pub fn cube(n: usize) -> Self {
        Self::boxed(&ratgeo::zero_vec(n), &vec![Rational::one(); n]).expect("matching lengths")
    }

    /// `conv{0, e_1, …, e_n}`.
    pub fn standard_simplex(n: usize) -> Self {
        let mut pts = vec![ratgeo::zero_vec(n)];
        pts.extend((0..n).map(|i| ratgeo::unit_vec(n, i)));
        convex_hull(&pts).expect("nonempty")
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn vertices(&self) -> &[QVector] {
        &self.vertices
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    fn structure(&self) -> &Structure {
        self.structure.get_or_init(|| {
            let (direction, facets) = compute_structure(&self.vertices);
            Arc::new(Structure { direction, facets })
        })
    }

    /// Linear subspace parallel to the affine hull.
    pub fn direction(&self) -> &Subspace {
        &self.structure().direction
    }

    pub fn dim(&self) -> usize {
        if self.vertices.len() == 1 {
            return 0;
        }
        self.direction().dim()
    }

    pub fn is_full_dim(&self) -> bool {
        self.dim() == self.ambient_dim
    }

    /// Facets inside the affine hull.
    pub fn facets(&self) -> &[Facet] {
        &self.structure().facets
    }

    /// One primitive integer outer normal per facet, inside the direction space.
    pub fn facet_normals(&self) -> Result<Vec<QVector>> {
        if self.dim() == 0 {
            return Err(Error::precondition("a point has no facets"));
        }
        Ok(self.facets().iter().map(|f| f.normal.clone()).collect())
    }

    pub fn support_value(&self, u: &[Rational]) -> Result<Rational> {
        self.check_dim(u)?;
        Ok(self
            .vertices
            .iter()
            .map(|v| dot(v, u))
            .max()
            .expect("at least one vertex"))
    }

    /// `F(C, u)`, the vertices attaining the support value.
    pub fn face(&self, u: &[Rational]) -> Result<Face> {
        self.check_dim(u)?;
        if is_zero_vec(u) {
            return Err(Error::ZeroVector);
        }
        Ok(Face {
            normal: u.to_vec(),
            polytope: self.face_polytope(u),
        })
    }

    pub(crate) fn face_polytope(&self, u: &[Rational]) -> VPolytope {
        let values: Vec<Rational> = self.vertices.iter().map(|v| dot(v, u)).collect();
        let best = values.iter().max().expect("at least one vertex").clone();
        let vertices: Vec<QVector> = self
            .vertices
            .iter()
            .zip(&values)
            .filter(|(_, val)| **val == best)
            .map(|(v, _)| v.clone())
            .collect();
        if vertices.len() == self.vertices.len() {
            return self.clone();
        }
        // a subset of extreme points stays extreme and sorted
        VPolytope {
            ambient_dim: self.ambient_dim,
            vertices,
            structure: OnceLock::new(),
        }
    }

    pub fn translate(&self, v: &[Rational]) -> Result<Self> {
        self.check_dim(v)?;
        Ok(VPolytope {
            ambient_dim: self.ambient_dim,
            vertices: self.vertices.iter().map(|p| ratgeo::add(p, v)).collect(),
            structure: OnceLock::new(),
        })
    }

    /// `λ·C`; `λ = 0` gives the origin.
    pub fn scale(&self, lambda: &Rational) -> Self {
        if lambda.is_zero() {
            return Self::point(ratgeo::zero_vec(self.ambient_dim));
        }
        let mut vertices: Vec<QVector> = self.vertices.iter().map(|p| ratgeo::scale(p, lambda)).collect();
        if *lambda < Rational::zero() {
            vertices.sort();
        }
        VPolytope {
            ambient_dim: self.ambient_dim,
            vertices,
            structure: OnceLock::new(),
        }
    }

    /// Image under the linear map `x ↦ f(x)`.
    pub fn map(&self, f: impl Fn(&QVector) -> Result<QVector>) -> Result<Self> {
        let pts = self.vertices.iter().map(f).collect::<Result<Vec<_>>>()?;
        convex_hull(&pts)
    }

    /// Orthogonal projection onto `E`.
    pub fn project(&self, e: &Subspace) -> Result<Self> {
        self.map(|x| e.project(x))
    }

    /// Average of the vertices; lies in the relative interior.
    pub fn vertex_centroid(&self) -> QVector {
        let k = Rational::from_integer(BigInt::from(self.vertices.len()));
        let mut c = ratgeo::zero_vec(self.ambient_dim);
        for v in &self.vertices {
            c = ratgeo::add(&c, v);
        }
        ratgeo::scale(&c, &k.recip())
    }

    /// Lebesgue volume in the ambient space; zero unless full-dimensional.
    pub fn volume(&self) -> Rational {
        if !self.is_full_dim() || self.ambient_dim == 0 {
            return if self.ambient_dim == 0 { Rational::one() } else { Rational::zero() };
        }
        self.chart_volume()
    }

    /// Volume inside the affine hull, measured with the Euclidean metric.
    /// A point has intrinsic volume 1.
    pub fn intrinsic_volume(&self) -> ScaledRational {
        if self.dim() == 0 {
            return ScaledRational::one();
        }
        ScaledRational::rational(self.chart_volume()).mul(&self.direction().gram_sqrt())
    }

    /// Volume as specified for the `volume` operation: the Lebesgue volume when
    /// full-dimensional, the intrinsic volume otherwise.
    pub fn volume_exact(&self) -> ScaledRational {
        if self.is_full_dim() {
            ScaledRational::rational(self.volume())
        } else {
            self.intrinsic_volume()
        }
    }

    /// Volume in the pivot chart of the direction space (no metric correction).
    pub(crate) fn chart_volume(&self) -> Rational {
        if self.dim() == 0 {
            return Rational::one();
        }
        let chart = chart_of(&self.vertices).expect("vertices share a dimension");
        let k = chart.direction.dim();
        let vol = hull::volume(&chart.points);
        vol / Rational::from_integer(num_traits::pow(chart.scale, k))
    }

    fn check_dim(&self, u: &[Rational]) -> Result<()> {
        if u.len() != self.ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                found: u.len(),
            });
        }
        Ok(())
    }
}

fn compute_structure(vertices: &[QVector]) -> (Subspace, Vec<Facet>) {
    let n = vertices[0].len();
    if vertices.len() == 1 {
        return (Subspace::zero(n), Vec::new());
    }
    let chart = chart_of(vertices).expect("vertices share a dimension");
    let h = hull::full_dim_hull(&chart.points);
    let facets = facets_from(&chart, &h, vertices);
    (chart.direction, facets)
}

fn facets_from(chart: &Chart, h: &hull::IntHull, points: &[QVector]) -> Vec<Facet> {
    let n = points[0].len();
    let pivots = chart.direction.pivots();
    let full = chart.direction.is_full();
    let mut facets: Vec<Facet> = h
        .facets
        .iter()
        .map(|f| {
            let mut embedded = ratgeo::zero_vec(n);
            for (&c, a) in pivots.iter().zip(&f.normal) {
                embedded[c] = Rational::from_integer(a.clone());
            }
            let normal = if full {
                embedded
            } else {
                primitive(&chart.direction.project(&embedded).expect("ambient dimension"))
            };
            let offset = dot(&normal, &points[f.incident[0]]);
            Facet {
                normal,
                offset,
                vertices: f.incident.clone(),
            }
        })
        .collect();
    facets.sort_by(|a, b| a.normal.cmp(&b.normal));
    facets
}

/// Extreme points of `conv(points)` in canonical order.
pub fn convex_hull(points: &[QVector]) -> Result<VPolytope> {
    let Some(first) = points.first() else {
        return Err(Error::EmptyInput);
    };
    let n = first.len();
    for p in points {
        if p.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: p.len(),
            });
        }
    }
    let pts = dedup_sorted(points);
    if pts.len() == 1 {
        return Ok(VPolytope::point(pts.into_iter().next().expect("one point")));
    }
    let chart = chart_of(&pts)?;
    let h = hull::full_dim_hull(&chart.points);
    // vertices are a sorted subsequence of the sorted input
    let keep = h.vertices.clone();
    let mut remap = vec![usize::MAX; pts.len()];
    for (new, &old) in keep.iter().enumerate() {
        remap[old] = new;
    }
    let vertices: Vec<QVector> = keep.iter().map(|&i| pts[i].clone()).collect();
    let mut facets = facets_from(&chart, &h, &pts);
    for f in facets.iter_mut() {
        f.vertices = f
            .vertices
            .iter()
            .filter(|&&i| remap[i] != usize::MAX)
            .map(|&i| remap[i])
            .collect();
    }
    let structure = OnceLock::new();
    let _ = structure.set(Arc::new(Structure {
        direction: chart.direction,
        facets,
    }));
    Ok(VPolytope {
        ambient_dim: n,
        vertices,
        structure,
    })
}

pub fn minkowski_sum(a: &VPolytope, b: &VPolytope) -> Result<VPolytope> {
    if a.ambient_dim != b.ambient_dim {
        return Err(Error::DimensionMismatch {
            expected: a.ambient_dim,
            found: b.ambient_dim,
        });
    }
    if a.vertices.len() == 1 {
        return b.translate(&a.vertices[0]);
    }
    if b.vertices.len() == 1 {
        return a.translate(&b.vertices[0]);
    }
    let mut pts = Vec::with_capacity(a.vertices.len() * b.vertices.len());
    for x in &a.vertices {
        for y in &b.vertices {
            pts.push(ratgeo::add(x, y));
        }
    }
    convex_hull(&pts)
}

/// `Σ C_i`; the origin for an empty list.
pub fn minkowski_sum_all(bodies: &[&VPolytope], ambient_dim: usize) -> Result<VPolytope> {
    let mut acc = VPolytope::point(ratgeo::zero_vec(ambient_dim));
    for b in bodies {
        acc = minkowski_sum(&acc, b)?;
    }
    Ok(acc)
}

pub fn support_value(c: &VPolytope, u: &[Rational]) -> Result<Rational> {
    c.support_value(u)
}

pub fn face(c: &VPolytope, u: &[Rational]) -> Result<Face> {
    c.face(u)
}

pub fn facet_normals(c: &VPolytope) -> Result<Vec<QVector>> {
    c.facet_normals()
}

pub fn volume(c: &VPolytope) -> ScaledRational {
    c.volume_exact()
}

pub fn dim(c: &VPolytope) -> usize {
    c.dim()
}

/// Dimension of `Σ C_i`, computed from direction spaces without forming the sum.
pub fn dim_of_sum(bodies: &[&VPolytope], ambient_dim: usize) -> usize {
    let mut gens = Vec::new();
    for b in bodies {
        if b.num_vertices() > 1 {
            gens.extend(b.direction().basis().iter().cloned());
        }
    }
    if gens.is_empty() {
        return 0;
    }
    Subspace::span(ambient_dim, &gens).map(|s| s.dim()).unwrap_or(0)
}

/// Direction space of `Σ C_i`.
pub fn direction_of_sum(bodies: &[&VPolytope], ambient_dim: usize) -> Subspace {
    let mut gens = Vec::new();
    for b in bodies {
        if b.num_vertices() > 1 {
            gens.extend(b.direction().basis().iter().cloned());
        }
    }
    Subspace::span(ambient_dim, &gens).expect("direction vectors share the ambient dimension")
}

#[cfg(test)]
mod tests;
