//! Facet enumeration and volume for full-dimensional integer point sets.
//!
//! Facets are the extreme rays of the cone `{(b, a) : a·x_p ≤ b for all p}`,
//! enumerated with the double description method. Adjacency of rays is decided
//! combinatorially from their sets of tight constraints, which stays exact
//! under any amount of degeneracy (many points per facet, coplanar interior
//! points, and so on).

use crate::ratgeo::Rational;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub(crate) type IVec = Vec<BigInt>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Bits(Vec<u64>);

impl Bits {
    pub fn new(n: usize) -> Self {
        Bits(vec![0; n.div_ceil(64)])
    }

    pub fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    pub fn get(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn and(&self, other: &Bits) -> Bits {
        Bits(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }

    pub fn and_assign(&mut self, other: &Bits) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a &= b;
        }
    }

    pub fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_subset(&self, other: &Bits) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & !b == 0)
    }

    pub fn ones(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for (w, &word) in self.0.iter().enumerate() {
            let mut x = word;
            while x != 0 {
                let b = x.trailing_zeros() as usize;
                out.push(w * 64 + b);
                x &= x - 1;
            }
        }
        out
    }
}

#[derive(Clone, Debug)]
pub(crate) struct IntFacet {
    /// Primitive outer normal `a`.
    pub normal: IVec,
    /// `a·x` on the facet.
    pub offset: BigInt,
    /// Indices of the input points lying on the facet.
    pub incident: Vec<usize>,
}

#[derive(Clone, Debug)]
pub(crate) struct IntHull {
    pub facets: Vec<IntFacet>,
    /// Indices of the input points that are vertices, ascending.
    pub vertices: Vec<usize>,
}

fn idot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    let mut acc = BigInt::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc += x * y;
        }
    }
    acc
}

fn make_primitive(v: &mut [BigInt]) {
    let mut g = BigInt::zero();
    for x in v.iter() {
        g = g.gcd(x);
        if g.is_one() {
            return;
        }
    }
    if g.is_zero() || g.is_one() {
        return;
    }
    for x in v.iter_mut() {
        *x /= &g;
    }
}

/// Indices of `k+1` affinely independent points, or fewer when the set is
/// lower-dimensional. Greedy in input order.
pub(crate) fn affine_basis(points: &[IVec]) -> Vec<usize> {
    let Some(first) = points.first() else {
        return Vec::new();
    };
    let k = first.len();
    let mut chosen = vec![0];
    // echelon rows over the rationals: (pivot column, row)
    let mut rows: Vec<(usize, Vec<Rational>)> = Vec::new();
    for (idx, p) in points.iter().enumerate().skip(1) {
        if rows.len() == k {
            break;
        }
        let mut v: Vec<Rational> = p
            .iter()
            .zip(first)
            .map(|(a, b)| Rational::from_integer(a - b))
            .collect();
        for (c, r) in &rows {
            if !v[*c].is_zero() {
                let f = v[*c].clone();
                for (vi, ri) in v.iter_mut().zip(r) {
                    *vi -= &f * ri;
                }
            }
        }
        if let Some(c) = v.iter().position(|x| !x.is_zero()) {
            let inv = v[c].recip();
            for x in v.iter_mut() {
                *x *= &inv;
            }
            rows.push((c, v));
            chosen.push(idx);
        }
    }
    chosen
}

/// Facets and vertices of `conv(points)`; the points must be pairwise distinct
/// and affinely span `Z^k` with `k ≥ 1`.
pub(crate) fn full_dim_hull(points: &[IVec]) -> IntHull {
    let m = points.len();
    let k = points[0].len();
    let init = affine_basis(points);
    assert_eq!(init.len(), k + 1, "point set is not full-dimensional");

    // constraint p: (1, -x_p)·(b, a) = b - a·x_p ≥ 0
    let constraint = |p: usize| -> IVec {
        let mut c = Vec::with_capacity(k + 1);
        c.push(BigInt::one());
        c.extend(points[p].iter().map(|x| -x));
        c
    };

    // initial simplicial cone: rays are the columns of the inverse constraint matrix
    let mut cmat = crate::ratgeo::QMatrix::zeros(k + 1, k + 1);
    for (i, &p) in init.iter().enumerate() {
        for (j, x) in constraint(p).into_iter().enumerate() {
            cmat.set(i, j, Rational::from_integer(x));
        }
    }
    let inv = cmat
        .inverse()
        .expect("square")
        .expect("affinely independent points give an invertible system");
    let mut rays: Vec<IVec> = Vec::with_capacity(k + 1);
    let mut zeros: Vec<Bits> = Vec::with_capacity(k + 1);
    for j in 0..=k {
        let col = inv.col(j);
        let mut lcm = BigInt::one();
        for x in &col {
            lcm = lcm.lcm(x.denom());
        }
        let mut ray: IVec = col.iter().map(|x| (x * &lcm).to_integer()).collect();
        make_primitive(&mut ray);
        rays.push(ray);
        let mut z = Bits::new(m);
        for (i, &p) in init.iter().enumerate() {
            if i != j {
                z.set(p);
            }
        }
        zeros.push(z);
    }

    // remaining points, farthest from the initial simplex centroid first
    let mut in_init = vec![false; m];
    for &p in &init {
        in_init[p] = true;
    }
    let mut centroid = vec![BigInt::zero(); k];
    for &p in &init {
        for (c, x) in centroid.iter_mut().zip(&points[p]) {
            *c += x;
        }
    }
    let scale = BigInt::from(k + 1);
    let mut order: Vec<(BigInt, usize)> = (0..m)
        .filter(|&p| !in_init[p])
        .map(|p| {
            let d: BigInt = points[p]
                .iter()
                .zip(&centroid)
                .map(|(x, c)| {
                    let t = x * &scale - c;
                    &t * &t
                })
                .sum();
            (d, p)
        })
        .collect();
    order.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));

    for (_, p) in order {
        let c = constraint(p);
        let values: Vec<BigInt> = rays.iter().map(|r| idot(&c, r)).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&i| values[i].is_negative()).collect();
        if neg.is_empty() {
            for (i, v) in values.iter().enumerate() {
                if v.is_zero() {
                    zeros[i].set(p);
                }
            }
            continue;
        }
        let pos: Vec<usize> = (0..rays.len()).filter(|&i| values[i].is_positive()).collect();
        let mut new_rays = Vec::new();
        let mut new_zeros = Vec::new();
        for &r in &pos {
            for &s in &neg {
                let common = zeros[r].and(&zeros[s]);
                if common.count() + 1 < k {
                    continue;
                }
                let adjacent = (0..rays.len())
                    .all(|t| t == r || t == s || !common.is_subset(&zeros[t]));
                if !adjacent {
                    continue;
                }
                let vr = &values[r];
                let vs = -&values[s];
                let mut ray: IVec = rays[s]
                    .iter()
                    .zip(&rays[r])
                    .map(|(a, b)| vr * a + &vs * b)
                    .collect();
                make_primitive(&mut ray);
                let mut z = common;
                z.set(p);
                new_rays.push(ray);
                new_zeros.push(z);
            }
        }
        let mut kept_rays = Vec::with_capacity(rays.len() + new_rays.len());
        let mut kept_zeros = Vec::with_capacity(rays.len() + new_rays.len());
        for (i, (ray, mut z)) in rays.into_iter().zip(zeros).enumerate() {
            if values[i].is_negative() {
                continue;
            }
            if values[i].is_zero() {
                z.set(p);
            }
            kept_rays.push(ray);
            kept_zeros.push(z);
        }
        kept_rays.extend(new_rays);
        kept_zeros.extend(new_zeros);
        rays = kept_rays;
        zeros = kept_zeros;
    }

    let mut facets: Vec<IntFacet> = rays
        .into_iter()
        .zip(&zeros)
        .map(|(ray, z)| {
            let mut normal: IVec = ray[1..].to_vec();
            make_primitive(&mut normal);
            let incident = z.ones();
            let offset = idot(&normal, &points[incident[0]]);
            IntFacet {
                normal,
                offset,
                incident,
            }
        })
        .collect();
    facets.sort_by(|a, b| a.normal.cmp(&b.normal));

    // a point is a vertex iff the facets through it meet in that point alone
    let mut vertices = Vec::new();
    let all = {
        let mut b = Bits::new(m);
        for i in 0..m {
            b.set(i);
        }
        b
    };
    let mut through: Vec<Bits> = vec![all; m];
    for z in &zeros {
        for p in z.ones() {
            through[p].and_assign(z);
        }
    }
    for (p, t) in through.iter().enumerate() {
        if t.count() == 1 && t.get(p) {
            vertices.push(p);
        }
    }
    IntHull { facets, vertices }
}

/// Volume of `conv(points)` for a full-dimensional set of distinct integer points.
pub(crate) fn volume(points: &[IVec]) -> Rational {
    let k = points[0].len();
    if k == 1 {
        let lo = points.iter().map(|p| &p[0]).min().expect("nonempty");
        let hi = points.iter().map(|p| &p[0]).max().expect("nonempty");
        return Rational::from_integer(hi - lo);
    }
    let hull = full_dim_hull(points);
    let is_vertex = {
        let mut b = Bits::new(points.len());
        for &v in &hull.vertices {
            b.set(v);
        }
        b
    };
    // cone over the boundary from a vertex
    let apex = &points[hull.vertices[0]];
    let mut total = Rational::zero();
    for f in &hull.facets {
        let height = &f.offset - idot(&f.normal, apex);
        if height.is_zero() {
            continue;
        }
        let j = f
            .normal
            .iter()
            .position(|x| !x.is_zero())
            .expect("facet normal is nonzero");
        let projected: Vec<IVec> = f
            .incident
            .iter()
            .filter(|&&p| is_vertex.get(p))
            .map(|&p| {
                let mut q = points[p].clone();
                q.remove(j);
                q
            })
            .collect();
        let base = volume(&projected);
        total += base * Rational::new(height, f.normal[j].abs());
    }
    total / Rational::from_integer(BigInt::from(k))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts(raw: &[&[i64]]) -> Vec<IVec> {
        raw.iter()
            .map(|p| p.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    #[test]
    fn square_with_interior_and_edge_points() {
        let p = pts(&[&[0, 0], &[2, 0], &[0, 2], &[2, 2], &[1, 1], &[1, 0]]);
        let h = full_dim_hull(&p);
        assert_eq!(h.vertices, vec![0, 1, 2, 3]);
        assert_eq!(h.facets.len(), 4);
        let bottom = h.facets.iter().find(|f| f.normal == vec![BigInt::from(0), BigInt::from(-1)]).unwrap();
        assert_eq!(bottom.incident, vec![0, 1, 5]);
        assert_eq!(volume(&p), Rational::from_integer(BigInt::from(4)));
    }

    #[test]
    fn cube_volume_and_facets() {
        let mut raw = Vec::new();
        for m in 0..8i64 {
            raw.push(vec![m & 1, (m >> 1) & 1, (m >> 2) & 1]);
        }
        let refs: Vec<&[i64]> = raw.iter().map(|v| v.as_slice()).collect();
        let p = pts(&refs);
        let h = full_dim_hull(&p);
        assert_eq!(h.facets.len(), 6);
        assert!(h.facets.iter().all(|f| f.incident.len() == 4));
        assert_eq!(volume(&p), Rational::one());
    }

    #[test]
    fn simplex_volume() {
        let p = pts(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(volume(&p), Rational::new(BigInt::from(1), BigInt::from(6)));
    }
}
