use super::count::rank_sequence;
use super::Poset;
use crate::error::{Error, Result};
use crate::polytope::{convex_hull, minkowski_sum, VPolytope};
use crate::ratgeo::{binomial, factorial, int, unit_vec, QMatrix, QVector, Rational};
use num_traits::{One, Zero};

/// `O_β` for a subset `β` of the elements other than `x`.
#[derive(Clone, Debug)]
pub struct OrderPolytope {
    /// Element indices of `β`.
    pub beta: Vec<usize>,
    /// `O_β ⊂ R^β ⊂ R^{n−1}`.
    pub polytope: VPolytope,
}

/// Coordinates of `R^{n−1}` are the elements other than `x`, in index order.
fn coordinate(p: &Poset, a: usize) -> usize {
    if a < p.x() {
        a
    } else {
        a - 1
    }
}

/// Upper sets of the order induced on `beta`, as element masks.
fn upper_sets(p: &Poset, beta: &[usize]) -> Result<Vec<u64>> {
    if beta.len() > 24 {
        return Err(Error::precondition("order polytopes are built for at most 24 coordinates"));
    }
    let mut out = Vec::new();
    for bits in 0u64..1 << beta.len() {
        let set = (0..beta.len()).filter(|&k| bits >> k & 1 == 1).fold(0u64, |m, k| m | 1 << beta[k]);
        let closed = beta
            .iter()
            .all(|&a| set >> a & 1 == 0 || beta.iter().all(|&b| !p.less(a, b) || set >> b & 1 == 1));
        if closed {
            out.push(set);
        }
    }
    Ok(out)
}

fn indicator(p: &Poset, set: u64) -> QVector {
    let mut v = vec![Rational::zero(); p.len() - 1];
    for a in p.others() {
        if set >> a & 1 == 1 {
            v[coordinate(p, a)] = Rational::one();
        }
    }
    v
}

/// `O_β`, with vertices the indicator vectors of the upper sets of `β`.
pub fn order_polytope(p: &Poset, beta: &[usize]) -> Result<OrderPolytope> {
    if p.len() < 2 {
        return Err(Error::precondition("order polytopes need at least two elements"));
    }
    if beta.iter().any(|&a| a == p.x() || a >= p.len()) {
        return Err(Error::precondition("β must consist of elements other than x"));
    }
    let mut beta = beta.to_vec();
    beta.sort_unstable();
    beta.dedup();
    let points: Vec<QVector> = upper_sets(p, &beta)?.into_iter().map(|s| indicator(p, s)).collect();
    Ok(OrderPolytope {
        beta,
        polytope: convex_hull(&points)?,
    })
}

/// `K = O_{ᾱ∖α_{>x}} + 1_{α_{>x}}` and `L = O_{ᾱ∖α_{<x}}` in `R^{n−1}`.
pub fn order_polytopes_kl(p: &Poset) -> Result<(VPolytope, VPolytope)> {
    let x = p.x();
    let others = p.others();
    let not_above: Vec<usize> = others.iter().copied().filter(|&a| !p.less(x, a)).collect();
    let not_below: Vec<usize> = others.iter().copied().filter(|&a| !p.less(a, x)).collect();
    let k = order_polytope(p, &not_above)?.polytope.translate(&indicator(p, p.above_mask(x)))?;
    let l = order_polytope(p, &not_below)?.polytope;
    Ok((k, l))
}

/// Compares the facets of `O_β`, computed inside `R^β`, with the list
/// `−e_j` (minimal), `e_j` (maximal), `e_j − e_k` (`y_k` covers `y_j` in `β`).
pub fn order_polytope_facet_audit(p: &Poset, beta: &[usize]) -> Result<bool> {
    let o = order_polytope(p, beta)?;
    let m = o.beta.len();
    if m == 0 {
        return Ok(o.polytope.num_vertices() == 1);
    }
    let local = |v: &QVector| -> QVector { o.beta.iter().map(|&a| v[coordinate(p, a)].clone()).collect() };
    let pts: Vec<QVector> = o.polytope.vertices().iter().map(local).collect();
    let hull = convex_hull(&pts)?;
    if hull.dim() != m {
        return Ok(false);
    }
    let mut found = hull.facet_normals()?;
    found.sort();

    let in_beta = |a: usize| o.beta.contains(&a);
    let mut expected = Vec::new();
    for (j, &a) in o.beta.iter().enumerate() {
        if o.beta.iter().all(|&b| !p.less(b, a)) {
            expected.push(crate::ratgeo::neg(&unit_vec(m, j)));
        }
        if o.beta.iter().all(|&b| !p.less(a, b)) {
            expected.push(unit_vec(m, j));
        }
        for (k, &b) in o.beta.iter().enumerate() {
            let covers = p.less(a, b) && !(0..p.len()).any(|c| in_beta(c) && p.less(a, c) && p.less(c, b));
            if covers {
                let mut v = unit_vec(m, j);
                v[k] = int(-1);
                expected.push(v);
            }
        }
    }
    expected.sort();
    Ok(found == expected)
}

/// `V_{n−1}(K[i−1], L[n−i])` for `i = 1..=n`, read off from the polynomial
/// `λ ↦ Vol(λK + L)` sampled at `λ = 0..=n−1`.
pub fn stanley_mixed_volumes(p: &Poset) -> Result<Vec<Rational>> {
    let n = p.len();
    if n < 2 {
        return Err(Error::precondition("the representation needs at least two elements"));
    }
    let m = n - 1;
    let (k, l) = order_polytopes_kl(p)?;
    let mut rows = Vec::with_capacity(m + 1);
    let mut vols = Vec::with_capacity(m + 1);
    for lambda in 0..=m {
        let s = int(lambda as i64);
        let body = if lambda == 0 { l.clone() } else { minkowski_sum(&k.scale(&s), &l)? };
        vols.push(body.volume());
        rows.push((0..=m).map(|e| num_traits::pow(s.clone(), e)).collect::<QVector>());
    }
    let coeffs = QMatrix::from_rows(&rows, m + 1)?
        .solve(&vols)?
        .ok_or_else(|| Error::invariant("Vandermonde system is singular"))?;
    // coefficient of λ^j is C(m, j)·V(K[j], L[m−j])
    Ok((0..=m)
        .map(|j| &coeffs[j] / Rational::from_integer(binomial(m, j)))
        .collect())
}

/// Checks `N_i = (n−1)!·V_{n−1}(K[i−1], L[n−i])` for every `i`.
pub fn stanley_representation_check(p: &Poset) -> Result<bool> {
    let mv = stanley_mixed_volumes(p)?;
    let counts = rank_sequence(p);
    let f = Rational::from_integer(factorial(p.len() - 1));
    Ok(mv
        .iter()
        .enumerate()
        .all(|(j, v)| &f * v == Rational::from_integer(counts.get(j + 1).into())))
}
