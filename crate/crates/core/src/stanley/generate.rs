use super::Poset;
use crate::error::{Error, Result};
use rand::Rng;
use std::collections::BTreeSet;

/// Transitively closed relations on `0..n` in which `a < b` implies `a < b` as
/// integers, as lists of `below` masks. Each is obtained by adding element `k`
/// above an order ideal of `0..k`.
pub fn natural_posets(n: usize) -> Vec<Vec<u64>> {
    let mut out = vec![Vec::new()];
    for k in 0..n {
        let mut next = Vec::new();
        for below in &out {
            for ideal in ideals(below, k) {
                let mut b = below.clone();
                b.push(ideal);
                next.push(b);
            }
        }
        out = next;
    }
    out
}

fn ideals(below: &[u64], k: usize) -> Vec<u64> {
    (0u64..1 << k)
        .filter(|&s| (0..k).all(|a| s >> a & 1 == 0 || below[a] & !s == 0))
        .collect()
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.is_empty() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for (i, &first) in items.iter().enumerate() {
        let mut rest = items.to_vec();
        rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, first);
            out.push(tail);
        }
    }
    out
}

/// Smallest relation encoding over relabelings that send `x` to position 0.
/// Two posets have equal forms iff they are isomorphic by a map fixing `x`.
pub fn canonical_form(p: &Poset) -> Result<u64> {
    let n = p.len();
    if n > 8 {
        return Err(Error::precondition("canonical forms are computed for at most 8 elements"));
    }
    let others = p.others();
    let mut best = u64::MAX;
    for perm in permutations(&others) {
        let mut order = vec![p.x()];
        order.extend(perm);
        let mut code = 0u64;
        for (i, &a) in order.iter().enumerate() {
            for (j, &b) in order.iter().enumerate() {
                if p.less(a, b) {
                    code |= 1 << (i * n + j);
                }
            }
        }
        best = best.min(code);
    }
    Ok(best)
}

/// All posets on `n` elements with a distinguished element, one per
/// isomorphism class fixing the distinguished element.
pub fn pointed_posets(n: usize) -> Result<Vec<Poset>> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for below in natural_posets(n) {
        let mut rel = Vec::new();
        for (b, mask) in below.iter().enumerate() {
            rel.extend((0..n).filter(|&a| mask >> a & 1 == 1).map(|a| (a, b)));
        }
        for x in 0..n {
            let p = Poset::from_relations(n, x, &rel)?;
            if seen.insert(canonical_form(&p)?) {
                out.push(p);
            }
        }
    }
    Ok(out)
}

/// A random poset on `n` elements: each pair `a < b` of labels is related
/// with a probability drawn once per poset, then closed transitively.
pub fn random_poset<R: Rng>(rng: &mut R, n: usize) -> Result<Poset> {
    let density = rng.gen_range(0.1..0.6);
    let mut rel = Vec::new();
    for b in 0..n {
        for a in 0..b {
            if rng.gen_bool(density) {
                rel.push((a, b));
            }
        }
    }
    let x = rng.gen_range(0..n);
    Poset::from_relations(n, x, &rel)
}

/// Poset whose rank sequence has `k` leading zeros, `s` strictly log-concave
/// ranks, `t` ranks of equality, `r` strictly log-concave ranks and `l`
/// trailing zeros (all parameters at least 1).
///
/// Chains `y_1<…<y_k<x<z_1<…<z_l`, `y_k<w_1<…<w_{t+1}<z_1`, `y_k<u_1<…<u_{r−1}`
/// and `v_1<…<v_{s−1}<z_1`.
pub fn shape_family(k: usize, l: usize, r: usize, s: usize, t: usize) -> Result<Poset> {
    if [k, l, r, s, t].contains(&0) {
        return Err(Error::precondition("all five lengths must be positive"));
    }
    let mut labels = vec!["x".to_string()];
    let mut push = |prefix: &str, count: usize| -> Vec<usize> {
        (1..=count)
            .map(|i| {
                labels.push(format!("{prefix}{i}"));
                labels.len() - 1
            })
            .collect()
    };
    let y = push("y", k);
    let z = push("z", l);
    let u = push("u", r - 1);
    let v = push("v", s - 1);
    let w = push("w", t + 1);
    let chain = |c: &[usize]| c.windows(2).map(|p| (p[0], p[1])).collect::<Vec<_>>();
    let (yk, z1) = (y[k - 1], z[0]);
    let mut rel = chain(&y);
    rel.extend(chain(&z));
    rel.extend([(yk, 0), (0, z1), (yk, w[0]), (w[t], z1)]);
    rel.extend(chain(&w));
    if let Some(&u1) = u.first() {
        rel.push((yk, u1));
        rel.extend(chain(&u));
    }
    if let Some(&vl) = v.last() {
        rel.push((vl, z1));
        rel.extend(chain(&v));
    }
    Poset::new(labels, 0, &rel)
}
