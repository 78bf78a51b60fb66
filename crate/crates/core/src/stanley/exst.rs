use super::count::{for_each_extension_with_rank, rank_sequence, RankSequence};
use super::Poset;
use crate::error::{Error, Result};

/// `N_i = 0` predicted by counting: `|α_{<x}| > i−1` or `|α_{>x}| > n−i`.
pub fn trivial_extremal_test(p: &Poset, i: usize) -> Result<bool> {
    let n = p.len();
    if i == 0 || i > n {
        return Err(Error::precondition(format!("rank {i} outside 1..={n}")));
    }
    Ok(p.count_below(p.x()) > i - 1 || p.count_above(p.x()) > n - i)
}

/// `|α_{<y}| > i` for every `y > x`, and `|α_{>y}| > n−i+1` for every `y < x`.
pub fn extremal_condition_d(p: &Poset, i: usize) -> Result<bool> {
    let n = p.len();
    if i < 2 || i + 1 > n {
        return Err(Error::precondition(format!("rank {i} outside 2..={}", n.saturating_sub(1))));
    }
    if rank_sequence(p).get(i) == 0 {
        return Err(Error::precondition(format!("N_{i} = 0")));
    }
    Ok(condition_d_unchecked(p, i))
}

fn condition_d_unchecked(p: &Poset, i: usize) -> bool {
    let n = p.len();
    let x = p.x();
    (0..n).all(|y| {
        if p.less(x, y) {
            p.count_below(y) > i
        } else if p.less(y, x) {
            p.count_above(y) > n - i + 1
        } else {
            true
        }
    })
}

/// Every extension with `σ(x) = i` puts elements incomparable to `x` at ranks
/// `i−1` and `i+1`. Checked by enumeration; vacuous when `N_i = 0`.
pub fn condition_c(p: &Poset, i: usize) -> bool {
    let x = p.x();
    let mut ok = true;
    for_each_extension_with_rank(p, i, |order| {
        let r = i - 1;
        ok = [r.checked_sub(1), Some(r + 1)]
            .into_iter()
            .flatten()
            .filter_map(|k| order.get(k))
            .all(|&y| !p.comparable(x, y));
        ok
    });
    ok
}

/// The four conditions at one rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExstRow {
    pub i: usize,
    /// `N_i² = N_{i+1}N_{i−1}`
    pub a: bool,
    /// `N_i = N_{i+1} = N_{i−1}`
    pub b: bool,
    pub c: bool,
    pub d: bool,
}

impl ExstRow {
    pub fn agrees(&self) -> bool {
        self.a == self.b && self.b == self.c && self.c == self.d
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExstReport {
    pub counts: RankSequence,
    pub log_concave: bool,
    /// Ranks where `N_i = 0` and the counting test disagree.
    pub trivial_mismatches: Vec<usize>,
    /// One row per `2 ≤ i ≤ n−1` with `N_i > 0`.
    pub rows: Vec<ExstRow>,
    pub shape_ok: bool,
}

impl ExstReport {
    /// Ranks where the four conditions are not all equal.
    pub fn disagreements(&self) -> Vec<usize> {
        self.rows.iter().filter(|r| !r.agrees()).map(|r| r.i).collect()
    }

    pub fn passes(&self) -> bool {
        self.log_concave && self.trivial_mismatches.is_empty() && self.shape_ok && self.disagreements().is_empty()
    }

    pub fn equality_indices(&self) -> Vec<usize> {
        self.rows.iter().filter(|r| r.a).map(|r| r.i).collect()
    }

    /// Ranks where condition d holds.
    pub fn condition_d_indices(&self) -> Vec<usize> {
        self.rows.iter().filter(|r| r.d).map(|r| r.i).collect()
    }
}

/// Evaluates the counting test at every rank and the four equality conditions
/// at every nontrivial interior rank.
pub fn exst_equivalence_audit(p: &Poset) -> ExstReport {
    let counts = rank_sequence(p);
    let n = p.len();
    let trivial_mismatches = (1..=n)
        .filter(|&i| trivial_extremal_test(p, i).expect("rank in range") != (counts.get(i) == 0))
        .collect();
    let rows = (2..n)
        .filter(|&i| counts.get(i) > 0)
        .map(|i| {
            let (lo, mid, hi) = (counts.get(i - 1), counts.get(i), counts.get(i + 1));
            ExstRow {
                i,
                a: counts.equality_at(i),
                b: mid == lo && mid == hi,
                c: condition_c(p, i),
                d: condition_d_unchecked(p, i),
            }
        })
        .collect();
    ExstReport {
        log_concave: counts.is_log_concave(),
        shape_ok: shape_check(&counts),
        counts,
        trivial_mismatches,
        rows,
    }
}

/// The positive support of `N` is an interval and the equality ranks form an
/// interval on which `N` is constant together with both neighbors.
pub fn shape_check(counts: &RankSequence) -> bool {
    let support: Vec<usize> = (1..=counts.len()).filter(|&i| counts.get(i) > 0).collect();
    let eq = counts.equality_indices();
    is_interval(&support)
        && is_interval(&eq)
        && eq
            .iter()
            .all(|&i| counts.get(i - 1) == counts.get(i) && counts.get(i + 1) == counts.get(i))
}

fn is_interval(v: &[usize]) -> bool {
    v.windows(2).all(|w| w[1] == w[0] + 1)
}
