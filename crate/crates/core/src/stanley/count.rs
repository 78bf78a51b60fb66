use super::Poset;
use std::collections::HashMap;

/// `N_1, …, N_n`; `counts[i − 1] = N_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankSequence {
    pub counts: Vec<u128>,
}

impl RankSequence {
    pub fn len(&self) -> usize {
        self.counts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    /// `N_i` for `1 ≤ i ≤ n`, and 0 outside that range.
    pub fn get(&self, i: usize) -> u128 {
        if i == 0 || i > self.counts.len() {
            0
        } else {
            self.counts[i - 1]
        }
    }

    /// Number of linear extensions.
    pub fn total(&self) -> u128 {
        self.counts.iter().sum()
    }

    /// `N_i² ≥ N_{i−1}N_{i+1}` at an interior index.
    pub fn log_concave_at(&self, i: usize) -> bool {
        let (a, b, c) = (self.get(i - 1), self.get(i), self.get(i + 1));
        b.checked_mul(b).map_or(true, |bb| a.checked_mul(c).map_or(false, |ac| bb >= ac))
    }

    pub fn is_log_concave(&self) -> bool {
        (2..self.len()).all(|i| self.log_concave_at(i))
    }

    /// `N_i² = N_{i−1}N_{i+1}` at an interior index.
    pub fn equality_at(&self, i: usize) -> bool {
        let (a, b, c) = (self.get(i - 1), self.get(i), self.get(i + 1));
        b.checked_mul(b) == a.checked_mul(c)
    }

    /// Indices `2 ≤ i ≤ n−1` with `N_i > 0` and equality.
    pub fn equality_indices(&self) -> Vec<usize> {
        (2..self.len()).filter(|&i| self.get(i) > 0 && self.equality_at(i)).collect()
    }

    /// Indices with `N_i = 0`.
    pub fn zero_indices(&self) -> Vec<usize> {
        (1..=self.len()).filter(|&i| self.get(i) == 0).collect()
    }
}

/// Counts `N_i` by dynamic programming over order ideals: the number of ways
/// to build each ideal from below and to complete it from above.
pub fn rank_sequence(p: &Poset) -> RankSequence {
    let n = p.len();
    let full = p.full_mask();
    let below: Vec<u64> = (0..n).map(|a| p.below_mask(a)).collect();
    let below = &below;
    let addable = |ideal: u64| (0..n).filter(move |&a| ideal >> a & 1 == 0 && below[a] & !ideal == 0);

    // levels[k] holds the ideals of size k with their number of linear orderings
    let mut levels: Vec<HashMap<u64, u128>> = vec![HashMap::new(); n + 1];
    levels[0].insert(0, 1);
    for k in 0..n {
        let current: Vec<(u64, u128)> = levels[k].iter().map(|(&m, &c)| (m, c)).collect();
        for (ideal, c) in current {
            for a in addable(ideal) {
                *levels[k + 1].entry(ideal | 1 << a).or_insert(0) += c;
            }
        }
    }
    let mut up: HashMap<u64, u128> = HashMap::new();
    up.insert(full, 1);
    for k in (0..n).rev() {
        for &ideal in levels[k].keys() {
            let c = addable(ideal).map(|a| up.get(&(ideal | 1 << a)).copied().unwrap_or(0)).sum();
            up.insert(ideal, c);
        }
    }

    let x = p.x();
    let counts = (1..=n)
        .map(|i| {
            levels[i - 1]
                .iter()
                .filter(|(&ideal, _)| ideal >> x & 1 == 0 && below[x] & !ideal == 0)
                .map(|(&ideal, &down)| down * up[&(ideal | 1 << x)])
                .sum()
        })
        .collect();
    RankSequence { counts }
}

/// Calls `f` with every linear extension, given as the list of elements in
/// increasing rank. Stops early when `f` returns `false`.
pub fn for_each_extension(p: &Poset, mut f: impl FnMut(&[usize]) -> bool) {
    let mut order = Vec::with_capacity(p.len());
    extend(p, None, 0, &mut order, &mut f);
}

/// Like [`for_each_extension`], restricted to extensions with `σ(x) = i`.
pub fn for_each_extension_with_rank(p: &Poset, i: usize, mut f: impl FnMut(&[usize]) -> bool) {
    if i == 0 || i > p.len() {
        return;
    }
    let mut order = Vec::with_capacity(p.len());
    extend(p, Some(i - 1), 0, &mut order, &mut f);
}

fn extend(p: &Poset, slot: Option<usize>, placed: u64, order: &mut Vec<usize>, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
    let n = p.len();
    if order.len() == n {
        return f(order);
    }
    for a in 0..n {
        if placed >> a & 1 == 1 || p.below_mask(a) & !placed != 0 {
            continue;
        }
        if let Some(s) = slot {
            if (a == p.x()) != (order.len() == s) {
                continue;
            }
        }
        order.push(a);
        let go_on = extend(p, slot, placed | 1 << a, order, f);
        order.pop();
        if !go_on {
            return false;
        }
    }
    true
}

/// Brute-force `N_i` by listing every linear extension.
pub fn rank_sequence_by_enumeration(p: &Poset) -> RankSequence {
    let mut counts = vec![0u128; p.len()];
    for_each_extension(p, |order| {
        let r = order.iter().position(|&a| a == p.x()).expect("x is placed");
        counts[r] += 1;
        true
    });
    RankSequence { counts }
}

/// All linear extensions with `σ(x) = i`.
pub fn linear_extensions_with_rank(p: &Poset, i: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for_each_extension_with_rank(p, i, |order| {
        out.push(order.to_vec());
        true
    });
    out
}
