//! Finite posets with a distinguished element `x`, the rank sequence
//! `N_i = #{linear extensions σ : σ(x) = i}`, order polytopes and the
//! characterization of the equality cases `N_i² = N_{i−1}N_{i+1}`.
//!
//! Ranks `i` are 1-based throughout, as in the counting statements.

mod count;
mod exst;
mod generate;
mod order;

pub use count::{for_each_extension, for_each_extension_with_rank, linear_extensions_with_rank, rank_sequence, rank_sequence_by_enumeration, RankSequence};
pub use exst::{
    condition_c, exst_equivalence_audit, extremal_condition_d, shape_check, trivial_extremal_test, ExstReport, ExstRow,
};
pub use generate::{canonical_form, natural_posets, pointed_posets, random_poset, shape_family};
pub use order::{
    order_polytope, order_polytope_facet_audit, order_polytopes_kl, stanley_mixed_volumes, stanley_representation_check,
    OrderPolytope,
};

use crate::error::{Error, Result};

/// Largest poset accepted; element sets are stored as `u64` bit masks.
pub const MAX_ELEMENTS: usize = 64;

/// A strict partial order on `n` labeled elements, one of which is `x`.
///
/// `below[a]` is the bit mask of elements strictly below `a` (transitively closed).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poset {
    labels: Vec<String>,
    x: usize,
    below: Vec<u64>,
}

impl Poset {
    /// Builds the poset generated by `relations` (pairs `(a, b)` meaning `a < b`).
    pub fn new(labels: Vec<String>, x: usize, relations: &[(usize, usize)]) -> Result<Self> {
        let n = labels.len();
        if n == 0 {
            return Err(Error::EmptyInput);
        }
        if n > MAX_ELEMENTS {
            return Err(Error::precondition(format!("at most {MAX_ELEMENTS} elements are supported")));
        }
        if x >= n {
            return Err(Error::precondition("distinguished element out of range"));
        }
        let mut below = vec![0u64; n];
        for &(a, b) in relations {
            if a >= n || b >= n {
                return Err(Error::precondition("relation refers to an unknown element"));
            }
            if a == b {
                return Err(Error::precondition(format!("reflexive relation on {}", labels[a])));
            }
            below[b] |= 1 << a;
        }
        // Warshall on bit rows
        for k in 0..n {
            for i in 0..n {
                if below[i] >> k & 1 == 1 {
                    below[i] |= below[k];
                }
            }
        }
        if let Some(a) = (0..n).find(|&a| below[a] >> a & 1 == 1) {
            return Err(Error::precondition(format!("cyclic relation through {}", labels[a])));
        }
        Ok(Poset { labels, x, below })
    }

    /// Unlabeled convenience constructor: elements are named `0..n`.
    pub fn from_relations(n: usize, x: usize, relations: &[(usize, usize)]) -> Result<Self> {
        Poset::new((0..n).map(|i| i.to_string()).collect(), x, relations)
    }

    /// Parses the text format: element names on the first line with `x` marked
    /// by `*`, then one `a < b` per line (chains `a < b < c` are accepted).
    /// Blank lines and `#` comments are skipped.
    pub fn parse(text: &str) -> Result<Self> {
        let err = |line: usize, col: usize, msg: &str| Error::Parse(format!("line {line}, column {col}: {msg}"));
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(k, l)| (k + 1, l.split('#').next().unwrap_or("")))
            .filter(|(_, l)| !l.trim().is_empty());
        let (first, header) = lines.next().ok_or_else(|| err(1, 1, "missing element list"))?;
        let mut labels = Vec::new();
        let mut x = None;
        for (col, tok) in tokens(header) {
            let name = match tok.strip_prefix('*') {
                Some(rest) => {
                    if x.is_some() {
                        return Err(err(first, col, "more than one element marked with *"));
                    }
                    x = Some(labels.len());
                    rest
                }
                None => tok,
            };
            if name.is_empty() || name.contains('<') || name.contains('*') {
                return Err(err(first, col, &format!("invalid element name {tok:?}")));
            }
            if labels.iter().any(|l| l == name) {
                return Err(err(first, col, &format!("duplicate element {name}")));
            }
            labels.push(name.to_string());
        }
        let x = x.ok_or_else(|| err(first, 1, "no element marked with *"))?;

        let mut relations = Vec::new();
        for (line, body) in lines {
            let toks: Vec<(usize, &str)> = tokens(body).collect();
            if toks.len() < 3 || toks.len() % 2 == 0 {
                return Err(err(line, 1, "expected a relation of the form a < b"));
            }
            let mut prev = None;
            for (k, &(col, tok)) in toks.iter().enumerate() {
                if k % 2 == 1 {
                    if tok != "<" {
                        return Err(err(line, col, &format!("expected '<', found {tok:?}")));
                    }
                    continue;
                }
                let idx = labels
                    .iter()
                    .position(|l| l == tok)
                    .ok_or_else(|| err(line, col, &format!("unknown element {tok}")))?;
                if let Some(p) = prev {
                    if p == idx {
                        return Err(err(line, col, &format!("reflexive relation on {tok}")));
                    }
                    relations.push((p, idx));
                }
                prev = Some(idx);
            }
        }
        Poset::new(labels, x, &relations).map_err(|e| match e {
            Error::Precondition(m) => Error::Parse(m),
            other => other,
        })
    }

    /// Inverse of [`Poset::parse`], listing cover relations.
    pub fn to_text(&self) -> String {
        let header: Vec<String> = (0..self.len())
            .map(|a| {
                if a == self.x {
                    format!("*{}", self.labels[a])
                } else {
                    self.labels[a].clone()
                }
            })
            .collect();
        let mut out = header.join(" ");
        out.push('\n');
        for (a, b) in self.covers() {
            out.push_str(&format!("{} < {}\n", self.labels[a], self.labels[b]));
        }
        out
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn x(&self) -> usize {
        self.x
    }

    pub fn less(&self, a: usize, b: usize) -> bool {
        self.below[b] >> a & 1 == 1
    }

    pub fn comparable(&self, a: usize, b: usize) -> bool {
        self.less(a, b) || self.less(b, a)
    }

    /// Mask of elements strictly below `a`.
    pub fn below_mask(&self, a: usize) -> u64 {
        self.below[a]
    }

    /// Mask of elements strictly above `a`.
    pub fn above_mask(&self, a: usize) -> u64 {
        (0..self.len()).filter(|&b| self.less(a, b)).fold(0, |m, b| m | 1 << b)
    }

    /// `|α_{<a}|`.
    pub fn count_below(&self, a: usize) -> usize {
        self.below[a].count_ones() as usize
    }

    /// `|α_{>a}|`.
    pub fn count_above(&self, a: usize) -> usize {
        self.above_mask(a).count_ones() as usize
    }

    /// Cover relations `(a, b)`: `a < b` with nothing in between.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for b in 0..n {
            for a in 0..n {
                if self.less(a, b) && (0..n).all(|c| !(self.less(a, c) && self.less(c, b))) {
                    out.push((a, b));
                }
            }
        }
        out.sort();
        out
    }

    /// The elements other than `x`, in coordinate order for `R^{n−1}`.
    pub fn others(&self) -> Vec<usize> {
        (0..self.len()).filter(|&a| a != self.x).collect()
    }

    fn full_mask(&self) -> u64 {
        if self.len() == 64 {
            u64::MAX
        } else {
            (1u64 << self.len()) - 1
        }
    }
}

fn tokens(line: &str) -> impl Iterator<Item = (usize, &str)> {
    // splits on whitespace and around '<', reporting 1-based columns
    let mut out = Vec::new();
    let mut start: Option<usize> = None;
    for (i, ch) in line.char_indices() {
        if ch.is_whitespace() || ch == '<' {
            if let Some(s) = start.take() {
                out.push((s + 1, &line[s..i]));
            }
            if ch == '<' {
                out.push((i + 1, &line[i..i + 1]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &line[s..]));
    }
    out.into_iter()
}

#[cfg(test)]
mod tests;
