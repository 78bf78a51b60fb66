//! Critical, subcritical and supercritical reference collections.
//!
//! For `α ⊆ [m]` write `L_α` for the direction space of `Σ_{i∈α} P_i`. All
//! conditions compare `dim L_α` with `|α|`, so every result here is invariant
//! under translating the bodies and no origin normalization is needed.

use crate::error::{Error, Result};
use crate::mixedvol::{mixed_volume, mixed_volume_in_subspace, BodyCollection};
use crate::polytope::{direction_of_sum, VPolytope};
use crate::ratgeo::{self, Rational, ScaledRational, Subspace};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CriticalityClass {
    Null,
    SubcriticalNotCritical,
    CriticalNotSupercritical,
    Supercritical,
}

impl CriticalityClass {
    pub fn name(self) -> &'static str {
        match self {
            CriticalityClass::Null => "null",
            CriticalityClass::SubcriticalNotCritical => "subcritical",
            CriticalityClass::CriticalNotSupercritical => "critical",
            CriticalityClass::Supercritical => "supercritical",
        }
    }

    pub fn is_critical(self) -> bool {
        matches!(
            self,
            CriticalityClass::CriticalNotSupercritical | CriticalityClass::Supercritical
        )
    }
}

/// Classification together with the reduction data.
///
/// For a subcritical collection `eta` is the largest subcritical set and the
/// maximal sets are those of the collection `P_{L_η⊥} P_i`, `i ∉ η`, which is
/// critical. For a critical collection `eta` is empty. Indices are 0-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriticalityReport {
    pub class: CriticalityClass,
    pub eta: Vec<usize>,
    pub l_eta: Subspace,
    pub maximal_sets: Vec<Vec<usize>>,
    pub l_j: Vec<Subspace>,
}

impl CriticalityReport {
    /// Indices outside `η`.
    pub fn remaining(&self, m: usize) -> Vec<usize> {
        (0..m).filter(|i| !self.eta.contains(i)).collect()
    }
}

fn subsets(m: usize) -> impl Iterator<Item = Vec<usize>> {
    (1u32..(1u32 << m)).map(move |mask| (0..m).filter(|i| mask >> i & 1 == 1).collect())
}

fn dim_of(bodies: &[VPolytope], alpha: &[usize], n: usize) -> usize {
    let refs: Vec<&VPolytope> = alpha.iter().map(|&i| &bodies[i]).collect();
    direction_of_sum(&refs, n).dim()
}

/// `L_α`, the direction space of `Σ_{i∈α} P_i`.
pub fn l_alpha(p: &BodyCollection, alpha: &[usize]) -> Subspace {
    let refs: Vec<&VPolytope> = alpha.iter().map(|&i| &p.bodies()[i]).collect();
    direction_of_sum(&refs, p.ambient_dim())
}

fn class_of(bodies: &[VPolytope], n: usize) -> CriticalityClass {
    let mut min_slack = i64::MAX;
    for alpha in subsets(bodies.len()) {
        let slack = dim_of(bodies, &alpha, n) as i64 - alpha.len() as i64;
        min_slack = min_slack.min(slack);
    }
    match min_slack {
        s if s < 0 => CriticalityClass::Null,
        0 => CriticalityClass::SubcriticalNotCritical,
        1 => CriticalityClass::CriticalNotSupercritical,
        _ => CriticalityClass::Supercritical,
    }
}

/// Inclusion-maximal members of `sets`.
fn maximal(sets: &[Vec<usize>]) -> Vec<Vec<usize>> {
    sets.iter()
        .filter(|a| {
            !sets
                .iter()
                .any(|b| b.len() > a.len() && a.iter().all(|x| b.contains(x)))
        })
        .cloned()
        .collect()
}

fn critical_sets_of(bodies: &[VPolytope], n: usize) -> Vec<Vec<usize>> {
    subsets(bodies.len())
        .filter(|alpha| dim_of(bodies, alpha, n) == alpha.len() + 1)
        .collect()
}

pub fn classify(p: &BodyCollection) -> CriticalityReport {
    let n = p.ambient_dim();
    let m = p.len();
    let class = class_of(p.bodies(), n);
    let empty = CriticalityReport {
        class,
        eta: Vec::new(),
        l_eta: Subspace::zero(n),
        maximal_sets: Vec::new(),
        l_j: Vec::new(),
    };
    match class {
        CriticalityClass::Null | CriticalityClass::Supercritical => empty,
        CriticalityClass::CriticalNotSupercritical => {
            let maximal_sets = maximal(&critical_sets_of(p.bodies(), n));
            let l_j = maximal_sets.iter().map(|a| l_alpha(p, a)).collect();
            CriticalityReport {
                maximal_sets,
                l_j,
                ..empty
            }
        }
        CriticalityClass::SubcriticalNotCritical => {
            let mut eta: Vec<usize> = Vec::new();
            for alpha in subsets(m) {
                if dim_of(p.bodies(), &alpha, n) == alpha.len() {
                    for i in alpha {
                        if !eta.contains(&i) {
                            eta.push(i);
                        }
                    }
                }
            }
            eta.sort_unstable();
            let l_eta = l_alpha(p, &eta);
            let rest: Vec<usize> = (0..m).filter(|i| !eta.contains(i)).collect();
            let projected = p
                .select(&rest)
                .project(&l_eta.orthogonal_complement())
                .expect("projection into the same ambient space");
            let local = maximal(&critical_sets_of(projected.bodies(), n));
            let l_j = local.iter().map(|a| l_alpha(&projected, a)).collect();
            let maximal_sets = local
                .iter()
                .map(|a| a.iter().map(|&i| rest[i]).collect())
                .collect();
            CriticalityReport {
                class,
                eta,
                l_eta,
                maximal_sets,
                l_j,
            }
        }
    }
}

/// Whether the projected collection `P_{L_η⊥} P_i`, `i ∉ η`, is critical.
pub fn reduced_is_critical(p: &BodyCollection, report: &CriticalityReport) -> bool {
    let rest = report.remaining(p.len());
    match p.select(&rest).project(&report.l_eta.orthogonal_complement()) {
        Ok(q) => class_of(q.bodies(), q.ambient_dim()).is_critical(),
        Err(_) => false,
    }
}

/// All critical sets `α` (`dim L_α = |α| + 1`) of a critical collection.
pub fn critical_sets(p: &BodyCollection) -> Result<Vec<Vec<usize>>> {
    let class = class_of(p.bodies(), p.ambient_dim());
    if !class.is_critical() {
        return Err(Error::precondition(format!(
            "collection is {}, not critical",
            class.name()
        )));
    }
    let mut sets = critical_sets_of(p.bodies(), p.ambient_dim());
    sets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(sets)
}

/// Evidence returned with a positive [`degenerate_pair_test`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegenerateWitness {
    /// Maximal set whose space contains both bodies after translation.
    pub alpha: Vec<usize>,
    pub l_alpha: Subspace,
    /// `M + v ⊂ L_α`.
    pub v: Vec<Rational>,
    /// `N + w ⊂ L_α`.
    pub w: Vec<Rational>,
    /// `V_{L_α}(M, P_α)`.
    pub m_normalization: ScaledRational,
    /// `V_{L_α}(N, P_α)`.
    pub n_normalization: ScaledRational,
    /// Factor `s` with `V_{L_α}(M, P_α) = V_{L_α}(sN, P_α)`; `1` when already normalized.
    pub rescale: Rational,
}

impl DegenerateWitness {
    pub fn is_normalized(&self) -> bool {
        self.m_normalization == self.n_normalization
    }
}

fn is_translate(a: &VPolytope, b: &VPolytope) -> bool {
    if a.num_vertices() != b.num_vertices() {
        return false;
    }
    let shift = ratgeo::sub(&b.vertices()[0], &a.vertices()[0]);
    a.translate(&shift).map(|t| &t == b).unwrap_or(false)
}

/// Decides whether `(M, N)` is a degenerate pair for the critical collection
/// `P`, allowing `N` to be rescaled to meet the normalization.
///
/// The normalization is tested in its intrinsic form `V_{L_α}(M, P_α) =
/// V_{L_α}(N, P_α)` for the maximal set `α` with `M, N` in translates of
/// `L_α`. Returns `None` when the pair is not degenerate.
pub fn degenerate_pair_test(
    p: &BodyCollection,
    m: &VPolytope,
    n_body: &VPolytope,
) -> Result<Option<DegenerateWitness>> {
    let n = p.ambient_dim();
    let class = class_of(p.bodies(), n);
    if !class.is_critical() {
        return Err(Error::precondition(format!(
            "collection is {}, not critical",
            class.name()
        )));
    }
    if p.len() + 2 != n {
        return Err(Error::Arity {
            expected: n.saturating_sub(2),
            found: p.len(),
        });
    }
    if is_translate(m, n_body) {
        return Ok(None);
    }
    let full = p.with_front(&[m.clone(), n_body.clone()])?;
    if !mixed_volume(&full)?.is_zero() {
        return Ok(None);
    }
    let joint = m.direction().sum(n_body.direction())?;
    let maximal_sets = maximal(&critical_sets_of(p.bodies(), n));
    let Some(alpha) = maximal_sets
        .into_iter()
        .find(|a| l_alpha(p, a).contains_subspace(&joint))
    else {
        return Ok(None);
    };
    let l = l_alpha(p, &alpha);
    let p_alpha = p.select(&alpha);
    let vm = mixed_volume_in_subspace(&l, &p_alpha.with_front(&[m.clone()])?)?;
    let vn = mixed_volume_in_subspace(&l, &p_alpha.with_front(&[n_body.clone()])?)?;
    if vm.is_zero() || vn.is_zero() {
        return Ok(None);
    }
    let rescale = vm
        .ratio(&vn)
        .ok_or_else(|| Error::invariant("normalizations in one space share a radicand"))?;
    if is_translate(m, &n_body.scale(&rescale)) {
        return Ok(None);
    }
    Ok(Some(DegenerateWitness {
        alpha,
        l_alpha: l,
        v: ratgeo::neg(&m.vertex_centroid()),
        w: ratgeo::neg(&n_body.vertex_centroid()),
        m_normalization: vm,
        n_normalization: vn,
        rescale,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polytope::minkowski_sum;
    use crate::ratgeo::{int, qvec, unit_vec, zero_vec};

    fn seg(n: usize, i: usize) -> VPolytope {
        VPolytope::segment(zero_vec(n), unit_vec(n, i)).unwrap()
    }

    fn square(n: usize) -> VPolytope {
        minkowski_sum(&seg(n, 0), &seg(n, 1)).unwrap()
    }

    fn deg_collection() -> BodyCollection {
        BodyCollection::new(4, vec![VPolytope::cube(4), square(4)]).unwrap()
    }

    #[test]
    fn classify_examples() {
        let cube = BodyCollection::new(3, vec![VPolytope::cube(3)]).unwrap();
        let r = classify(&cube);
        assert_eq!(r.class, CriticalityClass::Supercritical);
        assert!(r.eta.is_empty() && r.maximal_sets.is_empty());

        let r = classify(&deg_collection());
        assert_eq!(r.class, CriticalityClass::CriticalNotSupercritical);
        assert_eq!(r.maximal_sets, vec![vec![1]]);
        assert_eq!(r.l_j[0], Subspace::span(4, &[unit_vec(4, 0), unit_vec(4, 1)]).unwrap());

        let null = BodyCollection::new(4, vec![seg(4, 0), seg(4, 0)]).unwrap();
        assert_eq!(classify(&null).class, CriticalityClass::Null);
    }

    #[test]
    fn subcritical_reduction() {
        let p = BodyCollection::new(4, vec![square(4), square(4)]).unwrap();
        let r = classify(&p);
        assert_eq!(r.class, CriticalityClass::SubcriticalNotCritical);
        assert_eq!(r.eta, vec![0, 1]);
        assert_eq!(r.l_eta.dim(), 2);
        assert!(r.maximal_sets.is_empty());
        assert!(reduced_is_critical(&p, &r));

        // η = {0}; the square in the e2e3-plane stays a critical set after projection
        let sq23 = minkowski_sum(&seg(5, 1), &seg(5, 2)).unwrap();
        let p = BodyCollection::new(5, vec![seg(5, 0), sq23, VPolytope::cube(5)]).unwrap();
        let r = classify(&p);
        assert_eq!(r.class, CriticalityClass::SubcriticalNotCritical);
        assert_eq!(r.eta, vec![0]);
        assert_eq!(r.maximal_sets, vec![vec![1]]);
        assert_eq!(r.l_j[0].dim(), 2);
        assert!(reduced_is_critical(&p, &r));
    }

    #[test]
    fn critical_set_examples() {
        assert_eq!(critical_sets(&deg_collection()).unwrap(), vec![vec![1]]);
        let p = BodyCollection::new(4, vec![square(4), square(4)]).unwrap();
        assert!(matches!(critical_sets(&p), Err(Error::Precondition(_))));
        let sup = BodyCollection::new(4, vec![VPolytope::cube(4), VPolytope::cube(4)]).unwrap();
        assert!(critical_sets(&sup).unwrap().is_empty());
    }

    #[test]
    fn degenerate_pair_examples() {
        let p = deg_collection();
        let w = degenerate_pair_test(&p, &seg(4, 0), &seg(4, 1)).unwrap().unwrap();
        assert_eq!(w.alpha, vec![1]);
        assert!(w.is_normalized());
        assert_eq!(w.rescale, int(1));

        let m = seg(4, 0);
        let shifted = m.translate(&qvec(&[0, 3, 1, 0])).unwrap();
        assert_eq!(degenerate_pair_test(&p, &m, &shifted).unwrap(), None);
        assert_eq!(degenerate_pair_test(&p, &seg(4, 2), &seg(4, 1)).unwrap(), None);

        // doubling N keeps the pair degenerate after rescaling by 1/2
        let w = degenerate_pair_test(&p, &seg(4, 0), &seg(4, 1).scale(&int(2))).unwrap().unwrap();
        assert!(!w.is_normalized());
        assert_eq!(w.rescale, crate::ratgeo::rat(1, 2));
        // parallel segments of different length become translates after rescaling
        assert_eq!(degenerate_pair_test(&p, &seg(4, 0), &seg(4, 0).scale(&int(3))).unwrap(), None);

        let sup = BodyCollection::new(4, vec![VPolytope::cube(4), VPolytope::cube(4)]).unwrap();
        assert_eq!(degenerate_pair_test(&sup, &seg(4, 0), &seg(4, 1)).unwrap(), None);
        let sub = BodyCollection::new(4, vec![square(4), square(4)]).unwrap();
        assert!(degenerate_pair_test(&sub, &seg(4, 0), &seg(4, 1)).is_err());
    }
}
