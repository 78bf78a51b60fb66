//! Verification suites, one per acceptance criterion.
//!
//! Every suite is deterministic given the seed. Random instances are drawn from
//! a `ChaCha8Rng` seeded with `seed + suite id`, so suites can run in any order.

use crate::io::{collection_json, polytope_json, vector_json};
use afx_core::criticality::{classify, CriticalityClass};
use afx_core::extremals::{extremal_space, extremality_test, local_af_extension, ExtremalSpace};
use afx_core::mixedvol::oracle::mixed_volume_by_interpolation;
use afx_core::mixedvol::{
    mixed_volume, mixed_volume_q, positivity, projection_check, projection_formula_check, verify_propeller,
    BodyCollection, SupportDifference,
};
use afx_core::polytope::{convex_hull, minkowski_sum, VPolytope};
use afx_core::ratgeo::{add, int, is_zero_vec, qvec, scale, unit_vec, zero_vec, QVector, Subspace};
use afx_core::stanley::{
    exst_equivalence_audit, pointed_posets, random_poset, rank_sequence, stanley_representation_check, Poset,
};
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

/// Number of suites; suite `k` checks acceptance criterion `k`.
pub const SUITES: usize = 10;

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub seed: u64,
    /// Upper bound on the number of random instances per suite.
    pub size: Option<usize>,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { seed: 0, size: None }
    }
}

impl VerifyConfig {
    fn count(&self, full: usize) -> usize {
        self.size.map_or(full, |s| s.min(full))
    }

    fn rng(&self, suite: usize) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed.wrapping_add(suite as u64))
    }
}

/// A violated check with enough data to replay it.
#[derive(Clone, Debug)]
pub struct Failure {
    pub what: String,
    pub instance: Value,
}

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub id: usize,
    pub title: &'static str,
    pub instances: usize,
    pub failures: Vec<Failure>,
    pub summary: String,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// One line: `criterion k [title]: PASS|FAIL (…)`.
    pub fn line(&self) -> String {
        format!(
            "criterion {} [{}]: {} ({} instances{}{})",
            self.id,
            self.title,
            if self.passed() { "PASS" } else { "FAIL" },
            self.instances,
            if self.summary.is_empty() { "" } else { "; " },
            self.summary
        )
    }

    pub fn details(&self) -> Vec<String> {
        self.failures
            .iter()
            .map(|f| format!("  violated: {}\n  instance: {}", f.what, f.instance))
            .collect()
    }
}

fn report(id: usize, title: &'static str, results: Vec<Result<(), Failure>>, summary: String) -> SuiteReport {
    let instances = results.len();
    SuiteReport {
        id,
        title,
        instances,
        failures: results.into_iter().filter_map(Result::err).collect(),
        summary,
    }
}

fn fail(what: impl Into<String>, instance: Value) -> Failure {
    Failure {
        what: what.into(),
        instance,
    }
}

fn check(ok: bool, what: impl Into<String>, instance: impl FnOnce() -> Value) -> Result<(), Failure> {
    if ok {
        Ok(())
    } else {
        Err(fail(what, instance()))
    }
}

fn lift<T>(r: afx_core::Result<T>, instance: impl FnOnce() -> Value) -> Result<T, Failure> {
    r.map_err(|e| fail(format!("error: {e}"), instance()))
}

pub fn run_suite(id: usize, cfg: &VerifyConfig) -> SuiteReport {
    match id {
        1 => oracle_suite(cfg),
        2 => af_suite(cfg),
        3 => positivity_suite(cfg),
        4 => projection_suite(cfg),
        5 => degenerate_example_suite(),
        6 => supercritical_suite(cfg),
        7 => dimension_suite(cfg),
        8 => local_af_suite(cfg),
        9 => propeller_suite(),
        10 => poset_suite(cfg),
        _ => panic!("no suite {id}"),
    }
}

pub fn run_all(cfg: &VerifyConfig) -> Vec<SuiteReport> {
    (1..=SUITES).map(|k| run_suite(k, cfg)).collect()
}

// ---------------------------------------------------------------------------
// random bodies

fn int_point<R: Rng>(rng: &mut R, n: usize, lo: i64, hi: i64) -> QVector {
    (0..n).map(|_| int(rng.gen_range(lo..=hi))).collect()
}

/// Axis-parallel box with sides in `0..=2`, possibly degenerate.
pub fn random_box<R: Rng>(rng: &mut R, n: usize) -> VPolytope {
    let lo = int_point(rng, n, -2, 1);
    let hi: QVector = lo.iter().map(|c| c + int(rng.gen_range(0..=2))).collect();
    VPolytope::boxed(&lo, &hi).expect("ordered corners")
}

/// A simplex: a translated dilate of the standard simplex, or the hull of
/// `n + 1` random lattice points (possibly lower-dimensional).
pub fn random_simplex<R: Rng>(rng: &mut R, n: usize) -> VPolytope {
    if rng.gen_bool(0.5) {
        let s = int(rng.gen_range(1..=2));
        let t = int_point(rng, n, -2, 2);
        VPolytope::standard_simplex(n).scale(&s).translate(&t).expect("same dimension")
    } else {
        let pts: Vec<QVector> = (0..=n).map(|_| int_point(rng, n, -2, 2)).collect();
        convex_hull(&pts).expect("nonempty")
    }
}

pub fn random_cloud<R: Rng>(rng: &mut R, n: usize, points: usize) -> VPolytope {
    let pts: Vec<QVector> = (0..points).map(|_| int_point(rng, n, -2, 2)).collect();
    convex_hull(&pts).expect("nonempty")
}

/// Full-dimensional: a lattice cloud together with a unit simplex at one of its points.
pub fn random_full<R: Rng>(rng: &mut R, n: usize) -> VPolytope {
    let mut pts: Vec<QVector> = (0..rng.gen_range(1..=3)).map(|_| int_point(rng, n, -2, 2)).collect();
    let base = pts[0].clone();
    pts.extend((0..n).map(|i| add(&base, &unit_vec(n, i))));
    convex_hull(&pts).expect("nonempty")
}

fn box_or_simplex<R: Rng>(rng: &mut R, n: usize) -> VPolytope {
    if rng.gen_bool(0.5) {
        random_box(rng, n)
    } else {
        random_simplex(rng, n)
    }
}

fn any_body<R: Rng>(rng: &mut R, n: usize) -> VPolytope {
    match rng.gen_range(0..3) {
        0 => random_box(rng, n),
        1 => random_simplex(rng, n),
        _ => {
            let k = rng.gen_range(2..=5);
            random_cloud(rng, n, k)
        }
    }
}

fn bodies_json(bodies: &[&VPolytope]) -> Value {
    Value::Array(bodies.iter().map(|b| polytope_json(b)).collect())
}

fn coll(n: usize, bodies: Vec<VPolytope>) -> BodyCollection {
    BodyCollection::new(n, bodies).expect("bodies share the ambient dimension")
}

fn seg(n: usize, i: usize) -> VPolytope {
    VPolytope::segment(zero_vec(n), unit_vec(n, i)).expect("segment")
}

fn square(n: usize, i: usize, j: usize) -> VPolytope {
    minkowski_sum(&seg(n, i), &seg(n, j)).expect("square")
}

fn coord_box(sides: &[i64]) -> VPolytope {
    let hi: QVector = sides.iter().map(|&s| int(s)).collect();
    VPolytope::boxed(&zero_vec(sides.len()), &hi).expect("box")
}

fn planar(n: usize, pts: &[[i64; 2]], i: usize, j: usize) -> VPolytope {
    let pts: Vec<QVector> = pts
        .iter()
        .map(|p| {
            let mut v = zero_vec(n);
            v[i] = int(p[0]);
            v[j] = int(p[1]);
            v
        })
        .collect();
    convex_hull(&pts).expect("polygon")
}

// ---------------------------------------------------------------------------
// 1. mixed volume against the interpolation oracle

fn oracle_suite(cfg: &VerifyConfig) -> SuiteReport {
    let mut rng = cfg.rng(1);
    let tuples: Vec<Vec<VPolytope>> = (0..cfg.count(200))
        .map(|k| {
            let n = 2 + k % 3;
            (0..n).map(|_| box_or_simplex(&mut rng, n)).collect()
        })
        .collect();
    let results = tuples
        .par_iter()
        .map(|t| {
            let refs: Vec<&VPolytope> = t.iter().collect();
            let inst = || bodies_json(&refs);
            let a = lift(mixed_volume_q(&refs), inst)?;
            let b = lift(mixed_volume_by_interpolation(&refs), inst)?;
            check(a == b, format!("polarization {a} ≠ interpolation {b}"), inst)
        })
        .collect();
    report(1, "mixed-volume oracle", results, "n ∈ {2,3,4}, exact".into())
}

// ---------------------------------------------------------------------------
// 2. Alexandrov–Fenchel inequality

fn af_suite(cfg: &VerifyConfig) -> SuiteReport {
    let mut rng = cfg.rng(2);
    let cases: Vec<Vec<VPolytope>> = (0..cfg.count(200))
        .map(|k| {
            let n = 3 + k % 2;
            (0..n).map(|_| any_body(&mut rng, n)).collect()
        })
        .collect();
    let equalities = std::sync::atomic::AtomicUsize::new(0);
    let results = cases
        .par_iter()
        .map(|c| {
            let (k, l, rest) = (&c[0], &c[1], &c[2..]);
            let inst = || bodies_json(&c.iter().collect::<Vec<_>>());
            let mv = |a: &VPolytope, b: &VPolytope| {
                let mut v = vec![a, b];
                v.extend(rest.iter());
                mixed_volume_q(&v)
            };
            let kl = lift(mv(k, l), inst)?;
            let kk = lift(mv(k, k), inst)?;
            let ll = lift(mv(l, l), inst)?;
            let (lhs, rhs) = (&kl * &kl, &kk * &ll);
            if lhs == rhs {
                equalities.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
            }
            check(lhs >= rhs, format!("V(K,L)² = {lhs} < {rhs} = V(K,K)V(L,L)"), inst)
        })
        .collect();
    let eq = equalities.into_inner();
    report(2, "Alexandrov-Fenchel", results, format!("{eq} equality cases"))
}

// ---------------------------------------------------------------------------
// 3. positivity against the dimension conditions

fn positivity_family() -> Vec<VPolytope> {
    let n = 3;
    vec![
        VPolytope::point(zero_vec(n)),
        seg(n, 0),
        seg(n, 1),
        seg(n, 2),
        VPolytope::segment(zero_vec(n), qvec(&[1, 1, 0])).expect("segment"),
        square(n, 0, 1),
        square(n, 0, 2),
        square(n, 1, 2),
        VPolytope::cube(n),
    ]
}

fn positivity_suite(_cfg: &VerifyConfig) -> SuiteReport {
    let fam = positivity_family();
    let m = fam.len();
    let triples: Vec<[usize; 3]> = (0..m * m * m).map(|t| [t / (m * m), t / m % m, t % m]).collect();
    let positive = std::sync::atomic::AtomicUsize::new(0);
    let results = triples
        .par_iter()
        .map(|t| {
            let c = coll(3, t.iter().map(|&i| fam[i].clone()).collect());
            let inst = || collection_json(&c);
            let v = lift(mixed_volume(&c), inst)?;
            if !v.is_zero() {
                positive.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
            }
            check(positivity(&c) == !v.is_zero(), format!("dimension test disagrees with V = {v}"), inst)
        })
        .collect();
    let pos = positive.into_inner();
    report(3, "positivity", results, format!("{pos} positive"))
}

// ---------------------------------------------------------------------------
// 4. projection formulas

fn random_subspace<R: Rng>(rng: &mut R, n: usize, m: usize) -> Subspace {
    loop {
        let vs: Vec<QVector> = (0..m).map(|_| int_point(rng, n, -1, 2)).collect();
        if let Ok(e) = Subspace::span(n, &vs) {
            if e.dim() == m {
                return e;
            }
        }
    }
}

fn body_in<R: Rng>(rng: &mut R, e: &Subspace) -> VPolytope {
    let n = e.ambient_dim();
    let shift = int_point(rng, n, -1, 1);
    let k = rng.gen_range(2..=4);
    let pts: Vec<QVector> = (0..k)
        .map(|_| {
            let c: QVector = (0..e.dim()).map(|_| int(rng.gen_range(-2..=2))).collect();
            let mut p = shift.clone();
            for (ci, b) in c.iter().zip(e.basis()) {
                p = add(&p, &scale(b, ci));
            }
            p
        })
        .collect();
    convex_hull(&pts).expect("nonempty")
}

fn projection_suite(cfg: &VerifyConfig) -> SuiteReport {
    let mut rng = cfg.rng(4);
    let mut cases: Vec<(Option<Subspace>, QVector, BodyCollection)> = Vec::new();
    for k in 0..cfg.count(50) {
        let n = 3 + k % 2;
        let m = 1 + (k / 2) % 2;
        let e = random_subspace(&mut rng, n, m);
        let mut bodies: Vec<VPolytope> = (0..m).map(|_| body_in(&mut rng, &e)).collect();
        bodies.extend((m..n).map(|_| any_body(&mut rng, n)));
        cases.push((Some(e), Vec::new(), coll(n, bodies)));
    }
    for k in 0..cfg.count(100) {
        let n = 2 + k % 3;
        let u = loop {
            let u = int_point(&mut rng, n, -2, 2);
            if !is_zero_vec(&u) {
                break u;
            }
        };
        let bodies = (1..n).map(|_| any_body(&mut rng, n)).collect();
        cases.push((None, u, coll(n, bodies)));
    }
    let results = cases
        .par_iter()
        .map(|(e, u, c)| match e {
            Some(e) => {
                let inst = || json!({"subspace": e.basis().iter().map(|b| vector_json(b)).collect::<Vec<_>>(), "collection": collection_json(c)});
                let ok = lift(projection_formula_check(e, c), inst)?;
                check(ok, "subspace projection identity", inst)
            }
            None => {
                let inst = || json!({"direction": vector_json(u), "collection": collection_json(c)});
                let ok = lift(projection_check(u, c), inst)?;
                check(ok, "segment projection identity", inst)
            }
        })
        .collect();
    report(4, "projection formulas", results, format!("{} subspace + {} segment", cfg.count(50), cfg.count(100)))
}

// ---------------------------------------------------------------------------
// 5. the degenerate example in R⁴

pub fn degenerate_example() -> BodyCollection {
    coll(4, vec![VPolytope::cube(4), square(4, 0, 1)])
}

fn degenerate_example_suite() -> SuiteReport {
    let p = degenerate_example();
    let (m, n) = (seg(4, 0), seg(4, 1));
    let c1 = VPolytope::cube(4);
    let k = minkowski_sum(&c1, &m).expect("sum");
    let l = minkowski_sum(&c1, &n).expect("sum");
    let inst = || collection_json(&p);
    let mut results = Vec::new();
    let mv = |a: &VPolytope, b: &VPolytope| mixed_volume_q(&[a, b, &p.bodies()[0], &p.bodies()[1]]);
    results.push((|| {
        let v = lift(mv(&m, &n), inst)?;
        check(v.is_zero(), format!("V(M,N,C1,C2) = {v}"), inst)
    })());
    results.push((|| {
        let kl = lift(mv(&k, &l), inst)?;
        let kk = lift(mv(&k, &k), inst)?;
        let ll = lift(mv(&l, &l), inst)?;
        check(&kl * &kl == &kk * &ll, format!("{kl}² ≠ {kk}·{ll}"), inst)
    })());
    let r = classify(&p);
    results.push(check(
        r.class == CriticalityClass::CriticalNotSupercritical && r.maximal_sets == vec![vec![1]],
        format!("class {} with maximal sets {:?}", r.class.name(), r.maximal_sets),
        inst,
    ));
    let space = extremal_space(&p);
    let mut summary = String::new();
    results.push((|| {
        let x = lift(space.clone(), inst)?;
        summary = format!("dim X = {} = {} + {}", x.dim(), x.dim_l, x.components.iter().map(|c| c.dim).sum::<usize>());
        check(
            x.dim() == 5 && x.formula_dim() == 5 && x.decomposition_rank() == 5,
            format!("kernel {}, formula {}, decomposition rank {}", x.dim(), x.formula_dim(), x.decomposition_rank()),
            inst,
        )
    })());
    results.push((|| {
        let f = lift(SupportDifference::new(k.clone(), l.clone(), int(1)), inst)?;
        let out = lift(extremality_test(&p, &f), inst)?;
        let nonzero = out
            .decomposition
            .as_ref()
            .is_some_and(|d| d.components.len() == 1 && !is_zero_vec(&d.components[0]));
        check(out.extremal && nonzero, "h_K − h_L is not extremal with a nonzero degenerate part", inst)
    })());
    report(5, "degenerate example", results, summary)
}

// ---------------------------------------------------------------------------
// 6. supercritical collections

fn supercritical_corpus(cfg: &VerifyConfig) -> Vec<BodyCollection> {
    let mut rng = cfg.rng(6);
    let mut out = vec![coll(3, vec![VPolytope::cube(3)])];
    for k in 0..cfg.count(20) {
        if k % 2 == 0 {
            out.push(coll(3, vec![random_full(&mut rng, 3)]));
        } else {
            let sides: Vec<i64> = (0..4).map(|_| rng.gen_range(1..=2)).collect();
            let other = if rng.gen_bool(0.5) {
                let s: Vec<i64> = (0..4).map(|_| rng.gen_range(1..=2)).collect();
                coord_box(&s)
            } else {
                VPolytope::standard_simplex(4).scale(&int(rng.gen_range(1..=2)))
            };
            out.push(coll(4, vec![coord_box(&sides), other]));
        }
    }
    out
}

fn supercritical_suite(cfg: &VerifyConfig) -> SuiteReport {
    let corpus = supercritical_corpus(cfg);
    let results = corpus
        .par_iter()
        .map(|p| {
            let inst = || collection_json(p);
            check(classify(p).class == CriticalityClass::Supercritical, "not supercritical", inst)?;
            let x = lift(extremal_space(p), inst)?;
            check(x.dim() == p.ambient_dim(), format!("dim X = {} ≠ n", x.dim()), inst)?;
            for b in &x.basis {
                let fit = lift(x.linear_fit(b), inst)?;
                check(fit.is_some(), format!("basis vector {} is not linear on active normals", vector_json(b)), inst)?;
            }
            Ok(())
        })
        .collect();
    report(6, "supercritical extremals are linear", results, "cube + random".into())
}

// ---------------------------------------------------------------------------
// 7. dimension formula on the corpus

/// Named critical collections used by the dimension and local suites.
pub fn critical_corpus() -> Vec<(&'static str, BodyCollection)> {
    let tri = |n, i, j| planar(n, &[[0, 0], [2, 0], [0, 1]], i, j);
    let hex = |n, i, j| planar(n, &[[0, 0], [1, 0], [2, 1], [2, 2], [1, 2], [0, 1]], i, j);
    vec![
        ("square in R3", coll(3, vec![square(3, 0, 1)])),
        ("triangle in R3", coll(3, vec![tri(3, 0, 1)])),
        ("hexagon in R3", coll(3, vec![hex(3, 1, 2)])),
        ("cube + square", degenerate_example()),
        ("box + scaled square", coll(4, vec![coord_box(&[1, 2, 1, 1]), square(4, 0, 1).scale(&int(2))])),
        ("cube + triangle", coll(4, vec![VPolytope::cube(4), tri(4, 0, 1)])),
        ("box + hexagon", coll(4, vec![coord_box(&[2, 1, 1, 1]), hex(4, 2, 3)])),
        ("two squares", coll(4, vec![square(4, 0, 1), square(4, 2, 3)])),
    ]
}

pub fn subcritical_corpus() -> Vec<(&'static str, BodyCollection)> {
    vec![
        ("segment in R3", coll(3, vec![seg(3, 0)])),
        ("square twice", coll(4, vec![square(4, 0, 1), square(4, 0, 1)])),
        ("segment + cube", coll(4, vec![seg(4, 0), VPolytope::cube(4)])),
    ]
}

fn dimension_suite(cfg: &VerifyConfig) -> SuiteReport {
    let mut corpus: Vec<(String, BodyCollection)> = Vec::new();
    for (k, p) in supercritical_corpus(cfg).into_iter().enumerate() {
        corpus.push((format!("supercritical #{k}"), p));
    }
    corpus.extend(critical_corpus().into_iter().map(|(s, p)| (s.to_string(), p)));
    corpus.extend(subcritical_corpus().into_iter().map(|(s, p)| (s.to_string(), p)));
    let results = corpus
        .par_iter()
        .map(|(name, p)| {
            let inst = || json!({"name": name, "collection": collection_json(p)});
            let x: ExtremalSpace = lift(extremal_space(p), inst)?;
            check(
                x.dim() == x.formula_dim() && x.dim() == x.decomposition_rank(),
                format!("kernel {}, formula {}, decomposition rank {}", x.dim(), x.formula_dim(), x.decomposition_rank()),
                inst,
            )
        })
        .collect();
    report(7, "dimension formula", results, "supercritical, critical and subcritical".into())
}

// ---------------------------------------------------------------------------
// 8. local Alexandrov–Fenchel extension

fn local_af_suite(_cfg: &VerifyConfig) -> SuiteReport {
    let corpus = critical_corpus();
    let cases: Vec<(usize, usize)> = corpus
        .iter()
        .enumerate()
        .flat_map(|(k, (_, p))| (0..p.len()).map(move |r| (k, r)))
        .collect();
    let spaces: Vec<afx_core::Result<ExtremalSpace>> = corpus.par_iter().map(|(_, p)| extremal_space(p)).collect();
    let vectors = std::sync::atomic::AtomicUsize::new(0);
    let results = cases
        .par_iter()
        .map(|&(k, r)| {
            let (name, p) = &corpus[k];
            let inst = || json!({"name": name, "r": r + 1, "collection": collection_json(p)});
            let x = lift(spaces[k].clone(), inst)?;
            for z in &x.basis {
                vectors.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
                let ext = lift(local_af_extension(&x.graph, r, z), || {
                    json!({"name": name, "r": r + 1, "z": vector_json(z)})
                })?;
                check(ext.audit_passes(), format!("positive quadratic term for z = {}", vector_json(z)), inst)?;
            }
            Ok(())
        })
        .collect();
    let v = vectors.into_inner();
    report(8, "local extension", results, format!("{v} kernel vectors"))
}

// ---------------------------------------------------------------------------
// 9. propeller structure

fn propeller_suite() -> SuiteReport {
    let plane3 = Subspace::span(3, &[unit_vec(3, 0), unit_vec(3, 1)]).expect("plane");
    let plane4 = Subspace::span(4, &[unit_vec(4, 0), unit_vec(4, 1)]).expect("plane");
    let tri = |n| planar(n, &[[0, 0], [2, 0], [0, 1]], 0, 1);
    let hex = |n| planar(n, &[[0, 0], [1, 0], [2, 1], [2, 2], [1, 2], [0, 1]], 0, 1);
    let mut cases: Vec<(Subspace, BodyCollection)> = Vec::new();
    for first in [square(3, 0, 1), tri(3), hex(3)] {
        for second in [VPolytope::cube(3), coord_box(&[2, 1, 1]), VPolytope::standard_simplex(3)] {
            cases.push((plane3.clone(), coll(3, vec![first.clone(), second])));
        }
    }
    for first in [square(4, 0, 1), square(4, 0, 1).scale(&int(2)), tri(4), hex(4)] {
        for (a, b) in [
            (VPolytope::cube(4), VPolytope::cube(4)),
            (coord_box(&[1, 2, 1, 1]), VPolytope::cube(4)),
            (square(4, 0, 2), coord_box(&[1, 1, 2, 1])),
        ] {
            cases.push((plane4.clone(), coll(4, vec![first.clone(), a, b])));
        }
    }
    let blades = std::sync::atomic::AtomicUsize::new(0);
    let results = cases
        .par_iter()
        .map(|(e, c)| {
            let inst = || collection_json(c);
            let rep = lift(verify_propeller(e, c, 1), inst)?;
            blades.fetch_add(rep.blade_count(), std::sync::atomic::Ordering::Relaxed);
            check(rep.all_pass() && rep.blade_count() > 0, format!("{rep:?}"), inst)
        })
        .collect();
    let b = blades.into_inner();
    report(9, "propeller", results, format!("{b} blade atoms"))
}

// ---------------------------------------------------------------------------
// 10. posets

/// The five-element example `y₁<x<z₁`, `y₁<w₁<w₂<z₁`.
pub fn worked_poset() -> Poset {
    Poset::parse("y1 *x z1 w1 w2\ny1 < x < z1\ny1 < w1 < w2 < z1\n").expect("valid poset")
}

fn poset_check(p: &Poset, with_representation: bool) -> Result<(), Failure> {
    let inst = || json!({"poset": p.to_text()});
    let r = exst_equivalence_audit(p);
    check(r.log_concave, "rank sequence is not log-concave", inst)?;
    check(r.trivial_mismatches.is_empty(), format!("counting test fails at {:?}", r.trivial_mismatches), inst)?;
    check(r.disagreements().is_empty(), format!("equality conditions disagree at {:?}", r.disagreements()), inst)?;
    check(r.shape_ok, "support or equality ranks are not intervals", inst)?;
    if with_representation && p.len() >= 2 {
        let ok = lift(stanley_representation_check(p), inst)?;
        check(ok, "mixed-volume representation fails", inst)?;
    }
    Ok(())
}

fn poset_suite(cfg: &VerifyConfig) -> SuiteReport {
    let mut results = Vec::new();
    let mut exhaustive = 0;
    for n in 1..=6 {
        let all = match pointed_posets(n) {
            Ok(v) => v,
            Err(e) => {
                results.push(Err(fail(format!("generation failed: {e}"), json!({"n": n}))));
                continue;
            }
        };
        exhaustive += all.len();
        results.extend(all.par_iter().map(|p| poset_check(p, n <= 5)).collect::<Vec<_>>());
    }
    let mut rng = cfg.rng(10);
    let random: Vec<Poset> = (0..cfg.count(500))
        .map(|_| {
            let n = rng.gen_range(7..=8);
            random_poset(&mut rng, n).expect("acyclic by construction")
        })
        .collect();
    results.extend(random.par_iter().map(|p| poset_check(p, false)).collect::<Vec<_>>());

    let w = worked_poset();
    let counts = rank_sequence(&w).counts;
    let eq = exst_equivalence_audit(&w).equality_indices();
    results.push(check(
        counts == vec![0, 1, 1, 1, 0] && eq == vec![3],
        format!("worked example gives N = {counts:?}, equality at {eq:?}"),
        || json!({"poset": w.to_text()}),
    ));
    report(10, "poset sequences", results, format!("{exhaustive} posets up to 6 elements + {} random", random.len()))
}
