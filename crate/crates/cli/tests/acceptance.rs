//! One test per acceptance criterion. Each prints a single PASS/FAIL line.
//!
//! Every comparison is exact (rational or `q·√g` equality), so no tolerance
//! enters any criterion. Instances are seeded with seed 0.

use afx::verify::{run_suite, VerifyConfig};

fn criterion(id: usize) {
    let r = run_suite(id, &VerifyConfig::default());
    println!("{}", r.line());
    for d in r.details().iter().take(5) {
        println!("{d}");
    }
    assert!(r.passed(), "criterion {id} failed");
}

#[test]
fn criterion_01_mixed_volume_oracle() {
    criterion(1);
}

#[test]
fn criterion_02_af_inequality() {
    criterion(2);
}

#[test]
fn criterion_03_positivity() {
    criterion(3);
}

#[test]
fn criterion_04_projection_formulas() {
    criterion(4);
}

#[test]
fn criterion_05_degenerate_example() {
    criterion(5);
}

#[test]
fn criterion_06_supercritical_linear() {
    criterion(6);
}

#[test]
fn criterion_07_dimension_formula() {
    criterion(7);
}

#[test]
fn criterion_08_local_extension() {
    criterion(8);
}

#[test]
fn criterion_09_propeller() {
    criterion(9);
}

#[test]
fn criterion_10_poset_sequences() {
    criterion(10);
}
