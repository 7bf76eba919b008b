//! Full-scale acceptance battery. Each test prints one pass/fail line
//! for its criterion (visible with `cargo test --test acceptance --
//! --nocapture`) and fails hard if the criterion does not hold.

use divgraph_core::acceptance::{self, CheckOutcome, Scale};

const SEED: u64 = 20250607;

fn assert_outcome(outcome: CheckOutcome) {
    println!("{}", outcome.summary_line());
    assert!(
        outcome.passed(),
        "{} did not pass: {:?}",
        outcome.name,
        outcome.details
    );
}

#[test]
fn criterion_01_table_reproduction() {
    assert_outcome(acceptance::criterion_1(Scale::Full, SEED));
}

#[test]
fn criterion_02_charpoly_divisibility() {
    assert_outcome(acceptance::criterion_2(Scale::Full));
}

#[test]
fn criterion_03_squared_divisibility() {
    assert_outcome(acceptance::criterion_3(Scale::Full));
}

#[test]
fn criterion_04_determinant_periodicity() {
    assert_outcome(acceptance::criterion_4(Scale::Full));
}

#[test]
fn criterion_05_mod6_zero_criterion() {
    assert_outcome(acceptance::criterion_5(Scale::Full));
}

#[test]
fn criterion_06_explicit_kernel() {
    assert_outcome(acceptance::criterion_6(Scale::Full));
}

#[test]
fn criterion_07_explicit_eigenvectors() {
    assert_outcome(acceptance::criterion_7(Scale::Full));
}

#[test]
fn criterion_08_planarity() {
    assert_outcome(acceptance::criterion_8(Scale::Full));
}

#[test]
fn criterion_09_structural_closed_forms() {
    assert_outcome(acceptance::criterion_9(Scale::Full));
}

#[test]
fn criterion_10_spectral_consistency() {
    assert_outcome(acceptance::criterion_10(Scale::Full, SEED));
}

#[test]
fn criterion_11_poset_lift() {
    assert_outcome(acceptance::criterion_11(Scale::Full, SEED));
}
