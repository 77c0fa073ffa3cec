//! Acceptance suite: every release gate in one place.
//!
//! Each test drives one verification suite at its full scale, prints a
//! single pass/fail line (visible with `--nocapture`), and enforces the
//! intended runtime budget. Run with:
//!
//! ```text
//! cargo test -p tolrel --test acceptance -- --nocapture
//! ```

use std::time::{Duration, Instant};

use tolrel::verify::{self, SuiteOutcome};

fn gate(criterion: &str, budget: Duration, outcome: SuiteOutcome, started: Instant) {
    let elapsed = started.elapsed();
    let verdict = if outcome.passed() { "PASS" } else { "FAIL" };
    println!(
        "acceptance {criterion}: {verdict} ({} instances, {:.2?})",
        outcome.checked, elapsed
    );
    for failure in &outcome.failures {
        println!("  - {failure}");
    }
    if outcome.truncated > 0 {
        println!("  - ... and {} more failures", outcome.truncated);
    }
    assert!(outcome.passed(), "criterion {criterion} failed");
    assert!(
        elapsed < budget,
        "criterion {criterion} exceeded its {budget:?} budget: {elapsed:?}"
    );
}

#[test]
fn criterion_01_worked_examples_reproduce() {
    let start = Instant::now();
    gate(
        "01 worked-examples",
        Duration::from_secs(1),
        verify::examples_suite(),
        start,
    );
}

#[test]
fn criterion_02_irredundancy_equals_neighborhood_family() {
    let start = Instant::now();
    gate(
        "02 d1-d2",
        Duration::from_secs(60),
        verify::d1d2_suite(4).unwrap(),
        start,
    );
}

#[test]
fn criterion_03_characterization_theorem() {
    let start = Instant::now();
    gate(
        "03 characterization",
        Duration::from_secs(300),
        verify::characterization_suite(5).unwrap(),
        start,
    );
}

#[test]
fn criterion_04_helly_theorem_and_triples() {
    let start = Instant::now();
    gate(
        "04 helly",
        Duration::from_secs(60),
        verify::helly_suite(4).unwrap(),
        start,
    );
}

#[test]
fn criterion_05_main_equivalence() {
    let start = Instant::now();
    gate(
        "05 main-equivalence",
        Duration::from_secs(300),
        verify::main_equivalence_suite(5).unwrap(),
        start,
    );
}

#[test]
fn criterion_06_lattice_characterization() {
    let start = Instant::now();
    gate(
        "06 c1-c2-c3",
        Duration::from_secs(600),
        verify::c1c2c3_suite(5).unwrap(),
        start,
    );
}

#[test]
fn criterion_07_distributive_corollary() {
    let start = Instant::now();
    gate(
        "07 distributive",
        Duration::from_secs(60),
        verify::distributive_suite(4).unwrap(),
        start,
    );
}

#[test]
fn criterion_08_block_enumeration_oracle() {
    let start = Instant::now();
    gate(
        "08 blocks-oracle",
        Duration::from_secs(120),
        verify::blocks_oracle_suite(500, 12, 0xB10C).unwrap(),
        start,
    );
}

#[test]
fn criterion_09_definable_family_oracle() {
    let start = Instant::now();
    gate(
        "09 definable-oracle",
        Duration::from_secs(120),
        verify::definable_oracle_suite(200, 12, 0xDEF1).unwrap(),
        start,
    );
}

#[test]
fn criterion_10_overlap_fixture() {
    let start = Instant::now();
    gate(
        "10 overlap-fixture",
        Duration::from_secs(1),
        verify::schreider_suite(),
        start,
    );
}
