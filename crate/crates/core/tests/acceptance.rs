//! One PASS/FAIL line per acceptance criterion.

use springer_core::selftest::criterion;

fn gate(id: u8) {
    let result = criterion(id).expect("known criterion").run();
    println!("{}", result.line());
    assert!(result.passed, "{}", result.line());
}

#[test]
fn criterion_01_dimension_formula() {
    gate(1);
}

#[test]
fn criterion_02_smoothness_classifier() {
    gate(2);
}

#[test]
fn criterion_03_worked_examples() {
    gate(3);
}

#[test]
fn criterion_04_evacuation() {
    gate(4);
}

#[test]
fn criterion_05_enumeration() {
    gate(5);
}

#[test]
fn criterion_06_dist_invariance() {
    gate(6);
}

#[test]
fn criterion_07_class_partitions() {
    gate(7);
}

#[test]
fn criterion_08_singular_certificate() {
    gate(8);
}

#[test]
fn criterion_09_smooth_charts() {
    gate(9);
}

#[test]
fn criterion_10_duality() {
    gate(10);
}
