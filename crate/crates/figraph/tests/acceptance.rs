//! End-to-end acceptance suite: runs every verification criterion and
//! prints one pass/fail line per criterion.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.

use figraph::verify::{
    criterion_10_structural, criterion_1_ekr_family, criterion_2_johnson_family,
    criterion_3_edge_ideal_theorem, criterion_4_oracle_equivalence, criterion_5_kneser_union,
    criterion_6_stable_degree_examples, criterion_7_vertex_linear,
    criterion_8_trend_reproduction, criterion_9_binomial_lemmas, CriterionResult,
};

fn check(result: CriterionResult) {
    println!("{}", result.line());
    assert!(result.passed, "{}", result.line());
}

#[test]
fn c1_ekr_family() {
    check(criterion_1_ekr_family());
}

#[test]
fn c2_johnson_family() {
    check(criterion_2_johnson_family());
}

#[test]
fn c3_edge_ideal_theorem() {
    check(criterion_3_edge_ideal_theorem());
}

#[test]
fn c4_solver_oracle_equivalence() {
    check(criterion_4_oracle_equivalence());
}

#[test]
fn c5_kneser_union_closed_form() {
    check(criterion_5_kneser_union());
}

#[test]
fn c6_stable_degree_examples() {
    check(criterion_6_stable_degree_examples());
}

#[test]
fn c7_vertex_linear_families() {
    check(criterion_7_vertex_linear());
}

#[test]
fn c8_trend_reproduction() {
    check(criterion_8_trend_reproduction());
}

#[test]
fn c9_binomial_lemmas() {
    check(criterion_9_binomial_lemmas());
}

#[test]
fn c10_structural_invariants() {
    check(criterion_10_structural());
}
