//! End-to-end verification suites.
//!
//! Each criterion is a self-contained, seeded, deterministic check that can
//! be run from the CLI (`verify <suite>`) or from the acceptance test
//! target. Criteria report pass/fail plus a human-readable detail line;
//! conjectural trend observations additionally report violations as
//! findings without failing the criterion.

use crate::analysis::{
    binomial, check_trends, detect_recurrence, fit_quasi_polynomial, kneser_union_alpha_formula,
    partition_alpha_bound, verify_binomial_lemmas, Verdict,
};
use crate::expand::{build_kneser_union, expand, permutation_vertex_map, vertex_count_poly};
use crate::ideals::check_dim_equals_alpha;
use crate::model::{family, random, CountRange, Family, RandomGenParams};
use crate::poly::Polynomial;
use crate::solver::{
    alpha_bruteforce, max_independent_set, random_graph, scan_alpha, Budget,
};
use num_rational::BigRational;
use num_traits::One;
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::time::{Duration, Instant};

/// Named verification suites runnable from the CLI.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Suite {
    KnownFamilies,
    Trends,
    Lemmas,
    Oracle,
    Structural,
    All,
}

impl Suite {
    pub fn parse(name: &str) -> Option<Suite> {
        match name {
            "known-families" => Some(Suite::KnownFamilies),
            "trends" => Some(Suite::Trends),
            "lemmas" => Some(Suite::Lemmas),
            "oracle" => Some(Suite::Oracle),
            "structural" => Some(Suite::Structural),
            "all" => Some(Suite::All),
            _ => None,
        }
    }

    pub const NAMES: &'static [&'static str] = &[
        "known-families",
        "trends",
        "lemmas",
        "oracle",
        "structural",
        "all",
    ];
}

/// Outcome of one criterion.
#[derive(Clone, Debug)]
pub struct CriterionResult {
    /// Stable identifier, e.g. `C1`.
    pub id: &'static str,
    pub name: &'static str,
    pub passed: bool,
    /// One-line summary; failure details or findings when present.
    pub detail: String,
    pub millis: u128,
}

impl CriterionResult {
    pub fn line(&self) -> String {
        format!(
            "{} {:<28} {} ({} ms){}",
            self.id,
            self.name,
            if self.passed { "PASS" } else { "FAIL" },
            self.millis,
            if self.detail.is_empty() {
                String::new()
            } else {
                format!(" - {}", self.detail)
            }
        )
    }
}

fn run_criterion(
    id: &'static str,
    name: &'static str,
    body: impl FnOnce() -> Result<String, String>,
) -> CriterionResult {
    let started = Instant::now();
    let (passed, detail) = match body() {
        Ok(detail) => (true, detail),
        Err(detail) => (false, detail),
    };
    CriterionResult {
        id,
        name,
        passed,
        detail,
        millis: started.elapsed().as_millis(),
    }
}

/// Runs the criteria of one suite, in criterion order.
pub fn run_suite(suite: Suite) -> Vec<CriterionResult> {
    let mut results = Vec::new();
    let all = suite == Suite::All;
    if all || suite == Suite::KnownFamilies {
        results.push(criterion_1_ekr_family());
        results.push(criterion_2_johnson_family());
        results.push(criterion_5_kneser_union());
        results.push(criterion_6_stable_degree_examples());
    }
    if all || suite == Suite::Oracle {
        results.push(criterion_3_edge_ideal_theorem());
        results.push(criterion_4_oracle_equivalence());
    }
    if all || suite == Suite::Trends {
        results.push(criterion_7_vertex_linear());
        results.push(criterion_8_trend_reproduction());
    }
    if all || suite == Suite::Lemmas {
        results.push(criterion_9_binomial_lemmas());
    }
    if all || suite == Suite::Structural {
        results.push(criterion_10_structural());
    }
    results
}

fn scan_budget() -> Budget {
    Budget::new(Some(10_000_000), Some(Duration::from_secs(60)))
}

/// C1: alpha of the Kneser-2 family is `n - 1` on `4..=12`.
pub fn criterion_1_ekr_family() -> CriterionResult {
    run_criterion("C1", "ekr-family", || {
        let c = family(&Family::Kneser2).expect("family");
        let seq = scan_alpha(&c, 4, 12, scan_budget()).map_err(|e| e.to_string())?;
        let expected: Vec<usize> = (4u32..=12).map(|n| (n - 1) as usize).collect();
        if !seq.rows.iter().all(|r| r.is_complete()) {
            return Err("budget exceeded inside the scan".to_string());
        }
        let got = seq.alphas();
        if got == expected {
            Ok(format!("alpha(G_n) = n - 1 for n in [4, 12]: {got:?}"))
        } else {
            Err(format!("expected {expected:?}, got {got:?}"))
        }
    })
}

/// C2: alpha of the Johnson-2 family is `floor(n/2)` on `2..=13`, the fit is
/// period 2 / degree 1, and the minimal recurrence has order 3 with
/// denominator `(1 - t)^2 (1 + t)`.
pub fn criterion_2_johnson_family() -> CriterionResult {
    run_criterion("C2", "johnson-family", || {
        let c = family(&Family::Johnson2).expect("family");
        let seq = scan_alpha(&c, 2, 13, scan_budget()).map_err(|e| e.to_string())?;
        let expected: Vec<usize> = (2u32..=13).map(|n| (n / 2) as usize).collect();
        let got = seq.alphas();
        if got != expected {
            return Err(format!("alpha mismatch: expected {expected:?}, got {got:?}"));
        }
        let fit = fit_quasi_polynomial(&seq, 4, 3).map_err(|e| e.to_string())?;
        if fit.period != 2 || fit.degree() != 1 {
            return Err(format!(
                "expected period 2 / degree 1, got period {} / degree {}",
                fit.period,
                fit.degree()
            ));
        }
        let rec = detect_recurrence(&seq).map_err(|e| e.to_string())?;
        // (1 - t)^2 (1 + t) expanded: 1 - t - t^2 + t^3.
        let expected_denominator = {
            let one = Polynomial::constant(BigRational::one());
            let t = Polynomial::from_coeffs(vec![
                BigRational::one() - BigRational::one(),
                BigRational::one(),
            ]);
            let one_minus_t = one.add(&t.scale(&-BigRational::one()));
            let one_plus_t = one.add(&t);
            one_minus_t.mul(&one_minus_t).mul(&one_plus_t)
        };
        if rec.order != 3 || rec.denominator != expected_denominator {
            return Err(format!(
                "expected order 3 with denominator (1 - t)^2 (1 + t), got {}",
                rec.describe()
            ));
        }
        Ok(format!("{}; {}", fit.describe(), rec.describe()))
    })
}

/// C3: Krull dimension (independent vertex-cover search) equals alpha
/// (brute force) on 100 seeded random graphs up to 20 vertices, plus `K_5`
/// and the Kneser graph at `n = 4` with their known dimensions 1 and 3.
pub fn criterion_3_edge_ideal_theorem() -> CriterionResult {
    run_criterion("C3", "edge-ideal-theorem", || {
        let mut checked = 0usize;
        let k5 = expand(&family(&Family::Complete).expect("family"), 5).expect("expand");
        let report = check_dim_equals_alpha(&k5).map_err(|e| e.to_string())?;
        if !report.equal || report.krull_dim != 1 {
            return Err(format!("K_5: dim {} alpha {}", report.krull_dim, report.alpha));
        }
        checked += 1;
        let kg42 = expand(&family(&Family::Kneser2).expect("family"), 4).expect("expand");
        let report = check_dim_equals_alpha(&kg42).map_err(|e| e.to_string())?;
        if !report.equal || report.krull_dim != 3 {
            return Err(format!(
                "KG_(4,2): dim {} alpha {}",
                report.krull_dim, report.alpha
            ));
        }
        checked += 1;
        let mut rng = ChaCha8Rng::seed_from_u64(0x1dea1);
        for i in 0..100u64 {
            let v = rng.random_range(4..=20usize);
            let p = rng.random_range(0.1..=0.9f64);
            let g = random_graph(v, p, 0x1dea1_0000 + i);
            let report = check_dim_equals_alpha(&g).map_err(|e| e.to_string())?;
            if !report.equal {
                return Err(format!(
                    "random graph {i} (v = {v}, p = {p:.2}): dim {} != alpha {}",
                    report.krull_dim, report.alpha
                ));
            }
            checked += 1;
        }
        Ok(format!("dim R/I = alpha on all {checked} graphs"))
    })
}

/// C4: the branch-and-bound solver agrees with the brute-force oracle on
/// 200 seeded random graphs, up to 22 vertices, densities 0.1 - 0.9.
pub fn criterion_4_oracle_equivalence() -> CriterionResult {
    run_criterion("C4", "solver-oracle-equivalence", || {
        let mut rng = ChaCha8Rng::seed_from_u64(0x04ac1e);
        for i in 0..200u64 {
            let v = rng.random_range(4..=22usize);
            let p = rng.random_range(0.1..=0.9f64);
            let g = random_graph(v, p, 0x04ac1e_0000 + i);
            let fast = max_independent_set(&g, Budget::UNLIMITED)
                .map_err(|e| e.to_string())?;
            let slow = alpha_bruteforce(&g).map_err(|e| e.to_string())?;
            if fast.alpha != slow {
                return Err(format!(
                    "instance {i} (v = {v}, p = {p:.2}): solver {} != oracle {slow}",
                    fast.alpha
                ));
            }
            if !g.is_independent_set(&fast.witness) {
                return Err(format!("instance {i}: witness is not independent"));
            }
        }
        Ok("solver = oracle on 200 random instances".to_string())
    })
}

/// C5: solver alpha of the Kneser union equals `C(n-1, 2)` for
/// `k in {2, 3}`, `r = 3`, `n in {6, 7}`. Budget exhaustion is a failure.
pub fn criterion_5_kneser_union() -> CriterionResult {
    run_criterion("C5", "kneser-union-closed-form", || {
        let budget = Budget::new(Some(200_000_000), Some(Duration::from_secs(480)));
        let mut lines = Vec::new();
        for k in [2u32, 3] {
            for n in [6u32, 7] {
                let g = build_kneser_union(k, 3, n);
                let expected = binomial((n - 1) as u64, 2) as usize;
                let formula = kneser_union_alpha_formula(k, 3, n)
                    .map_err(|e| e.to_string())? as usize;
                if formula != expected {
                    return Err(format!("closed form disagrees at k={k}, n={n}"));
                }
                let res = max_independent_set(&g, budget).map_err(|e| {
                    format!("k={k}, n={n}: {e}")
                })?;
                if res.alpha != expected {
                    return Err(format!(
                        "k={k}, n={n}: solver alpha {} != C({}, 2) = {expected}",
                        res.alpha,
                        n - 1
                    ));
                }
                lines.push(format!(
                    "k={k},n={n}: alpha={} ({} nodes)",
                    res.alpha, res.nodes_explored
                ));
            }
        }
        Ok(lines.join("; "))
    })
}

/// C6: the three stable-degree example families match their closed forms:
/// `max(5, n)`, `min(n, 4)`, and the two-copy Kneser-2 pattern.
pub fn criterion_6_stable_degree_examples() -> CriterionResult {
    run_criterion("C6", "stable-degree-examples", || {
        let budget = scan_budget();
        let singles = family(&Family::SingletonsVsOrbit { k: 5 }).expect("family");
        let seq = scan_alpha(&singles, 2, 9, budget).map_err(|e| e.to_string())?;
        let expected: Vec<usize> = (2u32..=9).map(|n| (n.max(5)) as usize).collect();
        if seq.alphas() != expected {
            return Err(format!(
                "singletons-vs-orbit: expected {expected:?}, got {:?}",
                seq.alphas()
            ));
        }
        let copies = family(&Family::CopiesOfComplete { k: 4 }).expect("family");
        let seq = scan_alpha(&copies, 2, 9, budget).map_err(|e| e.to_string())?;
        let expected: Vec<usize> = (2u32..=9).map(|n| (n.min(4)) as usize).collect();
        if seq.alphas() != expected {
            return Err(format!(
                "copies-of-complete: expected {expected:?}, got {:?}",
                seq.alphas()
            ));
        }
        let kneser_copies = family(&Family::CopiesOfKneser2 { k: 2 }).expect("family");
        let seq = scan_alpha(&kneser_copies, 2, 10, budget).map_err(|e| e.to_string())?;
        let expected: Vec<usize> = (2u32..=10)
            .map(|n| if n <= 6 && n % 3 == 0 { n } else { n - 1 } as usize)
            .collect();
        if seq.alphas() != expected {
            return Err(format!(
                "copies-of-kneser2: expected {expected:?}, got {:?}",
                seq.alphas()
            ));
        }
        Ok("max(5,n), min(n,4) and the two-copy Kneser-2 pattern all match".to_string())
    })
}

/// C7: 30 seeded random vertex-linear classification graphs (no pair
/// orbits) all admit a period-1, degree <= 1 fit with stable degree <= 10
/// over `n in [2, 14]`.
pub fn criterion_7_vertex_linear() -> CriterionResult {
    run_criterion("C7", "vertex-linear-alpha-is-linear", || {
        let budget = scan_budget();
        let mut stable_degrees = Vec::new();
        for i in 0..30u64 {
            let params = RandomGenParams {
                pair_orbits: CountRange::exact(0),
                linear_orbits: CountRange::new(1, 3),
                singletons: CountRange::new(0, 2),
                edge_probability: 0.5,
                seed: 0x11bea4_0000 + i,
            };
            let c = random(&params).map_err(|e| e.to_string())?;
            let seq = scan_alpha(&c, 2, 14, budget).map_err(|e| e.to_string())?;
            let fit = fit_quasi_polynomial(&seq, 1, 1)
                .map_err(|e| format!("graph {i} ({}): {e}", c.digest()))?;
            if fit.period != 1 || fit.degree() > 1 {
                return Err(format!(
                    "graph {i}: period {} degree {}",
                    fit.period,
                    fit.degree()
                ));
            }
            if fit.stable_degree > 10 {
                return Err(format!(
                    "graph {i}: stable degree {} > 10",
                    fit.stable_degree
                ));
            }
            stable_degrees.push(fit.stable_degree);
        }
        let max_stable = stable_degrees.iter().max().copied().unwrap_or(0);
        Ok(format!(
            "30 vertex-linear graphs fit with period 1, degree <= 1; max stable degree {max_stable}"
        ))
    })
}

/// C8: 50 seeded random unordered-pair classification graphs all fit within
/// period <= 4 / degree <= 3 on `n in [2, 11]`; trends 1 - 3 are scored and
/// violations are reported as findings (only fit errors fail).
pub fn criterion_8_trend_reproduction() -> CriterionResult {
    run_criterion("C8", "trend-reproduction", || {
        let budget = Budget::new(Some(50_000_000), Some(Duration::from_secs(120)));
        let mut findings = Vec::new();
        let mut holds = [0usize; 3];
        let mut applicable2 = 0usize;
        for i in 0..50u64 {
            let params = RandomGenParams {
                pair_orbits: CountRange::new(1, 2),
                linear_orbits: CountRange::new(0, 1),
                singletons: CountRange::new(0, 1),
                edge_probability: 0.5,
                seed: 0x72e2d_0000 + i,
            };
            let c = random(&params).map_err(|e| e.to_string())?;
            let seq = scan_alpha(&c, 2, 11, budget).map_err(|e| e.to_string())?;
            let fit = fit_quasi_polynomial(&seq, 4, 3)
                .map_err(|e| format!("graph {i} ({}): {e}", c.digest()))?;
            let report = check_trends(&c, &seq, &fit);
            if report.trend1 == Verdict::Holds {
                holds[0] += 1;
            } else {
                findings.push(format!(
                    "graph {i}: trend 1 violated (period {}, degree {})",
                    report.period, report.degree
                ));
            }
            if !report.has_johnson_orbit {
                applicable2 += 1;
                if report.trend2 == Verdict::Holds {
                    holds[1] += 1;
                } else {
                    findings.push(format!(
                        "graph {i}: trend 2 violated (no Johnson orbit but period {})",
                        report.period
                    ));
                }
            }
            if report.trend3 == Verdict::Holds {
                holds[2] += 1;
            } else {
                findings.push(format!(
                    "graph {i}: trend 3 violated (degree {}, loop-free pair orbits {:?})",
                    report.degree, report.loop_free_pair_orbits
                ));
            }
        }
        let summary = format!(
            "trend1 {}/50, trend2 {}/{} (applicable), trend3 {}/50{}",
            holds[0],
            holds[1],
            applicable2,
            holds[2],
            if findings.is_empty() {
                "; no violations".to_string()
            } else {
                format!("; findings: {}", findings.join(" | "))
            }
        );
        Ok(summary)
    })
}

/// C9: the binomial inequalities hold exhaustively for `r <= 10` up to 60,
/// and the partition bound matches brute force on every Kneser graph with
/// `r <= 3`, `m <= 8`.
pub fn criterion_9_binomial_lemmas() -> CriterionResult {
    run_criterion("C9", "binomial-lemmas", || {
        let report = verify_binomial_lemmas(10, 60);
        if !report.violations.is_empty() {
            return Err(format!("violations: {:?}", report.violations));
        }
        // Brute-force alpha of KG_{m,r} for the Lemma grid. The production
        // oracle is capped at 25 vertices, so the suite carries its own
        // uncapped take/leave recursion for these slightly larger graphs.
        fn alpha_exhaustive(g: &crate::expand::ConcreteGraph) -> usize {
            fn go(cands: u64, closed: &[u64]) -> usize {
                if cands == 0 {
                    return 0;
                }
                let v = cands.trailing_zeros() as usize;
                let take = 1 + go(cands & !closed[v], closed);
                let leave = go(cands & !(1u64 << v), closed);
                take.max(leave)
            }
            let v = g.vertex_count();
            assert!(v <= 64);
            let mut closed = vec![0u64; v];
            for u in 0..v {
                closed[u] |= 1 << u;
                for &w in g.neighbors(u) {
                    closed[u] |= 1 << w;
                }
            }
            let all = if v == 0 { 0 } else { (1u64 << v) - 1 };
            go(all, &closed)
        }
        let mut grid = 0usize;
        for r in 1..=3u32 {
            for m in 0..=8u32 {
                let expected = partition_alpha_bound(r, m);
                let got = if m < r {
                    0
                } else {
                    alpha_exhaustive(&build_kneser_union(1, r, m)) as u64
                };
                if expected != got {
                    return Err(format!(
                        "partition bound (r={r}, m={m}): formula {expected}, brute force {got}"
                    ));
                }
                grid += 1;
            }
        }
        Ok(format!(
            "{} inequality cases, zero violations; partition bound matches brute force on {grid} grid points",
            report.cases_checked
        ))
    })
}

/// C10: equivariance and induced-subgraph invariants on 50 random
/// `(c, n <= 8, sigma)` triples; vertex counts match the polynomial for
/// `n in [0, 12]`.
pub fn criterion_10_structural() -> CriterionResult {
    run_criterion("C10", "structural-invariants", || {
        let mut rng = ChaCha8Rng::seed_from_u64(0x57a7);
        for i in 0..50u64 {
            let params = RandomGenParams {
                pair_orbits: CountRange::new(0, 2),
                linear_orbits: CountRange::new(0, 2),
                singletons: CountRange::new(0, 1),
                edge_probability: 0.5,
                seed: 0x57a7_0000 + i,
            };
            let c = random(&params).map_err(|e| e.to_string())?;
            let n = rng.random_range(2..=8u32);
            let g = expand(&c, n).map_err(|e| e.to_string())?;

            // Equivariance: a random relabeling is an automorphism.
            let mut sigma: Vec<u32> = (1..=n).collect();
            sigma.shuffle(&mut rng);
            let map = permutation_vertex_map(&g, &sigma)
                .ok_or_else(|| format!("graph {i}: labels not closed under sigma"))?;
            for u in 0..g.vertex_count() {
                for v in u + 1..g.vertex_count() {
                    if g.is_adjacent(u, v) != g.is_adjacent(map[u], map[v]) {
                        return Err(format!(
                            "graph {i}: relabeling by {sigma:?} is not an automorphism at ({u}, {v})"
                        ));
                    }
                }
            }

            // Induced-subgraph property of the inclusion G_n -> G_{n+1}.
            let inc = crate::expand::inclusion_map(&c, n).map_err(|e| e.to_string())?;
            let big = expand(&c, n + 1).map_err(|e| e.to_string())?;
            for u in 0..g.vertex_count() {
                for v in u + 1..g.vertex_count() {
                    if g.is_adjacent(u, v)
                        != big.is_adjacent(inc[u] as usize, inc[v] as usize)
                    {
                        return Err(format!("graph {i}: inclusion image not induced"));
                    }
                }
            }

            // Vertex counts against the closed-form polynomial.
            let poly = vertex_count_poly(&c);
            for m in 0..=12u32 {
                let h = expand(&c, m).map_err(|e| e.to_string())?;
                if !poly.matches(m as i64, h.vertex_count() as i64) {
                    return Err(format!(
                        "graph {i}: |V(G_{m})| = {} but polynomial gives {}",
                        h.vertex_count(),
                        poly
                    ));
                }
            }
        }
        Ok("50 triples: equivariance, induced inclusions and vertex counts all hold".to_string())
    })
}
