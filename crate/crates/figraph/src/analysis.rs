//! Sequence analysis for alpha scans.
//!
//! * [`fit_quasi_polynomial`] finds the lexicographically minimal
//!   `(period, degree)` quasi-polynomial that reproduces the tail of a
//!   sequence exactly (integer equality; everything is exact rational
//!   arithmetic).
//! * [`detect_recurrence`] finds the minimal-order linear recurrence over
//!   the rationals that the data satisfies, together with the denominator
//!   polynomial of the corresponding rational generating function.
//! * [`check_trends`] scores a fit against the three empirical expectations
//!   for unordered-pair families: (1) period at most 2 with degree at most
//!   2; (2) period 1 when no Johnson-type orbit is present; (3) degree 2
//!   exactly when a loop-free pair orbit is present.
//! * [`kneser_union_alpha_formula`], [`partition_alpha_bound`] and
//!   [`verify_binomial_lemmas`] are the closed forms and inequalities that
//!   pin down alpha for unions of Kneser graphs.

use crate::model::ClassificationGraph;
use crate::poly::Polynomial;
use crate::solver::AlphaSequence;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

// ============================================================================
// Binomials
// ============================================================================

/// Exact `C(n, k)`; zero when `k > n`. Intermediate products stay integral.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut res: u128 = 1;
    for i in 1..=k {
        res = res * (n - k + i) as u128 / i as u128;
    }
    res
}

// ============================================================================
// Quasi-polynomial fitting
// ============================================================================

/// A periodic family of polynomials reproducing a sequence's tail exactly.
#[derive(Clone, Debug)]
pub struct QuasiPolynomialFit {
    /// Number of residue classes; piece `i` applies to `n = i (mod period)`.
    pub period: u32,
    pub pieces: Vec<Polynomial>,
    /// Smallest `n0` such that the fit matches every data point `n >= n0`.
    pub stable_degree: i64,
    /// Minimum over residue classes of matched points beyond those used for
    /// interpolation.
    pub points_confirmed_per_class: usize,
}

impl QuasiPolynomialFit {
    /// Largest degree among the pieces.
    pub fn degree(&self) -> usize {
        self.pieces.iter().map(Polynomial::degree).max().unwrap_or(0)
    }

    pub fn piece_for(&self, n: i64) -> &Polynomial {
        &self.pieces[n.rem_euclid(self.period as i64) as usize]
    }

    pub fn eval(&self, n: i64) -> BigRational {
        self.piece_for(n).eval_int(n)
    }

    pub fn matches(&self, n: i64, value: i64) -> bool {
        self.piece_for(n).matches(n, value)
    }

    /// `period 1, piece n - 1, stable degree 4` style rendering.
    pub fn describe(&self) -> String {
        if self.period == 1 {
            format!(
                "period 1, piece {}, stable degree {}",
                self.pieces[0].display("n"),
                self.stable_degree
            )
        } else {
            let pieces: Vec<String> = self
                .pieces
                .iter()
                .enumerate()
                .map(|(r, p)| format!("n = {r} mod {}: {}", self.period, p.display("n")))
                .collect();
            format!(
                "period {}, pieces [{}], stable degree {}",
                self.period,
                pieces.join("; "),
                self.stable_degree
            )
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum FitError {
    #[error("no fit with period <= {max_period} and degree <= {max_degree}")]
    NoFit { max_period: u32, max_degree: u32 },
    #[error("insufficient data: {0}")]
    InsufficientData(String),
    #[error("sequence has incomplete or non-contiguous rows")]
    IncompleteSequence,
}

/// Fits `(n, value)` points, which must be contiguous in `n` and ascending.
///
/// Search order is periods `1..=max_period`, and degrees `0..=max_degree`
/// within a period, so the returned fit minimizes `(period, degree)`
/// lexicographically. For each candidate, every residue class interpolates
/// on its latest `degree + 1` points and must then confirm on at least
/// `degree + 2` further points inside the stable region.
pub fn fit_points(
    points: &[(i64, i64)],
    max_period: u32,
    max_degree: u32,
) -> Result<QuasiPolynomialFit, FitError> {
    if points.is_empty() {
        return Err(FitError::InsufficientData("empty sequence".to_string()));
    }
    debug_assert!(points.windows(2).all(|w| w[1].0 == w[0].0 + 1));

    let mut any_feasible = false;
    for period in 1..=max_period {
        for degree in 0..=max_degree {
            let d = degree as usize;
            let mut classes: Vec<Vec<(i64, i64)>> = vec![Vec::new(); period as usize];
            for &(n, a) in points {
                classes[n.rem_euclid(period as i64) as usize].push((n, a));
            }
            // Interpolation plus the confirmation quota, per class.
            let need = (d + 1) + (d + 2);
            if classes.iter().any(|c| c.len() < need) {
                continue;
            }
            any_feasible = true;

            let pieces: Vec<Polynomial> = classes
                .iter()
                .map(|class| Polynomial::interpolate(&class[class.len() - (d + 1)..]))
                .collect();
            let fit = QuasiPolynomialFit {
                period,
                pieces,
                stable_degree: 0,
                points_confirmed_per_class: 0,
            };

            // Walk backward: the stable degree is one past the largest
            // mismatching n (or the first data point when all match).
            let mut stable = points[0].0;
            for &(n, a) in points {
                if !fit.matches(n, a) {
                    stable = stable.max(n + 1);
                }
            }
            let confirmed = classes
                .iter()
                .map(|class| {
                    let matched = class.iter().filter(|&&(n, _)| n >= stable).count();
                    matched.saturating_sub(d + 1)
                })
                .min()
                .unwrap_or(0);
            if confirmed >= d + 2 {
                return Ok(QuasiPolynomialFit {
                    stable_degree: stable,
                    points_confirmed_per_class: confirmed,
                    ..fit
                });
            }
        }
    }
    if any_feasible {
        Err(FitError::NoFit {
            max_period,
            max_degree,
        })
    } else {
        Err(FitError::InsufficientData(format!(
            "{} points cannot support any period <= {max_period}, degree <= {max_degree} fit",
            points.len()
        )))
    }
}

/// [`fit_points`] over a scanned alpha sequence. All rows must be complete
/// and contiguous.
pub fn fit_quasi_polynomial(
    seq: &AlphaSequence,
    max_period: u32,
    max_degree: u32,
) -> Result<QuasiPolynomialFit, FitError> {
    let points = seq.complete_points().ok_or(FitError::IncompleteSequence)?;
    fit_points(&points, max_period, max_degree)
}

// ============================================================================
// Linear recurrences
// ============================================================================

/// A linear recurrence `a(n) = sum_{i=1..order} c_i a(n-i)` holding at every
/// data index past the first `order`, with the denominator of the implied
/// rational generating function.
#[derive(Clone, Debug)]
pub struct RecurrenceGuess {
    pub order: usize,
    /// `c_1 .. c_order`.
    pub coefficients: Vec<BigRational>,
    /// `1 - c_1 t - ... - c_order t^order`.
    pub denominator: Polynomial,
}

impl RecurrenceGuess {
    pub fn describe(&self) -> String {
        if self.order == 0 {
            return "order 0 (zero sequence), denominator 1".to_string();
        }
        let terms: Vec<String> = self
            .coefficients
            .iter()
            .enumerate()
            .map(|(i, c)| format!("({})*a(n-{})", c, i + 1))
            .collect();
        format!(
            "order {}: a(n) = {}; denominator {}",
            self.order,
            terms.join(" + "),
            self.denominator.display("t")
        )
    }
}

/// Solves `rows * x = rhs` exactly (each row is coefficients plus rhs).
/// Returns any solution with free variables at zero, or `None` when the
/// system is inconsistent.
fn solve_exact(mut rows: Vec<Vec<BigRational>>, unknowns: usize) -> Option<Vec<BigRational>> {
    let mut rank = 0usize;
    let mut pivot_cols = Vec::new();
    for col in 0..unknowns {
        let Some(p) = (rank..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let inv = rows[rank][col].clone();
        for x in rows[rank].iter_mut() {
            *x = &*x / &inv;
        }
        for i in 0..rows.len() {
            if i != rank && !rows[i][col].is_zero() {
                let f = rows[i][col].clone();
                for c in col..=unknowns {
                    let delta = &f * &rows[rank][c];
                    rows[i][c] = &rows[i][c] - delta;
                }
            }
        }
        pivot_cols.push(col);
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    if rows.iter().skip(rank).any(|r| !r[unknowns].is_zero()) {
        return None;
    }
    let mut sol = vec![BigRational::zero(); unknowns];
    for (i, &col) in pivot_cols.iter().enumerate() {
        sol[col] = rows[i][unknowns].clone();
    }
    Some(sol)
}

/// Finds the minimal-order recurrence satisfied at every index past the
/// first `order` values, trying orders `0, 1, 2, ...` against the linear
/// system of all available equations. An order `L` result requires at least
/// `2L + 1` data points.
pub fn detect_recurrence_values(values: &[i64]) -> Result<RecurrenceGuess, FitError> {
    let len = values.len();
    if len == 0 {
        return Err(FitError::InsufficientData("empty sequence".to_string()));
    }
    let max_order = (len - 1) / 2;
    for order in 0..=max_order {
        if order == 0 {
            if values.iter().all(|&v| v == 0) {
                return Ok(RecurrenceGuess {
                    order: 0,
                    coefficients: Vec::new(),
                    denominator: Polynomial::constant(BigRational::one()),
                });
            }
            continue;
        }
        let rows: Vec<Vec<BigRational>> = (order..len)
            .map(|i| {
                let mut row: Vec<BigRational> = (1..=order)
                    .map(|j| BigRational::from_integer(BigInt::from(values[i - j])))
                    .collect();
                row.push(BigRational::from_integer(BigInt::from(values[i])));
                row
            })
            .collect();
        if let Some(coefficients) = solve_exact(rows, order) {
            let mut denom = vec![BigRational::one()];
            denom.extend(coefficients.iter().map(|c| -c));
            return Ok(RecurrenceGuess {
                order,
                coefficients,
                denominator: Polynomial::from_coeffs(denom),
            });
        }
    }
    Err(FitError::NoFit {
        max_period: 0,
        max_degree: max_order as u32,
    })
}

/// [`detect_recurrence_values`] over a scanned alpha sequence.
pub fn detect_recurrence(seq: &AlphaSequence) -> Result<RecurrenceGuess, FitError> {
    let points = seq.complete_points().ok_or(FitError::IncompleteSequence)?;
    let values: Vec<i64> = points.iter().map(|&(_, a)| a).collect();
    detect_recurrence_values(&values)
}

// ============================================================================
// Trend checks
// ============================================================================

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Verdict {
    Holds,
    Violated,
}

impl Verdict {
    fn from_bool(b: bool) -> Verdict {
        if b {
            Verdict::Holds
        } else {
            Verdict::Violated
        }
    }
}

/// Scorecard of one classification graph's fitted sequence against the
/// three expected patterns. Witness data (period, degree, orbit ids) rides
/// along so violations are directly inspectable.
#[derive(Clone, Debug, Serialize)]
pub struct TrendReport {
    pub n_min: u32,
    pub n_max: u32,
    pub period: u32,
    pub degree: usize,
    pub stable_degree: i64,
    pub has_johnson_orbit: bool,
    pub has_isolated_johnson_orbit: bool,
    pub johnson_orbits: Vec<String>,
    pub loop_free_pair_orbits: Vec<String>,
    /// Period at most 2 and degree at most 2.
    pub trend1: Verdict,
    /// No Johnson-type orbit (loop set exactly `{PairShare1}`) implies
    /// period 1.
    pub trend2: Verdict,
    /// Same, under the stricter reading that also requires the Johnson-type
    /// orbit to have no cross edges.
    pub trend2_strict: Verdict,
    /// Degree is 2 exactly when some pair orbit has no loops.
    pub trend3: Verdict,
}

pub fn check_trends(
    c: &ClassificationGraph,
    seq: &AlphaSequence,
    fit: &QuasiPolynomialFit,
) -> TrendReport {
    let degree = fit.degree();
    let has_johnson = c.has_johnson_orbit();
    let has_isolated_johnson = c.has_isolated_johnson_orbit();
    let quadratic_orbit = c.has_quadratic_independent_orbit();
    TrendReport {
        n_min: seq.rows.first().map(|r| r.n).unwrap_or(0),
        n_max: seq.rows.last().map(|r| r.n).unwrap_or(0),
        period: fit.period,
        degree,
        stable_degree: fit.stable_degree,
        has_johnson_orbit: has_johnson,
        has_isolated_johnson_orbit: has_isolated_johnson,
        johnson_orbits: c.johnson_orbits(),
        loop_free_pair_orbits: c.loop_free_pair_orbits(),
        trend1: Verdict::from_bool(fit.period <= 2 && degree <= 2),
        trend2: Verdict::from_bool(has_johnson || fit.period == 1),
        trend2_strict: Verdict::from_bool(has_isolated_johnson || fit.period == 1),
        trend3: Verdict::from_bool((degree == 2) == quadratic_orbit),
    }
}

// ============================================================================
// Closed forms for Kneser unions
// ============================================================================

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum ClosedFormError {
    #[error("no proven closed form for k = {k}, r = {r}, n = {n}")]
    Unsupported { k: u32, r: u32, n: u32 },
}

/// Exact alpha of [`crate::expand::build_kneser_union`] on the proven
/// ranges:
///
/// * `r = 1`: `min(n, k)`;
/// * `r = 2`, `n >= 2`: `n` when `n <= 3k` and `3 | n`, else `n - 1`;
/// * `r >= 3`, `n >= 2r`: `C(n-1, r-1)`.
///
/// Everything else is out of the proven range and reports `Unsupported`.
pub fn kneser_union_alpha_formula(k: u32, r: u32, n: u32) -> Result<u64, ClosedFormError> {
    let unsupported = Err(ClosedFormError::Unsupported { k, r, n });
    if k < 1 {
        return unsupported;
    }
    match r {
        0 => unsupported,
        1 => Ok(n.min(k) as u64),
        2 => {
            if n < 2 {
                unsupported
            } else if n <= 3 * k && n % 3 == 0 {
                Ok(n as u64)
            } else {
                Ok((n - 1) as u64)
            }
        }
        _ => {
            if n >= 2 * r {
                Ok(binomial((n - 1) as u64, (r - 1) as u64) as u64)
            } else {
                unsupported
            }
        }
    }
}

/// Largest independent subset of one Kneser-graph block whose labels are
/// confined to an `m`-element ground set:
///
/// * `0` when `m < r` (no vertices at all);
/// * `C(m, r)` when `r <= m <= 2r - 1` (no two r-subsets are disjoint);
/// * `C(m-1, r-1)` when `m >= 2r` (the intersecting-family bound).
pub fn partition_alpha_bound(r: u32, m: u32) -> u64 {
    assert!(r >= 1, "subset size must be at least 1");
    if m < r {
        0
    } else if m <= 2 * r - 1 {
        binomial(m as u64, r as u64) as u64
    } else {
        binomial((m - 1) as u64, (r - 1) as u64) as u64
    }
}

/// Exhaustive check of the three binomial inequalities backing the Kneser
/// union closed form.
#[derive(Clone, Debug, Serialize)]
pub struct BinomialLemmaReport {
    pub r_max: u32,
    pub bound: u32,
    pub cases_checked: u64,
    pub violations: Vec<String>,
}

/// For every `3 <= r <= r_max` and admissible `a, b, c, d <= bound`,
/// verifies the strict inequalities
///
/// 1. `C(a,r) + C(b,r-1) < C(a+b-1,r-1)` for `r <= a <= 2r-2`, `b >= 2r-1`;
/// 2. `2 C(2r-1,r-1) < C(4r-3,r-1)`;
/// 3. `C(c,r-1) + C(d,r-1) < C(c+d-1,r-1)` for `c, d >= 2r-1`.
pub fn verify_binomial_lemmas(r_max: u32, bound: u32) -> BinomialLemmaReport {
    assert!(r_max >= 3, "inequalities require r >= 3");
    let mut cases_checked = 0u64;
    let mut violations = Vec::new();
    for r in 3..=r_max as u64 {
        for a in r..=2 * r - 2 {
            for b in 2 * r - 1..=bound as u64 {
                cases_checked += 1;
                if binomial(a, r) + binomial(b, r - 1) >= binomial(a + b - 1, r - 1) {
                    violations.push(format!(
                        "lemma 1 fails at r={r}, a={a}, b={b}"
                    ));
                }
            }
        }
        cases_checked += 1;
        if 2 * binomial(2 * r - 1, r - 1) >= binomial(4 * r - 3, r - 1) {
            violations.push(format!("lemma 2 fails at r={r}"));
        }
        for c in 2 * r - 1..=bound as u64 {
            for d in c..=bound as u64 {
                cases_checked += 1;
                if binomial(c, r - 1) + binomial(d, r - 1) >= binomial(c + d - 1, r - 1) {
                    violations.push(format!("lemma 3 fails at r={r}, c={c}, d={d}"));
                }
            }
        }
    }
    BinomialLemmaReport {
        r_max,
        bound,
        cases_checked,
        violations,
    }
}
