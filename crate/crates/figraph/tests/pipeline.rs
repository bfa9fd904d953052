//! End-to-end library pipeline: family -> scan -> CSV round trip -> fit ->
//! trend report, on the families with known closed forms.

use figraph::analysis::{check_trends, detect_recurrence, fit_quasi_polynomial, Verdict};
use figraph::model::{family, Family};
use figraph::solver::{scan_alpha, AlphaSequence, Budget};

#[test]
fn johnson_scan_fit_and_trends() {
    let c = family(&Family::Johnson2).unwrap();
    let seq = scan_alpha(&c, 2, 12, Budget::UNLIMITED).unwrap();

    // Through the CSV representation, as the CLI would do it.
    let seq = AlphaSequence::from_csv(&seq.to_csv()).unwrap();
    let fit = fit_quasi_polynomial(&seq, 4, 3).unwrap();
    assert_eq!(fit.period, 2);
    assert_eq!(fit.degree(), 1);
    assert_eq!(fit.stable_degree, 2);

    let report = check_trends(&c, &seq, &fit);
    assert_eq!(report.trend1, Verdict::Holds);
    assert!(report.has_johnson_orbit); // trend 2 vacuous
    assert_eq!(report.trend2, Verdict::Holds);
    assert_eq!(report.trend3, Verdict::Holds);

    let rec = detect_recurrence(&seq).unwrap();
    assert_eq!(rec.order, 3);
}

#[test]
fn kneser_scan_fits_the_ekr_line() {
    let c = family(&Family::Kneser2).unwrap();
    let seq = scan_alpha(&c, 4, 10, Budget::UNLIMITED).unwrap();
    let fit = fit_quasi_polynomial(&seq, 4, 3).unwrap();
    assert_eq!(fit.describe(), "period 1, piece n - 1, stable degree 4");
    let report = check_trends(&c, &seq, &fit);
    assert_eq!(report.trend1, Verdict::Holds);
    assert_eq!(report.trend2, Verdict::Holds);
    assert_eq!(report.trend3, Verdict::Holds);
}

/// Two Johnson-type orbits plus a shifted copy give alpha(G_n) = n: the
/// sequence has period 1 even though Johnson orbits are present, so the
/// converse of trend 2 fails while trend 2 itself stays vacuously true.
#[test]
fn johnson_union_shifted_has_period_one_despite_johnson_orbits() {
    let c = family(&Family::JohnsonUnionShifted).unwrap();
    let seq = scan_alpha(&c, 2, 11, Budget::UNLIMITED).unwrap();
    let expected: Vec<usize> = (2..=11).collect();
    assert_eq!(seq.alphas(), expected);

    let fit = fit_quasi_polynomial(&seq, 4, 3).unwrap();
    assert_eq!(fit.period, 1);
    assert_eq!(fit.degree(), 1);
    assert_eq!(fit.pieces[0].display("n"), "n");

    let report = check_trends(&c, &seq, &fit);
    assert!(report.has_johnson_orbit);
    assert_eq!(report.trend2, Verdict::Holds);
}

/// Two joined Kneser-2 copies: the scan to n = 12 shows the early
/// 3-periodic bumps, and the fitter settles on the eventual line n - 1
/// with stable degree 7.
#[test]
fn copies_of_kneser2_fit_finds_the_eventual_line() {
    let c = family(&Family::CopiesOfKneser2 { k: 2 }).unwrap();
    let seq = scan_alpha(&c, 2, 12, Budget::UNLIMITED).unwrap();
    let expected: Vec<usize> = (2u32..=12)
        .map(|n| if n <= 6 && n % 3 == 0 { n } else { n - 1 } as usize)
        .collect();
    assert_eq!(seq.alphas(), expected);
    let fit = fit_quasi_polynomial(&seq, 4, 3).unwrap();
    assert_eq!(fit.period, 1);
    assert_eq!(fit.pieces[0].display("n"), "n - 1");
    assert_eq!(fit.stable_degree, 7);
}

#[test]
fn disjoint_union_adds_alphas() {
    let single = family(&Family::Johnson2).unwrap();
    let double = family(&Family::DisjointUnion {
        k: 2,
        inner: Box::new(Family::Johnson2),
    })
    .unwrap();
    let a1 = scan_alpha(&single, 2, 9, Budget::UNLIMITED).unwrap();
    let a2 = scan_alpha(&double, 2, 9, Budget::UNLIMITED).unwrap();
    for (r1, r2) in a1.rows.iter().zip(&a2.rows) {
        assert_eq!(2 * r1.alpha, r2.alpha, "n = {}", r1.n);
    }
}
