mod common;

use common::{e1_quadrature, rel, sample_points};
use eulerprod::{e1, e1_continued_fraction, e1_series, BranchSide, Complex64};

#[test]
fn quadrature_oracle_reproduces_known_values() {
    let one = e1_quadrature(Complex64::new(1.0, 0.0));
    assert!((one.re - 0.219_383_934_395_520_27).abs() < 1e-14, "{one}");
    let ten = e1_quadrature(Complex64::new(10.0, 0.0));
    assert!(
        (ten.re - 4.156_968_929_685_324e-6).abs() / 4.156_968_929_685_324e-6 < 1e-12,
        "{ten}"
    );
}

#[test]
fn series_and_fraction_match_quadrature() {
    let s = e1_series(Complex64::new(1.0, 0.0)).unwrap();
    assert!(rel(s, e1_quadrature(Complex64::new(1.0, 0.0))) < 1e-13);
    let f = e1_continued_fraction(Complex64::new(10.0, 0.0)).unwrap();
    assert!(rel(f, e1_quadrature(Complex64::new(10.0, 0.0))) < 1e-12);
}

#[test]
fn dispatcher_matches_quadrature_on_random_points() {
    for z in sample_points(100, 0.01, 50.0, 3.0, 0xE1) {
        let got = e1(z, BranchSide::FromAbove).unwrap().value;
        let want = e1_quadrature(z);
        assert!(rel(got, want) < 1e-10, "z = {z}: {got} vs {want}");
    }
}

#[test]
fn arguments_seen_by_the_products() {
    // z = (s − 1) log x for the scan ranges used downstream
    for &x in &[1e3f64, 1e5, 1e6] {
        for &(sigma, t) in &[
            (0.55, 0.1),
            (0.55, 2.0),
            (0.8, 0.3),
            (0.8, 14.0),
            (1.5, 5.0),
            (0.51, 0.05),
        ] {
            let z = Complex64::new(sigma - 1.0, t) * x.ln();
            let got = e1(z, BranchSide::FromAbove).unwrap().value;
            let want = e1_quadrature(z);
            assert!(rel(got, want) < 1e-10, "z = {z}: {got} vs {want}");
        }
    }
}
