//! The complex exponential integral `E₁(z) = ∫_z^∞ e^{−t}/t dt`.
//!
//! E₁ has a logarithmic branch point at 0 and a cut along `(−∞, 0]`. Off the
//! cut the principal branch is used. On the cut the caller picks a side with
//! [`BranchSide`]: approaching from above gives `Im E₁ = −π`, from below `+π`.
//!
//! Two evaluation routes are provided. The power series
//! `E₁(z) = −γ − log z − Σ_{k≥1} (−z)^k / (k·k!)` is used for small `|z|` and
//! the classical continued fraction (modified Lentz) for large `|z|`.

use crate::sum::ComplexSum;
use crate::{Error, Result};
use num_complex::Complex64;

/// Euler–Mascheroni constant γ.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// `|z|` at or below which [`e1`] uses the power series.
pub const SERIES_CUTOFF: f64 = 4.0;

const SERIES_MAX_TERMS: usize = 200;
const SERIES_REL_TOL: f64 = 1e-17;

const CF_REL_TOL: f64 = 1e-15;
const CF_MAX_ITER: usize = 10_000;

// Beyond the cutoff the series is still used where it does not cancel: with
// Re z < 0 and |z| + Re z small the terms are nearly co-aligned. This covers the
// neighbourhood of the negative real axis, where the continued fraction crawls.
const SERIES_NEAR_CUT_MAX_ABS: f64 = 40.0;
const SERIES_NEAR_CUT_MAX_LOSS: f64 = 2.0 * SERIES_CUTOFF;

/// Side of the branch cut `(−∞, 0]` used for arguments lying on it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum BranchSide {
    #[default]
    FromAbove,
    FromBelow,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum E1Method {
    Series,
    ContinuedFraction,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct E1Result {
    pub value: Complex64,
    pub method: E1Method,
    /// The argument was on the cut: `Im z = 0` and `Re z < 0`.
    pub on_cut: bool,
}

/// Power series for E₁ with the principal logarithm.
///
/// A real-negative `z` (including `Im z = −0.0`) is taken with `arg z = π`,
/// which is the limit from above.
pub fn e1_series(z: Complex64) -> Result<Complex64> {
    if z == Complex64::new(0.0, 0.0) {
        return Err(Error::Singularity);
    }
    let z = positive_zero_imag(z);
    let minus_z = -z;

    let mut term = Complex64::new(1.0, 0.0);
    let mut sum = ComplexSum::new();
    for k in 1..=SERIES_MAX_TERMS {
        let kf = k as f64;
        term = term * minus_z / kf;
        let contribution = term / kf;
        sum.add(contribution);
        if contribution.norm() < SERIES_REL_TOL * sum.total().norm() {
            break;
        }
    }
    Ok(-EULER_GAMMA - z.ln() - sum.total())
}

/// `E₁(z) = e^{−z} / (z + 1 − 1/(z + 3 − 4/(z + 5 − …)))`, modified Lentz.
///
/// Converges for every `z` off the cut, quickly once `|z|` is a few units.
pub fn e1_continued_fraction(z: Complex64) -> Result<Complex64> {
    if z == Complex64::new(0.0, 0.0) {
        return Err(Error::Singularity);
    }
    if z.im == 0.0 && z.re < 0.0 {
        return Err(Error::Domain(format!(
            "continued fraction is undefined on the branch cut (z = {z}); use e1 with a BranchSide"
        )));
    }

    // Lentz with the leading term folded in: f₁ = 1/(z + 1). The tiny value
    // must survive squaring inside complex division, hence 1e-30.
    const TINY: f64 = 1e-30;
    let one = Complex64::new(1.0, 0.0);

    let mut b = z + 1.0;
    let mut c = Complex64::new(1.0 / TINY, 0.0);
    let mut d = one / b;
    let mut f = d;
    for n in 1..CF_MAX_ITER {
        let a = -((n * n) as f64);
        b += 2.0;
        d = a * d + b;
        if d.norm() < TINY {
            d = Complex64::new(TINY, 0.0);
        }
        c = b + a / c;
        if c.norm() < TINY {
            c = Complex64::new(TINY, 0.0);
        }
        d = one / d;
        let delta = c * d;
        f *= delta;
        if (delta - one).norm() < CF_REL_TOL {
            return Ok((-z).exp() * f);
        }
    }
    Err(Error::NonConvergence {
        iterations: CF_MAX_ITER,
    })
}

/// E₁ on the principal branch, with `cut` selecting the limit on `(−∞, 0)`.
pub fn e1(z: Complex64, cut: BranchSide) -> Result<E1Result> {
    if z == Complex64::new(0.0, 0.0) {
        return Err(Error::Singularity);
    }
    let on_cut = z.im == 0.0 && z.re < 0.0;
    if on_cut {
        // every series term has the same sign here, so any |z| is safe
        let above = e1_series(Complex64::new(z.re, 0.0))?;
        let value = match cut {
            BranchSide::FromAbove => above,
            BranchSide::FromBelow => above.conj(),
        };
        return Ok(E1Result {
            value,
            method: E1Method::Series,
            on_cut,
        });
    }

    let r = z.norm();
    let use_series = r <= SERIES_CUTOFF
        || (z.re < 0.0 && r <= SERIES_NEAR_CUT_MAX_ABS && r + z.re <= SERIES_NEAR_CUT_MAX_LOSS);
    let (value, method) = if use_series {
        (e1_series(z)?, E1Method::Series)
    } else {
        (e1_continued_fraction(z)?, E1Method::ContinuedFraction)
    };
    Ok(E1Result {
        value,
        method,
        on_cut,
    })
}

fn positive_zero_imag(z: Complex64) -> Complex64 {
    if z.im == 0.0 {
        Complex64::new(z.re, 0.0)
    } else {
        z
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn rel(a: Complex64, b: Complex64) -> f64 {
        (a - b).norm() / b.norm()
    }

    // Frozen from the quadrature oracle in tests/common (Gauss–Kronrod on the
    // ray [z, ∞)); cross-checked against an independent library evaluation.
    const E1_OF_ONE: f64 = 0.219_383_934_395_520_27;
    const E1_OF_TEN: f64 = 4.156_968_929_685_324e-6;

    #[test]
    fn series_at_one() {
        let v = e1_series(c(1.0, 0.0)).unwrap();
        assert!((v.re - E1_OF_ONE).abs() < 1e-15);
        assert_eq!(v.im, 0.0);
    }

    #[test]
    fn series_log_singularity() {
        for x in [1e-3, 1e-6, 1e-9, 1e-12] {
            let v = e1_series(c(x, 0.0)).unwrap();
            assert!((v.re + x.ln() + EULER_GAMMA).abs() < 2.0 * x);
        }
        assert_eq!(e1_series(c(0.0, 0.0)), Err(Error::Singularity));
    }

    #[test]
    fn series_reflection_off_cut() {
        let a = e1_series(c(0.5, 0.5)).unwrap();
        let b = e1_series(c(0.5, -0.5)).unwrap();
        assert_eq!(a.conj(), b);
    }

    #[test]
    fn series_negative_zero_imag_is_from_above() {
        let a = e1_series(c(-1.0, 0.0)).unwrap();
        let b = e1_series(c(-1.0, -0.0)).unwrap();
        assert_eq!(a, b);
        assert!((a.im + PI).abs() < 1e-15);
    }

    #[test]
    fn continued_fraction_at_ten() {
        let v = e1_continued_fraction(c(10.0, 0.0)).unwrap();
        assert!((v.re - E1_OF_TEN).abs() / E1_OF_TEN < 1e-14);
    }

    #[test]
    fn methods_agree_at_cutoff() {
        let s = e1_series(c(4.0, 0.0)).unwrap();
        let f = e1_continued_fraction(c(4.0, 0.0)).unwrap();
        assert!(rel(s, f) < 1e-12, "{s} vs {f}");
    }

    #[test]
    fn continued_fraction_leading_asymptotic() {
        let mut prev = f64::INFINITY;
        for x in [50.0, 100.0, 200.0, 400.0] {
            let v = e1_continued_fraction(c(x, 0.0)).unwrap();
            // E₁(x)·x·eˣ = 1 − 1/x + 2/x² − …
            let scaled = v.re * x * x.exp();
            let dev = (scaled - 1.0).abs();
            assert!(dev < 1.5 / x);
            assert!(dev < prev);
            prev = dev;
        }
    }

    #[test]
    fn continued_fraction_rejects_cut() {
        assert!(matches!(
            e1_continued_fraction(c(-5.0, 0.0)),
            Err(Error::Domain(_))
        ));
        assert_eq!(e1_continued_fraction(c(0.0, 0.0)), Err(Error::Singularity));
    }

    #[test]
    fn dispatcher_cut_sides() {
        let above = e1(c(-1.0, 0.0), BranchSide::FromAbove).unwrap();
        let below = e1(c(-1.0, 0.0), BranchSide::FromBelow).unwrap();
        assert!(above.on_cut && below.on_cut);
        assert!((above.value.im + PI).abs() < 1e-12);
        assert!((below.value.im - PI).abs() < 1e-12);
        assert_eq!(above.value.conj(), below.value);
        // −Ei(1)
        assert!((above.value.re + 1.895_117_816_355_936_8).abs() < 1e-14);
    }

    #[test]
    fn dispatcher_cut_limit_matches_nearby_points() {
        for x in [-0.3, -2.0, -6.9, -12.0] {
            let on = e1(c(x, 0.0), BranchSide::FromAbove).unwrap().value;
            let near = e1(c(x, 1e-9), BranchSide::FromAbove).unwrap().value;
            assert!(rel(on, near) < 1e-8, "x = {x}: {on} vs {near}");
            let below = e1(c(x, 0.0), BranchSide::FromBelow).unwrap().value;
            let near_below = e1(c(x, -1e-9), BranchSide::FromAbove).unwrap().value;
            assert!(rel(below, near_below) < 1e-8);
        }
    }

    #[test]
    fn dispatcher_real_positive_is_real() {
        let r = e1(c(2.0, 0.0), BranchSide::FromAbove).unwrap();
        assert!(!r.on_cut);
        assert_eq!(r.value.im, 0.0);
        assert!((r.value.re - 0.048_900_510_708_061_19).abs() < 1e-16);
        assert_eq!(
            e1(c(0.0, 0.0), BranchSide::FromAbove),
            Err(Error::Singularity)
        );
    }

    #[test]
    fn dispatcher_method_selection() {
        assert_eq!(
            e1(c(3.0, 2.0), BranchSide::FromAbove).unwrap().method,
            E1Method::Series
        );
        assert_eq!(
            e1(c(6.0, 2.0), BranchSide::FromAbove).unwrap().method,
            E1Method::ContinuedFraction
        );
        assert_eq!(
            e1(c(-10.0, 0.5), BranchSide::FromAbove).unwrap().method,
            E1Method::Series
        );
        assert_eq!(
            e1(c(-10.0, 30.0), BranchSide::FromAbove).unwrap().method,
            E1Method::ContinuedFraction
        );
    }

    #[test]
    fn derivative_matches_integrand() {
        let mut checked = 0;
        for i in 0..10 {
            for j in 0..6 {
                let r = 0.05 * 1.6f64.powi(i);
                let theta = -2.9 + 5.8 * j as f64 / 5.0;
                let z = Complex64::from_polar(r, theta);
                let h = 1e-6 * r;
                let fp = e1(z + h, BranchSide::FromAbove).unwrap().value;
                let fm = e1(z - h, BranchSide::FromAbove).unwrap().value;
                let fd = (fp - fm) / (2.0 * h);
                let exact = -(-z).exp() / z;
                assert!(rel(fd, exact) < 1e-4, "z = {z}: {fd} vs {exact}");
                checked += 1;
            }
        }
        assert!(checked >= 50);
    }

    #[test]
    fn methods_agree_on_annulus() {
        for i in 0..=10 {
            for j in 0..=24 {
                let r = 3.5 + 0.1 * i as f64;
                let theta = -3.0 + 6.0 * j as f64 / 24.0;
                let z = Complex64::from_polar(r, theta);
                let s = e1_series(z).unwrap();
                let f = e1_continued_fraction(z).unwrap();
                assert!(rel(s, f) < 1e-11, "z = {z}: {s} vs {f}");
            }
        }
    }

    #[test]
    fn conjugate_symmetry() {
        for &(re, im) in &[
            (0.3, 0.1),
            (-2.0, 1.0),
            (5.0, -3.0),
            (-7.0, 0.2),
            (-30.0, 20.0),
            (1.0, 300.0),
        ] {
            let z = c(re, im);
            let a = e1(z, BranchSide::FromAbove).unwrap().value;
            let b = e1(z.conj(), BranchSide::FromAbove).unwrap().value;
            assert_eq!(a.conj(), b);
        }
    }
}
