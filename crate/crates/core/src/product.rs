//! Truncated Euler products with the exponential-integral correction.
//!
//! For `p ≤ x` the raw product is accumulated in the log domain and the
//! correction `±E₁[(s − 1) log x]` is added before a single exponentiation:
//!
//! | variant                 | factor            | log term            | correction |
//! |-------------------------|-------------------|---------------------|------------|
//! | [`ProductVariant::Zeta`]        | `(1 − p^{−s})^{−1}` | `−log(1 − p^{−s})` | `+E₁`      |
//! | [`ProductVariant::InverseZeta`] | `(1 − p^{−s})`      | `+log(1 − p^{−s})` | `−E₁`      |
//! | [`ProductVariant::RatioZeta2sOverZeta`] | `(1 + p^{−s})^{−1}` | `−log(1 + p^{−s})` | `−E₁` |
//!
//! The three corrected products approach ζ(s), 1/ζ(s) and ζ(2s)/ζ(s) for
//! `Re(s) > 1/2`, `s ≠ 1` (conditionally on RH), with error
//! `O(x^{1/2−σ} log x)`.

use crate::primes::PrimeView;
use crate::specfun::{e1, BranchSide, EULER_GAMMA};
use crate::sum::{ComplexSum, NeumaierSum};
use crate::zetaref::ZetaRef;
use crate::{Error, Result};
use num_complex::Complex64;
use std::fmt;
use std::str::FromStr;

/// An Euler factor `1 ∓ p^{−s}` smaller than this in modulus counts as zero.
const SINGULAR_FACTOR_TOL: f64 = 1e-14;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum ProductVariant {
    /// ζ(s) = Π (1 − p^{−s})^{−1}
    #[default]
    Zeta,
    /// 1/ζ(s) = Π (1 − p^{−s})
    InverseZeta,
    /// ζ(2s)/ζ(s) = Π (1 + p^{−s})^{−1}
    RatioZeta2sOverZeta,
}

impl ProductVariant {
    pub const ALL: [ProductVariant; 3] = [
        ProductVariant::Zeta,
        ProductVariant::InverseZeta,
        ProductVariant::RatioZeta2sOverZeta,
    ];

    /// `(c, plus)`: the log term is `c · log(1 ± p^{−s})`.
    fn log_term(self) -> (f64, bool) {
        match self {
            ProductVariant::Zeta => (-1.0, false),
            ProductVariant::InverseZeta => (1.0, false),
            ProductVariant::RatioZeta2sOverZeta => (-1.0, true),
        }
    }

    /// Sign multiplying `E₁[(s − 1) log x]`.
    fn correction_sign(self) -> f64 {
        match self {
            ProductVariant::Zeta => 1.0,
            ProductVariant::InverseZeta | ProductVariant::RatioZeta2sOverZeta => -1.0,
        }
    }

    /// The function this variant's corrected product converges to.
    pub fn reference(self, s: Complex64, zeta: &ZetaRef) -> Result<Complex64> {
        match self {
            ProductVariant::Zeta => zeta.eval(s),
            ProductVariant::InverseZeta => Ok(1.0 / zeta.eval(s)?),
            ProductVariant::RatioZeta2sOverZeta => Ok(zeta.eval(2.0 * s)? / zeta.eval(s)?),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ProductVariant::Zeta => "zeta",
            ProductVariant::InverseZeta => "inverse-zeta",
            ProductVariant::RatioZeta2sOverZeta => "ratio",
        }
    }
}

impl fmt::Display for ProductVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ProductVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "zeta" => Ok(ProductVariant::Zeta),
            "inverse-zeta" | "inverse" => Ok(ProductVariant::InverseZeta),
            "ratio" | "zeta2s-over-zeta" => Ok(ProductVariant::RatioZeta2sOverZeta),
            other => Err(Error::InvalidConfig(format!(
                "unknown product variant `{other}`"
            ))),
        }
    }
}

/// One corrected-product evaluation.
#[derive(Debug, Clone, PartialEq)]
pub struct Evaluation {
    pub s: Complex64,
    pub x: u64,
    pub variant: ProductVariant,
    /// `Σ_{p≤x} c·log(1 ∓ p^{−s})`.
    pub log_raw_product: Complex64,
    /// `±E₁[(s − 1) log x]`.
    pub correction: Complex64,
    /// `exp(log_raw_product + correction)`.
    pub value: Complex64,
    pub reference: Option<Complex64>,
    /// `|value − reference|`.
    pub abs_error: Option<f64>,
    /// `Re(s) ≤ 1/2`: computed, but outside the region where the product converges.
    pub outside_domain: bool,
    /// `(s − 1) log x` lay on the cut of E₁ (real s < 1).
    pub on_cut: bool,
}

impl Evaluation {
    pub fn rel_error(&self) -> Option<f64> {
        Some(self.abs_error? / self.reference?.norm())
    }
}

/// `log(1 + w)` without cancellation for small `|w|`.
#[inline]
fn ln_1p(w: Complex64) -> Complex64 {
    let re = 0.5 * (w.re * (2.0 + w.re) + w.im * w.im).ln_1p();
    let im = w.im.atan2(1.0 + w.re);
    Complex64::new(re, im)
}

/// `p^{−s}` from a cached `ln p`.
#[inline]
fn prime_power(s: Complex64, log_p: f64) -> Complex64 {
    let magnitude = (-s.re * log_p).exp();
    let (sin, cos) = (s.im * log_p).sin_cos();
    Complex64::new(magnitude * cos, -magnitude * sin)
}

/// Log of the uncorrected partial product over `p ≤ x`, principal branch per factor.
pub fn log_raw_product<'a>(
    s: Complex64,
    primes: impl Into<PrimeView<'a>>,
    variant: ProductVariant,
) -> Result<Complex64> {
    let primes = primes.into();
    let (c, plus) = variant.log_term();
    let mut sum = ComplexSum::new();
    for (p, log_p) in primes.iter() {
        let w = prime_power(s, log_p);
        let w = if plus { w } else { -w };
        if (1.0 + w).norm() < SINGULAR_FACTOR_TOL {
            return Err(Error::SingularFactor { prime: p });
        }
        sum.add(c * ln_1p(w));
    }
    Ok(sum.total())
}

/// Corrected Euler product for `variant` at `s`, truncated at `p ≤ primes.limit()`.
///
/// With `reference` set, the matching value of ζ(s), 1/ζ(s) or ζ(2s)/ζ(s) is
/// filled in along with `abs_error`.
pub fn corrected_product<'a>(
    s: Complex64,
    primes: impl Into<PrimeView<'a>>,
    variant: ProductVariant,
    cut: BranchSide,
    reference: Option<&ZetaRef>,
) -> Result<Evaluation> {
    let primes = primes.into();
    if s == Complex64::new(1.0, 0.0) {
        return Err(Error::PoleExcluded);
    }
    let x = primes.limit();
    let z = (s - 1.0) * (x as f64).ln();
    let e1 = e1(z, cut)?;
    let correction = variant.correction_sign() * e1.value;
    let log_raw = log_raw_product(s, primes, variant)?;
    let value = (log_raw + correction).exp();

    let reference = reference
        .map(|zeta| variant.reference(s, zeta))
        .transpose()?;
    let abs_error = reference.map(|r| (value - r).norm());
    Ok(Evaluation {
        s,
        x,
        variant,
        log_raw_product: log_raw,
        correction,
        value,
        reference,
        abs_error,
        outside_domain: s.re <= 0.5,
        on_cut: e1.on_cut,
    })
}

/// `Σ_{p≤x} p^{−s} + E₁[(s − 1) log x]`, the truncated continuation of the
/// prime zeta function P(s). Real `s < 1` lands on the cut; the FromAbove
/// side is used.
pub fn prime_zeta_truncated<'a>(
    s: Complex64,
    primes: impl Into<PrimeView<'a>>,
) -> Result<Complex64> {
    let primes = primes.into();
    if s == Complex64::new(1.0, 0.0) {
        return Err(Error::Domain(
            "s = 1 is the branch point of the truncated prime zeta".into(),
        ));
    }
    let z = (s - 1.0) * (primes.limit() as f64).ln();
    let correction = e1(z, BranchSide::FromAbove)?.value;
    let sum: ComplexSum = primes.logs().iter().map(|&lp| prime_power(s, lp)).collect();
    Ok(sum.total() + correction)
}

/// `Π_{p≤x} (1 − 1/p)^{−1} / (e^γ log x)`, which tends to 1 (Mertens).
pub fn mertens_ratio<'a>(primes: impl Into<PrimeView<'a>>) -> Result<f64> {
    let primes = primes.into();
    if primes.limit() < 2 {
        return Err(Error::EmptyProduct);
    }
    let log_product: NeumaierSum = primes
        .primes()
        .iter()
        .map(|&p| -(-1.0 / p as f64).ln_1p())
        .collect();
    let log_ratio = log_product.total() - EULER_GAMMA - (primes.limit() as f64).ln().ln();
    Ok(log_ratio.exp())
}
