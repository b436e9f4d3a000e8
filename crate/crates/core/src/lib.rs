//! Truncated Euler prime products continued to `Re(s) > 1/2`.
//!
//! The partial product `Π_{p≤x} (1 − p^{−s})^{−1}` converges to ζ(s) only for
//! `Re(s) > 1`. Multiplying it by `exp(E₁[(s − 1) log x])` cancels the
//! divergent part of the prime zeta function and, conditionally on the Riemann
//! Hypothesis, the corrected product converges to ζ(s) on the half plane
//! `Re(s) > 1/2` (except at the pole `s = 1`), with error
//! `O(x^{1/2−σ} log x)`.
//!
//! The crate is organised as
//!
//! - [`primes`]: sieve and prime-counting table shared by every evaluation,
//! - [`specfun`]: the complex exponential integral E₁ with an explicit
//!   branch-cut convention,
//! - [`zetaref`]: an independent reference evaluator for ζ(s),
//! - [`product`]: corrected products for ζ, 1/ζ and ζ(2s)/ζ(s), the truncated
//!   prime zeta function and the Mertens ratio,
//! - [`experiments`]: real-axis and vertical-line scans and error-decay fits,
//! - [`csv`] and [`cli`]: the CSV row format and the command-line front end.
//!
//! ```
//! use eulerprod::{corrected_product, BranchSide, PrimeTable, ProductVariant};
//! use num_complex::Complex64;
//!
//! let table = PrimeTable::sieve(10_000).unwrap();
//! let eval = corrected_product(
//!     Complex64::new(2.0, 0.0),
//!     &table,
//!     ProductVariant::Zeta,
//!     BranchSide::FromAbove,
//!     None,
//! )
//! .unwrap();
//! let zeta2 = std::f64::consts::PI.powi(2) / 6.0;
//! assert!((eval.value.re - zeta2).abs() < 1e-3);
//! ```

// `!(x > 0.0)` is used on purpose so NaN is rejected too
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod csv;
mod error;
pub mod experiments;
pub mod primes;
pub mod product;
pub mod specfun;
pub mod sum;
pub mod zetaref;

pub use error::{Error, Result};
pub use experiments::{error_decay, scan, DecayFit, ScanMode, ScanRow, ScanSpec, ScanSummary};
pub use primes::{sieve, PrimeTable, PrimeView};
pub use product::{
    corrected_product, log_raw_product, mertens_ratio, prime_zeta_truncated, Evaluation,
    ProductVariant,
};
pub use specfun::{
    e1, e1_continued_fraction, e1_series, BranchSide, E1Method, E1Result, EULER_GAMMA,
};
pub use zetaref::{zeta_ref, ZetaRef, ZetaRefConfig};

pub use num_complex::Complex64;
