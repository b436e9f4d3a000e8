//! Grid scans of the corrected products and fits of their error decay.
//!
//! Two scan shapes are supported: real `s` on an interval (skipping a small
//! guard around the pole) and `s = σ + it` along a vertical line. Each grid
//! point becomes a [`ScanRow`]; a failing point is recorded in its row and the
//! scan carries on.

use crate::primes::PrimeTable;
use crate::product::{corrected_product, ProductVariant};
use crate::specfun::BranchSide;
use crate::zetaref::ZetaRef;
use crate::{Error, Result};
use num_complex::Complex64;
use rayon::prelude::*;

/// Grid points with `|s − 1|` below this are skipped on the real axis.
pub const REAL_AXIS_POLE_GUARD: f64 = 0.05;

/// Errors below this are treated as round-off and left out of decay fits.
pub const DECAY_NOISE_FLOOR: f64 = 1e-14;

const MIN_FIT_POINTS: usize = 4;

// absorbs rounding in start + k·step so that grid points landing on the guard
// boundary (0.95, 1.05) are kept
const GRID_SLACK: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScanMode {
    /// Real `s` from `start` to `end`; errors are on `Re(value)`.
    RealAxis,
    /// `s = σ + it`, `t` from `start` to `end`; errors are on `|value|`.
    VerticalLine,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScanSpec {
    pub mode: ScanMode,
    /// Real part of the line; ignored for [`ScanMode::RealAxis`].
    pub sigma: f64,
    pub start: f64,
    pub end: f64,
    pub step: f64,
    pub x: u64,
    pub variant: ProductVariant,
    pub cut: BranchSide,
}

impl ScanSpec {
    pub fn real_axis(s_min: f64, s_max: f64, step: f64, x: u64) -> Self {
        Self {
            mode: ScanMode::RealAxis,
            sigma: 0.0,
            start: s_min,
            end: s_max,
            step,
            x,
            variant: ProductVariant::Zeta,
            cut: BranchSide::FromAbove,
        }
    }

    pub fn vertical_line(sigma: f64, t_min: f64, t_max: f64, step: f64, x: u64) -> Self {
        Self {
            mode: ScanMode::VerticalLine,
            sigma,
            start: t_min,
            end: t_max,
            step,
            x,
            variant: ProductVariant::Zeta,
            cut: BranchSide::FromAbove,
        }
    }

    pub fn with_variant(mut self, variant: ProductVariant) -> Self {
        self.variant = variant;
        self
    }

    pub fn with_cut(mut self, cut: BranchSide) -> Self {
        self.cut = cut;
        self
    }

    pub fn validate(&self) -> Result<()> {
        let finite = [self.sigma, self.start, self.end, self.step]
            .iter()
            .all(|v| v.is_finite());
        if !finite {
            return Err(Error::InvalidConfig(
                "scan bounds and step must be finite".into(),
            ));
        }
        if !(self.step > 0.0) {
            return Err(Error::InvalidConfig(format!(
                "scan step must be > 0, got {}",
                self.step
            )));
        }
        if self.end < self.start {
            return Err(Error::InvalidConfig(format!(
                "empty scan range [{}, {}]",
                self.start, self.end
            )));
        }
        if self.x < 2 {
            return Err(Error::InvalidConfig(format!(
                "scan needs x ≥ 2, got {}",
                self.x
            )));
        }
        Ok(())
    }

    /// Grid points in scan order. Points are `start + k·step`, never accumulated.
    pub fn grid(&self) -> Vec<Complex64> {
        let n = ((self.end - self.start) / self.step + GRID_SLACK).floor() as usize;
        (0..=n)
            .map(|k| self.start + k as f64 * self.step)
            .filter_map(|v| match self.mode {
                ScanMode::RealAxis if (v - 1.0).abs() < REAL_AXIS_POLE_GUARD - GRID_SLACK => None,
                ScanMode::RealAxis => Some(Complex64::new(v, 0.0)),
                ScanMode::VerticalLine => Some(Complex64::new(self.sigma, v)),
            })
            .collect()
    }
}

/// Per-row annotations, serialised into the CSV `flags` column.
#[derive(Debug, Clone, PartialEq)]
pub enum RowFlag {
    OutsideDomain,
    OnCut,
    Error(String),
}

impl RowFlag {
    pub fn label(&self) -> String {
        match self {
            RowFlag::OutsideDomain => "outside-domain".into(),
            RowFlag::OnCut => "on-cut".into(),
            RowFlag::Error(msg) => format!("error: {}", msg.replace([',', ';', '\n', '\r'], " ")),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScanRow {
    pub s: Complex64,
    pub x: u64,
    pub value: Option<Complex64>,
    pub reference: Option<Complex64>,
    pub abs_err: Option<f64>,
    pub rel_err: Option<f64>,
    pub flags: Vec<RowFlag>,
}

impl ScanRow {
    fn failed(s: Complex64, x: u64, err: Error) -> Self {
        Self {
            s,
            x,
            value: None,
            reference: None,
            abs_err: None,
            rel_err: None,
            flags: vec![RowFlag::Error(err.to_string())],
        }
    }
}

/// Evaluates every grid point of `spec` against the reference ζ.
///
/// `table` may be larger than `spec.x`; it is masked to `p ≤ spec.x`. Rows come
/// back in grid order regardless of how the work is scheduled.
pub fn scan(spec: &ScanSpec, table: &PrimeTable, zeta: &ZetaRef) -> Result<Vec<ScanRow>> {
    spec.validate()?;
    let primes = table.view_upto(spec.x)?;
    let rows = spec
        .grid()
        .into_par_iter()
        .map(
            |s| match corrected_product(s, primes, spec.variant, spec.cut, Some(zeta)) {
                Ok(eval) => {
                    let value = eval.value;
                    let reference = eval.reference.expect("reference requested");
                    let (abs_err, scale) = match spec.mode {
                        ScanMode::RealAxis => ((value.re - reference.re).abs(), reference.re.abs()),
                        ScanMode::VerticalLine => {
                            ((value.norm() - reference.norm()).abs(), reference.norm())
                        }
                    };
                    let mut flags = Vec::new();
                    if eval.outside_domain {
                        flags.push(RowFlag::OutsideDomain);
                    }
                    if eval.on_cut {
                        flags.push(RowFlag::OnCut);
                    }
                    ScanRow {
                        s,
                        x: spec.x,
                        value: Some(value),
                        reference: Some(reference),
                        abs_err: Some(abs_err),
                        rel_err: Some(abs_err / scale),
                        flags,
                    }
                }
                Err(err) => ScanRow::failed(s, spec.x, err),
            },
        )
        .collect();
    Ok(rows)
}

/// Aggregate error statistics over the successful rows of a scan.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScanSummary {
    pub rows: usize,
    pub failed: usize,
    pub max_abs: f64,
    pub max_rel: f64,
    pub median_rel: f64,
    pub rms_abs: f64,
    pub rms_rel: f64,
}

impl ScanSummary {
    pub fn from_rows(rows: &[ScanRow]) -> Self {
        let ok: Vec<(f64, f64)> = rows
            .iter()
            .filter_map(|r| Some((r.abs_err?, r.rel_err?)))
            .collect();
        let n = ok.len().max(1) as f64;
        let mut rel: Vec<f64> = ok.iter().map(|&(_, r)| r).collect();
        rel.sort_by(f64::total_cmp);
        let median_rel = match rel.len() {
            0 => f64::NAN,
            m if m % 2 == 1 => rel[m / 2],
            m => 0.5 * (rel[m / 2 - 1] + rel[m / 2]),
        };
        Self {
            rows: rows.len(),
            failed: rows.len() - ok.len(),
            max_abs: ok.iter().map(|&(a, _)| a).fold(0.0, f64::max),
            max_rel: rel.last().copied().unwrap_or(f64::NAN),
            median_rel,
            rms_abs: (ok.iter().map(|&(a, _)| a * a).sum::<f64>() / n).sqrt(),
            rms_rel: (ok.iter().map(|&(_, r)| r * r).sum::<f64>() / n).sqrt(),
        }
    }
}

/// Least-squares fit of `log(error / log x) = slope · log x + intercept`.
#[derive(Debug, Clone, PartialEq)]
pub struct DecayFit {
    pub s: Complex64,
    pub variant: ProductVariant,
    /// Every requested `x`, ascending.
    pub x_grid: Vec<u64>,
    /// Corrected-product value at each `x` of `x_grid`.
    pub values: Vec<Complex64>,
    /// The limit the values should approach.
    pub reference: Complex64,
    /// `|value − reference|` at each `x` of `x_grid`.
    pub errors: Vec<f64>,
    /// Which points entered the fit (the rest fell below the noise floor).
    pub used: Vec<bool>,
    pub slope: f64,
    pub intercept: f64,
}

impl DecayFit {
    pub fn sigma(&self) -> f64 {
        self.s.re
    }

    /// The exponent `1/2 − σ` the slope should approach.
    pub fn expected_slope(&self) -> f64 {
        0.5 - self.s.re
    }
}

/// Fits `log(error/log x)` against `log x`; returns `(slope, intercept)`.
pub fn fit_log_log(xs: &[u64], errors: &[f64]) -> Result<(f64, f64)> {
    if xs.len() != errors.len() {
        return Err(Error::InvalidConfig(
            "x grid and error list differ in length".into(),
        ));
    }
    if xs.len() < MIN_FIT_POINTS {
        return Err(Error::InsufficientData { points: xs.len() });
    }
    let points: Vec<(f64, f64)> = xs
        .iter()
        .zip(errors)
        .map(|(&x, &e)| {
            let lx = (x as f64).ln();
            (lx, (e / lx).ln())
        })
        .collect();
    let n = points.len() as f64;
    let mean_u = points.iter().map(|p| p.0).sum::<f64>() / n;
    let mean_v = points.iter().map(|p| p.1).sum::<f64>() / n;
    let suu: f64 = points.iter().map(|p| (p.0 - mean_u).powi(2)).sum();
    let suv: f64 = points.iter().map(|p| (p.0 - mean_u) * (p.1 - mean_v)).sum();
    if !(suu > 0.0) {
        return Err(Error::InvalidConfig("x grid has no spread".into()));
    }
    let slope = suv / suu;
    Ok((slope, mean_v - slope * mean_u))
}

/// Measures `|value − reference|` of the corrected product at each `x` in
/// `x_grid` and fits the decay exponent, which should be near `1/2 − σ`.
///
/// `table` must reach `max(x_grid)`; smaller `x` use a masked view of it.
pub fn error_decay(
    s: Complex64,
    x_grid: &[u64],
    variant: ProductVariant,
    table: &PrimeTable,
    zeta: &ZetaRef,
) -> Result<DecayFit> {
    if !(s.re > 0.5) {
        return Err(Error::Domain(format!(
            "error decay needs Re(s) > 1/2, got s = {s}"
        )));
    }
    if x_grid.len() < MIN_FIT_POINTS {
        return Err(Error::InsufficientData {
            points: x_grid.len(),
        });
    }
    if !x_grid.windows(2).all(|w| w[0] < w[1]) || x_grid[0] < 2 {
        return Err(Error::InvalidConfig(
            "x grid must be strictly ascending and start at ≥ 2".into(),
        ));
    }
    let (lo, hi) = (x_grid[0], x_grid[x_grid.len() - 1]);
    if (hi as f64) < 100.0 * lo as f64 {
        return Err(Error::InvalidConfig(format!(
            "x grid [{lo}, {hi}] spans fewer than two decades"
        )));
    }

    let reference = variant.reference(s, zeta)?;
    let values = x_grid
        .par_iter()
        .map(|&x| {
            Ok(
                corrected_product(s, table.view_upto(x)?, variant, BranchSide::FromAbove, None)?
                    .value,
            )
        })
        .collect::<Result<Vec<Complex64>>>()?;
    let errors: Vec<f64> = values.iter().map(|v| (v - reference).norm()).collect();

    let used: Vec<bool> = errors.iter().map(|&e| e >= DECAY_NOISE_FLOOR).collect();
    let (xs, es): (Vec<u64>, Vec<f64>) = x_grid
        .iter()
        .zip(&errors)
        .zip(&used)
        .filter(|(_, &u)| u)
        .map(|((&x, &e), _)| (x, e))
        .unzip();
    let (slope, intercept) = fit_log_log(&xs, &es)?;
    Ok(DecayFit {
        s,
        variant,
        x_grid: x_grid.to_vec(),
        values,
        reference,
        errors,
        used,
        slope,
        intercept,
    })
}
