//! Command-line front end. Every subcommand writes CSV in the format of
//! [`crate::csv`].
//!
//! Exit status is 0 on success, 2 for invalid arguments and 1 for numerical
//! errors reported by the library.

use crate::csv::{write_records, CsvRecord};
use crate::experiments::{error_decay, scan, ScanSpec};
use crate::primes::PrimeTable;
use crate::product::{corrected_product, mertens_ratio, ProductVariant};
use crate::specfun::{e1, BranchSide};
use crate::zetaref::ZetaRef;
use crate::Error;
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

/// Environment variable holding the worker-thread count for scans.
pub const THREADS_ENV: &str = "EULERPROD_THREADS";

#[derive(Debug, Parser)]
#[command(
    name = "eulerprod",
    version,
    about = "Corrected Euler prime products for Re(s) > 1/2"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Write CSV here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate the corrected product at one point s = sigma + i t.
    Eval(EvalArgs),
    /// Scan real s over [s-min, s-max].
    ScanReal(ScanRealArgs),
    /// Scan s = sigma + i t for t over [t-min, t-max].
    ScanLine(ScanLineArgs),
    /// Mertens ratio prod_{p<=x} (1 - 1/p)^-1 / (e^gamma log x).
    Mertens(MertensArgs),
    /// Fit the error-decay exponent over a grid of x.
    Decay(DecayArgs),
    /// Exponential integral E1(re + i im).
    E1(E1Args),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum VariantArg {
    Zeta,
    InverseZeta,
    Ratio,
}

impl From<VariantArg> for ProductVariant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::Zeta => ProductVariant::Zeta,
            VariantArg::InverseZeta => ProductVariant::InverseZeta,
            VariantArg::Ratio => ProductVariant::RatioZeta2sOverZeta,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum CutArg {
    Above,
    Below,
}

impl From<CutArg> for BranchSide {
    fn from(c: CutArg) -> Self {
        match c {
            CutArg::Above => BranchSide::FromAbove,
            CutArg::Below => BranchSide::FromBelow,
        }
    }
}

#[derive(Debug, Args)]
pub struct ProductArgs {
    /// Truncation limit: primes p <= x.
    #[arg(long, default_value_t = 1000)]
    pub x: u64,
    #[arg(long, value_enum, default_value_t = VariantArg::Zeta)]
    pub variant: VariantArg,
    /// Side of the E1 branch cut used for real s < 1.
    #[arg(long, value_enum, default_value_t = CutArg::Above)]
    pub cut: CutArg,
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    #[arg(long, allow_negative_numbers = true)]
    pub sigma: f64,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub t: f64,
    #[command(flatten)]
    pub product: ProductArgs,
}

#[derive(Debug, Args)]
pub struct ScanRealArgs {
    #[arg(long, allow_negative_numbers = true)]
    pub s_min: f64,
    #[arg(long, allow_negative_numbers = true)]
    pub s_max: f64,
    #[arg(long, default_value_t = 0.01)]
    pub step: f64,
    #[command(flatten)]
    pub product: ProductArgs,
}

#[derive(Debug, Args)]
pub struct ScanLineArgs {
    #[arg(long, allow_negative_numbers = true)]
    pub sigma: f64,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub t_min: f64,
    #[arg(long, allow_negative_numbers = true)]
    pub t_max: f64,
    #[arg(long, default_value_t = 0.1)]
    pub step: f64,
    #[command(flatten)]
    pub product: ProductArgs,
}

#[derive(Debug, Args)]
pub struct MertensArgs {
    #[arg(long, default_value_t = 1000)]
    pub x: u64,
}

#[derive(Debug, Args)]
pub struct DecayArgs {
    #[arg(long, allow_negative_numbers = true)]
    pub sigma: f64,
    #[arg(long, default_value_t = 5.0, allow_negative_numbers = true)]
    pub t: f64,
    /// Comma-separated ascending truncation limits.
    #[arg(
        long,
        value_delimiter = ',',
        default_value = "1000,10000,100000,1000000"
    )]
    pub x_grid: Vec<u64>,
    #[arg(long, value_enum, default_value_t = VariantArg::Zeta)]
    pub variant: VariantArg,
}

#[derive(Debug, Args)]
pub struct E1Args {
    #[arg(long, allow_negative_numbers = true)]
    pub re: f64,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub im: f64,
    #[arg(long, value_enum, default_value_t = CutArg::Above)]
    pub cut: CutArg,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Numeric(Error),
    #[error("i/o error: {0}")]
    Io(#[from] io::Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidConfig(msg) => CliError::Usage(msg),
            other => CliError::Numeric(other),
        }
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Numeric(_) | CliError::Io(_) => 1,
        }
    }
}

fn sieve_for(x: u64) -> Result<PrimeTable, CliError> {
    if x < 2 {
        return Err(CliError::Usage(format!("--x must be at least 2, got {x}")));
    }
    Ok(PrimeTable::sieve(x)?)
}

/// Computes the CSV records for a parsed command line.
pub fn records(command: &Command) -> Result<Vec<CsvRecord>, CliError> {
    let zeta = ZetaRef::default();
    match command {
        Command::Eval(a) => {
            let table = sieve_for(a.product.x)?;
            let s = Complex64::new(a.sigma, a.t);
            let eval = corrected_product(
                s,
                &table,
                a.product.variant.into(),
                a.product.cut.into(),
                Some(&zeta),
            )?;
            Ok(vec![CsvRecord::from(&eval)])
        }
        Command::ScanReal(a) => {
            let spec = ScanSpec::real_axis(a.s_min, a.s_max, a.step, a.product.x)
                .with_variant(a.product.variant.into())
                .with_cut(a.product.cut.into());
            spec.validate()?;
            let table = sieve_for(a.product.x)?;
            Ok(scan(&spec, &table, &zeta)?
                .iter()
                .map(CsvRecord::from)
                .collect())
        }
        Command::ScanLine(a) => {
            let spec = ScanSpec::vertical_line(a.sigma, a.t_min, a.t_max, a.step, a.product.x)
                .with_variant(a.product.variant.into())
                .with_cut(a.product.cut.into());
            spec.validate()?;
            let table = sieve_for(a.product.x)?;
            Ok(scan(&spec, &table, &zeta)?
                .iter()
                .map(CsvRecord::from)
                .collect())
        }
        Command::Mertens(a) => {
            let table = sieve_for(a.x)?;
            let ratio = mertens_ratio(&table)?;
            let err = (ratio - 1.0).abs();
            Ok(vec![CsvRecord {
                sigma: 1.0,
                t: 0.0,
                x: Some(a.x),
                value: Some(Complex64::new(ratio, 0.0)),
                reference: Some(Complex64::new(1.0, 0.0)),
                abs_err: Some(err),
                rel_err: Some(err),
                flags: Vec::new(),
            }])
        }
        Command::Decay(a) => {
            let max_x = a.x_grid.iter().copied().max().unwrap_or(0);
            let table = sieve_for(max_x)?;
            let s = Complex64::new(a.sigma, a.t);
            let fit = error_decay(s, &a.x_grid, a.variant.into(), &table, &zeta)?;
            let ref_norm = fit.reference.norm();
            let mut out: Vec<CsvRecord> = fit
                .x_grid
                .iter()
                .zip(&fit.values)
                .zip(&fit.errors)
                .zip(&fit.used)
                .map(|(((&x, &value), &err), &used)| CsvRecord {
                    sigma: s.re,
                    t: s.im,
                    x: Some(x),
                    value: Some(value),
                    reference: Some(fit.reference),
                    abs_err: Some(err),
                    rel_err: Some(err / ref_norm),
                    flags: if used {
                        Vec::new()
                    } else {
                        vec!["below-noise-floor".into()]
                    },
                })
                .collect();
            // summary row: slope in re_value, intercept in im_value, target slope in re_ref
            out.push(CsvRecord {
                sigma: s.re,
                t: s.im,
                x: None,
                value: Some(Complex64::new(fit.slope, fit.intercept)),
                reference: Some(Complex64::new(fit.expected_slope(), 0.0)),
                abs_err: Some((fit.slope - fit.expected_slope()).abs()),
                rel_err: None,
                flags: vec!["fit".into()],
            });
            Ok(out)
        }
        Command::E1(a) => {
            let z = Complex64::new(a.re, a.im);
            let r = e1(z, a.cut.into())?;
            Ok(vec![CsvRecord {
                sigma: a.re,
                t: a.im,
                x: None,
                value: Some(r.value),
                flags: if r.on_cut {
                    vec!["on-cut".into()]
                } else {
                    Vec::new()
                },
                ..Default::default()
            }])
        }
    }
}

/// Runs a parsed command, writing CSV to `--out` or to `stdout`.
pub fn run(cli: &Cli, stdout: &mut dyn Write) -> Result<(), CliError> {
    let records = records(&cli.command)?;
    let mut buf = Vec::new();
    write_records(&mut buf, &records)?;
    match &cli.out {
        Some(path) => {
            let mut f = BufWriter::new(File::create(path)?);
            f.write_all(&buf)?;
            f.flush()?;
        }
        None => {
            stdout.write_all(&buf)?;
            stdout.flush()?;
        }
    }
    Ok(())
}

/// Parses `args` and runs them; returns the process exit status.
pub fn main_with_args<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if code == 0 { stdout } else { stderr };
            let _ = sink.write_all(rendered.as_bytes());
            return code;
        }
    };
    match run(&cli, stdout) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(stderr, "eulerprod: {e}");
            e.exit_code()
        }
    }
}

/// Sizes the global rayon pool from [`THREADS_ENV`], if set.
pub fn configure_threads() {
    let Some(n) = std::env::var(THREADS_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
    else {
        return;
    };
    if n > 0 {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global();
    }
}
