//! The fixed CSV row format shared by every CLI subcommand.
//!
//! ```text
//! sigma,t,x,re_value,im_value,re_ref,im_ref,abs_err,rel_err,flags
//! ```
//!
//! Numbers use 17 significant digits in scientific notation, which round-trips
//! `f64` exactly. Missing values are empty fields. `flags` holds `;`-separated
//! markers such as `outside-domain` or `on-cut`. Lines end with `\n`.

use crate::experiments::ScanRow;
use crate::product::Evaluation;
use num_complex::Complex64;
use std::io::{self, Write};

pub const HEADER: &str = "sigma,t,x,re_value,im_value,re_ref,im_ref,abs_err,rel_err,flags";

/// One output line, before formatting.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct CsvRecord {
    pub sigma: f64,
    pub t: f64,
    pub x: Option<u64>,
    pub value: Option<Complex64>,
    pub reference: Option<Complex64>,
    pub abs_err: Option<f64>,
    pub rel_err: Option<f64>,
    pub flags: Vec<String>,
}

/// `{:.16e}`: one leading digit plus sixteen decimals.
pub fn format_f64(v: f64) -> String {
    format!("{v:.16e}")
}

fn opt(v: Option<f64>) -> String {
    v.map(format_f64).unwrap_or_default()
}

impl CsvRecord {
    pub fn to_line(&self) -> String {
        let fields = [
            format_f64(self.sigma),
            format_f64(self.t),
            self.x.map(|x| x.to_string()).unwrap_or_default(),
            opt(self.value.map(|v| v.re)),
            opt(self.value.map(|v| v.im)),
            opt(self.reference.map(|v| v.re)),
            opt(self.reference.map(|v| v.im)),
            opt(self.abs_err),
            opt(self.rel_err),
            self.flags.join(";"),
        ];
        fields.join(",")
    }
}

impl From<&ScanRow> for CsvRecord {
    fn from(row: &ScanRow) -> Self {
        Self {
            sigma: row.s.re,
            t: row.s.im,
            x: Some(row.x),
            value: row.value,
            reference: row.reference,
            abs_err: row.abs_err,
            rel_err: row.rel_err,
            flags: row.flags.iter().map(|f| f.label()).collect(),
        }
    }
}

impl From<&Evaluation> for CsvRecord {
    fn from(e: &Evaluation) -> Self {
        let mut flags = Vec::new();
        if e.outside_domain {
            flags.push("outside-domain".to_string());
        }
        if e.on_cut {
            flags.push("on-cut".to_string());
        }
        Self {
            sigma: e.s.re,
            t: e.s.im,
            x: Some(e.x),
            value: Some(e.value),
            reference: e.reference,
            abs_err: e.abs_error,
            rel_err: e.rel_error(),
            flags,
        }
    }
}

pub fn write_header<W: Write + ?Sized>(out: &mut W) -> io::Result<()> {
    out.write_all(HEADER.as_bytes())?;
    out.write_all(b"\n")
}

pub fn write_records<'a, W, I>(out: &mut W, records: I) -> io::Result<()>
where
    W: Write + ?Sized,
    I: IntoIterator<Item = &'a CsvRecord>,
{
    write_header(out)?;
    for r in records {
        out.write_all(r.to_line().as_bytes())?;
        out.write_all(b"\n")?;
    }
    Ok(())
}
