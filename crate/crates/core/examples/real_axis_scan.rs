//! Corrected product against ζ(s) on the real segment (1/2, 2], skipping the
//! pole. Prints a coarse table; pass a path to also write the full CSV.
//!
//! `cargo run --release --example real_axis_scan -- real_axis.csv`

use eulerprod::csv::{write_header, write_records, CsvRecord};
use eulerprod::{scan, PrimeTable, ScanSpec, ScanSummary, ZetaRef};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let x = 1_000_000;
    let table = PrimeTable::sieve(x)?;
    let zeta = ZetaRef::default();
    let rows = scan(&ScanSpec::real_axis(0.51, 2.0, 0.01, x), &table, &zeta)?;

    println!(
        "{:>6} {:>16} {:>16} {:>10}",
        "s", "product", "zeta", "rel err"
    );
    for row in rows.iter().step_by(10) {
        println!(
            "{:>6.2} {:>16.10} {:>16.10} {:>10.2e}",
            row.s.re,
            row.value.unwrap().re,
            row.reference.unwrap().re,
            row.rel_err.unwrap()
        );
    }
    let summary = ScanSummary::from_rows(&rows);
    println!(
        "{} points, max rel err {:.3e}, median {:.3e}",
        summary.rows, summary.max_rel, summary.median_rel
    );

    if let Some(path) = std::env::args().nth(1) {
        let mut out = std::io::BufWriter::new(std::fs::File::create(&path)?);
        write_header(&mut out)?;
        let records: Vec<CsvRecord> = rows.iter().map(CsvRecord::from).collect();
        write_records(&mut out, &records)?;
        println!("wrote {path}");
    }
    Ok(())
}
