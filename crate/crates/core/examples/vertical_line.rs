//! |product| against |ζ(σ + it)| along a vertical line for two truncation
//! points; the oscillation around |ζ| shrinks as x grows.
//!
//! `cargo run --release --example vertical_line -- 0.55`

use eulerprod::{scan, PrimeTable, ScanSpec, ScanSummary, ZetaRef};

fn main() -> eulerprod::Result<()> {
    let sigma: f64 = std::env::args()
        .nth(1)
        .map_or(0.55, |a| a.parse().expect("sigma"));
    let table = PrimeTable::sieve(100_000)?;
    let zeta = ZetaRef::default();

    for x in [1_000, 100_000] {
        let rows = scan(
            &ScanSpec::vertical_line(sigma, 0.0, 50.0, 0.1, x),
            &table,
            &zeta,
        )?;
        let s = ScanSummary::from_rows(&rows);
        println!(
            "sigma = {sigma}, x = {x}: rms |err| {:.4}, median rel {:.4}, max rel {:.4}",
            s.rms_abs, s.median_rel, s.max_rel
        );
        for row in rows.iter().step_by(100) {
            println!(
                "  t = {:>5.1}  |product| = {:.6}  |zeta| = {:.6}",
                row.s.im,
                row.value.unwrap().norm(),
                row.reference.unwrap().norm()
            );
        }
    }
    Ok(())
}
