//! Fitted exponent of |product − ζ(s)| / log x against x, compared with the
//! predicted 1/2 − σ.

use eulerprod::{error_decay, Complex64, PrimeTable, ProductVariant, ZetaRef};

fn main() -> eulerprod::Result<()> {
    let grid = [1_000, 10_000, 100_000, 1_000_000];
    let table = PrimeTable::sieve(1_000_000)?;
    let zeta = ZetaRef::default();
    for sigma in [0.75, 1.25, 1.5, 2.0] {
        let fit = error_decay(
            Complex64::new(sigma, 5.0),
            &grid,
            ProductVariant::Zeta,
            &table,
            &zeta,
        )?;
        println!(
            "sigma = {sigma:<4}  slope {:>8.4}  predicted {:>6.2}",
            fit.slope,
            fit.expected_slope()
        );
        for (x, e) in fit.x_grid.iter().zip(&fit.errors) {
            println!("    x = {x:>8}  |err| = {e:.3e}");
        }
    }
    Ok(())
}
