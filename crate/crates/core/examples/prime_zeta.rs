//! Truncated prime zeta P(s) with the E₁ correction, for s = 2 and s = 0.7.
//! Below s = 1 the value sits on the branch cut, so Im P = −π.

use eulerprod::{prime_zeta_truncated, Complex64, PrimeTable};

fn main() -> eulerprod::Result<()> {
    let table = PrimeTable::sieve(1_000_000)?;
    for s in [2.0, 0.7] {
        for k in 3..=6 {
            let x = 10u64.pow(k);
            let p = prime_zeta_truncated(Complex64::new(s, 0.0), table.view_upto(x)?)?;
            println!("P({s}) at x = 1e{k}: {p:.12}");
        }
    }
    Ok(())
}
