//! Mertens' third theorem: Π_{p≤x} (1 − 1/p)^{−1} / (e^γ log x) → 1.

use eulerprod::{mertens_ratio, PrimeTable};

fn main() -> eulerprod::Result<()> {
    let table = PrimeTable::sieve(10_000_000)?;
    for k in 1..=7 {
        let x = 10u64.pow(k);
        let r = mertens_ratio(table.view_upto(x)?)?;
        println!("x = 1e{k}  ratio = {r:.8}  ratio - 1 = {:.3e}", r - 1.0);
    }
    Ok(())
}
