//! Sieve once, then take views for smaller truncation points.

use eulerprod::PrimeTable;

fn main() -> eulerprod::Result<()> {
    let table = PrimeTable::sieve(10_000_000)?;
    for k in 1..=7 {
        println!("pi(1e{k}) = {}", table.prime_pi(10u64.pow(k))?);
    }
    let small = table.view_upto(30)?;
    println!("primes up to 30: {:?}", small.primes());
    Ok(())
}
