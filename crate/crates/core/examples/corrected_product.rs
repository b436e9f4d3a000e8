//! Evaluate the raw and corrected products for ζ at one point and compare with
//! the reference value.
//!
//! `cargo run --example corrected_product -- 0.8 14.13 100000`

use eulerprod::{corrected_product, BranchSide, Complex64, PrimeTable, ProductVariant, ZetaRef};

fn main() -> eulerprod::Result<()> {
    let args: Vec<f64> = std::env::args()
        .skip(1)
        .map(|a| a.parse().expect("numeric argument"))
        .collect();
    let sigma = args.first().copied().unwrap_or(0.8);
    let t = args.get(1).copied().unwrap_or(14.0);
    let x = args.get(2).copied().unwrap_or(1e5) as u64;

    let s = Complex64::new(sigma, t);
    let table = PrimeTable::sieve(x)?;
    let zeta = ZetaRef::default();
    let eval = corrected_product(
        s,
        &table,
        ProductVariant::Zeta,
        BranchSide::FromAbove,
        Some(&zeta),
    )?;

    println!("s = {s}, x = {x}, {} primes", table.count());
    println!("raw product        {:.12}", eval.log_raw_product.exp());
    println!("E1 correction      {:.12}", eval.correction);
    println!("corrected product  {:.12}", eval.value);
    println!("zeta(s)            {:.12}", eval.reference.unwrap());
    println!("relative error     {:.3e}", eval.rel_error().unwrap());
    Ok(())
}
