//! The three corrected products side by side, with the identities that tie
//! them together.

use eulerprod::{
    corrected_product, log_raw_product, BranchSide, Complex64, PrimeTable, ProductVariant, ZetaRef,
};

fn main() -> eulerprod::Result<()> {
    let table = PrimeTable::sieve(100_000)?;
    let zeta = ZetaRef::default();
    let s = Complex64::new(0.9, 7.5);

    let mut values = Vec::new();
    for v in ProductVariant::ALL {
        let e = corrected_product(s, &table, v, BranchSide::FromAbove, Some(&zeta))?;
        println!(
            "{:<13} {:.10}  ref {:.10}  rel err {:.2e}",
            v.name(),
            e.value,
            e.reference.unwrap(),
            e.rel_error().unwrap()
        );
        values.push(e.value);
    }
    let raw2s = log_raw_product(2.0 * s, &table, ProductVariant::Zeta)?.exp();
    println!(
        "zeta * inverse - 1      = {:.2e}",
        (values[0] * values[1] - 1.0).norm()
    );
    println!(
        "ratio * zeta - raw(2s)  = {:.2e}",
        (values[2] * values[0] - raw2s).norm()
    );
    Ok(())
}
