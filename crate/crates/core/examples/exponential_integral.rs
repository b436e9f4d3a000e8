//! E₁(z) on and around the negative real axis, showing the two cut sides and
//! which evaluation path the dispatcher picks.

use eulerprod::{e1, BranchSide, Complex64};

fn main() -> eulerprod::Result<()> {
    let points = [
        Complex64::new(1.0, 0.0),
        Complex64::new(10.0, 0.0),
        Complex64::new(-1.0, 0.0),
        Complex64::new(-1.0, 1e-8),
        Complex64::new(-1.0, -1e-8),
        Complex64::new(-6.9, 0.0),
        Complex64::new(-3.45, 96.7),
    ];
    for z in points {
        for cut in [BranchSide::FromAbove, BranchSide::FromBelow] {
            let r = e1(z, cut)?;
            println!(
                "E1({z:>16}) {cut:?}: {:.15e} via {:?}{}",
                r.value,
                r.method,
                if r.on_cut { " (on cut)" } else { "" }
            );
        }
    }
    Ok(())
}
