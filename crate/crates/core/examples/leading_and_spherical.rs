//! Leading shift of `X_i` products and the spherical sums at rank three.

use cherednik::algebra::VarContext;
use cherednik::diffop::{leading_term, verify_preserves_symmetric};
use cherednik::dl_rep::{e_op, Catalogue, SymPolySpec};

fn main() -> cherednik::Result<()> {
    let ctx = VarContext::new(3, 1)?;
    let cat = Catalogue::new(&ctx)?;
    let x12 = cat.x(1)?.mul(cat.x(2)?);
    let (top, coeffs) = leading_term(&x12)?;
    println!("X_1 X_2 has leading shift {top} with {} coefficient(s):", coeffs.len());
    for (sigma, g) in &coeffs {
        println!("  {sigma}: {g}");
    }

    let e1 = e_op(&ctx, 1, &SymPolySpec::one(&ctx, 1))?;
    let sum = cat.x(1)?.add(cat.x(2)?).add(cat.x(3)?);
    assert!(verify_preserves_symmetric(&sum, 3));
    assert_eq!(sum.res(), e1);
    println!("\nRes (X_1 + X_2 + X_3) = E_1[1] = {e1}");
    Ok(())
}
