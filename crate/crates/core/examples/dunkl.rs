//! Trigonometric and rational Dunkl operators on a few Laurent monomials.

use cherednik::algebra::{MultiPoly, VarContext};
use cherednik::dunkl::{rat_dunkl, trig_dunkl, LaurentPoly};

fn main() -> cherednik::Result<()> {
    let ctx = VarContext::new(2, 0)?;
    let x1 = LaurentPoly::x(&ctx, 1, 1);
    let x2_inv = LaurentPoly::x(&ctx, 2, -1);
    for p in [x1.clone(), x2_inv.clone(), x1.mul(&x2_inv), x1.mul(&x1)] {
        println!("D_1({p}) = {}", trig_dunkl(1, &p)?);
        println!("D_2({p}) = {}", trig_dunkl(2, &p)?);
    }
    // Trigonometric operators commute.
    let p = x1.mul(&x1).mul(&x2_inv);
    assert_eq!(trig_dunkl(1, &trig_dunkl(2, &p)?)?, trig_dunkl(2, &trig_dunkl(1, &p)?)?);

    let w1 = MultiPoly::w(&ctx, 1);
    let w2 = MultiPoly::w(&ctx, 2);
    let q = w1.pow(2).mul(&w2);
    println!("\ny_1({q}) = {}", rat_dunkl(1, &q)?);
    println!("y_2({q}) = {}", rat_dunkl(2, &q)?);
    Ok(())
}
