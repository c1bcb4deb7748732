//! Arithmetic in `Q(ε)` and the framing parameters `z_k` written in cyclotomic parameters.

use cherednik::cyclotomic::{cyclotomic_polynomial, z_from_c, CycNum, ZVariant};

fn main() -> cherednik::Result<()> {
    let l = 6;
    let phi: Vec<String> = cyclotomic_polynomial(l).iter().map(|c| c.to_string()).collect();
    println!("Φ_{l} coefficients: [{}]", phi.join(", "));
    let eps = CycNum::eps_pow(l, 1);
    let x = CycNum::one(l).sub(&eps)?;
    println!("1/(1 - ε) = {}", x.inv()?);
    assert_eq!(x.mul(&x.inv()?)?, CycNum::one(l));

    for k in 1..=l {
        let z = z_from_c(l, k, ZVariant::Quotient)?;
        assert_eq!(z, z_from_c(l, k, ZVariant::GeometricSum)?);
        println!("z_{k} = {z}");
    }
    Ok(())
}
