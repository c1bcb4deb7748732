//! Poisson brackets of the commutative limit: `{Σw_i², Σy_j} = 2Σw_i y_i` at rank three.

use cherednik::algebra::{MultiPoly, VarContext, Q};
use cherednik::diffop::{classical_bracket, classical_limit, ClassicalSpec, DiffOp};

fn main() -> cherednik::Result<()> {
    let (n, l) = (3, 2);
    let ctx = VarContext::new(n, l)?;
    let spec = ClassicalSpec::standard(&ctx);
    let h = MultiPoly::hbar(&ctx);
    let y: Vec<DiffOp> = (1..=n)
        .map(|i| DiffOp::poly(MultiPoly::w(&ctx, i).sub(&h).pow(l as u32)).mul(&DiffOp::u(&ctx, i, -1)))
        .collect();
    let w: Vec<DiffOp> = (1..=n).map(|i| DiffOp::w(&ctx, i)).collect();
    let sum = |ops: Vec<DiffOp>| DiffOp::sum(&ctx, &ops);

    let p2 = sum(w.iter().map(|a| a.pow(2)).collect());
    let sy = sum(y.clone());
    let bracket = classical_bracket(&p2, &sy, &spec)?;
    let expected = classical_limit(&sum(w.iter().zip(&y).map(|(a, b)| a.mul(b)).collect()), &spec)?.scale(&Q::int(2));
    println!("{{Σw², Σy}} = {bracket}");
    assert_eq!(bracket, expected);

    let wy = sum(w.iter().zip(&y).map(|(a, b)| a.mul(b)).collect());
    for k in 1..=3u32 {
        let lhs = classical_bracket(&wy, &sum(y.iter().map(|b| b.pow(k)).collect()), &spec)?;
        let rhs = classical_limit(&sum(y.iter().map(|b| b.pow(k + 1)).collect()), &spec)?.scale(&Q::int(k as i64));
        assert_eq!(lhs, rhs);
        println!("{{Σ w y, Σ y^{k}}} = {lhs}");
    }
    Ok(())
}
