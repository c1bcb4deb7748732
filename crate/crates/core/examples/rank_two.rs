//! The rank-two computation: spherical restrictions of `X_i^{±1}` and `y_i` are the
//! minuscule generators `E_1[1]` and `F_1[1]`.

use cherednik::algebra::VarContext;
use cherednik::diffop::DiffOp;
use cherednik::dl_rep::{e_op, f_op, Catalogue, ParamMode, SymPolySpec};

fn main() -> cherednik::Result<()> {
    let ctx = VarContext::new(2, 1)?;
    let cat = Catalogue::new(&ctx)?;
    for i in 1..=2 {
        println!("X_{i}      = {}", cat.x(i)?);
        println!("X_{i}^-1   = {}", cat.x_inv(i)?);
    }
    let one = SymPolySpec::one(&ctx, 1);

    let res_x = cat.x(1)?.res().add(&cat.x(2)?.res());
    println!("\nRes X_1 + Res X_2 = {res_x}");
    assert_eq!(res_x, e_op(&ctx, 1, &one)?);

    let res_xinv = cat.x_inv(1)?.res().add(&cat.x_inv(2)?.res());
    println!("Res X_1^-1 + Res X_2^-1 = {res_xinv}");
    assert_eq!(res_xinv, f_op(&ctx, 1, &one, &ParamMode::zero(0))?);

    let res_y = DiffOp::sum(&ctx, &[cat.suzuki_y(1)?.res(), cat.suzuki_y(2)?.res()]);
    println!("Res y_1 + Res y_2 = {res_y}");
    assert_eq!(res_y, f_op(&ctx, 1, &one, &ParamMode::zero(1))?);
    println!("\nall three agree with E_1[1], F_1[1] (l=0) and F_1[1] (l=1, z=0)");
    Ok(())
}
