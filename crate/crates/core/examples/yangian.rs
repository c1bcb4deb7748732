//! The affine Yangian realization: generators, Cartan currents and `[e_m, f_n] = ħ h_{m+n}`.

use cherednik::algebra::MultiPoly;
use cherednik::diffop::DiffOp;
use cherednik::yangian::{ShiftConvention, YangianGens};

fn main() -> cherednik::Result<()> {
    let g = YangianGens::realize(2, 0, ShiftConvention::Barred, 8)?;
    println!("D_(0,1) = {}", g.d_poly(1)?);
    println!("D_(0,2) = {}", g.d_poly(2)?);
    println!("e_1 = {}", g.e(1)?);
    println!("f_0 = {}", g.f(0)?);
    for n in 0..4 {
        println!("h_{n} = {}", g.h_poly(n)?);
    }
    let hbar = DiffOp::poly(MultiPoly::hbar(g.ctx()));
    for (m, n) in [(0, 0), (1, 0), (1, 1), (2, 1)] {
        let lhs = g.e(m)?.commutator(&g.f(n)?);
        assert_eq!(lhs, hbar.mul(&g.h((m + n) as usize)?));
        assert_eq!(lhs, g.ef_closed_form(m as usize, n as usize)?);
    }
    println!("\n[e_m, f_n] = ħ h_(m+n) holds for the sampled indices, via the series and the closed form");
    Ok(())
}
