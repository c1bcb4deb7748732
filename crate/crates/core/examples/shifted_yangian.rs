//! The framed realization at `l = 2`: `h_n` for `n >= l` is polynomial after dividing by `t(ħ+t)`.

use cherednik::suites::{run, SuiteParams};
use cherednik::yangian::{ShiftConvention, YangianGens};

fn main() -> cherednik::Result<()> {
    let g = YangianGens::realize(2, 2, ShiftConvention::Barred, 6)?;
    println!("effective framing parameters: {:?}", g.effective_z().iter().map(|z| z.to_string()).collect::<Vec<_>>());
    for n in 2..5 {
        println!("h_{n} = {}", g.h_poly(n)?);
    }
    println!("h_0 (below l) = {}", g.h_formal(0)?);

    let p = SuiteParams { order: 6, max_degree: 2, ..SuiteParams::new(2, 2) };
    for suite in ["tsy", "shifted"] {
        let reports = run(suite, &p, true)?;
        for r in &reports {
            println!("{suite}: {} of {} identities hold", r.summary.passed, r.summary.total);
            assert!(r.passed());
        }
    }
    Ok(())
}
