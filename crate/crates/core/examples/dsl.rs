//! Parsing, rendering and evaluating expressions in the operator language.

use cherednik::dsl::{parse, EvalOptions, Evaluator, ZChoice};

fn main() -> cherednik::Result<()> {
    let rank_one = Evaluator::new(EvalOptions { n: 1, l: 0, ..EvalOptions::default() })?;
    for text in ["comm(w[1], u[1])", "comm(e[1], f[0])", "comm(e[2], f[1]) - comm(e[1], f[2])"] {
        let e = parse(text)?;
        println!("{e}  =>  {}", rank_one.eval(&e)?);
    }

    let rank_two = Evaluator::new(EvalOptions { n: 2, l: 1, z: ZChoice::Zero, ..EvalOptions::default() })?;
    let e = parse("Res(y[1]) + Res(y[2]) - F[1; 1]")?;
    println!("{e}  =>  {}", rank_two.eval(&e)?);
    let op = rank_two.eval(&parse("E[1; 1]")?)?;
    let f = rank_two.poly(&parse("w[1]^2 + w[2]^2")?)?;
    println!("E[1; 1] applied to {f}  =>  {}", op.apply(&f));

    match parse("comm(w[1],\n  Q[2])") {
        Err(err) => println!("diagnostic: {err}"),
        Ok(_) => unreachable!("Q is not an atom"),
    }
    Ok(())
}
