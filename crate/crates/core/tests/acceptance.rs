//! The ten acceptance criteria, one PASS/FAIL line each. Exits non-zero on any failure.

mod common;

use std::time::{Duration, Instant};

use cherednik::algebra::{Ctx, MultiPoly, RatFunc, VarContext, Q};
use cherednik::diffop::{DiffOp, ShiftMonomial};
use cherednik::dsl::{eval_str, parse, EvalOptions, ZChoice};
use cherednik::suites::{self, SuiteParams};
use cherednik::weyl::Permutation;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

type Outcome = Result<String, String>;

struct Criterion {
    title: &'static str,
    budget: Duration,
    run: fn() -> Outcome,
}

fn params(n: usize, l: usize) -> SuiteParams {
    SuiteParams::new(n, l)
}

/// Runs `suite` at every parameter set; succeeds with the number of identities checked.
fn suites_pass(runs: &[(&str, SuiteParams)]) -> Outcome {
    let mut total = 0;
    for (name, p) in runs {
        for report in suites::run(name, p, false).map_err(|e| format!("{name} N={} l={}: {e}", p.n, p.l))? {
            if let Some(bad) = report.items.iter().find(|i| i.residual.is_some()) {
                return Err(format!(
                    "{name} N={} l={}: {} failed: {}",
                    p.n,
                    p.l,
                    bad.id,
                    bad.residual.as_deref().unwrap_or("")
                ));
            }
            if report.items.is_empty() {
                return Err(format!("{name} N={} l={} checked nothing", p.n, p.l));
            }
            total += report.summary.total;
        }
    }
    Ok(format!("{total} identities"))
}

fn opts(n: usize, l: usize, z: ZChoice) -> EvalOptions {
    EvalOptions { n, l, z, ..EvalOptions::default() }
}

fn eval(text: &str, o: EvalOptions) -> Result<DiffOp, String> {
    eval_str(text, o).map_err(|e| format!("{text}: {e}"))
}

/// `(1 + c·t/(w_1 − w_2)) · g · u^λ`.
fn printed_term(ctx: &Ctx, c: i64, g: MultiPoly, lambda: [i32; 2]) -> DiffOp {
    let diff = MultiPoly::w(ctx, 1).sub(&MultiPoly::w(ctx, 2));
    let frac = RatFunc::quotient(MultiPoly::t(ctx).scale(&Q::int(c)), &[diff]).unwrap();
    let coeff = RatFunc::one(ctx).add(&frac).mul_poly(&g);
    DiffOp::term(coeff, ShiftMonomial(lambda.to_vec()), Permutation::identity(2))
}

fn same(what: &str, lhs: &DiffOp, rhs: &DiffOp) -> Result<(), String> {
    if lhs == rhs {
        Ok(())
    } else {
        Err(format!("{what}: {lhs} != {rhs}"))
    }
}

fn rank_two_example() -> Outcome {
    let l0 = opts(2, 0, ZChoice::Symbolic);
    let l1 = opts(2, 1, ZChoice::Zero);
    let ctx0 = VarContext::new(2, 0).unwrap();
    let ctx1 = VarContext::new(2, 1).unwrap();
    let one = |c: &Ctx| MultiPoly::one(c);
    let shifted = |c: &Ctx, i| MultiPoly::w(c, i).sub(&MultiPoly::hbar(c));

    let sum_x = eval("Res(X[1]) + Res(X[2])", l0)?;
    let printed = printed_term(&ctx0, -1, one(&ctx0), [1, 0]).add(&printed_term(&ctx0, 1, one(&ctx0), [0, 1]));
    same("Res X_1 + Res X_2", &sum_x, &printed)?;
    same("E_1[1]", &sum_x, &eval("E[1; 1]", l0)?)?;
    let rendered = sum_x.to_string();
    if rendered != "(-t + w_1 - w_2)/(w_1 - w_2) * u_1 + (t + w_1 - w_2)/(w_1 - w_2) * u_2" {
        return Err(format!("unexpected rendering {rendered}"));
    }

    let sum_xinv = eval("Res(Xinv[1]) + Res(Xinv[2])", l0)?;
    let printed = printed_term(&ctx0, 1, one(&ctx0), [-1, 0]).add(&printed_term(&ctx0, -1, one(&ctx0), [0, -1]));
    same("Res X_1^-1 + Res X_2^-1", &sum_xinv, &printed)?;
    same("F_1[1] at l = 0", &sum_xinv, &eval("F[1; 1]", l0)?)?;

    let sum_y = eval("Res(y[1]) + Res(y[2])", l1)?;
    let printed = printed_term(&ctx1, 1, shifted(&ctx1, 1), [-1, 0]).add(&printed_term(&ctx1, -1, shifted(&ctx1, 2), [0, -1]));
    same("Res y_1 + Res y_2", &sum_y, &printed)?;
    same("F_1[1] at l = 1, z = 0", &sum_y, &eval("F[1; 1]", l1)?)?;
    // The intermediate display before the reflection correction carries an extra t·u_2^{-1}.
    let partial = eval("Res(Xinv[1] * w[1]) + Res(Xinv[2] * w[2])", l1)?;
    let extra = DiffOp::term(RatFunc::var(&ctx1, ctx1.t()), ShiftMonomial(vec![0, -1]), Permutation::identity(2));
    same("Res X_1^-1 w_1 + Res X_2^-1 w_2", &partial, &printed.add(&extra))?;
    let suite = suites_pass(&[("spherical", params(2, 1))])?;
    Ok(format!("printed operators reproduced; {suite}"))
}

fn graded_presentations() -> Outcome {
    suites_pass(&[("hgr1", params(2, 1)), ("hgr2", params(2, 1)), ("hgr1", params(3, 1)), ("hgr2", params(3, 1))])
}

fn rational_and_dunkl() -> Outcome {
    let dunkl = |n| SuiteParams { max_degree: 4, ..params(n, 0) };
    suites_pass(&[
        ("rat", params(2, 1)),
        ("rat", params(3, 1)),
        ("dunkl", dunkl(1)),
        ("dunkl", dunkl(2)),
        ("dunkl", dunkl(3)),
    ])
}

fn restriction_suite() -> Outcome {
    let mut runs = vec![("exchange", params(2, 1)), ("exchange", params(3, 1)), ("exchange", params(4, 1))];
    for n in 1..=3 {
        for l in 0..=3 {
            runs.push(("reorder", params(n, l)));
        }
    }
    runs.push(("leading", params(3, 1)));
    for n in 2..=3 {
        for l in 0..=2 {
            runs.push(("spherical", params(n, l)));
        }
    }
    suites_pass(&runs)
}

fn yangian_relations() -> Outcome {
    let p = |n| SuiteParams { order: 8, ..params(n, 0) };
    suites_pass(&[("yangian", p(1)), ("yangian", p(2)), ("yangian", p(3))])
}

fn shifted_relations() -> Outcome {
    let p = |n, l| SuiteParams { order: 6, max_degree: 2, ..params(n, l) };
    let mut runs = Vec::new();
    for n in 1..=2 {
        for l in 0..=2 {
            runs.push(("tsy", p(n, l)));
            if l > 0 {
                runs.push(("shifted", p(n, l)));
            }
        }
    }
    suites_pass(&runs)
}

fn cyclotomic_dictionary() -> Outcome {
    suites_pass(&[("cyclotomic", SuiteParams { l: 6, ..params(1, 6) })])
}

fn poisson_limit() -> Outcome {
    let mut runs = Vec::new();
    for n in 1..=3 {
        for l in 0..=2 {
            runs.push(("poisson", params(n, l)));
        }
    }
    suites_pass(&runs)
}

fn translation() -> Outcome {
    suites_pass(&[("tau", SuiteParams { max_degree: 4, order: 8, ..params(2, 0) })])
}

/// Seeded randomized laws; counts every case that ran.
fn property_loops() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x5eed_cafe);
    let ctx = common::small_ctx();
    let mut cases = 0;
    for _ in 0..300 {
        let (a, b, c) = (common::poly(&mut rng, &ctx, 4), common::poly(&mut rng, &ctx, 4), common::poly(&mut rng, &ctx, 4));
        let ok = a.add(&b) == b.add(&a)
            && a.mul(&b) == b.mul(&a)
            && a.mul(&b).mul(&c) == a.mul(&b.mul(&c))
            && a.mul(&b.add(&c)) == a.mul(&b).add(&a.mul(&c));
        if !ok {
            return Err(format!("ring axioms fail on {a}, {b}, {c}"));
        }
        let (f, g) = (common::ratfunc(&mut rng, &ctx), common::nonzero_ratfunc(&mut rng, &ctx));
        if f.div(&g).map(|q| q.mul(&g)) != Ok(f.clone()) {
            return Err(format!("(f/g)·g != f for {f}, {g}"));
        }
        cases += 1;
    }
    for _ in 0..300 {
        let (ra, rb) = (rng.gen_bool(0.3), rng.gen_bool(0.3));
        let a = common::diffop(&mut rng, &ctx, 2, ra);
        let b = common::diffop(&mut rng, &ctx, 2, rb);
        let f = RatFunc::from_poly(common::poly(&mut rng, &ctx, 3));
        if a.mul(&b).apply_rat(&f) != a.apply_rat(&b.apply_rat(&f)) {
            return Err(format!("action axiom fails for {a}, {b} on {f}"));
        }
        cases += 1;
    }
    for _ in 0..300 {
        let e = common::expr(&mut rng, 4);
        let text = e.to_string();
        if parse(&text).as_ref() != Ok(&e) {
            return Err(format!("round trip fails on {text}"));
        }
        cases += 1;
    }
    for _ in 0..300 {
        let p = common::poly(&mut rng, &ctx, 4);
        let q = common::nonzero_poly(&mut rng, &ctx, 3);
        if p.mul(&q).exact_divide(&q).as_ref() != Ok(&p) {
            return Err(format!("exact division of ({p})·({q}) by {q}"));
        }
        if q.total_degree().unwrap_or(0) > 0 && p.mul(&q).add(&MultiPoly::one(&ctx)).exact_divide(&q).is_ok() {
            return Err(format!("({p})·({q}) + 1 reported divisible by {q}"));
        }
        cases += 1;
    }
    Ok(format!("{cases} randomized cases"))
}

fn main() {
    let criteria = [
        Criterion { title: "rank-two worked example", budget: Duration::from_secs(1), run: rank_two_example },
        Criterion { title: "graded Cherednik presentations", budget: Duration::from_secs(10), run: graded_presentations },
        Criterion { title: "rational Cherednik and Dunkl operators", budget: Duration::from_secs(30), run: rational_and_dunkl },
        Criterion { title: "exchange, reorder, leading term, spherical sums", budget: Duration::from_secs(60), run: restriction_suite },
        Criterion { title: "affine Yangian relations", budget: Duration::from_secs(120), run: yangian_relations },
        Criterion { title: "shifted Yangian relations", budget: Duration::from_secs(60), run: shifted_relations },
        Criterion { title: "cyclotomic parameter dictionary", budget: Duration::from_secs(1), run: cyclotomic_dictionary },
        Criterion { title: "Poisson brackets in the classical limit", budget: Duration::from_secs(5), run: poisson_limit },
        Criterion { title: "translation automorphism", budget: Duration::from_secs(10), run: translation },
        Criterion { title: "engine property suites", budget: Duration::from_secs(60), run: property_loops },
    ];
    let mut failed = 0;
    for (k, c) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = (c.run)();
        let took = start.elapsed();
        let outcome = match outcome {
            Ok(detail) if took > c.budget => Err(format!("{detail}, but took {took:?} (budget {:?})", c.budget)),
            other => other,
        };
        match outcome {
            Ok(detail) => println!("PASS {:>2} {}: {detail} ({} ms)", k + 1, c.title, took.as_millis()),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {}: {why} ({} ms)", k + 1, c.title, took.as_millis());
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
