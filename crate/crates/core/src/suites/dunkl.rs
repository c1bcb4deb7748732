//! Relations checked on monomial bases in the Dunkl representations.

use std::sync::Arc;

use crate::algebra::{Ctx, MultiPoly, VarContext};
use crate::dunkl::{laurent_basis, permute_poly, polynomial_basis, rat_dunkl, trig_dunkl, LaurentPoly};
use crate::error::Result;
use crate::report::{Check, Outcome};
use crate::weyl::Permutation;

use super::SuiteParams;

fn swap(n: usize, i: usize, k: usize) -> Permutation {
    Permutation::transposition(n, i, k)
}

/// Runs `f` on every basis element; the first mismatch is reported with its input.
fn on_laurent(
    basis: &[LaurentPoly],
    f: impl Fn(&LaurentPoly) -> Result<(LaurentPoly, LaurentPoly)>,
) -> Result<Outcome> {
    for p in basis {
        let (lhs, rhs) = f(p)?;
        if lhs != rhs {
            return Ok(Outcome::Fail(format!("on {p}: {}", lhs.sub(&rhs))));
        }
    }
    Ok(Outcome::Pass)
}

fn on_poly(basis: &[MultiPoly], f: impl Fn(&MultiPoly) -> Result<(MultiPoly, MultiPoly)>) -> Result<Outcome> {
    for p in basis {
        let (lhs, rhs) = f(p)?;
        if lhs != rhs {
            return Ok(Outcome::Fail(format!("on {p}: {}", lhs.sub(&rhs))));
        }
    }
    Ok(Outcome::Pass)
}

fn xmul(ctx: &Ctx, i: usize, p: &LaurentPoly) -> LaurentPoly {
    LaurentPoly::x(ctx, i, 1).mul(p)
}

pub fn suite(p: &SuiteParams) -> Result<Vec<Check>> {
    let ctx = VarContext::new(p.n, 0)?;
    let n = p.n;
    let d = p.max_degree.max(1);
    let lb = Arc::new(laurent_basis(&ctx, d, -1));
    let pb = Arc::new(polynomial_basis(&ctx, d));
    let t = MultiPoly::t(&ctx);
    let h = MultiPoly::hbar(&ctx);
    let mut v = Vec::new();
    const TRIG: &str = "trigonometric Dunkl representation";
    const RAT: &str = "rational Dunkl representation";
    const COMPAT: &str = "trigonometric and rational Dunkl operators are compatible";

    for i in 1..=n {
        for j in i + 1..=n {
            let b = lb.clone();
            v.push(Check::new(format!("trig [D_{i}, D_{j}] = 0"), TRIG, move || {
                on_laurent(&b, |q| Ok((trig_dunkl(i, &trig_dunkl(j, q)?)?, trig_dunkl(j, &trig_dunkl(i, q)?)?)))
            }));
        }
    }
    for i in 1..n {
        for j in 1..=n {
            let (b, tt) = (lb.clone(), t.clone());
            v.push(Check::new(format!("trig s_{i} D_{j}"), TRIG, move || {
                let s = Permutation::simple(n, i);
                on_laurent(&b, |q| {
                    let lhs = trig_dunkl(j, q)?.permute(&s);
                    let target = s.apply(j);
                    let mut rhs = trig_dunkl(target, &q.permute(&s))?;
                    if j == i {
                        rhs = rhs.sub(&q.scale(&tt));
                    } else if j == i + 1 {
                        rhs = rhs.add(&q.scale(&tt));
                    }
                    Ok((lhs, rhs))
                })
            }));
        }
    }
    for i in 1..=n {
        for j in 1..=n {
            let (b, tt, hh, cx) = (lb.clone(), t.clone(), h.clone(), ctx.clone());
            v.push(Check::new(format!("trig [D_{i}, X_{j}]"), TRIG, move || {
                on_laurent(&b, |q| {
                    let lhs = trig_dunkl(i, &xmul(&cx, j, q))?.sub(&xmul(&cx, j, &trig_dunkl(i, q)?));
                    let rhs = if i == j {
                        let mut acc = xmul(&cx, i, q).scale(&hh.neg());
                        for k in 1..i {
                            acc = acc.add(&xmul(&cx, k, &q.permute(&swap(n, k, i))).scale(&tt));
                        }
                        for k in i + 1..=n {
                            acc = acc.add(&xmul(&cx, i, &q.permute(&swap(n, i, k))).scale(&tt));
                        }
                        acc
                    } else {
                        xmul(&cx, i.min(j), &q.permute(&swap(n, i, j))).scale(&tt.neg())
                    };
                    Ok((lhs, rhs))
                })
            }));
        }
    }

    for i in 1..=n {
        for j in i + 1..=n {
            let b = pb.clone();
            v.push(Check::new(format!("rat [y_{i}, y_{j}] = 0"), RAT, move || {
                on_poly(&b, |q| Ok((rat_dunkl(i, &rat_dunkl(j, q)?)?, rat_dunkl(j, &rat_dunkl(i, q)?)?)))
            }));
        }
        for j in 1..=n {
            let (b, tt, hh, cx) = (pb.clone(), t.clone(), h.clone(), ctx.clone());
            v.push(Check::new(format!("rat [y_{i}, x_{j}]"), RAT, move || {
                let xj = MultiPoly::w(&cx, j);
                on_poly(&b, |q| {
                    let lhs = rat_dunkl(i, &xj.mul(q))?.sub(&xj.mul(&rat_dunkl(i, q)?));
                    let swapped = |k: usize| swap(n, i, k).table();
                    let rhs = if i == j {
                        let mut acc = q.mul(&hh).neg();
                        for k in (1..=n).filter(|&k| k != i) {
                            acc = acc.add(&permute_poly(q, &swapped(k)).mul(&tt));
                        }
                        acc
                    } else {
                        permute_poly(q, &swapped(j)).mul(&tt).neg()
                    };
                    Ok((lhs, rhs))
                })
            }));
        }
    }
    for k in 1..n {
        for i in 1..=n {
            let b = pb.clone();
            v.push(Check::new(format!("rat s_{k} y_{i} = y_{} s_{k}", Permutation::simple(n, k).apply(i)), RAT, move || {
                let s = Permutation::simple(n, k);
                let table = s.table();
                on_poly(&b, |q| {
                    Ok((permute_poly(&rat_dunkl(i, q)?, &table), rat_dunkl(s.apply(i), &permute_poly(q, &table))?))
                })
            }));
        }
    }
    for i in 1..=n {
        let (b, tt, cx) = (pb.clone(), t.clone(), ctx.clone());
        v.push(Check::new(format!("X_{i}^-1 (D_{i} - t sum s_(j,{i})) = y_{i}"), COMPAT, move || {
            for q in b.iter() {
                let lq = LaurentPoly::from_polynomial(q);
                let mut acc = trig_dunkl(i, &lq)?;
                for j in 1..i {
                    acc = acc.sub(&lq.permute(&swap(n, j, i)).scale(&tt));
                }
                let lhs = LaurentPoly::x(&cx, i, -1).mul(&acc);
                let rhs_l = LaurentPoly::from_polynomial(&rat_dunkl(i, q)?);
                if lhs != rhs_l {
                    return Ok(Outcome::Fail(format!("on {q}: {}", lhs.sub(&rhs_l))));
                }
            }
            Ok(Outcome::Pass)
        }));
    }
    Ok(v)
}
