//! Suites for the graded Cherednik algebra images and their spherical parts.

use std::sync::Arc;

use crate::algebra::{Ctx, MultiPoly, RatFunc, VarContext, Q};
use crate::diffop::{leading_term, power_sum, DiffOp, ShiftMonomial};
use crate::dl_rep::{cross_ratio, e_op, f_op, subset_shift, Catalogue, ParamMode, SymPolySpec};
use crate::error::Result;
use crate::report::{Check, Outcome};
use crate::weyl::{combinations, enumerate, Permutation};

use super::SuiteParams;

type Cat = Arc<Catalogue>;

fn catalogue(p: &SuiteParams) -> Result<Cat> {
    let ctx = VarContext::new(p.n, p.l)?;
    Ok(Arc::new(Catalogue::new(&ctx)?))
}

/// Pushes a check whose body borrows the shared catalogue as `$c`.
macro_rules! check {
    ($v:expr, $cat:expr, $id:expr, $anchor:expr, |$c:ident| $body:expr) => {{
        let shared = $cat.clone();
        $v.push(Check::new($id, $anchor, move || {
            let $c: &Catalogue = &shared;
            $body
        }));
    }};
}

fn w(ctx: &Ctx, i: usize) -> DiffOp {
    DiffOp::w(ctx, i)
}

fn t_rat(ctx: &Ctx) -> RatFunc {
    RatFunc::var(ctx, ctx.t())
}

fn t_op(ctx: &Ctx) -> DiffOp {
    DiffOp::scalar(t_rat(ctx))
}

fn hbar_op(ctx: &Ctx) -> DiffOp {
    DiffOp::poly(MultiPoly::hbar(ctx))
}

/// Relations among `s_0..s_{N-1}`, `π^{±1}` and `w_i`.
pub fn hgr1(p: &SuiteParams) -> Result<Vec<Check>> {
    let cat = catalogue(p)?;
    let n = p.n;
    let mut v = Vec::new();
    const WEYL: &str = "extended affine Weyl group";
    const ROT: &str = "rotation against polynomial generators";
    const HECKE: &str = "degenerate affine Hecke cross relations";
    for i in 1..=n {
        for j in i + 1..=n {
            check!(v, cat, format!("[w_{i}, w_{j}] = 0"), "polynomial generators commute", |c| {
                Ok(Outcome::zero_op(&w(c.ctx(), i).commutator(&w(c.ctx(), j))))
            });
        }
    }
    check!(v, cat, "pi pi^-1 = 1 = pi^-1 pi", WEYL, |c| {
        let id = DiffOp::identity(c.ctx());
        Ok(Outcome::all([Outcome::ops(&c.pi().mul(c.pi_inv()), &id), Outcome::ops(&c.pi_inv().mul(c.pi()), &id)]))
    });
    for i in 1..n {
        check!(v, cat, format!("pi w_{i} = w_{} pi", i + 1), ROT, |c| {
            Ok(Outcome::ops(&c.pi().mul(&w(c.ctx(), i)), &w(c.ctx(), i + 1).mul(c.pi())))
        });
    }
    check!(v, cat, format!("pi w_{n} = (w_1 + hbar) pi"), ROT, |c| {
        let rhs = w(c.ctx(), 1).add(&hbar_op(c.ctx())).mul(c.pi());
        Ok(Outcome::ops(&c.pi().mul(&w(c.ctx(), n)), &rhs))
    });
    if n < 2 {
        return Ok(v);
    }
    for i in 0..n {
        check!(v, cat, format!("s_{i}^2 = 1"), WEYL, |c| {
            let s = c.affine_s(i)?;
            Ok(Outcome::ops(&s.mul(s), &DiffOp::identity(c.ctx())))
        });
        let next = (i + 1) % n;
        check!(v, cat, format!("pi s_{i} = s_{next} pi"), WEYL, |c| {
            Ok(Outcome::ops(&c.pi().mul(c.affine_s(i)?), &c.affine_s(next)?.mul(c.pi())))
        });
    }
    if n >= 3 {
        for i in 0..n {
            let j = (i + 1) % n;
            check!(v, cat, format!("s_{i} s_{j} s_{i} = s_{j} s_{i} s_{j}"), WEYL, |c| {
                let (a, b) = (c.affine_s(i)?, c.affine_s(j)?);
                Ok(Outcome::ops(&a.mul(b).mul(a), &b.mul(a).mul(b)))
            });
        }
    }
    for i in 0..n {
        for j in i + 2..n {
            if i == 0 && j == n - 1 {
                continue;
            }
            check!(v, cat, format!("s_{i} s_{j} = s_{j} s_{i}"), WEYL, |c| {
                Ok(Outcome::zero_op(&c.affine_s(i)?.commutator(c.affine_s(j)?)))
            });
        }
    }
    push_hecke_cross(&mut v, &cat, n, HECKE);
    check!(v, cat, "s_0 w_1 = (w_N - hbar) s_0 + t", HECKE, |c| {
        let ctx = c.ctx();
        let s0 = c.s0()?;
        let rhs = w(ctx, n).sub(&hbar_op(ctx)).mul(s0).add(&t_op(ctx));
        Ok(Outcome::ops(&s0.mul(&w(ctx, 1)), &rhs))
    });
    check!(v, cat, "s_0 w_N = (w_1 + hbar) s_0 - t", HECKE, |c| {
        let ctx = c.ctx();
        let s0 = c.s0()?;
        let rhs = w(ctx, 1).add(&hbar_op(ctx)).mul(s0).sub(&t_op(ctx));
        Ok(Outcome::ops(&s0.mul(&w(ctx, n)), &rhs))
    });
    for j in 2..n {
        check!(v, cat, format!("s_0 w_{j} = w_{j} s_0"), HECKE, |c| {
            Ok(Outcome::zero_op(&c.s0()?.commutator(&w(c.ctx(), j))))
        });
    }
    Ok(v)
}

/// `s_i w_i = w_{i+1} s_i − t`, `s_i w_{i+1} = w_i s_i + t`, `[s_i, w_j] = 0` otherwise.
fn push_hecke_cross(v: &mut Vec<Check>, cat: &Cat, n: usize, anchor: &'static str) {
    for i in 1..n {
        check!(v, cat, format!("s_{i} w_{i} = w_{} s_{i} - t", i + 1), anchor, |c| {
            let ctx = c.ctx();
            let s = c.s(i)?;
            Ok(Outcome::ops(&s.mul(&w(ctx, i)), &w(ctx, i + 1).mul(s).sub(&t_op(ctx))))
        });
        check!(v, cat, format!("s_{i} w_{} = w_{i} s_{i} + t", i + 1), anchor, |c| {
            let ctx = c.ctx();
            let s = c.s(i)?;
            Ok(Outcome::ops(&s.mul(&w(ctx, i + 1)), &w(ctx, i).mul(s).add(&t_op(ctx))))
        });
        for j in (1..=n).filter(|&j| j != i && j != i + 1) {
            check!(v, cat, format!("s_{i} w_{j} = w_{j} s_{i}"), anchor, |c| {
                Ok(Outcome::zero_op(&c.s(i)?.commutator(&w(c.ctx(), j))))
            });
        }
    }
}

/// Finite Weyl group relations for `s_1..s_{N-1}`.
fn push_finite_weyl(v: &mut Vec<Check>, cat: &Cat, n: usize, anchor: &'static str) {
    for i in 1..n {
        check!(v, cat, format!("s_{i}^2 = 1"), anchor, |c| {
            let s = c.s(i)?;
            Ok(Outcome::ops(&s.mul(s), &DiffOp::identity(c.ctx())))
        });
        if i + 1 < n {
            let j = i + 1;
            check!(v, cat, format!("s_{i} s_{j} s_{i} = s_{j} s_{i} s_{j}"), anchor, |c| {
                let (a, b) = (c.s(i)?, c.s(j)?);
                Ok(Outcome::ops(&a.mul(b).mul(a), &b.mul(a).mul(b)))
            });
        }
        for j in i + 2..n {
            check!(v, cat, format!("s_{i} s_{j} = s_{j} s_{i}"), anchor, |c| {
                Ok(Outcome::zero_op(&c.s(i)?.commutator(c.s(j)?)))
            });
        }
    }
}

/// Relations among `X_i^{±1}`, `s_i` and `w_i`.
pub fn hgr2(p: &SuiteParams) -> Result<Vec<Check>> {
    let cat = catalogue(p)?;
    let n = p.n;
    let mut v = Vec::new();
    const WEYL: &str = "symmetric group";
    const LATTICE: &str = "Laurent generators commute and invert";
    const EQUIV: &str = "Weyl group permutes Laurent generators";
    const CROSS: &str = "polynomial against Laurent generators";
    push_finite_weyl(&mut v, &cat, n, WEYL);
    for i in 1..=n {
        check!(v, cat, format!("X_{i}^-1 X_{i} = 1 = X_{i} X_{i}^-1"), LATTICE, |c| {
            let id = DiffOp::identity(c.ctx());
            let (x, xi) = (c.x(i)?, c.x_inv(i)?);
            Ok(Outcome::all([Outcome::ops(&xi.mul(x), &id), Outcome::ops(&x.mul(xi), &id)]))
        });
        for j in i + 1..=n {
            check!(v, cat, format!("[X_{i}, X_{j}] = 0"), LATTICE, |c| {
                Ok(Outcome::zero_op(&c.x(i)?.commutator(c.x(j)?)))
            });
        }
    }
    for k in 1..n {
        for i in 1..=n {
            let si = Permutation::simple(n, k).apply(i);
            check!(v, cat, format!("s_{k} X_{i}^(+-1) = X_{si}^(+-1) s_{k}"), EQUIV, |c| {
                let s = c.s(k)?;
                Ok(Outcome::all([
                    Outcome::ops(&s.mul(c.x(i)?), &c.x(si)?.mul(s)),
                    Outcome::ops(&s.mul(c.x_inv(i)?), &c.x_inv(si)?.mul(s)),
                ]))
            });
        }
    }
    push_hecke_cross(&mut v, &cat, n, "degenerate affine Hecke cross relations");
    for i in 1..=n {
        for j in 1..=n {
            if i == j {
                check!(v, cat, format!("[w_{i}, X_{i}] = -hbar X_{i} + t sums"), CROSS, |c| {
                    let ctx = c.ctx();
                    let x = c.x(i)?;
                    let mut rhs = hbar_op(ctx).mul(x).neg();
                    for k in 1..i {
                        rhs = rhs.add(&c.x(k)?.mul(&c.s_ij(k, i)?).left_mul(&t_rat(ctx)));
                    }
                    for k in i + 1..=n {
                        rhs = rhs.add(&x.mul(&c.s_ij(i, k)?).left_mul(&t_rat(ctx)));
                    }
                    Ok(Outcome::ops(&w(ctx, i).commutator(x), &rhs))
                });
            } else {
                let owner = i.min(j);
                check!(v, cat, format!("[w_{i}, X_{j}] = -t X_{owner} s_({},{})", i.min(j), i.max(j)), CROSS, |c| {
                    let ctx = c.ctx();
                    let rhs = c.x(owner)?.mul(&c.s_ij(i, j)?).left_mul(&t_rat(ctx)).neg();
                    Ok(Outcome::ops(&w(ctx, i).commutator(c.x(j)?), &rhs))
                });
            }
        }
    }
    Ok(v)
}

/// Rational Cherednik relations for `x_i = X_i` and the Suzuki `y_i`.
pub fn rational(p: &SuiteParams) -> Result<Vec<Check>> {
    let cat = catalogue(p)?;
    let n = p.n;
    let ys: Arc<Vec<DiffOp>> = Arc::new((1..=n).map(|i| cat.suzuki_y(i)).collect::<Result<_>>()?);
    let mut v = Vec::new();
    const COMM: &str = "rational Cherednik: commuting families";
    const CROSS: &str = "rational Cherednik: [y_i, x_j]";
    const EQUIV: &str = "rational Cherednik: Weyl group equivariance";
    for i in 1..=n {
        for j in i + 1..=n {
            check!(v, cat, format!("[x_{i}, x_{j}] = 0"), COMM, |c| Ok(Outcome::zero_op(&c.x(i)?.commutator(c.x(j)?))));
            let y = ys.clone();
            v.push(Check::new(format!("[y_{i}, y_{j}] = 0"), COMM, move || {
                Ok(Outcome::zero_op(&y[i - 1].commutator(&y[j - 1])))
            }));
        }
    }
    for i in 1..=n {
        for j in 1..=n {
            let y = ys.clone();
            check!(v, cat, format!("[y_{i}, x_{j}]"), CROSS, |c| {
                let ctx = c.ctx();
                let lhs = y[i - 1].commutator(c.x(j)?);
                let rhs = if i == j {
                    let mut acc = hbar_op(ctx).neg();
                    for k in (1..=n).filter(|&k| k != i) {
                        acc = acc.add(&c.s_ij(i, k)?.left_mul(&t_rat(ctx)));
                    }
                    acc
                } else {
                    c.s_ij(i, j)?.left_mul(&t_rat(ctx)).neg()
                };
                Ok(Outcome::ops(&lhs, &rhs))
            });
        }
    }
    for k in 1..n {
        for i in 1..=n {
            let si = Permutation::simple(n, k).apply(i);
            let y = ys.clone();
            check!(v, cat, format!("s_{k} y_{i} = y_{si} s_{k}"), EQUIV, |c| {
                let s = c.s(k)?;
                Ok(Outcome::ops(&s.mul(&y[i - 1]), &y[si - 1].mul(s)))
            });
        }
    }
    Ok(v)
}

fn sum_over(c: &Catalogue, ks: impl Iterator<Item = (usize, usize)>) -> Result<DiffOp> {
    let mut acc = DiffOp::zero(c.ctx());
    for (a, b) in ks {
        acc = acc.add(&c.s_ij(a, b)?);
    }
    Ok(acc.left_mul(&t_rat(c.ctx())))
}

/// `w_i + t Σ_{i<k} s_{ik}`.
fn dressed(c: &Catalogue, i: usize) -> Result<DiffOp> {
    Ok(w(c.ctx(), i).add(&sum_over(c, (i + 1..=c.n()).map(|k| (i, k)))?))
}

/// Exchange relations for transpositions.
pub fn exchange(p: &SuiteParams) -> Result<Vec<Check>> {
    let cat = catalogue(p)?;
    let n = p.n;
    let mut v = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            check!(v, cat, format!("s_({i},{j}) w_{i}"), "exchange: transposition past w", |c| {
                let ctx = c.ctx();
                let sij = c.s_ij(i, j)?;
                let mut inner = DiffOp::identity(ctx);
                for k in i + 1..j {
                    inner = inner.add(&c.s_ij(i, k)?.mul(&c.s_ij(k, j)?));
                }
                let rhs = w(ctx, j).mul(&sij).sub(&inner.left_mul(&t_rat(ctx)));
                Ok(Outcome::ops(&sij.mul(&w(ctx, i)), &rhs))
            });
            check!(v, cat, format!("s_({i},{j}) dressed w_{i}"), "exchange: transposition past dressed w", |c| {
                let sij = c.s_ij(i, j)?;
                Ok(Outcome::ops(&sij.mul(&dressed(c, i)?), &dressed(c, j)?.mul(&sij)))
            });
        }
    }
    for len in 3..=n {
        for chain in combinations(n, len) {
            let label: Vec<String> = chain.iter().map(|x| x.to_string()).collect();
            check!(v, cat, format!("chain {}", label.join("<")), "exchange: chain of transpositions", |c| {
                let mut word = DiffOp::identity(c.ctx());
                for q in (0..chain.len() - 1).rev() {
                    word = word.mul(&c.s_ij(chain[q], chain[q + 1])?);
                }
                let first = chain[0];
                let last = *chain.last().unwrap();
                Ok(Outcome::ops(&word.mul(&dressed(c, first)?), &dressed(c, last)?.mul(&word)))
            });
        }
    }
    Ok(v)
}

/// Normal ordering of the noncommuting framing product, with symbolic `z_k`.
pub fn reorder(p: &SuiteParams) -> Result<Vec<Check>> {
    let cat = catalogue(p)?;
    let mode = ParamMode::symbolic(p.l);
    let mut v = Vec::new();
    for i in 1..=p.n {
        let m = mode.clone();
        check!(v, cat, format!("A_1..A_{} at i={i}", p.l), "framing product normal order", |c| {
            Ok(Outcome::ops(&c.reorder_product(i, &m)?, &c.reorder_expansion(i, &m, false)?))
        });
        if p.l >= 1 {
            let m = mode.clone();
            check!(v, cat, format!("Y_{i} expansion"), "framed Y_i normal order", |c| {
                Ok(Outcome::ops(&c.oblomkov_y(i, &m)?, &c.reorder_expansion(i, &m, true)?))
            });
        }
    }
    Ok(v)
}

/// Every shift of `op` lies in `allowed` and the leading shift is `top`.
fn triangular(op: &DiffOp, allowed: &[ShiftMonomial], top: &ShiftMonomial) -> Result<Outcome> {
    if let Some(bad) = op.shifts().into_iter().find(|s| !allowed.contains(s)) {
        return Ok(Outcome::Fail(format!("unexpected shift {bad} in {op}")));
    }
    let (lead, _) = leading_term(op)?;
    Ok(Outcome::values(&lead, top))
}

fn leading_coefficient(op: &DiffOp) -> Result<RatFunc> {
    let (_, coeffs) = leading_term(op)?;
    Ok(RatFunc::sum(op.ctx(), coeffs.iter().map(|(_, g)| g)))
}

/// `Π_{j≠i} (w_i − w_j + sign·t)/(w_i − w_j)`.
fn single_cross(ctx: &Ctx, i: usize, sign: i64) -> Result<RatFunc> {
    cross_ratio(ctx, &[i], sign)
}

/// Triangularity and leading terms of the residues of `X_i^{±1}` and `Y_i`.
pub fn leading(p: &SuiteParams) -> Result<Vec<Check>> {
    let cat = catalogue(p)?;
    let n = p.n;
    let mut v = Vec::new();
    const TRI: &str = "leading terms: triangularity";
    const TOP: &str = "leading terms: explicit coefficient";
    let up = |i: usize| -> Vec<ShiftMonomial> { (1..=i).map(|j| ShiftMonomial::unit(n, j, 1)).collect() };
    let down = |i: usize| -> Vec<ShiftMonomial> { (i..=n).map(|j| ShiftMonomial::unit(n, j, -1)).collect() };
    for i in 1..=n {
        let allowed = up(i);
        check!(v, cat, format!("Res X_{i} in span u_1..u_{i}"), TRI, |c| {
            triangular(&c.x(i)?.res(), &allowed, &ShiftMonomial::unit(n, i, 1))
        });
        let allowed = down(i);
        check!(v, cat, format!("Res X_{i}^-1 in span u_{i}^-1..u_{n}^-1"), TRI, |c| {
            triangular(&c.x_inv(i)?.res(), &allowed, &ShiftMonomial::unit(n, i, -1))
        });
    }
    check!(v, cat, format!("leading coefficient of Res X_{n}"), TOP, |c| {
        Ok(Outcome::rats(&leading_coefficient(&c.x(n)?.res())?, &single_cross(c.ctx(), n, -1)?))
    });
    check!(v, cat, "leading coefficient of Res X_1^-1", TOP, |c| {
        Ok(Outcome::rats(&leading_coefficient(&c.x_inv(1)?.res())?, &single_cross(c.ctx(), 1, 1)?))
    });
    if n <= 4 {
        for i in 1..=n {
            let allowed = down(i);
            check!(v, cat, format!("Res X_{i}^-1 sigma in span u_{i}^-1..u_{n}^-1"), TRI, |c| {
                for sigma in enumerate(n)? {
                    let op = c.x_inv(i)?.mul(&c.perm(&sigma)?).res();
                    if let Some(bad) = op.shifts().into_iter().find(|s| !allowed.contains(s)) {
                        return Ok(Outcome::Fail(format!("sigma = {sigma}: unexpected shift {bad}")));
                    }
                }
                Ok(Outcome::Pass)
            });
        }
    }
    if p.l >= 1 {
        let mode = ParamMode::symbolic(p.l);
        for i in 1..=n {
            let allowed = down(i);
            let m = mode.clone();
            check!(v, cat, format!("Res Y_{i} in span u_{i}^-1..u_{n}^-1"), TRI, |c| {
                triangular(&c.oblomkov_y(i, &m)?.res(), &allowed, &ShiftMonomial::unit(n, i, -1))
            });
        }
        let m = mode.clone();
        check!(v, cat, "leading coefficient of Res Y_1", TOP, |c| {
            let ctx = c.ctx();
            let expect = single_cross(ctx, 1, 1)?.mul_poly(&m.framing(ctx, &MultiPoly::w(ctx, 1)));
            Ok(Outcome::rats(&leading_coefficient(&c.oblomkov_y(1, &m)?.res())?, &expect))
        });
    }
    Ok(v)
}

fn res_sum(ops: &[&DiffOp], ctx: &Ctx) -> DiffOp {
    let rs: Vec<DiffOp> = ops.iter().map(|o| o.res()).collect();
    DiffOp::sum(ctx, rs.iter())
}

/// `Σ_{#I=n} Π_{i∈I} op_i`, with the factors multiplied in increasing index order.
fn elementary_in(ctx: &Ctx, ops: &[DiffOp], n: usize) -> DiffOp {
    let terms: Vec<DiffOp> = combinations(ops.len(), n)
        .into_iter()
        .map(|s| DiffOp::product(ctx, s.iter().map(|&i| &ops[i - 1])))
        .collect();
    DiffOp::sum(ctx, terms.iter())
}

/// Symmetric combinations of `X_i^{±1}` and `Y_i` restrict to `E_n[1]` and `F_n[1]`.
pub fn spherical(p: &SuiteParams) -> Result<Vec<Check>> {
    let cat = catalogue(p)?;
    let n = p.n;
    let mut v = Vec::new();
    const SPH: &str = "spherical restriction";
    check!(v, cat, "sum Res X_i = E_1[1]", SPH, |c| {
        let ctx = c.ctx();
        let xs: Vec<&DiffOp> = (1..=n).map(|i| c.x(i)).collect::<Result<_>>()?;
        Ok(Outcome::ops(&res_sum(&xs, ctx), &e_op(ctx, 1, &SymPolySpec::one(ctx, 1))?))
    });
    check!(v, cat, "sum Res X_i^-1 = F_1[1] (l=0)", SPH, |c| {
        let ctx = c.ctx();
        let xs: Vec<&DiffOp> = (1..=n).map(|i| c.x_inv(i)).collect::<Result<_>>()?;
        let f = f_op(ctx, 1, &SymPolySpec::one(ctx, 1), &ParamMode::zero(0))?;
        Ok(Outcome::ops(&res_sum(&xs, ctx), &f))
    });
    if p.l >= 1 {
        let mode = ParamMode::symbolic(p.l);
        check!(v, cat, format!("sum Res Y_i = F_1[1] (l={})", p.l), SPH, |c| {
            let ctx = c.ctx();
            let ys: Vec<DiffOp> = (1..=n).map(|i| c.oblomkov_y(i, &mode)).collect::<Result<_>>()?;
            let refs: Vec<&DiffOp> = ys.iter().collect();
            let f = f_op(ctx, 1, &SymPolySpec::one(ctx, 1), &mode)?;
            Ok(Outcome::ops(&res_sum(&refs, ctx), &f))
        });
    }
    if n <= 3 {
        for k in 2..=n {
            check!(v, cat, format!("Res e_{k}(X) = E_{k}[1]"), "spherical restriction of elementary symmetric functions", |c| {
                let ctx = c.ctx();
                let xs: Vec<DiffOp> = (1..=n).map(|i| c.x(i).cloned()).collect::<Result<_>>()?;
                Ok(Outcome::ops(&elementary_in(ctx, &xs, k).res(), &e_op(ctx, k, &SymPolySpec::one(ctx, k))?))
            });
            check!(v, cat, format!("Res e_{k}(X^-1) = F_{k}[1] (l=0)"), "spherical restriction of elementary symmetric functions", |c| {
                let ctx = c.ctx();
                let xs: Vec<DiffOp> = (1..=n).map(|i| c.x_inv(i).cloned()).collect::<Result<_>>()?;
                let f = f_op(ctx, k, &SymPolySpec::one(ctx, k), &ParamMode::zero(0))?;
                Ok(Outcome::ops(&elementary_in(ctx, &xs, k).res(), &f))
            });
        }
    }
    if n == 2 {
        push_rank_two_displays(&mut v, &cat);
    }
    Ok(v)
}

/// The explicit rank-two operators, written out term by term.
fn push_rank_two_displays(v: &mut Vec<Check>, cat: &Cat) {
    const GL2: &str = "rank two worked example";
    fn r(ctx: &Ctx, den: MultiPoly) -> Result<RatFunc> {
        RatFunc::quotient(MultiPoly::t(ctx), &[den])
    }
    fn two_term(ctx: &Ctx, ratio: &RatFunc, main: DiffOp, other: &DiffOp) -> DiffOp {
        main.left_mul(&RatFunc::one(ctx).add(ratio)).sub(&other.left_mul(ratio))
    }
    fn ws(ctx: &Ctx) -> (MultiPoly, MultiPoly, MultiPoly) {
        (MultiPoly::w(ctx, 1), MultiPoly::w(ctx, 2), MultiPoly::hbar(ctx))
    }
    check!(v, cat, "X_1 display", GL2, |c| {
        let ctx = c.ctx();
        let (w1, w2, h) = ws(ctx);
        let e = two_term(ctx, &r(ctx, w2.sub(&w1).sub(&h))?, DiffOp::u(ctx, 1, 1), c.pi());
        Ok(Outcome::ops(c.x(1)?, &e))
    });
    check!(v, cat, "X_2 display", GL2, |c| {
        let ctx = c.ctx();
        let (w1, w2, _) = ws(ctx);
        let e = two_term(ctx, &r(ctx, w1.sub(&w2))?, DiffOp::u(ctx, 2, 1), c.pi());
        Ok(Outcome::ops(c.x(2)?, &e))
    });
    check!(v, cat, "X_1^-1 display", GL2, |c| {
        let ctx = c.ctx();
        let (w1, w2, _) = ws(ctx);
        let e = two_term(ctx, &r(ctx, w1.sub(&w2))?, DiffOp::u(ctx, 1, -1), c.pi_inv());
        Ok(Outcome::ops(c.x_inv(1)?, &e))
    });
    check!(v, cat, "X_2^-1 display", GL2, |c| {
        let ctx = c.ctx();
        let (w1, w2, h) = ws(ctx);
        let e = two_term(ctx, &r(ctx, w2.sub(&h).sub(&w1))?, DiffOp::u(ctx, 2, -1), c.pi_inv());
        Ok(Outcome::ops(c.x_inv(2)?, &e))
    });
    check!(v, cat, "Res pi = u_1, Res pi^-1 = u_2^-1", GL2, |c| {
        let ctx = c.ctx();
        Ok(Outcome::all([
            Outcome::ops(&c.pi().res(), &DiffOp::u(ctx, 1, 1)),
            Outcome::ops(&c.pi_inv().res(), &DiffOp::u(ctx, 2, -1)),
        ]))
    });
    check!(v, cat, "Res X_i^(+-1) displays", GL2, |c| {
        let ctx = c.ctx();
        let (w1, w2, _) = ws(ctx);
        let q = r(ctx, w1.sub(&w2))?;
        Ok(Outcome::all([
            Outcome::ops(&c.x(1)?.res(), &DiffOp::u(ctx, 1, 1)),
            Outcome::ops(&c.x(2)?.res(), &two_term(ctx, &q, DiffOp::u(ctx, 2, 1), &DiffOp::u(ctx, 1, 1))),
            Outcome::ops(&c.x_inv(1)?.res(), &two_term(ctx, &q, DiffOp::u(ctx, 1, -1), &DiffOp::u(ctx, 2, -1))),
            Outcome::ops(&c.x_inv(2)?.res(), &DiffOp::u(ctx, 2, -1)),
        ]))
    });
    check!(v, cat, "Res y_i displays (l=1, z=0)", GL2, |c| {
        let ctx = c.ctx();
        let (w1, w2, h) = ws(ctx);
        let q = r(ctx, w1.sub(&w2))?;
        let mode = ParamMode::zero(1);
        let a1 = DiffOp::u(ctx, 1, -1).left_mul(&RatFunc::from_poly(w1.sub(&h)));
        let a2 = DiffOp::u(ctx, 2, -1).left_mul(&RatFunc::from_poly(w2.sub(&h)));
        Ok(Outcome::all([
            Outcome::ops(&c.oblomkov_y(1, &mode)?.res(), &two_term(ctx, &q, a1, &a2)),
            Outcome::ops(&c.oblomkov_y(2, &mode)?.res(), &a2),
        ]))
    });
    check!(v, cat, "E_1[1] display", GL2, |c| {
        let ctx = c.ctx();
        let (w1, w2, _) = ws(ctx);
        let q = r(ctx, w1.sub(&w2))?;
        let one = RatFunc::one(ctx);
        let e = DiffOp::u(ctx, 1, 1).left_mul(&one.sub(&q)).add(&DiffOp::u(ctx, 2, 1).left_mul(&one.add(&q)));
        Ok(Outcome::ops(&e_op(ctx, 1, &SymPolySpec::one(ctx, 1))?, &e))
    });
}

/// Test symmetric functions of `n` variables: `1`, `p_1`, `p_1^2 − p_2`.
fn sample_symmetric(ctx: &Ctx, n: usize) -> Result<Vec<(String, SymPolySpec)>> {
    Ok(vec![
        ("1".to_string(), SymPolySpec::one(ctx, n)),
        ("p_1".to_string(), SymPolySpec::from_power_sums(ctx, n, &[(Q::ONE, vec![1])])?),
        (
            "p_1^2-p_2".to_string(),
            SymPolySpec::from_power_sums(ctx, n, &[(Q::ONE, vec![1, 1]), (Q::int(-1), vec![2])])?,
        ),
    ])
}

/// `[p_k(w), E_n[f]]` and `[p_k(w), F_n[f]]` against the termwise closed forms.
pub fn powersum(p: &SuiteParams) -> Result<Vec<Check>> {
    let ctx = VarContext::new(p.n, p.l)?;
    let n = p.n;
    let kmax = p.max_degree.clamp(1, 3) as u32;
    let mut v = Vec::new();
    const GEN: &str = "power sums against E_n and F_n";
    for size in 1..=n {
        for (label, f) in sample_symmetric(&ctx, size)? {
            for k in 1..=kmax {
                let (ctx1, f1) = (ctx.clone(), f.clone());
                v.push(Check::new(format!("[p_{k}, E_{size}[{label}]]"), GEN, move || {
                    let lhs = DiffOp::poly(power_sum(&ctx1, k)).commutator(&e_op(&ctx1, size, &f1)?);
                    Ok(Outcome::ops(&lhs, &closed_form(&ctx1, size, &f1, k, 1, None)?))
                }));
                let (ctx1, f1) = (ctx.clone(), f.clone());
                let mode = if p.l >= 1 { ParamMode::symbolic(p.l) } else { ParamMode::zero(0) };
                v.push(Check::new(format!("[p_{k}, F_{size}[{label}]]"), GEN, move || {
                    let lhs = DiffOp::poly(power_sum(&ctx1, k)).commutator(&f_op(&ctx1, size, &f1, &mode)?);
                    Ok(Outcome::ops(&lhs, &closed_form(&ctx1, size, &f1, k, -1, Some(&mode))?))
                }));
            }
        }
    }
    Ok(v)
}

/// `−Σ_I (p_k(w_I + eħ) − p_k(w_I)) · (coefficient of u^{eI})` with `e = ±1`.
fn closed_form(ctx: &Ctx, size: usize, f: &SymPolySpec, k: u32, e: i32, mode: Option<&ParamMode>) -> Result<DiffOp> {
    let h = MultiPoly::hbar(ctx).scale(&Q::int(e as i64));
    let id = Permutation::identity(ctx.n());
    let mut items = Vec::new();
    for subset in combinations(ctx.n(), size) {
        let mut delta = MultiPoly::zero(ctx);
        for &i in &subset {
            let wi = MultiPoly::w(ctx, i);
            delta = delta.add(&wi.add(&h).pow(k)).sub(&wi.pow(k));
        }
        let coeff = match mode {
            None => {
                let args: Vec<MultiPoly> = subset.iter().map(|&i| MultiPoly::w(ctx, i)).collect();
                cross_ratio(ctx, &subset, -1)?.mul_poly(&f.eval(&args))
            }
            Some(m) => {
                let hb = MultiPoly::hbar(ctx);
                let args: Vec<MultiPoly> = subset.iter().map(|&i| MultiPoly::w(ctx, i).sub(&hb)).collect();
                let framing =
                    subset.iter().fold(MultiPoly::one(ctx), |a, &i| a.mul(&m.framing(ctx, &MultiPoly::w(ctx, i))));
                cross_ratio(ctx, &subset, 1)?.mul_poly(&f.eval(&args).mul(&framing))
            }
        };
        items.push(((subset_shift(ctx.n(), &subset, e), id.clone()), coeff.mul_poly(&delta).neg()));
    }
    Ok(DiffOp::from_terms(ctx, items))
}
