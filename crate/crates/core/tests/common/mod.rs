//! Seeded random generators shared by the property tests and the acceptance harness.
#![allow(dead_code)]

use cherednik::algebra::{Ctx, Monomial, MultiPoly, RatFunc, VarContext, Q};
use cherednik::cyclotomic::CycNum;
use cherednik::diffop::{DiffOp, ShiftMonomial};
use cherednik::dsl::{Atom, Expr};
use cherednik::weyl::{enumerate, Permutation};
use rand::rngs::StdRng;
use rand::Rng;

/// `ħ, t, z_1, w_1, w_2`.
pub fn small_ctx() -> Ctx {
    VarContext::new(2, 1).unwrap()
}

pub fn rational(rng: &mut StdRng) -> Q {
    Q::new(rng.gen_range(-6..=6), rng.gen_range(1..=4))
}

pub fn nonzero_rational(rng: &mut StdRng) -> Q {
    loop {
        let q = rational(rng);
        if !q.is_zero() {
            return q;
        }
    }
}

/// Up to `terms` monomials of degree at most 2 in each symbol.
pub fn poly(rng: &mut StdRng, ctx: &Ctx, terms: usize) -> MultiPoly {
    let k = rng.gen_range(0..=terms);
    MultiPoly::from_terms(
        ctx,
        (0..k).map(|_| {
            let exps: Vec<u8> = (0..ctx.len()).map(|_| if rng.gen_bool(0.4) { rng.gen_range(1..=2) } else { 0 }).collect();
            (Monomial::from_exps(&exps), rational(rng))
        }),
    )
}

pub fn nonzero_poly(rng: &mut StdRng, ctx: &Ctx, terms: usize) -> MultiPoly {
    loop {
        let p = poly(rng, ctx, terms);
        if !p.is_zero() {
            return p;
        }
    }
}

/// A linear form `w_i − w_j + c·t` or `w_i + c·ħ` as a denominator factor.
pub fn linear_factor(rng: &mut StdRng, ctx: &Ctx) -> MultiPoly {
    let n = ctx.n();
    let i = rng.gen_range(1..=n);
    let c = MultiPoly::int(ctx, rng.gen_range(-2..=2));
    if n > 1 && rng.gen_bool(0.5) {
        let j = (i % n) + 1;
        MultiPoly::w(ctx, i).sub(&MultiPoly::w(ctx, j)).add(&c.mul(&MultiPoly::t(ctx)))
    } else {
        MultiPoly::w(ctx, i).add(&c.mul(&MultiPoly::hbar(ctx)))
    }
}

pub fn ratfunc(rng: &mut StdRng, ctx: &Ctx) -> RatFunc {
    let num = poly(rng, ctx, 3);
    let dens: Vec<MultiPoly> = (0..rng.gen_range(0..=2)).map(|_| linear_factor(rng, ctx)).collect();
    RatFunc::quotient(num, &dens).unwrap()
}

pub fn nonzero_ratfunc(rng: &mut StdRng, ctx: &Ctx) -> RatFunc {
    loop {
        let f = ratfunc(rng, ctx);
        if !f.is_zero() {
            return f;
        }
    }
}

pub fn permutation(rng: &mut StdRng, n: usize) -> Permutation {
    let all = enumerate(n).unwrap();
    all[rng.gen_range(0..all.len())].clone()
}

/// Up to `terms` terms `g · u^λ · σ` with shifts in `{-1, 0, 1}`.
pub fn diffop(rng: &mut StdRng, ctx: &Ctx, terms: usize, rational_coeffs: bool) -> DiffOp {
    let n = ctx.n();
    let parts: Vec<DiffOp> = (0..rng.gen_range(1..=terms))
        .map(|_| {
            let g = if rational_coeffs { nonzero_ratfunc(rng, ctx) } else { RatFunc::from_poly(nonzero_poly(rng, ctx, 2)) };
            let lambda = ShiftMonomial((0..n).map(|_| rng.gen_range(-1..=1)).collect());
            DiffOp::term(g, lambda, permutation(rng, n))
        })
        .collect();
    DiffOp::sum(ctx, &parts)
}

pub fn cyc(rng: &mut StdRng, l: usize) -> CycNum {
    let d = cherednik::cyclotomic::cyclotomic_polynomial(l).len() - 1;
    CycNum::from_coeffs(l, (0..d.max(1)).map(|_| rational(rng)).collect()).unwrap()
}

const SYMS: &[&str] = &["ħ", "t", "z_1", "z_2", "a", "ω"];

fn index(rng: &mut StdRng) -> usize {
    rng.gen_range(0..=4)
}

fn atom(rng: &mut StdRng, depth: u32) -> Atom {
    let sub = |rng: &mut StdRng| Box::new(expr(rng, depth.saturating_sub(1)));
    match rng.gen_range(0..18) {
        0 => Atom::E(index(rng), sub(rng)),
        1 => Atom::F(index(rng), sub(rng)),
        2 => Atom::X(index(rng)),
        3 => Atom::Xinv(index(rng)),
        4 => Atom::Y(index(rng)),
        5 => Atom::RatY(index(rng)),
        6 => Atom::W(index(rng)),
        7 => Atom::U(index(rng)),
        8 => Atom::Uinv(index(rng)),
        9 => Atom::S(index(rng)),
        10 => Atom::Sij(index(rng), index(rng)),
        11 => Atom::Pi,
        12 => Atom::PiInv,
        13 => Atom::D0(index(rng)),
        14 => Atom::YangE(index(rng)),
        15 => Atom::YangF(index(rng)),
        16 => Atom::P(index(rng)),
        _ => Atom::B(index(rng), sub(rng)),
    }
}

/// A random well-formed expression tree of bounded depth, in the shape the parser produces.
pub fn expr(rng: &mut StdRng, depth: u32) -> Expr {
    let leaf = depth == 0 || rng.gen_bool(0.3);
    if leaf {
        return match rng.gen_range(0..3) {
            0 => Expr::Num(rational(rng).abs()),
            1 => Expr::Sym(SYMS[rng.gen_range(0..SYMS.len())].to_string()),
            _ => Expr::Atom(atom(rng, 0)),
        };
    }
    let mut sub = || Box::new(expr(rng, depth - 1));
    let (a, b) = (sub(), sub());
    match rng.gen_range(0..10) {
        0 => Expr::Add(a, b),
        1 => Expr::Sub(a, b),
        2 => Expr::Mul(a, b),
        3 => Expr::Neg(a),
        4 => Expr::Pow(a, rng.gen_range(0..4)),
        5 => Expr::Comm(a, b),
        6 => Expr::Res(a),
        7 => Expr::Apply(a, b),
        _ => Expr::Atom(atom(rng, depth)),
    }
}
