//! Trigonometric Dunkl operators on Laurent polynomials in `X_1..X_N` and
//! rational Dunkl operators on polynomials in `x_1..x_N`.
//!
//! Rational inputs are [`MultiPoly`] values whose `w_i` slots stand for `x_i`.

use std::collections::BTreeMap;
use std::fmt;

use crate::algebra::{Ctx, Monomial, MultiPoly, Q};
use crate::error::{Error, Result};
use crate::weyl::Permutation;

/// Finite sum `Σ c_a X^a` with `a ∈ Z^N` and coefficients polynomial in the parameters.
#[derive(Clone, PartialEq, Eq)]
pub struct LaurentPoly {
    ctx: Ctx,
    terms: BTreeMap<Vec<i32>, MultiPoly>,
}

impl LaurentPoly {
    pub fn zero(ctx: &Ctx) -> LaurentPoly {
        LaurentPoly { ctx: ctx.clone(), terms: BTreeMap::new() }
    }

    /// `c · X^a`; `c` must not involve the `w` slots.
    pub fn monomial(ctx: &Ctx, exps: Vec<i32>, c: MultiPoly) -> Result<LaurentPoly> {
        if exps.len() != ctx.n() {
            return Err(Error::InvalidArgument(format!("{} exponents for N = {}", exps.len(), ctx.n())));
        }
        if !c.is_w_free() {
            return Err(Error::InvalidArgument(format!("coefficient {c} mentions w variables")));
        }
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        Ok(LaurentPoly { ctx: ctx.clone(), terms })
    }

    pub fn one(ctx: &Ctx) -> LaurentPoly {
        let mut terms = BTreeMap::new();
        terms.insert(vec![0; ctx.n()], MultiPoly::one(ctx));
        LaurentPoly { ctx: ctx.clone(), terms }
    }

    /// `X_i^e`.
    pub fn x(ctx: &Ctx, i: usize, e: i32) -> LaurentPoly {
        let mut a = vec![0; ctx.n()];
        a[i - 1] = e;
        let mut terms = BTreeMap::new();
        terms.insert(a, MultiPoly::one(ctx));
        LaurentPoly { ctx: ctx.clone(), terms }
    }

    pub fn ctx(&self) -> &Ctx {
        &self.ctx
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i32>, &MultiPoly)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn insert(terms: &mut BTreeMap<Vec<i32>, MultiPoly>, a: Vec<i32>, c: MultiPoly) {
        if c.is_zero() {
            return;
        }
        match terms.get_mut(&a) {
            Some(v) => {
                let s = v.add(&c);
                if s.is_zero() {
                    terms.remove(&a);
                } else {
                    *v = s;
                }
            }
            None => {
                terms.insert(a, c);
            }
        }
    }

    pub fn add(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut terms = self.terms.clone();
        for (a, c) in &other.terms {
            Self::insert(&mut terms, a.clone(), c.clone());
        }
        LaurentPoly { ctx: self.ctx.clone(), terms }
    }

    pub fn neg(&self) -> LaurentPoly {
        LaurentPoly { ctx: self.ctx.clone(), terms: self.terms.iter().map(|(a, c)| (a.clone(), c.neg())).collect() }
    }

    pub fn sub(&self, other: &LaurentPoly) -> LaurentPoly {
        self.add(&other.neg())
    }

    /// Multiplication by a parameter polynomial.
    pub fn scale(&self, c: &MultiPoly) -> LaurentPoly {
        let mut terms = BTreeMap::new();
        for (a, v) in &self.terms {
            Self::insert(&mut terms, a.clone(), v.mul(c));
        }
        LaurentPoly { ctx: self.ctx.clone(), terms }
    }

    pub fn mul(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut terms = BTreeMap::new();
        for (a, c) in &self.terms {
            for (b, d) in &other.terms {
                let s: Vec<i32> = a.iter().zip(b).map(|(x, y)| x + y).collect();
                Self::insert(&mut terms, s, c.mul(d));
            }
        }
        LaurentPoly { ctx: self.ctx.clone(), terms }
    }

    /// `X_i ↦ X_{σ(i)}`.
    pub fn permute(&self, sigma: &Permutation) -> LaurentPoly {
        LaurentPoly {
            ctx: self.ctx.clone(),
            terms: self.terms.iter().map(|(a, c)| (sigma.act_on_exponents(a), c.clone())).collect(),
        }
    }

    /// `X_i ∂/∂X_i`.
    pub fn euler(&self, i: usize) -> LaurentPoly {
        let mut terms = BTreeMap::new();
        for (a, c) in &self.terms {
            Self::insert(&mut terms, a.clone(), c.scale(&Q::int(a[i - 1] as i64)));
        }
        LaurentPoly { ctx: self.ctx.clone(), terms }
    }

    /// Smallest exponent over all terms and variables (zero when empty).
    fn min_exponent(&self) -> i32 {
        self.terms.keys().flat_map(|a| a.iter().copied()).min().unwrap_or(0).min(0)
    }

    /// `X^{(s,..,s)} · self` as a polynomial with `X_i` in the `w_i` slot.
    fn to_poly(&self, s: i32) -> MultiPoly {
        let ctx = &self.ctx;
        let mut acc = MultiPoly::zero(ctx);
        for (a, c) in &self.terms {
            let mut m = Monomial::ONE;
            for (i, &e) in a.iter().enumerate() {
                let e = e + s;
                debug_assert!(e >= 0);
                m = m.mul(&Monomial::var(ctx.w(i + 1), e as u8));
            }
            acc = acc.add(&c.mul_term(&m, &Q::ONE));
        }
        acc
    }

    /// Reads `w_i` slots as `X_i`.
    pub fn from_polynomial(p: &MultiPoly) -> LaurentPoly {
        LaurentPoly::from_poly(p, 0)
    }

    /// Inverse of [`Self::to_poly`].
    fn from_poly(p: &MultiPoly, s: i32) -> LaurentPoly {
        let ctx = p.ctx().clone();
        let n = ctx.n();
        let mut terms = BTreeMap::new();
        for (m, c) in p.terms() {
            let a: Vec<i32> = (1..=n).map(|i| m.exp(ctx.w(i)) as i32 - s).collect();
            let mut rest = *m;
            for i in 1..=n {
                rest = rest.with_exp(ctx.w(i), 0);
            }
            Self::insert(&mut terms, a, MultiPoly::monomial(&ctx, rest, c.clone()));
        }
        LaurentPoly { ctx, terms }
    }

    /// `X_i (f − s_{ik} f) / (X_i − X_k)`, computed by exact division.
    pub fn divided_difference(&self, i: usize, k: usize) -> Result<LaurentPoly> {
        let n = self.ctx.n();
        let diff = self.sub(&self.permute(&Permutation::transposition(n, i, k)));
        if diff.is_zero() {
            return Ok(diff);
        }
        // A symmetric monomial shift commutes with s_{ik}, so the quotient is exact iff it is for the shifted polynomial.
        let s = -diff.min_exponent();
        let num = diff.to_poly(s).mul(&MultiPoly::w(&self.ctx, i));
        let den = MultiPoly::w(&self.ctx, i).sub(&MultiPoly::w(&self.ctx, k));
        let q = num.exact_divide(&den)?;
        Ok(LaurentPoly::from_poly(&q, s))
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (a, c) in self.terms.iter().rev() {
            let mono: Vec<String> = a
                .iter()
                .enumerate()
                .filter(|(_, &e)| e != 0)
                .map(|(i, &e)| if e == 1 { format!("X_{}", i + 1) } else { format!("X_{}^{e}", i + 1) })
                .collect();
            let coeff = c.fmt_factor();
            let body = match (mono.is_empty(), c.is_one()) {
                (true, _) => coeff,
                (false, true) => mono.join("*"),
                (false, false) => format!("{coeff}*{}", mono.join("*")),
            };
            match (first, body.strip_prefix('-')) {
                (true, _) => write!(f, "{body}")?,
                // Only a bare leading sign is folded; parenthesized coefficients keep theirs.
                (false, Some(rest)) if !rest.starts_with('(') => write!(f, " - {rest}")?,
                (false, _) => write!(f, " + {body}")?,
            }
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn check_index(ctx: &Ctx, i: usize) -> Result<()> {
    if i == 0 || i > ctx.n() {
        return Err(Error::IndexOutOfRange(format!("{i} not in 1..={}", ctx.n())));
    }
    Ok(())
}

/// `−ħ X_i ∂_{X_i} p + t Σ_{k≠i} X_i (p − s_{ik} p)/(X_i − X_k) + t Σ_{k<i} s_{ik} p`.
pub fn trig_dunkl(i: usize, p: &LaurentPoly) -> Result<LaurentPoly> {
    let ctx = p.ctx().clone();
    check_index(&ctx, i)?;
    let n = ctx.n();
    let h = MultiPoly::hbar(&ctx);
    let t = MultiPoly::t(&ctx);
    let mut acc = p.euler(i).scale(&h.neg());
    for k in (1..=n).filter(|&k| k != i) {
        acc = acc.add(&p.divided_difference(i, k)?.scale(&t));
    }
    for k in 1..i {
        acc = acc.add(&p.permute(&Permutation::transposition(n, i, k)).scale(&t));
    }
    Ok(acc)
}

/// `−ħ ∂_{x_i} p + t Σ_{k≠i} (p − s_{ik} p)/(x_i − x_k)`, with `x_i` in the `w_i` slot.
pub fn rat_dunkl(i: usize, p: &MultiPoly) -> Result<MultiPoly> {
    let ctx = p.ctx().clone();
    check_index(&ctx, i)?;
    let n = ctx.n();
    let t = MultiPoly::t(&ctx);
    let mut acc = p.derivative(ctx.w(i)).mul(&MultiPoly::hbar(&ctx)).neg();
    for k in (1..=n).filter(|&k| k != i) {
        let mut table: Vec<usize> = (1..=n).collect();
        table.swap(i - 1, k - 1);
        let swapped = permute_poly(p, &table);
        let diff = p.sub(&swapped);
        if diff.is_zero() {
            continue;
        }
        let q = diff.exact_divide(&MultiPoly::w(&ctx, i).sub(&MultiPoly::w(&ctx, k)))?;
        acc = acc.add(&q.mul(&t));
    }
    Ok(acc)
}

/// `x_i ↦ x_{σ(i)}` with `table[i-1] = σ(i)`.
pub fn permute_poly(p: &MultiPoly, table: &[usize]) -> MultiPoly {
    let ctx = p.ctx();
    let ws = ctx.w_start();
    let mut map: Vec<usize> = (0..ctx.len()).collect();
    for (i, &j) in table.iter().enumerate() {
        map[ws + i] = ws + j - 1;
    }
    p.relabel(&map)
}

/// Laurent monomials `X^a` with `a_i ≥ low` and `Σ|a_i| ≤ d`.
pub fn laurent_basis(ctx: &Ctx, d: usize, low: i32) -> Vec<LaurentPoly> {
    let n = ctx.n();
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    fn rec(n: usize, budget: i32, low: i32, cur: &mut Vec<i32>, out: &mut Vec<Vec<i32>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for e in low..=budget {
            if e.abs() > budget {
                continue;
            }
            cur.push(e);
            rec(n, budget - e.abs(), low, cur, out);
            cur.pop();
        }
    }
    let mut exps = Vec::new();
    rec(n, d as i32, low, &mut cur, &mut exps);
    for a in exps {
        let mut terms = BTreeMap::new();
        terms.insert(a, MultiPoly::one(ctx));
        out.push(LaurentPoly { ctx: ctx.clone(), terms });
    }
    out
}

/// Monomials in `x_1..x_N` of total degree `≤ d`.
pub fn polynomial_basis(ctx: &Ctx, d: usize) -> Vec<MultiPoly> {
    laurent_basis(ctx, d, 0).iter().map(|p| p.to_poly(0)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::VarContext;

    #[test]
    fn constants_are_killed() {
        let ctx = VarContext::new(2, 0).unwrap();
        assert!(trig_dunkl(1, &LaurentPoly::one(&ctx)).unwrap().is_zero());
        assert!(rat_dunkl(1, &MultiPoly::one(&ctx)).unwrap().is_zero());
    }

    #[test]
    fn degree_one_values() {
        let ctx = VarContext::new(2, 0).unwrap();
        let h = MultiPoly::hbar(&ctx);
        let t = MultiPoly::t(&ctx);
        // X_1 (X_1 − X_2)/(X_1 − X_2) = X_1
        let got = trig_dunkl(1, &LaurentPoly::x(&ctx, 1, 1)).unwrap();
        assert_eq!(got, LaurentPoly::x(&ctx, 1, 1).scale(&t.sub(&h)));
        assert_eq!(rat_dunkl(1, &MultiPoly::w(&ctx, 1)).unwrap(), t.sub(&h));
    }

    #[test]
    fn negative_exponents_divide() {
        let ctx = VarContext::new(2, 0).unwrap();
        let p = LaurentPoly::x(&ctx, 1, -1).mul(&LaurentPoly::x(&ctx, 2, 2));
        let q = trig_dunkl(2, &p).unwrap();
        assert!(q.terms().count() > 0);
    }

    #[test]
    fn rank_one_is_euler() {
        let ctx = VarContext::new(1, 0).unwrap();
        let p = LaurentPoly::x(&ctx, 1, 3);
        assert_eq!(trig_dunkl(1, &p).unwrap(), p.scale(&MultiPoly::hbar(&ctx).scale(&Q::int(-3))));
    }
}
