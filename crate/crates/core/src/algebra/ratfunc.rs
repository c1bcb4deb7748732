use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use super::context::{same, Ctx};
use super::poly::MultiPoly;
use super::rational::Q;
use crate::error::{Error, Result};

/// A primitive integral polynomial of degree one with positive leading coefficient.
#[derive(Clone, PartialEq, Eq)]
pub struct LinearForm(MultiPoly);

impl LinearForm {
    /// Splits `p = s * L` when `p` has degree exactly one.
    pub fn split(p: &MultiPoly) -> Option<(Q, LinearForm)> {
        if p.total_degree() != Some(1) {
            return None;
        }
        let (s, prim) = p.primitive_part();
        Some((s, LinearForm(prim)))
    }

    pub fn poly(&self) -> &MultiPoly {
        &self.0
    }
}

impl Ord for LinearForm {
    fn cmp(&self, other: &LinearForm) -> Ordering {
        self.0.terms().cmp(other.0.terms())
    }
}

impl PartialOrd for LinearForm {
    fn partial_cmp(&self, other: &LinearForm) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Exact rational function `num / (Π L^e · rest)`.
///
/// Linear factors never divide the numerator; `rest` is primitive or one.
/// When `rest` is one the representation is in lowest terms and therefore
/// unique, so equality is structural; otherwise equality cross-multiplies.
#[derive(Clone)]
pub struct RatFunc {
    num: MultiPoly,
    den: BTreeMap<LinearForm, u32>,
    rest: MultiPoly,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RatOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Checked rational-function arithmetic.
pub fn rat_arith(f: &RatFunc, g: &RatFunc, op: RatOp) -> Result<RatFunc> {
    if !same(f.ctx(), g.ctx()) {
        return Err(Error::ContextMismatch);
    }
    Ok(match op {
        RatOp::Add => f.add(g),
        RatOp::Sub => f.sub(g),
        RatOp::Mul => f.mul(g),
        RatOp::Div => f.div(g)?,
    })
}

impl RatFunc {
    pub fn zero(ctx: &Ctx) -> RatFunc {
        RatFunc::from_poly(MultiPoly::zero(ctx))
    }

    pub fn one(ctx: &Ctx) -> RatFunc {
        RatFunc::from_poly(MultiPoly::one(ctx))
    }

    pub fn constant(ctx: &Ctx, q: Q) -> RatFunc {
        RatFunc::from_poly(MultiPoly::constant(ctx, q))
    }

    pub fn int(ctx: &Ctx, n: i64) -> RatFunc {
        RatFunc::constant(ctx, Q::int(n))
    }

    pub fn from_poly(p: MultiPoly) -> RatFunc {
        let rest = MultiPoly::one(p.ctx());
        RatFunc { num: p, den: BTreeMap::new(), rest }
    }

    pub fn var(ctx: &Ctx, idx: usize) -> RatFunc {
        RatFunc::from_poly(MultiPoly::var(ctx, idx))
    }

    /// `num / Π dens`, each divisor kept factored when it is linear.
    pub fn quotient(num: MultiPoly, dens: &[MultiPoly]) -> Result<RatFunc> {
        let mut f = RatFunc::from_poly(num);
        for d in dens {
            f = f.div_poly(d)?;
        }
        Ok(f)
    }

    pub fn ctx(&self) -> &Ctx {
        self.num.ctx()
    }

    pub fn numerator(&self) -> &MultiPoly {
        &self.num
    }

    pub fn linear_factors(&self) -> impl Iterator<Item = (&MultiPoly, u32)> {
        self.den.iter().map(|(l, e)| (l.poly(), *e))
    }

    pub fn residual_denominator(&self) -> &MultiPoly {
        &self.rest
    }

    /// The expanded denominator.
    pub fn denominator(&self) -> MultiPoly {
        let mut d = self.rest.clone();
        for (l, e) in &self.den {
            d = d.mul(&l.0.pow(*e));
        }
        d
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.is_polynomial() && self.num.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_empty() && self.rest.is_one()
    }

    pub fn as_poly(&self) -> Option<&MultiPoly> {
        self.is_polynomial().then_some(&self.num)
    }

    pub fn constant_value(&self) -> Option<Q> {
        self.as_poly().and_then(|p| p.constant_value())
    }

    pub fn is_w_free(&self) -> bool {
        self.num.is_w_free() && self.rest.is_w_free() && self.den.keys().all(|l| l.0.is_w_free())
    }

    pub fn uses(&self, idx: usize) -> bool {
        self.num.uses(idx) || self.rest.uses(idx) || self.den.keys().any(|l| l.0.uses(idx))
    }

    fn cancel(&mut self) {
        if self.num.is_zero() {
            self.den.clear();
            self.rest = MultiPoly::one(self.num.ctx());
            return;
        }
        for (l, e) in self.den.iter_mut() {
            while *e > 0 {
                match self.num.try_divide(&l.0) {
                    Some(q) => {
                        self.num = q;
                        *e -= 1;
                    }
                    None => break,
                }
            }
        }
        self.den.retain(|_, e| *e > 0);
        self.cancel_rest();
    }

    fn cancel_rest(&mut self) {
        if !self.rest.is_one() {
            if let Some(q) = self.num.try_divide(&self.rest) {
                self.num = q;
                self.rest = MultiPoly::one(self.num.ctx());
            }
        }
    }

    /// Divides by a polynomial, factoring out a linear form when possible.
    pub fn div_poly(&self, d: &MultiPoly) -> Result<RatFunc> {
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if !same(self.ctx(), d.ctx()) {
            return Err(Error::ContextMismatch);
        }
        let mut out = self.clone();
        if let Some(c) = d.constant_value() {
            out.num = out.num.scale(&c.recip());
            return Ok(out);
        }
        if let Some((s, l)) = LinearForm::split(d) {
            out.num = out.num.scale(&s.recip());
            match out.num.try_divide(&l.0) {
                Some(q) => out.num = q,
                None => *out.den.entry(l).or_insert(0) += 1,
            }
            if out.num.is_zero() {
                out.cancel();
            }
            return Ok(out);
        }
        let (s, prim) = d.primitive_part();
        out.num = out.num.scale(&s.recip());
        out.rest = out.rest.mul(&prim);
        out.cancel_rest();
        if out.num.is_zero() {
            out.cancel();
        }
        Ok(out)
    }

    pub fn neg(&self) -> RatFunc {
        RatFunc { num: self.num.neg(), den: self.den.clone(), rest: self.rest.clone() }
    }

    pub fn scale(&self, q: &Q) -> RatFunc {
        if q.is_zero() {
            return RatFunc::zero(self.ctx());
        }
        RatFunc { num: self.num.scale(q), den: self.den.clone(), rest: self.rest.clone() }
    }

    pub fn mul_poly(&self, p: &MultiPoly) -> RatFunc {
        self.mul(&RatFunc::from_poly(p.clone()))
    }

    pub fn add(&self, other: &RatFunc) -> RatFunc {
        self.combine(other, false)
    }

    pub fn sub(&self, other: &RatFunc) -> RatFunc {
        self.combine(other, true)
    }

    fn combine(&self, other: &RatFunc, negate: bool) -> RatFunc {
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return if negate { other.neg() } else { other.clone() };
        }
        let join = |a: &MultiPoly, b: &MultiPoly| if negate { a.sub(b) } else { a.add(b) };
        if self.den == other.den && self.rest == other.rest {
            let mut out = RatFunc { num: join(&self.num, &other.num), den: self.den.clone(), rest: self.rest.clone() };
            out.cancel();
            return out;
        }
        let mut den = self.den.clone();
        for (l, &e) in &other.den {
            let slot = den.entry(l.clone()).or_insert(0);
            *slot = (*slot).max(e);
        }
        let lift = |f: &RatFunc| {
            let mut n = f.num.clone();
            for (l, &e) in &den {
                let have = f.den.get(l).copied().unwrap_or(0);
                if e > have {
                    n = n.mul(&l.0.pow(e - have));
                }
            }
            n
        };
        let (mut a, mut b) = (lift(self), lift(other));
        let rest = if self.rest == other.rest {
            self.rest.clone()
        } else {
            a = a.mul(&other.rest);
            b = b.mul(&self.rest);
            self.rest.mul(&other.rest)
        };
        let mut out = RatFunc { num: join(&a, &b), den, rest };
        out.cancel();
        out
    }

    /// Sum over a common denominator, cancelling once at the end.
    pub fn sum<'a>(ctx: &Ctx, items: impl IntoIterator<Item = &'a RatFunc>) -> RatFunc {
        let items: Vec<&RatFunc> = items.into_iter().filter(|f| !f.is_zero()).collect();
        match items.len() {
            0 => return RatFunc::zero(ctx),
            1 => return items[0].clone(),
            2 => return items[0].add(items[1]),
            _ => {}
        }
        if items.iter().all(|f| f.is_polynomial()) {
            let mut acc = MultiPoly::zero(ctx);
            for f in &items {
                acc = acc.add(&f.num);
            }
            return RatFunc::from_poly(acc);
        }
        let mut den: BTreeMap<LinearForm, u32> = BTreeMap::new();
        let mut rests: Vec<MultiPoly> = Vec::new();
        for f in &items {
            for (l, &e) in &f.den {
                let slot = den.entry(l.clone()).or_insert(0);
                *slot = (*slot).max(e);
            }
            if !f.rest.is_one() && !rests.contains(&f.rest) {
                rests.push(f.rest.clone());
            }
        }
        let mut num = MultiPoly::zero(ctx);
        for f in &items {
            let mut n = f.num.clone();
            for (l, &e) in &den {
                let have = f.den.get(l).copied().unwrap_or(0);
                if e > have {
                    n = n.mul(&l.0.pow(e - have));
                }
            }
            for r in &rests {
                if *r != f.rest {
                    n = n.mul(r);
                }
            }
            num = num.add(&n);
        }
        let rest = rests.iter().fold(MultiPoly::one(ctx), |acc, r| acc.mul(r));
        let mut out = RatFunc { num, den, rest };
        out.cancel();
        out
    }

    pub fn mul(&self, other: &RatFunc) -> RatFunc {
        assert!(same(self.ctx(), other.ctx()), "context mismatch");
        if self.is_zero() || other.is_zero() {
            return RatFunc::zero(self.ctx());
        }
        if self.is_polynomial() && other.is_polynomial() {
            return RatFunc::from_poly(self.num.mul(&other.num));
        }
        let mut den = self.den.clone();
        let mut a = self.num.clone();
        let mut b = other.num.clone();
        for (l, &e) in &other.den {
            *den.entry(l.clone()).or_insert(0) += e;
        }
        // Linear forms are prime, so cross-cancellation is complete.
        for (l, &e) in &other.den {
            for _ in 0..e {
                match a.try_divide(&l.0) {
                    Some(q) => {
                        a = q;
                        *den.get_mut(l).unwrap() -= 1;
                    }
                    None => break,
                }
            }
        }
        for (l, &e) in &self.den {
            for _ in 0..e {
                if den[l] == 0 {
                    break;
                }
                match b.try_divide(&l.0) {
                    Some(q) => {
                        b = q;
                        *den.get_mut(l).unwrap() -= 1;
                    }
                    None => break,
                }
            }
        }
        den.retain(|_, e| *e > 0);
        let mut out = RatFunc { num: a.mul(&b), den, rest: self.rest.mul(&other.rest) };
        out.cancel_rest();
        out
    }

    pub fn inv(&self) -> Result<RatFunc> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut num = self.rest.clone();
        for (l, e) in &self.den {
            num = num.mul(&l.0.pow(*e));
        }
        RatFunc::from_poly(num).div_poly(&self.num)
    }

    pub fn div(&self, other: &RatFunc) -> Result<RatFunc> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, e: i32) -> Result<RatFunc> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = RatFunc::one(self.ctx());
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul(&base);
        }
        Ok(acc)
    }

    /// Simultaneous substitution of symbols by polynomials.
    pub fn substitute(&self, bindings: &[(usize, MultiPoly)]) -> Result<RatFunc> {
        self.transform(|p| p.substitute(bindings), true)
    }

    /// Substitution known to be a ring automorphism (e.g. `w_i -> w_i + kħ`),
    /// which preserves lowest terms.
    pub fn substitute_automorphism(&self, bindings: &[(usize, MultiPoly)]) -> RatFunc {
        self.transform(|p| p.substitute(bindings), false).expect("automorphisms keep denominators nonzero")
    }

    /// Moves symbol `i` to `map[i]`; `map` must be a permutation of symbols.
    pub fn relabel(&self, map: &[usize]) -> RatFunc {
        self.transform(|p| p.relabel(map), false).expect("relabeling keeps denominators nonzero")
    }

    fn transform(&self, f: impl Fn(&MultiPoly) -> MultiPoly, full_cancel: bool) -> Result<RatFunc> {
        let ctx = self.ctx().clone();
        let mut num = f(&self.num);
        let mut den: BTreeMap<LinearForm, u32> = BTreeMap::new();
        let mut rest = MultiPoly::one(&ctx);
        let mut divisors: Vec<(MultiPoly, u32)> = self.den.iter().map(|(l, e)| (f(&l.0), *e)).collect();
        if !self.rest.is_one() {
            divisors.push((f(&self.rest), 1));
        }
        for (d, e) in divisors {
            if d.is_zero() {
                return Err(Error::DenominatorVanishes);
            }
            if let Some(c) = d.constant_value() {
                num = num.scale(&c.pow(e).recip());
            } else if let Some((s, l)) = LinearForm::split(&d) {
                num = num.scale(&s.pow(e).recip());
                *den.entry(l).or_insert(0) += e;
            } else {
                let (s, prim) = d.primitive_part();
                num = num.scale(&s.pow(e).recip());
                rest = rest.mul(&prim.pow(e));
            }
        }
        let mut out = RatFunc { num, den, rest };
        if full_cancel || out.num.is_zero() {
            out.cancel();
        }
        Ok(out)
    }

    /// `w`-variable permutation: `w_i -> w_{σ(i)}` with `perm[i-1] = σ(i)`.
    pub fn permute_w(&self, perm: &[usize]) -> RatFunc {
        let ctx = self.ctx();
        let ws = ctx.w_start();
        let mut map: Vec<usize> = (0..ctx.len()).collect();
        for (i, &j) in perm.iter().enumerate() {
            map[ws + i] = ws + j - 1;
        }
        self.relabel(&map)
    }
}

impl PartialEq for RatFunc {
    fn eq(&self, other: &RatFunc) -> bool {
        if !same(self.ctx(), other.ctx()) {
            return false;
        }
        if self.rest.is_one() && other.rest.is_one() {
            return self.den == other.den && self.num == other.num;
        }
        self.sub(other).is_zero()
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            return write!(f, "{}", self.num);
        }
        let mut parts: Vec<String> = self
            .den
            .iter()
            .map(|(l, e)| if *e == 1 { format!("({})", l.0) } else { format!("({})^{e}", l.0) })
            .collect();
        if !self.rest.is_one() {
            parts.push(format!("({})", self.rest));
        }
        let den = if parts.len() == 1 { parts.pop().unwrap() } else { format!("({})", parts.join("*")) };
        write!(f, "{}/{}", self.num.fmt_factor(), den)
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::context::VarContext;

    fn setup() -> (Ctx, MultiPoly, MultiPoly, MultiPoly, MultiPoly) {
        let ctx = VarContext::new(2, 0).unwrap();
        let (h, t) = (MultiPoly::hbar(&ctx), MultiPoly::t(&ctx));
        let (w1, w2) = (MultiPoly::w(&ctx, 1), MultiPoly::w(&ctx, 2));
        (ctx, h, t, w1, w2)
    }

    #[test]
    fn antisymmetric_sum_vanishes() {
        let (_, _, t, w1, w2) = setup();
        let a = RatFunc::quotient(t.clone(), &[w1.sub(&w2)]).unwrap();
        let b = RatFunc::quotient(t, &[w2.sub(&w1)]).unwrap();
        assert!(a.add(&b).is_zero());
    }

    #[test]
    fn product_cancels_to_one() {
        let (ctx, _, t, w1, w2) = setup();
        let x = w1.sub(&w2);
        let a = RatFunc::quotient(x.sub(&t), std::slice::from_ref(&x)).unwrap();
        let b = RatFunc::quotient(x.clone(), &[x.sub(&t)]).unwrap();
        assert_eq!(a.mul(&b), RatFunc::one(&ctx));
    }

    #[test]
    fn substitution_into_denominator() {
        let (ctx, h, _, w1, w2) = setup();
        let f = RatFunc::quotient(MultiPoly::one(&ctx), &[w1.sub(&w2)]).unwrap();
        let g = f.substitute(&[(ctx.w(1), w1.add(&h))]).unwrap();
        assert_eq!(g, RatFunc::quotient(MultiPoly::one(&ctx), &[w1.sub(&w2).add(&h)]).unwrap());
        assert_eq!(f.substitute(&[(ctx.w(1), w2.clone())]).unwrap_err(), Error::DenominatorVanishes);
    }

    #[test]
    fn residual_denominators_compare_by_cross_multiplication() {
        let (ctx, h, t, w1, _) = setup();
        let q = w1.pow(2).add(&h.mul(&t));
        let a = RatFunc::quotient(MultiPoly::one(&ctx), std::slice::from_ref(&q)).unwrap();
        let b = RatFunc::quotient(w1.clone(), &[q.mul(&w1)]).unwrap();
        assert_eq!(a, b);
        assert!(a.sub(&b).is_zero());
    }

    #[test]
    fn rendering() {
        let (_, _, t, w1, w2) = setup();
        let a = RatFunc::quotient(t, &[w2.sub(&w1)]).unwrap();
        assert_eq!(a.to_string(), "-t/(w_1 - w_2)");
    }
}
