use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rustc_hash::FxHashMap;

use super::context::{same, Ctx, MAX_SYMBOLS};
use super::rational::Q;
use crate::error::{Error, Result};

/// Exponent vector; ordering is graded lexicographic (total degree first).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    deg: u16,
    exps: [u8; MAX_SYMBOLS],
}

impl Monomial {
    pub const ONE: Monomial = Monomial { deg: 0, exps: [0; MAX_SYMBOLS] };

    pub fn var(idx: usize, e: u8) -> Monomial {
        let mut m = Monomial::ONE;
        m.exps[idx] = e;
        m.deg = e as u16;
        m
    }

    pub fn from_exps(exps: &[u8]) -> Monomial {
        let mut m = Monomial::ONE;
        for (i, &e) in exps.iter().enumerate() {
            m.exps[i] = e;
            m.deg += e as u16;
        }
        m
    }

    pub fn exp(&self, idx: usize) -> u8 {
        self.exps[idx]
    }

    pub fn degree(&self) -> u32 {
        self.deg as u32
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut m = *self;
        for i in 0..MAX_SYMBOLS {
            m.exps[i] = m.exps[i].checked_add(other.exps[i]).expect("exponent overflow");
        }
        m.deg += other.deg;
        m
    }

    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if other.deg > self.deg {
            return None;
        }
        let mut m = *self;
        for i in 0..MAX_SYMBOLS {
            m.exps[i] = m.exps[i].checked_sub(other.exps[i])?;
        }
        m.deg -= other.deg;
        Some(m)
    }

    pub fn with_exp(&self, idx: usize, e: u8) -> Monomial {
        let mut m = *self;
        m.deg = m.deg - m.exps[idx] as u16 + e as u16;
        m.exps[idx] = e;
        m
    }

    /// Moves the exponent of symbol `i` to symbol `map[i]`.
    pub fn relabel(&self, map: &[usize]) -> Monomial {
        let mut m = Monomial { deg: self.deg, exps: [0; MAX_SYMBOLS] };
        for (i, &j) in map.iter().enumerate() {
            m.exps[j] += self.exps[i];
        }
        m
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", &self.exps[..])
    }
}

/// Sparse polynomial with exact rational coefficients, terms sorted by
/// descending monomial order and free of zero coefficients.
#[derive(Clone)]
pub struct MultiPoly {
    ctx: Ctx,
    terms: Vec<(Monomial, Q)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
}

/// Checked polynomial arithmetic.
pub fn poly_arith(p: &MultiPoly, q: &MultiPoly, op: PolyOp) -> Result<MultiPoly> {
    if !same(&p.ctx, &q.ctx) {
        return Err(Error::ContextMismatch);
    }
    Ok(match op {
        PolyOp::Add => p.add(q),
        PolyOp::Sub => p.sub(q),
        PolyOp::Mul => p.mul(q),
    })
}

impl MultiPoly {
    pub fn zero(ctx: &Ctx) -> MultiPoly {
        MultiPoly { ctx: ctx.clone(), terms: Vec::new() }
    }

    pub fn one(ctx: &Ctx) -> MultiPoly {
        MultiPoly::constant(ctx, Q::ONE)
    }

    pub fn constant(ctx: &Ctx, c: Q) -> MultiPoly {
        let terms = if c.is_zero() { Vec::new() } else { vec![(Monomial::ONE, c)] };
        MultiPoly { ctx: ctx.clone(), terms }
    }

    pub fn int(ctx: &Ctx, n: i64) -> MultiPoly {
        MultiPoly::constant(ctx, Q::int(n))
    }

    pub fn var(ctx: &Ctx, idx: usize) -> MultiPoly {
        assert!(idx < ctx.len(), "symbol index {idx} out of range");
        MultiPoly { ctx: ctx.clone(), terms: vec![(Monomial::var(idx, 1), Q::ONE)] }
    }

    pub fn hbar(ctx: &Ctx) -> MultiPoly {
        MultiPoly::var(ctx, ctx.hbar())
    }

    pub fn t(ctx: &Ctx) -> MultiPoly {
        MultiPoly::var(ctx, ctx.t())
    }

    pub fn w(ctx: &Ctx, i: usize) -> MultiPoly {
        MultiPoly::var(ctx, ctx.w(i))
    }

    pub fn z(ctx: &Ctx, k: usize) -> MultiPoly {
        MultiPoly::var(ctx, ctx.z(k))
    }

    pub fn monomial(ctx: &Ctx, m: Monomial, c: Q) -> MultiPoly {
        let terms = if c.is_zero() { Vec::new() } else { vec![(m, c)] };
        MultiPoly { ctx: ctx.clone(), terms }
    }

    /// Builds from arbitrary terms, merging duplicates and dropping zeros.
    pub fn from_terms(ctx: &Ctx, terms: impl IntoIterator<Item = (Monomial, Q)>) -> MultiPoly {
        let mut acc: FxHashMap<Monomial, Q> = FxHashMap::default();
        for (m, c) in terms {
            let e = acc.entry(m).or_insert(Q::ZERO);
            *e = &*e + &c;
        }
        MultiPoly::from_map(ctx, acc)
    }

    fn from_map(ctx: &Ctx, acc: FxHashMap<Monomial, Q>) -> MultiPoly {
        let mut terms: Vec<(Monomial, Q)> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by_key(|t| std::cmp::Reverse(t.0));
        MultiPoly { ctx: ctx.clone(), terms }
    }

    pub fn ctx(&self) -> &Ctx {
        &self.ctx
    }

    pub fn terms(&self) -> &[(Monomial, Q)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_one())
    }

    pub fn constant_value(&self) -> Option<Q> {
        match self.terms.as_slice() {
            [] => Some(Q::ZERO),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    /// The coefficient of the monomial `1`.
    pub fn constant_term(&self) -> Q {
        match self.terms.last() {
            Some((m, c)) if m.is_one() => c.clone(),
            _ => Q::ZERO,
        }
    }

    pub fn coefficient(&self, m: &Monomial) -> Q {
        self.terms
            .binary_search_by(|(k, _)| m.cmp(k))
            .map(|i| self.terms[i].1.clone())
            .unwrap_or(Q::ZERO)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.first().map(|(m, _)| m.degree())
    }

    pub fn degree_in(&self, idx: usize) -> u32 {
        self.terms.iter().map(|(m, _)| m.exp(idx) as u32).max().unwrap_or(0)
    }

    pub fn uses(&self, idx: usize) -> bool {
        self.terms.iter().any(|(m, _)| m.exp(idx) > 0)
    }

    /// True when no `w` variable occurs.
    pub fn is_w_free(&self) -> bool {
        (self.ctx.w_start()..self.ctx.len()).all(|i| !self.uses(i))
    }

    pub fn leading(&self) -> Option<&(Monomial, Q)> {
        self.terms.first()
    }

    pub fn neg(&self) -> MultiPoly {
        MultiPoly { ctx: self.ctx.clone(), terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }

    pub fn scale(&self, q: &Q) -> MultiPoly {
        if q.is_zero() {
            return MultiPoly::zero(&self.ctx);
        }
        if q.is_one() {
            return self.clone();
        }
        MultiPoly { ctx: self.ctx.clone(), terms: self.terms.iter().map(|(m, c)| (*m, c * q)).collect() }
    }

    pub fn mul_term(&self, m: &Monomial, q: &Q) -> MultiPoly {
        if q.is_zero() {
            return MultiPoly::zero(&self.ctx);
        }
        MultiPoly {
            ctx: self.ctx.clone(),
            terms: self.terms.iter().map(|(k, c)| (k.mul(m), c * q)).collect(),
        }
    }

    fn check(&self, other: &MultiPoly) {
        assert!(same(&self.ctx, &other.ctx), "context mismatch");
    }

    fn merge(&self, other: &MultiPoly, negate: bool) -> MultiPoly {
        self.check(other);
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    out.push((b[j].0, if negate { -&b[j].1 } else { b[j].1.clone() }));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = if negate { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(m, c)| (*m, if negate { -c } else { c.clone() })));
        MultiPoly { ctx: self.ctx.clone(), terms: out }
    }

    pub fn add(&self, other: &MultiPoly) -> MultiPoly {
        self.merge(other, false)
    }

    pub fn sub(&self, other: &MultiPoly) -> MultiPoly {
        self.merge(other, true)
    }

    pub fn mul(&self, other: &MultiPoly) -> MultiPoly {
        self.check(other);
        if self.is_zero() || other.is_zero() {
            return MultiPoly::zero(&self.ctx);
        }
        if self.terms.len() == 1 {
            return other.mul_term(&self.terms[0].0, &self.terms[0].1);
        }
        if other.terms.len() == 1 {
            return self.mul_term(&other.terms[0].0, &other.terms[0].1);
        }
        let mut acc: FxHashMap<Monomial, Q> = FxHashMap::default();
        acc.reserve(self.terms.len() * other.terms.len());
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let e = acc.entry(m1.mul(m2)).or_insert(Q::ZERO);
                *e = &*e + &(c1 * c2);
            }
        }
        MultiPoly::from_map(&self.ctx, acc)
    }

    pub fn pow(&self, e: u32) -> MultiPoly {
        let mut acc = MultiPoly::one(&self.ctx);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Simultaneous substitution `symbol -> polynomial`.
    pub fn substitute(&self, bindings: &[(usize, MultiPoly)]) -> MultiPoly {
        if bindings.is_empty() || self.is_zero() {
            return self.clone();
        }
        for (_, b) in bindings {
            self.check(b);
        }
        // Group terms by the exponents of bound symbols so each power product is built once.
        let mut groups: BTreeMap<Vec<u8>, Vec<(Monomial, Q)>> = BTreeMap::new();
        for (m, c) in &self.terms {
            let key: Vec<u8> = bindings.iter().map(|(i, _)| m.exp(*i)).collect();
            let mut rest = *m;
            for (i, _) in bindings {
                rest = rest.with_exp(*i, 0);
            }
            groups.entry(key).or_default().push((rest, c.clone()));
        }
        let mut powers: Vec<Vec<MultiPoly>> = bindings.iter().map(|_| vec![MultiPoly::one(&self.ctx)]).collect();
        let mut acc = MultiPoly::zero(&self.ctx);
        for (key, rest) in groups {
            let mut factor = MultiPoly::from_terms(&self.ctx, rest);
            for (slot, &e) in key.iter().enumerate() {
                let table = &mut powers[slot];
                while table.len() <= e as usize {
                    let next = table.last().unwrap().mul(&bindings[slot].1);
                    table.push(next);
                }
                factor = factor.mul(&table[e as usize]);
            }
            acc = acc.add(&factor);
        }
        acc
    }

    /// Moves symbol `i` to symbol `map[i]` (within the same context).
    pub fn relabel(&self, map: &[usize]) -> MultiPoly {
        let mut terms: Vec<(Monomial, Q)> = self.terms.iter().map(|(m, c)| (m.relabel(map), c.clone())).collect();
        terms.sort_unstable_by_key(|t| std::cmp::Reverse(t.0));
        MultiPoly { ctx: self.ctx.clone(), terms }
    }

    /// Re-expresses in another context, sending symbol `i` to `map[i]`.
    pub fn transfer(&self, target: &Ctx, map: &[usize]) -> MultiPoly {
        let mut terms: Vec<(Monomial, Q)> = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut out = Monomial::ONE;
                for (i, &j) in map.iter().enumerate() {
                    let e = m.exp(i);
                    if e > 0 {
                        out = out.mul(&Monomial::var(j, e));
                    }
                }
                (out, c.clone())
            })
            .collect();
        terms.sort_unstable_by_key(|t| std::cmp::Reverse(t.0));
        MultiPoly::from_terms(target, terms)
    }

    /// Quotient when `d` divides `self` exactly.
    pub fn try_divide(&self, d: &MultiPoly) -> Option<MultiPoly> {
        self.check(d);
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(MultiPoly::zero(&self.ctx));
        }
        if let Some(c) = d.constant_value() {
            return Some(self.scale(&c.recip()));
        }
        let (lm, lc) = d.terms[0].clone();
        if self.terms[0].0.degree() < lm.degree() {
            return None;
        }
        let lc_inv = lc.recip();
        let mut rem: BTreeMap<Monomial, Q> = self.terms.iter().cloned().collect();
        let mut quot = Vec::new();
        while let Some((m, c)) = rem.pop_last() {
            let qm = m.div(&lm)?;
            let qc = &c * &lc_inv;
            for (dm, dc) in &d.terms[1..] {
                let key = qm.mul(dm);
                let delta = &qc * dc;
                match rem.entry(key) {
                    std::collections::btree_map::Entry::Occupied(mut o) => {
                        let v = o.get() - &delta;
                        if v.is_zero() {
                            o.remove();
                        } else {
                            *o.get_mut() = v;
                        }
                    }
                    std::collections::btree_map::Entry::Vacant(v) => {
                        v.insert(-delta);
                    }
                }
            }
            quot.push((qm, qc));
        }
        Some(MultiPoly { ctx: self.ctx.clone(), terms: quot })
    }

    /// Exact division; a nonzero remainder is an error.
    pub fn exact_divide(&self, d: &MultiPoly) -> Result<MultiPoly> {
        if !same(&self.ctx, &d.ctx) {
            return Err(Error::ContextMismatch);
        }
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        self.try_divide(d).ok_or_else(|| Error::NotDivisible(format!("({self}) by ({d})")))
    }

    /// Splits off a scalar: `self = s * p` with `p` integral, primitive and with
    /// positive leading coefficient.
    pub fn primitive_part(&self) -> (Q, MultiPoly) {
        if self.is_zero() {
            return (Q::ONE, self.clone());
        }
        let mut den = BigInt::one();
        let mut num = BigInt::zero();
        for (_, c) in &self.terms {
            den = den.lcm(&c.denom());
            num = num.gcd(&c.numer());
        }
        let mut s = Q::from_big(num_rational::BigRational::new(num, den));
        if self.terms[0].1.is_negative() {
            s = -s;
        }
        if s.is_one() {
            return (s, self.clone());
        }
        let inv = s.recip();
        (s, self.scale(&inv))
    }

    /// Coefficients with respect to one symbol: `self = Σ_k coeffs[k] * x^k`.
    pub fn coefficients_in(&self, idx: usize) -> Vec<MultiPoly> {
        let d = self.degree_in(idx) as usize;
        let mut parts: Vec<Vec<(Monomial, Q)>> = vec![Vec::new(); d + 1];
        for (m, c) in &self.terms {
            parts[m.exp(idx) as usize].push((m.with_exp(idx, 0), c.clone()));
        }
        parts.into_iter().map(|t| MultiPoly::from_terms(&self.ctx, t)).collect()
    }

    /// Formal partial derivative.
    pub fn derivative(&self, idx: usize) -> MultiPoly {
        MultiPoly::from_terms(
            &self.ctx,
            self.terms.iter().filter(|(m, _)| m.exp(idx) > 0).map(|(m, c)| {
                let e = m.exp(idx);
                (m.with_exp(idx, e - 1), c * &Q::int(e as i64))
            }),
        )
    }

    pub(crate) fn fmt_factor(&self) -> String {
        if self.terms.len() <= 1 {
            self.to_string()
        } else {
            format!("({self})")
        }
    }
}

impl PartialEq for MultiPoly {
    fn eq(&self, other: &MultiPoly) -> bool {
        same(&self.ctx, &other.ctx) && self.terms == other.terms
    }
}

impl Eq for MultiPoly {}

fn fmt_monomial(ctx: &Ctx, m: &Monomial) -> String {
    let mut parts = Vec::new();
    for i in 0..ctx.len() {
        match m.exp(i) {
            0 => {}
            1 => parts.push(ctx.name(i).to_string()),
            e => parts.push(format!("{}^{e}", ctx.name(i))),
        }
    }
    parts.join("*")
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            let a = c.abs();
            if m.is_one() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{}", fmt_monomial(&self.ctx, m))?;
            } else {
                write!(f, "{a}*{}", fmt_monomial(&self.ctx, m))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::context::VarContext;

    #[test]
    fn cancellation_and_products() {
        let ctx = VarContext::new(2, 0).unwrap();
        let (w1, w2, h) = (MultiPoly::w(&ctx, 1), MultiPoly::w(&ctx, 2), MultiPoly::hbar(&ctx));
        assert_eq!(w1.add(&h).add(&w1.sub(&h)), w1.scale(&Q::int(2)));
        assert_eq!(w1.sub(&w2).mul(&w1.add(&w2)), w1.pow(2).sub(&w2.pow(2)));
        assert!(MultiPoly::t(&ctx).mul(&MultiPoly::zero(&ctx)).terms().is_empty());
    }

    #[test]
    fn division() {
        let ctx = VarContext::new(2, 0).unwrap();
        let (w1, w2) = (MultiPoly::w(&ctx, 1), MultiPoly::w(&ctx, 2));
        let p = w1.pow(2).sub(&w2.pow(2));
        assert_eq!(p.exact_divide(&w1.sub(&w2)).unwrap(), w1.add(&w2));
        assert!(p.exact_divide(&w1.add(&MultiPoly::hbar(&ctx))).is_err());
    }

    #[test]
    fn substitution_shift_roundtrip() {
        let ctx = VarContext::new(2, 0).unwrap();
        let (w1, w2, h) = (MultiPoly::w(&ctx, 1), MultiPoly::w(&ctx, 2), MultiPoly::hbar(&ctx));
        let p = w1.pow(3).mul(&w2).sub(&h.mul(&w1));
        let up = p.substitute(&[(ctx.w(1), w1.add(&h))]);
        let back = up.substitute(&[(ctx.w(1), w1.sub(&h))]);
        assert_eq!(back, p);
    }

    #[test]
    fn rendering() {
        let ctx = VarContext::new(2, 0).unwrap();
        let p = MultiPoly::w(&ctx, 1).pow(2).scale(&Q::int(2)).sub(&MultiPoly::t(&ctx));
        assert_eq!(p.to_string(), "2*w_1^2 - t");
    }

    #[test]
    fn primitive() {
        let ctx = VarContext::new(2, 0).unwrap();
        let p = MultiPoly::w(&ctx, 1).scale(&Q::new(-2, 3)).add(&MultiPoly::w(&ctx, 2).scale(&Q::new(4, 3)));
        let (s, q) = p.primitive_part();
        assert_eq!(s, Q::new(-2, 3));
        assert_eq!(q.to_string(), "w_1 - 2*w_2");
    }
}
