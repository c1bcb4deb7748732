//! Difference-reflection operators `Σ g(w) · u^λ · σ` with coefficients on the left.
//!
//! `u_i` acts by `f ↦ f(.., w_i + ħ, ..)` and `σ` by relabeling `w_i -> w_{σ(i)}`.
//! The product law is
//! `(g₁ u^{λ₁} σ₁)(g₂ u^{λ₂} σ₂) = g₁ · S_{λ₁}(σ₁·g₂) · u^{λ₁ + σ₁λ₂} · σ₁σ₂`
//! where `S_λ` shifts `w ↦ w + ħλ`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::algebra::{context::same, Ctx, MultiPoly, Q, RatFunc};
use crate::error::{Error, Result};
use crate::weyl::Permutation;

/// Exponents of `u_1..u_N`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ShiftMonomial(pub Vec<i32>);

impl ShiftMonomial {
    pub fn zero(n: usize) -> ShiftMonomial {
        ShiftMonomial(vec![0; n])
    }

    /// `u_i^e`.
    pub fn unit(n: usize, i: usize, e: i32) -> ShiftMonomial {
        let mut v = vec![0; n];
        v[i - 1] = e;
        ShiftMonomial(v)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn add(&self, other: &ShiftMonomial) -> ShiftMonomial {
        ShiftMonomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn neg(&self) -> ShiftMonomial {
        ShiftMonomial(self.0.iter().map(|a| -a).collect())
    }

    pub fn exps(&self) -> &[i32] {
        &self.0
    }

    fn rank(v: i32) -> (u8, i32) {
        if v == 0 {
            (1, 0)
        } else {
            (0, -v)
        }
    }
}

/// Lexicographic with nonzero exponents (largest first) ahead of zero,
/// so `u_1` sorts before `u_2`, which sorts before the identity.
impl Ord for ShiftMonomial {
    fn cmp(&self, other: &ShiftMonomial) -> Ordering {
        for (a, b) in self.0.iter().zip(&other.0) {
            let c = Self::rank(*a).cmp(&Self::rank(*b));
            if c != Ordering::Equal {
                return c;
            }
        }
        self.0.len().cmp(&other.0.len())
    }
}

impl PartialOrd for ShiftMonomial {
    fn partial_cmp(&self, other: &ShiftMonomial) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ShiftMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e != 0)
            .map(|(i, &e)| if e == 1 { format!("u_{}", i + 1) } else { format!("u_{}^{e}", i + 1) })
            .collect();
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

impl fmt::Debug for ShiftMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

pub type TermKey = (ShiftMonomial, Permutation);

#[derive(Clone)]
pub struct DiffOp {
    ctx: Ctx,
    terms: BTreeMap<TermKey, RatFunc>,
}

/// Bindings `w_i -> w_i + ħλ_i` realizing the shift `S_λ`.
fn shift_bindings(ctx: &Ctx, lambda: &ShiftMonomial) -> Vec<(usize, MultiPoly)> {
    let h = MultiPoly::hbar(ctx);
    lambda
        .0
        .iter()
        .enumerate()
        .filter(|(_, &e)| e != 0)
        .map(|(i, &e)| (ctx.w(i + 1), MultiPoly::w(ctx, i + 1).add(&h.scale(&Q::int(e as i64)))))
        .collect()
}

/// `S_λ(σ·g)`.
fn transport(ctx: &Ctx, g: &RatFunc, sigma: &Permutation, lambda: &ShiftMonomial) -> RatFunc {
    let moved = sigma.act_on_ratfunc(g);
    if lambda.is_zero() {
        moved
    } else {
        moved.substitute_automorphism(&shift_bindings(ctx, lambda))
    }
}

impl DiffOp {
    pub fn zero(ctx: &Ctx) -> DiffOp {
        DiffOp { ctx: ctx.clone(), terms: BTreeMap::new() }
    }

    pub fn identity(ctx: &Ctx) -> DiffOp {
        DiffOp::scalar(RatFunc::one(ctx))
    }

    /// Single-term operator `g · u^λ · σ`.
    pub fn term(g: RatFunc, lambda: ShiftMonomial, sigma: Permutation) -> DiffOp {
        let ctx = g.ctx().clone();
        assert_eq!(lambda.0.len(), ctx.n(), "shift length must be N");
        assert_eq!(sigma.n(), ctx.n(), "permutation degree must be N");
        let mut terms = BTreeMap::new();
        if !g.is_zero() {
            terms.insert((lambda, sigma), g);
        }
        DiffOp { ctx, terms }
    }

    /// Multiplication by a function.
    pub fn scalar(g: RatFunc) -> DiffOp {
        let n = g.ctx().n();
        DiffOp::term(g, ShiftMonomial::zero(n), Permutation::identity(n))
    }

    pub fn poly(p: MultiPoly) -> DiffOp {
        DiffOp::scalar(RatFunc::from_poly(p))
    }

    pub fn w(ctx: &Ctx, i: usize) -> DiffOp {
        DiffOp::poly(MultiPoly::w(ctx, i))
    }

    /// `u_i^e`.
    pub fn u(ctx: &Ctx, i: usize, e: i32) -> DiffOp {
        DiffOp::term(RatFunc::one(ctx), ShiftMonomial::unit(ctx.n(), i, e), Permutation::identity(ctx.n()))
    }

    pub fn perm(ctx: &Ctx, sigma: Permutation) -> DiffOp {
        DiffOp::term(RatFunc::one(ctx), ShiftMonomial::zero(ctx.n()), sigma)
    }

    pub fn from_terms(ctx: &Ctx, items: impl IntoIterator<Item = (TermKey, RatFunc)>) -> DiffOp {
        let mut buckets: BTreeMap<TermKey, Vec<RatFunc>> = BTreeMap::new();
        for (k, g) in items {
            buckets.entry(k).or_default().push(g);
        }
        let terms = buckets
            .into_iter()
            .map(|(k, gs)| (k, RatFunc::sum(ctx, gs.iter())))
            .filter(|(_, g)| !g.is_zero())
            .collect();
        DiffOp { ctx: ctx.clone(), terms }
    }

    pub fn ctx(&self) -> &Ctx {
        &self.ctx
    }

    pub fn terms(&self) -> impl Iterator<Item = (&TermKey, &RatFunc)> {
        self.terms.iter()
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

    pub fn coefficient(&self, lambda: &ShiftMonomial, sigma: &Permutation) -> RatFunc {
        self.terms
            .get(&(lambda.clone(), sigma.clone()))
            .cloned()
            .unwrap_or_else(|| RatFunc::zero(&self.ctx))
    }

    /// The function `g` when the operator is pure multiplication.
    pub fn as_scalar(&self) -> Option<RatFunc> {
        if self.terms.is_empty() {
            return Some(RatFunc::zero(&self.ctx));
        }
        match self.terms.iter().next() {
            Some(((l, s), g)) if self.terms.len() == 1 && l.is_zero() && s.is_identity() => Some(g.clone()),
            _ => None,
        }
    }

    fn check(&self, other: &DiffOp) {
        assert!(same(&self.ctx, &other.ctx), "context mismatch");
    }

    pub fn add(&self, other: &DiffOp) -> DiffOp {
        self.check(other);
        let mut terms = self.terms.clone();
        for (k, g) in &other.terms {
            match terms.get_mut(k) {
                Some(v) => {
                    let s = v.add(g);
                    if s.is_zero() {
                        terms.remove(k);
                    } else {
                        *v = s;
                    }
                }
                None => {
                    terms.insert(k.clone(), g.clone());
                }
            }
        }
        DiffOp { ctx: self.ctx.clone(), terms }
    }

    pub fn neg(&self) -> DiffOp {
        DiffOp { ctx: self.ctx.clone(), terms: self.terms.iter().map(|(k, g)| (k.clone(), g.neg())).collect() }
    }

    pub fn sub(&self, other: &DiffOp) -> DiffOp {
        self.add(&other.neg())
    }

    pub fn scale(&self, q: &Q) -> DiffOp {
        if q.is_zero() {
            return DiffOp::zero(&self.ctx);
        }
        DiffOp { ctx: self.ctx.clone(), terms: self.terms.iter().map(|(k, g)| (k.clone(), g.scale(q))).collect() }
    }

    /// Left multiplication by a function.
    pub fn left_mul(&self, f: &RatFunc) -> DiffOp {
        if f.is_zero() {
            return DiffOp::zero(&self.ctx);
        }
        DiffOp { ctx: self.ctx.clone(), terms: self.terms.iter().map(|(k, g)| (k.clone(), f.mul(g))).collect() }
    }

    /// Sum of many operators, combining each coefficient over one common denominator.
    pub fn sum<'a>(ctx: &Ctx, ops: impl IntoIterator<Item = &'a DiffOp>) -> DiffOp {
        let items = ops.into_iter().flat_map(|op| op.terms.iter().map(|(k, g)| (k.clone(), g.clone())));
        DiffOp::from_terms(ctx, items)
    }

    pub fn mul(&self, other: &DiffOp) -> DiffOp {
        self.check(other);
        let mut items = Vec::with_capacity(self.terms.len() * other.terms.len());
        for ((l1, s1), g1) in &self.terms {
            for ((l2, s2), g2) in &other.terms {
                let moved = transport(&self.ctx, g2, s1, l1);
                let lambda = l1.add(&ShiftMonomial(s1.act_on_exponents(&l2.0)));
                items.push(((lambda, s1.compose(s2)), g1.mul(&moved)));
            }
        }
        DiffOp::from_terms(&self.ctx, items)
    }

    pub fn commutator(&self, other: &DiffOp) -> DiffOp {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn anticommutator(&self, other: &DiffOp) -> DiffOp {
        self.mul(other).add(&other.mul(self))
    }

    pub fn pow(&self, e: u32) -> DiffOp {
        let mut acc = DiffOp::identity(&self.ctx);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Product of factors, left to right.
    pub fn product<'a>(ctx: &Ctx, ops: impl IntoIterator<Item = &'a DiffOp>) -> DiffOp {
        let mut acc: Option<DiffOp> = None;
        for op in ops {
            acc = Some(match acc {
                None => op.clone(),
                Some(a) => a.mul(op),
            });
        }
        acc.unwrap_or_else(|| DiffOp::identity(ctx))
    }

    /// `(A f)(w) = Σ g(w) · (σf)(w + ħλ)`.
    pub fn apply_rat(&self, f: &RatFunc) -> RatFunc {
        let images: Vec<RatFunc> =
            self.terms.iter().map(|((l, s), g)| g.mul(&transport(&self.ctx, f, s, l))).collect();
        RatFunc::sum(&self.ctx, images.iter())
    }

    pub fn apply(&self, f: &MultiPoly) -> RatFunc {
        self.apply_rat(&RatFunc::from_poly(f.clone()))
    }

    /// Drops permutation parts and merges equal shifts.
    pub fn res(&self) -> DiffOp {
        let n = self.ctx.n();
        DiffOp::from_terms(
            &self.ctx,
            self.terms.iter().map(|((l, _), g)| ((l.clone(), Permutation::identity(n)), g.clone())),
        )
    }

    /// Applies a fallible map to every coefficient.
    pub fn map_coefficients(&self, f: impl Fn(&RatFunc) -> Result<RatFunc>) -> Result<DiffOp> {
        let mut items = Vec::with_capacity(self.terms.len());
        for (k, g) in &self.terms {
            items.push((k.clone(), f(g)?));
        }
        Ok(DiffOp::from_terms(&self.ctx, items))
    }

    /// Substitutes parameters in every coefficient.
    pub fn specialize(&self, bindings: &[(usize, MultiPoly)]) -> Result<DiffOp> {
        self.map_coefficients(|g| g.substitute(bindings))
    }

    /// The distinct shifts carrying nonzero coefficients.
    pub fn shifts(&self) -> Vec<ShiftMonomial> {
        let mut v: Vec<ShiftMonomial> = self.terms.keys().map(|(l, _)| l.clone()).collect();
        v.dedup();
        v.sort();
        v.dedup();
        v
    }
}

impl PartialEq for DiffOp {
    fn eq(&self, other: &DiffOp) -> bool {
        same(&self.ctx, &other.ctx) && self.terms == other.terms
    }
}

fn wrap_coefficient(g: &RatFunc) -> String {
    let s = g.to_string();
    let body = s.strip_prefix('-').unwrap_or(&s);
    let compound = body.contains(" + ") || body.contains(" - ");
    if compound && (g.is_polynomial() || !body.starts_with('(')) {
        format!("({s})")
    } else {
        s
    }
}

impl fmt::Display for DiffOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, ((l, s), g)) in self.terms.iter().enumerate() {
            let mut parts = Vec::new();
            let coeff = wrap_coefficient(g);
            let trivial_op = l.is_zero() && s.is_identity();
            let (neg, coeff) = match coeff.strip_prefix('-') {
                Some(rest) if !rest.starts_with('(') || g.is_polynomial() => (true, rest.to_string()),
                _ => (false, coeff),
            };
            if coeff != "1" || trivial_op {
                parts.push(coeff);
            }
            if !l.is_zero() {
                parts.push(l.to_string());
            }
            if !s.is_identity() {
                parts.push(s.to_string());
            }
            let body = parts.join(" * ");
            match (k, neg) {
                (0, true) => write!(f, "-{body}")?,
                (0, false) => write!(f, "{body}")?,
                (_, true) => write!(f, " - {body}")?,
                (_, false) => write!(f, " + {body}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for DiffOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Dominance-sorted rearrangement `λ⁺`.
fn dominant(l: &[i32]) -> Vec<i32> {
    let mut v = l.to_vec();
    v.sort_unstable_by(|a, b| b.cmp(a));
    v
}

/// `μ - λ` is a nonnegative combination of positive roots `ε_i - ε_j` (`i < j`).
fn root_le(l: &[i32], m: &[i32]) -> bool {
    if l.iter().sum::<i32>() != m.iter().sum::<i32>() {
        return false;
    }
    let (mut pl, mut pm) = (0, 0);
    for (a, b) in l.iter().zip(m) {
        pl += a;
        pm += b;
        if pl > pm {
            return false;
        }
    }
    true
}

/// `λ ⋖ μ`: `λ⁺ < μ⁺` in dominance, or `λ⁺ = μ⁺` and `λ > μ` in root order.
pub fn weight_less(l: &ShiftMonomial, m: &ShiftMonomial) -> bool {
    let (lp, mp) = (dominant(&l.0), dominant(&m.0));
    if lp != mp {
        return root_le(&lp, &mp);
    }
    l != m && root_le(&m.0, &l.0)
}

/// The unique `⋖`-maximal shift and its coefficients.
pub fn leading_term(a: &DiffOp) -> Result<(ShiftMonomial, Vec<(Permutation, RatFunc)>)> {
    let shifts = a.shifts();
    let top = shifts
        .iter()
        .find(|cand| shifts.iter().all(|o| o == *cand || weight_less(o, cand)))
        .cloned()
        .ok_or_else(|| {
            let list: Vec<String> = shifts.iter().map(|s| s.to_string()).collect();
            Error::NoLeadingTerm(format!("no shift dominates all of {{{}}}", list.join(", ")))
        })?;
    let coeffs = a
        .terms()
        .filter(|((l, _), _)| *l == top)
        .map(|((_, s), g)| (s.clone(), g.clone()))
        .collect();
    Ok((top, coeffs))
}

/// Parameters set to zero before taking the classical limit.
#[derive(Clone, Debug)]
pub struct ClassicalSpec {
    pub zero_symbols: Vec<usize>,
}

impl ClassicalSpec {
    /// `t = 0` and every `z_k = 0`.
    pub fn standard(ctx: &Ctx) -> ClassicalSpec {
        let mut zero_symbols = vec![ctx.t()];
        zero_symbols.extend((1..=ctx.l()).map(|k| ctx.z(k)));
        ClassicalSpec { zero_symbols }
    }

    fn bindings(&self, ctx: &Ctx) -> Vec<(usize, MultiPoly)> {
        self.zero_symbols.iter().map(|&i| (i, MultiPoly::zero(ctx))).collect()
    }
}

/// `([A, B] / ħ)` at `ħ = 0` after the configured specialization.
pub fn classical_bracket(a: &DiffOp, b: &DiffOp, spec: &ClassicalSpec) -> Result<DiffOp> {
    let ctx = a.ctx().clone();
    let c = a.commutator(b).specialize(&spec.bindings(&ctx))?;
    let h = MultiPoly::hbar(&ctx);
    let at_zero = [(ctx.hbar(), MultiPoly::zero(&ctx))];
    c.map_coefficients(|g| {
        g.div_poly(&h)?
            .substitute(&at_zero)
            .map_err(|_| Error::NotDivisible(format!("commutator coefficient {g} by ħ")))
    })
}

/// `A` with the specialization applied and `ħ = 0`: the commutative limit of an operator.
pub fn classical_limit(a: &DiffOp, spec: &ClassicalSpec) -> Result<DiffOp> {
    let ctx = a.ctx().clone();
    let mut b = spec.bindings(&ctx);
    b.push((ctx.hbar(), MultiPoly::zero(&ctx)));
    a.specialize(&b)
}

/// Elementary symmetric polynomial `e_k(w_1..w_N)`.
pub fn elementary_symmetric(ctx: &Ctx, k: usize) -> MultiPoly {
    let n = ctx.n();
    let mut table = vec![MultiPoly::zero(ctx); k + 1];
    table[0] = MultiPoly::one(ctx);
    for i in 1..=n {
        let w = MultiPoly::w(ctx, i);
        for j in (1..=k.min(i)).rev() {
            table[j] = table[j].add(&table[j - 1].mul(&w));
        }
    }
    table[k].clone()
}

/// Power sum `p_k(w_1..w_N)`.
pub fn power_sum(ctx: &Ctx, k: u32) -> MultiPoly {
    (1..=ctx.n()).fold(MultiPoly::zero(ctx), |acc, i| acc.add(&MultiPoly::w(ctx, i).pow(k)))
}

pub fn is_symmetric(f: &RatFunc) -> bool {
    let n = f.ctx().n();
    (1..n).all(|i| Permutation::simple(n, i).act_on_ratfunc(f) == *f)
}

/// Spot check that `A` maps symmetric polynomials of degree `≤ d` to symmetric functions.
pub fn verify_preserves_symmetric(a: &DiffOp, d: u32) -> bool {
    let ctx = a.ctx().clone();
    let n = ctx.n();
    let es: Vec<MultiPoly> = (1..=n).map(|k| elementary_symmetric(&ctx, k)).collect();
    let mut inputs = Vec::new();
    fn rec(k: usize, budget: u32, cur: MultiPoly, es: &[MultiPoly], out: &mut Vec<MultiPoly>) {
        if k == es.len() {
            out.push(cur);
            return;
        }
        let weight = (k + 1) as u32;
        let mut p = cur;
        let mut used = 0;
        loop {
            rec(k + 1, budget - used, p.clone(), es, out);
            used += weight;
            if used > budget {
                break;
            }
            p = p.mul(&es[k]);
        }
    }
    rec(0, d, MultiPoly::one(&ctx), &es, &mut inputs);
    inputs.iter().all(|f| is_symmetric(&a.apply(f)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::VarContext;

    #[test]
    fn shift_commutes_past_w() {
        let ctx = VarContext::new(1, 0).unwrap();
        let u = DiffOp::u(&ctx, 1, 1);
        let w = DiffOp::w(&ctx, 1);
        let expect = DiffOp::poly(MultiPoly::w(&ctx, 1).add(&MultiPoly::hbar(&ctx))).mul(&u);
        assert_eq!(u.mul(&w), expect);
        assert_eq!(u.commutator(&w), u.left_mul(&RatFunc::var(&ctx, ctx.hbar())));
        assert_eq!(u.mul(&DiffOp::u(&ctx, 1, -1)), DiffOp::identity(&ctx));
    }

    #[test]
    fn application() {
        let ctx = VarContext::new(2, 0).unwrap();
        let u = DiffOp::u(&ctx, 1, 1);
        let w1 = MultiPoly::w(&ctx, 1);
        assert_eq!(u.apply(&w1), RatFunc::from_poly(w1.add(&MultiPoly::hbar(&ctx))));
    }

    #[test]
    fn weight_order() {
        let e = |i: usize, v: i32| ShiftMonomial::unit(3, i, v);
        assert!(weight_less(&e(1, 1), &e(2, 1)));
        assert!(weight_less(&e(2, 1), &e(3, 1)));
        assert!(!weight_less(&e(1, 1), &e(1, 1)));
        assert!(!weight_less(&e(1, 1), &e(2, -1)));
        assert!(!weight_less(&e(2, -1), &e(1, 1)));
    }

    #[test]
    fn incomparable_shifts_have_no_leading_term() {
        let ctx = VarContext::new(2, 0).unwrap();
        let a = DiffOp::u(&ctx, 1, 1).add(&DiffOp::u(&ctx, 2, -1));
        assert!(matches!(leading_term(&a), Err(Error::NoLeadingTerm(_))));
    }

    #[test]
    fn symmetric_preservation() {
        let ctx = VarContext::new(2, 0).unwrap();
        assert!(!verify_preserves_symmetric(&DiffOp::u(&ctx, 1, 1), 2));
        assert!(verify_preserves_symmetric(&DiffOp::poly(power_sum(&ctx, 2)), 3));
    }

    #[test]
    fn rendering() {
        let ctx = VarContext::new(1, 0).unwrap();
        let c = DiffOp::w(&ctx, 1).commutator(&DiffOp::u(&ctx, 1, 1));
        assert_eq!(c.to_string(), "-ħ * u_1");
    }
}
