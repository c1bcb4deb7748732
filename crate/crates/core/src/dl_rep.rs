//! Difference-reflection images of the graded Cherednik generators, the
//! `E_n[f]`/`F_n[f]` operators, and the Suzuki and Oblomkov embeddings.

use crate::algebra::{Ctx, MultiPoly, RatFunc, Q};
use crate::diffop::{power_sum, DiffOp, ShiftMonomial};
use crate::error::{Error, Result};
use crate::weyl::{combinations, reduced_word, Permutation};

/// A symmetric polynomial in `arity` variables, stored over `w_1..w_arity`.
#[derive(Clone, Debug)]
pub struct SymPolySpec {
    arity: usize,
    poly: MultiPoly,
}

impl SymPolySpec {
    pub fn one(ctx: &Ctx, arity: usize) -> SymPolySpec {
        SymPolySpec { arity, poly: MultiPoly::one(ctx) }
    }

    /// Rejects polynomials that mention `w_j` with `j > arity` or are not symmetric.
    pub fn new(poly: MultiPoly, arity: usize) -> Result<SymPolySpec> {
        let ctx = poly.ctx().clone();
        if arity == 0 || arity > ctx.n() {
            return Err(Error::IndexOutOfRange(format!("arity {arity} not in 1..={}", ctx.n())));
        }
        if let Some(j) = (arity + 1..=ctx.n()).find(|&j| poly.uses(ctx.w(j))) {
            return Err(Error::InvalidArgument(format!("w_{j} is outside the {arity} formal variables")));
        }
        let f = RatFunc::from_poly(poly.clone());
        for i in 1..arity {
            let mut table: Vec<usize> = (1..=ctx.n()).collect();
            table.swap(i - 1, i);
            if f.permute_w(&table) != f {
                return Err(Error::InvalidArgument(format!("{poly} is not symmetric in w_1..w_{arity}")));
            }
        }
        Ok(SymPolySpec { arity, poly })
    }

    /// `Σ_r coeff_r · Π_{k ∈ parts_r} p_k` over the formal variables.
    pub fn from_power_sums(ctx: &Ctx, arity: usize, terms: &[(Q, Vec<u32>)]) -> Result<SymPolySpec> {
        if arity == 0 || arity > ctx.n() {
            return Err(Error::IndexOutOfRange(format!("arity {arity} not in 1..={}", ctx.n())));
        }
        let p = |k: u32| (1..=arity).fold(MultiPoly::zero(ctx), |acc, i| acc.add(&MultiPoly::w(ctx, i).pow(k)));
        let mut acc = MultiPoly::zero(ctx);
        for (c, parts) in terms {
            let prod = parts.iter().fold(MultiPoly::one(ctx), |a, &k| a.mul(&p(k)));
            acc = acc.add(&prod.scale(c));
        }
        Ok(SymPolySpec { arity, poly: acc })
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn poly(&self) -> &MultiPoly {
        &self.poly
    }

    /// `f(args_1, .., args_arity)`.
    pub fn eval(&self, args: &[MultiPoly]) -> MultiPoly {
        let ctx = self.poly.ctx();
        let bindings: Vec<(usize, MultiPoly)> =
            args.iter().enumerate().map(|(k, a)| (ctx.w(k + 1), a.clone())).collect();
        self.poly.substitute(&bindings)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum ZMode {
    Symbolic,
    Zero,
    Numeric(Vec<Q>),
}

/// The framing rank `l` and how `z_1..z_l` enter.
#[derive(Clone, Debug, PartialEq)]
pub struct ParamMode {
    pub l: usize,
    pub z: ZMode,
}

impl ParamMode {
    pub fn symbolic(l: usize) -> ParamMode {
        ParamMode { l, z: ZMode::Symbolic }
    }

    pub fn zero(l: usize) -> ParamMode {
        ParamMode { l, z: ZMode::Zero }
    }

    pub fn validate(&self, ctx: &Ctx) -> Result<()> {
        match &self.z {
            ZMode::Symbolic if self.l > ctx.l() => Err(Error::InvalidArgument(format!(
                "symbolic z_1..z_{} need a context with l >= {}",
                self.l, self.l
            ))),
            ZMode::Numeric(v) if v.len() != self.l => {
                Err(Error::InvalidArgument(format!("{} numeric z values for l = {}", v.len(), self.l)))
            }
            _ => Ok(()),
        }
    }

    pub fn z(&self, ctx: &Ctx, k: usize) -> MultiPoly {
        match &self.z {
            ZMode::Symbolic => MultiPoly::z(ctx, k),
            ZMode::Zero => MultiPoly::zero(ctx),
            ZMode::Numeric(v) => MultiPoly::constant(ctx, v[k - 1].clone()),
        }
    }

    /// `Π_k (x − ħ − z_k)`.
    pub fn framing(&self, ctx: &Ctx, x: &MultiPoly) -> MultiPoly {
        let h = MultiPoly::hbar(ctx);
        (1..=self.l).fold(MultiPoly::one(ctx), |acc, k| acc.mul(&x.sub(&h).sub(&self.z(ctx, k))))
    }
}

fn check_n(ctx: &Ctx, n: usize) -> Result<()> {
    if n == 0 || n > ctx.n() {
        return Err(Error::IndexOutOfRange(format!("n = {n} not in 1..={}", ctx.n())));
    }
    Ok(())
}

/// `Π_{i∈I, j∉I} (w_i − w_j + sign·t) / (w_i − w_j)`.
pub(crate) fn cross_ratio(ctx: &Ctx, subset: &[usize], sign: i64) -> Result<RatFunc> {
    let t = MultiPoly::t(ctx).scale(&Q::int(sign));
    let mut num = MultiPoly::one(ctx);
    let mut dens = Vec::new();
    for &i in subset {
        for j in (1..=ctx.n()).filter(|j| !subset.contains(j)) {
            let d = MultiPoly::w(ctx, i).sub(&MultiPoly::w(ctx, j));
            num = num.mul(&d.add(&t));
            dens.push(d);
        }
    }
    RatFunc::quotient(num, &dens)
}

pub(crate) fn subset_shift(n: usize, subset: &[usize], e: i32) -> ShiftMonomial {
    let mut v = vec![0; n];
    for &i in subset {
        v[i - 1] = e;
    }
    ShiftMonomial(v)
}

/// `E_n[f] = Σ_{#I=n} f(w_I) Π_{i∈I,j∉I} (w_i−w_j−t)/(w_i−w_j) Π_{i∈I} u_i`.
pub fn e_op(ctx: &Ctx, n: usize, f: &SymPolySpec) -> Result<DiffOp> {
    check_n(ctx, n)?;
    if f.arity() != n {
        return Err(Error::InvalidArgument(format!("E_{n} needs a symmetric function of {n} variables")));
    }
    let id = Permutation::identity(ctx.n());
    let mut items = Vec::new();
    for subset in combinations(ctx.n(), n) {
        let args: Vec<MultiPoly> = subset.iter().map(|&i| MultiPoly::w(ctx, i)).collect();
        let g = cross_ratio(ctx, &subset, -1)?.mul_poly(&f.eval(&args));
        items.push(((subset_shift(ctx.n(), &subset, 1), id.clone()), g));
    }
    Ok(DiffOp::from_terms(ctx, items))
}

/// `F_n[f] = Σ_{#I=n} f(w_I − ħ) Π (w_i−w_j+t)/(w_i−w_j) Π_{i∈I} Π_k (w_i−ħ−z_k) u_i^{-1}`.
pub fn f_op(ctx: &Ctx, n: usize, f: &SymPolySpec, mode: &ParamMode) -> Result<DiffOp> {
    check_n(ctx, n)?;
    mode.validate(ctx)?;
    if f.arity() != n {
        return Err(Error::InvalidArgument(format!("F_{n} needs a symmetric function of {n} variables")));
    }
    let h = MultiPoly::hbar(ctx);
    let id = Permutation::identity(ctx.n());
    let mut items = Vec::new();
    for subset in combinations(ctx.n(), n) {
        let args: Vec<MultiPoly> = subset.iter().map(|&i| MultiPoly::w(ctx, i).sub(&h)).collect();
        let framing =
            subset.iter().fold(MultiPoly::one(ctx), |acc, &i| acc.mul(&mode.framing(ctx, &MultiPoly::w(ctx, i))));
        let g = cross_ratio(ctx, &subset, 1)?.mul_poly(&f.eval(&args).mul(&framing));
        items.push(((subset_shift(ctx.n(), &subset, -1), id.clone()), g));
    }
    Ok(DiffOp::from_terms(ctx, items))
}

/// `s_i ↦ (1 + t/(w_i − w_{i+1})) s_i − t/(w_i − w_{i+1})`.
pub fn dl_s(ctx: &Ctx, i: usize) -> Result<DiffOp> {
    let n = ctx.n();
    if i == 0 || i >= n {
        return Err(Error::IndexOutOfRange(format!("s_{i} needs 1 <= i <= {}", n.saturating_sub(1))));
    }
    let d = MultiPoly::w(ctx, i).sub(&MultiPoly::w(ctx, i + 1));
    let ratio = RatFunc::quotient(MultiPoly::t(ctx), &[d])?;
    let refl = DiffOp::term(RatFunc::one(ctx).add(&ratio), ShiftMonomial::zero(n), Permutation::simple(n, i));
    Ok(refl.sub(&DiffOp::scalar(ratio)))
}

/// `s_0 ↦ (1 − t/(ħ + w_1 − w_N)) s_0^w + t/(ħ + w_1 − w_N)` with
/// `s_0^w = u_1 u_N^{-1} (1 N)`, so `s_0^w(w_1) = w_N − ħ`.
pub fn dl_s0(ctx: &Ctx) -> Result<DiffOp> {
    let n = ctx.n();
    if n < 2 {
        return Err(Error::IndexOutOfRange("s_0 needs N >= 2".into()));
    }
    let d = MultiPoly::hbar(ctx).add(&MultiPoly::w(ctx, 1)).sub(&MultiPoly::w(ctx, n));
    let ratio = RatFunc::quotient(MultiPoly::t(ctx), &[d])?;
    let mut lambda = vec![0; n];
    lambda[0] = 1;
    lambda[n - 1] = -1;
    let refl = DiffOp::term(RatFunc::one(ctx).sub(&ratio), ShiftMonomial(lambda), Permutation::transposition(n, 1, n));
    Ok(refl.add(&DiffOp::scalar(ratio)))
}

/// `π = u_1 · (1 2 ⋯ N)`.
pub fn dl_pi(ctx: &Ctx) -> DiffOp {
    let n = ctx.n();
    DiffOp::term(RatFunc::one(ctx), ShiftMonomial::unit(n, 1, 1), Permutation::cycle(n))
}

/// `π^{-1} = u_N^{-1} · (1 2 ⋯ N)^{-1}`.
pub fn dl_pi_inv(ctx: &Ctx) -> DiffOp {
    let n = ctx.n();
    DiffOp::term(RatFunc::one(ctx), ShiftMonomial::unit(n, n, -1), Permutation::cycle(n).inverse())
}

/// The images of `s_i`, `π^{±1}` and `X_i^{±1}` for one context.
#[derive(Clone, Debug)]
pub struct Catalogue {
    ctx: Ctx,
    s: Vec<DiffOp>,
    s0: Option<DiffOp>,
    pi: DiffOp,
    pi_inv: DiffOp,
    x: Vec<DiffOp>,
    x_inv: Vec<DiffOp>,
}

impl Catalogue {
    pub fn new(ctx: &Ctx) -> Result<Catalogue> {
        let n = ctx.n();
        let s: Vec<DiffOp> = (1..n).map(|i| dl_s(ctx, i)).collect::<Result<_>>()?;
        let s0 = if n >= 2 { Some(dl_s0(ctx)?) } else { None };
        let pi = dl_pi(ctx);
        let pi_inv = dl_pi_inv(ctx);
        // X_1 = π s_{N-1} ⋯ s_1 and X_1^{-1} = s_1 ⋯ s_{N-1} π^{-1}.
        let mut x1 = pi.clone();
        for op in s.iter().rev() {
            x1 = x1.mul(op);
        }
        let mut x1_inv = DiffOp::identity(ctx);
        for op in &s {
            x1_inv = x1_inv.mul(op);
        }
        x1_inv = x1_inv.mul(&pi_inv);
        let mut x = vec![x1];
        let mut x_inv = vec![x1_inv];
        for i in 1..n {
            let si = &s[i - 1];
            x.push(si.mul(&x[i - 1]).mul(si));
            x_inv.push(si.mul(&x_inv[i - 1]).mul(si));
        }
        let id = DiffOp::identity(ctx);
        for i in 0..n {
            if x_inv[i].mul(&x[i]) != id {
                return Err(Error::InvalidArgument(format!("X_{}^{{-1}} X_{} is not the identity", i + 1, i + 1)));
            }
        }
        Ok(Catalogue { ctx: ctx.clone(), s, s0, pi, pi_inv, x, x_inv })
    }

    pub fn ctx(&self) -> &Ctx {
        &self.ctx
    }

    pub fn n(&self) -> usize {
        self.ctx.n()
    }

    fn index(&self, i: usize, hi: usize, what: &str) -> Result<usize> {
        if i == 0 || i > hi {
            return Err(Error::IndexOutOfRange(format!("{what}_{i} needs 1 <= i <= {hi}")));
        }
        Ok(i - 1)
    }

    pub fn s(&self, i: usize) -> Result<&DiffOp> {
        let k = self.index(i, self.n().saturating_sub(1), "s")?;
        Ok(&self.s[k])
    }

    pub fn s0(&self) -> Result<&DiffOp> {
        self.s0.as_ref().ok_or_else(|| Error::IndexOutOfRange("s_0 needs N >= 2".into()))
    }

    /// `s_i` for `0 <= i < N`, with `s_0` the affine reflection.
    pub fn affine_s(&self, i: usize) -> Result<&DiffOp> {
        if i == 0 {
            self.s0()
        } else {
            self.s(i)
        }
    }

    pub fn pi(&self) -> &DiffOp {
        &self.pi
    }

    pub fn pi_inv(&self) -> &DiffOp {
        &self.pi_inv
    }

    pub fn x(&self, i: usize) -> Result<&DiffOp> {
        let k = self.index(i, self.n(), "X")?;
        Ok(&self.x[k])
    }

    pub fn x_inv(&self, i: usize) -> Result<&DiffOp> {
        let k = self.index(i, self.n(), "X^{-1}")?;
        Ok(&self.x_inv[k])
    }

    /// The image of an arbitrary permutation via a reduced word.
    pub fn perm(&self, sigma: &Permutation) -> Result<DiffOp> {
        if sigma.n() != self.n() {
            return Err(Error::InvalidArgument(format!("permutation of degree {} for N = {}", sigma.n(), self.n())));
        }
        let mut acc = DiffOp::identity(&self.ctx);
        for i in reduced_word(sigma) {
            acc = acc.mul(&self.s[i - 1]);
        }
        Ok(acc)
    }

    /// `s_{ij} = s_{j-1} ⋯ s_{i+1} s_i s_{i+1} ⋯ s_{j-1}` for `i < j`; symmetric in `i, j`.
    pub fn s_ij(&self, i: usize, j: usize) -> Result<DiffOp> {
        let n = self.n();
        let (i, j) = (i.min(j), i.max(j));
        if i == j || i == 0 || j > n {
            return Err(Error::IndexOutOfRange(format!("s_({i},{j}) needs 1 <= i < j <= {n}")));
        }
        let mut acc = self.s[i - 1].clone();
        for k in i + 1..j {
            acc = self.s[k - 1].mul(&acc).mul(&self.s[k - 1]);
        }
        Ok(acc)
    }

    /// `y_i = X_i^{-1}(w_i − t Σ_{j<i} s_{ji})`.
    pub fn suzuki_y(&self, i: usize) -> Result<DiffOp> {
        let xinv = self.x_inv(i)?.clone();
        let mut inner = DiffOp::w(&self.ctx, i);
        let t = RatFunc::var(&self.ctx, self.ctx.t());
        for j in 1..i {
            inner = inner.sub(&self.s_ij(j, i)?.left_mul(&t));
        }
        Ok(xinv.mul(&inner))
    }

    /// `A_k = w_i − ħ − z_k + t Σ_{i<j} s_{ij}`.
    pub fn reorder_factor(&self, i: usize, k: usize, mode: &ParamMode) -> Result<DiffOp> {
        let ctx = &self.ctx;
        let base = MultiPoly::w(ctx, i).sub(&MultiPoly::hbar(ctx)).sub(&mode.z(ctx, k));
        let t = RatFunc::var(ctx, ctx.t());
        let mut acc = DiffOp::poly(base);
        for j in i + 1..=self.n() {
            acc = acc.add(&self.s_ij(i, j)?.left_mul(&t));
        }
        Ok(acc)
    }

    /// `A_1 ⋯ A_l`, multiplied left to right.
    pub fn reorder_product(&self, i: usize, mode: &ParamMode) -> Result<DiffOp> {
        self.index(i, self.n(), "w")?;
        mode.validate(&self.ctx)?;
        let mut acc = DiffOp::identity(&self.ctx);
        for k in 1..=mode.l {
            acc = acc.mul(&self.reorder_factor(i, k, mode)?);
        }
        Ok(acc)
    }

    /// The normal-ordered expansion of `A_1 ⋯ A_l`:
    /// `Σ_p t^p Σ_{0=k_0<k_1<⋯<k_p≤l} Σ_{i=i_0<i_1<⋯<i_p}
    ///  Π_{k_0<k<k_1}(w_{i_0}−ħ−z_k) ⋯ Π_{k_p<k≤l}(w_{i_p}−ħ−z_k) · s_{i_{p-1}i_p} ⋯ s_{i_0i_1}`.
    ///
    /// With `with_x_inv`, the factor `X_{i_p}^{-1}` is inserted before the transpositions.
    pub fn reorder_expansion(&self, i: usize, mode: &ParamMode, with_x_inv: bool) -> Result<DiffOp> {
        self.index(i, self.n(), "w")?;
        mode.validate(&self.ctx)?;
        let ctx = &self.ctx;
        let n = self.n();
        let l = mode.l;
        let h = MultiPoly::hbar(ctx);
        let lin = |idx: usize, k: usize| MultiPoly::w(ctx, idx).sub(&h).sub(&mode.z(ctx, k));
        let mut terms: Vec<DiffOp> = Vec::new();
        for p in 0..=l.min(n - i) {
            for ks in combinations(l, p) {
                let cuts: Vec<usize> = std::iter::once(0).chain(ks.iter().copied()).collect();
                for tail in combinations(n - i, p) {
                    let idx: Vec<usize> = std::iter::once(i).chain(tail.iter().map(|&v| v + i)).collect();
                    let mut coeff = MultiPoly::t(ctx).pow(p as u32);
                    for q in 0..=p {
                        let hi = if q == p { l } else { cuts[q + 1] - 1 };
                        for k in cuts[q] + 1..=hi {
                            coeff = coeff.mul(&lin(idx[q], k));
                        }
                    }
                    let mut op = DiffOp::poly(coeff);
                    if with_x_inv {
                        op = op.mul(self.x_inv(idx[p])?);
                    }
                    for q in (0..p).rev() {
                        op = op.mul(&self.s_ij(idx[q], idx[q + 1])?);
                    }
                    terms.push(op);
                }
            }
        }
        Ok(DiffOp::sum(ctx, terms.iter()))
    }

    /// `Y_i = Π_k (w_i − ħ − z_k + t Σ_{i<j} s_{ij}) · X_i^{-1}`.
    pub fn oblomkov_y(&self, i: usize, mode: &ParamMode) -> Result<DiffOp> {
        if mode.l == 0 {
            return Err(Error::InvalidArgument("Y_i needs l >= 1".into()));
        }
        Ok(self.reorder_product(i, mode)?.mul(self.x_inv(i)?))
    }
}

/// `p_k(w_1..w_N)` as a multiplication operator.
pub fn power_sum_op(ctx: &Ctx, k: u32) -> DiffOp {
    DiffOp::poly(power_sum(ctx, k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::VarContext;

    fn w(ctx: &Ctx, i: usize) -> MultiPoly {
        MultiPoly::w(ctx, i)
    }

    #[test]
    fn e_one_at_rank_two() {
        let ctx = VarContext::new(2, 0).unwrap();
        let r = RatFunc::quotient(MultiPoly::t(&ctx), &[w(&ctx, 1).sub(&w(&ctx, 2))]).unwrap();
        let one = RatFunc::one(&ctx);
        let expect = DiffOp::u(&ctx, 1, 1).left_mul(&one.sub(&r)).add(&DiffOp::u(&ctx, 2, 1).left_mul(&one.add(&r)));
        assert_eq!(e_op(&ctx, 1, &SymPolySpec::one(&ctx, 1)).unwrap(), expect);
        assert!(e_op(&ctx, 3, &SymPolySpec::one(&ctx, 3)).is_err());
    }

    #[test]
    fn f_one_trivial_and_framed() {
        let ctx = VarContext::new(1, 0).unwrap();
        let f = f_op(&ctx, 1, &SymPolySpec::one(&ctx, 1), &ParamMode::zero(0)).unwrap();
        assert_eq!(f, DiffOp::u(&ctx, 1, -1));

        let ctx = VarContext::new(2, 1).unwrap();
        let h = MultiPoly::hbar(&ctx);
        let r = RatFunc::quotient(MultiPoly::t(&ctx), &[w(&ctx, 1).sub(&w(&ctx, 2))]).unwrap();
        let one = RatFunc::one(&ctx);
        let expect = DiffOp::u(&ctx, 1, -1)
            .left_mul(&one.add(&r).mul_poly(&w(&ctx, 1).sub(&h)))
            .add(&DiffOp::u(&ctx, 2, -1).left_mul(&one.sub(&r).mul_poly(&w(&ctx, 2).sub(&h))));
        let f = f_op(&ctx, 1, &SymPolySpec::one(&ctx, 1), &ParamMode::zero(1)).unwrap();
        assert_eq!(f, expect);
    }

    #[test]
    fn symmetric_spec_is_checked() {
        let ctx = VarContext::new(3, 0).unwrap();
        assert!(SymPolySpec::new(w(&ctx, 1).mul(&w(&ctx, 2)), 2).is_ok());
        assert!(SymPolySpec::new(w(&ctx, 1), 2).is_err());
        assert!(SymPolySpec::new(w(&ctx, 3), 2).is_err());
    }

    #[test]
    fn reflections_square_to_one() {
        let ctx = VarContext::new(3, 0).unwrap();
        let id = DiffOp::identity(&ctx);
        for i in 1..3 {
            let s = dl_s(&ctx, i).unwrap();
            assert_eq!(s.mul(&s), id);
        }
        let s0 = dl_s0(&ctx).unwrap();
        assert_eq!(s0.mul(&s0), id);
        let pi = dl_pi(&ctx);
        let lhs = pi.mul(&DiffOp::w(&ctx, 3)).mul(&dl_pi_inv(&ctx));
        assert_eq!(lhs, DiffOp::poly(w(&ctx, 1).add(&MultiPoly::hbar(&ctx))));
    }

    #[test]
    fn rank_two_x_operators() {
        let ctx = VarContext::new(2, 0).unwrap();
        let cat = Catalogue::new(&ctx).unwrap();
        let h = MultiPoly::hbar(&ctx);
        let one = RatFunc::one(&ctx);
        let r = RatFunc::quotient(MultiPoly::t(&ctx), &[w(&ctx, 2).sub(&w(&ctx, 1)).sub(&h)]).unwrap();
        let expect = DiffOp::u(&ctx, 1, 1).left_mul(&one.add(&r)).sub(&cat.pi().left_mul(&r));
        assert_eq!(cat.x(1).unwrap(), &expect);
        let r = RatFunc::quotient(MultiPoly::t(&ctx), &[w(&ctx, 2).sub(&h).sub(&w(&ctx, 1))]).unwrap();
        let expect = DiffOp::u(&ctx, 2, -1).left_mul(&one.add(&r)).sub(&cat.pi_inv().left_mul(&r));
        assert_eq!(cat.x_inv(2).unwrap(), &expect);
    }

    #[test]
    fn conjugation_matches_word() {
        // X_i = s_{i-1} ⋯ s_1 π s_{N-1} ⋯ s_i
        let ctx = VarContext::new(3, 0).unwrap();
        let cat = Catalogue::new(&ctx).unwrap();
        for i in 1..=3 {
            let mut acc = DiffOp::identity(&ctx);
            for k in (1..i).rev() {
                acc = acc.mul(cat.s(k).unwrap());
            }
            acc = acc.mul(cat.pi());
            for k in (i..3).rev() {
                acc = acc.mul(cat.s(k).unwrap());
            }
            assert_eq!(&acc, cat.x(i).unwrap());
        }
    }

    #[test]
    fn transposition_images() {
        let ctx = VarContext::new(3, 0).unwrap();
        let cat = Catalogue::new(&ctx).unwrap();
        let s13 = cat.s_ij(1, 3).unwrap();
        assert_eq!(s13, cat.perm(&Permutation::transposition(3, 1, 3)).unwrap());
        assert_eq!(s13.mul(&s13), DiffOp::identity(&ctx));
    }

    #[test]
    fn oblomkov_needs_framing() {
        let ctx = VarContext::new(2, 1).unwrap();
        let cat = Catalogue::new(&ctx).unwrap();
        assert!(cat.oblomkov_y(1, &ParamMode::zero(0)).is_err());
        let y2 = cat.oblomkov_y(2, &ParamMode::zero(1)).unwrap();
        let h = MultiPoly::hbar(&ctx);
        assert_eq!(y2.res(), DiffOp::u(&ctx, 2, -1).left_mul(&RatFunc::from_poly(w(&ctx, 2).sub(&h))));
    }
}
