//! Bernoulli polynomials, truncated power series in a formal variable `x`, and the
//! realization of the affine Yangian of `gl(1)` by difference operators.

use std::fmt;

use crate::algebra::{binomial, Ctx, MultiPoly, RatFunc, VarContext, Q};
use crate::diffop::DiffOp;
use crate::dl_rep::{e_op, f_op, ParamMode, SymPolySpec};
use crate::error::{Error, Result};

/// Coefficients of the Bernoulli polynomial `B_n(x)`, lowest degree first.
///
/// Built from `B_0 = 1`, `B_n' = n B_{n-1}` and `∫_0^1 B_n = 0`, which together
/// imply `B_n(x+1) − B_n(x) = n x^{n−1}`.
pub fn bernoulli(n: u32) -> Vec<Q> {
    let mut b = vec![Q::ONE];
    for m in 1..=n {
        let mut next = vec![Q::ZERO; b.len() + 1];
        for (k, c) in b.iter().enumerate() {
            next[k + 1] = c * &Q::new(m as i64, k as i64 + 1);
        }
        let integral = next
            .iter()
            .enumerate()
            .skip(1)
            .fold(Q::ZERO, |acc, (k, c)| &acc + &(c * &Q::new(1, k as i64 + 1)));
        next[0] = -integral;
        b = next;
    }
    b
}

/// `B_n(x)` with `x` replaced by a polynomial.
pub fn bernoulli_at(n: u32, x: &MultiPoly) -> MultiPoly {
    let ctx = x.ctx();
    bernoulli(n)
        .iter()
        .enumerate()
        .fold(MultiPoly::zero(ctx), |acc, (k, c)| acc.add(&x.pow(k as u32).scale(c)))
}

/// Normalized Bernoulli polynomial `(−ħ)^n B_n(−arg/ħ) / n`; a polynomial in `arg` and `ħ`.
pub fn bbar(n: u32, arg: &MultiPoly) -> Result<MultiPoly> {
    if n == 0 {
        return Err(Error::InvalidArgument("the normalized Bernoulli polynomial needs n >= 1".into()));
    }
    let ctx = arg.ctx();
    let h = MultiPoly::hbar(ctx);
    let mut acc = MultiPoly::zero(ctx);
    for (k, c) in bernoulli(n).iter().enumerate() {
        let k = k as u32;
        let sign = if (n + k).is_multiple_of(2) { Q::ONE } else { -Q::ONE };
        let coeff = &(c * &sign) * &Q::new(1, n as i64);
        acc = acc.add(&h.pow(n - k).mul(&arg.pow(k)).scale(&coeff));
    }
    Ok(acc)
}

/// A power series `c_0 + c_1 x + .. + c_K x^K` modulo `x^{K+1}`.
#[derive(Clone, Debug)]
pub struct TruncSeries {
    ctx: Ctx,
    coeffs: Vec<RatFunc>,
}

impl TruncSeries {
    pub fn zero(ctx: &Ctx, order: usize) -> TruncSeries {
        TruncSeries { ctx: ctx.clone(), coeffs: vec![RatFunc::zero(ctx); order + 1] }
    }

    pub fn one(ctx: &Ctx, order: usize) -> TruncSeries {
        TruncSeries::constant(RatFunc::one(ctx), order)
    }

    pub fn constant(c: RatFunc, order: usize) -> TruncSeries {
        let mut s = TruncSeries::zero(c.ctx(), order);
        s.coeffs[0] = c;
        s
    }

    /// Pads with zeros or truncates to the given order.
    pub fn new(ctx: &Ctx, order: usize, coeffs: impl IntoIterator<Item = RatFunc>) -> TruncSeries {
        let mut s = TruncSeries::zero(ctx, order);
        for (k, c) in coeffs.into_iter().take(order + 1).enumerate() {
            s.coeffs[k] = c;
        }
        s
    }

    /// Polynomial in `x` with polynomial coefficients, lowest degree first.
    pub fn from_polys(ctx: &Ctx, order: usize, coeffs: &[MultiPoly]) -> TruncSeries {
        TruncSeries::new(ctx, order, coeffs.iter().cloned().map(RatFunc::from_poly))
    }

    /// `1 − c·x`.
    pub fn linear(c: &MultiPoly, order: usize) -> TruncSeries {
        let ctx = c.ctx();
        TruncSeries::from_polys(ctx, order, &[MultiPoly::one(ctx), c.neg()])
    }

    /// `1 / (1 − c·x)`.
    pub fn geometric(c: &MultiPoly, order: usize) -> TruncSeries {
        let ctx = c.ctx();
        let coeffs: Vec<MultiPoly> = (0..=order).map(|k| c.pow(k as u32)).collect();
        TruncSeries::from_polys(ctx, order, &coeffs)
    }

    pub fn ctx(&self) -> &Ctx {
        &self.ctx
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coefficients(&self) -> &[RatFunc] {
        &self.coeffs
    }

    /// Coefficient of `x^k`; beyond the order the series is unknown, hence an error.
    pub fn coefficient(&self, k: usize) -> Result<&RatFunc> {
        self.coeffs
            .get(k)
            .ok_or_else(|| Error::BoundExceeded(format!("x^{k} is beyond the truncation order {}", self.order())))
    }

    fn zip(&self, other: &TruncSeries, f: impl Fn(&RatFunc, &RatFunc) -> RatFunc) -> TruncSeries {
        let order = self.order().min(other.order());
        TruncSeries::new(&self.ctx, order, (0..=order).map(|k| f(&self.coeffs[k], &other.coeffs[k])))
    }

    pub fn add(&self, other: &TruncSeries) -> TruncSeries {
        self.zip(other, |a, b| a.add(b))
    }

    pub fn sub(&self, other: &TruncSeries) -> TruncSeries {
        self.zip(other, |a, b| a.sub(b))
    }

    pub fn neg(&self) -> TruncSeries {
        TruncSeries { ctx: self.ctx.clone(), coeffs: self.coeffs.iter().map(|c| c.neg()).collect() }
    }

    pub fn scale(&self, q: &Q) -> TruncSeries {
        TruncSeries { ctx: self.ctx.clone(), coeffs: self.coeffs.iter().map(|c| c.scale(q)).collect() }
    }

    pub fn mul_scalar(&self, f: &RatFunc) -> TruncSeries {
        TruncSeries { ctx: self.ctx.clone(), coeffs: self.coeffs.iter().map(|c| c.mul(f)).collect() }
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: usize) -> TruncSeries {
        let order = self.order();
        let mut s = TruncSeries::zero(&self.ctx, order);
        for j in 0..=order.saturating_sub(k) {
            if j + k <= order {
                s.coeffs[j + k] = self.coeffs[j].clone();
            }
        }
        s
    }

    pub fn mul(&self, other: &TruncSeries) -> TruncSeries {
        let order = self.order().min(other.order());
        let mut s = TruncSeries::zero(&self.ctx, order);
        for i in 0..=order {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=order - i {
                if !other.coeffs[j].is_zero() {
                    s.coeffs[i + j] = s.coeffs[i + j].add(&self.coeffs[i].mul(&other.coeffs[j]));
                }
            }
        }
        s
    }

    /// Needs a vanishing constant term.
    pub fn exp(&self) -> Result<TruncSeries> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::InvalidArgument("exp of a series needs a zero constant term".into()));
        }
        let order = self.order();
        let mut e = TruncSeries::one(&self.ctx, order);
        for k in 1..=order {
            let mut acc = RatFunc::zero(&self.ctx);
            for j in 1..=k {
                if !self.coeffs[j].is_zero() {
                    acc = acc.add(&self.coeffs[j].mul(&e.coeffs[k - j]).scale(&Q::int(j as i64)));
                }
            }
            e.coeffs[k] = acc.scale(&Q::new(1, k as i64));
        }
        Ok(e)
    }

    /// Needs constant term one.
    pub fn log(&self) -> Result<TruncSeries> {
        if !self.coeffs[0].is_one() {
            return Err(Error::InvalidArgument("log of a series needs constant term 1".into()));
        }
        let order = self.order();
        let mut l = TruncSeries::zero(&self.ctx, order);
        for k in 1..=order {
            let mut acc = RatFunc::zero(&self.ctx);
            for j in 1..k {
                acc = acc.add(&l.coeffs[j].mul(&self.coeffs[k - j]).scale(&Q::int(j as i64)));
            }
            l.coeffs[k] = self.coeffs[k].sub(&acc.scale(&Q::new(1, k as i64)));
        }
        Ok(l)
    }

    pub fn inverse(&self) -> Result<TruncSeries> {
        let b0 = self.coeffs[0].inv()?;
        let order = self.order();
        let mut b = TruncSeries::constant(b0.clone(), order);
        for k in 1..=order {
            let mut acc = RatFunc::zero(&self.ctx);
            for j in 1..=k {
                acc = acc.add(&self.coeffs[j].mul(&b.coeffs[k - j]));
            }
            b.coeffs[k] = acc.mul(&b0).neg();
        }
        Ok(b)
    }

    pub fn substitute(&self, bindings: &[(usize, MultiPoly)]) -> Result<TruncSeries> {
        let coeffs = self.coeffs.iter().map(|c| c.substitute(bindings)).collect::<Result<Vec<_>>>()?;
        Ok(TruncSeries { ctx: self.ctx.clone(), coeffs })
    }
}

impl PartialEq for TruncSeries {
    fn eq(&self, other: &TruncSeries) -> bool {
        self.coeffs == other.coeffs
    }
}

impl fmt::Display for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| match k {
                0 => format!("({c})"),
                1 => format!("({c})·x"),
                _ => format!("({c})·x^{k}"),
            })
            .collect();
        if parts.is_empty() {
            write!(f, "0 + O(x^{})", self.order() + 1)
        } else {
            write!(f, "{} + O(x^{})", parts.join(" + "), self.order() + 1)
        }
    }
}

/// Named generating functions.
#[derive(Clone, Debug)]
pub enum SeriesFn {
    /// `G_n(1 − qx) − G_n(1 + qx)` with `G_0 = −log`, `G_n(y) = (y^{−n} − 1)/n`.
    G { n: u32, q: MultiPoly },
    /// `Σ_{q ∈ {−ħ, ħ+t, −t}} x^n (G_n(1 − qx) − G_n(1 + qx))`.
    Phi(u32),
    /// `Phi(n)` divided by `ħ`, coefficientwise and exactly.
    PhiOverHbar(u32),
    /// `(1 − (ħ+t)x)(1 + ωtx) / (1 − (ħ + (1−ω)t)x)`.
    PrefactorDe { omega: MultiPoly },
    /// `Π_k (1 − (z_k + ħ)x)` times `PrefactorDe`.
    Prefactor7 { omega: MultiPoly, z: Vec<MultiPoly> },
}

pub fn series_fn(ctx: &Ctx, f: &SeriesFn, order: usize) -> Result<TruncSeries> {
    if order == 0 {
        return Err(Error::InvalidArgument("series order must be at least 1".into()));
    }
    let h = MultiPoly::hbar(ctx);
    let t = MultiPoly::t(ctx);
    match f {
        SeriesFn::G { n, q } => {
            let mut coeffs = vec![MultiPoly::zero(ctx); order + 1];
            for (k, c) in coeffs.iter_mut().enumerate().skip(1).step_by(2) {
                let k32 = k as u32;
                let weight = if *n == 0 {
                    Q::new(2, k as i64)
                } else {
                    &binomial(n + k32 - 1, k32) * &Q::new(2, *n as i64)
                };
                *c = q.pow(k32).scale(&weight);
            }
            Ok(TruncSeries::from_polys(ctx, order, &coeffs))
        }
        SeriesFn::Phi(n) => {
            let qs = [h.neg(), h.add(&t), t.neg()];
            let mut acc = TruncSeries::zero(ctx, order);
            for q in qs {
                acc = acc.add(&series_fn(ctx, &SeriesFn::G { n: *n, q }, order)?);
            }
            Ok(acc.shift(*n as usize))
        }
        SeriesFn::PhiOverHbar(n) => {
            let phi = series_fn(ctx, &SeriesFn::Phi(*n), order)?;
            let coeffs = phi
                .coefficients()
                .iter()
                .map(|c| {
                    let p = c.as_poly().expect("phi has polynomial coefficients");
                    p.exact_divide(&h)
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(TruncSeries::from_polys(ctx, order, &coeffs))
        }
        SeriesFn::PrefactorDe { omega } => {
            let num = TruncSeries::linear(&h.add(&t), order).mul(&TruncSeries::linear(&omega.mul(&t).neg(), order));
            let one_minus_omega = MultiPoly::one(ctx).sub(omega);
            Ok(num.mul(&TruncSeries::geometric(&h.add(&one_minus_omega.mul(&t)), order)))
        }
        SeriesFn::Prefactor7 { omega, z } => {
            let base = series_fn(ctx, &SeriesFn::PrefactorDe { omega: omega.clone() }, order)?;
            Ok(z.iter().fold(base, |acc, zk| acc.mul(&TruncSeries::linear(&zk.add(&h), order))))
        }
    }
}

/// `prefactor · exp(−Σ_{n≥0} D_{0,n+1} φ_n(x)/ħ)`; `d[m-1]` is `D_{0,m}`, at least `order` entries.
pub fn generating_series(prefactor: &TruncSeries, d: &[MultiPoly]) -> Result<TruncSeries> {
    let ctx = prefactor.ctx().clone();
    let order = prefactor.order();
    if d.len() < order {
        return Err(Error::InvalidArgument(format!("{} values of D_0,m given, {order} needed", d.len())));
    }
    let mut exponent = TruncSeries::zero(&ctx, order);
    for n in 0..order {
        let phi = series_fn(&ctx, &SeriesFn::PhiOverHbar(n as u32), order)?;
        exponent = exponent.sub(&phi.mul_scalar(&RatFunc::from_poly(d[n].clone())));
    }
    Ok(prefactor.mul(&exponent.exp()?))
}

/// `h_n = −[x^{n+1}] series / (t(ħ+t))`, exact when the coefficient is divisible.
pub fn h_coefficient(series: &TruncSeries, n: usize) -> Result<RatFunc> {
    let ctx = series.ctx();
    let c = series.coefficient(n + 1)?.neg();
    let t = MultiPoly::t(ctx);
    RatFunc::quotient(c.numerator().clone(), &[t.clone(), MultiPoly::hbar(ctx).add(&t)])?
        .div_poly(&c.denominator())
}

/// `R(v) = (1 − (v−t)x)(1 − (v+ħ+t)x) / ((1 − vx)(1 − (v+ħ)x))`.
pub fn r_factor(v: &MultiPoly, order: usize) -> TruncSeries {
    let ctx = v.ctx();
    let h = MultiPoly::hbar(ctx);
    let t = MultiPoly::t(ctx);
    TruncSeries::linear(&v.sub(&t), order)
        .mul(&TruncSeries::linear(&v.add(&h).add(&t), order))
        .mul(&TruncSeries::geometric(v, order))
        .mul(&TruncSeries::geometric(&v.add(&h), order))
}

/// How the spectral variables enter the realization.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ShiftConvention {
    /// Generators written in `w̄_i = w_i − (N−1)t`.
    Barred,
    /// Generators written in `w_i` directly.
    Unbarred,
}

impl std::str::FromStr for ShiftConvention {
    type Err = Error;
    fn from_str(s: &str) -> Result<ShiftConvention> {
        match s {
            "barred" => Ok(ShiftConvention::Barred),
            "unbarred" => Ok(ShiftConvention::Unbarred),
            _ => Err(Error::InvalidArgument(format!("shift convention {s:?}: expected barred or unbarred"))),
        }
    }
}

impl fmt::Display for ShiftConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ShiftConvention::Barred => "barred",
            ShiftConvention::Unbarred => "unbarred",
        })
    }
}

/// The central parameter `ω`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Omega {
    /// `ω = N`, as required for a representation.
    Rank,
    /// The extra symbol named `ω`, which the context must declare.
    Symbol,
}

/// Images of `D_{0,m}`, `e_n`, `f_{n+l}` and `h_n` as difference operators.
#[derive(Clone, Debug)]
pub struct YangianGens {
    ctx: Ctx,
    shift: ShiftConvention,
    omega: MultiPoly,
    d: Vec<MultiPoly>,
    series: TruncSeries,
}

impl YangianGens {
    /// Realization over a fresh context with symbolic `z_1..z_l`.
    pub fn realize(n: usize, l: usize, shift: ShiftConvention, order: usize) -> Result<YangianGens> {
        YangianGens::realize_in(&VarContext::new(n, l)?, shift, Omega::Rank, order)
    }

    /// Realization over an existing context, e.g. one carrying extra parameters.
    pub fn realize_in(ctx: &Ctx, shift: ShiftConvention, omega: Omega, order: usize) -> Result<YangianGens> {
        let omega = match omega {
            Omega::Rank => MultiPoly::int(ctx, ctx.n() as i64),
            Omega::Symbol => {
                let idx = ctx.extra("ω").ok_or_else(|| Error::InvalidArgument("context lacks the symbol ω".into()))?;
                MultiPoly::var(ctx, idx)
            }
        };
        let mut g = YangianGens {
            ctx: ctx.clone(),
            shift,
            omega,
            d: Vec::new(),
            series: TruncSeries::zero(ctx, order),
        };
        g.d = (1..=order as u32).map(|m| g.d_poly(m)).collect::<Result<_>>()?;
        let prefactor = series_fn(ctx, &SeriesFn::Prefactor7 { omega: g.omega.clone(), z: g.effective_z() }, order)?;
        g.series = generating_series(&prefactor, &g.d)?;
        Ok(g)
    }

    pub fn ctx(&self) -> &Ctx {
        &self.ctx
    }

    pub fn n(&self) -> usize {
        self.ctx.n()
    }

    pub fn l(&self) -> usize {
        self.ctx.l()
    }

    pub fn shift(&self) -> ShiftConvention {
        self.shift
    }

    pub fn order(&self) -> usize {
        self.series.order()
    }

    pub fn omega(&self) -> &MultiPoly {
        &self.omega
    }

    /// The translation `s` with `w̄ = w − s`.
    pub fn offset(&self) -> MultiPoly {
        match self.shift {
            ShiftConvention::Barred => MultiPoly::t(&self.ctx).scale(&Q::int(self.n() as i64 - 1)),
            ShiftConvention::Unbarred => MultiPoly::zero(&self.ctx),
        }
    }

    /// `w̄_i`.
    pub fn spectral(&self, i: usize) -> MultiPoly {
        MultiPoly::w(&self.ctx, i).sub(&self.offset())
    }

    /// Framing parameters as seen from `w̄`: `z_k − s`.
    pub fn effective_z(&self) -> Vec<MultiPoly> {
        (1..=self.l()).map(|k| MultiPoly::z(&self.ctx, k).sub(&self.offset())).collect()
    }

    /// `Σ_i B̄_m(w̄_i) − B̄_m(−(i−1)t)`.
    pub fn d_poly(&self, m: u32) -> Result<MultiPoly> {
        let t = MultiPoly::t(&self.ctx);
        let mut acc = MultiPoly::zero(&self.ctx);
        for i in 1..=self.n() {
            acc = acc.add(&bbar(m, &self.spectral(i))?);
            acc = acc.sub(&bbar(m, &t.scale(&Q::int(1 - i as i64)))?);
        }
        Ok(acc)
    }

    pub fn d(&self, m: u32) -> Result<DiffOp> {
        Ok(DiffOp::poly(self.d_poly(m)?))
    }

    /// `(w̄_1 + ħ)^k` as a one-variable symmetric function.
    fn power(&self, k: u32) -> MultiPoly {
        self.spectral(1).add(&MultiPoly::hbar(&self.ctx)).pow(k)
    }

    /// `E_1[g]` for a polynomial `g` in `w_1`.
    pub fn e_general(&self, g: &MultiPoly) -> Result<DiffOp> {
        e_op(&self.ctx, 1, &SymPolySpec::new(g.clone(), 1)?)
    }

    /// `F_1^{(l)}[g]`, framing included.
    pub fn f_general(&self, g: &MultiPoly) -> Result<DiffOp> {
        f_op(&self.ctx, 1, &SymPolySpec::new(g.clone(), 1)?, &ParamMode::symbolic(self.l()))
    }

    /// `F_1^{(0)}[g]`, without framing.
    pub fn f_unframed(&self, g: &MultiPoly) -> Result<DiffOp> {
        f_op(&self.ctx, 1, &SymPolySpec::new(g.clone(), 1)?, &ParamMode::zero(0))
    }

    /// `e_n ↦ E_1[(w̄+ħ)^n]`.
    pub fn e(&self, n: u32) -> Result<DiffOp> {
        self.e_general(&self.power(n))
    }

    /// Image of `f_{n+l}`: `F_1^{(l)}[(w̄+ħ)^n]`.
    pub fn f(&self, n: u32) -> Result<DiffOp> {
        self.f_general(&self.power(n))
    }

    /// `F_1^{(0)}[(w̄+ħ)^n]`.
    pub fn f_plain(&self, n: u32) -> Result<DiffOp> {
        self.f_unframed(&self.power(n))
    }

    /// Right side of the generating-function relation, as a series of multiplication operators.
    pub fn series(&self) -> &TruncSeries {
        &self.series
    }

    /// `h_n` from the generating function, possibly with denominators `t`, `ħ+t` when `n < l`.
    pub fn h_formal(&self, n: usize) -> Result<RatFunc> {
        h_coefficient(&self.series, n)
    }

    /// `h_n` for `n >= l`, which is a polynomial.
    pub fn h_poly(&self, n: usize) -> Result<MultiPoly> {
        if n < self.l() {
            return Err(Error::InvalidArgument(format!("h_{n} is not polynomial when l = {}", self.l())));
        }
        let h = self.h_formal(n)?;
        h.as_poly().cloned().ok_or_else(|| Error::NotDivisible(format!("h_{n} = {h} is not a polynomial")))
    }

    pub fn h(&self, n: usize) -> Result<DiffOp> {
        Ok(DiffOp::poly(self.h_poly(n)?))
    }

    /// `Π_k (1 − (z_k − s + ħ)x) Π_i R(w̄_i)`.
    pub fn product_series(&self) -> TruncSeries {
        let order = self.order();
        let h = MultiPoly::hbar(&self.ctx);
        let mut acc = TruncSeries::one(&self.ctx, order);
        for z in self.effective_z() {
            acc = acc.mul(&TruncSeries::linear(&z.add(&h), order));
        }
        for i in 1..=self.n() {
            acc = acc.mul(&r_factor(&self.spectral(i), order));
        }
        acc
    }

    /// Closed form of `[e_m, f_{n+l}]`: `−ħ/(t(ħ+t))` times the `x^{m+n+l+1}` coefficient of the product series.
    pub fn ef_closed_form(&self, m: usize, n: usize) -> Result<DiffOp> {
        let k = m + n + self.l();
        let c = h_coefficient(&self.product_series(), k)?;
        Ok(DiffOp::scalar(c.mul_poly(&MultiPoly::hbar(&self.ctx))))
    }
}

/// `τ_a(g_n) = Σ_k C(n,k) a^{n−k} g_k` applied to the first `family.len()` members.
pub fn tau_transform(family: &[DiffOp], a: &MultiPoly) -> Vec<DiffOp> {
    let ctx = a.ctx();
    (0..family.len())
        .map(|n| {
            let mut acc = DiffOp::zero(ctx);
            for (k, g) in family.iter().enumerate().take(n + 1) {
                let c = a.pow((n - k) as u32).scale(&binomial(n as u32, k as u32));
                acc = acc.add(&g.left_mul(&RatFunc::from_poly(c)));
            }
            acc
        })
        .collect()
}

/// `h_n` of the generating function with `D_{0,m}` left as free symbols `d_m` and `ω` symbolic.
///
/// The context must declare the extras `ω` and `d_1..d_order`.
pub fn symbolic_h(ctx: &Ctx, order: usize) -> Result<Vec<RatFunc>> {
    let omega = ctx.extra("ω").ok_or_else(|| Error::InvalidArgument("context lacks the symbol ω".into()))?;
    let d = (1..=order)
        .map(|m| {
            ctx.extra(&format!("d_{m}"))
                .map(|i| MultiPoly::var(ctx, i))
                .ok_or_else(|| Error::InvalidArgument(format!("context lacks the symbol d_{m}")))
        })
        .collect::<Result<Vec<_>>>()?;
    let prefactor = series_fn(ctx, &SeriesFn::PrefactorDe { omega: MultiPoly::var(ctx, omega) }, order)?;
    let s = generating_series(&prefactor, &d)?;
    (0..order).map(|n| h_coefficient(&s, n)).collect()
}

/// A context with `ω` and `d_1..d_order` for [`symbolic_h`].
pub fn symbolic_context(order: usize) -> Result<Ctx> {
    let mut b = VarContext::builder(1, 0).extra("ω");
    for m in 1..=order {
        b = b.extra(&format!("d_{m}"));
    }
    b.build()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn low_bernoulli_polynomials() {
        assert_eq!(bernoulli(1), vec![Q::new(-1, 2), Q::ONE]);
        assert_eq!(bernoulli(2), vec![Q::new(1, 6), Q::int(-1), Q::ONE]);
        let ctx = VarContext::new(1, 0).unwrap();
        let w = MultiPoly::w(&ctx, 1);
        let h = MultiPoly::hbar(&ctx);
        assert_eq!(bbar(1, &w).unwrap(), w.add(&h.scale(&Q::new(1, 2))));
        assert!(bbar(0, &w).is_err());
    }

    #[test]
    fn exp_and_log_invert() {
        let ctx = VarContext::new(1, 0).unwrap();
        let w = MultiPoly::w(&ctx, 1);
        let s = TruncSeries::from_polys(&ctx, 6, &[MultiPoly::zero(&ctx), w.clone(), MultiPoly::t(&ctx)]);
        let e = s.exp().unwrap();
        assert_eq!(e.log().unwrap(), s);
        let g = TruncSeries::geometric(&w, 6);
        assert_eq!(g.inverse().unwrap(), TruncSeries::linear(&w, 6));
        assert!(g.exp().is_err());
    }

    #[test]
    fn low_h_values() {
        let g = YangianGens::realize(2, 0, ShiftConvention::Barred, 4).unwrap();
        assert!(g.h_poly(0).unwrap().is_zero());
        assert_eq!(g.h_poly(1).unwrap(), MultiPoly::int(g.ctx(), 2));
    }
}
