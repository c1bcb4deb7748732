//! Exact arithmetic in `Q(ε)` for a primitive `l`-th root of unity `ε`, and the
//! dictionary between the framing parameters `z_k` and the cyclotomic parameters `c_m`.

use std::fmt;

use crate::algebra::{Ctx, MultiPoly, Q};
use crate::error::{Error, Result};

/// Dense univariate polynomial over `Q`, lowest degree first, no trailing zeros.
type UPoly = Vec<Q>;

fn trim(mut p: UPoly) -> UPoly {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

fn upoly_sub(a: &UPoly, b: &UPoly) -> UPoly {
    let mut out = vec![Q::ZERO; a.len().max(b.len())];
    for (k, c) in a.iter().enumerate() {
        out[k] = &out[k] + c;
    }
    for (k, c) in b.iter().enumerate() {
        out[k] = &out[k] - c;
    }
    trim(out)
}

fn upoly_mul(a: &UPoly, b: &UPoly) -> UPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Q::ZERO; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = &out[i + j] + &(x * y);
        }
    }
    trim(out)
}

/// Quotient and remainder; `b` must be nonzero.
fn upoly_divmod(a: &UPoly, b: &UPoly) -> (UPoly, UPoly) {
    let mut rem = trim(a.clone());
    let db = b.len() - 1;
    let lead = b[db].recip();
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let mut quot = vec![Q::ZERO; rem.len() - db];
    while rem.len() >= b.len() {
        let shift = rem.len() - b.len();
        let c = rem.last().expect("nonempty") * &lead;
        for (j, y) in b.iter().enumerate() {
            rem[shift + j] = &rem[shift + j] - &(&c * y);
        }
        quot[shift] = c;
        rem = trim(rem);
    }
    (trim(quot), rem)
}

/// The cyclotomic polynomial `Φ_l`, by dividing `x^l − 1` by `Φ_d` for the proper divisors `d`.
pub fn cyclotomic_polynomial(l: usize) -> Vec<Q> {
    let mut p = vec![Q::ZERO; l + 1];
    p[0] = -Q::ONE;
    p[l] = Q::ONE;
    for d in (1..l).filter(|d| l.is_multiple_of(*d)) {
        p = upoly_divmod(&p, &cyclotomic_polynomial(d)).0;
    }
    p
}

/// An element of `Q(ε_l)`, stored as its residue modulo `Φ_l`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycNum {
    l: usize,
    coeffs: Vec<Q>,
}

impl CycNum {
    fn reduce(l: usize, p: UPoly) -> CycNum {
        let (_, r) = upoly_divmod(&p, &cyclotomic_polynomial(l));
        CycNum { l, coeffs: r }
    }

    pub fn from_coeffs(l: usize, coeffs: Vec<Q>) -> Result<CycNum> {
        if l == 0 {
            return Err(Error::InvalidArgument("root of unity of order 0".into()));
        }
        Ok(CycNum::reduce(l, trim(coeffs)))
    }

    pub fn zero(l: usize) -> CycNum {
        CycNum { l, coeffs: Vec::new() }
    }

    pub fn rational(l: usize, q: Q) -> CycNum {
        CycNum::reduce(l, trim(vec![q]))
    }

    pub fn one(l: usize) -> CycNum {
        CycNum::rational(l, Q::ONE)
    }

    /// `ε^k`, with negative `k` allowed.
    pub fn eps_pow(l: usize, k: i64) -> CycNum {
        let e = k.rem_euclid(l as i64) as usize;
        let mut v = vec![Q::ZERO; e + 1];
        v[e] = Q::ONE;
        CycNum::reduce(l, v)
    }

    pub fn order(&self) -> usize {
        self.l
    }

    /// Coefficients in the basis `1, ε, .., ε^{φ(l)−1}`.
    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `Some(q)` when the element is rational.
    pub fn as_rational(&self) -> Option<Q> {
        match self.coeffs.len() {
            0 => Some(Q::ZERO),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    fn same(&self, other: &CycNum) -> Result<()> {
        if self.l != other.l {
            return Err(Error::ContextMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &CycNum) -> Result<CycNum> {
        self.same(other)?;
        Ok(CycNum { l: self.l, coeffs: upoly_sub(&self.coeffs, &other.neg().coeffs) })
    }

    pub fn sub(&self, other: &CycNum) -> Result<CycNum> {
        self.same(other)?;
        Ok(CycNum { l: self.l, coeffs: upoly_sub(&self.coeffs, &other.coeffs) })
    }

    pub fn neg(&self) -> CycNum {
        CycNum { l: self.l, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn scale(&self, q: &Q) -> CycNum {
        CycNum { l: self.l, coeffs: trim(self.coeffs.iter().map(|c| c * q).collect()) }
    }

    pub fn mul(&self, other: &CycNum) -> Result<CycNum> {
        self.same(other)?;
        Ok(CycNum::reduce(self.l, upoly_mul(&self.coeffs, &other.coeffs)))
    }

    /// Extended Euclid against `Φ_l`, which is irreducible, so every nonzero element is a unit.
    pub fn inv(&self) -> Result<CycNum> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (mut r0, mut r1) = (cyclotomic_polynomial(self.l), self.coeffs.clone());
        let (mut t0, mut t1): (UPoly, UPoly) = (Vec::new(), vec![Q::ONE]);
        while r1.len() > 1 {
            let (q, r) = upoly_divmod(&r0, &r1);
            let t = upoly_sub(&t0, &upoly_mul(&q, &t1));
            (r0, r1) = (r1, r);
            (t0, t1) = (t1, t);
        }
        // r1 is now a nonzero constant c with t1·a ≡ c.
        let c = r1[0].recip();
        Ok(CycNum::reduce(self.l, t1.iter().map(|x| x * &c).collect()))
    }

    pub fn div(&self, other: &CycNum) -> Result<CycNum> {
        self.mul(&other.inv()?)
    }

    pub fn pow(&self, e: u32) -> CycNum {
        (0..e).fold(CycNum::one(self.l), |acc, _| acc.mul(self).expect("same order"))
    }
}

impl fmt::Display for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            let (neg, abs) = (c.is_negative(), c.abs());
            let sign = match (first, neg) {
                (true, true) => "-",
                (true, false) => "",
                (false, true) => " - ",
                (false, false) => " + ",
            };
            let body = match (k, abs.is_one()) {
                (0, _) => abs.to_string(),
                (1, true) => "ε".to_string(),
                (1, false) => format!("{abs}ε"),
                (_, true) => format!("ε^{k}"),
                (_, false) => format!("{abs}ε^{k}"),
            };
            write!(f, "{sign}{body}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} (mod Φ_{})", self.l)
    }
}

/// Which of the two equivalent closed forms for `z_k` to use.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ZVariant {
    /// `(1 − ε^{mk}) / (1 − ε^m)` weights.
    Quotient,
    /// `1 + ε^m + .. + ε^{(k−1)m}` weights.
    GeometricSum,
}

/// `hbar·ħ + Σ_m c[m−1]·c_m` with coefficients in `Q(ε_l)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZForm {
    pub hbar: CycNum,
    pub c: Vec<CycNum>,
}

impl ZForm {
    pub fn is_zero(&self) -> bool {
        self.hbar.is_zero() && self.c.iter().all(CycNum::is_zero)
    }

    /// As a polynomial in `ħ, c_1..c_{l−1}` when every coefficient is rational.
    pub fn to_poly(&self, ctx: &Ctx) -> Result<Option<MultiPoly>> {
        let mut acc = match self.hbar.as_rational() {
            Some(q) => MultiPoly::hbar(ctx).scale(&q),
            None => return Ok(None),
        };
        for (m, c) in self.c.iter().enumerate() {
            let idx = ctx
                .c(m + 1)
                .ok_or_else(|| Error::InvalidArgument(format!("context lacks the parameter c_{}", m + 1)))?;
            match c.as_rational() {
                Some(q) => acc = acc.add(&MultiPoly::var(ctx, idx).scale(&q)),
                None => return Ok(None),
            }
        }
        Ok(Some(acc))
    }
}

impl fmt::Display for ZForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if !self.hbar.is_zero() {
            parts.push(format!("({})·ħ", self.hbar));
        }
        for (m, c) in self.c.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            parts.push(format!("({c})·c_{}", m + 1));
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// `z_k = −(1/l)((l−k)ħ + Σ_{m=1}^{l−1} weight(m, k)·c_m)`.
pub fn z_from_c(l: usize, k: usize, variant: ZVariant) -> Result<ZForm> {
    if l == 0 || k == 0 || k > l {
        return Err(Error::IndexOutOfRange(format!("z_{k} needs 1 <= k <= l = {l}")));
    }
    let scale = Q::new(-1, l as i64);
    let hbar = CycNum::rational(l, Q::int((l - k) as i64)).scale(&scale);
    let mut c = Vec::new();
    for m in 1..l {
        let weight = match variant {
            ZVariant::Quotient => {
                let num = CycNum::one(l).sub(&CycNum::eps_pow(l, (m * k) as i64))?;
                num.div(&CycNum::one(l).sub(&CycNum::eps_pow(l, m as i64))?)?
            }
            ZVariant::GeometricSum => {
                (0..k).try_fold(CycNum::zero(l), |acc, j| acc.add(&CycNum::eps_pow(l, (j * m) as i64)))?
            }
        };
        c.push(weight.scale(&scale));
    }
    Ok(ZForm { hbar, c })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomic_polynomials() {
        let ints = |v: &[i64]| v.iter().map(|&x| Q::int(x)).collect::<Vec<_>>();
        assert_eq!(cyclotomic_polynomial(1), ints(&[-1, 1]));
        assert_eq!(cyclotomic_polynomial(2), ints(&[1, 1]));
        assert_eq!(cyclotomic_polynomial(4), ints(&[1, 0, 1]));
        assert_eq!(cyclotomic_polynomial(6), ints(&[1, -1, 1]));
    }

    #[test]
    fn order_two_and_four() {
        assert_eq!(CycNum::eps_pow(2, 1), CycNum::rational(2, -Q::ONE));
        assert_eq!(CycNum::eps_pow(2, 1).pow(2), CycNum::one(2));
        // (1 − ε²)/(1 − ε) = 1 + ε at l = 4.
        let one = CycNum::one(4);
        let q = one.sub(&CycNum::eps_pow(4, 2)).unwrap().div(&one.sub(&CycNum::eps_pow(4, 1)).unwrap()).unwrap();
        assert_eq!(q, one.add(&CycNum::eps_pow(4, 1)).unwrap());
        assert_eq!(q.to_string(), "1 + ε");
    }

    #[test]
    fn rank_two_dictionary_is_rational() {
        let z = z_from_c(2, 1, ZVariant::Quotient).unwrap();
        let ctx = crate::algebra::VarContext::builder(1, 2).cyclotomic().build().unwrap();
        let p = z.to_poly(&ctx).unwrap().unwrap();
        let expected = MultiPoly::hbar(&ctx).add(&MultiPoly::var(&ctx, ctx.c(1).unwrap())).scale(&Q::new(-1, 2));
        assert_eq!(p, expected);
        assert!(z_from_c(3, 4, ZVariant::Quotient).is_err());
    }
}
