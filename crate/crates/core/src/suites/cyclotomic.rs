//! The cyclotomic parameter dictionary, checked for every order up to `l`.

use crate::cyclotomic::{cyclotomic_polynomial, z_from_c, CycNum, ZVariant};
use crate::error::Result;
use crate::report::{Check, Outcome};

use super::SuiteParams;

const FIELD: &str = "arithmetic in the cyclotomic field";
const DICTIONARY: &str = "framing parameters from cyclotomic parameters";

fn is_prime(l: usize) -> bool {
    l >= 2 && (2..l).take_while(|d| d * d <= l).all(|d| !l.is_multiple_of(d))
}

pub fn suite(p: &SuiteParams) -> Result<Vec<Check>> {
    let mut v = Vec::new();
    for l in 1..=p.l.max(1) {
        v.push(Check::new(format!("ε is a primitive root of order {l}"), FIELD, move || {
            let phi = cyclotomic_polynomial(l);
            let mut value = CycNum::zero(l);
            for (k, c) in phi.iter().enumerate() {
                value = value.add(&CycNum::eps_pow(l, k as i64).scale(c))?;
            }
            let mut parts = vec![
                Outcome::holds(value.is_zero(), || format!("Φ_{l}(ε) = {value}")),
                Outcome::values(&CycNum::eps_pow(l, 1).pow(l as u32), &CycNum::one(l)),
            ];
            for d in 1..l {
                let e = CycNum::eps_pow(l, 1).pow(d as u32);
                parts.push(Outcome::holds(e != CycNum::one(l), || format!("ε^{d} = 1")));
                let gap = CycNum::one(l).sub(&e)?;
                parts.push(Outcome::values(&gap.mul(&gap.inv()?)?, &CycNum::one(l)));
            }
            if is_prime(l) {
                let sum = (0..l).try_fold(CycNum::zero(l), |acc, k| acc.add(&CycNum::eps_pow(l, k as i64)))?;
                parts.push(Outcome::holds(sum.is_zero(), || format!("1 + ε + .. = {sum}")));
            }
            Ok(Outcome::all(parts))
        }));
        v.push(Check::new(format!("(1 - ε^(mk))/(1 - ε^m) = 1 + ε^m + .. + ε^((k-1)m) at order {l}"), FIELD, move || {
            let mut parts = Vec::new();
            for m in 1..l {
                let den = CycNum::one(l).sub(&CycNum::eps_pow(l, m as i64))?;
                for k in 1..=l {
                    let q = CycNum::one(l).sub(&CycNum::eps_pow(l, (m * k) as i64))?.div(&den)?;
                    let geo = (0..k).try_fold(CycNum::zero(l), |acc, j| acc.add(&CycNum::eps_pow(l, (j * m) as i64)))?;
                    parts.push(Outcome::values(&q, &geo));
                }
            }
            Ok(Outcome::all(parts))
        }));
        v.push(Check::new(format!("both closed forms of z_k agree for k <= {l}"), DICTIONARY, move || {
            let mut parts = Vec::new();
            for k in 1..=l {
                let a = z_from_c(l, k, ZVariant::Quotient)?;
                let b = z_from_c(l, k, ZVariant::GeometricSum)?;
                parts.push(Outcome::holds(a == b, || format!("z_{k}: {a} vs {b}")));
            }
            Ok(Outcome::all(parts))
        }));
        v.push(Check::new(format!("z_{l} = 0 at order {l}"), DICTIONARY, move || {
            let z = z_from_c(l, l, ZVariant::Quotient)?;
            Ok(Outcome::holds(z.is_zero(), || z.to_string()))
        }));
    }
    Ok(v)
}
