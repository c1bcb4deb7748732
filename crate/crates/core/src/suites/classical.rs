//! Poisson brackets on the commutative limit at `t = z = 0`.

use std::sync::Arc;

use crate::algebra::{Ctx, MultiPoly, VarContext, Q};
use crate::diffop::{classical_bracket, classical_limit, ClassicalSpec, DiffOp};
use crate::dl_rep::{e_op, f_op, ParamMode, SymPolySpec};
use crate::error::Result;
use crate::report::{Check, Outcome};
use crate::weyl::combinations;

use super::SuiteParams;

const COORDS: &str = "Poisson brackets of the coordinate functions";
const SUMS: &str = "brackets generating the power sums of y";
const LIMITS: &str = "commutative limit of the minuscule generators";

/// Highest power `n` in the bracket with `Σ y_j^n`.
const MAX_POWER: u32 = 3;

struct Coords {
    ctx: Ctx,
    spec: ClassicalSpec,
    /// `x_i = u_i`.
    x: Vec<DiffOp>,
    /// `y_i = (w_i - ħ)^l u_i^{-1}`.
    y: Vec<DiffOp>,
    w: Vec<DiffOp>,
}

impl Coords {
    fn new(n: usize, l: usize) -> Result<Coords> {
        let ctx = VarContext::new(n, l)?;
        let spec = ClassicalSpec::standard(&ctx);
        let h = MultiPoly::hbar(&ctx);
        let x = (1..=n).map(|i| DiffOp::u(&ctx, i, 1)).collect();
        let y = (1..=n)
            .map(|i| DiffOp::poly(MultiPoly::w(&ctx, i).sub(&h).pow(l as u32)).mul(&DiffOp::u(&ctx, i, -1)))
            .collect();
        let w = (1..=n).map(|i| DiffOp::w(&ctx, i)).collect();
        Ok(Coords { ctx, spec, x, y, w })
    }

    fn n(&self) -> usize {
        self.ctx.n()
    }

    fn sum(&self, f: impl Fn(usize) -> DiffOp) -> DiffOp {
        let parts: Vec<DiffOp> = (0..self.n()).map(f).collect();
        DiffOp::sum(&self.ctx, &parts)
    }

    fn bracket(&self, a: &DiffOp, b: &DiffOp) -> Result<DiffOp> {
        classical_bracket(a, b, &self.spec)
    }

    /// The classical function represented by a product of quantum coordinates.
    fn limit(&self, a: &DiffOp) -> Result<DiffOp> {
        classical_limit(a, &self.spec)
    }

    fn elementary(&self, gens: &[DiffOp], k: usize) -> DiffOp {
        let parts: Vec<DiffOp> = combinations(self.n(), k)
            .iter()
            .map(|set| DiffOp::product(&self.ctx, set.iter().map(|&i| &gens[i - 1])))
            .collect();
        DiffOp::sum(&self.ctx, &parts)
    }
}

type Body = Box<dyn Fn(&Coords) -> Result<Outcome> + Send + Sync>;

pub fn poisson(p: &SuiteParams) -> Result<Vec<Check>> {
    let c = Arc::new(Coords::new(p.n, p.l)?);
    let n = p.n;
    let l = p.l;
    let mut v = Vec::new();
    let mut push = |id: String, anchor: &'static str, body: Body| {
        let shared = c.clone();
        v.push(Check::new(id, anchor, move || body(&shared)));
    };

    for i in 1..=n {
        for j in i + 1..=n {
            push(
                format!("{{w_{i}, w_{j}}} = 0"),
                COORDS,
                Box::new(move |c| Ok(Outcome::zero_op(&c.bracket(&c.w[i - 1], &c.w[j - 1])?))),
            );
        }
    }
    for i in 1..=n {
        for j in 1..=n {
            push(
                format!("{{w_{i}, x_{j}}} and {{w_{i}, y_{j}}}"),
                COORDS,
                Box::new(move |c| {
                    let (wi, xj, yj) = (&c.w[i - 1], &c.x[j - 1], &c.y[j - 1]);
                    let (ex, ey) = if i == j {
                        (c.limit(&xj.neg())?, c.limit(yj)?)
                    } else {
                        (DiffOp::zero(&c.ctx), DiffOp::zero(&c.ctx))
                    };
                    Ok(Outcome::all([
                        Outcome::ops(&c.bracket(wi, xj)?, &ex),
                        Outcome::ops(&c.bracket(wi, yj)?, &ey),
                    ]))
                }),
            );
            push(
                format!("{{x_{i}, y_{j}}}"),
                COORDS,
                Box::new(move |c| {
                    let expect = if i == j && l > 0 {
                        DiffOp::poly(MultiPoly::w(&c.ctx, i).pow(l as u32 - 1)).scale(&Q::int(l as i64))
                    } else {
                        DiffOp::zero(&c.ctx)
                    };
                    Ok(Outcome::ops(&c.bracket(&c.x[i - 1], &c.y[j - 1])?, &expect))
                }),
            );
        }
    }

    push(
        "{sum w_i^2, sum y_j} = 2 sum w_i y_i".into(),
        SUMS,
        Box::new(|c| {
            let lhs = c.bracket(&c.sum(|i| c.w[i].pow(2)), &c.sum(|j| c.y[j].clone()))?;
            let rhs = c.limit(&c.sum(|i| c.w[i].mul(&c.y[i])))?.scale(&Q::int(2));
            Ok(Outcome::ops(&lhs, &rhs))
        }),
    );
    for k in 1..=MAX_POWER {
        push(
            format!("{{sum w_i y_i, sum y_j^{k}}} = {k} sum y_i^{}", k + 1),
            SUMS,
            Box::new(move |c| {
                let wy = c.sum(|i| c.w[i].mul(&c.y[i]));
                let lhs = c.bracket(&wy, &c.sum(|j| c.y[j].pow(k)))?;
                let rhs = c.limit(&c.sum(|i| c.y[i].pow(k + 1)))?.scale(&Q::int(k as i64));
                Ok(Outcome::ops(&lhs, &rhs))
            }),
        );
    }

    for k in 1..=n {
        push(
            format!("F_{k}[1] -> e_{k}(y) and E_{k}[1] -> e_{k}(x)"),
            LIMITS,
            Box::new(move |c| {
                let one = SymPolySpec::one(&c.ctx, k);
                let f = c.limit(&f_op(&c.ctx, k, &one, &ParamMode::symbolic(l))?)?;
                let e = c.limit(&e_op(&c.ctx, k, &one)?)?;
                Ok(Outcome::all([
                    Outcome::ops(&f, &c.limit(&c.elementary(&c.y, k))?),
                    Outcome::ops(&e, &c.limit(&c.elementary(&c.x, k))?),
                ]))
            }),
        );
    }
    Ok(v)
}
