//! Identity checks and the machine-readable report they produce.

use std::fmt::Display;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::RatFunc;
use crate::diffop::DiffOp;
use crate::error::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// Result of evaluating one identity; `Fail` carries the rendered residual.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail(String),
}

impl Outcome {
    pub fn holds(ok: bool, why: impl FnOnce() -> String) -> Outcome {
        if ok {
            Outcome::Pass
        } else {
            Outcome::Fail(why())
        }
    }

    /// Compares operators; the residual is `lhs − rhs`.
    pub fn ops(lhs: &DiffOp, rhs: &DiffOp) -> Outcome {
        Outcome::holds(lhs == rhs, || lhs.sub(rhs).to_string())
    }

    pub fn zero_op(op: &DiffOp) -> Outcome {
        Outcome::holds(op.is_zero(), || op.to_string())
    }

    pub fn rats(lhs: &RatFunc, rhs: &RatFunc) -> Outcome {
        Outcome::holds(lhs == rhs, || lhs.sub(rhs).to_string())
    }

    pub fn values<T: PartialEq + Display>(lhs: &T, rhs: &T) -> Outcome {
        Outcome::holds(lhs == rhs, || format!("{lhs} != {rhs}"))
    }

    /// First failure wins.
    pub fn all(parts: impl IntoIterator<Item = Outcome>) -> Outcome {
        for p in parts {
            if let Outcome::Fail(r) = p {
                return Outcome::Fail(r);
            }
        }
        Outcome::Pass
    }

    pub fn is_pass(&self) -> bool {
        matches!(self, Outcome::Pass)
    }
}

type CheckFn = Box<dyn Fn() -> Result<Outcome> + Send + Sync>;

/// A named identity to evaluate; construction is cheap, evaluation may not be.
pub struct Check {
    pub id: String,
    pub anchor: String,
    run: CheckFn,
}

impl Check {
    pub fn new(
        id: impl Into<String>,
        anchor: impl Into<String>,
        run: impl Fn() -> Result<Outcome> + Send + Sync + 'static,
    ) -> Check {
        Check { id: id.into(), anchor: anchor.into(), run: Box::new(run) }
    }

    /// Evaluates the identity; engine errors count as failures.
    pub fn evaluate(&self) -> Outcome {
        match (self.run)() {
            Ok(o) => o,
            Err(e) => Outcome::Fail(format!("error: {e}")),
        }
    }
}

impl std::fmt::Debug for Check {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Check({})", self.id)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ItemReport {
    pub id: String,
    pub anchor: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual: Option<String>,
    pub millis: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteContext {
    #[serde(rename = "N")]
    pub n: usize,
    pub l: usize,
    pub order: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub context: SuiteContext,
    pub items: Vec<ItemReport>,
    pub summary: Summary,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.summary.failed == 0
    }

    /// Human-readable listing, one line per item plus a summary line.
    pub fn render_text(&self) -> String {
        let mut out = format!(
            "suite {} (N={}, l={}, order={})\n",
            self.suite, self.context.n, self.context.l, self.context.order
        );
        for it in &self.items {
            let tag = match it.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
            };
            out.push_str(&format!("  {tag} {} [{}] {}ms\n", it.id, it.anchor, it.millis));
            if let Some(r) = &it.residual {
                out.push_str(&format!("       residual: {r}\n"));
            }
        }
        out.push_str(&format!(
            "  {} passed, {} failed, {} total\n",
            self.summary.passed, self.summary.failed, self.summary.total
        ));
        out
    }
}

/// Evaluates checks on the current rayon pool, preserving their order.
pub fn run_checks(suite: &str, context: SuiteContext, checks: &[Check], timings: bool) -> SuiteReport {
    let items: Vec<ItemReport> = checks
        .par_iter()
        .map(|c| {
            let start = Instant::now();
            let outcome = c.evaluate();
            let millis = if timings { start.elapsed().as_millis() as u64 } else { 0 };
            let (status, residual) = match outcome {
                Outcome::Pass => (Status::Pass, None),
                Outcome::Fail(r) => (Status::Fail, Some(r)),
            };
            ItemReport { id: c.id.clone(), anchor: c.anchor.clone(), status, residual, millis }
        })
        .collect();
    let passed = items.iter().filter(|i| i.status == Status::Pass).count();
    let summary = Summary { total: items.len(), passed, failed: items.len() - passed };
    SuiteReport { suite: suite.to_string(), context, items, summary }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn failures_and_errors_are_reported() {
        let checks = vec![
            Check::new("ok", "trivial", || Ok(Outcome::Pass)),
            Check::new("bad", "trivial", || Ok(Outcome::Fail("1".into()))),
            Check::new("err", "trivial", || Err(crate::Error::DivisionByZero)),
        ];
        let ctx = SuiteContext { n: 1, l: 0, order: 0 };
        let r = run_checks("demo", ctx, &checks, false);
        assert_eq!(r.summary, Summary { total: 3, passed: 1, failed: 2 });
        assert_eq!(r.items[2].residual.as_deref(), Some("error: division by zero"));
        let json = serde_json::to_string(&r).unwrap();
        assert!(json.starts_with(r#"{"suite":"demo","context":{"N":1,"l":0,"order":0},"items":[{"id":"ok""#));
        assert!(!json.contains(r#""id":"ok","anchor":"trivial","status":"pass","residual""#));
    }
}
