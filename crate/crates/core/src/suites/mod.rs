//! Registry of identity suites addressable by name.

use crate::error::{Error, Result};
use crate::report::{run_checks, Check, SuiteContext, SuiteReport};
use crate::yangian::ShiftConvention;

mod cherednik;
mod classical;
mod cyclotomic;
mod dunkl;
mod yangian;

/// Sizes shared by every suite.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SuiteParams {
    pub n: usize,
    pub l: usize,
    /// Truncation order `K` of generating series.
    pub order: usize,
    /// Degree bound `M` for polynomial arguments and generator indices.
    pub max_degree: usize,
    /// Spectral variables of the Yangian realization.
    pub shift: ShiftConvention,
}

impl Default for SuiteParams {
    fn default() -> Self {
        SuiteParams { n: 2, l: 1, order: 8, max_degree: 4, shift: ShiftConvention::Barred }
    }
}

impl SuiteParams {
    pub fn new(n: usize, l: usize) -> SuiteParams {
        SuiteParams { n, l, ..SuiteParams::default() }
    }

    pub fn context(&self) -> SuiteContext {
        SuiteContext { n: self.n, l: self.l, order: self.order }
    }
}

/// Suite names in the order `all` runs them.
pub const SUITES: &[&str] = &[
    "hgr1",
    "hgr2",
    "rat",
    "dunkl",
    "exchange",
    "reorder",
    "leading",
    "spherical",
    "powersum",
    "yangian",
    "tsy",
    "tau",
    "shifted",
    "cyclotomic",
    "poisson",
];

/// Hard limits keeping every suite within memory and symbol budgets.
pub const MAX_N: usize = 5;
pub const MAX_L: usize = 6;
pub const MAX_ORDER: usize = 12;
pub const MAX_DEGREE: usize = 8;

fn validate(p: &SuiteParams) -> Result<()> {
    if p.n == 0 || p.n > MAX_N {
        return Err(Error::BoundExceeded(format!("N = {} not in 1..={MAX_N}", p.n)));
    }
    if p.l > MAX_L {
        return Err(Error::BoundExceeded(format!("l = {} exceeds {MAX_L}", p.l)));
    }
    if p.order > MAX_ORDER {
        return Err(Error::BoundExceeded(format!("order {} exceeds {MAX_ORDER}", p.order)));
    }
    if p.max_degree > MAX_DEGREE {
        return Err(Error::BoundExceeded(format!("max degree {} exceeds {MAX_DEGREE}", p.max_degree)));
    }
    Ok(())
}

/// The checks making up one suite.
pub fn build(name: &str, p: &SuiteParams) -> Result<Vec<Check>> {
    validate(p)?;
    match name {
        "hgr1" => cherednik::hgr1(p),
        "hgr2" => cherednik::hgr2(p),
        "rat" => cherednik::rational(p),
        "exchange" => cherednik::exchange(p),
        "reorder" => cherednik::reorder(p),
        "leading" => cherednik::leading(p),
        "spherical" => cherednik::spherical(p),
        "powersum" => cherednik::powersum(p),
        "dunkl" => dunkl::suite(p),
        "yangian" => yangian::yangian(p),
        "tsy" => yangian::tsymbaliuk(p),
        "tau" => yangian::tau(p),
        "shifted" => yangian::shifted(p),
        "cyclotomic" => cyclotomic::suite(p),
        "poisson" => classical::poisson(p),
        other => Err(Error::InvalidArgument(format!("unknown suite {other:?}; expected one of {}", SUITES.join(", ")))),
    }
}

/// Parameters a suite actually runs with; the unframed Yangian suites ignore `l`.
pub fn effective_params(name: &str, p: &SuiteParams) -> SuiteParams {
    match name {
        "yangian" | "tau" => SuiteParams { l: 0, ..*p },
        _ => *p,
    }
}

/// Builds and evaluates one suite, or every suite for `"all"`.
pub fn run(name: &str, p: &SuiteParams, timings: bool) -> Result<Vec<SuiteReport>> {
    let names: Vec<&str> = if name == "all" { SUITES.to_vec() } else { vec![name] };
    let mut out = Vec::new();
    for s in names {
        // The framed realization has no content at l = 0.
        if name == "all" && s == "shifted" && p.l == 0 {
            continue;
        }
        let checks = build(s, p)?;
        out.push(run_checks(s, effective_params(s, p).context(), &checks, timings));
    }
    Ok(out)
}
