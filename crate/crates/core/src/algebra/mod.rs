//! Exact polynomial and rational-function arithmetic over a named symbol context.

pub mod context;
pub mod poly;
pub mod ratfunc;
pub mod rational;

pub use context::{Ctx, VarContext, MAX_SYMBOLS};
pub use poly::{poly_arith, Monomial, MultiPoly, PolyOp};
pub use ratfunc::{rat_arith, LinearForm, RatFunc, RatOp};
pub use rational::{binomial, Q};
