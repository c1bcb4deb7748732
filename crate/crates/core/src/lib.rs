//! Exact symbolic computation with difference-reflection operators: polynomial
//! representations of the degenerate double affine Hecke algebra of `gl_N`, Dunkl
//! operators, and shifted Yangian realizations.

pub mod algebra;
pub mod cli;
pub mod cyclotomic;
pub mod diffop;
pub mod dl_rep;
pub mod dsl;
pub mod dunkl;
pub mod error;
pub mod report;
pub mod suites;
pub mod weyl;
pub mod yangian;

pub use error::{Error, Result};
