use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Hard cap on the number of symbols in one context; monomials are inline arrays.
pub const MAX_SYMBOLS: usize = 24;

/// Named symbols of a polynomial ring, in fixed order:
/// `ħ, t, z_1..z_l, c_1..c_{l-1}, extras.., w_1..w_N`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VarContext {
    n: usize,
    l: usize,
    names: Vec<String>,
    c_start: usize,
    c_len: usize,
    extra_start: usize,
    extras: Vec<String>,
    w_start: usize,
}

pub type Ctx = Arc<VarContext>;

pub struct ContextBuilder {
    n: usize,
    l: usize,
    with_c: bool,
    extras: Vec<String>,
}

impl ContextBuilder {
    /// Adds the cyclotomic parameters `c_1..c_{l-1}`.
    pub fn cyclotomic(mut self) -> Self {
        self.with_c = true;
        self
    }

    pub fn extra(mut self, name: &str) -> Self {
        self.extras.push(name.to_string());
        self
    }

    pub fn build(self) -> Result<Ctx> {
        if self.n == 0 {
            return Err(Error::InvalidArgument("N must be at least 1".into()));
        }
        let mut names = vec!["ħ".to_string(), "t".to_string()];
        for k in 1..=self.l {
            names.push(format!("z_{k}"));
        }
        let c_start = names.len();
        let c_len = if self.with_c { self.l.saturating_sub(1) } else { 0 };
        for m in 1..=c_len {
            names.push(format!("c_{m}"));
        }
        let extra_start = names.len();
        names.extend(self.extras.iter().cloned());
        let w_start = names.len();
        for i in 1..=self.n {
            names.push(format!("w_{i}"));
        }
        if names.len() > MAX_SYMBOLS {
            return Err(Error::BoundExceeded(format!(
                "{} symbols requested, at most {MAX_SYMBOLS} supported",
                names.len()
            )));
        }
        for (i, a) in names.iter().enumerate() {
            if names[..i].contains(a) {
                return Err(Error::InvalidArgument(format!("duplicate symbol name {a}")));
            }
        }
        Ok(Arc::new(VarContext {
            n: self.n,
            l: self.l,
            names,
            c_start,
            c_len,
            extra_start,
            extras: self.extras,
            w_start,
        }))
    }
}

impl VarContext {
    pub fn builder(n: usize, l: usize) -> ContextBuilder {
        ContextBuilder { n, l, with_c: false, extras: Vec::new() }
    }

    /// The plain context with `ħ, t, z_1..z_l, w_1..w_N`.
    pub fn new(n: usize, l: usize) -> Result<Ctx> {
        Self::builder(n, l).build()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, idx: usize) -> &str {
        &self.names[idx]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn hbar(&self) -> usize {
        0
    }

    pub fn t(&self) -> usize {
        1
    }

    /// Index of `z_k`, 1-based.
    pub fn z(&self, k: usize) -> usize {
        assert!(k >= 1 && k <= self.l, "z_{k} outside 1..={}", self.l);
        1 + k
    }

    /// Index of `c_m`, 1-based.
    pub fn c(&self, m: usize) -> Option<usize> {
        (m >= 1 && m <= self.c_len).then(|| self.c_start + m - 1)
    }

    /// Index of `w_i`, 1-based.
    pub fn w(&self, i: usize) -> usize {
        assert!(i >= 1 && i <= self.n, "w_{i} outside 1..={}", self.n);
        self.w_start + i - 1
    }

    pub fn w_start(&self) -> usize {
        self.w_start
    }

    pub fn is_w(&self, idx: usize) -> bool {
        idx >= self.w_start
    }

    pub fn extra(&self, name: &str) -> Option<usize> {
        self.extras.iter().position(|e| e == name).map(|p| self.extra_start + p)
    }

    pub fn extras(&self) -> &[String] {
        &self.extras
    }

    /// Symbol index by rendered name.
    pub fn lookup(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Number of leading symbols that are not `w` variables.
    pub fn param_count(&self) -> usize {
        self.w_start
    }

    /// A context with the same parameters but `n` variables.
    pub fn with_n(&self, n: usize) -> Result<Ctx> {
        let mut b = VarContext::builder(n, self.l);
        if self.c_len > 0 {
            b = b.cyclotomic();
        }
        for e in &self.extras {
            b = b.extra(e);
        }
        b.build()
    }
}

impl fmt::Debug for VarContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "VarContext[{}]", self.names.join(", "))
    }
}

pub(crate) fn same(a: &Ctx, b: &Ctx) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symbol_order() {
        let ctx = VarContext::builder(2, 3).cyclotomic().extra("a").extra("ω").build().unwrap();
        let names: Vec<&str> = ctx.names().iter().map(|s| s.as_str()).collect();
        assert_eq!(
            names,
            ["ħ", "t", "z_1", "z_2", "z_3", "c_1", "c_2", "a", "ω", "w_1", "w_2"]
        );
        assert_eq!(ctx.w(2), 10);
        assert_eq!(ctx.c(2), Some(6));
        assert_eq!(ctx.c(3), None);
    }

    #[test]
    fn rejects_degenerate() {
        assert!(VarContext::new(0, 0).is_err());
        assert!(VarContext::builder(1, 0).extra("t").build().is_err());
    }
}
