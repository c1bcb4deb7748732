//! The symmetric group `S_N` acting on indices, exponent tuples and rational functions.
//!
//! Composition is right-to-left: `(στ)(i) = σ(τ(i))`.

use std::fmt;

use crate::algebra::RatFunc;
use crate::error::{Error, Result};

/// Largest `N` accepted by [`enumerate`].
pub const ENUMERATE_BOUND: usize = 6;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    /// `img[i] = σ(i + 1) - 1`.
    img: Vec<u8>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PermKind {
    Identity,
    /// `s_i = (i, i+1)`.
    Simple(usize),
    Transposition(usize, usize),
    /// `i -> i + 1 (mod N)`.
    Cycle,
    /// One-based image table.
    Explicit(Vec<usize>),
}

/// Builds a named permutation of `{1..n}`.
pub fn make(n: usize, kind: PermKind) -> Result<Permutation> {
    let range = |i: usize| {
        if i == 0 || i > n {
            Err(Error::IndexOutOfRange(format!("{i} not in 1..={n}")))
        } else {
            Ok(())
        }
    };
    match kind {
        PermKind::Identity => Ok(Permutation::identity(n)),
        PermKind::Simple(i) => {
            range(i)?;
            range(i + 1)?;
            Ok(Permutation::transposition(n, i, i + 1))
        }
        PermKind::Transposition(i, j) => {
            range(i)?;
            range(j)?;
            if i == j {
                return Err(Error::InvalidArgument(format!("transposition ({i} {j}) needs distinct indices")));
            }
            Ok(Permutation::transposition(n, i, j))
        }
        PermKind::Cycle => Ok(Permutation::cycle(n)),
        PermKind::Explicit(table) => Permutation::from_table(&table),
    }
}

impl Permutation {
    pub fn identity(n: usize) -> Permutation {
        Permutation { img: (0..n as u8).collect() }
    }

    /// Panics on out-of-range indices; [`make`] is the checked entry point.
    pub fn transposition(n: usize, i: usize, j: usize) -> Permutation {
        let mut p = Permutation::identity(n);
        p.img.swap(i - 1, j - 1);
        p
    }

    pub fn simple(n: usize, i: usize) -> Permutation {
        Permutation::transposition(n, i, i + 1)
    }

    pub fn cycle(n: usize) -> Permutation {
        Permutation { img: (0..n).map(|i| ((i + 1) % n) as u8).collect() }
    }

    pub fn from_table(table: &[usize]) -> Result<Permutation> {
        let n = table.len();
        let mut seen = vec![false; n];
        for &v in table {
            if v == 0 || v > n || seen[v - 1] {
                return Err(Error::InvalidArgument(format!("{table:?} is not a permutation of 1..={n}")));
            }
            seen[v - 1] = true;
        }
        Ok(Permutation { img: table.iter().map(|&v| (v - 1) as u8).collect() })
    }

    pub fn n(&self) -> usize {
        self.img.len()
    }

    /// `σ(i)` for one-based `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.img[i - 1] as usize + 1
    }

    pub fn table(&self) -> Vec<usize> {
        self.img.iter().map(|&v| v as usize + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.img.iter().enumerate().all(|(i, &v)| i == v as usize)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation { img: other.img.iter().map(|&v| self.img[v as usize]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut img = vec![0u8; self.n()];
        for (i, &v) in self.img.iter().enumerate() {
            img[v as usize] = i as u8;
        }
        Permutation { img }
    }

    /// `(σλ)_i = λ_{σ^{-1}(i)}`.
    pub fn act_on_exponents(&self, lambda: &[i32]) -> Vec<i32> {
        let mut out = vec![0; lambda.len()];
        for (i, &v) in self.img.iter().enumerate() {
            out[v as usize] = lambda[i];
        }
        out
    }

    /// Relabels `w_i` as `w_{σ(i)}`.
    pub fn act_on_ratfunc(&self, f: &RatFunc) -> RatFunc {
        if self.is_identity() {
            return f.clone();
        }
        f.permute_w(&self.table())
    }

    /// Disjoint cycles of length at least two, each starting at its smallest element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        for start in 0..self.n() {
            if seen[start] {
                continue;
            }
            let mut cyc = vec![start + 1];
            seen[start] = true;
            let mut j = self.img[start] as usize;
            while j != start {
                seen[j] = true;
                cyc.push(j + 1);
                j = self.img[j] as usize;
            }
            if cyc.len() > 1 {
                out.push(cyc);
            }
        }
        out
    }
}

/// All `n!` permutations in lexicographic order of their image tables.
pub fn enumerate(n: usize) -> Result<Vec<Permutation>> {
    if n > ENUMERATE_BOUND {
        return Err(Error::BoundExceeded(format!("enumerating S_{n} (bound {ENUMERATE_BOUND})")));
    }
    let mut out = Vec::new();
    let mut cur: Vec<usize> = Vec::with_capacity(n);
    fn rec(n: usize, cur: &mut Vec<usize>, out: &mut Vec<Permutation>) {
        if cur.len() == n {
            out.push(Permutation { img: cur.iter().map(|&v| v as u8).collect() });
            return;
        }
        for v in 0..n {
            if !cur.contains(&v) {
                cur.push(v);
                rec(n, cur, out);
                cur.pop();
            }
        }
    }
    rec(n, &mut cur, &mut out);
    Ok(out)
}

/// All `k`-element subsets of `{1..n}` in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..=n {
            if n - v + 1 < k - cur.len() {
                break;
            }
            cur.push(v);
            rec(v + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(1, n, k, &mut cur, &mut out);
    out
}

/// A reduced word `[i_1, .., i_r]` with `σ = s_{i_1} ⋯ s_{i_r}`.
pub fn reduced_word(sigma: &Permutation) -> Vec<usize> {
    // Bubble sort the one-line notation; each adjacent swap at position i is a right multiplication by s_i.
    let mut table = sigma.table();
    let mut word = Vec::new();
    let n = table.len();
    loop {
        let mut swapped = false;
        for i in 0..n.saturating_sub(1) {
            if table[i] > table[i + 1] {
                table.swap(i, i + 1);
                word.push(i + 1);
                swapped = true;
            }
        }
        if !swapped {
            break;
        }
    }
    word.reverse();
    word
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "id");
        }
        for c in cycles {
            let parts: Vec<String> = c.iter().map(|v| v.to_string()).collect();
            write!(f, "({})", parts.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{MultiPoly, VarContext};

    #[test]
    fn named_permutations() {
        assert_eq!(make(2, PermKind::Simple(1)).unwrap().table(), vec![2, 1]);
        let t = make(3, PermKind::Transposition(1, 3)).unwrap();
        assert!(t.compose(&t).is_identity());
        assert_eq!(make(3, PermKind::Cycle).unwrap().table(), vec![2, 3, 1]);
        assert!(make(2, PermKind::Simple(2)).is_err());
    }

    #[test]
    fn composition_is_right_to_left() {
        let s1 = Permutation::simple(3, 1);
        let s2 = Permutation::simple(3, 2);
        // (s1 s2)(3) = s1(s2(3)) = s1(2) = 1
        assert_eq!(s1.compose(&s2).apply(3), 1);
    }

    #[test]
    fn enumeration_sizes() {
        assert_eq!(enumerate(1).unwrap().len(), 1);
        assert_eq!(enumerate(3).unwrap().len(), 6);
        assert!(enumerate(7).is_err());
    }

    #[test]
    fn action_on_functions() {
        let ctx = VarContext::new(2, 0).unwrap();
        let f = RatFunc::from_poly(MultiPoly::w(&ctx, 1).sub(&MultiPoly::w(&ctx, 2)));
        let s = Permutation::simple(2, 1);
        assert_eq!(s.act_on_ratfunc(&f), f.neg());
        let h = MultiPoly::hbar(&ctx);
        let g = RatFunc::quotient(MultiPoly::t(&ctx), &[MultiPoly::w(&ctx, 1).sub(&MultiPoly::w(&ctx, 2)).sub(&h)]).unwrap();
        let expect = RatFunc::quotient(MultiPoly::t(&ctx), &[MultiPoly::w(&ctx, 2).sub(&MultiPoly::w(&ctx, 1)).sub(&h)]).unwrap();
        assert_eq!(s.act_on_ratfunc(&g), expect);
    }

    #[test]
    fn subsets_and_words() {
        assert_eq!(combinations(3, 2), vec![vec![1, 2], vec![1, 3], vec![2, 3]]);
        assert_eq!(combinations(2, 0), vec![Vec::<usize>::new()]);
        for sigma in enumerate(4).unwrap() {
            let w = reduced_word(&sigma);
            let prod = w.iter().fold(Permutation::identity(4), |acc, &i| acc.compose(&Permutation::simple(4, i)));
            assert_eq!(prod, sigma);
        }
    }

    #[test]
    fn cycle_notation() {
        assert_eq!(Permutation::cycle(3).to_string(), "(1 2 3)");
        assert_eq!(Permutation::identity(2).to_string(), "id");
    }
}
