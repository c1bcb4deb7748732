//! A small expression language over the operator catalogue.
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := unary ('*' unary)*
//! unary   := '-' unary | power
//! power   := primary ('^' INT)?
//! primary := NUM | NUM '/' NUM | '(' expr ')' | SYMBOL
//!          | ATOM '[' INT (',' INT)? ']' | ATOM '[' INT ';' expr ']'
//!          | 'comm' '(' expr ',' expr ')' | 'Res' '(' expr ')' | 'apply' '(' expr ';' expr ')'
//! ```
//!
//! Inside `E[n; f]`, `F[n; f]` and `B[n; arg]` the argument is evaluated in the same
//! context; `w[1]..w[n]` are the formal variables of `f`.

use std::cell::OnceCell;
use std::fmt;

use num_bigint::BigInt;

use crate::algebra::{Ctx, MultiPoly, RatFunc, VarContext, Q};
use crate::diffop::DiffOp;
use crate::dl_rep::{e_op, f_op, power_sum_op, Catalogue, ParamMode, SymPolySpec};
use crate::error::{Error, Result};
use crate::yangian::{bbar, Omega, ShiftConvention, YangianGens};

/// Named generators written as `name[..]`, or bare for `pi` and `piinv`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Atom {
    /// `E[n; f]`.
    E(usize, Box<Expr>),
    /// `F[n; f]`.
    F(usize, Box<Expr>),
    X(usize),
    Xinv(usize),
    /// Oblomkov's `Y_i`; needs `l >= 1`.
    Y(usize),
    /// Suzuki's rational Cherednik `y_i`.
    RatY(usize),
    W(usize),
    U(usize),
    Uinv(usize),
    /// `s_i`, with `s_0` the affine reflection.
    S(usize),
    /// The transposition `s_{ij}`.
    Sij(usize, usize),
    Pi,
    PiInv,
    /// Yangian Cartan generator `D_{0,m}`.
    D0(usize),
    YangE(usize),
    YangF(usize),
    /// Power sum `p_k(w)` as a multiplication operator.
    P(usize),
    /// Normalized Bernoulli polynomial `B̄_n(arg)`.
    B(usize, Box<Expr>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    /// Non-negative rational literal; negation is a separate node.
    Num(Q),
    /// A parameter such as `ħ`, `t` or `z_1`.
    Sym(String),
    Atom(Atom),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    Pow(Box<Expr>, u32),
    Comm(Box<Expr>, Box<Expr>),
    Res(Box<Expr>),
    Apply(Box<Expr>, Box<Expr>),
}

// Binding strength used by the renderer; the parser encodes the same table.
const P_SUM: u8 = 1;
const P_MUL: u8 = 2;
const P_NEG: u8 = 3;
const P_POW: u8 = 4;
const P_ATOM: u8 = 5;

impl Expr {
    fn prec(&self) -> u8 {
        match self {
            Expr::Add(..) | Expr::Sub(..) => P_SUM,
            Expr::Mul(..) => P_MUL,
            Expr::Neg(_) => P_NEG,
            Expr::Pow(..) => P_POW,
            _ => P_ATOM,
        }
    }

    fn child(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        if self.prec() < min {
            write!(f, "({self})")
        } else {
            write!(f, "{self}")
        }
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::E(n, g) => write!(f, "E[{n}; {g}]"),
            Atom::F(n, g) => write!(f, "F[{n}; {g}]"),
            Atom::X(i) => write!(f, "X[{i}]"),
            Atom::Xinv(i) => write!(f, "Xinv[{i}]"),
            Atom::Y(i) => write!(f, "Y[{i}]"),
            Atom::RatY(i) => write!(f, "y[{i}]"),
            Atom::W(i) => write!(f, "w[{i}]"),
            Atom::U(i) => write!(f, "u[{i}]"),
            Atom::Uinv(i) => write!(f, "uinv[{i}]"),
            Atom::S(i) => write!(f, "s[{i}]"),
            Atom::Sij(i, j) => write!(f, "s[{i},{j}]"),
            Atom::Pi => write!(f, "pi"),
            Atom::PiInv => write!(f, "piinv"),
            Atom::D0(m) => write!(f, "D0[{m}]"),
            Atom::YangE(n) => write!(f, "e[{n}]"),
            Atom::YangF(n) => write!(f, "f[{n}]"),
            Atom::P(k) => write!(f, "p[{k}]"),
            Atom::B(n, a) => write!(f, "B[{n}; {a}]"),
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Num(q) => write!(f, "{q}"),
            Expr::Sym(s) => write!(f, "{s}"),
            Expr::Atom(a) => write!(f, "{a}"),
            Expr::Add(a, b) | Expr::Sub(a, b) => {
                a.child(f, P_SUM)?;
                f.write_str(if matches!(self, Expr::Add(..)) { " + " } else { " - " })?;
                b.child(f, P_MUL)
            }
            Expr::Mul(a, b) => {
                a.child(f, P_MUL)?;
                f.write_str(" * ")?;
                b.child(f, P_NEG)
            }
            Expr::Neg(a) => {
                f.write_str("-")?;
                a.child(f, P_NEG)
            }
            Expr::Pow(a, e) => {
                a.child(f, P_ATOM)?;
                write!(f, "^{e}")
            }
            Expr::Comm(a, b) => write!(f, "comm({a}, {b})"),
            Expr::Res(a) => write!(f, "Res({a})"),
            Expr::Apply(a, p) => write!(f, "apply({a}; {p})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Punct(char),
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Num(n) => write!(f, "number {n}"),
            Tok::Ident(s) => write!(f, "{s:?}"),
            Tok::Punct(c) => write!(f, "'{c}'"),
            Tok::End => write!(f, "end of input"),
        }
    }
}

#[derive(Clone, Copy, Debug)]
struct Pos {
    line: usize,
    col: usize,
}

fn syntax(pos: Pos, message: impl Into<String>) -> Error {
    Error::Syntax { line: pos.line, col: pos.col, message: message.into() }
}

fn lex(text: &str) -> Result<Vec<(Tok, Pos)>> {
    let mut out = Vec::new();
    let mut chars = text.chars().peekable();
    let (mut line, mut col) = (1, 1);
    while let Some(&c) = chars.peek() {
        let pos = Pos { line, col };
        if c == '\n' {
            chars.next();
            line += 1;
            col = 1;
            continue;
        }
        if c.is_whitespace() {
            chars.next();
            col += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let mut s = String::new();
            while let Some(&d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                s.push(d);
                chars.next();
                col += 1;
            }
            out.push((Tok::Num(s.parse().expect("ascii digits")), pos));
        } else if c.is_alphabetic() || c == '_' {
            let mut s = String::new();
            while let Some(&d) = chars.peek().filter(|d| d.is_alphanumeric() || **d == '_') {
                s.push(d);
                chars.next();
                col += 1;
            }
            out.push((Tok::Ident(s), pos));
        } else if "+-*^()[],;/".contains(c) {
            chars.next();
            col += 1;
            out.push((Tok::Punct(c), pos));
        } else if c == '−' {
            // Typographic minus, as printed in reports.
            chars.next();
            col += 1;
            out.push((Tok::Punct('-'), pos));
        } else {
            return Err(syntax(pos, format!("unexpected character {c:?}")));
        }
    }
    out.push((Tok::End, Pos { line, col }));
    Ok(out)
}

/// How many integer indices an atom takes, and whether a `; expr` argument follows.
enum Shape {
    Bare,
    Index,
    OneOrTwo,
    WithArg,
}

fn shape(name: &str) -> Option<Shape> {
    Some(match name {
        "pi" | "piinv" => Shape::Bare,
        "X" | "Xinv" | "Y" | "y" | "w" | "u" | "uinv" | "D0" | "e" | "f" | "p" => Shape::Index,
        "s" => Shape::OneOrTwo,
        "E" | "F" | "B" => Shape::WithArg,
        _ => return None,
    })
}

struct Parser {
    toks: Vec<(Tok, Pos)>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> Pos {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> (Tok, Pos) {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn eat(&mut self, c: char) -> bool {
        if *self.peek() == Tok::Punct(c) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(syntax(self.pos(), format!("expected '{c}', found {}", self.peek())))
        }
    }

    fn int(&mut self) -> Result<usize> {
        match self.bump() {
            (Tok::Num(n), pos) => usize::try_from(n).map_err(|_| syntax(pos, "index too large")),
            (t, pos) => Err(syntax(pos, format!("expected an integer, found {t}"))),
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = Expr::Add(Box::new(acc), Box::new(self.term()?));
            } else if self.eat('-') {
                acc = Expr::Sub(Box::new(acc), Box::new(self.term()?));
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut acc = self.unary()?;
        while self.eat('*') {
            acc = Expr::Mul(Box::new(acc), Box::new(self.unary()?));
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.eat('-') {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        let base = self.primary()?;
        if self.eat('^') {
            let pos = self.pos();
            let e = self.int()?;
            let e = u32::try_from(e).map_err(|_| syntax(pos, "exponent too large"))?;
            return Ok(Expr::Pow(Box::new(base), e));
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<Expr> {
        let (tok, pos) = self.bump();
        match tok {
            Tok::Num(n) => {
                if self.eat('/') {
                    let dpos = self.pos();
                    match self.bump().0 {
                        Tok::Num(d) if d != BigInt::from(0) => {
                            Ok(Expr::Num(Q::from_big(num_rational::BigRational::new(n, d))))
                        }
                        _ => Err(syntax(dpos, "expected a non-zero denominator")),
                    }
                } else {
                    Ok(Expr::Num(Q::from_bigint(n)))
                }
            }
            Tok::Punct('(') => {
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Tok::Ident(name) => self.named(name, pos),
            t => Err(syntax(pos, format!("expected an expression, found {t}"))),
        }
    }

    fn named(&mut self, name: String, pos: Pos) -> Result<Expr> {
        match name.as_str() {
            "comm" | "Res" | "apply" => {
                self.expect('(')?;
                let a = self.expr()?;
                let node = match name.as_str() {
                    "comm" => {
                        self.expect(',')?;
                        Expr::Comm(Box::new(a), Box::new(self.expr()?))
                    }
                    "apply" => {
                        self.expect(';')?;
                        Expr::Apply(Box::new(a), Box::new(self.expr()?))
                    }
                    _ => Expr::Res(Box::new(a)),
                };
                self.expect(')')?;
                return Ok(node);
            }
            "hbar" => return Ok(Expr::Sym("ħ".into())),
            _ => {}
        }
        let Some(shape) = shape(&name) else {
            if matches!(self.peek(), Tok::Punct('[') | Tok::Punct('(')) {
                return Err(syntax(pos, format!("unknown atom {name:?}")));
            }
            return Ok(Expr::Sym(name));
        };
        if let Shape::Bare = shape {
            return Ok(Expr::Atom(if name == "pi" { Atom::Pi } else { Atom::PiInv }));
        }
        self.expect('[')?;
        let i = self.int()?;
        let atom = match shape {
            Shape::OneOrTwo if self.eat(',') => Atom::Sij(i, self.int()?),
            Shape::WithArg => {
                self.expect(';')?;
                let arg = Box::new(self.expr()?);
                match name.as_str() {
                    "E" => Atom::E(i, arg),
                    "F" => Atom::F(i, arg),
                    _ => Atom::B(i, arg),
                }
            }
            _ => match name.as_str() {
                "X" => Atom::X(i),
                "Xinv" => Atom::Xinv(i),
                "Y" => Atom::Y(i),
                "y" => Atom::RatY(i),
                "w" => Atom::W(i),
                "u" => Atom::U(i),
                "uinv" => Atom::Uinv(i),
                "D0" => Atom::D0(i),
                "e" => Atom::YangE(i),
                "f" => Atom::YangF(i),
                "p" => Atom::P(i),
                _ => Atom::S(i),
            },
        };
        if *self.peek() != Tok::Punct(']') {
            return Err(syntax(self.pos(), format!("wrong number of arguments for {name}: expected ']', found {}", self.peek())));
        }
        self.bump();
        Ok(Expr::Atom(atom))
    }
}

pub fn parse(text: &str) -> Result<Expr> {
    let mut p = Parser { toks: lex(text)?, at: 0 };
    let e = p.expr()?;
    if *p.peek() != Tok::End {
        return Err(syntax(p.pos(), format!("unexpected {}", p.peek())));
    }
    Ok(e)
}

/// How `z_1..z_l` enter `F[n; f]` and `Y[i]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ZChoice {
    Symbolic,
    Zero,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EvalOptions {
    pub n: usize,
    pub l: usize,
    pub z: ZChoice,
    pub shift: ShiftConvention,
    /// Truncation order of the Yangian generating series.
    pub order: usize,
}

impl Default for EvalOptions {
    fn default() -> Self {
        EvalOptions { n: 2, l: 1, z: ZChoice::Symbolic, shift: ShiftConvention::Barred, order: 8 }
    }
}

/// Evaluates expressions in one context, building the catalogue and the Yangian
/// realization on first use.
pub struct Evaluator {
    ctx: Ctx,
    opts: EvalOptions,
    catalogue: OnceCell<Catalogue>,
    yangian: OnceCell<YangianGens>,
}

impl Evaluator {
    pub fn new(opts: EvalOptions) -> Result<Evaluator> {
        Ok(Evaluator { ctx: VarContext::new(opts.n, opts.l)?, opts, catalogue: OnceCell::new(), yangian: OnceCell::new() })
    }

    pub fn ctx(&self) -> &Ctx {
        &self.ctx
    }

    fn mode(&self) -> ParamMode {
        match self.opts.z {
            ZChoice::Symbolic => ParamMode::symbolic(self.opts.l),
            ZChoice::Zero => ParamMode::zero(self.opts.l),
        }
    }

    fn catalogue(&self) -> Result<&Catalogue> {
        if let Some(c) = self.catalogue.get() {
            return Ok(c);
        }
        let c = Catalogue::new(&self.ctx)?;
        Ok(self.catalogue.get_or_init(|| c))
    }

    fn yangian(&self) -> Result<&YangianGens> {
        if let Some(g) = self.yangian.get() {
            return Ok(g);
        }
        let g = YangianGens::realize_in(&self.ctx, self.opts.shift, Omega::Rank, self.opts.order)?;
        Ok(self.yangian.get_or_init(|| g))
    }

    fn var_index(&self, i: usize, what: &str) -> Result<usize> {
        if i == 0 || i > self.ctx.n() {
            return Err(Error::IndexOutOfRange(format!("{what}[{i}] needs 1 <= i <= {}", self.ctx.n())));
        }
        Ok(i)
    }

    /// Evaluates to a normalized operator; scalars come back as multiplication operators.
    pub fn eval(&self, e: &Expr) -> Result<DiffOp> {
        let ctx = &self.ctx;
        Ok(match e {
            Expr::Num(q) => DiffOp::scalar(RatFunc::constant(ctx, q.clone())),
            Expr::Sym(name) => {
                let idx = ctx
                    .lookup(name)
                    .filter(|&i| !ctx.is_w(i))
                    .ok_or_else(|| Error::InvalidArgument(format!("unknown parameter {name:?}")))?;
                DiffOp::poly(MultiPoly::var(ctx, idx))
            }
            Expr::Atom(a) => self.atom(a)?,
            Expr::Add(a, b) => self.eval(a)?.add(&self.eval(b)?),
            Expr::Sub(a, b) => self.eval(a)?.sub(&self.eval(b)?),
            Expr::Mul(a, b) => self.eval(a)?.mul(&self.eval(b)?),
            Expr::Neg(a) => self.eval(a)?.neg(),
            Expr::Pow(a, k) => self.eval(a)?.pow(*k),
            Expr::Comm(a, b) => self.eval(a)?.commutator(&self.eval(b)?),
            Expr::Res(a) => self.eval(a)?.res(),
            Expr::Apply(a, p) => DiffOp::scalar(self.eval(a)?.apply(&self.poly(p)?)),
        })
    }

    /// Evaluates an expression that must be a polynomial multiplication operator.
    pub fn poly(&self, e: &Expr) -> Result<MultiPoly> {
        let op = self.eval(e)?;
        op.as_scalar()
            .and_then(|g| g.as_poly().cloned())
            .ok_or_else(|| Error::InvalidArgument(format!("{e} is not a polynomial")))
    }

    fn atom(&self, a: &Atom) -> Result<DiffOp> {
        let ctx = &self.ctx;
        Ok(match a {
            Atom::E(n, g) => e_op(ctx, *n, &SymPolySpec::new(self.poly(g)?, *n)?)?,
            Atom::F(n, g) => f_op(ctx, *n, &SymPolySpec::new(self.poly(g)?, *n)?, &self.mode())?,
            Atom::X(i) => self.catalogue()?.x(*i)?.clone(),
            Atom::Xinv(i) => self.catalogue()?.x_inv(*i)?.clone(),
            Atom::Y(i) => self.catalogue()?.oblomkov_y(*i, &self.mode())?,
            Atom::RatY(i) => self.catalogue()?.suzuki_y(*i)?,
            Atom::W(i) => DiffOp::w(ctx, self.var_index(*i, "w")?),
            Atom::U(i) => DiffOp::u(ctx, self.var_index(*i, "u")?, 1),
            Atom::Uinv(i) => DiffOp::u(ctx, self.var_index(*i, "uinv")?, -1),
            Atom::S(i) => self.catalogue()?.affine_s(*i)?.clone(),
            Atom::Sij(i, j) => self.catalogue()?.s_ij(*i, *j)?,
            Atom::Pi => self.catalogue()?.pi().clone(),
            Atom::PiInv => self.catalogue()?.pi_inv().clone(),
            Atom::D0(m) => self.yangian()?.d(small(*m)?)?,
            Atom::YangE(n) => self.yangian()?.e(small(*n)?)?,
            Atom::YangF(n) => {
                let l = self.opts.l;
                if *n < l {
                    return Err(Error::IndexOutOfRange(format!("f[{n}] is only realized for n >= l = {l}")));
                }
                self.yangian()?.f(small(n - l)?)?
            }
            Atom::P(k) => power_sum_op(ctx, small(*k)?),
            Atom::B(n, arg) => DiffOp::poly(bbar(small(*n)?, &self.poly(arg)?)?),
        })
    }
}

fn small(i: usize) -> Result<u32> {
    u32::try_from(i).map_err(|_| Error::BoundExceeded(format!("index {i}")))
}

/// Parses and evaluates in one step.
pub fn eval_str(text: &str, opts: EvalOptions) -> Result<DiffOp> {
    Evaluator::new(opts)?.eval(&parse(text)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn opts(n: usize, l: usize) -> EvalOptions {
        EvalOptions { n, l, ..EvalOptions::default() }
    }

    #[test]
    fn parses_named_forms() {
        let e = parse("Res(X[1]) + Res(X[2])").unwrap();
        assert!(matches!(e, Expr::Add(ref a, ref b) if matches!(**a, Expr::Res(_)) && matches!(**b, Expr::Res(_))));
        assert!(matches!(parse("comm(e[1], f[0])").unwrap(), Expr::Comm(..)));
        assert_eq!(parse("F[1; 1]").unwrap(), Expr::Atom(Atom::F(1, Box::new(Expr::Num(Q::ONE)))));
        assert_eq!(parse("hbar").unwrap(), Expr::Sym("ħ".into()));
    }

    #[test]
    fn precedence_and_rendering() {
        let e = parse("-a * b + c^2 - (d - e2)").unwrap();
        assert_eq!(e.to_string(), "-a * b + c^2 - (d - e2)");
        let e = parse("-(a * b)^3").unwrap();
        assert_eq!(e, Expr::Neg(Box::new(Expr::Pow(Box::new(parse("a * b").unwrap()), 3))));
        assert_eq!(parse(&e.to_string()).unwrap(), e);
        assert_eq!(parse("3/4").unwrap(), Expr::Num(Q::new(3, 4)));
    }

    #[test]
    fn errors_carry_positions() {
        let err = parse("w[1] +\n  Q[2]").unwrap_err();
        assert_eq!(err, Error::Syntax { line: 2, col: 3, message: "unknown atom \"Q\"".into() });
        assert!(matches!(parse("X[1, 2]"), Err(Error::Syntax { line: 1, col: 4, .. })));
        assert!(matches!(parse("comm(w[1])"), Err(Error::Syntax { .. })));
        assert!(matches!(parse("w[1] w[2]"), Err(Error::Syntax { col: 6, .. })));
        assert!(matches!(parse("1 % 2"), Err(Error::Syntax { col: 3, .. })));
    }

    #[test]
    fn evaluates_catalogue_identities() {
        assert!(eval_str("Res(X[1]) + Res(X[2]) - E[1;1]", opts(2, 0)).unwrap().is_zero());
        assert!(eval_str("comm(w[1], w[2])", opts(2, 1)).unwrap().is_zero());
        assert_eq!(eval_str("comm(w[1], u[1])", opts(1, 0)).unwrap().to_string(), "-ħ * u_1");
        let h = eval_str("comm(e[1], f[0])", opts(1, 0)).unwrap();
        assert_eq!(h, eval_str("ħ", opts(1, 0)).unwrap());
        assert!(eval_str("Res(Y[1]) + Res(Y[2]) - F[1; 1]", opts(2, 1)).unwrap().is_zero());
        assert!(eval_str("apply(p[2]; w[1] + w[2]) - apply(w[1]^2 + w[2]^2; w[1] + w[2])", opts(2, 1))
            .unwrap()
            .is_zero());
    }

    #[test]
    fn evaluation_errors() {
        assert!(matches!(eval_str("Y[1]", opts(2, 0)), Err(Error::InvalidArgument(_))));
        assert!(matches!(eval_str("w[3]", opts(2, 0)), Err(Error::IndexOutOfRange(_))));
        assert!(matches!(eval_str("q", opts(2, 0)), Err(Error::InvalidArgument(_))));
        assert!(matches!(eval_str("E[1; u[1]]", opts(2, 0)), Err(Error::InvalidArgument(_))));
        assert!(matches!(eval_str("f[0]", opts(1, 1)), Err(Error::IndexOutOfRange(_))));
    }
}
