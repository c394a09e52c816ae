//! Expression parsing for the text encodings of scalars.
//!
//! The grammar is a small superset of what [`Display`](std::fmt::Display)
//! emits for rationals, Gaussian rationals, surd extensions, polynomials and
//! rational functions, so every printed value parses back to an equal value.
//! Supported syntax: integers, parameter names, `i`, `sqrt(...)`, unary sign,
//! `+ - * /`, integer exponents with `^`, parentheses, and at most one
//! top-level `|` separating numerator and denominator.

use std::collections::BTreeMap;
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::scalar::gauss::GaussRational;
use crate::scalar::ratfun::RatFun;
use crate::scalar::rational::Rational;
use crate::scalar::surd::{surd_arith, BinOp, SurdExt};
use crate::scalar::value::Scalar;

#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Num(Rational),
    Imag,
    Var(String),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i64),
    Sqrt(Box<Expr>),
}

impl Expr {
    /// Lower to a rational function. `sqrt` is only admitted on rational
    /// constants (the radicand is carried formally); a square root of an
    /// expression containing parameters has no home in this representation.
    pub fn to_ratfun(&self) -> Result<RatFun> {
        match self {
            Expr::Num(r) => Ok(RatFun::from_rational(r.clone())),
            Expr::Imag => Ok(RatFun::from_surd(SurdExt::from_gauss(GaussRational::i()))),
            Expr::Var(name) => Ok(RatFun::var(name)),
            Expr::Neg(e) => Ok(-&e.to_ratfun()?),
            Expr::Add(x, y) => Ok(&x.to_ratfun()? + &y.to_ratfun()?),
            Expr::Sub(x, y) => Ok(&x.to_ratfun()? - &y.to_ratfun()?),
            Expr::Mul(x, y) => Ok(&x.to_ratfun()? * &y.to_ratfun()?),
            Expr::Div(x, y) => x.to_ratfun()?.checked_div(&y.to_ratfun()?),
            Expr::Pow(e, k) => e.to_ratfun()?.pow(*k),
            Expr::Sqrt(e) => {
                let inner = e.to_ratfun()?;
                let c = inner.as_constant().ok_or_else(|| {
                    Error::Invalid(format!(
                        "square root of a parameter-dependent expression: sqrt({inner})"
                    ))
                })?;
                Ok(RatFun::from_surd(sqrt_surd(&c)?))
            }
        }
    }

    /// Evaluate with exact bindings for every parameter. Square roots
    /// collapse when the (bound) radicand is a perfect square and stay
    /// formal otherwise.
    pub fn eval_exact(&self, bindings: &BTreeMap<String, SurdExt>) -> Result<SurdExt> {
        match self {
            Expr::Num(r) => Ok(SurdExt::from_rational(r.clone())),
            Expr::Imag => Ok(SurdExt::from_gauss(GaussRational::i())),
            Expr::Var(name) => bindings
                .get(name)
                .cloned()
                .ok_or_else(|| Error::UnboundParameter(name.clone())),
            Expr::Neg(e) => Ok(-&e.eval_exact(bindings)?),
            Expr::Add(x, y) => {
                surd_arith(&x.eval_exact(bindings)?, &y.eval_exact(bindings)?, BinOp::Add)
            }
            Expr::Sub(x, y) => {
                surd_arith(&x.eval_exact(bindings)?, &y.eval_exact(bindings)?, BinOp::Sub)
            }
            Expr::Mul(x, y) => {
                surd_arith(&x.eval_exact(bindings)?, &y.eval_exact(bindings)?, BinOp::Mul)
            }
            Expr::Div(x, y) => {
                surd_arith(&x.eval_exact(bindings)?, &y.eval_exact(bindings)?, BinOp::Div)
            }
            Expr::Pow(e, k) => {
                let base = e.eval_exact(bindings)?;
                let base = if *k < 0 { base.inv()? } else { base };
                let mut acc = SurdExt::one();
                for _ in 0..k.unsigned_abs() {
                    acc = surd_arith(&acc, &base, BinOp::Mul)?;
                }
                Ok(acc)
            }
            Expr::Sqrt(e) => sqrt_surd(&e.eval_exact(bindings)?),
        }
    }

    /// Evaluate in complex doubles; `sqrt` takes the principal branch.
    pub fn eval_numeric(&self, bindings: &BTreeMap<String, Complex64>) -> Result<Complex64> {
        match self {
            Expr::Num(r) => Ok(Complex64::new(r.to_f64(), 0.0)),
            Expr::Imag => Ok(Complex64::new(0.0, 1.0)),
            Expr::Var(name) => bindings
                .get(name)
                .copied()
                .ok_or_else(|| Error::UnboundParameter(name.clone())),
            Expr::Neg(e) => Ok(-e.eval_numeric(bindings)?),
            Expr::Add(x, y) => Ok(x.eval_numeric(bindings)? + y.eval_numeric(bindings)?),
            Expr::Sub(x, y) => Ok(x.eval_numeric(bindings)? - y.eval_numeric(bindings)?),
            Expr::Mul(x, y) => Ok(x.eval_numeric(bindings)? * y.eval_numeric(bindings)?),
            Expr::Div(x, y) => {
                let d = y.eval_numeric(bindings)?;
                if d.norm() == 0.0 {
                    return Err(Error::DivisionByZero);
                }
                Ok(x.eval_numeric(bindings)? / d)
            }
            Expr::Pow(e, k) => Ok(e.eval_numeric(bindings)?.powi(*k as i32)),
            Expr::Sqrt(e) => {
                let mut z = e.eval_numeric(bindings)?;
                if z.im == 0.0 {
                    // Clear a signed zero so negative reals land on the
                    // upper side of the branch cut, matching the exact
                    // backend's sqrt(-x) = i*sqrt(x).
                    z.im = 0.0;
                }
                Ok(z.sqrt())
            }
        }
    }

    pub fn variables(&self) -> Vec<String> {
        let mut out = Vec::new();
        self.collect_vars(&mut out);
        out.sort();
        out.dedup();
        out
    }

    fn collect_vars(&self, out: &mut Vec<String>) {
        match self {
            Expr::Num(_) | Expr::Imag => {}
            Expr::Var(name) => out.push(name.clone()),
            Expr::Neg(e) | Expr::Pow(e, _) | Expr::Sqrt(e) => e.collect_vars(out),
            Expr::Add(x, y) | Expr::Sub(x, y) | Expr::Mul(x, y) | Expr::Div(x, y) => {
                x.collect_vars(out);
                y.collect_vars(out);
            }
        }
    }
}

/// Square root of an exact constant. The argument must be a plain rational;
/// the result is `sqrt(numer*denom)/denom`, canonicalized so perfect-square
/// factors leave the radical. Negative arguments pick up a factor of `i`.
fn sqrt_surd(c: &SurdExt) -> Result<SurdExt> {
    let g = c
        .as_gauss()
        .ok_or_else(|| Error::Invalid(format!("nested radical: sqrt({c})")))?;
    let r = g
        .as_rational()
        .ok_or_else(|| Error::Invalid(format!("square root of a complex value: sqrt({g})")))?;
    if r.is_zero() {
        return Ok(SurdExt::zero());
    }
    let n = r.numer() * r.denom();
    let mag = u64::try_from(n.magnitude().clone())
        .map_err(|_| Error::Invalid(format!("radicand out of range: sqrt({r})")))?;
    let coeff = Rational::from_bigint(r.denom().clone()).inv()?;
    let coeff = if r.is_negative() {
        GaussRational::new(Rational::zero(), coeff)
    } else {
        GaussRational::from_rational(coeff)
    };
    Ok(SurdExt::new(GaussRational::zero(), coeff, mag))
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Bar,
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let mut toks = Vec::new();
    let bytes = s.as_bytes();
    let mut pos = 0;
    while pos < bytes.len() {
        let c = bytes[pos] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => pos += 1,
            '+' => {
                toks.push(Tok::Plus);
                pos += 1;
            }
            '-' => {
                toks.push(Tok::Minus);
                pos += 1;
            }
            '*' => {
                toks.push(Tok::Star);
                pos += 1;
            }
            '/' => {
                toks.push(Tok::Slash);
                pos += 1;
            }
            '^' => {
                toks.push(Tok::Caret);
                pos += 1;
            }
            '(' => {
                toks.push(Tok::LParen);
                pos += 1;
            }
            ')' => {
                toks.push(Tok::RParen);
                pos += 1;
            }
            '|' => {
                toks.push(Tok::Bar);
                pos += 1;
            }
            '0'..='9' => {
                let start = pos;
                while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                    pos += 1;
                }
                let text = &s[start..pos];
                let n = BigInt::from_str(text)
                    .map_err(|_| Error::Parse(format!("bad integer literal {text:?}")))?;
                toks.push(Tok::Int(n));
            }
            'a'..='z' | 'A'..='Z' | '_' => {
                let start = pos;
                while pos < bytes.len()
                    && (bytes[pos].is_ascii_alphanumeric() || bytes[pos] == b'_')
                {
                    pos += 1;
                }
                toks.push(Tok::Ident(s[start..pos].to_string()));
            }
            other => {
                return Err(Error::Parse(format!(
                    "unexpected character {other:?} at byte {pos}"
                )))
            }
        }
    }
    Ok(toks)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, want: Tok) -> Result<()> {
        match self.bump() {
            Some(t) if t == want => Ok(()),
            Some(t) => Err(Error::Parse(format!("expected {want:?}, found {t:?}"))),
            None => Err(Error::Parse(format!("expected {want:?}, found end of input"))),
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    let rhs = self.term()?;
                    lhs = Expr::Add(Box::new(lhs), Box::new(rhs));
                }
                Some(Tok::Minus) => {
                    self.bump();
                    let rhs = self.term()?;
                    lhs = Expr::Sub(Box::new(lhs), Box::new(rhs));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.bump();
                    let rhs = self.unary()?;
                    lhs = Expr::Mul(Box::new(lhs), Box::new(rhs));
                }
                Some(Tok::Slash) => {
                    self.bump();
                    let rhs = self.unary()?;
                    lhs = Expr::Div(Box::new(lhs), Box::new(rhs));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn unary(&mut self) -> Result<Expr> {
        match self.peek() {
            Some(Tok::Minus) => {
                self.bump();
                Ok(Expr::Neg(Box::new(self.unary()?)))
            }
            Some(Tok::Plus) => {
                self.bump();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if self.peek() == Some(&Tok::Caret) {
            self.bump();
            let neg = if self.peek() == Some(&Tok::Minus) {
                self.bump();
                true
            } else {
                false
            };
            match self.bump() {
                Some(Tok::Int(n)) => {
                    let k = i64::try_from(&n)
                        .map_err(|_| Error::Parse(format!("exponent out of range: {n}")))?;
                    Ok(Expr::Pow(Box::new(base), if neg { -k } else { k }))
                }
                other => Err(Error::Parse(format!(
                    "expected integer exponent after '^', found {other:?}"
                ))),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Expr> {
        match self.bump() {
            Some(Tok::Int(n)) => Ok(Expr::Num(Rational::from_bigint(n))),
            Some(Tok::Ident(name)) if name == "i" => Ok(Expr::Imag),
            Some(Tok::Ident(name)) if name == "sqrt" => {
                self.expect(Tok::LParen)?;
                let inner = self.expr()?;
                self.expect(Tok::RParen)?;
                Ok(Expr::Sqrt(Box::new(inner)))
            }
            Some(Tok::Ident(name)) => Ok(Expr::Var(name)),
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                self.expect(Tok::RParen)?;
                Ok(inner)
            }
            Some(t) => Err(Error::Parse(format!("unexpected token {t:?}"))),
            None => Err(Error::Parse("unexpected end of input".into())),
        }
    }
}

/// Parse a single expression (no `|`).
pub fn parse_expr(s: &str) -> Result<Expr> {
    let mut p = Parser {
        toks: tokenize(s)?,
        pos: 0,
    };
    let e = p.expr()?;
    match p.peek() {
        None => Ok(e),
        Some(t) => Err(Error::Parse(format!("trailing input starting at {t:?}"))),
    }
}

/// Parse `num` or `num | den` into a rational function.
pub fn parse_ratfun(s: &str) -> Result<RatFun> {
    let mut p = Parser {
        toks: tokenize(s)?,
        pos: 0,
    };
    let num = p.expr()?;
    let den = if p.peek() == Some(&Tok::Bar) {
        p.bump();
        Some(p.expr()?)
    } else {
        None
    };
    if let Some(t) = p.peek() {
        return Err(Error::Parse(format!("trailing input starting at {t:?}")));
    }
    let num = num.to_ratfun()?;
    match den {
        None => Ok(num),
        Some(d) => num.checked_div(&d.to_ratfun()?),
    }
}

/// Parse into the exact scalar backend.
pub fn parse_scalar(s: &str) -> Result<Scalar> {
    Ok(Scalar::Exact(parse_ratfun(s)?))
}

/// Parse an expression that must evaluate to an exact constant.
pub fn parse_surd(s: &str) -> Result<SurdExt> {
    parse_expr(s)?.eval_exact(&BTreeMap::new())
}

/// Parse an expression that must evaluate to a plain rational constant.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let v = parse_surd(s)?;
    v.as_gauss()
        .and_then(|g| g.as_rational())
        .cloned()
        .ok_or_else(|| Error::Parse(format!("expected a rational value, got {v}")))
}
