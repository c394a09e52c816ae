//! Single-radicand quadratic extensions Q(i, sqrt(d)).
//!
//! An element is `base + surd * sqrt(radicand)`. The radicand is a small
//! positive integer; perfect-square factors are pulled into the coefficient
//! at construction, so `sqrt(8)` is stored as `2*sqrt(2)` and `sqrt(4)`
//! collapses to the pure element `2`. Elements with `surd = 0` carry
//! `radicand = 0` and embed plain Gaussian rationals; they are compatible
//! with every extension. Combining two different nonzero radicands is a
//! caller error: the checked entry point [`surd_arith`] reports it, the
//! operator impls treat it as a violated invariant and panic.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::scalar::gauss::GaussRational;
use crate::scalar::rational::Rational;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SurdExt {
    pub base: GaussRational,
    pub surd: GaussRational,
    pub radicand: u64,
}

/// Binary operations exposed through the checked arithmetic entry points.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl SurdExt {
    /// Canonicalizing constructor: extracts square factors of the radicand
    /// and normalizes the zero-surd form.
    pub fn new(base: GaussRational, surd: GaussRational, radicand: u64) -> Self {
        if surd.is_zero() || radicand == 0 {
            return SurdExt {
                base,
                surd: GaussRational::zero(),
                radicand: 0,
            };
        }
        let (square, free) = split_square(radicand);
        let surd = &surd * &GaussRational::from_int(square as i64);
        if free == 1 {
            SurdExt {
                base: &base + &surd,
                surd: GaussRational::zero(),
                radicand: 0,
            }
        } else {
            SurdExt {
                base,
                surd,
                radicand: free,
            }
        }
    }

    pub fn from_gauss(g: GaussRational) -> Self {
        SurdExt::new(g, GaussRational::zero(), 0)
    }

    pub fn from_rational(r: Rational) -> Self {
        SurdExt::from_gauss(GaussRational::from_rational(r))
    }

    pub fn from_int(n: i64) -> Self {
        SurdExt::from_gauss(GaussRational::from_int(n))
    }

    pub fn zero() -> Self {
        SurdExt::from_int(0)
    }

    pub fn one() -> Self {
        SurdExt::from_int(1)
    }

    /// sqrt(d) itself, canonicalized.
    pub fn sqrt(d: u64) -> Self {
        SurdExt::new(GaussRational::zero(), GaussRational::one(), d)
    }

    pub fn is_zero(&self) -> bool {
        self.base.is_zero() && self.surd.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.base.is_one() && self.surd.is_zero()
    }

    pub fn is_pure(&self) -> bool {
        self.surd.is_zero()
    }

    pub fn as_gauss(&self) -> Option<&GaussRational> {
        self.is_pure().then_some(&self.base)
    }

    /// The common radicand for a pair, or the mixing error.
    pub fn joint_radicand(&self, rhs: &Self) -> Result<u64> {
        match (self.radicand, rhs.radicand) {
            (0, d) | (d, 0) => Ok(d),
            (d1, d2) if d1 == d2 => Ok(d1),
            (d1, d2) => Err(Error::MixedRadicands(d1, d2)),
        }
    }

    fn expect_joint(&self, rhs: &Self) -> u64 {
        self.joint_radicand(rhs)
            .expect("mixed radicands inside a single-radicand computation")
    }

    /// Galois conjugate sqrt(d) -> -sqrt(d).
    pub fn conj_surd(&self) -> Self {
        SurdExt {
            base: self.base.clone(),
            surd: -&self.surd,
            radicand: self.radicand,
        }
    }

    /// Field norm down to Q(i): (u + v sqrt(d))(u - v sqrt(d)) = u^2 - d v^2.
    pub fn norm_to_gauss(&self) -> GaussRational {
        let d = GaussRational::from_int(self.radicand as i64);
        &(&self.base * &self.base) - &(&d * &(&self.surd * &self.surd))
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.norm_to_gauss();
        if n.is_zero() {
            // Cannot happen for squarefree d > 1 (the extension is a field)
            // but guards radicands kept non-squarefree by future edits.
            return Err(Error::DivisionByZero);
        }
        let ninv = n.inv()?;
        let c = self.conj_surd();
        Ok(SurdExt::new(
            &c.base * &ninv,
            &c.surd * &ninv,
            self.radicand,
        ))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        self.joint_radicand(rhs)?;
        Ok(self * &rhs.inv()?)
    }

    pub fn to_complex(&self) -> Complex64 {
        self.base.to_complex() + self.surd.to_complex() * (self.radicand as f64).sqrt()
    }
}

/// Checked arithmetic: validates radicand compatibility (and nonzero
/// divisor) before computing. This is the boundary API; once values are
/// inside a computation with one fixed extension the operator impls apply.
pub fn surd_arith(lhs: &SurdExt, rhs: &SurdExt, op: BinOp) -> Result<SurdExt> {
    lhs.joint_radicand(rhs)?;
    match op {
        BinOp::Add => Ok(lhs + rhs),
        BinOp::Sub => Ok(lhs - rhs),
        BinOp::Mul => Ok(lhs * rhs),
        BinOp::Div => lhs.checked_div(rhs),
    }
}

/// d = square * free with free squarefree, by trial division. Radicands stay
/// tiny (2 in practice), so no factoring sophistication is warranted.
fn split_square(d: u64) -> (u64, u64) {
    let mut square = 1;
    let mut free = d;
    let mut f = 2;
    while f * f <= free {
        while free % (f * f) == 0 {
            free /= f * f;
            square *= f;
        }
        f += 1;
    }
    (square, free)
}

impl Add for &SurdExt {
    type Output = SurdExt;
    fn add(self, rhs: &SurdExt) -> SurdExt {
        let d = self.expect_joint(rhs);
        SurdExt::new(&self.base + &rhs.base, &self.surd + &rhs.surd, d)
    }
}

impl Sub for &SurdExt {
    type Output = SurdExt;
    fn sub(self, rhs: &SurdExt) -> SurdExt {
        let d = self.expect_joint(rhs);
        SurdExt::new(&self.base - &rhs.base, &self.surd - &rhs.surd, d)
    }
}

impl Mul for &SurdExt {
    type Output = SurdExt;
    fn mul(self, rhs: &SurdExt) -> SurdExt {
        let d = self.expect_joint(rhs);
        let dd = GaussRational::from_int(d as i64);
        // (u1 + v1 s)(u2 + v2 s) = u1 u2 + d v1 v2 + (u1 v2 + v1 u2) s
        SurdExt::new(
            &(&self.base * &rhs.base) + &(&dd * &(&self.surd * &rhs.surd)),
            &(&self.base * &rhs.surd) + &(&self.surd * &rhs.base),
            d,
        )
    }
}

impl Neg for &SurdExt {
    type Output = SurdExt;
    fn neg(self) -> SurdExt {
        SurdExt {
            base: -&self.base,
            surd: -&self.surd,
            radicand: self.radicand,
        }
    }
}

impl fmt::Display for SurdExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.surd.is_zero() {
            return write!(f, "{}", self.base);
        }
        let root = format!("sqrt({})", self.radicand);
        let surd_str = if self.surd.is_one() {
            root
        } else if (-&self.surd).is_one() {
            format!("-{root}")
        } else if self.surd.is_rational() {
            format!("{}*{root}", self.surd)
        } else {
            format!("({})*{root}", self.surd)
        };
        if self.base.is_zero() {
            write!(f, "{surd_str}")
        } else if surd_str.starts_with('-') {
            write!(f, "{}-{}", self.base, &surd_str[1..])
        } else {
            write!(f, "{}+{}", self.base, surd_str)
        }
    }
}

impl fmt::Debug for SurdExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
