//! Arbitrary-precision rationals, the ground field of every exact computation.
//!
//! Thin wrapper around `num_rational::BigRational` so the rest of the crate
//! controls formatting ("p/q", "/q" dropped when q = 1) and parsing. The
//! backing type already keeps the canonical form we rely on: gcd-reduced,
//! denominator positive.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }

    /// p/q from machine integers. Panics if q = 0, like integer division.
    pub fn new(p: i64, q: i64) -> Self {
        assert!(q != 0, "rational with zero denominator");
        Rational(BigRational::new(BigInt::from(p), BigInt::from(q)))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Rational(BigRational::from_integer(n))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(&self.0 / &rhs.0))
    }

    pub fn inv(&self) -> Result<Self> {
        Rational::one().checked_div(self)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Rational::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Exact square root when both numerator and denominator are perfect
    /// squares; the nonnegative root is returned.
    pub fn sqrt_exact(&self) -> Result<Self> {
        if self.is_negative() {
            return Err(Error::NotPerfectSquare(self.to_string()));
        }
        let n = self.0.numer().sqrt();
        let d = self.0.denom().sqrt();
        if &(&n * &n) == self.0.numer() && &(&d * &d) == self.0.denom() {
            Ok(Rational(BigRational::new(n, d)))
        } else {
            Err(Error::NotPerfectSquare(self.to_string()))
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().expect("rational out of f64 range")
    }

    /// Reduce modulo an odd prime: p/q -> p * q^(-1) mod m, provided m does
    /// not divide q.
    pub fn mod_p(&self, m: u64) -> Result<u64> {
        let mb = BigInt::from(m);
        let num = ((self.0.numer() % &mb) + &mb) % &mb;
        let den = ((self.0.denom() % &mb) + &mb) % &mb;
        let num = num.to_u64().unwrap();
        let den = den.to_u64().unwrap();
        if den == 0 {
            return Err(Error::PoleAtBinding(format!(
                "denominator of {self} vanishes mod {m}"
            )));
        }
        Ok(num * crate::ff::inv_mod(den, m) % m)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

macro_rules! rational_binop {
    ($trait:ident, $method:ident, $op:tt) => {
        impl $trait for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational(&self.0 $op &rhs.0)
            }
        }
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0 $op rhs.0)
            }
        }
    };
}

rational_binop!(Add, add, +);
rational_binop!(Sub, sub, -);
rational_binop!(Mul, mul, *);

impl Div for &Rational {
    type Output = Rational;
    fn div(self, rhs: &Rational) -> Rational {
        assert!(!rhs.is_zero(), "exact division by zero");
        Rational(&self.0 / &rhs.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form_is_reduced_with_positive_denominator() {
        let r = Rational::new(-4, -6);
        assert_eq!(r.to_string(), "2/3");
        let r = Rational::new(4, -6);
        assert_eq!(r.to_string(), "-2/3");
    }

    #[test]
    fn integers_print_without_denominator() {
        assert_eq!(Rational::new(8, 4).to_string(), "2");
        assert_eq!(Rational::from_int(0).to_string(), "0");
    }

    #[test]
    fn division_by_zero_is_an_error() {
        let err = Rational::one().checked_div(&Rational::zero()).unwrap_err();
        assert_eq!(err, Error::DivisionByZero);
    }

    #[test]
    fn sqrt_exact_handles_squares_and_rejects_non_squares() {
        assert_eq!(Rational::new(9, 4).sqrt_exact().unwrap(), Rational::new(3, 2));
        assert!(Rational::from_int(2).sqrt_exact().is_err());
        assert!(Rational::from_int(-4).sqrt_exact().is_err());
    }

    #[test]
    fn mod_p_reduces_fractions() {
        // 1/2 mod 7 = 4 since 2*4 = 8 = 1 mod 7.
        assert_eq!(Rational::new(1, 2).mod_p(7).unwrap(), 4);
        // 1/27 has no image mod 3.
        assert!(Rational::new(1, 27).mod_p(3).is_err());
    }
}
