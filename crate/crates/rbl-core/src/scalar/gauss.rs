//! Gaussian rationals Q(i): the coefficient field needed once the
//! orthonormal-basis computations introduce the imaginary unit.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::scalar::rational::Rational;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GaussRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussRational { re, im }
    }

    pub fn zero() -> Self {
        GaussRational::new(Rational::zero(), Rational::zero())
    }

    pub fn one() -> Self {
        GaussRational::new(Rational::one(), Rational::zero())
    }

    pub fn i() -> Self {
        GaussRational::new(Rational::zero(), Rational::one())
    }

    pub fn from_int(n: i64) -> Self {
        GaussRational::new(Rational::from_int(n), Rational::zero())
    }

    pub fn from_rational(r: Rational) -> Self {
        GaussRational::new(r, Rational::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussRational::new(self.re.clone(), -&self.im)
    }

    /// |z|^2 = re^2 + im^2; zero only at z = 0, so Q(i) is a field.
    pub fn norm_sq(&self) -> Rational {
        &(&self.re * &self.re) + &(&self.im * &self.im)
    }

    pub fn inv(&self) -> Result<Self> {
        let n = self.norm_sq();
        if n.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let c = self.conj();
        Ok(GaussRational::new(
            c.re.checked_div(&n)?,
            c.im.checked_div(&n)?,
        ))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    pub fn to_complex(&self) -> Complex64 {
        Complex64::new(self.re.to_f64(), self.im.to_f64())
    }

    /// True rational content if the imaginary part vanishes.
    pub fn as_rational(&self) -> Option<&Rational> {
        self.im.is_zero().then_some(&self.re)
    }
}

impl fmt::Display for GaussRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", self.re);
        }
        let imag = if self.im.is_one() {
            "i".to_string()
        } else if (-&self.im).is_one() {
            "-i".to_string()
        } else {
            format!("{}*i", self.im)
        };
        if self.re.is_zero() {
            write!(f, "{imag}")
        } else if imag.starts_with('-') {
            write!(f, "{}-{}", self.re, &imag[1..])
        } else {
            write!(f, "{}+{}", self.re, imag)
        }
    }
}

impl fmt::Debug for GaussRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Add for &GaussRational {
    type Output = GaussRational;
    fn add(self, rhs: &GaussRational) -> GaussRational {
        GaussRational::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub for &GaussRational {
    type Output = GaussRational;
    fn sub(self, rhs: &GaussRational) -> GaussRational {
        GaussRational::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Mul for &GaussRational {
    type Output = GaussRational;
    fn mul(self, rhs: &GaussRational) -> GaussRational {
        GaussRational::new(
            &(&self.re * &rhs.re) - &(&self.im * &rhs.im),
            &(&self.re * &rhs.im) + &(&self.im * &rhs.re),
        )
    }
}

impl Neg for &GaussRational {
    type Output = GaussRational;
    fn neg(self) -> GaussRational {
        GaussRational::new(-&self.re, -&self.im)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(p: i64, q_: i64) -> Rational {
        Rational::new(p, q_)
    }

    #[test]
    fn i_squared_is_minus_one() {
        let i = GaussRational::i();
        assert_eq!(&i * &i, GaussRational::from_int(-1));
    }

    #[test]
    fn inverse_via_conjugate() {
        // (1+i)^{-1} = (1-i)/2
        let z = GaussRational::new(q(1, 1), q(1, 1));
        assert_eq!(
            z.inv().unwrap(),
            GaussRational::new(q(1, 2), q(-1, 2))
        );
        assert!(GaussRational::zero().inv().is_err());
    }

    #[test]
    fn display_covers_all_sign_shapes() {
        assert_eq!(GaussRational::new(q(1, 2), q(0, 1)).to_string(), "1/2");
        assert_eq!(GaussRational::new(q(0, 1), q(1, 1)).to_string(), "i");
        assert_eq!(GaussRational::new(q(0, 1), q(-3, 4)).to_string(), "-3/4*i");
        assert_eq!(GaussRational::new(q(1, 1), q(-1, 1)).to_string(), "1-i");
        assert_eq!(GaussRational::new(q(2, 1), q(5, 3)).to_string(), "2+5/3*i");
    }
}
