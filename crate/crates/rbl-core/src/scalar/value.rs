//! The scalar type threaded through every algebraic structure.
//!
//! Two backends share one enum: exact rational functions (the default, in
//! which every paper value is representable) and complex doubles (used only
//! where a basis change involves the square root of a free parameter).
//! Arithmetic never coerces across the tag; mixing is a reported error so a
//! numeric value cannot silently contaminate an exact pipeline.

use std::collections::BTreeMap;
use std::fmt;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::scalar::gauss::GaussRational;
use crate::scalar::ratfun::RatFun;
use crate::scalar::rational::Rational;
use crate::scalar::surd::SurdExt;
use crate::scalar::vars;

#[derive(Clone, PartialEq)]
pub enum Scalar {
    Exact(RatFun),
    Numeric(Complex64),
}

/// Zero-test policy. Exact data is decided syntactically; numeric data
/// compares magnitudes against a caller-supplied tolerance. There is no
/// default tolerance anywhere in the library.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum ZeroTest {
    Exact,
    Tol(f64),
}

impl ZeroTest {
    pub fn is_zero(&self, s: &Scalar) -> Result<bool> {
        match (self, s) {
            (ZeroTest::Exact, Scalar::Exact(f)) => Ok(f.is_identically_zero()),
            (ZeroTest::Exact, Scalar::Numeric(_)) => Err(Error::NumericTag),
            (ZeroTest::Tol(t), Scalar::Numeric(z)) => Ok(z.norm() <= *t),
            (ZeroTest::Tol(t), Scalar::Exact(f)) => {
                // An exact value can always be checked numerically.
                Ok(f.is_identically_zero()
                    || f.eval_numeric(&BTreeMap::new()).map(|z| z.norm() <= *t)?)
            }
        }
    }

    pub fn eq(&self, x: &Scalar, y: &Scalar) -> Result<bool> {
        self.is_zero(&x.sub(y)?)
    }
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::Exact(RatFun::zero())
    }

    pub fn one() -> Self {
        Scalar::Exact(RatFun::one())
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::Exact(RatFun::from_int(n))
    }

    pub fn from_rational(r: Rational) -> Self {
        Scalar::Exact(RatFun::from_rational(r))
    }

    pub fn rational(p: i64, q: i64) -> Self {
        Scalar::from_rational(Rational::new(p, q))
    }

    pub fn from_surd(s: SurdExt) -> Self {
        Scalar::Exact(RatFun::from_surd(s))
    }

    pub fn var(name: &str) -> Self {
        Scalar::Exact(RatFun::var(name))
    }

    pub fn numeric(z: Complex64) -> Self {
        Scalar::Numeric(z)
    }

    /// Zero carrying the same backend tag as self.
    pub fn zero_like(&self) -> Self {
        match self {
            Scalar::Exact(_) => Scalar::zero(),
            Scalar::Numeric(_) => Scalar::Numeric(Complex64::new(0.0, 0.0)),
        }
    }

    /// One carrying the same backend tag as self.
    pub fn one_like(&self) -> Self {
        match self {
            Scalar::Exact(_) => Scalar::one(),
            Scalar::Numeric(_) => Scalar::Numeric(Complex64::new(1.0, 0.0)),
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Scalar::Exact(_))
    }

    pub fn as_exact(&self) -> Result<&RatFun> {
        match self {
            Scalar::Exact(f) => Ok(f),
            Scalar::Numeric(_) => Err(Error::NumericTag),
        }
    }

    /// Structural zero: exact zero function, or numeric exactly 0.0.
    /// Tolerance-aware tests go through [`ZeroTest`].
    pub fn is_structural_zero(&self) -> bool {
        match self {
            Scalar::Exact(f) => f.is_identically_zero(),
            Scalar::Numeric(z) => z.norm() == 0.0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Exact(f) => f.is_one(),
            Scalar::Numeric(z) => *z == Complex64::new(1.0, 0.0),
        }
    }

    fn pair<'a>(&'a self, rhs: &'a Scalar) -> Result<(&'a RatFun, &'a RatFun)> {
        match (self, rhs) {
            (Scalar::Exact(x), Scalar::Exact(y)) => Ok((x, y)),
            (Scalar::Numeric(_), Scalar::Numeric(_)) => unreachable!("handled by caller"),
            _ => Err(Error::TagMismatch),
        }
    }

    pub fn add(&self, rhs: &Scalar) -> Result<Scalar> {
        if let (Scalar::Numeric(x), Scalar::Numeric(y)) = (self, rhs) {
            return Ok(Scalar::Numeric(x + y));
        }
        let (x, y) = self.pair(rhs)?;
        Ok(Scalar::Exact(x + y))
    }

    pub fn sub(&self, rhs: &Scalar) -> Result<Scalar> {
        if let (Scalar::Numeric(x), Scalar::Numeric(y)) = (self, rhs) {
            return Ok(Scalar::Numeric(x - y));
        }
        let (x, y) = self.pair(rhs)?;
        Ok(Scalar::Exact(x - y))
    }

    pub fn mul(&self, rhs: &Scalar) -> Result<Scalar> {
        if let (Scalar::Numeric(x), Scalar::Numeric(y)) = (self, rhs) {
            return Ok(Scalar::Numeric(x * y));
        }
        let (x, y) = self.pair(rhs)?;
        Ok(Scalar::Exact(x * y))
    }

    pub fn div(&self, rhs: &Scalar) -> Result<Scalar> {
        if let (Scalar::Numeric(x), Scalar::Numeric(y)) = (self, rhs) {
            if y.norm() == 0.0 {
                return Err(Error::DivisionByZero);
            }
            return Ok(Scalar::Numeric(x / y));
        }
        let (x, y) = self.pair(rhs)?;
        Ok(Scalar::Exact(x.checked_div(y)?))
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Exact(f) => Scalar::Exact(-f),
            Scalar::Numeric(z) => Scalar::Numeric(-z),
        }
    }

    pub fn inv(&self) -> Result<Scalar> {
        Scalar::one().div(self)
    }

    /// Fused multiply-add, the inner-loop primitive of the matrix and
    /// tensor kernels: self + x*y.
    pub fn mul_add(&self, x: &Scalar, y: &Scalar) -> Result<Scalar> {
        self.add(&x.mul(y)?)
    }

    /// Lower an exact scalar to the numeric backend. A no-op on numerics.
    pub fn to_numeric(&self) -> Result<Scalar> {
        match self {
            Scalar::Numeric(z) => Ok(Scalar::Numeric(*z)),
            Scalar::Exact(f) => Ok(Scalar::Numeric(f.eval_numeric(&BTreeMap::new())?)),
        }
    }

    pub fn as_complex(&self) -> Result<Complex64> {
        match self.to_numeric()? {
            Scalar::Numeric(z) => Ok(z),
            Scalar::Exact(_) => unreachable!(),
        }
    }

    /// Evaluate free parameters. Exact bindings keep the exact tag; the
    /// numeric variant lowers everything to complex doubles.
    pub fn evaluate(&self, bindings: &Bindings) -> Result<Scalar> {
        match (self, bindings) {
            (Scalar::Numeric(z), _) => Ok(Scalar::Numeric(*z)),
            (Scalar::Exact(f), Bindings::Exact(map)) => {
                let by_id: BTreeMap<u32, SurdExt> = map
                    .iter()
                    .map(|(k, v)| (vars::var_id(k), v.clone()))
                    .collect();
                let needed: BTreeMap<u32, SurdExt> = f
                    .variables()
                    .into_iter()
                    .map(|v| {
                        by_id
                            .get(&v)
                            .cloned()
                            .map(|s| (v, s))
                            .ok_or_else(|| Error::UnboundParameter(vars::var_name(v)))
                    })
                    .collect::<Result<_>>()?;
                Ok(Scalar::Exact(RatFun::from_surd(f.eval_exact(&needed)?)))
            }
            (Scalar::Exact(f), Bindings::Numeric(map)) => {
                let by_id: BTreeMap<u32, Complex64> = map
                    .iter()
                    .map(|(k, v)| (vars::var_id(k), *v))
                    .collect();
                Ok(Scalar::Numeric(f.eval_numeric(&by_id)?))
            }
        }
    }
}

/// Parameter bindings by name. One map per backend keeps the "exact in,
/// exact out" rule visible in signatures.
#[derive(Clone, Debug)]
pub enum Bindings {
    Exact(BTreeMap<String, SurdExt>),
    Numeric(BTreeMap<String, Complex64>),
}

impl Bindings {
    pub fn exact_from<I: IntoIterator<Item = (&'static str, GaussRational)>>(iter: I) -> Self {
        Bindings::Exact(
            iter.into_iter()
                .map(|(k, v)| (k.to_string(), SurdExt::from_gauss(v)))
                .collect(),
        )
    }

    pub fn exact_rationals<I: IntoIterator<Item = (&'static str, Rational)>>(iter: I) -> Self {
        Bindings::Exact(
            iter.into_iter()
                .map(|(k, v)| (k.to_string(), SurdExt::from_rational(v)))
                .collect(),
        )
    }

    pub fn numeric_from<I: IntoIterator<Item = (&'static str, Complex64)>>(iter: I) -> Self {
        Bindings::Numeric(
            iter.into_iter()
                .map(|(k, v)| (k.to_string(), v))
                .collect(),
        )
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Exact(x) => write!(f, "{x}"),
            Scalar::Numeric(z) => {
                if z.im == 0.0 {
                    write!(f, "{}", z.re)
                } else if z.re == 0.0 {
                    write!(f, "{}*i", z.im)
                } else if z.im < 0.0 {
                    write!(f, "{}-{}*i", z.re, -z.im)
                } else {
                    write!(f, "{}+{}*i", z.re, z.im)
                }
            }
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tags_never_mix_silently() {
        let e = Scalar::one();
        let n = Scalar::numeric(Complex64::new(1.0, 0.0));
        assert_eq!(e.add(&n).unwrap_err(), Error::TagMismatch);
        assert_eq!(n.mul(&e).unwrap_err(), Error::TagMismatch);
    }

    #[test]
    fn zero_test_policies() {
        let tiny = Scalar::numeric(Complex64::new(1e-12, 0.0));
        assert!(ZeroTest::Tol(1e-9).is_zero(&tiny).unwrap());
        assert!(!ZeroTest::Tol(1e-15).is_zero(&tiny).unwrap());
        assert_eq!(ZeroTest::Exact.is_zero(&tiny).unwrap_err(), Error::NumericTag);
        assert!(ZeroTest::Exact.is_zero(&Scalar::zero()).unwrap());
    }

    #[test]
    fn evaluate_exact_binding_stays_exact() {
        let s = Scalar::var("a").mul(&Scalar::var("a")).unwrap();
        let bound = s
            .evaluate(&Bindings::exact_rationals([("a", Rational::new(3, 2))]))
            .unwrap();
        assert_eq!(bound, Scalar::rational(9, 4));
        assert!(bound.is_exact());
    }

    #[test]
    fn evaluate_numeric_binding_lowers() {
        let s = Scalar::var("a");
        let bound = s
            .evaluate(&Bindings::numeric_from([("a", Complex64::new(0.5, 0.0))]))
            .unwrap();
        assert_eq!(bound, Scalar::numeric(Complex64::new(0.5, 0.0)));
    }

    #[test]
    fn unbound_parameter_is_reported() {
        let s = Scalar::var("a");
        let err = s
            .evaluate(&Bindings::exact_rationals([("b", Rational::one())]))
            .unwrap_err();
        assert_eq!(err, Error::UnboundParameter("a".into()));
    }
}
