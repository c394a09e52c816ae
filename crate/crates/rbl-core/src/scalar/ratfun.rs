//! Rational functions: quotients of multivariate polynomials in canonical
//! form. Always normalized so that gcd(num, den) = 1 and the denominator is
//! monic under the registry's lex order; equality is therefore syntactic.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::scalar::poly::{gcd, Poly};
use crate::scalar::rational::Rational;
use crate::scalar::surd::{BinOp, SurdExt};
use crate::scalar::vars;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFun {
    num: Poly,
    den: Poly,
}

impl RatFun {
    /// num/den, normalized. Panics on a zero denominator; the checked
    /// boundary API is [`ratfun_arith`] with [`BinOp::Div`].
    pub fn new(num: Poly, den: Poly) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        RatFun { num, den }.normalize()
    }

    fn normalize(self) -> Self {
        if self.num.is_zero() {
            return RatFun {
                num: Poly::zero(),
                den: Poly::one(),
            };
        }
        let (mut num, mut den) = (self.num, self.den);
        if !den.is_one() {
            let g = gcd(&num, &den);
            if !g.is_one() {
                num = num.try_div_exact(&g).expect("gcd divides numerator");
                den = den.try_div_exact(&g).expect("gcd divides denominator");
            }
        }
        // Monic denominator pins the representative of the quotient.
        let lc = den.leading_coeff();
        if !lc.is_one() {
            let inv = lc.inv().expect("nonzero denominator");
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        RatFun { num, den }
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFun {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn zero() -> Self {
        RatFun::from_poly(Poly::zero())
    }

    pub fn one() -> Self {
        RatFun::from_poly(Poly::one())
    }

    pub fn from_int(n: i64) -> Self {
        RatFun::from_poly(Poly::from_int(n))
    }

    pub fn from_rational(r: Rational) -> Self {
        RatFun::from_poly(Poly::constant(SurdExt::from_rational(r)))
    }

    pub fn from_surd(s: SurdExt) -> Self {
        RatFun::from_poly(Poly::constant(s))
    }

    pub fn var(name: &str) -> Self {
        RatFun::from_poly(Poly::var(name))
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    /// Zero test is decidable: canonical form makes it a numerator check.
    pub fn is_identically_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_one()
    }

    pub fn as_constant(&self) -> Option<SurdExt> {
        if self.den.is_one() {
            self.num.as_constant()
        } else {
            None
        }
    }

    pub fn as_rational(&self) -> Option<Rational> {
        self.as_constant()?
            .as_gauss()?
            .as_rational()
            .cloned()
    }

    pub fn variables(&self) -> Vec<u32> {
        let mut vs = self.num.variables();
        vs.extend(self.den.variables());
        vs.sort_unstable();
        vs.dedup();
        vs
    }

    pub fn inv(&self) -> Result<Self> {
        if self.num.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(RatFun {
            num: self.den.clone(),
            den: self.num.clone(),
        }
        .normalize())
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = RatFun::one();
        for _ in 0..e.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    /// Exact evaluation. Bindings map variable ids to field elements; a
    /// missing binding for an occurring variable is an error, as is a
    /// vanishing denominator.
    pub fn eval_exact(&self, bindings: &BTreeMap<u32, SurdExt>) -> Result<SurdExt> {
        let lookup = |v: u32| bindings.get(&v).cloned();
        let den = self.den.eval_exact(&lookup)?;
        if den.is_zero() {
            return Err(Error::PoleAtBinding(self.den.to_string()));
        }
        let num = self.num.eval_exact(&lookup)?;
        num.checked_div(&den)
    }

    pub fn eval_numeric(&self, bindings: &BTreeMap<u32, Complex64>) -> Result<Complex64> {
        let lookup = |v: u32| bindings.get(&v).copied();
        let den = self.den.eval_numeric(&lookup)?;
        if den.norm() == 0.0 {
            return Err(Error::PoleAtBinding(self.den.to_string()));
        }
        let num = self.num.eval_numeric(&lookup)?;
        Ok(num / den)
    }

    /// Substitute a rational function for one variable.
    pub fn substitute(&self, name: &str, value: &RatFun) -> Result<Self> {
        let var = vars::var_id(name);
        let num = substitute_poly(&self.num, var, value);
        let den = substitute_poly(&self.den, var, value);
        // num/den as RatFuns: (n_n/n_d) / (d_n/d_d)
        if den.num.is_zero() {
            return Err(Error::PoleAtBinding(self.den.to_string()));
        }
        num.checked_div(&den)
    }

    /// Reduce a constant-free-of-i rational function mod p.
    pub fn eval_mod_p(&self, bindings: &BTreeMap<u32, u64>, p: u64) -> Result<u64> {
        let num = eval_poly_mod_p(&self.num, bindings, p)?;
        let den = eval_poly_mod_p(&self.den, bindings, p)?;
        if den == 0 {
            return Err(Error::PoleAtBinding(format!(
                "{} vanishes mod {p}",
                self.den
            )));
        }
        Ok(num * crate::ff::inv_mod(den, p) % p)
    }
}

fn substitute_poly(p: &Poly, var: u32, value: &RatFun) -> RatFun {
    // sum of c*m * value^e over terms, with the non-substituted part kept
    // polynomial; clearing denominators via value = n/d means multiplying
    // through by d^deg and tracking it, but reusing RatFun arithmetic is
    // simpler and these polynomials are small.
    let deg = p.degree_in(var);
    if deg == 0 {
        return RatFun::from_poly(p.clone());
    }
    let mut acc = RatFun::zero();
    let mut power = RatFun::one();
    for e in 0..=deg {
        let coeff = coeff_in_var(p, var, e);
        if !coeff.is_zero() {
            acc = &acc + &(&RatFun::from_poly(coeff) * &power);
        }
        if e < deg {
            power = &power * value;
        }
    }
    acc
}

fn coeff_in_var(p: &Poly, var: u32, exp: u32) -> Poly {
    let mut out = Poly::zero();
    for (m, c) in p.terms() {
        if m.exponent(var) == exp {
            let rest: Vec<(u32, u32)> = m
                .pairs()
                .iter()
                .copied()
                .filter(|&(v, _)| v != var)
                .collect();
            out.add_term(crate::scalar::poly::Monomial::from_pairs(rest), c.clone());
        }
    }
    out
}

fn eval_poly_mod_p(p: &Poly, bindings: &BTreeMap<u32, u64>, m: u64) -> Result<u64> {
    let mut acc = 0u64;
    for (mono, c) in p.mod_p(m)? {
        let mut term = c;
        for &(v, e) in mono.pairs() {
            let val = bindings
                .get(&v)
                .copied()
                .ok_or_else(|| Error::UnboundParameter(vars::var_name(v)))?;
            for _ in 0..e {
                term = term * val % m;
            }
        }
        acc = (acc + term) % m;
    }
    Ok(acc)
}

/// Checked arithmetic for the module boundary: division by an identically
/// zero function is the one genuinely fallible case.
pub fn ratfun_arith(lhs: &RatFun, rhs: &RatFun, op: BinOp) -> Result<RatFun> {
    match op {
        BinOp::Add => Ok(lhs + rhs),
        BinOp::Sub => Ok(lhs - rhs),
        BinOp::Mul => Ok(lhs * rhs),
        BinOp::Div => lhs.checked_div(rhs),
    }
}

impl Add for &RatFun {
    type Output = RatFun;
    fn add(self, rhs: &RatFun) -> RatFun {
        if self.num.is_zero() {
            return rhs.clone();
        }
        if rhs.num.is_zero() {
            return self.clone();
        }
        // Classic lcm trick: with g = gcd(d1, d2), d1 = g u, d2 = g v, the
        // sum is (n1 v + n2 u) / (g u v); keeps intermediate sizes down.
        let g = gcd(&self.den, &rhs.den);
        let u = self.den.try_div_exact(&g).expect("gcd divides");
        let v = rhs.den.try_div_exact(&g).expect("gcd divides");
        let num = &(&self.num * &v) + &(&rhs.num * &u);
        let den = &self.den * &v;
        RatFun::new(num, den)
    }
}

impl Sub for &RatFun {
    type Output = RatFun;
    fn sub(self, rhs: &RatFun) -> RatFun {
        self + &(-rhs)
    }
}

impl Mul for &RatFun {
    type Output = RatFun;
    fn mul(self, rhs: &RatFun) -> RatFun {
        if self.num.is_zero() || rhs.num.is_zero() {
            return RatFun::zero();
        }
        // Cross-cancel before multiplying to keep degrees low.
        let g1 = gcd(&self.num, &rhs.den);
        let g2 = gcd(&rhs.num, &self.den);
        let n1 = self.num.try_div_exact(&g1).expect("gcd divides");
        let d2 = rhs.den.try_div_exact(&g1).expect("gcd divides");
        let n2 = rhs.num.try_div_exact(&g2).expect("gcd divides");
        let d1 = self.den.try_div_exact(&g2).expect("gcd divides");
        RatFun::new(&n1 * &n2, &d1 * &d2)
    }
}

impl Neg for &RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        RatFun {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{} | {}", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
