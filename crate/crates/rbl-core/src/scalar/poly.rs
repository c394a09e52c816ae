//! Multivariate polynomials over Q(i, sqrt(d)), in canonical expanded form.
//!
//! Terms live in a BTreeMap keyed by monomial, so iteration order, printing,
//! and equality are all canonical. The monomial order is pure lexicographic
//! with respect to the registry precedence: `a^2 > a*b^5 > a > b`. Division
//! structure (exact division, content, primitive pseudo-remainder gcd) is
//! what [`super::ratfun`] needs to keep numerator and denominator coprime.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::scalar::rational::Rational;
use crate::scalar::surd::SurdExt;
use crate::scalar::vars;

/// Sparse exponent vector, sorted by variable id, exponents positive.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(Vec<(u32, u32)>);

impl Monomial {
    pub fn unit() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(id: u32) -> Self {
        Monomial(vec![(id, 1)])
    }

    pub fn from_pairs(mut pairs: Vec<(u32, u32)>) -> Self {
        pairs.retain(|&(_, e)| e > 0);
        pairs.sort_by_key(|&(v, _)| v);
        Monomial(pairs)
    }

    pub fn is_unit(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exponent(&self, var: u32) -> u32 {
        self.0
            .iter()
            .find(|&&(v, _)| v == var)
            .map_or(0, |&(_, e)| e)
    }

    pub fn pairs(&self) -> &[(u32, u32)] {
        &self.0
    }

    pub fn mul(&self, rhs: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.0.len() + rhs.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < rhs.0.len() {
            match self.0[i].0.cmp(&rhs.0[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(self.0[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(rhs.0[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push((self.0[i].0, self.0[i].1 + rhs.0[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&rhs.0[j..]);
        Monomial(out)
    }

    /// self / rhs when every exponent of rhs is covered.
    pub fn try_div(&self, rhs: &Monomial) -> Option<Monomial> {
        let mut out = self.0.clone();
        for &(v, e) in &rhs.0 {
            let slot = out.iter_mut().find(|p| p.0 == v)?;
            if slot.1 < e {
                return None;
            }
            slot.1 -= e;
        }
        out.retain(|&(_, e)| e > 0);
        Some(Monomial(out))
    }

    /// Strip one variable, returning (exponent, remaining monomial).
    fn split_var(&self, var: u32) -> (u32, Monomial) {
        let mut rest = Vec::with_capacity(self.0.len());
        let mut exp = 0;
        for &(v, e) in &self.0 {
            if v == var {
                exp = e;
            } else {
                rest.push((v, e));
            }
        }
        (exp, Monomial(rest))
    }
}

impl Ord for Monomial {
    /// Pure lex: walk variables in precedence order; the first variable with
    /// differing exponents decides, higher exponent ranking greater.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        let (mut i, mut j) = (0, 0);
        loop {
            match (self.0.get(i), other.0.get(j)) {
                (None, None) => return std::cmp::Ordering::Equal,
                (Some(_), None) => return std::cmp::Ordering::Greater,
                (None, Some(_)) => return std::cmp::Ordering::Less,
                (Some(&(va, ea)), Some(&(vb, eb))) => {
                    if va < vb {
                        // self has a power of a higher-precedence variable.
                        return std::cmp::Ordering::Greater;
                    }
                    if vb < va {
                        return std::cmp::Ordering::Less;
                    }
                    if ea != eb {
                        return ea.cmp(&eb);
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|&(v, e)| {
                let name = vars::var_name(v);
                if e == 1 {
                    name
                } else {
                    format!("{name}^{e}")
                }
            })
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    terms: BTreeMap<Monomial, SurdExt>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Poly::constant(SurdExt::one())
    }

    pub fn constant(c: SurdExt) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::unit(), c);
        }
        Poly { terms }
    }

    pub fn from_int(n: i64) -> Self {
        Poly::constant(SurdExt::from_int(n))
    }

    pub fn var(name: &str) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Monomial::var(vars::var_id(name)), SurdExt::one());
        Poly { terms }
    }

    pub fn from_terms(list: Vec<(Monomial, SurdExt)>) -> Self {
        let mut p = Poly::zero();
        for (m, c) in list {
            p.add_term(m, c);
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: SurdExt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = &*e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms.keys().next().unwrap().is_unit())
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().map_or(false, |c| c.is_one())
    }

    pub fn as_constant(&self) -> Option<SurdExt> {
        if self.terms.is_empty() {
            return Some(SurdExt::zero());
        }
        if self.terms.len() == 1 {
            let (m, c) = self.terms.iter().next().unwrap();
            if m.is_unit() {
                return Some(c.clone());
            }
        }
        None
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &SurdExt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Leading term under the lex order.
    pub fn leading(&self) -> Option<(&Monomial, &SurdExt)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coeff(&self) -> SurdExt {
        self.leading().map_or(SurdExt::zero(), |(_, c)| c.clone())
    }

    /// Variables occurring with positive exponent, ascending.
    pub fn variables(&self) -> Vec<u32> {
        let mut vs: Vec<u32> = self
            .terms
            .keys()
            .flat_map(|m| m.pairs().iter().map(|&(v, _)| v))
            .collect();
        vs.sort_unstable();
        vs.dedup();
        vs
    }

    pub fn degree_in(&self, var: u32) -> u32 {
        self.terms
            .keys()
            .map(|m| m.exponent(var))
            .max()
            .unwrap_or(0)
    }

    /// The shared radicand of all coefficients (0 when none carries a surd).
    pub fn radicand(&self) -> u64 {
        self.terms
            .values()
            .map(|c| c.radicand)
            .find(|&d| d != 0)
            .unwrap_or(0)
    }

    pub fn scale(&self, c: &SurdExt) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, v)| (m.clone(), v * c))
                .collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (k.mul(m), v.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Divide by the leading coefficient, making the poly monic.
    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => Poly::zero(),
            Some((_, c)) if c.is_one() => self.clone(),
            Some((_, c)) => {
                let inv = c.inv().expect("nonzero leading coefficient");
                self.scale(&inv)
            }
        }
    }

    /// Exact division: Some(q) with self = q * rhs, or None.
    pub fn try_div_exact(&self, rhs: &Poly) -> Option<Poly> {
        if rhs.is_zero() {
            return None;
        }
        if let Some(c) = rhs.as_constant() {
            let inv = c.inv().ok()?;
            return Some(self.scale(&inv));
        }
        let (lm, lc) = rhs.leading().unwrap();
        let lc_inv = lc.inv().ok()?;
        let mut rem = self.clone();
        let mut quot = Poly::zero();
        while let Some((m, c)) = rem.leading().map(|(m, c)| (m.clone(), c.clone())) {
            let qm = m.try_div(lm)?;
            let qc = &c * &lc_inv;
            quot.add_term(qm.clone(), qc.clone());
            let sub = rhs.mul_monomial(&qm).scale(&qc);
            rem = &rem - &sub;
        }
        Some(quot)
    }

    /// View as univariate in `var`: coefficient polys indexed by exponent,
    /// highest exponent last.
    fn univariate(&self, var: u32) -> Vec<(u32, Poly)> {
        let mut map: BTreeMap<u32, Poly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let (e, rest) = m.split_var(var);
            map.entry(e).or_insert_with(Poly::zero).add_term(rest, c.clone());
        }
        map.into_iter().filter(|(_, p)| !p.is_zero()).collect()
    }

    fn coeff_of(&self, var: u32, exp: u32) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let (e, rest) = m.split_var(var);
            if e == exp {
                out.add_term(rest, c.clone());
            }
        }
        out
    }

    /// Content with respect to `var`: gcd of the univariate coefficients.
    fn content(&self, var: u32) -> Poly {
        let mut acc = Poly::zero();
        for (_, c) in self.univariate(var) {
            acc = gcd(&acc, &c);
            if acc.is_one() {
                break;
            }
        }
        acc
    }

    pub fn eval_exact(&self, binding: &dyn Fn(u32) -> Option<SurdExt>) -> Result<SurdExt> {
        let mut acc = SurdExt::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for &(v, e) in m.pairs() {
                let val =
                    binding(v).ok_or_else(|| Error::UnboundParameter(vars::var_name(v)))?;
                for _ in 0..e {
                    term = &term * &val;
                }
            }
            acc = &acc + &term;
        }
        Ok(acc)
    }

    pub fn eval_numeric(&self, binding: &dyn Fn(u32) -> Option<Complex64>) -> Result<Complex64> {
        let mut acc = Complex64::new(0.0, 0.0);
        for (m, c) in &self.terms {
            let mut term = c.to_complex();
            for &(v, e) in m.pairs() {
                let val =
                    binding(v).ok_or_else(|| Error::UnboundParameter(vars::var_name(v)))?;
                term *= val.powi(e as i32);
            }
            acc += term;
        }
        Ok(acc)
    }

    /// Substitute a polynomial for one variable.
    pub fn substitute(&self, var: u32, value: &Poly) -> Poly {
        let mut acc = Poly::zero();
        for (m, c) in &self.terms {
            let (e, rest) = m.split_var(var);
            let mut term = Poly {
                terms: BTreeMap::from([(rest, c.clone())]),
            };
            if e > 0 {
                term = &term * &value.pow(e);
            }
            acc = &acc + &term;
        }
        acc
    }

    /// Map rational coefficients into F_p. Errors if any coefficient has a
    /// denominator divisible by p or carries an imaginary or surd part.
    pub fn mod_p(&self, p: u64) -> Result<Vec<(Monomial, u64)>> {
        let mut out = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let g = c
                .as_gauss()
                .ok_or_else(|| Error::Invalid("surd coefficient has no mod-p image".into()))?;
            let r = g
                .as_rational()
                .ok_or_else(|| Error::Invalid("imaginary coefficient has no mod-p image".into()))?;
            let v = r.mod_p(p)?;
            if v != 0 {
                out.push((m.clone(), v));
            }
        }
        Ok(out)
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c))
                .collect(),
        }
    }
}

/// Monic gcd over the coefficient field, by primitive pseudo-remainder
/// sequences in the highest-precedence variable present.
pub fn gcd(f: &Poly, g: &Poly) -> Poly {
    if f.is_zero() {
        return g.monic();
    }
    if g.is_zero() {
        return f.monic();
    }
    if f.is_constant() || g.is_constant() {
        return Poly::one();
    }
    let vf = f.variables();
    let vg = g.variables();
    let var = *vf.first().unwrap().min(vg.first().unwrap());
    let in_f = vf.contains(&var);
    let in_g = vg.contains(&var);
    if !in_f {
        return gcd(f, &g.content(var));
    }
    if !in_g {
        return gcd(&f.content(var), g);
    }

    let cf = f.content(var);
    let cg = g.content(var);
    let c = gcd(&cf, &cg);
    let mut fp = f.try_div_exact(&cf).expect("content divides");
    let mut gp = g.try_div_exact(&cg).expect("content divides");
    if fp.degree_in(var) < gp.degree_in(var) {
        std::mem::swap(&mut fp, &mut gp);
    }
    // Coefficients in a single variable live over the (Gaussian-surd) field,
    // so ordinary monic Euclid applies and avoids pseudo-remainder blowup.
    if fp.variables() == [var] && gp.variables() == [var] {
        fp = fp.monic();
        gp = gp.monic();
        loop {
            let r = monic_rem(&fp, &gp, var);
            if r.is_zero() {
                return (&c * &gp).monic();
            }
            if r.degree_in(var) == 0 {
                return c.monic();
            }
            fp = gp;
            gp = r.monic();
        }
    }
    loop {
        let r = pseudo_rem(&fp, &gp, var);
        if r.is_zero() {
            let pp = gp.try_div_exact(&gp.content(var)).expect("content divides");
            return (&c * &pp).monic();
        }
        if r.degree_in(var) == 0 {
            return c.monic();
        }
        fp = gp;
        gp = r.try_div_exact(&r.content(var)).expect("content divides");
    }
}

/// Remainder of f by a monic univariate g, over the coefficient field.
fn monic_rem(f: &Poly, g: &Poly, var: u32) -> Poly {
    let dg = g.degree_in(var);
    let mut r = f.clone();
    while !r.is_zero() {
        let dr = r.degree_in(var);
        if dr < dg {
            break;
        }
        let lr = r.coeff_of(var, dr);
        let shift = Monomial::from_pairs(vec![(var, dr - dg)]);
        r = &r - &(&g.mul_monomial(&shift) * &lr);
    }
    r
}

/// Pseudo-remainder of f by g in `var`: repeatedly scale f by g's leading
/// coefficient and cancel the top term, until deg f < deg g.
fn pseudo_rem(f: &Poly, g: &Poly, var: u32) -> Poly {
    let dg = g.degree_in(var);
    let lg = g.coeff_of(var, dg);
    let mut r = f.clone();
    while !r.is_zero() {
        let dr = r.degree_in(var);
        if dr < dg {
            break;
        }
        let lr = r.coeff_of(var, dr);
        let shift = Monomial::from_pairs(vec![(var, dr - dg)]);
        // r <- lg * r - lr * x^(dr-dg) * g
        r = &(&r * &lg) - &(&g.mul_monomial(&shift) * &lr);
    }
    r
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        // Leading (lex-greatest) term first.
        for (m, c) in self.terms.iter().rev() {
            let piece = render_term(m, c);
            if first {
                write!(f, "{piece}")?;
                first = false;
            } else if let Some(stripped) = piece.strip_prefix('-') {
                write!(f, " - {stripped}")?;
            } else {
                write!(f, " + {piece}")?;
            }
        }
        Ok(())
    }
}

fn render_term(m: &Monomial, c: &SurdExt) -> String {
    if m.is_unit() {
        return c.to_string();
    }
    if c.is_one() {
        return m.to_string();
    }
    if (-c).is_one() {
        return format!("-{m}");
    }
    let cs = c.to_string();
    // Wrap composite coefficients so the term parses back unambiguously.
    let needs_parens = cs[1..].contains('+') || cs[1..].contains('-');
    if needs_parens {
        format!("({cs})*{m}")
    } else {
        format!("{cs}*{m}")
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Convenience: polynomial `c * name^e` with rational coefficient.
pub fn rational_term(c: Rational, name: &str, e: u32) -> Poly {
    let mono = if e == 0 {
        Monomial::unit()
    } else {
        Monomial::from_pairs(vec![(vars::var_id(name), e)])
    };
    Poly::from_terms(vec![(mono, SurdExt::from_rational(c))])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pvar(n: &str) -> Poly {
        Poly::var(n)
    }

    #[test]
    fn lex_order_ranks_higher_precedence_vars_first() {
        let a = Monomial::var(vars::var_id("a"));
        let b = Monomial::var(vars::var_id("b"));
        let a2 = a.mul(&a);
        let ab5 = a.mul(&b.mul(&b).mul(&b).mul(&b).mul(&b));
        assert!(a2 > ab5);
        assert!(ab5 > a);
        assert!(a > b);
        assert!(b > Monomial::unit());
    }

    #[test]
    fn multiplication_expands_and_cancels() {
        // (a+b)(a-b) = a^2 - b^2
        let sum = &pvar("a") + &pvar("b");
        let diff = &pvar("a") - &pvar("b");
        let prod = &sum * &diff;
        let expect = &(&pvar("a") * &pvar("a")) - &(&pvar("b") * &pvar("b"));
        assert_eq!(prod, expect);
    }

    #[test]
    fn exact_division_recovers_factors() {
        let f = &(&pvar("a") + &Poly::one()) * &(&pvar("a") - &Poly::one());
        let q = f.try_div_exact(&(&pvar("a") - &Poly::one())).unwrap();
        assert_eq!(q, &pvar("a") + &Poly::one());
        assert!(f.try_div_exact(&(&pvar("a") + &pvar("b"))).is_none());
    }

    #[test]
    fn gcd_of_univariate_pair() {
        // gcd(a^2-1, a^2-2a+1) = a-1
        let f = &(&pvar("a") * &pvar("a")) - &Poly::one();
        let am1 = &pvar("a") - &Poly::one();
        let g = &am1 * &am1;
        assert_eq!(gcd(&f, &g), am1);
    }

    #[test]
    fn gcd_of_multivariate_pair() {
        // gcd((a+b)^2 * b, (a+b) * a) = a+b
        let apb = &pvar("a") + &pvar("b");
        let f = &(&apb * &apb) * &pvar("b");
        let g = &apb * &pvar("a");
        assert_eq!(gcd(&f, &g), apb);
    }

    #[test]
    fn coprime_polys_have_gcd_one() {
        let f = &pvar("a") * &pvar("b");
        let g = &(&pvar("a") * &pvar("a")) + &Poly::one();
        assert_eq!(gcd(&f, &g), Poly::one());
    }

    #[test]
    fn display_orders_leading_term_first() {
        let p = &(&pvar("a") * &pvar("a")) - &(&pvar("b") + &Poly::from_int(3));
        assert_eq!(p.to_string(), "a^2 - b - 3");
    }

    #[test]
    fn substitution_replaces_a_variable() {
        // (a^2 + b) with a -> b+1 gives b^2 + 3b + 1
        let p = &(&pvar("a") * &pvar("a")) + &pvar("b");
        let sub = p.substitute(vars::var_id("a"), &(&pvar("b") + &Poly::one()));
        let b = pvar("b");
        let expect = &(&(&b * &b) + &(&Poly::from_int(3) * &b)) + &Poly::one();
        assert_eq!(sub, expect);
    }
}
