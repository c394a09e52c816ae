use std::sync::Arc;

use crate::error::{Error, Result};
use crate::lie::{LieAlgebra, OperatorMatrix};
use crate::scalar::{Bindings, Poly, RatFun, Scalar, SurdExt, ZeroTest};

use super::check_rb;

/// The quadratic system in the operator entries whose common zero set is the
/// Rota-Baxter operators of weight zero on a fixed algebra. Each equation is
/// one coefficient comparison moved to "= 0" form and sign-normalized.
#[derive(Clone, Debug)]
pub struct PolySystem {
    /// Unknown names, row-major: r11, r12, ..., in the basis order of the
    /// source algebra.
    pub unknowns: Vec<String>,
    /// Polynomials in the unknowns; denominators are trivial by
    /// construction.
    pub equations: Vec<RatFun>,
}

impl PolySystem {
    /// Values of all equations at the given operator entries.
    pub fn residuals_at(&self, bindings: &Bindings) -> Result<Vec<Scalar>> {
        self.equations
            .iter()
            .map(|e| Scalar::Exact(e.clone()).evaluate(bindings))
            .collect()
    }

    pub fn vanishes_at(&self, bindings: &Bindings, zt: ZeroTest) -> Result<bool> {
        for r in self.residuals_at(bindings)? {
            if !zt.is_zero(&r)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Bindings mapping the unknowns to a matrix's entries.
    pub fn bind_matrix(&self, m: &[Vec<Scalar>]) -> Result<Bindings> {
        let dim = (self.unknowns.len() as f64).sqrt().round() as usize;
        if m.len() != dim || m.iter().any(|r| r.len() != dim) {
            return Err(Error::DimensionMismatch(format!(
                "matrix does not provide {} unknowns",
                self.unknowns.len()
            )));
        }
        let exact = m.iter().flatten().all(Scalar::is_exact);
        if exact {
            let mut map = std::collections::BTreeMap::new();
            for (k, name) in self.unknowns.iter().enumerate() {
                let v = m[k / dim][k % dim]
                    .as_exact()?
                    .as_constant()
                    .ok_or_else(|| {
                        Error::Invalid("matrix entries must be constants".into())
                    })?;
                map.insert(name.clone(), v);
            }
            Ok(Bindings::Exact(map))
        } else {
            let mut map = std::collections::BTreeMap::new();
            for (k, name) in self.unknowns.iter().enumerate() {
                map.insert(name.clone(), m[k / dim][k % dim].as_complex()?);
            }
            Ok(Bindings::Numeric(map))
        }
    }
}

/// Derives the coefficient equations of the weight-zero Rota-Baxter
/// identity on g by running the residual check on a fully symbolic
/// operator. Identically zero comparisons are dropped, so an abelian
/// algebra yields an empty system.
pub fn generate_rb_system(g: &Arc<LieAlgebra>) -> Result<PolySystem> {
    if !g.is_exact() {
        return Err(Error::NumericTag);
    }
    let dim = g.dim();
    let mut unknowns = Vec::with_capacity(dim * dim);
    let mut m = Vec::with_capacity(dim);
    for i in 0..dim {
        let mut row = Vec::with_capacity(dim);
        for j in 0..dim {
            let name = format!("r{}{}", i + 1, j + 1);
            row.push(Scalar::Exact(RatFun::var(&name)));
            unknowns.push(name);
        }
        m.push(row);
    }
    let op = OperatorMatrix::new(g, m)?;
    let report = check_rb(g, &op, &Scalar::zero())?;
    let mut equations = Vec::new();
    for pair in &report.residuals {
        for c in &pair.coords {
            let rf = c.as_exact()?;
            debug_assert!(rf.den().is_one(), "system generation stays polynomial");
            if rf.is_identically_zero() {
                continue;
            }
            equations.push(RatFun::from_poly(sign_normalize(rf.num())));
        }
    }
    Ok(PolySystem { unknowns, equations })
}

/// Flips the overall sign when the leading coefficient's first nonzero
/// component is negative, fixing one representative per sign pair.
pub(crate) fn sign_normalize(p: &Poly) -> Poly {
    if coeff_is_negative(&p.leading_coeff()) {
        -p
    } else {
        p.clone()
    }
}

fn coeff_is_negative(c: &SurdExt) -> bool {
    for part in [&c.base.re, &c.base.im, &c.surd.re, &c.surd.im] {
        if part.is_zero() {
            continue;
        }
        return part.is_negative();
    }
    false
}
