//! Rota-Baxter operators on Lie algebras: the defining identity as a
//! residual check, the quadratic polynomial system it reduces to on a fixed
//! basis, and the catalog of representatives on sl(2,C) up to scaling.

mod catalog;
mod system;

pub use catalog::{catalog, entry_by_id, CatalogEntry};
pub use system::{generate_rb_system, PolySystem};

use std::sync::Arc;

use once_cell::sync::Lazy;

use crate::error::{Error, Result};
use crate::lie::matrix::{self, Matrix};
use crate::lie::{same_algebra, LieAlgebra, OperatorMatrix};
use crate::scalar::{parse_scalar, Scalar, ZeroTest};

/// Residual vector of the Rota-Baxter identity on one basis pair.
#[derive(Clone, Debug)]
pub struct PairResidual {
    pub i: usize,
    pub j: usize,
    /// Coordinates of [P(b_i),P(b_j)] - P([P(b_i),b_j] + [b_i,P(b_j)] +
    /// weight [b_i,b_j]).
    pub coords: Vec<Scalar>,
}

/// Residuals for every basis pair i < j; the pairs with i >= j carry no
/// extra information by antisymmetry.
#[derive(Clone, Debug)]
pub struct RbReport {
    pub weight: Scalar,
    pub residuals: Vec<PairResidual>,
}

impl RbReport {
    pub fn holds(&self, zt: ZeroTest) -> Result<bool> {
        Ok(self.failing_pairs(zt)?.is_empty())
    }

    /// Basis pairs whose residual vector is nonzero under the given test.
    pub fn failing_pairs(&self, zt: ZeroTest) -> Result<Vec<(usize, usize)>> {
        let mut out = Vec::new();
        for r in &self.residuals {
            for c in &r.coords {
                if !zt.is_zero(c)? {
                    out.push((r.i, r.j));
                    break;
                }
            }
        }
        Ok(out)
    }

    pub fn residual(&self, i: usize, j: usize) -> Option<&PairResidual> {
        self.residuals.iter().find(|r| r.i == i && r.j == j)
    }
}

/// Checks the Rota-Baxter identity of the given weight on every basis pair:
/// [P(x),P(y)] = P([P(x),y] + [x,P(y)] + weight [x,y]). Weight zero is the
/// classical case; the identity operator satisfies weight -1.
pub fn check_rb(
    g: &Arc<LieAlgebra>,
    p: &OperatorMatrix,
    weight: &Scalar,
) -> Result<RbReport> {
    if !same_algebra(g, p.algebra()) {
        return Err(Error::AlgebraMismatch(
            "operator is defined over a different algebra".into(),
        ));
    }
    let dim = g.dim();
    let mut residuals = Vec::with_capacity(dim * (dim - 1) / 2);
    let basis = |i: usize| {
        let mut v = vec![g.tag_zero(); dim];
        v[i] = g.tag_one();
        v
    };
    for i in 0..dim {
        for j in (i + 1)..dim {
            let pi = p.apply_basis(i);
            let pj = p.apply_basis(j);
            let lhs = g.bracket_coords(pi, pj)?;
            let mut inner = g.bracket_coords(pi, &basis(j))?;
            let t2 = g.bracket_coords(&basis(i), pj)?;
            for k in 0..dim {
                inner[k] = inner[k].add(&t2[k])?;
                if !weight.is_structural_zero() {
                    inner[k] = inner[k].add(&weight.mul(g.structure_constant(i, j, k))?)?;
                }
            }
            let rhs = matrix::row_apply(&inner, p.matrix())?;
            let coords = lhs
                .iter()
                .zip(&rhs)
                .map(|(x, y)| x.sub(y))
                .collect::<Result<Vec<_>>>()?;
            residuals.push(PairResidual { i, j, coords });
        }
    }
    Ok(RbReport {
        weight: weight.clone(),
        residuals,
    })
}

/// The basis of sl(2,C) that is orthonormal for the Killing form, as rows
/// over the Cartan-Weyl basis: (sqrt(2)i/4)(e-f), (sqrt(2)/4)(e+f),
/// (sqrt(2)/4)h.
pub fn orthonormal_basis() -> &'static Matrix {
    static N: Lazy<Matrix> = Lazy::new(|| {
        let s = |t: &str| parse_scalar(t).expect("orthonormal basis entry");
        vec![
            vec![s("sqrt(2)/4*i"), s("-sqrt(2)/4*i"), s("0")],
            vec![s("sqrt(2)/4"), s("sqrt(2)/4"), s("0")],
            vec![s("0"), s("0"), s("sqrt(2)/4")],
        ]
    });
    &N
}

/// Whether the operator's matrix becomes skew-symmetric after the change of
/// basis whose rows are n.
pub fn is_skew_in_basis(p: &OperatorMatrix, n: &Matrix, zt: ZeroTest) -> Result<bool> {
    let conj = conjugate(p.matrix(), n, zt)?;
    let sym = matrix::add(&conj, &matrix::transpose(&conj))?;
    for row in &sym {
        for x in row {
            if !zt.is_zero(x)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The operator's matrix rewritten in the basis whose rows are n (in old
/// coordinates): N M N^{-1}.
pub fn conjugate(m: &Matrix, n: &Matrix, zt: ZeroTest) -> Result<Matrix> {
    let n_inv = matrix::inverse(n, zt)?;
    matrix::mul(&matrix::mul(n, m)?, &n_inv)
}

/// Looks for a scalar lambda with q = lambda p. Returns None when the two
/// matrices lie on different rays; two zero matrices share a ray with
/// lambda = 1.
pub fn same_ray(
    p: &OperatorMatrix,
    q: &OperatorMatrix,
    zt: ZeroTest,
) -> Result<Option<Scalar>> {
    let a = p.matrix();
    let b = q.matrix();
    if matrix::dims(a) != matrix::dims(b) {
        return Ok(None);
    }
    let mut lambda: Option<Scalar> = None;
    for (ra, rb) in a.iter().zip(b) {
        for (x, y) in ra.iter().zip(rb) {
            let xz = zt.is_zero(x)?;
            let yz = zt.is_zero(y)?;
            if xz != yz {
                return Ok(None);
            }
            if xz {
                continue;
            }
            let ratio = y.div(x)?;
            match &lambda {
                None => lambda = Some(ratio),
                Some(l) => {
                    if !zt.eq(l, &ratio)? {
                        return Ok(None);
                    }
                }
            }
        }
    }
    Ok(Some(lambda.unwrap_or_else(Scalar::one)))
}

#[cfg(test)]
mod tests;
