use std::sync::Arc;

use crate::error::{Error, Result};
use crate::scalar::{Scalar, ZeroTest};

use super::matrix::{self, Matrix};
use super::{same_algebra, LieAlgebra, Vector};

/// A linear operator on a Lie algebra, stored in the row convention: row i
/// holds the coordinates of the image of basis element b_i.
#[derive(Clone, Debug)]
pub struct OperatorMatrix {
    alg: Arc<LieAlgebra>,
    m: Matrix,
}

impl OperatorMatrix {
    pub fn new(alg: &Arc<LieAlgebra>, m: Matrix) -> Result<Self> {
        let (r, c) = matrix::dims(&m);
        if r != alg.dim() || c != alg.dim() {
            return Err(Error::DimensionMismatch(format!(
                "{r}x{c} operator on a {}-dimensional algebra",
                alg.dim()
            )));
        }
        Ok(OperatorMatrix {
            alg: alg.clone(),
            m,
        })
    }

    pub fn algebra(&self) -> &Arc<LieAlgebra> {
        &self.alg
    }

    pub fn matrix(&self) -> &Matrix {
        &self.m
    }

    pub fn entry(&self, i: usize, j: usize) -> &Scalar {
        &self.m[i][j]
    }

    pub fn apply(&self, x: &Vector) -> Result<Vector> {
        if !same_algebra(&self.alg, x.algebra()) {
            return Err(Error::AlgebraMismatch(
                "operator applied to a vector from another algebra".into(),
            ));
        }
        Vector::new(&self.alg, matrix::row_apply(x.coords(), &self.m)?)
    }

    /// Image coordinates of basis element b_i.
    pub fn apply_basis(&self, i: usize) -> &[Scalar] {
        &self.m[i]
    }

    /// Converts both the matrix and the algebra it acts on, so applications
    /// stay within one backend.
    pub fn to_numeric(&self) -> Result<OperatorMatrix> {
        Ok(OperatorMatrix {
            alg: self.alg.to_numeric()?,
            m: matrix::map_numeric(&self.m)?,
        })
    }
}

/// Conjugates an operator into the basis whose rows (in old coordinates)
/// form n. Returns the operator together with the transformed algebra it
/// now acts on; new basis labels are the old ones primed.
pub fn change_of_basis(
    op: &OperatorMatrix,
    n: &Matrix,
    zt: ZeroTest,
) -> Result<OperatorMatrix> {
    let labels = op
        .alg
        .labels()
        .iter()
        .map(|l| format!("{l}'"))
        .collect::<Vec<_>>();
    let new_alg = op.alg.change_basis(n, labels, zt)?;
    let n_inv = matrix::inverse(n, zt)?;
    let m = matrix::mul(&matrix::mul(n, &op.m)?, &n_inv)?;
    Ok(OperatorMatrix { alg: new_alg, m })
}
