use std::sync::Arc;

use crate::error::{Error, Result};
use crate::scalar::{Scalar, ZeroTest};

use super::matrix::{self, Matrix};
use super::LieAlgebra;

/// A finite-dimensional representation: one matrix per basis element of the
/// domain, acting on column coordinates of the module.
#[derive(Clone, Debug)]
pub struct Representation {
    domain: Arc<LieAlgebra>,
    module_labels: Vec<String>,
    mats: Vec<Matrix>,
    zt: ZeroTest,
}

impl Representation {
    /// Validates the homomorphism law rho([b_i, b_j]) = [rho(b_i), rho(b_j)]
    /// on all basis pairs.
    pub fn new(
        domain: &Arc<LieAlgebra>,
        module_labels: Vec<String>,
        mats: Vec<Matrix>,
        zt: ZeroTest,
    ) -> Result<Self> {
        let dim = domain.dim();
        let md = module_labels.len();
        if mats.len() != dim {
            return Err(Error::DimensionMismatch(format!(
                "{} matrices for a {dim}-dimensional algebra",
                mats.len()
            )));
        }
        for m in &mats {
            let (r, c) = matrix::dims(m);
            if r != md || c != md {
                return Err(Error::DimensionMismatch(format!(
                    "{r}x{c} matrix on a {md}-dimensional module"
                )));
            }
        }
        let zero = domain.tag_zero();
        for i in 0..dim {
            for j in (i + 1)..dim {
                // rho applied to [b_i, b_j], expanded through the table.
                let mut lhs = vec![vec![zero.clone(); md]; md];
                for (k, coeff) in domain.basis_bracket(i, j).iter().enumerate() {
                    if coeff.is_structural_zero() {
                        continue;
                    }
                    lhs = matrix::add(&lhs, &matrix::scale(&mats[k], coeff)?)?;
                }
                let rhs = matrix::sub(
                    &matrix::mul(&mats[i], &mats[j])?,
                    &matrix::mul(&mats[j], &mats[i])?,
                )?;
                if !matrix::eq(&lhs, &rhs, zt)? {
                    return Err(Error::RepresentationLawViolated(i, j));
                }
            }
        }
        Ok(Representation {
            domain: domain.clone(),
            module_labels,
            mats,
            zt,
        })
    }

    /// The adjoint representation of an algebra on itself.
    pub fn adjoint(alg: &Arc<LieAlgebra>) -> Result<Self> {
        let dim = alg.dim();
        let mut mats = Vec::with_capacity(dim);
        for i in 0..dim {
            let mut x = vec![alg.tag_zero(); dim];
            x[i] = alg.tag_one();
            mats.push(alg.ad(&x)?);
        }
        let zt = if alg.is_exact() {
            ZeroTest::Exact
        } else {
            ZeroTest::Tol(0.0)
        };
        Representation::new(alg, alg.labels().to_vec(), mats, zt)
    }

    /// The trivial action on a module of the given labels.
    pub fn zero(alg: &Arc<LieAlgebra>, module_labels: Vec<String>) -> Result<Self> {
        let md = module_labels.len();
        let mats = vec![vec![vec![alg.tag_zero(); md]; md]; alg.dim()];
        let zt = if alg.is_exact() {
            ZeroTest::Exact
        } else {
            ZeroTest::Tol(0.0)
        };
        Representation::new(alg, module_labels, mats, zt)
    }

    /// The dual representation rho*(x) = -rho(x)^T on the dual module, with
    /// labels suffixed by "*".
    pub fn dual(&self) -> Result<Self> {
        let mats = self
            .mats
            .iter()
            .map(|m| matrix::neg(&matrix::transpose(m)))
            .collect();
        let labels = self
            .module_labels
            .iter()
            .map(|l| format!("{l}*"))
            .collect();
        Representation::new(&self.domain, labels, mats, self.zt)
    }

    pub fn domain(&self) -> &Arc<LieAlgebra> {
        &self.domain
    }

    pub fn module_dim(&self) -> usize {
        self.module_labels.len()
    }

    pub fn module_labels(&self) -> &[String] {
        &self.module_labels
    }

    /// Matrix of the basis element b_i.
    pub fn matrix(&self, i: usize) -> &Matrix {
        &self.mats[i]
    }

    /// Matrix of a general element with the given coordinates.
    pub fn apply(&self, x: &[Scalar]) -> Result<Matrix> {
        if x.len() != self.domain.dim() {
            return Err(Error::DimensionMismatch(
                "element does not match the domain dimension".into(),
            ));
        }
        let md = self.module_dim();
        let mut out = vec![vec![self.domain.tag_zero(); md]; md];
        for (i, coeff) in x.iter().enumerate() {
            if coeff.is_structural_zero() {
                continue;
            }
            out = matrix::add(&out, &matrix::scale(&self.mats[i], coeff)?)?;
        }
        Ok(out)
    }
}

/// The semidirect sum g ⋉ V: brackets [x, v] = rho(x)v on mixed pairs and
/// zero on V x V. The resulting table is revalidated in full.
pub fn semidirect_product(
    g: &Arc<LieAlgebra>,
    rho: &Representation,
) -> Result<Arc<LieAlgebra>> {
    if !super::same_algebra(g, &rho.domain) {
        return Err(Error::AlgebraMismatch(
            "representation domain differs from the algebra".into(),
        ));
    }
    let n = g.dim();
    let m = rho.module_dim();
    let dim = n + m;
    let mut c = vec![vec![vec![g.tag_zero(); dim]; dim]; dim];
    for i in 0..n {
        for j in 0..n {
            for (k, v) in g.basis_bracket(i, j).iter().enumerate() {
                c[i][j][k] = v.clone();
            }
        }
        // [b_i, v_j] = column j of rho(b_i); the mirrored entry by
        // antisymmetry.
        for j in 0..m {
            for k in 0..m {
                let v = &rho.mats[i][k][j];
                c[i][n + j][n + k] = v.clone();
                c[n + j][i][n + k] = v.neg();
            }
        }
    }
    let mut labels = g.labels().to_vec();
    labels.extend(rho.module_labels.iter().cloned());
    LieAlgebra::new(labels, c, rho.zt)
}
