//! Pre-Lie algebras induced by Rota-Baxter operators.
//!
//! A weight-zero Rota-Baxter operator P on a Lie algebra induces the
//! pre-Lie product {x, y} = [P(x), y]. This module builds those product
//! tables, derives their subadjacent Lie algebras and left-multiplication
//! representations, matches the catalog families against the recorded
//! three-dimensional normal forms, and assembles the canonical skew
//! solution of the classical Yang-Baxter equation on the semidirect
//! product of the subadjacent algebra with its dual module.

mod classes;
#[cfg(test)]
mod tests;

pub use classes::{
    canonical_class, canonical_classes, class_table, classify, classify_against,
    corrected_proof_basis, five_algebras, proof_basis, CanonicalClass, ClassName, ClassTableRow,
    PrintedMatrixCheck,
};

use std::sync::Arc;

use crate::cybe::Tensor2;
use crate::error::{Error, Result};
use crate::lie::{
    matrix, render_combination, semidirect_product, LieAlgebra, Matrix, OperatorMatrix,
    Representation,
};
use crate::rota_baxter::check_rb;
use crate::scalar::{Scalar, ZeroTest};

/// A finite-dimensional pre-Lie algebra given by its product table
/// {b_i, b_j} = sum_k c[i][j][k] b_k. The defining identity
/// {{x,y},z} - {x,{y,z}} = {{y,x},z} - {y,{x,z}} is validated whenever a
/// table is constructed, so everything downstream may assume it.
#[derive(Clone, Debug, PartialEq)]
pub struct PreLie {
    labels: Vec<String>,
    c: Vec<Vec<Vec<Scalar>>>,
}

/// Outcome of the exhaustive pre-Lie identity check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PreLieVerdict {
    Holds,
    /// First basis triple (i, j, k) on which the two sides of the identity
    /// differ, scanned in lexicographic order with i < j.
    FailsAt(usize, usize, usize),
}

/// Shape and backend-tag validation shared by the table constructors.
fn validate_table(c: &[Vec<Vec<Scalar>>]) -> Result<usize> {
    let dim = c.len();
    if dim == 0 {
        return Err(Error::DimensionMismatch("empty product table".into()));
    }
    if c.iter().any(|row| row.len() != dim) || c.iter().flatten().any(|v| v.len() != dim) {
        return Err(Error::DimensionMismatch(format!(
            "product table does not match dimension {dim}"
        )));
    }
    let exact = c[0][0][0].is_exact();
    if c.iter().flatten().flatten().any(|x| x.is_exact() != exact) {
        return Err(Error::TagMismatch);
    }
    Ok(dim)
}

/// {x, y} expanded through a raw product table.
fn table_product(
    c: &[Vec<Vec<Scalar>>],
    x: &[Scalar],
    y: &[Scalar],
    zero: &Scalar,
) -> Result<Vec<Scalar>> {
    let dim = c.len();
    let mut out = vec![zero.clone(); dim];
    for i in 0..dim {
        if x[i].is_structural_zero() {
            continue;
        }
        for j in 0..dim {
            if y[j].is_structural_zero() {
                continue;
            }
            let xy = x[i].mul(&y[j])?;
            for k in 0..dim {
                if !c[i][j][k].is_structural_zero() {
                    out[k] = out[k].add(&xy.mul(&c[i][j][k])?)?;
                }
            }
        }
    }
    Ok(out)
}

/// Exhaustive check of the pre-Lie identity on a raw product table,
/// reporting the first failing basis triple. Swapping the first two
/// arguments negates the identity's defect, so triples are scanned with
/// i < j.
pub fn check_prelie(c: &[Vec<Vec<Scalar>>], zt: ZeroTest) -> Result<PreLieVerdict> {
    let dim = validate_table(c)?;
    let zero = c[0][0][0].zero_like();
    // {v, b_k} for a coordinate vector v.
    let right = |v: &[Scalar], k: usize| -> Result<Vec<Scalar>> {
        let mut out = vec![zero.clone(); dim];
        for m in 0..dim {
            if v[m].is_structural_zero() {
                continue;
            }
            for t in 0..dim {
                out[t] = out[t].add(&v[m].mul(&c[m][k][t])?)?;
            }
        }
        Ok(out)
    };
    // {b_i, v} for a coordinate vector v.
    let left = |i: usize, v: &[Scalar]| -> Result<Vec<Scalar>> {
        let mut out = vec![zero.clone(); dim];
        for j in 0..dim {
            if v[j].is_structural_zero() {
                continue;
            }
            for t in 0..dim {
                out[t] = out[t].add(&v[j].mul(&c[i][j][t])?)?;
            }
        }
        Ok(out)
    };
    for i in 0..dim {
        for j in (i + 1)..dim {
            for k in 0..dim {
                // {{b_i,b_j},b_k} - {b_i,{b_j,b_k}} against its (j,i) mirror.
                let lhs1 = right(&c[i][j], k)?;
                let lhs2 = left(i, &c[j][k])?;
                let rhs1 = right(&c[j][i], k)?;
                let rhs2 = left(j, &c[i][k])?;
                for t in 0..dim {
                    let d = lhs1[t].sub(&lhs2[t])?.sub(&rhs1[t].sub(&rhs2[t])?)?;
                    if !zt.is_zero(&d)? {
                        return Ok(PreLieVerdict::FailsAt(i, j, k));
                    }
                }
            }
        }
    }
    Ok(PreLieVerdict::Holds)
}

impl PreLie {
    /// Builds a pre-Lie algebra from labels and a product table, validating
    /// the defining identity under the given zero test.
    pub fn new(labels: Vec<String>, c: Vec<Vec<Vec<Scalar>>>, zt: ZeroTest) -> Result<PreLie> {
        let dim = validate_table(&c)?;
        if labels.len() != dim {
            return Err(Error::DimensionMismatch(format!(
                "{} labels for a {dim}-dimensional product table",
                labels.len()
            )));
        }
        match check_prelie(&c, zt)? {
            PreLieVerdict::Holds => Ok(PreLie { labels, c }),
            PreLieVerdict::FailsAt(i, j, k) => Err(Error::NotPreLie(i, j, k)),
        }
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    /// Coordinates of {b_i, b_j}.
    pub fn basis_product(&self, i: usize, j: usize) -> &[Scalar] {
        &self.c[i][j]
    }

    /// Coefficient of b_k in {b_i, b_j}.
    pub fn product_constant(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.c[i][j][k]
    }

    /// Whether the product constants live in the exact backend.
    pub fn is_exact(&self) -> bool {
        self.c[0][0][0].is_exact()
    }

    pub(crate) fn tag_zero(&self) -> Scalar {
        self.c[0][0][0].zero_like()
    }

    /// Product {x, y} on raw coordinate slices.
    pub fn product_coords(&self, x: &[Scalar], y: &[Scalar]) -> Result<Vec<Scalar>> {
        let dim = self.dim();
        if x.len() != dim || y.len() != dim {
            return Err(Error::DimensionMismatch(format!(
                "vectors of length {} and {} in a {dim}-dimensional algebra",
                x.len(),
                y.len()
            )));
        }
        table_product(&self.c, x, y, &self.tag_zero())
    }

    /// Numeric image of the table. Skips revalidation: the identity already
    /// held on the source table and its float image inherits it.
    pub fn to_numeric(&self) -> Result<PreLie> {
        Ok(PreLie {
            labels: self.labels.clone(),
            c: self
                .c
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|v| v.iter().map(Scalar::to_numeric).collect())
                        .collect::<Result<_>>()
                })
                .collect::<Result<_>>()?,
        })
    }

    /// Recomputes the product table in the basis whose rows are n (the new
    /// basis written in the old coordinates).
    pub fn change_basis(&self, n: &Matrix, labels: Vec<String>, zt: ZeroTest) -> Result<PreLie> {
        let dim = self.dim();
        if labels.len() != dim || n.len() != dim {
            return Err(Error::DimensionMismatch(
                "basis matrix does not match dimension".into(),
            ));
        }
        let n_inv = matrix::inverse(n, zt)?;
        let mut c = Vec::with_capacity(dim);
        for i in 0..dim {
            let mut row = Vec::with_capacity(dim);
            for j in 0..dim {
                // {b'_i, b'_j} in old coordinates, then back to new ones.
                let old = self.product_coords(&n[i], &n[j])?;
                row.push(matrix::row_apply(&old, &n_inv)?);
            }
            c.push(row);
        }
        PreLie::new(labels, c, zt)
    }

    /// The product table rendered entrywise: entry (i, j) is {b_i, b_j}
    /// written as a combination of the basis labels.
    pub fn characteristic_matrix(&self) -> Vec<Vec<String>> {
        self.c
            .iter()
            .map(|row| {
                row.iter()
                    .map(|v| render_combination(v, &self.labels))
                    .collect()
            })
            .collect()
    }
}

/// The pre-Lie product {x, y} = [P(x), y] induced by a weight-zero
/// Rota-Baxter operator. The operator is re-checked first, so a corrupted
/// matrix is rejected instead of silently producing a non-pre-Lie table.
pub fn prelie_from_rb(g: &Arc<LieAlgebra>, p: &OperatorMatrix, zt: ZeroTest) -> Result<PreLie> {
    let weight = g.tag_zero();
    let report = check_rb(g, p, &weight)?;
    if let Some(&(i, j)) = report.failing_pairs(zt)?.first() {
        return Err(Error::NotRotaBaxter(i, j));
    }
    let dim = g.dim();
    let mut unit = vec![g.tag_zero(); dim];
    let mut c = Vec::with_capacity(dim);
    for i in 0..dim {
        let pi = p.apply_basis(i).to_vec();
        let mut row = Vec::with_capacity(dim);
        for j in 0..dim {
            unit[j] = g.tag_one();
            row.push(g.bracket_coords(&pi, &unit)?);
            unit[j] = g.tag_zero();
        }
        c.push(row);
    }
    PreLie::new(g.labels().to_vec(), c, zt)
}

/// The commutator Lie algebra of a pre-Lie algebra, [x, y] = {x,y} - {y,x}.
/// Antisymmetry and the Jacobi identity are revalidated at construction.
pub fn subadjacent(a: &PreLie, zt: ZeroTest) -> Result<Arc<LieAlgebra>> {
    let dim = a.dim();
    let mut c = vec![vec![vec![a.tag_zero(); dim]; dim]; dim];
    for i in 0..dim {
        for j in 0..dim {
            for k in 0..dim {
                c[i][j][k] = a.c[i][j][k].sub(&a.c[j][i][k])?;
            }
        }
    }
    LieAlgebra::new(a.labels.clone(), c, zt)
}

/// Left multiplication as a representation of the subadjacent algebra on
/// itself: the matrix of b_i sends b_j to {b_i, b_j}. Construction verifies
/// the commutation law [L_x, L_y] = L_{[x,y]} on every basis pair, so a
/// corrupted product table surfaces as a representation-law failure.
pub fn left_mult_rep(a: &PreLie, zt: ZeroTest) -> Result<Representation> {
    let g = subadjacent(a, zt)?;
    let dim = a.dim();
    let mats = (0..dim)
        .map(|i| {
            let mut m = vec![vec![a.tag_zero(); dim]; dim];
            for j in 0..dim {
                for k in 0..dim {
                    m[k][j] = a.c[i][j][k].clone();
                }
            }
            m
        })
        .collect();
    Representation::new(&g, a.labels.clone(), mats, zt)
}

/// Product table after a change of basis, rendered over labels e1..en.
pub fn characteristic_matrix_prelie(
    a: &PreLie,
    n: &Matrix,
    zt: ZeroTest,
) -> Result<Vec<Vec<String>>> {
    let labels = (1..=a.dim()).map(|k| format!("e{k}")).collect();
    Ok(a.change_basis(n, labels, zt)?.characteristic_matrix())
}

/// The canonical skew tensor sum_i (e_i (x) e_i* - e_i* (x) e_i) over the
/// semidirect product of the subadjacent algebra with its dual module under
/// the dual of left multiplication. For every pre-Lie algebra it solves the
/// classical Yang-Baxter equation there.
pub fn canonical_r(a: &PreLie, zt: ZeroTest) -> Result<Tensor2> {
    let rep = left_mult_rep(a, zt)?;
    let dual = rep.dual()?;
    let six = semidirect_product(rep.domain(), &dual)?;
    let n = a.dim();
    let one = six.tag_one();
    let mut terms = Vec::with_capacity(2 * n);
    for i in 0..n {
        terms.push(((i, n + i), one.clone()));
        terms.push(((n + i, i), one.neg()));
    }
    Tensor2::new(&six, terms)
}
