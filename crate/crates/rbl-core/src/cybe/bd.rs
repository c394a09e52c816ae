//! Eigenpair construction of skew solutions on sl2: pairs x, y with
//! [x,y] = y give r = x⊗y − y⊗x, and every such tensor lands in one of the
//! three families r1, r2, r3. The solver finds the eigenline for a given x,
//! the classifier names the family and extracts its parameters.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::lie::{bracket, same_algebra, sl2, LieAlgebra, Matrix, Vector};
use crate::scalar::{Scalar, ZeroTest};

use super::{r1, r2, r3, Tensor2};

fn ensure_sl2(alg: &Arc<LieAlgebra>) -> Result<()> {
    let ok = same_algebra(alg, &sl2())
        || (!alg.is_exact() && same_algebra(alg, &sl2().to_numeric()?));
    if ok {
        Ok(())
    } else {
        Err(Error::AlgebraMismatch(
            "eigenpair classification is defined on sl2 in the e, f, h basis".into(),
        ))
    }
}

/// Determinant of the linear system for [x,y] = y on sl2, written in the
/// coordinates x = x1 e + x2 f + x3 h:
///
///   (2 x3 − 1)(2 x3 + 1) + 4 x1 x2.
///
/// A nonzero eigenvector y exists exactly when this vanishes.
pub fn bd_discriminant(x: &Vector) -> Result<Scalar> {
    ensure_sl2(x.algebra())?;
    let c = x.coords();
    let one = c[0].one_like();
    let two = one.add(&one)?;
    let four = two.add(&two)?;
    let t = two.mul(&c[2])?;
    let quad = t.sub(&one)?.mul(&t.add(&one)?)?;
    quad.add(&four.mul(&c[0])?.mul(&c[1])?)
}

/// Row-reduced nullspace basis, one vector per free column, each scaled so
/// its first nonzero coordinate is 1.
fn nullspace(mut m: Matrix, zt: ZeroTest) -> Result<Vec<Vec<Scalar>>> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut next_row = 0;
    for col in 0..cols {
        let Some(pivot_row) = (next_row..rows)
            .find_map(|r| match zt.is_zero(&m[r][col]) {
                Ok(false) => Some(Ok(r)),
                Ok(true) => None,
                Err(e) => Some(Err(e)),
            })
            .transpose()?
        else {
            continue;
        };
        m.swap(next_row, pivot_row);
        let inv = m[next_row][col].inv()?;
        for c in col..cols {
            m[next_row][c] = m[next_row][c].mul(&inv)?;
        }
        for r in 0..rows {
            if r == next_row || m[r][col].is_structural_zero() {
                continue;
            }
            let factor = m[r][col].clone();
            for c in col..cols {
                m[r][c] = m[r][c].sub(&factor.mul(&m[next_row][c])?)?;
            }
        }
        pivots.push((next_row, col));
        next_row += 1;
        if next_row == rows {
            break;
        }
    }
    let pivot_cols: Vec<usize> = pivots.iter().map(|&(_, c)| c).collect();
    let mut basis = Vec::new();
    for free in (0..cols).filter(|c| !pivot_cols.contains(c)) {
        let mut v: Vec<Scalar> = m
            .first()
            .map(|row| vec![row[0].zero_like(); cols])
            .unwrap_or_default();
        v[free] = v[free].one_like();
        for &(pr, pc) in &pivots {
            v[pc] = m[pr][free].neg();
        }
        let lead = v
            .iter()
            .map(|s| zt.is_zero(s))
            .collect::<Result<Vec<_>>>()?
            .iter()
            .position(|z| !z);
        if let Some(i) = lead {
            let scale = v[i].inv()?;
            for s in v.iter_mut() {
                *s = s.mul(&scale)?;
            }
        }
        basis.push(v);
    }
    Ok(basis)
}

/// Basis of the space of y with [x,y] = y, i.e. the eigenvalue-1 eigenspace
/// of ad(x). Empty when only y = 0 solves the system. Works over any
/// algebra; on sl2 the system is precisely
///
///   (2 x3 − 1) y1 − 2 x1 y3 = 0,
///   2 x2 y3 − (2 x3 + 1) y2 = 0,
///   x1 y2 − x2 y1 − y3 = 0.
pub fn bd_solve(x: &Vector, zt: ZeroTest) -> Result<Vec<Vector>> {
    let alg = x.algebra();
    let mut m = alg.ad(x.coords())?;
    for (i, row) in m.iter_mut().enumerate() {
        let one = row[i].one_like();
        row[i] = row[i].sub(&one)?;
    }
    nullspace(m, zt)?
        .into_iter()
        .map(|coords| Vector::new(alg, coords))
        .collect()
}

/// r = x⊗y − y⊗x for an eigenpair [x,y] = y. Rejects pairs that do not
/// satisfy the eigen relation.
pub fn bd_tensor(x: &Vector, y: &Vector, zt: ZeroTest) -> Result<Tensor2> {
    if !bracket(x, y)?.sub(y)?.is_zero(zt)? {
        return Err(Error::NotEigenpair);
    }
    let n = x.algebra().dim();
    let mut terms = Vec::with_capacity(2 * n * n);
    for i in 0..n {
        for j in 0..n {
            terms.push(((i, j), x.coords()[i].mul(&y.coords()[j])?));
            terms.push(((i, j), y.coords()[i].mul(&x.coords()[j])?.neg()));
        }
    }
    Tensor2::new(x.algebra(), terms)
}

/// Family tag and parameters for a classified eigenpair tensor.
#[derive(Clone, Debug, PartialEq)]
pub enum BdClass {
    R1 { k: Scalar },
    R2 { k: Scalar },
    R3 { k: Scalar, a: Scalar },
}

impl BdClass {
    /// The named family member; equals x⊗y − y⊗x for the classified pair.
    pub fn tensor(&self) -> Result<Tensor2> {
        match self {
            BdClass::R1 { k } => r1(k),
            BdClass::R2 { k } => r2(k),
            BdClass::R3 { k, a } => r3(k, a),
        }
    }
}

impl fmt::Display for BdClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BdClass::R1 { k } => write!(f, "r1 with k = {k}"),
            BdClass::R2 { k } => write!(f, "r2 with k = {k}"),
            BdClass::R3 { k, a } => write!(f, "r3 with k = {k}, a = {a}"),
        }
    }
}

/// Names the family of x⊗y − y⊗x for an eigenpair with y ≠ 0 and extracts
/// parameters that reproduce the tensor exactly:
///
/// * x1 = 0, x3 = 1/2: r3 with k = y1, a = x2, degenerating to r1 with
///   k = −y1/2 when x2 = 0;
/// * x1 = 0, x3 = −1/2: r2 with k = y2/2;
/// * x1 ≠ 0, x3 ≠ 1/2: r3 with k = y1 and a = (1 − 2 x3)/(2 x1), the sign
///   forced by the f⊗e − e⊗f coefficient of the tensor;
/// * x1 ≠ 0, x3 = 1/2: r1 with k = −y1/2.
///
/// NoMatch is unreachable for genuine eigenpairs: x1 = 0 forces x3 = ±1/2
/// whenever a nonzero eigenvector exists.
pub fn bd_classify(x: &Vector, y: &Vector, zt: ZeroTest) -> Result<BdClass> {
    ensure_sl2(x.algebra())?;
    if y.is_zero(zt)? || !bracket(x, y)?.sub(y)?.is_zero(zt)? {
        return Err(Error::NotEigenpair);
    }
    let xc = x.coords();
    let yc = y.coords();
    let one = xc[0].one_like();
    let two = one.add(&one)?;
    let x3_doubled = two.mul(&xc[2])?;
    let at_half = zt.is_zero(&x3_doubled.sub(&one)?)?;
    if zt.is_zero(&xc[0])? {
        if at_half {
            if zt.is_zero(&xc[1])? {
                Ok(BdClass::R1 {
                    k: yc[0].neg().div(&two)?,
                })
            } else {
                Ok(BdClass::R3 {
                    k: yc[0].clone(),
                    a: xc[1].clone(),
                })
            }
        } else if zt.is_zero(&x3_doubled.add(&one)?)? {
            Ok(BdClass::R2 {
                k: yc[1].div(&two)?,
            })
        } else {
            Err(Error::NoMatch)
        }
    } else if at_half {
        Ok(BdClass::R1 {
            k: yc[0].neg().div(&two)?,
        })
    } else {
        Ok(BdClass::R3 {
            k: yc[0].clone(),
            a: one.sub(&x3_doubled)?.div(&two.mul(&xc[0])?)?,
        })
    }
}
