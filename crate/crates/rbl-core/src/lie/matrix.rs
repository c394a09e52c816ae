//! Dense matrix helpers over [`Scalar`]. Dimensions here are 3 or 6, so
//! simplicity wins over asymptotics throughout.

use crate::error::{Error, Result};
use crate::scalar::{Scalar, ZeroTest};

pub type Matrix = Vec<Vec<Scalar>>;

pub fn identity(n: usize) -> Matrix {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Scalar::one() } else { Scalar::zero() })
                .collect()
        })
        .collect()
}

pub fn zeros(rows: usize, cols: usize) -> Matrix {
    vec![vec![Scalar::zero(); cols]; rows]
}

pub fn dims(m: &Matrix) -> (usize, usize) {
    (m.len(), m.first().map_or(0, Vec::len))
}

pub fn is_square(m: &Matrix) -> bool {
    let (r, c) = dims(m);
    r == c && m.iter().all(|row| row.len() == c)
}

pub fn transpose(m: &Matrix) -> Matrix {
    let (r, c) = dims(m);
    (0..c).map(|j| (0..r).map(|i| m[i][j].clone()).collect()).collect()
}

pub fn neg(m: &Matrix) -> Matrix {
    m.iter().map(|row| row.iter().map(Scalar::neg).collect()).collect()
}

pub fn add(a: &Matrix, b: &Matrix) -> Result<Matrix> {
    if dims(a) != dims(b) {
        return Err(Error::DimensionMismatch(format!(
            "matrix add {:?} vs {:?}",
            dims(a),
            dims(b)
        )));
    }
    a.iter()
        .zip(b)
        .map(|(ra, rb)| ra.iter().zip(rb).map(|(x, y)| x.add(y)).collect())
        .collect()
}

pub fn sub(a: &Matrix, b: &Matrix) -> Result<Matrix> {
    add(a, &neg(b))
}

pub fn scale(m: &Matrix, k: &Scalar) -> Result<Matrix> {
    m.iter()
        .map(|row| row.iter().map(|x| x.mul(k)).collect())
        .collect()
}

pub fn mul(a: &Matrix, b: &Matrix) -> Result<Matrix> {
    let (ar, ac) = dims(a);
    let (br, bc) = dims(b);
    if ac != br {
        return Err(Error::DimensionMismatch(format!(
            "matrix mul {ar}x{ac} by {br}x{bc}"
        )));
    }
    let mut out = zeros(ar, bc);
    for i in 0..ar {
        for j in 0..bc {
            // Seed the sum with the first product so the backend tag of the
            // operands carries through.
            let mut acc = a[i][0].mul(&b[0][j])?;
            for k in 1..ac {
                acc = acc.mul_add(&a[i][k], &b[k][j])?;
            }
            out[i][j] = acc;
        }
    }
    Ok(out)
}

/// Row vector times matrix; the natural action for operators stored in the
/// row convention.
pub fn row_apply(x: &[Scalar], m: &Matrix) -> Result<Vec<Scalar>> {
    let (r, c) = dims(m);
    if x.len() != r {
        return Err(Error::DimensionMismatch(format!(
            "row of length {} times {r}x{c}",
            x.len()
        )));
    }
    (0..c)
        .map(|j| {
            let mut acc = x[0].mul(&m[0][j])?;
            for (i, xi) in x.iter().enumerate().skip(1) {
                acc = acc.mul_add(xi, &m[i][j])?;
            }
            Ok(acc)
        })
        .collect()
}

/// Matrix times column vector.
pub fn col_apply(m: &Matrix, x: &[Scalar]) -> Result<Vec<Scalar>> {
    let (r, c) = dims(m);
    if x.len() != c {
        return Err(Error::DimensionMismatch(format!(
            "{r}x{c} times column of length {}",
            x.len()
        )));
    }
    if c == 0 {
        return Ok(vec![Scalar::zero(); r]);
    }
    m.iter()
        .map(|row| {
            let mut acc = row[0].mul(&x[0])?;
            for (j, xj) in x.iter().enumerate().skip(1) {
                acc = acc.mul_add(&row[j], xj)?;
            }
            Ok(acc)
        })
        .collect()
}

pub fn trace(m: &Matrix) -> Result<Scalar> {
    let mut acc = m
        .first()
        .map(|row| row[0].clone())
        .unwrap_or_else(Scalar::zero);
    for (i, row) in m.iter().enumerate().skip(1) {
        acc = acc.add(&row[i])?;
    }
    Ok(acc)
}

/// Gauss-Jordan inverse with zero-test-aware pivoting.
pub fn inverse(m: &Matrix, zt: ZeroTest) -> Result<Matrix> {
    if !is_square(m) {
        return Err(Error::DimensionMismatch("inverse of non-square matrix".into()));
    }
    let n = m.len();
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut a = m.clone();
    // Seed the identity on the input's backend so numeric matrices invert.
    let one = m[0][0].one_like();
    let zero = m[0][0].zero_like();
    let mut inv: Matrix = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { one.clone() } else { zero.clone() })
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .find_map(|r| match zt.is_zero(&a[r][col]) {
                Ok(false) => Some(Ok(r)),
                Ok(true) => None,
                Err(e) => Some(Err(e)),
            })
            .transpose()?
            .ok_or(Error::SingularBasis)?;
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col].clone();
        for j in 0..n {
            a[col][j] = a[col][j].div(&p)?;
            inv[col][j] = inv[col][j].div(&p)?;
        }
        for r in 0..n {
            if r == col {
                continue;
            }
            let factor = a[r][col].clone();
            if zt.is_zero(&factor)? {
                continue;
            }
            for j in 0..n {
                a[r][j] = a[r][j].sub(&factor.mul(&a[col][j])?)?;
                inv[r][j] = inv[r][j].sub(&factor.mul(&inv[col][j])?)?;
            }
        }
    }
    Ok(inv)
}

/// Entrywise equality under a zero test.
pub fn eq(a: &Matrix, b: &Matrix, zt: ZeroTest) -> Result<bool> {
    if dims(a) != dims(b) {
        return Ok(false);
    }
    for (ra, rb) in a.iter().zip(b) {
        for (x, y) in ra.iter().zip(rb) {
            if !zt.eq(x, y)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

pub fn map_numeric(m: &Matrix) -> Result<Matrix> {
    m.iter()
        .map(|row| row.iter().map(Scalar::to_numeric).collect())
        .collect()
}

/// Build from integer entries; handy in tests and structure constants.
pub fn from_ints(rows: &[&[i64]]) -> Matrix {
    rows.iter()
        .map(|r| r.iter().map(|&n| Scalar::from_int(n)).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_times_self_is_identity() {
        let m = from_ints(&[&[1, 2, 0], &[0, 1, 0], &[3, 0, 1]]);
        let inv = inverse(&m, ZeroTest::Exact).unwrap();
        assert_eq!(mul(&m, &inv).unwrap(), identity(3));
        assert_eq!(mul(&inv, &m).unwrap(), identity(3));
    }

    #[test]
    fn singular_matrix_is_reported() {
        let m = from_ints(&[&[1, 2], &[2, 4]]);
        assert_eq!(inverse(&m, ZeroTest::Exact).unwrap_err(), Error::SingularBasis);
    }

    #[test]
    fn row_apply_matches_convention() {
        // Row convention: e_0 maps to the first row of the matrix.
        let m = from_ints(&[&[1, 2], &[3, 4]]);
        let e0 = vec![Scalar::one(), Scalar::zero()];
        assert_eq!(
            row_apply(&e0, &m).unwrap(),
            vec![Scalar::from_int(1), Scalar::from_int(2)]
        );
    }

    #[test]
    fn pivoting_handles_leading_zero() {
        let m = from_ints(&[&[0, 1], &[1, 0]]);
        let inv = inverse(&m, ZeroTest::Exact).unwrap();
        assert_eq!(inv, from_ints(&[&[0, 1], &[1, 0]]));
    }
}
