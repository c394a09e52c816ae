//! Lie algebras given by structure constants, with representations and
//! semidirect products. Antisymmetry and the Jacobi identity are validated
//! whenever an algebra is constructed, so everything downstream may assume
//! them.

pub mod matrix;
mod operator;
mod rep;

pub use matrix::Matrix;
pub use operator::{change_of_basis, OperatorMatrix};
pub use rep::{semidirect_product, Representation};

use std::fmt;
use std::sync::Arc;

use once_cell::sync::Lazy;

use crate::error::{Error, Result};
use crate::scalar::{Scalar, ZeroTest};

#[derive(Clone, Debug, PartialEq)]
pub struct LieAlgebra {
    labels: Vec<String>,
    /// c[i][j] = coordinates of [b_i, b_j] in the basis.
    c: Vec<Vec<Vec<Scalar>>>,
}

/// Outcome of the exhaustive Jacobi check.
#[derive(Clone, Debug, PartialEq)]
pub enum JacobiVerdict {
    Holds,
    /// First basis triple (i, j, k) whose Jacobi sum is nonzero.
    FailsAt(usize, usize, usize),
}

impl LieAlgebra {
    /// Validates antisymmetry and Jacobi before accepting the table.
    pub fn new(
        labels: Vec<String>,
        c: Vec<Vec<Vec<Scalar>>>,
        zt: ZeroTest,
    ) -> Result<Arc<Self>> {
        let dim = labels.len();
        if dim == 0 {
            return Err(Error::DimensionMismatch("empty basis".into()));
        }
        if c.len() != dim || c.iter().any(|row| row.len() != dim)
            || c.iter().flatten().any(|v| v.len() != dim)
        {
            return Err(Error::DimensionMismatch(format!(
                "structure table does not match dimension {dim}"
            )));
        }
        let alg = LieAlgebra { labels, c };
        for i in 0..dim {
            for j in i..dim {
                for k in 0..dim {
                    let s = alg.c[i][j][k].add(&alg.c[j][i][k])?;
                    if !zt.is_zero(&s)? {
                        return Err(Error::NotLieAlgebra(format!(
                            "antisymmetry fails on ({}, {})",
                            alg.labels[i], alg.labels[j]
                        )));
                    }
                }
            }
        }
        match alg.check_jacobi(zt)? {
            JacobiVerdict::Holds => Ok(Arc::new(alg)),
            JacobiVerdict::FailsAt(i, j, k) => Err(Error::NotLieAlgebra(format!(
                "Jacobi fails on ({}, {}, {})",
                alg.labels[i], alg.labels[j], alg.labels[k]
            ))),
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

    /// Coordinates of [b_i, b_j].
    pub fn basis_bracket(&self, i: usize, j: usize) -> &[Scalar] {
        &self.c[i][j]
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.c[i][j][k]
    }

    /// Whether the structure constants live in the exact backend.
    pub fn is_exact(&self) -> bool {
        self.c[0][0][0].is_exact()
    }

    pub(crate) fn tag_zero(&self) -> Scalar {
        self.c[0][0][0].zero_like()
    }

    pub(crate) fn tag_one(&self) -> Scalar {
        self.c[0][0][0].one_like()
    }

    /// Bracket on raw coordinate slices.
    pub fn bracket_coords(&self, x: &[Scalar], y: &[Scalar]) -> Result<Vec<Scalar>> {
        let dim = self.dim();
        if x.len() != dim || y.len() != dim {
            return Err(Error::DimensionMismatch(format!(
                "vectors of length {} and {} in a {dim}-dimensional algebra",
                x.len(),
                y.len()
            )));
        }
        let mut out = vec![self.tag_zero(); dim];
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
                    if !self.c[i][j][k].is_structural_zero() {
                        out[k] = out[k].add(&xy.mul(&self.c[i][j][k])?)?;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Exhaustive Jacobi check over basis triples; reports the first
    /// failing triple.
    pub fn check_jacobi(&self, zt: ZeroTest) -> Result<JacobiVerdict> {
        let dim = self.dim();
        for i in 0..dim {
            for j in (i + 1)..dim {
                for k in (j + 1)..dim {
                    for l in 0..dim {
                        let mut sum = self.tag_zero();
                        for m in 0..dim {
                            sum = sum.add(&self.c[i][j][m].mul(&self.c[m][k][l])?)?;
                            sum = sum.add(&self.c[j][k][m].mul(&self.c[m][i][l])?)?;
                            sum = sum.add(&self.c[k][i][m].mul(&self.c[m][j][l])?)?;
                        }
                        if !zt.is_zero(&sum)? {
                            return Ok(JacobiVerdict::FailsAt(i, j, k));
                        }
                    }
                }
            }
        }
        Ok(JacobiVerdict::Holds)
    }

    /// Matrix of ad x acting on column coordinates: column j holds the
    /// coordinates of [x, b_j].
    pub fn ad(&self, x: &[Scalar]) -> Result<Matrix> {
        let dim = self.dim();
        let mut m = matrix::zeros(dim, dim);
        for j in 0..dim {
            let mut basis = vec![self.tag_zero(); dim];
            basis[j] = self.tag_one();
            let col = self.bracket_coords(x, &basis)?;
            for (k, v) in col.into_iter().enumerate() {
                m[k][j] = v;
            }
        }
        Ok(m)
    }

    /// Killing form K(x, y) = trace(ad x composed with ad y) on coordinates.
    pub fn killing_coords(&self, x: &[Scalar], y: &[Scalar]) -> Result<Scalar> {
        matrix::trace(&matrix::mul(&self.ad(x)?, &self.ad(y)?)?)
    }

    /// Re-express the algebra in a new basis whose rows are given in old
    /// coordinates. Revalidates the result.
    pub fn change_basis(
        &self,
        n: &Matrix,
        labels: Vec<String>,
        zt: ZeroTest,
    ) -> Result<Arc<LieAlgebra>> {
        let dim = self.dim();
        if labels.len() != dim || n.len() != dim {
            return Err(Error::DimensionMismatch(
                "basis matrix does not match dimension".into(),
            ));
        }
        let n_inv = matrix::inverse(n, zt)?;
        let mut c = vec![vec![vec![Scalar::zero(); dim]; dim]; dim];
        for i in 0..dim {
            for j in 0..dim {
                // [b'_i, b'_j] in old coordinates, then back to new ones.
                let old = self.bracket_coords(&n[i], &n[j])?;
                c[i][j] = matrix::row_apply(&old, &n_inv)?;
            }
        }
        LieAlgebra::new(labels, c, zt)
    }

    /// Numeric image of the algebra. Skips revalidation: the exact table
    /// already passed, and its float image inherits the identities.
    pub fn to_numeric(self: &Arc<Self>) -> Result<Arc<LieAlgebra>> {
        if !self.is_exact() {
            return Ok(self.clone());
        }
        let c = self
            .c
            .iter()
            .map(|row| {
                row.iter()
                    .map(|v| v.iter().map(Scalar::to_numeric).collect())
                    .collect::<Result<Vec<Vec<Scalar>>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Arc::new(LieAlgebra {
            labels: self.labels.clone(),
            c,
        }))
    }

    /// Bracket table with entries as basis vectors of the algebra itself:
    /// entry (i, j) holds the coordinates of [b_i, b_j].
    pub fn characteristic_matrix(self: &Arc<Self>) -> Vec<Vec<Vector>> {
        (0..self.dim())
            .map(|i| {
                (0..self.dim())
                    .map(|j| Vector {
                        alg: self.clone(),
                        coords: self.c[i][j].clone(),
                    })
                    .collect()
            })
            .collect()
    }
}

pub fn same_algebra(a: &Arc<LieAlgebra>, b: &Arc<LieAlgebra>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

/// An element of a Lie algebra, as coordinates in its basis.
#[derive(Clone, Debug, PartialEq)]
pub struct Vector {
    alg: Arc<LieAlgebra>,
    coords: Vec<Scalar>,
}

impl Vector {
    pub fn new(alg: &Arc<LieAlgebra>, coords: Vec<Scalar>) -> Result<Self> {
        if coords.len() != alg.dim() {
            return Err(Error::DimensionMismatch(format!(
                "{} coordinates in a {}-dimensional algebra",
                coords.len(),
                alg.dim()
            )));
        }
        let mut tags = coords.iter().map(Scalar::is_exact);
        if let Some(first) = tags.next() {
            if tags.any(|t| t != first) {
                return Err(Error::TagMismatch);
            }
        }
        Ok(Vector {
            alg: alg.clone(),
            coords,
        })
    }

    /// Zero vector, tagged to match the algebra's backend.
    pub fn zero(alg: &Arc<LieAlgebra>) -> Self {
        Vector {
            alg: alg.clone(),
            coords: vec![alg.tag_zero(); alg.dim()],
        }
    }

    pub fn basis(alg: &Arc<LieAlgebra>, i: usize) -> Self {
        let mut coords = vec![alg.tag_zero(); alg.dim()];
        coords[i] = alg.tag_one();
        Vector {
            alg: alg.clone(),
            coords,
        }
    }

    /// Basis element looked up by label.
    pub fn by_label(alg: &Arc<LieAlgebra>, label: &str) -> Result<Self> {
        let i = alg
            .labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::Invalid(format!("no basis element labeled {label:?}")))?;
        Ok(Vector::basis(alg, i))
    }

    pub fn algebra(&self) -> &Arc<LieAlgebra> {
        &self.alg
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    pub fn add(&self, rhs: &Vector) -> Result<Vector> {
        self.zip_with(rhs, Scalar::add)
    }

    pub fn sub(&self, rhs: &Vector) -> Result<Vector> {
        self.zip_with(rhs, Scalar::sub)
    }

    pub fn scale(&self, k: &Scalar) -> Result<Vector> {
        Ok(Vector {
            alg: self.alg.clone(),
            coords: self
                .coords
                .iter()
                .map(|x| x.mul(k))
                .collect::<Result<_>>()?,
        })
    }

    pub fn neg(&self) -> Vector {
        Vector {
            alg: self.alg.clone(),
            coords: self.coords.iter().map(Scalar::neg).collect(),
        }
    }

    pub fn is_zero(&self, zt: ZeroTest) -> Result<bool> {
        for x in &self.coords {
            if !zt.is_zero(x)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Converts both the coordinates and the underlying algebra, so the
    /// result brackets cleanly in the numeric backend.
    pub fn to_numeric(&self) -> Result<Vector> {
        Ok(Vector {
            alg: self.alg.to_numeric()?,
            coords: self
                .coords
                .iter()
                .map(Scalar::to_numeric)
                .collect::<Result<_>>()?,
        })
    }

    fn zip_with(
        &self,
        rhs: &Vector,
        f: impl Fn(&Scalar, &Scalar) -> Result<Scalar>,
    ) -> Result<Vector> {
        if !same_algebra(&self.alg, &rhs.alg) {
            return Err(Error::AlgebraMismatch(
                "vectors from different algebras".into(),
            ));
        }
        Ok(Vector {
            alg: self.alg.clone(),
            coords: self
                .coords
                .iter()
                .zip(&rhs.coords)
                .map(|(x, y)| f(x, y))
                .collect::<Result<_>>()?,
        })
    }
}

impl fmt::Display for Vector {
    /// Renders as a linear combination of basis labels, e.g. "2e - f*".
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", render_combination(&self.coords, self.alg.labels()))
    }
}

/// Coordinates rendered as a signed combination of labels, e.g. "2*e - f*";
/// the zero vector renders as "0".
pub(crate) fn render_combination<S: AsRef<str>>(coords: &[Scalar], labels: &[S]) -> String {
    let mut out = String::new();
    let mut first = true;
    for (i, x) in coords.iter().enumerate() {
        if x.is_structural_zero() {
            continue;
        }
        let label = labels[i].as_ref();
        let piece = if x.is_one() {
            label.to_string()
        } else if x.neg().is_one() {
            format!("-{label}")
        } else {
            let cs = x.to_string();
            if cs[1..].contains('+') || cs[1..].contains('-') || cs.contains('|') {
                format!("({cs})*{label}")
            } else {
                format!("{cs}*{label}")
            }
        };
        if first {
            out.push_str(&piece);
            first = false;
        } else if let Some(stripped) = piece.strip_prefix('-') {
            out.push_str(" - ");
            out.push_str(stripped);
        } else {
            out.push_str(" + ");
            out.push_str(&piece);
        }
    }
    if first {
        out.push('0');
    }
    out
}

/// Lie bracket of two vectors of the same algebra.
pub fn bracket(x: &Vector, y: &Vector) -> Result<Vector> {
    if !same_algebra(&x.alg, &y.alg) {
        return Err(Error::AlgebraMismatch(
            "bracket of vectors from different algebras".into(),
        ));
    }
    Ok(Vector {
        alg: x.alg.clone(),
        coords: x.alg.bracket_coords(&x.coords, &y.coords)?,
    })
}

/// Killing form K(x, y) = trace(ad x ∘ ad y).
pub fn killing_form(x: &Vector, y: &Vector) -> Result<Scalar> {
    if !same_algebra(&x.alg, &y.alg) {
        return Err(Error::AlgebraMismatch(
            "Killing form of vectors from different algebras".into(),
        ));
    }
    x.alg.killing_coords(&x.coords, &y.coords)
}

/// sl(2,C) in the Cartan-Weyl basis (e, f, h) with [e,f] = h, [h,e] = 2e,
/// [h,f] = -2f.
pub fn sl2() -> Arc<LieAlgebra> {
    static SL2: Lazy<Arc<LieAlgebra>> = Lazy::new(|| {
        let z = || vec![Scalar::zero(); 3];
        let v = |a: i64, b: i64, c: i64| {
            vec![Scalar::from_int(a), Scalar::from_int(b), Scalar::from_int(c)]
        };
        let c = vec![
            // rows: [e, -], [f, -], [h, -]
            vec![z(), v(0, 0, 1), v(-2, 0, 0)],
            vec![v(0, 0, -1), z(), v(0, 2, 0)],
            vec![v(2, 0, 0), v(0, -2, 0), z()],
        ];
        LieAlgebra::new(
            vec!["e".into(), "f".into(), "h".into()],
            c,
            ZeroTest::Exact,
        )
        .expect("sl2 structure constants")
    });
    SL2.clone()
}

/// The 6-dimensional semidirect sum of sl(2,C) with its dual under the
/// coadjoint representation, basis (e, f, h, e*, f*, h*).
pub fn sl2_semidirect() -> Arc<LieAlgebra> {
    static SL2_SD: Lazy<Arc<LieAlgebra>> = Lazy::new(|| {
        let g = sl2();
        let coad = Representation::adjoint(&g)
            .and_then(|ad| ad.dual())
            .expect("coadjoint representation of sl2");
        semidirect_product(&g, &coad).expect("sl2 semidirect sum")
    });
    SL2_SD.clone()
}
