//! Tensors over g⊗g and g⊗g⊗g and the classical Yang-Baxter machinery built
//! on them: the left-hand-side expansion, a checker with a failure witness,
//! the lift of a linear operator to a skew tensor over a semidirect product,
//! the three skew solution families on sl2, and the cobracket they induce.
//!
//! Everything is sparse: a tensor is a map from index tuples to scalars and
//! never stores a structural zero, so symbolic coefficients stay small and
//! iteration order (and therefore every reduction) is deterministic.

mod bd;

pub use bd::{bd_classify, bd_discriminant, bd_solve, bd_tensor, BdClass};

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::lie::{same_algebra, sl2, sl2_semidirect, LieAlgebra, OperatorMatrix, Vector};
use crate::scalar::{Scalar, ZeroTest};

/// Element of g⊗g: r = Σ coeffs[(i,j)] b_i⊗b_j over the algebra's basis.
#[derive(Clone, Debug, PartialEq)]
pub struct Tensor2 {
    alg: Arc<LieAlgebra>,
    coeffs: BTreeMap<(usize, usize), Scalar>,
}

/// Element of g⊗g⊗g, stored the same way with triple keys.
#[derive(Clone, Debug, PartialEq)]
pub struct Tensor3 {
    alg: Arc<LieAlgebra>,
    coeffs: BTreeMap<(usize, usize, usize), Scalar>,
}

fn check_tag(alg: &Arc<LieAlgebra>, coeffs: impl Iterator<Item = bool>) -> Result<()> {
    for is_exact in coeffs {
        if is_exact != alg.is_exact() {
            return Err(Error::TagMismatch);
        }
    }
    Ok(())
}

fn accumulate<K: Ord + Copy>(
    map: &mut BTreeMap<K, Scalar>,
    key: K,
    value: Scalar,
) -> Result<()> {
    if value.is_structural_zero() {
        return Ok(());
    }
    match map.remove(&key) {
        None => {
            map.insert(key, value);
        }
        Some(old) => {
            let sum = old.add(&value)?;
            if !sum.is_structural_zero() {
                map.insert(key, sum);
            }
        }
    }
    Ok(())
}

impl Tensor2 {
    /// Builds a tensor from (index pair, coefficient) terms. Repeated keys
    /// accumulate; structural zeros are dropped; coefficients must live on
    /// the same scalar backend as the algebra.
    pub fn new(
        alg: &Arc<LieAlgebra>,
        terms: impl IntoIterator<Item = ((usize, usize), Scalar)>,
    ) -> Result<Self> {
        let n = alg.dim();
        let mut coeffs = BTreeMap::new();
        for ((i, j), c) in terms {
            if i >= n || j >= n {
                return Err(Error::DimensionMismatch(format!(
                    "tensor index ({i}, {j}) out of range for dimension {n}"
                )));
            }
            accumulate(&mut coeffs, (i, j), c)?;
        }
        check_tag(alg, coeffs.values().map(Scalar::is_exact))?;
        Ok(Tensor2 {
            alg: alg.clone(),
            coeffs,
        })
    }

    pub fn zero(alg: &Arc<LieAlgebra>) -> Self {
        Tensor2 {
            alg: alg.clone(),
            coeffs: BTreeMap::new(),
        }
    }

    pub fn algebra(&self) -> &Arc<LieAlgebra> {
        &self.alg
    }

    /// Coefficient at (i, j), a tag-matched zero when the entry is absent.
    pub fn coeff(&self, i: usize, j: usize) -> Scalar {
        self.coeffs
            .get(&(i, j))
            .cloned()
            .unwrap_or_else(|| self.alg.tag_zero())
    }

    /// Stored (nonzero) terms in sorted index order.
    pub fn terms(&self) -> impl Iterator<Item = ((usize, usize), &Scalar)> {
        self.coeffs.iter().map(|(k, v)| (*k, v))
    }

    pub fn support_len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self, zt: ZeroTest) -> Result<bool> {
        for c in self.coeffs.values() {
            if !zt.is_zero(c)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn merge(&self, rhs: &Tensor2, negate_rhs: bool) -> Result<Tensor2> {
        if !same_algebra(&self.alg, &rhs.alg) {
            return Err(Error::AlgebraMismatch(
                "tensors over different algebras".into(),
            ));
        }
        let mut coeffs = self.coeffs.clone();
        for (k, c) in &rhs.coeffs {
            let c = if negate_rhs { c.neg() } else { c.clone() };
            accumulate(&mut coeffs, *k, c)?;
        }
        Ok(Tensor2 {
            alg: self.alg.clone(),
            coeffs,
        })
    }

    pub fn add(&self, rhs: &Tensor2) -> Result<Tensor2> {
        self.merge(rhs, false)
    }

    pub fn sub(&self, rhs: &Tensor2) -> Result<Tensor2> {
        self.merge(rhs, true)
    }

    pub fn neg(&self) -> Tensor2 {
        Tensor2 {
            alg: self.alg.clone(),
            coeffs: self
                .coeffs
                .iter()
                .map(|(k, c)| (*k, c.neg()))
                .collect(),
        }
    }

    pub fn scale(&self, k: &Scalar) -> Result<Tensor2> {
        let mut coeffs = BTreeMap::new();
        for (key, c) in &self.coeffs {
            accumulate(&mut coeffs, *key, c.mul(k)?)?;
        }
        check_tag(&self.alg, coeffs.values().map(Scalar::is_exact))?;
        Ok(Tensor2 {
            alg: self.alg.clone(),
            coeffs,
        })
    }

    /// Swaps the two tensor slots: Σ c_ij b_i⊗b_j ↦ Σ c_ij b_j⊗b_i.
    pub fn transpose21(&self) -> Tensor2 {
        Tensor2 {
            alg: self.alg.clone(),
            coeffs: self
                .coeffs
                .iter()
                .map(|(&(i, j), c)| ((j, i), c.clone()))
                .collect(),
        }
    }

    /// True when swapping the slots negates the tensor.
    pub fn is_skew(&self, zt: ZeroTest) -> Result<bool> {
        self.transpose21().add(self)?.is_zero(zt)
    }

    pub fn to_numeric(&self) -> Result<Tensor2> {
        let alg = self.alg.to_numeric()?;
        let mut coeffs = BTreeMap::new();
        for (k, c) in &self.coeffs {
            accumulate(&mut coeffs, *k, c.to_numeric()?)?;
        }
        Ok(Tensor2 { alg, coeffs })
    }
}

impl Tensor3 {
    pub fn new(
        alg: &Arc<LieAlgebra>,
        terms: impl IntoIterator<Item = ((usize, usize, usize), Scalar)>,
    ) -> Result<Self> {
        let n = alg.dim();
        let mut coeffs = BTreeMap::new();
        for ((i, j, k), c) in terms {
            if i >= n || j >= n || k >= n {
                return Err(Error::DimensionMismatch(format!(
                    "tensor index ({i}, {j}, {k}) out of range for dimension {n}"
                )));
            }
            accumulate(&mut coeffs, (i, j, k), c)?;
        }
        check_tag(alg, coeffs.values().map(Scalar::is_exact))?;
        Ok(Tensor3 {
            alg: alg.clone(),
            coeffs,
        })
    }

    pub fn zero(alg: &Arc<LieAlgebra>) -> Self {
        Tensor3 {
            alg: alg.clone(),
            coeffs: BTreeMap::new(),
        }
    }

    pub fn algebra(&self) -> &Arc<LieAlgebra> {
        &self.alg
    }

    pub fn coeff(&self, i: usize, j: usize, k: usize) -> Scalar {
        self.coeffs
            .get(&(i, j, k))
            .cloned()
            .unwrap_or_else(|| self.alg.tag_zero())
    }

    pub fn terms(&self) -> impl Iterator<Item = ((usize, usize, usize), &Scalar)> {
        self.coeffs.iter().map(|(k, v)| (*k, v))
    }

    pub fn support_len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self, zt: ZeroTest) -> Result<bool> {
        for c in self.coeffs.values() {
            if !zt.is_zero(c)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn merge(&self, rhs: &Tensor3, negate_rhs: bool) -> Result<Tensor3> {
        if !same_algebra(&self.alg, &rhs.alg) {
            return Err(Error::AlgebraMismatch(
                "tensors over different algebras".into(),
            ));
        }
        let mut coeffs = self.coeffs.clone();
        for (k, c) in &rhs.coeffs {
            let c = if negate_rhs { c.neg() } else { c.clone() };
            accumulate(&mut coeffs, *k, c)?;
        }
        Ok(Tensor3 {
            alg: self.alg.clone(),
            coeffs,
        })
    }

    pub fn add(&self, rhs: &Tensor3) -> Result<Tensor3> {
        self.merge(rhs, false)
    }

    pub fn sub(&self, rhs: &Tensor3) -> Result<Tensor3> {
        self.merge(rhs, true)
    }

    pub fn neg(&self) -> Tensor3 {
        Tensor3 {
            alg: self.alg.clone(),
            coeffs: self
                .coeffs
                .iter()
                .map(|(k, c)| (*k, c.neg()))
                .collect(),
        }
    }

    /// First stored coefficient that the zero test rejects, in sorted index
    /// order, along with its index triple.
    pub fn first_nonzero(&self, zt: ZeroTest) -> Result<Option<((usize, usize, usize), Scalar)>> {
        for (k, c) in &self.coeffs {
            if !zt.is_zero(c)? {
                return Ok(Some((*k, c.clone())));
            }
        }
        Ok(None)
    }
}

fn render_terms(
    f: &mut fmt::Formatter<'_>,
    pieces: impl Iterator<Item = (Scalar, String)>,
) -> fmt::Result {
    let mut first = true;
    for (c, basis) in pieces {
        let piece = if c.is_one() {
            basis
        } else if c.neg().is_one() {
            format!("-{basis}")
        } else {
            let cs = c.to_string();
            if cs[1..].contains('+') || cs[1..].contains('-') || cs.contains('|') {
                format!("({cs})*{basis}")
            } else {
                format!("{cs}*{basis}")
            }
        };
        if first {
            write!(f, "{piece}")?;
            first = false;
        } else if let Some(stripped) = piece.strip_prefix('-') {
            write!(f, " - {stripped}")?;
        } else {
            write!(f, " + {piece}")?;
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl fmt::Display for Tensor2 {
    /// Renders as a sum of basis tensors, e.g. "h⊗f* - f*⊗h".
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        render_terms(
            f,
            self.coeffs.iter().map(|(&(i, j), c)| {
                (
                    c.clone(),
                    format!("{}⊗{}", self.alg.label(i), self.alg.label(j)),
                )
            }),
        )
    }
}

impl fmt::Display for Tensor3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        render_terms(
            f,
            self.coeffs.iter().map(|(&(i, j, k), c)| {
                (
                    c.clone(),
                    format!(
                        "{}⊗{}⊗{}",
                        self.alg.label(i),
                        self.alg.label(j),
                        self.alg.label(k)
                    ),
                )
            }),
        )
    }
}

/// Left-hand side of the classical Yang-Baxter equation,
/// [r12, r13] + [r12, r23] + [r13, r23], expanded summand pair by summand
/// pair. Each commutator of the pairwise embeddings lands back in the
/// algebra in one slot, so the result is an honest element of g⊗g⊗g:
/// for summands a_p⊗b_p and a_q⊗b_q the three contributions are
/// [a_p,a_q]⊗b_p⊗b_q, a_p⊗[b_p,a_q]⊗b_q and a_p⊗a_q⊗[b_p,b_q].
pub fn cybe_lhs(r: &Tensor2) -> Result<Tensor3> {
    let alg = &r.alg;
    let mut acc: BTreeMap<(usize, usize, usize), Scalar> = BTreeMap::new();
    for (&(p, q), c) in &r.coeffs {
        for (&(p2, q2), c2) in &r.coeffs {
            let w = c.mul(c2)?;
            for (k, s) in alg.basis_bracket(p, p2).iter().enumerate() {
                if !s.is_structural_zero() {
                    accumulate(&mut acc, (k, q, q2), s.mul(&w)?)?;
                }
            }
            for (k, s) in alg.basis_bracket(q, p2).iter().enumerate() {
                if !s.is_structural_zero() {
                    accumulate(&mut acc, (p, k, q2), s.mul(&w)?)?;
                }
            }
            for (k, s) in alg.basis_bracket(q, q2).iter().enumerate() {
                if !s.is_structural_zero() {
                    accumulate(&mut acc, (p, p2, k), s.mul(&w)?)?;
                }
            }
        }
    }
    Ok(Tensor3 {
        alg: alg.clone(),
        coeffs: acc,
    })
}

/// Outcome of a Yang-Baxter check. On failure carries the first offending
/// coefficient of the expanded left-hand side in sorted index order.
#[derive(Clone, Debug, PartialEq)]
pub enum CybeVerdict {
    Solves,
    FailsAt {
        index: (usize, usize, usize),
        coeff: Scalar,
    },
}

impl CybeVerdict {
    pub fn holds(&self) -> bool {
        matches!(self, CybeVerdict::Solves)
    }
}

/// Decides whether r solves the classical Yang-Baxter equation. For exact
/// (including symbolic) coefficients use `ZeroTest::Exact`: the verdict then
/// means the left-hand side vanishes identically.
pub fn check_cybe(r: &Tensor2, zt: ZeroTest) -> Result<CybeVerdict> {
    match cybe_lhs(r)?.first_nonzero(zt)? {
        None => Ok(CybeVerdict::Solves),
        Some((index, coeff)) => Ok(CybeVerdict::FailsAt { index, coeff }),
    }
}

/// Identifies a linear map P: V → g with the tensor Σ_i P(v_i) ⊗ v_i* inside
/// (g ⋉ V*)⊗(g ⋉ V*). The ambient algebra must list the g-basis first and
/// the dual basis second, and its first block must bracket exactly like the
/// operator's algebra; the semidirect products built by this crate do.
pub fn lift_operator(p: &OperatorMatrix, ambient: &Arc<LieAlgebra>) -> Result<Tensor2> {
    let g = p.algebra();
    let n = g.dim();
    if ambient.dim() != 2 * n {
        return Err(Error::DimensionMismatch(format!(
            "ambient dimension {} is not twice the operator's dimension {n}",
            ambient.dim()
        )));
    }
    for i in 0..n {
        for j in 0..n {
            let inner = ambient.basis_bracket(i, j);
            let base = g.basis_bracket(i, j);
            let extends = inner[..n] == base[..]
                && inner[n..].iter().all(Scalar::is_structural_zero);
            if !extends {
                return Err(Error::AlgebraMismatch(format!(
                    "ambient algebra does not extend the operator's algebra at basis pair ({i}, {j})"
                )));
            }
        }
    }
    let mut terms = Vec::new();
    for i in 0..n {
        for j in 0..n {
            terms.push(((j, n + i), p.entry(i, j).clone()));
        }
    }
    Tensor2::new(ambient, terms)
}

/// Lifts an operator on sl2 to r = P̂ − P̂²¹ over sl2 ⋉ sl2*, which is skew by
/// construction and solves the Yang-Baxter equation exactly when P satisfies
/// the Rota-Baxter identity of weight zero. Operators on other algebras get
/// a freshly built semidirect product with the dual adjoint action.
pub fn rb_to_cybe(p: &OperatorMatrix) -> Result<Tensor2> {
    let g = p.algebra();
    let ambient = if same_algebra(g, &sl2()) {
        sl2_semidirect()
    } else if !g.is_exact() && same_algebra(g, &sl2().to_numeric()?) {
        sl2_semidirect().to_numeric()?
    } else {
        let coadjoint = crate::lie::Representation::adjoint(g)?.dual()?;
        crate::lie::semidirect_product(g, &coadjoint)?
    };
    let lift = lift_operator(p, &ambient)?;
    lift.sub(&lift.transpose21())
}

fn sl2_for(k: &Scalar) -> Result<Arc<LieAlgebra>> {
    if k.is_exact() {
        Ok(sl2())
    } else {
        sl2().to_numeric()
    }
}

/// First skew solution family on sl2: k(e⊗h − h⊗e), k ≠ 0.
pub fn r1(k: &Scalar) -> Result<Tensor2> {
    let alg = sl2_for(k)?;
    Tensor2::new(&alg, [((0, 2), k.clone()), ((2, 0), k.neg())])
}

/// Second skew solution family on sl2: k(f⊗h − h⊗f), k ≠ 0.
pub fn r2(k: &Scalar) -> Result<Tensor2> {
    let alg = sl2_for(k)?;
    Tensor2::new(&alg, [((1, 2), k.clone()), ((2, 1), k.neg())])
}

/// Third skew solution family on sl2, in the parametrization produced by the
/// eigenpair construction and the orthonormal-frame reading of the skew
/// operators:
///
///   k ( a(f⊗e − e⊗f) + (1/2)(h⊗e − e⊗h) + (a²/2)(h⊗f − f⊗h) ),
///
/// with k, a ≠ 0. Swapping the roles of the 1/2 and a²/2 coefficients gives
/// the same family under (k, a) ↦ (k a², 1/a).
pub fn r3(k: &Scalar, a: &Scalar) -> Result<Tensor2> {
    let alg = sl2_for(k)?;
    let one = k.one_like();
    let two = one.add(&one)?;
    let ka = k.mul(a)?;
    let k_half = k.div(&two)?;
    let ka2_half = ka.mul(a)?.div(&two)?;
    Tensor2::new(
        &alg,
        [
            ((1, 0), ka.clone()),
            ((0, 1), ka.neg()),
            ((2, 0), k_half.clone()),
            ((0, 2), k_half.neg()),
            ((2, 1), ka2_half.clone()),
            ((1, 2), ka2_half.neg()),
        ],
    )
}

/// Cobracket induced by r: δ(x) = [x⊗1 + 1⊗x, r]
///               = Σ_ij c_ij ([x,b_i]⊗b_j + b_i⊗[x,b_j]).
/// For any 2-tensor this is the diagonal adjoint action of x, so the same
/// function doubles as the action used in the cocycle identity.
pub fn cobracket(x: &Vector, r: &Tensor2) -> Result<Tensor2> {
    if !same_algebra(x.algebra(), &r.alg) {
        return Err(Error::AlgebraMismatch(
            "cobracket argument lives on a different algebra than the tensor".into(),
        ));
    }
    let alg = &r.alg;
    let n = alg.dim();
    let adx = alg.ad(x.coords())?;
    let mut acc: BTreeMap<(usize, usize), Scalar> = BTreeMap::new();
    for (&(p, q), c) in &r.coeffs {
        for k in 0..n {
            let left = &adx[k][p];
            if !left.is_structural_zero() {
                accumulate(&mut acc, (k, q), left.mul(c)?)?;
            }
            let right = &adx[k][q];
            if !right.is_structural_zero() {
                accumulate(&mut acc, (p, k), right.mul(c)?)?;
            }
        }
    }
    Ok(Tensor2 {
        alg: alg.clone(),
        coeffs: acc,
    })
}
