//! Shared error type for every layer of the library.
//!
//! One flat enum keeps cross-module plumbing simple: a pre-Lie construction
//! can surface a scalar-level pole or an operator-level failure without
//! wrapper noise. Variants carry enough context to name the offending
//! object (catalog id, matrix entry, parameter) in reports.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Exact division by a scalar that is identically zero.
    #[error("division by zero")]
    DivisionByZero,

    /// Evaluation requested a variable with no binding.
    #[error("unbound parameter `{0}`")]
    UnboundParameter(String),

    /// A denominator vanishes at the requested parameter binding.
    #[error("pole at binding: denominator `{0}` evaluates to zero")]
    PoleAtBinding(String),

    /// Arithmetic attempted between extensions with different radicands.
    #[error("mixed radicands: sqrt({0}) and sqrt({1})")]
    MixedRadicands(u64, u64),

    /// A square root of a non-square rational was requested in exact mode.
    #[error("`{0}` is not a perfect square of a rational")]
    NotPerfectSquare(String),

    /// Exact and numeric scalars were mixed in one operation.
    #[error("scalar tag mismatch: exact and numeric values cannot mix")]
    TagMismatch,

    /// An exact-only operation received a numeric scalar.
    #[error("operation requires exact scalars, got a numeric one")]
    NumericTag,

    /// Could not parse a scalar, vector, or matrix from text.
    #[error("parse error: {0}")]
    Parse(String),

    /// Vectors or operators attached to different algebras were combined.
    #[error("algebra mismatch: {0}")]
    AlgebraMismatch(String),

    /// Dimensions of an operand do not match the ambient space.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    /// A structure-constant table failed antisymmetry or the Jacobi identity.
    #[error("not a Lie algebra: {0}")]
    NotLieAlgebra(String),

    /// A putative representation violates the homomorphism law.
    #[error("representation law violated at basis pair ({0}, {1})")]
    RepresentationLawViolated(usize, usize),

    /// A change-of-basis matrix is not invertible.
    #[error("singular basis matrix")]
    SingularBasis,

    /// A product table failed the pre-Lie identity.
    #[error("not a pre-Lie algebra: identity fails at basis triple ({0}, {1}, {2})")]
    NotPreLie(usize, usize, usize),

    /// An operator expected to satisfy the Rota-Baxter identity does not.
    #[error("operator is not Rota-Baxter: first failing pair ({0}, {1})")]
    NotRotaBaxter(usize, usize),

    /// A parameter binding violates a catalog entry's constraints.
    #[error("constraint violated for {0}: `{1}` must be nonzero")]
    ConstraintViolated(String, String),

    /// Belavin-Drinfeld classification got a pair that is not an eigenpair.
    #[error("not an eigenpair: [x,y] != y or y = 0")]
    NotEigenpair,

    /// A valid eigenpair failed to match any normal form. Should not happen.
    #[error("eigenpair matched no normal form")]
    NoMatch,

    /// Computed canonical class differs from the claimed one.
    #[error("class mismatch for {id}: expected {expected}, characteristic matrix differs at entry ({i}, {j})")]
    ClassMismatch {
        id: String,
        expected: String,
        i: usize,
        j: usize,
    },

    /// A computed matrix differs from its recorded target.
    #[error("matrix mismatch for {id} at entries {entries:?}")]
    MatrixMismatch {
        id: String,
        entries: Vec<(usize, usize)>,
    },

    /// A finite-field specialization of a catalog entry fails the mod-p system.
    #[error("soundness violation: specialized {0} fails the mod-{1} system")]
    SoundnessViolation(String, u64),

    /// Finite-field enumeration supports odd primes up to 13 only.
    #[error("unsupported modulus {0}: need an odd prime <= 13")]
    UnsupportedModulus(u64),

    /// Catch-all for invalid requests (unknown catalog id, bad flag combination).
    #[error("{0}")]
    Invalid(String),
}
