//! Exact verification toolkit for Rota-Baxter operators on sl(2,C), the
//! solutions of the classical Yang-Baxter equation they induce, and the
//! pre-Lie algebras they generate.
//!
//! Everything defaults to exact arithmetic over multivariate rational
//! functions with Gaussian-rational and single-radical coefficients; a
//! complex-double backend exists for spot checks at sampled parameter values
//! and is never mixed with the exact one implicitly. A brute-force finite
//! field enumeration provides an independent cross-check of the operator
//! catalog on small primes.

pub mod cybe;
pub mod error;
pub mod ff;
pub mod lie;
pub mod prelie;
pub mod rota_baxter;
pub mod scalar;

pub use cybe::{
    bd_classify, bd_discriminant, bd_solve, bd_tensor, check_cybe, cobracket, cybe_lhs,
    lift_operator, r1, r2, r3, rb_to_cybe, BdClass, CybeVerdict, Tensor2, Tensor3,
};
pub use error::{Error, Result};
pub use lie::{
    bracket, killing_form, semidirect_product, sl2, sl2_semidirect, JacobiVerdict, LieAlgebra,
    Matrix, OperatorMatrix, Representation, Vector,
};
pub use prelie::{
    canonical_class, canonical_classes, canonical_r, characteristic_matrix_prelie, check_prelie,
    class_table, classify, classify_against, corrected_proof_basis, five_algebras, left_mult_rep,
    prelie_from_rb, proof_basis, subadjacent, CanonicalClass, ClassName, ClassTableRow, PreLie,
    PreLieVerdict, PrintedMatrixCheck,
};
pub use rota_baxter::{
    catalog, check_rb, entry_by_id, generate_rb_system, CatalogEntry, PolySystem, RbReport,
};
pub use scalar::{Bindings, RatFun, Rational, Scalar, ZeroTest};
