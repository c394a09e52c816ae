//! Scalar tower: rationals, Gaussian rationals, single-radical surd
//! extensions, multivariate polynomials, rational functions, and the tagged
//! [`Scalar`] type that the algebra layers consume.

pub mod expr;
pub mod gauss;
pub mod poly;
pub mod ratfun;
pub mod rational;
pub mod surd;
pub mod value;
pub mod vars;

pub use expr::{parse_expr, parse_ratfun, parse_rational, parse_scalar, parse_surd, Expr};
pub use gauss::GaussRational;
pub use poly::{gcd, rational_term, Monomial, Poly};
pub use ratfun::{ratfun_arith, RatFun};
pub use rational::Rational;
pub use surd::{surd_arith, BinOp, SurdExt};
pub use value::{Bindings, Scalar, ZeroTest};
