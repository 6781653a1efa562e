//! Exact computer-algebra kernel: arbitrary-precision rationals, dense
//! univariate polynomials, elements of curve coordinate rings
//! F[x, y]/(y² − f(x)) and of their y-localizations, and exact determinants
//! over those rings.
//!
//! Everything is immutable after construction and every operation is a pure
//! function, so values can be shared freely across threads.

pub mod curve;
pub mod laurent;
pub mod matrix;
pub mod poly;
pub mod ring;
pub mod scalar;

pub use curve::{CurveEquation, HyperellipticCurveG2};
pub use laurent::YLaurentElement;
pub use matrix::{RingMatrix, RingOps};
pub use poly::DensePolynomial;
pub use ring::CurveRingElement;
pub use scalar::{parse_rational, rat, rational_string, ParseRatError, Rat, Scalar, C64};

/// Errors from the algebra layer.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum AlgebraError {
    #[error("division by zero polynomial")]
    DivisionByZero,
    #[error("inexact division: {detail}")]
    NotDivisible { detail: String },
    #[error("singular curve: {detail}")]
    SingularCurve { detail: String },
    #[error("matrix is not square: dimension {dim} with {len} entries")]
    NotSquare { dim: usize, len: usize },
}
