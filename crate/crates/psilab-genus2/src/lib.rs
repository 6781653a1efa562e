//! Genus-2 ψ-functions on y² = quintic: Wronskian construction, Toeplitz
//! cross-check, calibration against the master recursion, exact identity
//! verification and the Weierstrass-point / generic-point ratio sequences.

pub mod basis;
pub mod calibrate;
pub mod identities;
pub mod sequences;
pub mod table;
pub mod toeplitz;
pub mod derivs;
pub mod hyk;
pub mod wronskian;

pub use basis::{Monomial, MonomialBasis};
pub use calibrate::{calibrate, factorial_form_magnitude, Calibration};
pub use identities::{
    bilinear_residual, d_ratio_equivalence, recursion_residual, residual_3_10, residual_3_11,
    residual_3_12, residual_3_13,
};
pub use sequences::{
    alpha_values_extended, generic_point_sequence, psi_values_extended, residual_3_22_numeric,
    weierstrass_point_sequences, FourthOrderReport, GenericPointSequence, WeierstrassSequences,
};
pub use hyk::{hyk_parameter_map, verify_reduces_to_third_order, HykParams};
pub use table::PsiTableG2;
pub use toeplitz::{factorial_scalar, psi_toeplitz, toeplitz_wronskian_scalar, variant_survives, IndexVariant};
pub use derivs::{derivative_numerators, y_derivative_series};
pub use wronskian::psi_wronskian_raw;

/// Errors from the genus-2 layer.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum G2Error {
    #[error("index {0} out of range for this construction")]
    IndexOutOfRange(i64),
    #[error("determinant for psi_{n} fails to clear y denominators: {detail}")]
    NonPolynomialDeterminant { n: usize, detail: String },
    #[error("calibration pair ({m},{n}) is degenerate: {detail}")]
    CalibrationDegenerate { m: usize, n: usize, detail: String },
    #[error("calibration inconsistent at index {n}: {detail}")]
    CalibrationInconsistent { n: usize, detail: String },
    #[error("toeplitz variant {variant} rejected at n = {n}: {detail}")]
    VariantRejected {
        variant: &'static str,
        n: usize,
        detail: String,
    },
    #[error("alpha division failed at n = {n}: psi is not 2y/8y^3 times a polynomial")]
    AlphaDivisionFailed { n: usize },
    #[error("point ({x}, {y}) does not lie on the curve")]
    PointOffCurve { x: String, y: String },
    #[error("x0 = {x} is not a root of f; not a Weierstrass point")]
    NotWeierstrassPoint { x: String },
    #[error("zero denominator at index {0} while forming a ratio sequence")]
    ZeroDenominator(i64),
    #[error("no usable root of alpha4 found: {0}")]
    NoAlpha4Root(String),
}
