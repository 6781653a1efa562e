//! Elliptic ψ-functions on y² = 4x³ − g₂x − g₃: the determinant recursion,
//! the Hankel/Kiepert determinant route, discrete Painlevé I solutions, and
//! the numeric Weierstrass σ/℘ machinery validating the σ-quotient
//! definition of ψ.

pub mod beta;
pub mod curve;
pub mod kiepert;
pub mod lattice;
pub mod psi;

pub use beta::{
    beta_exact_at_point, beta_numeric, check_sigma_psi, dp1_residual_report, generic_argument,
};
pub use curve::{EllipticCurveW, EllipticError};
pub use kiepert::{kiepert_det, kiepert_scalar, wp_derivative_tower};
pub use lattice::{LatticeError, PeriodLattice};
pub use psi::{verify_bilinear_2_5, verify_recursion_2_4, DivisionPolynomialSeq};
