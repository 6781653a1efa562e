//! Indexed ratio sequences and residual reports.

use psilab_algebra::scalar::{rational_string, Rat, Scalar};
use std::fmt;

/// Which of the paper's ratio families a sequence belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SequenceKind {
    /// βₙ = ψₙ₊₁ψₙ₋₁/ψₙ² (elliptic).
    Beta,
    /// bₙ = ψₙ₊₂ψₙ₋₂/ψₙ² (genus 2, generic point).
    B,
    /// cₙ = αₙ₊₂αₙ₋₂/αₙ² (genus 2, Weierstrass point).
    C,
    /// dₘ = αₘ₊₁αₘ₋₂/(αₘαₘ₋₁) (genus 2, Weierstrass point).
    D,
}

impl fmt::Display for SequenceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            SequenceKind::Beta => "beta",
            SequenceKind::B => "b",
            SequenceKind::C => "c",
            SequenceKind::D => "d",
        };
        write!(f, "{}", s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    ClosedForm,
    Iterated,
}

/// A contiguously indexed sequence of exact or floating values.
///
/// `step` is 1 for β, b, d and 2 for the c-family, whose defining relation
/// only couples indices of equal parity.
#[derive(Clone, Debug)]
pub struct RatioSequence<S: Scalar> {
    pub kind: SequenceKind,
    pub start: i64,
    pub step: i64,
    pub values: Vec<S>,
    pub provenance: Provenance,
    /// Index at which generation stopped on a zero denominator, if any.
    /// All values before it are still present.
    pub truncated_at: Option<i64>,
}

impl<S: Scalar> RatioSequence<S> {
    pub fn new(kind: SequenceKind, start: i64, step: i64, values: Vec<S>) -> Self {
        RatioSequence {
            kind,
            start,
            step,
            values,
            provenance: Provenance::ClosedForm,
            truncated_at: None,
        }
    }

    pub fn with_provenance(mut self, p: Provenance) -> Self {
        self.provenance = p;
        self
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// One past the last held index (in steps).
    pub fn end(&self) -> i64 {
        self.start + self.step * self.values.len() as i64
    }

    pub fn get(&self, index: i64) -> Option<&S> {
        if index < self.start || (index - self.start) % self.step != 0 {
            return None;
        }
        let offset = ((index - self.start) / self.step) as usize;
        self.values.get(offset)
    }

    pub fn indices(&self) -> impl Iterator<Item = i64> + '_ {
        (0..self.values.len() as i64).map(move |k| self.start + k * self.step)
    }

    pub fn iter_indexed(&self) -> impl Iterator<Item = (i64, &S)> {
        self.indices().zip(self.values.iter())
    }
}

/// One residual of an identity check: exactly zero, exactly nonzero
/// (rendered for the report), or a floating-point magnitude.
#[derive(Clone, Debug, PartialEq)]
pub enum ResidualValue {
    ExactZero,
    ExactNonzero(String),
    Norm(f64),
}

impl ResidualValue {
    pub fn from_rat(value: &Rat) -> Self {
        if Scalar::is_zero(value) {
            ResidualValue::ExactZero
        } else {
            ResidualValue::ExactNonzero(rational_string(value))
        }
    }

    pub fn norm(&self) -> f64 {
        match self {
            ResidualValue::ExactZero => 0.0,
            ResidualValue::ExactNonzero(_) => f64::INFINITY,
            ResidualValue::Norm(v) => *v,
        }
    }

    pub fn render(&self) -> String {
        match self {
            ResidualValue::ExactZero => "0".to_string(),
            ResidualValue::ExactNonzero(s) => s.clone(),
            ResidualValue::Norm(v) => format!("{:e}", v),
        }
    }
}

/// Per-index residuals of one identity, with the exactness flag.
#[derive(Clone, Debug)]
pub struct ResidualReport {
    pub identity: String,
    pub residuals: Vec<(i64, ResidualValue)>,
    /// True iff every residual is the exact zero of its field.
    pub exact: bool,
    pub max_norm: f64,
    /// Indices that failed: exact-nonzero residuals, or norms above the
    /// tolerance for numeric reports.
    pub failures: Vec<i64>,
}

impl ResidualReport {
    pub fn from_exact(identity: impl Into<String>, residuals: Vec<(i64, ResidualValue)>) -> Self {
        let exact = residuals
            .iter()
            .all(|(_, r)| matches!(r, ResidualValue::ExactZero));
        let failures = residuals
            .iter()
            .filter(|(_, r)| !matches!(r, ResidualValue::ExactZero))
            .map(|(i, _)| *i)
            .collect();
        let max_norm = residuals.iter().map(|(_, r)| r.norm()).fold(0.0, f64::max);
        ResidualReport {
            identity: identity.into(),
            residuals,
            exact,
            max_norm,
            failures,
        }
    }

    pub fn from_numeric(
        identity: impl Into<String>,
        residuals: Vec<(i64, f64)>,
        tol: f64,
    ) -> Self {
        let max_norm = residuals.iter().map(|(_, v)| *v).fold(0.0, f64::max);
        let failures = residuals
            .iter()
            .filter(|(_, v)| !(*v < tol))
            .map(|(i, _)| *i)
            .collect();
        ResidualReport {
            identity: identity.into(),
            residuals: residuals
                .into_iter()
                .map(|(i, v)| (i, ResidualValue::Norm(v)))
                .collect(),
            exact: false,
            max_norm,
            failures,
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}
