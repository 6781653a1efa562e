//! Elementwise comparison of ratio sequences over their common index range.

use crate::iterate::SeqError;
use crate::sequence::{RatioSequence, ResidualReport, ResidualValue};
use psilab_algebra::scalar::Scalar;

/// Compares two sequences where their index ranges overlap.
///
/// For exact scalars the report carries exact residuals; for floating
/// scalars magnitudes are checked against `tol`.
pub fn compare<S: Scalar>(
    a: &RatioSequence<S>,
    b: &RatioSequence<S>,
    tol: f64,
) -> Result<ResidualReport, SeqError> {
    let mut residuals = Vec::new();
    for (idx, av) in a.iter_indexed() {
        if let Some(bv) = b.get(idx) {
            let diff = av.sub(bv);
            residuals.push((idx, diff));
        }
    }
    if residuals.is_empty() {
        return Err(SeqError::DisjointRanges);
    }
    let identity = format!("compare[{}:{}]", a.kind, b.kind);
    if S::EXACT {
        Ok(ResidualReport::from_exact(
            identity,
            residuals
                .into_iter()
                .map(|(i, d)| {
                    if d.is_zero() {
                        (i, ResidualValue::ExactZero)
                    } else {
                        (i, ResidualValue::ExactNonzero(format!("{}", d)))
                    }
                })
                .collect(),
        ))
    } else {
        Ok(ResidualReport::from_numeric(
            identity,
            residuals.into_iter().map(|(i, d)| (i, d.abs_f64())).collect(),
            tol,
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequence::SequenceKind;
    use psilab_algebra::rat;

    #[test]
    fn identical_sequences_compare_exactly() {
        let v = vec![rat(1, 2), rat(3, 4), rat(5, 6)];
        let a = RatioSequence::new(SequenceKind::Beta, 1, 1, v.clone());
        let b = RatioSequence::new(SequenceKind::Beta, 1, 1, v);
        let report = compare(&a, &b, 0.0).unwrap();
        assert!(report.exact);
        assert!(report.passed());
        assert_eq!(report.max_norm, 0.0);
    }

    #[test]
    fn shifted_overlap_is_compared() {
        let a = RatioSequence::new(SequenceKind::B, 1, 1, vec![rat(1, 1), rat(2, 1), rat(3, 1)]);
        let b = RatioSequence::new(SequenceKind::B, 3, 1, vec![rat(3, 1), rat(4, 1)]);
        let report = compare(&a, &b, 0.0).unwrap();
        assert_eq!(report.residuals.len(), 1);
        assert!(report.exact);
    }

    #[test]
    fn disjoint_ranges_error() {
        let a = RatioSequence::new(SequenceKind::B, 0, 1, vec![rat(1, 1)]);
        let b = RatioSequence::new(SequenceKind::B, 5, 1, vec![rat(1, 1)]);
        assert!(matches!(compare(&a, &b, 0.0), Err(SeqError::DisjointRanges)));
    }

    #[test]
    fn mismatch_is_reported_with_index() {
        let a = RatioSequence::new(SequenceKind::D, 2, 1, vec![rat(1, 1), rat(2, 1)]);
        let b = RatioSequence::new(SequenceKind::D, 2, 1, vec![rat(1, 1), rat(5, 2)]);
        let report = compare(&a, &b, 0.0).unwrap();
        assert!(!report.exact);
        assert_eq!(report.failures, vec![3]);
    }
}
