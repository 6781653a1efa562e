//! Square matrices over a commutative ring and exact determinants.
//!
//! Two strategies are provided: fraction-free Bareiss elimination (the
//! default, controls intermediate expression swell) and cofactor expansion
//! (the cross-check oracle for small dimensions). Both are exact; in an
//! integral domain every Bareiss division is exact by construction.

use crate::poly::DensePolynomial;
use crate::ring::CurveRingElement;
use crate::laurent::YLaurentElement;
use crate::scalar::Scalar;
use crate::AlgebraError;

/// Operations a determinant engine needs from its entry ring.
pub trait RingOps: Clone {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn ring_add(&self, other: &Self) -> Self;
    fn ring_sub(&self, other: &Self) -> Self;
    fn ring_mul(&self, other: &Self) -> Self;
    fn ring_neg(&self) -> Self;
    /// Exact quotient, `None` when the division does not come out evenly.
    fn ring_exact_div(&self, other: &Self) -> Option<Self>;
}

impl<S: Scalar> RingOps for DensePolynomial<S> {
    fn zero_like(&self) -> Self {
        DensePolynomial::zero()
    }
    fn one_like(&self) -> Self {
        DensePolynomial::one()
    }
    fn is_zero(&self) -> bool {
        DensePolynomial::is_zero(self)
    }
    fn ring_add(&self, other: &Self) -> Self {
        self.add(other)
    }
    fn ring_sub(&self, other: &Self) -> Self {
        self.sub(other)
    }
    fn ring_mul(&self, other: &Self) -> Self {
        self.mul(other)
    }
    fn ring_neg(&self) -> Self {
        self.neg()
    }
    fn ring_exact_div(&self, other: &Self) -> Option<Self> {
        self.exact_div(other)
    }
}

impl<S: Scalar> RingOps for CurveRingElement<S> {
    fn zero_like(&self) -> Self {
        CurveRingElement::zero(self.curve())
    }
    fn one_like(&self) -> Self {
        CurveRingElement::one(self.curve())
    }
    fn is_zero(&self) -> bool {
        CurveRingElement::is_zero(self)
    }
    fn ring_add(&self, other: &Self) -> Self {
        self.add(other)
    }
    fn ring_sub(&self, other: &Self) -> Self {
        self.sub(other)
    }
    fn ring_mul(&self, other: &Self) -> Self {
        self.mul(other)
    }
    fn ring_neg(&self) -> Self {
        self.neg()
    }
    fn ring_exact_div(&self, other: &Self) -> Option<Self> {
        self.exact_div(other)
    }
}

impl<S: Scalar> RingOps for YLaurentElement<S> {
    fn zero_like(&self) -> Self {
        YLaurentElement::from_ring(self.numerator().zero_like())
    }
    fn one_like(&self) -> Self {
        YLaurentElement::from_ring(self.numerator().one_like())
    }
    fn is_zero(&self) -> bool {
        YLaurentElement::is_zero(self)
    }
    fn ring_add(&self, other: &Self) -> Self {
        self.add(other)
    }
    fn ring_sub(&self, other: &Self) -> Self {
        self.sub(other)
    }
    fn ring_mul(&self, other: &Self) -> Self {
        self.mul(other)
    }
    fn ring_neg(&self) -> Self {
        self.neg()
    }
    fn ring_exact_div(&self, other: &Self) -> Option<Self> {
        self.exact_div(other)
    }
}

impl<S: Scalar> RingOps for S {
    fn zero_like(&self) -> Self {
        S::zero()
    }
    fn one_like(&self) -> Self {
        S::one()
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
    fn ring_add(&self, other: &Self) -> Self {
        self.add(other)
    }
    fn ring_sub(&self, other: &Self) -> Self {
        self.sub(other)
    }
    fn ring_mul(&self, other: &Self) -> Self {
        self.mul(other)
    }
    fn ring_neg(&self) -> Self {
        self.neg()
    }
    fn ring_exact_div(&self, other: &Self) -> Option<Self> {
        if Scalar::is_zero(other) {
            None
        } else {
            Some(self.div(other))
        }
    }
}

/// A square matrix with an explicit multiplicative identity so the empty
/// determinant convention (det of the 0×0 matrix is 1) has a value to return.
#[derive(Clone, Debug)]
pub struct RingMatrix<T: RingOps> {
    dim: usize,
    entries: Vec<T>,
    one: T,
}

impl<T: RingOps> RingMatrix<T> {
    pub fn new(dim: usize, entries: Vec<T>, one: T) -> Result<Self, AlgebraError> {
        if entries.len() != dim * dim {
            return Err(AlgebraError::NotSquare {
                dim,
                len: entries.len(),
            });
        }
        Ok(RingMatrix { dim, entries, one })
    }

    /// Builds from entries alone; requires dimension ≥ 1.
    pub fn from_entries(dim: usize, entries: Vec<T>) -> Result<Self, AlgebraError> {
        if entries.is_empty() {
            return Err(AlgebraError::NotSquare { dim, len: 0 });
        }
        let one = entries[0].one_like();
        Self::new(dim, entries, one)
    }

    pub fn empty(one: T) -> Self {
        RingMatrix {
            dim: 0,
            entries: Vec::new(),
            one,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn at(&self, i: usize, j: usize) -> &T {
        &self.entries[i * self.dim + j]
    }

    /// Fraction-free (Bareiss) determinant.
    pub fn det_bareiss(&self) -> Result<T, AlgebraError> {
        let n = self.dim;
        if n == 0 {
            return Ok(self.one.clone());
        }
        let mut a = self.entries.clone();
        let idx = |i: usize, j: usize| i * n + j;
        let mut negated = false;
        let mut prev: Option<T> = None;
        for k in 0..n - 1 {
            if a[idx(k, k)].is_zero() {
                let Some(swap_row) = (k + 1..n).find(|&r| !a[idx(r, k)].is_zero()) else {
                    return Ok(a[idx(k, k)].zero_like());
                };
                for j in 0..n {
                    a.swap(idx(k, j), idx(swap_row, j));
                }
                negated = !negated;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = a[idx(k, k)]
                        .ring_mul(&a[idx(i, j)])
                        .ring_sub(&a[idx(i, k)].ring_mul(&a[idx(k, j)]));
                    a[idx(i, j)] = match &prev {
                        None => num,
                        Some(p) => num.ring_exact_div(p).ok_or_else(|| {
                            AlgebraError::NotDivisible {
                                detail: "Bareiss pivot division failed; entries are not over an integral domain".into(),
                            }
                        })?,
                    };
                }
                a[idx(i, k)] = a[idx(i, k)].zero_like();
            }
            prev = Some(a[idx(k, k)].clone());
        }
        let det = a[idx(n - 1, n - 1)].clone();
        Ok(if negated { det.ring_neg() } else { det })
    }

    /// Cofactor expansion along the first row; exponential, oracle use only.
    pub fn det_cofactor(&self) -> T {
        fn go<T: RingOps>(dim: usize, m: &[Vec<T>], one: &T) -> T {
            match dim {
                0 => one.clone(),
                1 => m[0][0].clone(),
                _ => {
                    let mut acc = m[0][0].zero_like();
                    for (j, pivot) in m[0].iter().enumerate() {
                        if pivot.is_zero() {
                            continue;
                        }
                        let minor: Vec<Vec<T>> = m[1..]
                            .iter()
                            .map(|row| {
                                row.iter()
                                    .enumerate()
                                    .filter(|(c, _)| *c != j)
                                    .map(|(_, v)| v.clone())
                                    .collect()
                            })
                            .collect();
                        let term = pivot.ring_mul(&go(dim - 1, &minor, one));
                        acc = if j % 2 == 0 {
                            acc.ring_add(&term)
                        } else {
                            acc.ring_sub(&term)
                        };
                    }
                    acc
                }
            }
        }
        let rows: Vec<Vec<T>> = (0..self.dim)
            .map(|i| (0..self.dim).map(|j| self.at(i, j).clone()).collect())
            .collect();
        go(self.dim, &rows, &self.one)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, Rat};

    type P = DensePolynomial<Rat>;

    #[test]
    fn triangular_polynomial_matrix() {
        // det [[1, 2x], [0, 2]] = 2
        let m = RingMatrix::from_entries(
            2,
            vec![
                P::one(),
                P::from_i64_coeffs(&[0, 2]),
                P::zero(),
                P::from_i64_coeffs(&[2]),
            ],
        )
        .unwrap();
        assert_eq!(m.det_bareiss().unwrap(), P::from_i64_coeffs(&[2]));
        assert_eq!(m.det_cofactor(), P::from_i64_coeffs(&[2]));
    }

    #[test]
    fn empty_determinant_is_identity() {
        let m: RingMatrix<P> = RingMatrix::empty(P::one());
        assert_eq!(m.det_bareiss().unwrap(), P::one());
        assert_eq!(m.det_cofactor(), P::one());
    }

    #[test]
    fn vandermonde_3x3_at_1_2_3() {
        // Rows (1, x_i, x_i^2) at nodes 1,2,3: det = (2-1)(3-1)(3-2) = 2.
        let mut entries = Vec::new();
        for node in [1i64, 2, 3] {
            for p in 0..3u32 {
                entries.push(Rat::from_i64(node.pow(p)));
            }
        }
        let m = RingMatrix::from_entries(3, entries).unwrap();
        assert_eq!(m.det_bareiss().unwrap(), rat(2, 1));
        assert_eq!(m.det_cofactor(), rat(2, 1));
    }

    #[test]
    fn zero_column_gives_zero_det() {
        let m = RingMatrix::from_entries(
            2,
            vec![P::zero(), P::one(), P::zero(), P::x()],
        )
        .unwrap();
        assert!(m.det_bareiss().unwrap().is_zero());
        assert!(m.det_cofactor().is_zero());
    }

    #[test]
    fn row_swap_sign() {
        // [[0,1],[1,0]] has determinant -1
        let m = RingMatrix::from_entries(
            2,
            vec![P::zero(), P::one(), P::one(), P::zero()],
        )
        .unwrap();
        assert_eq!(m.det_bareiss().unwrap(), P::one().neg());
    }

    #[test]
    fn dimension_mismatch_rejected() {
        assert!(RingMatrix::from_entries(2, vec![P::one(); 3]).is_err());
    }
}
