//! The ordered monomial basis (x, x², …, x^p, y, xy, …, x^q y) whose
//! Wronskian produces ψₙ.

use crate::G2Error;

/// One basis monomial x^power or x^power·y.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Monomial {
    pub x_power: usize,
    pub has_y: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialBasis {
    pub n: usize,
    pub p: usize,
    /// None for n ≤ 3, where the basis has no y block.
    pub q: Option<usize>,
    monomials: Vec<Monomial>,
}

impl MonomialBasis {
    pub fn for_index(n: usize) -> Result<Self, G2Error> {
        if n < 2 {
            return Err(G2Error::IndexOutOfRange(n as i64));
        }
        let (p, q) = if n <= 3 {
            (n - 1, None)
        } else {
            ((n + 1) / 2, Some((n - 4) / 2))
        };
        let mut monomials = Vec::with_capacity(n - 1);
        for k in 1..=p {
            monomials.push(Monomial {
                x_power: k,
                has_y: false,
            });
        }
        if let Some(q) = q {
            for k in 0..=q {
                monomials.push(Monomial {
                    x_power: k,
                    has_y: true,
                });
            }
        }
        debug_assert_eq!(monomials.len(), n - 1);
        Ok(MonomialBasis { n, p, q, monomials })
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    /// The superscript m and dimension of the equivalent Toeplitz block:
    /// m = p − q + 1, dimension q + 1. Only defined once the y block exists.
    pub fn toeplitz_shape(&self) -> Option<(usize, usize)> {
        self.q.map(|q| (self.p - q + 1, q + 1))
    }
}
