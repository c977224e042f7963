//! Pencils, their reduction, and the invariants read off the reduction chain.

mod defects;
mod reduce;

pub use defects::{
    full_profile, index_from_defects, is_regular, is_regular_oracle, step_defects, strangeness,
    DefectProfile, Strangeness,
};
pub use reduce::{reduce_fully, reduce_step, ReducedStep, ReductionChain, ReductionStep};

use crate::exactla::Matrix;
use crate::{Error, Result};

/// A pair `(E, A)` of linear maps `M -> V` of the same shape: `dim V` rows
/// and `dim M` columns.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Pencil {
    e: Matrix,
    a: Matrix,
}

impl Pencil {
    pub fn new(e: Matrix, a: Matrix) -> Result<Pencil> {
        if e.shape() != a.shape() {
            return Err(Error::ShapeMismatch {
                expected: e.shape(),
                found: a.shape(),
            });
        }
        Ok(Pencil { e, a })
    }

    /// The `rows x cols` pencil with `E = A = 0`.
    pub fn zero(rows: usize, cols: usize) -> Pencil {
        Pencil {
            e: Matrix::zeros(rows, cols),
            a: Matrix::zeros(rows, cols),
        }
    }

    #[inline]
    pub fn e(&self) -> &Matrix {
        &self.e
    }

    #[inline]
    pub fn a(&self) -> &Matrix {
        &self.a
    }

    pub fn into_parts(self) -> (Matrix, Matrix) {
        (self.e, self.a)
    }

    /// `dim V`.
    #[inline]
    pub fn rows(&self) -> usize {
        self.e.rows()
    }

    /// `dim M`.
    #[inline]
    pub fn cols(&self) -> usize {
        self.e.cols()
    }

    pub fn is_square(&self) -> bool {
        self.e.is_square()
    }

    /// `(E^T, A^T)`.
    pub fn dual(&self) -> Pencil {
        Pencil {
            e: self.e.transpose(),
            a: self.a.transpose(),
        }
    }

    /// Strong equivalence action `(P E Q, P A Q)`.
    pub fn transform(&self, p: &Matrix, q: &Matrix) -> Pencil {
        Pencil {
            e: &(p * &self.e) * q,
            a: &(p * &self.a) * q,
        }
    }

    /// Weak equivalence action `(P E Q, P (E R + A Q))`.
    pub fn weak_transform(&self, p: &Matrix, q: &Matrix, r: &Matrix) -> Pencil {
        let er = &self.e * r;
        let aq = &self.a * q;
        Pencil {
            e: &(p * &self.e) * q,
            a: p * &(&er + &aq),
        }
    }

    /// `lambda E + A`.
    pub fn evaluate(&self, lambda: &crate::Rational) -> Matrix {
        &self.e.scale(lambda) + &self.a
    }
}

/// `(E^T, A^T)`.
pub fn dual(p: &Pencil) -> Pencil {
    p.dual()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dual_of_l2_is_its_transpose() {
        let l2 = Pencil::new(Matrix::from_i64(2, 1, &[1, 0]), Matrix::from_i64(2, 1, &[0, 1])).unwrap();
        let d = l2.dual();
        assert_eq!(d.e(), &Matrix::from_i64(1, 2, &[1, 0]));
        assert_eq!(d.a(), &Matrix::from_i64(1, 2, &[0, 1]));
        assert_eq!(d.dual(), l2);
    }

    #[test]
    fn shape_mismatch_rejected() {
        let r = Pencil::new(Matrix::zeros(2, 1), Matrix::zeros(1, 2));
        assert!(matches!(r, Err(Error::ShapeMismatch { .. })));
    }
}
