//! Exact rational dense linear algebra.

mod echelon;
mod matrix;
mod subspace;

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

pub use matrix::Matrix;
pub use subspace::{complement, image, kernel, preimage, Subspace};

pub(crate) use matrix::int;

use crate::Result;

/// Arbitrary-precision fraction, always kept in lowest terms with a positive
/// denominator.
pub type Rational = num_rational::BigRational;

/// Reduced column echelon form `(R, T)` with `R = M T`.
pub fn rce(m: &Matrix) -> (Matrix, Matrix) {
    m.rce()
}

pub fn inverse(m: &Matrix) -> Result<Matrix> {
    m.inverse()
}

/// Coefficients of `det(xI - M)`, lowest degree first; the last entry is 1.
///
/// Faddeev-LeVerrier recursion. Panics on non-square input.
pub fn char_poly(m: &Matrix) -> Vec<Rational> {
    assert!(m.is_square(), "char_poly of a non-square matrix");
    let n = m.rows();
    let mut coeffs = vec![Rational::zero(); n + 1];
    coeffs[n] = Rational::one();
    let mut acc = Matrix::zeros(n, n);
    for k in 1..=n {
        // acc <- M * acc + c_{n-k+1} I
        let mut next = m * &acc;
        for i in 0..n {
            next[(i, i)] += &coeffs[n - k + 1];
        }
        acc = next;
        let prod = m * &acc;
        let trace = (0..n).fold(Rational::zero(), |t, i| t + &prod[(i, i)]);
        coeffs[n - k] = -trace / Rational::from_integer(BigInt::from(k));
    }
    coeffs
}

/// Evaluates a polynomial given lowest degree first.
pub fn eval_poly(coeffs: &[Rational], x: &Rational) -> Rational {
    coeffs
        .iter()
        .rev()
        .fold(Rational::zero(), |acc, c| acc * x + c)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn char_poly_examples() {
        assert_eq!(char_poly(&Matrix::zeros(1, 1)), vec![int(0), int(1)]);
        assert_eq!(
            char_poly(&Matrix::from_i64(2, 2, &[0, 1, 0, 0])),
            vec![int(0), int(0), int(1)]
        );
        assert_eq!(
            char_poly(&Matrix::identity(2)),
            vec![int(1), int(-2), int(1)]
        );
        assert_eq!(char_poly(&Matrix::zeros(0, 0)), vec![int(1)]);
    }

    #[test]
    fn eval_poly_horner() {
        let p = [int(1), int(-2), int(1)];
        assert_eq!(eval_poly(&p, &int(3)), int(4));
    }
}
