use alloc::vec::Vec;

use num_traits::Zero;

use super::{Matrix, Rational};
use crate::{Error, Result};

/// A subspace of `F^n` held by its unique reduced column echelon basis.
///
/// Column `j` of the basis has a leading one in row `pivots[j]`, the pivots
/// increase strictly, and every pivot row vanishes in the other columns.
/// Equality of two `Subspace` values is therefore equality of subspaces.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Subspace {
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    /// Column span of `m`.
    pub fn span(m: &Matrix) -> Subspace {
        let (r, _) = m.rce();
        let dim = (0..r.cols()).take_while(|&j| !r.column_is_zero(j)).count();
        let basis = r.column_range(0, dim);
        let pivots = (0..dim)
            .map(|j| {
                (0..basis.rows())
                    .find(|&i| !basis[(i, j)].is_zero())
                    .expect("nonzero column")
            })
            .collect();
        Subspace { basis, pivots }
    }

    pub fn zero(ambient_dim: usize) -> Subspace {
        Subspace {
            basis: Matrix::zeros(ambient_dim, 0),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Subspace {
        Subspace {
            basis: Matrix::identity(ambient_dim),
            pivots: (0..ambient_dim).collect(),
        }
    }

    #[inline]
    pub fn ambient_dim(&self) -> usize {
        self.basis.rows()
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.basis.cols()
    }

    /// The canonical basis, `ambient_dim x dim`.
    #[inline]
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    #[inline]
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim()
    }

    /// Residual of `v` after removing its component along the basis. Zero
    /// exactly when `v` lies in the subspace.
    fn residual(&self, v: &[Rational]) -> Vec<Rational> {
        let mut r = v.to_vec();
        for (j, &p) in self.pivots.iter().enumerate() {
            let c = v[p].clone();
            if c.is_zero() {
                continue;
            }
            for (i, ri) in r.iter_mut().enumerate() {
                let b = &self.basis[(i, j)];
                if !b.is_zero() {
                    *ri -= b * &c;
                }
            }
        }
        r
    }

    pub fn contains_vector(&self, v: &[Rational]) -> bool {
        assert_eq!(v.len(), self.ambient_dim(), "contains_vector: dimension");
        self.residual(v).iter().all(Zero::is_zero)
    }

    /// Whether every column of `m` lies in the subspace.
    pub fn contains_columns(&self, m: &Matrix) -> bool {
        (0..m.cols()).all(|j| self.contains_vector(&m.column(j)))
    }

    pub fn contains(&self, other: &Subspace) -> bool {
        self.contains_columns(other.basis())
    }

    /// Coordinates of the columns of `m` in the canonical basis, or `None`
    /// if some column is outside the subspace.
    pub fn coords(&self, m: &Matrix) -> Option<Matrix> {
        if !self.contains_columns(m) {
            return None;
        }
        Some(m.select_rows(&self.pivots))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        Subspace::span(&Matrix::hcat(
            self.ambient_dim(),
            &[self.basis(), other.basis()],
        ))
    }

    /// Rows span the annihilator: `ann * x = 0` iff `x` is in the subspace.
    pub fn annihilator(&self) -> Matrix {
        self.basis.transpose().null_basis().transpose()
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        let n = self.ambient_dim();
        let stacked = Matrix::vcat(n, &[&self.annihilator(), &other.annihilator()]);
        kernel(&stacked)
    }

    /// Image of the subspace under `m`.
    pub fn map(&self, m: &Matrix) -> Subspace {
        Subspace::span(&(m * &self.basis))
    }

    /// Re-expresses a subspace of `F^k` through an injective `n x k` embedding.
    pub fn embed(&self, embedding: &Matrix) -> Subspace {
        self.map(embedding)
    }
}

/// Column span of `m`.
pub fn image(m: &Matrix) -> Subspace {
    Subspace::span(m)
}

pub fn kernel(m: &Matrix) -> Subspace {
    Subspace::span(&m.null_basis())
}

/// `{x : m x in w}`.
pub fn preimage(m: &Matrix, w: &Subspace) -> Subspace {
    assert_eq!(m.rows(), w.ambient_dim(), "preimage: codomain dimension");
    kernel(&(&w.annihilator() * m))
}

/// Basis `X` with `t = s (+) span(X)`, chosen greedily from the canonical
/// basis columns of `t` in order.
pub fn complement(s: &Subspace, t: &Subspace) -> Result<Matrix> {
    if s.ambient_dim() != t.ambient_dim() || !t.contains(s) {
        return Err(Error::NotContained);
    }
    let mut current = s.clone();
    let mut picked = Vec::new();
    for j in 0..t.dim() {
        if current.dim() == t.dim() {
            break;
        }
        let col = t.basis().column(j);
        if !current.contains_vector(&col) {
            current = current.sum(&Subspace::span(&Matrix::column_vector(col)));
            picked.push(j);
        }
    }
    Ok(t.basis().select_columns(&picked))
}
