use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Transform;
use crate::exactla::{int, Matrix};
use crate::pencil::Pencil;

/// Product of `ops` random elementary row operations applied to `I_n`:
/// row additions with multipliers in `{-3..3} \ {0}`, swaps, and scalings by
/// `{+-1, +-2, +-3}`.
pub fn random_invertible<R: Rng + ?Sized>(n: usize, ops: usize, rng: &mut R) -> Matrix {
    let mut m = Matrix::identity(n);
    if n == 0 {
        return m;
    }
    for _ in 0..ops {
        let c = loop {
            let c: i64 = rng.random_range(-3..=3);
            if c != 0 {
                break c;
            }
        };
        let kind = rng.random_range(0..8u8);
        if n >= 2 && kind < 6 {
            let i = rng.random_range(0..n);
            let j = (i + rng.random_range(1..n)) % n;
            // row_i += c * row_j
            m.sub_row_multiple(i, j, &int(-c));
        } else if n >= 2 && kind == 6 {
            let i = rng.random_range(0..n);
            let j = (i + rng.random_range(1..n)) % n;
            m.swap_rows(i, j);
        } else {
            let i = rng.random_range(0..n);
            m.scale_row(i, &int(c));
        }
    }
    m
}

/// Default number of elementary operations for an `n x n` factor.
fn default_ops(n: usize) -> usize {
    2 * n + 2
}

/// Seeded strong-equivalence scramble `(P E Q, P A Q)`.
pub fn scramble(p: &Pencil, seed: u64) -> (Pencil, Transform) {
    scramble_with_ops(p, seed, default_ops(p.rows()), default_ops(p.cols()))
}

/// Like [`scramble`] with explicit operation counts for `P` and `Q`.
pub fn scramble_with_ops(p: &Pencil, seed: u64, row_ops: usize, col_ops: usize) -> (Pencil, Transform) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pm = random_invertible(p.rows(), row_ops, &mut rng);
    let qm = random_invertible(p.cols(), col_ops, &mut rng);
    let out = p.transform(&pm, &qm);
    (out, Transform { p: pm, q: qm, r: None })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Pencil {
        Pencil::new(
            Matrix::from_i64(3, 2, &[1, 0, 0, 1, 0, 0]),
            Matrix::from_i64(3, 2, &[0, 1, 1, 0, 2, 2]),
        )
        .unwrap()
    }

    #[test]
    fn deterministic() {
        assert_eq!(scramble(&sample(), 7), scramble(&sample(), 7));
        assert_ne!(scramble(&sample(), 7).0, scramble(&sample(), 8).0);
    }

    #[test]
    fn zero_ops_is_identity() {
        let (out, t) = scramble_with_ops(&sample(), 3, 0, 0);
        assert!(t.p.is_identity() && t.q.is_identity());
        assert_eq!(out, sample());
    }

    #[test]
    fn factors_invertible() {
        for seed in 0..20 {
            let (_, t) = scramble(&sample(), seed);
            assert!(t.p.inverse().is_ok());
            assert!(t.q.inverse().is_ok());
        }
    }
}
