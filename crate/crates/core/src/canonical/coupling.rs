use crate::exactla::{complement, image, kernel, preimage, Matrix, Subspace};
use crate::pencil::Pencil;
use crate::{Error, Result};

/// Splits the domain of `e` as `M = M' (+) C' (+) K'` given a complement
/// `W''` of `E M'` inside `E M`.
///
/// Returns `(C', K')` where `E C' = W''` column by column and `K'` is a
/// complement of `ker E ∩ M'` in `ker E`.
pub fn coupling_step(e: &Matrix, m_prime: &Subspace, wpp: &Matrix) -> Result<(Matrix, Matrix)> {
    if m_prime.ambient_dim() != e.cols() || wpp.rows() != e.rows() {
        return Err(Error::CouplingPrecondition("dimension mismatch"));
    }
    if wpp.rank() != wpp.cols() {
        return Err(Error::CouplingPrecondition("W'' basis is not independent"));
    }
    let im = image(e);
    let em = m_prime.map(e);
    let w = Subspace::span(wpp);
    if em.dim() + w.dim() != im.dim() || em.sum(&w) != im {
        return Err(Error::CouplingPrecondition("E M is not E M' (+) W''"));
    }

    let c = e.solve(wpp).expect("W'' lies in the image of E");
    let ker = kernel(e);
    let k = complement(&ker.intersection(m_prime), &ker).expect("intersection is inside ker E");
    Ok((c, k))
}

/// One level of the coupling construction, in the coordinates of the pencil
/// it was applied to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CouplingLevel {
    /// Domain part mapped by `E` onto the given `W''` basis.
    pub c: Matrix,
    /// Part of `ker E` outside `M'`.
    pub k: Matrix,
    /// `[C' | K']`, a complement of `M'`.
    pub n: Matrix,
    /// `A N'`, column by column.
    pub d: Matrix,
    /// Complement of `V' (+) D'` in `V`.
    pub z: Matrix,
    /// `[D' | Z']`, a complement of `V'`.
    pub w: Matrix,
}

/// Builds `N' = C' (+) K'`, `D' = A N'` and `Z'` with `V = V' (+) D' (+) Z'`.
pub fn coupling_full(
    p: &Pencil,
    m_prime: &Subspace,
    v_prime: &Subspace,
    wpp: &Matrix,
) -> Result<CouplingLevel> {
    if *v_prime != image(p.e()) {
        return Err(Error::CouplingPrecondition("V' is not the image of E"));
    }
    if *m_prime != preimage(p.a(), v_prime) {
        return Err(Error::CouplingPrecondition("M' is not the preimage of V' under A"));
    }
    let (c, k) = coupling_step(p.e(), m_prime, wpp)?;
    let n = Matrix::hcat(p.cols(), &[&c, &k]);
    let d = p.a() * &n;
    assert_eq!(d.rank(), n.cols(), "A is not injective on N'");
    let vd = v_prime.sum(&Subspace::span(&d));
    assert_eq!(vd.dim(), v_prime.dim() + d.cols(), "A N' meets V'");
    let z = complement(&vd, &Subspace::full(p.rows())).expect("any subspace is in V");
    let w = Matrix::hcat(p.rows(), &[&d, &z]);
    Ok(CouplingLevel { c, k, n, d, z, w })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pencil::reduce_step;

    #[test]
    fn step_identity() {
        let (c, k) = coupling_step(&Matrix::identity(2), &Subspace::full(2), &Matrix::zeros(2, 0)).unwrap();
        assert_eq!((c.cols(), k.cols()), (0, 0));
    }

    #[test]
    fn step_shift() {
        let e = Matrix::from_i64(2, 2, &[0, 1, 0, 0]);
        let m1 = Subspace::span(&Matrix::from_i64(2, 1, &[1, 0]));
        let (c, k) = coupling_step(&e, &m1, &Matrix::from_i64(2, 1, &[1, 0])).unwrap();
        assert_eq!(c, Matrix::from_i64(2, 1, &[0, 1]));
        assert_eq!(k.cols(), 0);
    }

    #[test]
    fn step_zero_map() {
        let (c, k) = coupling_step(&Matrix::zeros(2, 2), &Subspace::zero(2), &Matrix::zeros(2, 0)).unwrap();
        assert_eq!(c.cols(), 0);
        assert_eq!(k, Matrix::identity(2));
    }

    #[test]
    fn step_rejects_bad_complement() {
        let e = Matrix::from_i64(2, 2, &[0, 1, 0, 0]);
        let m1 = Subspace::span(&Matrix::from_i64(2, 1, &[1, 0]));
        let bad = Matrix::from_i64(2, 1, &[0, 1]);
        assert!(matches!(coupling_step(&e, &m1, &bad), Err(Error::CouplingPrecondition(_))));
    }

    #[test]
    fn full_zero_pencil() {
        let p = Pencil::zero(1, 1);
        let st = reduce_step(&p);
        let lvl = coupling_full(&p, &st.m_prime, &st.v_prime, &Matrix::zeros(1, 0)).unwrap();
        assert_eq!(lvl.n.cols(), 0);
        assert_eq!(lvl.d.cols(), 0);
        assert_eq!(lvl.z, Matrix::identity(1));
    }

    #[test]
    fn full_l2_outer_level() {
        let p = Pencil::new(Matrix::from_i64(2, 1, &[1, 0]), Matrix::from_i64(2, 1, &[0, 1])).unwrap();
        let st = reduce_step(&p);
        let lvl = coupling_full(&p, &st.m_prime, &st.v_prime, &Matrix::from_i64(2, 1, &[1, 0])).unwrap();
        assert_eq!(lvl.c, Matrix::from_i64(1, 1, &[1]));
        assert_eq!(lvl.k.cols(), 0);
        assert_eq!(lvl.d, Matrix::from_i64(2, 1, &[0, 1]));
        assert_eq!(lvl.z.cols(), 0);
    }

    #[test]
    fn full_index_zero() {
        let p = Pencil::new(Matrix::identity(2), Matrix::from_i64(2, 2, &[1, 1, 0, 1])).unwrap();
        let st = reduce_step(&p);
        let lvl = coupling_full(&p, &st.m_prime, &st.v_prime, &Matrix::zeros(2, 0)).unwrap();
        assert_eq!((lvl.n.cols(), lvl.w.cols()), (0, 0));
    }
}
