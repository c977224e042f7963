use num_traits::One;

use super::coupling::coupling_full;
use super::Transform;
use crate::exactla::{complement, kernel, Matrix, Rational};
use crate::pencil::{reduce_step, strangeness, Pencil, Strangeness};
use crate::{Error, Result};

/// Element `(P, Q, R)` of the weak equivalence group, acting as
/// `(E, A) -> (P E Q, P (E R + A Q))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeakElement {
    pub p: Matrix,
    pub q: Matrix,
    pub r: Matrix,
}

impl WeakElement {
    pub fn new(p: Matrix, q: Matrix, r: Matrix) -> Result<Self> {
        if !p.is_square() {
            return Err(Error::NotSquare { rows: p.rows(), cols: p.cols() });
        }
        if !q.is_square() {
            return Err(Error::NotSquare { rows: q.rows(), cols: q.cols() });
        }
        if r.shape() != q.shape() {
            return Err(Error::ShapeMismatch { expected: q.shape(), found: r.shape() });
        }
        Ok(WeakElement { p, q, r })
    }

    pub fn identity(v: usize, m: usize) -> Self {
        WeakElement { p: Matrix::identity(v), q: Matrix::identity(m), r: Matrix::zeros(m, m) }
    }

    /// `self . other`, i.e. `other` acts first.
    pub fn compose(&self, other: &WeakElement) -> WeakElement {
        WeakElement {
            p: &self.p * &other.p,
            q: &other.q * &self.q,
            r: &(&other.q * &self.r) + &(&other.r * &self.q),
        }
    }

    pub fn inverse(&self) -> Result<WeakElement> {
        let p = self.p.inverse()?;
        let q = self.q.inverse()?;
        let r = -&(&(&q * &self.r) * &q);
        Ok(WeakElement { p, q, r })
    }

    pub fn act(&self, pencil: &Pencil) -> Pencil {
        pencil.weak_transform(&self.p, &self.q, &self.r)
    }
}

/// Weak canonical form determined by `(dim M, dim V, d, a, s)`.
///
/// Domain columns: `d` columns mapped onto `V''`, the rest of `M'`, then
/// `C'` (`s`), then `K'` (`a`). Codomain rows: `V''` (`d`), `W''` (`s`),
/// `D'` (`s + a`), `Z'`.
pub fn weak_canonical_form(m: usize, v: usize, st: Strangeness) -> Result<Pencil> {
    let Strangeness { d, a, s } = st;
    let mp = m
        .checked_sub(s + a)
        .filter(|&mp| mp >= d)
        .ok_or(Error::InvalidStructure("invariants do not fit the domain"))?;
    if d + 2 * s + a > v {
        return Err(Error::InvalidStructure("invariants do not fit the codomain"));
    }
    let mut e = Matrix::zeros(v, m);
    let mut acan = Matrix::zeros(v, m);
    for i in 0..d {
        e[(i, i)] = Rational::one();
    }
    for i in 0..s {
        e[(d + i, mp + i)] = Rational::one();
    }
    for i in 0..s + a {
        acan[(d + s + i, mp + i)] = Rational::one();
    }
    Pencil::new(e, acan)
}

/// Result of [`weak_canonical`].
#[derive(Clone, Debug)]
pub struct WeakCanonical {
    /// `P`, `Q` and `R` (always present).
    pub transform: Transform,
    pub e: Matrix,
    pub a: Matrix,
    pub invariants: Strangeness,
}

/// Brings `p` to its weak canonical form with an explicit group element.
pub fn weak_canonical(p: &Pencil) -> WeakCanonical {
    let e = p.e();
    let st1 = reduce_step(p);
    let m1 = &st1.m_prime;
    let v1 = &st1.v_prime;
    let v2 = m1.map(e);
    let wpp = complement(&v2, v1).expect("E M' lies in E M");
    let lvl = coupling_full(p, m1, v1, &wpp).expect("first reduction step satisfies the coupling hypotheses");

    // M' = X (+) (ker E ∩ M') with E X the canonical basis of V''.
    let em = e * m1.basis();
    let y = em.solve(v2.basis()).expect("V'' is the image of M'");
    let x = m1.basis() * &y;
    let kerm = kernel(e).intersection(m1);

    let mdim = p.cols();
    let vdim = p.rows();
    let q = Matrix::hcat(mdim, &[&x, kerm.basis(), &lvl.c, &lvl.k]);
    let cod = Matrix::hcat(vdim, &[v2.basis(), &wpp, &lvl.d, &lvl.z]);
    let pm = cod.inverse().expect("codomain decomposition is a basis");

    // R = -F A Pi Q: on the M' columns E F A x = A x, on N' columns Pi vanishes.
    let mp = m1.dim();
    let aq = p.a() * &q.column_range(0, mp);
    let fa = e.solve(&aq).expect("A M' lies in E M");
    let r = Matrix::hcat(mdim, &[&(-&fa), &Matrix::zeros(mdim, mdim - mp)]);

    let (ecan, acan) = p.weak_transform(&pm, &q, &r).into_parts();
    let invariants = strangeness(p);
    debug_assert_eq!(invariants.d, v2.dim());
    debug_assert_eq!(invariants.s, wpp.cols());
    debug_assert_eq!(invariants.a, lvl.k.cols());
    WeakCanonical {
        transform: Transform { p: pm, q, r: Some(r) },
        e: ecan,
        a: acan,
        invariants,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l2() -> Pencil {
        Pencil::new(Matrix::from_i64(2, 1, &[1, 0]), Matrix::from_i64(2, 1, &[0, 1])).unwrap()
    }

    fn n2() -> Pencil {
        Pencil::new(Matrix::from_i64(2, 2, &[0, 1, 0, 0]), Matrix::identity(2)).unwrap()
    }

    #[test]
    fn group_laws() {
        let g = WeakElement::new(
            Matrix::from_i64(2, 2, &[1, 1, 0, 1]),
            Matrix::from_i64(2, 2, &[2, 0, 1, 1]),
            Matrix::from_i64(2, 2, &[0, 3, -1, 2]),
        )
        .unwrap();
        let h = WeakElement::new(
            Matrix::from_i64(2, 2, &[0, 1, 1, 0]),
            Matrix::from_i64(2, 2, &[1, -1, 0, 1]),
            Matrix::from_i64(2, 2, &[1, 0, 0, 5]),
        )
        .unwrap();
        let id = WeakElement::identity(2, 2);
        assert_eq!(g.compose(&id), g);
        assert_eq!(id.compose(&g), g);
        assert_eq!(g.compose(&g.inverse().unwrap()), id);
        assert_eq!(g.inverse().unwrap().compose(&g), id);
        let p = Pencil::new(Matrix::from_i64(2, 2, &[1, 2, 3, 4]), Matrix::from_i64(2, 2, &[0, 1, 1, 1])).unwrap();
        assert_eq!(g.compose(&h).act(&p), g.act(&h.act(&p)));
    }

    #[test]
    fn identity_e() {
        let p = Pencil::new(Matrix::identity(3), Matrix::from_i64(3, 3, &[1, 2, 3, 4, 5, 6, 7, 8, 10])).unwrap();
        let w = weak_canonical(&p);
        assert!(w.e.is_identity());
        assert!(w.a.is_zero());
        assert_eq!(w.invariants, Strangeness { d: 3, a: 0, s: 0 });
    }

    #[test]
    fn l2_and_n2() {
        let w = weak_canonical(&l2());
        assert_eq!(w.invariants, Strangeness { d: 0, a: 0, s: 1 });
        assert_eq!(w.e, Matrix::from_i64(2, 1, &[1, 0]));
        assert_eq!(w.a, Matrix::from_i64(2, 1, &[0, 1]));
        let w = weak_canonical(&n2());
        assert_eq!(w.invariants, Strangeness { d: 0, a: 0, s: 1 });
        assert_eq!(w.e, Matrix::from_i64(2, 2, &[0, 1, 0, 0]));
        assert_eq!(w.a, Matrix::from_i64(2, 2, &[0, 0, 0, 1]));
    }

    #[test]
    fn transform_reproduces_form() {
        let p = Pencil::new(
            Matrix::from_i64(3, 3, &[1, 0, 1, 0, 0, 0, 1, 1, 0]),
            Matrix::from_i64(3, 3, &[0, 1, 0, 2, 0, 1, 0, 0, 1]),
        )
        .unwrap();
        let w = weak_canonical(&p);
        let t = &w.transform;
        let got = p.weak_transform(&t.p, &t.q, t.r.as_ref().unwrap());
        assert_eq!(got, Pencil::new(w.e.clone(), w.a.clone()).unwrap());
        assert_eq!(weak_canonical_form(3, 3, w.invariants).unwrap(), got);
    }

    #[test]
    fn layout_rejects_impossible() {
        assert!(weak_canonical_form(1, 1, Strangeness { d: 0, a: 0, s: 1 }).is_err());
        assert_eq!(weak_canonical_form(0, 0, Strangeness { d: 0, a: 0, s: 0 }).unwrap(), Pencil::zero(0, 0));
    }
}
