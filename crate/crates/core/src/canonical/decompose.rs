use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use super::coupling::coupling_full;
use super::structure::KroneckerStructure;
use super::Transform;
use crate::exactla::{Matrix, Rational};
use crate::pencil::{is_regular, reduce_fully, Pencil};
use crate::{Error, Result};

/// Complements built at level `k` (between `M^(k-1) ⊃ M^(k)` and
/// `V^(k-1) ⊃ V^(k)`), as columns in original coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Level {
    /// `N^(k) = [C^(k) | K^(k)]`.
    pub n: Matrix,
    pub c: Matrix,
    pub k: Matrix,
    /// `W^(k) = [D^(k) | Z^(k)]`.
    pub w: Matrix,
    /// `D^(k) = A N^(k)`.
    pub d: Matrix,
    pub z: Matrix,
}

/// Output of the primal sweep.
#[derive(Clone, Debug)]
pub struct Decomposition {
    /// `levels[k - 1]` is level `k`, for `k = 1..=index`.
    pub levels: Vec<Level>,
    /// Basis of `M^(inf)` in original coordinates.
    pub m_inf: Matrix,
    /// Basis of `V^(inf)` in original coordinates.
    pub v_inf: Matrix,
    /// `(E^(inf), A^(inf))` in the bases `m_inf`, `v_inf`.
    pub reduced: Pencil,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SequenceKind {
    /// `0 <-E- m_1 -A-> v_1 <-E- m_2 ... -A-> v_k`.
    Nilpotent,
    /// `v_1 <-E- m_1 -A-> v_2 ... -A-> v_k`, with `k - 1` domain vectors.
    L,
}

/// A chain of basis vectors on which `E` and `A` act as shifts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sequence {
    pub kind: SequenceKind,
    /// `m_1, m_2, ...` in original domain coordinates.
    pub domain: Vec<Vec<Rational>>,
    /// `v_1, v_2, ...` in original codomain coordinates.
    pub codomain: Vec<Vec<Rational>>,
}

impl Sequence {
    /// Block size `k`.
    pub fn size(&self) -> usize {
        self.codomain.len()
    }
}

/// Builds complements of the reduction chain from the innermost level
/// outwards, one coupling construction per level.
pub fn primal_decomposition(p: &Pencil) -> Decomposition {
    let chain = reduce_fully(p);
    let n = chain.index;
    let mut levels = Vec::with_capacity(n);
    // W^(n+1) = 0, in the coordinates of system n.
    let mut w_next = Matrix::zeros(chain.system(n).rows(), 0);
    for k in (1..=n).rev() {
        let sys = chain.system(k - 1);
        let st = chain.local_step(k - 1);
        let wpp = st.v_prime.basis() * &w_next;
        let lvl = coupling_full(sys, &st.m_prime, &st.v_prime, &wpp)
            .expect("reduction chain satisfies the coupling hypotheses");
        let jm = chain.domain_embedding(k - 1);
        let jv = chain.codomain_embedding(k - 1);
        levels.push(Level {
            n: jm * &lvl.n,
            c: jm * &lvl.c,
            k: jm * &lvl.k,
            w: jv * &lvl.w,
            d: jv * &lvl.d,
            z: jv * &lvl.z,
        });
        w_next = lvl.w;
    }
    levels.reverse();
    Decomposition {
        levels,
        m_inf: chain.domain_embedding(n).clone(),
        v_inf: chain.codomain_embedding(n).clone(),
        reduced: chain.totally_reduced().clone(),
    }
}

impl Decomposition {
    pub fn index(&self) -> usize {
        self.levels.len()
    }

    /// Regroups the level bases into `N_k` and `L_k` sequences.
    ///
    /// Going outwards, each `C^(k)` vector extends the sequence ending at
    /// the matching `W^(k+1)` vector, each `K^(k)` vector opens an `N`
    /// sequence and each `Z^(k)` vector opens an `L` sequence. The result is
    /// ordered like the basis of `W^(1)`.
    pub fn sequences(&self) -> Vec<Sequence> {
        let mut open: Vec<Sequence> = Vec::new();
        for lvl in self.levels.iter().rev() {
            let nc = lvl.c.cols();
            assert_eq!(open.len(), nc, "C^(k) does not match W^(k+1)");
            let mut next = Vec::with_capacity(lvl.w.cols());
            for (i, mut seq) in open.into_iter().enumerate() {
                seq.domain.push(lvl.c.column(i));
                seq.codomain.push(lvl.d.column(i));
                next.push(seq);
            }
            for j in 0..lvl.k.cols() {
                next.push(Sequence {
                    kind: SequenceKind::Nilpotent,
                    domain: vec![lvl.k.column(j)],
                    codomain: vec![lvl.d.column(nc + j)],
                });
            }
            for j in 0..lvl.z.cols() {
                next.push(Sequence {
                    kind: SequenceKind::L,
                    domain: Vec::new(),
                    codomain: vec![lvl.z.column(j)],
                });
            }
            open = next;
        }
        open
    }
}

fn columns_to_matrix(rows: usize, cols: &[&Vec<Rational>]) -> Matrix {
    Matrix::from_fn(rows, cols.len(), |i, j| cols[j][i].clone())
}

/// Second sweep on a totally reduced pencil (surjective `E`).
///
/// `p * E * q = diag(I, L^T blocks)` and `p * A * q = diag(core, L^T blocks)`,
/// with the `L^T` blocks in construction order right after the core.
#[derive(Clone, Debug)]
pub struct DualDecomposition {
    pub p: Matrix,
    pub q: Matrix,
    pub core_dim: usize,
    pub core: Matrix,
    /// Sizes `k` of the `L_k^T` blocks, in layout order.
    pub blocks: Vec<usize>,
    /// Primal sweep of the transposed pencil, in its own coordinates.
    pub dual: Decomposition,
}

/// Runs the primal sweep on `(E^T, A^T)` and transposes the resulting bases
/// back: the domain basis of the dual becomes the rows of `p`, and the dual
/// basis of its codomain basis becomes the columns of `q`.
pub fn dual_decomposition(p: &Pencil) -> Result<DualDecomposition> {
    if p.e().rank() != p.rows() {
        return Err(Error::NotSurjective);
    }
    let dp = p.dual();
    let dec = primal_decomposition(&dp);
    let seqs = dec.sequences();
    assert!(
        seqs.iter().all(|s| s.kind == SequenceKind::L),
        "dual of a surjective pencil produced a nilpotent sequence"
    );
    let delta = dec.m_inf.cols();
    assert_eq!(delta, dec.v_inf.cols(), "dual core is not square");

    // Dual domain (= original codomain coordinates) and dual codomain bases.
    let dom_vecs: Vec<&Vec<Rational>> = seqs.iter().flat_map(|s| s.domain.iter()).collect();
    let cod_vecs: Vec<&Vec<Rational>> = seqs.iter().flat_map(|s| s.codomain.iter()).collect();
    let qt = Matrix::hcat(
        dp.cols(),
        &[&dec.m_inf, &columns_to_matrix(dp.cols(), &dom_vecs)],
    );
    let vt = Matrix::hcat(
        dp.rows(),
        &[&dec.v_inf, &columns_to_matrix(dp.rows(), &cod_vecs)],
    );
    let vt_inv = vt.inverse().expect("dual codomain basis is a basis");

    let mut prow = qt.transpose();
    let q = vt_inv.transpose();

    let ec = (&(&prow * p.e()) * &q).row_range(0, delta).column_range(0, delta);
    let ec_inv = ec.inverse().expect("core of the second sweep is invertible");
    let scaled = &ec_inv * &prow.row_range(0, delta);
    let rest = prow.row_range(delta, prow.rows());
    prow = Matrix::vcat(prow.cols(), &[&scaled, &rest]);

    let core = (&(&prow * p.a()) * &q).row_range(0, delta).column_range(0, delta);
    Ok(DualDecomposition {
        p: prow,
        q,
        core_dim: delta,
        core,
        blocks: seqs.iter().map(Sequence::size).collect(),
        dual: dec,
    })
}

/// Kronecker decomposition: `t.p * E * t.q` and `t.p * A * t.q` equal
/// [`super::synthesize`] of the returned structure exactly.
pub fn kronecker_decompose(p: &Pencil) -> (Transform, KroneckerStructure) {
    let dec = primal_decomposition(p);
    let seqs = dec.sequences();

    let vdim = p.rows();
    let mdim = p.cols();
    let v_inf = dec.v_inf.cols();

    // Primal bases: [V^(inf) | sequence v's], [M^(inf) | sequence m's].
    let mut v_offsets = Vec::with_capacity(seqs.len());
    let mut cod_vecs = Vec::new();
    for s in &seqs {
        v_offsets.push(v_inf + cod_vecs.len());
        cod_vecs.extend(s.codomain.iter());
    }
    let vb = Matrix::hcat(vdim, &[&dec.v_inf, &columns_to_matrix(vdim, &cod_vecs)]);
    let pinv = vb.inverse().expect("primal codomain basis is a basis");

    let dd = dual_decomposition(&dec.reduced).expect("totally reduced E is surjective");
    let p_inf = &dd.p * &pinv.row_range(0, v_inf);
    let q_inf = &dec.m_inf * &dd.q;
    let delta = dd.core_dim;

    let mut rows: Vec<Matrix> = vec![p_inf.row_range(0, delta)];
    let mut cols: Vec<Matrix> = vec![q_inf.column_range(0, delta)];

    let mut nilpotent = BTreeMap::new();
    let mut l_blocks = BTreeMap::new();
    let mut lt_blocks = BTreeMap::new();

    for kind in [SequenceKind::Nilpotent, SequenceKind::L] {
        let mut picked: Vec<usize> = (0..seqs.len()).filter(|&i| seqs[i].kind == kind).collect();
        picked.sort_by_key(|&i| seqs[i].size());
        for i in picked {
            let s = &seqs[i];
            let k = s.size();
            let counts = match kind {
                SequenceKind::Nilpotent => &mut nilpotent,
                SequenceKind::L => &mut l_blocks,
            };
            *counts.entry(k).or_insert(0) += 1;
            rows.push(pinv.row_range(v_offsets[i], v_offsets[i] + k));
            let dom: Vec<&Vec<Rational>> = s.domain.iter().collect();
            cols.push(columns_to_matrix(mdim, &dom));
        }
    }

    // L^T blocks of the second sweep, stable-sorted by size.
    let mut spans = Vec::with_capacity(dd.blocks.len());
    let (mut r0, mut c0) = (delta, delta);
    for &k in &dd.blocks {
        spans.push((k, r0, c0));
        r0 += k - 1;
        c0 += k;
    }
    spans.sort_by_key(|&(k, _, _)| k);
    for (k, r, c) in spans {
        *lt_blocks.entry(k).or_insert(0) += 1;
        rows.push(p_inf.row_range(r, r + k - 1));
        cols.push(q_inf.column_range(c, c + k));
    }

    let row_refs: Vec<&Matrix> = rows.iter().collect();
    let col_refs: Vec<&Matrix> = cols.iter().collect();
    let pm = Matrix::vcat(vdim, &row_refs);
    let qm = Matrix::hcat(mdim, &col_refs);

    let structure = KroneckerStructure {
        nilpotent,
        l_blocks,
        lt_blocks,
        core_dim: delta,
        core: Some(dd.core),
    };
    (Transform { p: pm, q: qm, r: None }, structure)
}

/// Weierstrass form of a regular pencil: `E = diag(I, N)`, `A = diag(C, I)`.
#[derive(Clone, Debug)]
pub struct Weierstrass {
    pub transform: Transform,
    /// Sizes of the `N_k^E` blocks, ascending.
    pub nilpotent_sizes: Vec<usize>,
    pub core: Matrix,
}

pub fn weierstrass(p: &Pencil) -> Result<Weierstrass> {
    if !is_regular(p) {
        return Err(Error::NotRegular);
    }
    let (transform, s) = kronecker_decompose(p);
    assert!(
        s.l_blocks.is_empty() && s.lt_blocks.is_empty(),
        "regular pencil with rectangular blocks"
    );
    Ok(Weierstrass {
        transform,
        nilpotent_sizes: s.nilpotent_sizes(),
        core: s.core.expect("decomposition always returns the core"),
    })
}
