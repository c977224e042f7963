//! Small reference implementation of the reduction, kept apart from the
//! library: plain row-major vectors and textbook Gaussian elimination.

use num_traits::{One, Zero};
use pencil_core::{Matrix, Pencil, Rational};

pub type Vector = Vec<Rational>;

/// Row echelon form in place; returns pivot columns.
fn echelon(rows: &mut [Vector], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, p);
        let inv = Rational::one() / &rows[r][c];
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                let pivot_row = rows[r].clone();
                for (x, y) in rows[i].iter_mut().zip(&pivot_row) {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Rank of a set of vectors of length `n`.
pub fn rank(vecs: &[Vector], n: usize) -> usize {
    let mut rows = vecs.to_vec();
    echelon(&mut rows, n).len()
}

/// Basis of `{x : sum_j x_j cols[j] = 0}`.
fn relations(cols: &[Vector], n: usize) -> Vec<Vector> {
    let k = cols.len();
    let mut rows: Vec<Vector> = (0..n).map(|i| cols.iter().map(|c| c[i].clone()).collect()).collect();
    let piv = echelon(&mut rows, k);
    let mut out = Vec::new();
    for free in (0..k).filter(|j| !piv.contains(j)) {
        let mut x = vec![Rational::zero(); k];
        x[free] = Rational::one();
        for (r, &pc) in piv.iter().enumerate() {
            x[pc] = -rows[r][free].clone();
        }
        out.push(x);
    }
    out
}

/// Independent subset spanning the same space.
fn prune(vecs: Vec<Vector>, n: usize) -> Vec<Vector> {
    let mut kept: Vec<Vector> = Vec::new();
    for v in vecs {
        kept.push(v);
        if rank(&kept, n) < kept.len() {
            kept.pop();
        }
    }
    kept
}

fn apply(m: &Matrix, v: &[Rational]) -> Vector {
    (0..m.rows())
        .map(|i| m.row(i).iter().zip(v).map(|(a, b)| a * b).fold(Rational::zero(), |s, x| s + x))
        .collect()
}

pub fn same_span(a: &[Vector], b: &[Vector], n: usize) -> bool {
    let ra = rank(a, n);
    let rb = rank(b, n);
    let mut all = a.to_vec();
    all.extend(b.iter().cloned());
    ra == rb && rank(&all, n) == ra
}

/// Columns of a matrix as vectors.
pub fn columns(m: &Matrix) -> Vec<Vector> {
    (0..m.cols()).map(|j| m.column(j)).collect()
}

/// `M^(k)` and `V^(k)` of the iterated reduction, `k = 0..=index+1`.
pub struct Chain {
    pub m: Vec<Vec<Vector>>,
    pub v: Vec<Vec<Vector>>,
    pub index: usize,
}

pub fn chain(e: &Matrix, a: &Matrix) -> Chain {
    let (vd, md) = (e.rows(), e.cols());
    let unit = |n: usize, i: usize| -> Vector {
        (0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect()
    };
    let mut ms = vec![(0..md).map(|i| unit(md, i)).collect::<Vec<_>>()];
    let mut vs = vec![(0..vd).map(|i| unit(vd, i)).collect::<Vec<_>>()];
    loop {
        let mk = ms.last().unwrap().clone();
        let vnext = prune(mk.iter().map(|b| apply(e, b)).collect(), vd);
        // x = sum c_i b_i with A x in span(vnext).
        let mut cols: Vec<Vector> = mk.iter().map(|b| apply(a, b)).collect();
        cols.extend(vnext.iter().map(|w| w.iter().map(|x| -x.clone()).collect()));
        let mnext = prune(
            relations(&cols, vd)
                .into_iter()
                .map(|c| {
                    let mut x = vec![Rational::zero(); md];
                    for (ci, b) in c.iter().zip(&mk) {
                        for (xj, bj) in x.iter_mut().zip(b) {
                            *xj += ci * bj;
                        }
                    }
                    x
                })
                .collect(),
            md,
        );
        let stalled = vnext.len() == vs.last().unwrap().len();
        ms.push(mnext);
        vs.push(vnext);
        if stalled {
            break;
        }
    }
    let index = vs.len() - 2;
    Chain { m: ms, v: vs, index }
}

impl Chain {
    fn dm(&self, k: usize) -> usize {
        self.m[k - 1].len() - self.m[k].len()
    }

    fn dv(&self, k: usize) -> usize {
        self.v[k - 1].len() - self.v[k].len()
    }

    pub fn alpha(&self) -> Vec<usize> {
        (1..=self.index).map(|k| self.dm(k) - self.dv(k + 1)).collect()
    }

    pub fn beta_plus(&self) -> Vec<usize> {
        (1..=self.index).map(|k| self.dv(k) - self.dm(k)).collect()
    }
}

/// Solves `B y = w` for independent columns `B`.
fn coords(basis: &[Vector], w: &[Rational], n: usize) -> Vector {
    let mut cols = basis.to_vec();
    cols.push(w.iter().map(|x| -x.clone()).collect());
    let rel = relations(&cols, n);
    assert_eq!(rel.len(), 1, "vector outside the span");
    let r = &rel[0];
    let last = r[basis.len()].clone();
    r[..basis.len()].iter().map(|x| x / &last).collect()
}

pub struct Profile {
    pub alpha: Vec<usize>,
    pub beta_plus: Vec<usize>,
    pub beta_minus: Vec<usize>,
    pub delta: usize,
    pub index: usize,
    pub d: usize,
    pub a: usize,
    pub s: usize,
}

pub fn profile(p: &Pencil) -> Profile {
    let ch = chain(p.e(), p.a());
    let n = ch.index;
    let (bm, bv) = (&ch.m[n], &ch.v[n]);
    let restrict = |m: &Matrix| {
        let cols: Vec<Vector> = bm.iter().map(|b| coords(bv, &apply(m, b), p.rows())).collect();
        Matrix::from_fn(bv.len(), cols.len(), |i, j| cols[j][i].clone())
    };
    let (ei, ai) = (restrict(p.e()), restrict(p.a()));
    let dual = chain(&ei.transpose(), &ai.transpose());
    let core = &dual.m[dual.index];

    let alpha = ch.alpha();
    let d = ch.v[2.min(ch.v.len() - 1)].len();
    let s = ch.v[1].len() - d;
    Profile {
        a: alpha.first().copied().unwrap_or(0),
        beta_plus: ch.beta_plus(),
        beta_minus: dual.beta_plus(),
        delta: core.len(),
        index: n,
        alpha,
        d,
        s,
    }
}
