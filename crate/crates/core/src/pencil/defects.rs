use alloc::vec::Vec;

use num_traits::Zero;

use super::{reduce_fully, reduce_step, Pencil};
use crate::exactla::int;

/// The complete strong-equivalence invariant record apart from the core.
///
/// `alpha[k-1]` is `alpha_k`; `alpha` and `beta_plus` have exactly `index`
/// entries, `beta_minus` has as many entries as the index of the dual of the
/// totally reduced pencil.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct DefectProfile {
    pub alpha: Vec<usize>,
    pub beta_plus: Vec<usize>,
    pub beta_minus: Vec<usize>,
    pub delta: usize,
    pub index: usize,
}

impl DefectProfile {
    fn at(list: &[usize], k: usize) -> usize {
        if k == 0 {
            return 0;
        }
        list.get(k - 1).copied().unwrap_or(0)
    }

    /// `alpha_k` for `k >= 1`, zero beyond the list.
    pub fn alpha_at(&self, k: usize) -> usize {
        Self::at(&self.alpha, k)
    }

    pub fn beta_plus_at(&self, k: usize) -> usize {
        Self::at(&self.beta_plus, k)
    }

    pub fn beta_minus_at(&self, k: usize) -> usize {
        Self::at(&self.beta_minus, k)
    }

    fn horizon(&self) -> usize {
        self.alpha
            .len()
            .max(self.beta_plus.len())
            .max(self.beta_minus.len())
            + 1
    }

    /// `dim M` implied by the defects.
    pub fn domain_dim(&self) -> usize {
        let h = self.horizon();
        self.delta
            + (1..=h)
                .map(|k| {
                    k * (self.alpha_at(k) + self.beta_minus_at(k) + self.beta_plus_at(k + 1))
                })
                .sum::<usize>()
    }

    /// `dim V` implied by the defects.
    pub fn codomain_dim(&self) -> usize {
        let h = self.horizon();
        self.delta
            + (1..=h)
                .map(|k| {
                    k * (self.alpha_at(k) + self.beta_plus_at(k) + self.beta_minus_at(k + 1))
                })
                .sum::<usize>()
    }
}

/// First constraint and observation defects `(alpha_1, beta^+_1)`, read
/// from the dimensions of `M, M', V, V', V''`.
pub fn step_defects(p: &Pencil) -> (usize, usize) {
    let first = reduce_step(p);
    let second = reduce_step(&first.reduced);
    let dm = p.cols() - first.m_prime.dim();
    let dv = p.rows() - first.v_prime.dim();
    let dv2 = first.v_prime.dim() - second.v_prime.dim();
    (dm - dv2, dv - dm)
}

/// Primal sweep, then a second sweep on the dual of the totally reduced pencil.
pub fn full_profile(p: &Pencil) -> DefectProfile {
    let chain = reduce_fully(p);
    let n = chain.index;
    let alpha = chain.steps[..n].iter().map(|s| s.alpha).collect();
    let beta_plus = chain.steps[..n].iter().map(|s| s.beta_plus).collect();

    let dual_chain = reduce_fully(&chain.totally_reduced().dual());
    assert!(
        dual_chain.steps.iter().all(|s| s.alpha == 0),
        "dual of a totally reduced pencil has a constraint defect"
    );
    let beta_minus = dual_chain.steps[..dual_chain.index]
        .iter()
        .map(|s| s.beta_plus)
        .collect();
    let core = dual_chain.totally_reduced();
    assert_eq!(core.rows(), core.cols(), "second sweep core is not square");

    DefectProfile {
        alpha,
        beta_plus,
        beta_minus,
        delta: core.cols(),
        index: n,
    }
}

/// Smallest `n` such that `alpha_k = beta^+_k = 0` for every `k > n`.
pub fn index_from_defects(prof: &DefectProfile) -> usize {
    let last = |l: &[usize]| l.iter().rposition(|&x| x != 0).map_or(0, |i| i + 1);
    last(&prof.alpha).max(last(&prof.beta_plus))
}

/// Regularity through the defects: all `beta^+` and `beta^-` vanish.
pub fn is_regular(p: &Pencil) -> bool {
    if !p.is_square() {
        return false;
    }
    let prof = full_profile(p);
    prof.beta_plus.iter().chain(&prof.beta_minus).all(|&b| b == 0)
}

/// Regularity through determinants: `det(lambda E + A)` has degree at most
/// `n`, so it vanishes identically iff it vanishes at `lambda = 0..=n`.
pub fn is_regular_oracle(p: &Pencil) -> bool {
    if !p.is_square() {
        return false;
    }
    (0..=p.rows() as i64).any(|l| !p.evaluate(&int(l)).det().is_zero())
}

/// The weak-equivalence invariants.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Strangeness {
    /// `dim V''`.
    pub d: usize,
    /// `alpha_1`.
    pub a: usize,
    /// `dim V' - dim V''`.
    pub s: usize,
}

pub fn strangeness(p: &Pencil) -> Strangeness {
    let first = reduce_step(p);
    let second = reduce_step(&first.reduced);
    let d = second.v_prime.dim();
    let s = first.v_prime.dim() - d;
    let (a, _) = step_defects(p);

    let chain = reduce_fully(p);
    let tail: usize = chain.steps.iter().skip(1).map(|st| st.alpha + st.beta_plus).sum();
    assert_eq!(s, tail, "strangeness disagrees with the defect tail sum");
    Strangeness { d, a, s }
}
