use alloc::vec;
use alloc::vec::Vec;

use super::Pencil;
use crate::exactla::{image, preimage, Matrix, Subspace};

/// One reduction of a pencil `(E, A) : M -> V`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedStep {
    /// `V' = E M`.
    pub v_prime: Subspace,
    /// `M' = {x : A x in V'}`.
    pub m_prime: Subspace,
    /// `E` and `A` restricted to `M' -> V'`, written in the canonical bases
    /// of `M'` and `V'`.
    pub reduced: Pencil,
}

/// Computes `V' = E M`, `M' = A^{-1} V'` and the restriction `M' -> V'`.
pub fn reduce_step(p: &Pencil) -> ReducedStep {
    let v_prime = image(p.e());
    let m_prime = preimage(p.a(), &v_prime);
    let emb = m_prime.basis();
    let e = v_prime
        .coords(&(p.e() * emb))
        .expect("E M' lies in V'");
    let a = v_prime
        .coords(&(p.a() * emb))
        .expect("A M' lies in V' by construction of M'");
    ReducedStep {
        v_prime,
        m_prime,
        reduced: Pencil::new(e, a).expect("shapes agree"),
    }
}

/// System `k` of the chain, seen from the original spaces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionStep {
    /// `M^(k)` in original domain coordinates.
    pub m_k: Subspace,
    /// `V^(k)` in original codomain coordinates.
    pub v_k: Subspace,
    /// First constraint defect of system `k`, i.e. `alpha_{k+1}`.
    pub alpha: usize,
    /// First observation defect of system `k`, i.e. `beta^+_{k+1}`.
    pub beta_plus: usize,
}

/// Full iterated reduction of a pencil.
///
/// `steps[k]` describes the `k`-th reduced system for `k = 0..=index`; the
/// list stops at the first system whose reduction stalls (`V' = V`).
#[derive(Clone, Debug)]
pub struct ReductionChain {
    pub steps: Vec<ReductionStep>,
    pub index: usize,
    systems: Vec<Pencil>,
    local: Vec<ReducedStep>,
    domain_embeddings: Vec<Matrix>,
    codomain_embeddings: Vec<Matrix>,
}

impl ReductionChain {
    /// The `k`-th reduced pencil in its own coordinates.
    pub fn system(&self, k: usize) -> &Pencil {
        &self.systems[k]
    }

    /// The reduction step applied to `system(k)`, in that system's coordinates.
    pub fn local_step(&self, k: usize) -> &ReducedStep {
        &self.local[k]
    }

    /// Injective map from the coordinates of `system(k)`'s domain into the
    /// original domain (columns form a basis of `M^(k)`).
    pub fn domain_embedding(&self, k: usize) -> &Matrix {
        &self.domain_embeddings[k]
    }

    pub fn codomain_embedding(&self, k: usize) -> &Matrix {
        &self.codomain_embeddings[k]
    }

    /// `(E^(inf), A^(inf))`, in the coordinates given by the last embeddings.
    pub fn totally_reduced(&self) -> &Pencil {
        &self.systems[self.index]
    }

    /// `dim Delta M^(k) = dim M^(k-1) - dim M^(k)` for `k >= 1`; zero past the index.
    pub fn delta_m(&self, k: usize) -> usize {
        assert!(k >= 1);
        if k > self.index {
            return 0;
        }
        self.steps[k - 1].m_k.dim() - self.steps[k].m_k.dim()
    }

    /// `dim Delta V^(k)` for `k >= 1`; zero past the index.
    pub fn delta_v(&self, k: usize) -> usize {
        assert!(k >= 1);
        if k > self.index {
            return 0;
        }
        self.steps[k - 1].v_k.dim() - self.steps[k].v_k.dim()
    }

    /// `alpha_k`, `k >= 1`.
    pub fn alpha(&self, k: usize) -> usize {
        self.steps.get(k - 1).map_or(0, |s| s.alpha)
    }

    /// `beta^+_k`, `k >= 1`.
    pub fn beta_plus(&self, k: usize) -> usize {
        self.steps.get(k - 1).map_or(0, |s| s.beta_plus)
    }
}

/// Iterates [`reduce_step`] until the codomain stalls. Terminates after at
/// most `dim V` reductions since every non-stalling step loses a dimension.
pub fn reduce_fully(p: &Pencil) -> ReductionChain {
    let mut systems = vec![p.clone()];
    let mut local: Vec<ReducedStep> = Vec::new();
    let mut dom = vec![Matrix::identity(p.cols())];
    let mut cod = vec![Matrix::identity(p.rows())];
    loop {
        let k = systems.len() - 1;
        let step = reduce_step(&systems[k]);
        let stalled = step.v_prime.dim() == systems[k].rows();
        if stalled {
            local.push(step);
            break;
        }
        dom.push(&dom[k] * step.m_prime.basis());
        cod.push(&cod[k] * step.v_prime.basis());
        systems.push(step.reduced.clone());
        local.push(step);
    }
    let index = systems.len() - 1;

    let steps = (0..=index)
        .map(|k| {
            let m = systems[k].cols();
            let v = systems[k].rows();
            let m1 = local[k].m_prime.dim();
            let v1 = local[k].v_prime.dim();
            let v2 = if k < index { local[k + 1].v_prime.dim() } else { v1 };
            let dm = m - m1;
            ReductionStep {
                m_k: Subspace::span(&dom[k]),
                v_k: Subspace::span(&cod[k]),
                alpha: dm - (v1 - v2),
                beta_plus: (v - v1) - dm,
            }
        })
        .collect();

    ReductionChain {
        steps,
        index,
        systems,
        local,
        domain_embeddings: dom,
        codomain_embeddings: cod,
    }
}
