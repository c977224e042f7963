use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::One;

use crate::exactla::{Matrix, Rational};
use crate::pencil::{DefectProfile, Pencil};
use crate::{Error, Result};

/// Block multiset of a Kronecker form.
///
/// Maps go from block size `k >= 1` to a positive count. An `L_k` block is
/// `k x (k-1)`, an `L_k^T` block `(k-1) x k`, an `N_k` block `k x k`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct KroneckerStructure {
    pub nilpotent: BTreeMap<usize, usize>,
    pub l_blocks: BTreeMap<usize, usize>,
    pub lt_blocks: BTreeMap<usize, usize>,
    pub core_dim: usize,
    /// `core_dim x core_dim` matrix `C` of the regular part `(I, C)`, if known.
    pub core: Option<Matrix>,
}

impl KroneckerStructure {
    /// Checks block sizes and counts, and the core shape.
    pub fn validate(&self) -> Result<()> {
        for map in [&self.nilpotent, &self.l_blocks, &self.lt_blocks] {
            if map.contains_key(&0) {
                return Err(Error::InvalidStructure("block size must be at least 1"));
            }
            if map.values().any(|&c| c == 0) {
                return Err(Error::InvalidStructure("block counts must be at least 1"));
            }
        }
        if let Some(core) = &self.core {
            if core.shape() != (self.core_dim, self.core_dim) {
                return Err(Error::CoreShape {
                    core_dim: self.core_dim,
                    rows: core.rows(),
                    cols: core.cols(),
                });
            }
        }
        Ok(())
    }

    /// `dim M`.
    pub fn domain_dim(&self) -> usize {
        self.core_dim
            + self.nilpotent.iter().map(|(k, c)| k * c).sum::<usize>()
            + self.l_blocks.iter().map(|(k, c)| (k - 1) * c).sum::<usize>()
            + self.lt_blocks.iter().map(|(k, c)| k * c).sum::<usize>()
    }

    /// `dim V`.
    pub fn codomain_dim(&self) -> usize {
        self.core_dim
            + self.nilpotent.iter().map(|(k, c)| k * c).sum::<usize>()
            + self.l_blocks.iter().map(|(k, c)| k * c).sum::<usize>()
            + self.lt_blocks.iter().map(|(k, c)| (k - 1) * c).sum::<usize>()
    }

    /// The defect profile a pencil with this structure must have.
    pub fn expected_profile(&self) -> DefectProfile {
        let top = |m: &BTreeMap<usize, usize>| m.keys().next_back().copied().unwrap_or(0);
        let index = top(&self.nilpotent).max(top(&self.l_blocks));
        let list = |m: &BTreeMap<usize, usize>, len: usize| -> Vec<usize> {
            (1..=len).map(|k| m.get(&k).copied().unwrap_or(0)).collect()
        };
        DefectProfile {
            alpha: list(&self.nilpotent, index),
            beta_plus: list(&self.l_blocks, index),
            beta_minus: list(&self.lt_blocks, top(&self.lt_blocks)),
            delta: self.core_dim,
            index,
        }
    }

    /// Block sizes of the nilpotent part, ascending, with multiplicity.
    pub fn nilpotent_sizes(&self) -> Vec<usize> {
        expand(&self.nilpotent)
    }
}

pub(crate) fn expand(m: &BTreeMap<usize, usize>) -> Vec<usize> {
    m.iter()
        .flat_map(|(&k, &c)| core::iter::repeat_n(k, c))
        .collect()
}

fn counts(list: &[usize]) -> BTreeMap<usize, usize> {
    list.iter()
        .enumerate()
        .filter(|(_, &c)| c > 0)
        .map(|(i, &c)| (i + 1, c))
        .collect()
}

/// Reads the block counts off a defect profile: `alpha_k` blocks `N_k`,
/// `beta^+_k` blocks `L_k`, `beta^-_k` blocks `L_k^T`.
pub fn structure_from_profile(prof: &DefectProfile, core: Option<Matrix>) -> Result<KroneckerStructure> {
    let s = KroneckerStructure {
        nilpotent: counts(&prof.alpha),
        l_blocks: counts(&prof.beta_plus),
        lt_blocks: counts(&prof.beta_minus),
        core_dim: prof.delta,
        core,
    };
    s.validate()?;
    Ok(s)
}

/// `(N_k^E, N_k^A)`: upper shift and identity.
pub fn nilpotent_block(k: usize) -> (Matrix, Matrix) {
    let mut e = Matrix::zeros(k, k);
    for j in 1..k {
        e[(j - 1, j)] = Rational::one();
    }
    (e, Matrix::identity(k))
}

/// `(L_k^E, L_k^A)`, both `k x (k-1)`: ones on the diagonal for `E`, on the
/// subdiagonal for `A`.
pub fn l_block(k: usize) -> (Matrix, Matrix) {
    assert!(k >= 1);
    let mut e = Matrix::zeros(k, k - 1);
    let mut a = Matrix::zeros(k, k - 1);
    for j in 0..k - 1 {
        e[(j, j)] = Rational::one();
        a[(j + 1, j)] = Rational::one();
    }
    (e, a)
}

/// `((L_k^E)^T, (L_k^A)^T)`.
pub fn lt_block(k: usize) -> (Matrix, Matrix) {
    let (e, a) = l_block(k);
    (e.transpose(), a.transpose())
}

/// Block-diagonal pencil: core `(I, C)`, then `N` blocks, `L` blocks and
/// `L^T` blocks, each family by ascending size. A missing core is zero.
pub fn synthesize(s: &KroneckerStructure) -> Pencil {
    let mut es = Vec::new();
    let mut as_ = Vec::new();
    es.push(Matrix::identity(s.core_dim));
    as_.push(
        s.core
            .clone()
            .unwrap_or_else(|| Matrix::zeros(s.core_dim, s.core_dim)),
    );
    type Builder = fn(usize) -> (Matrix, Matrix);
    let families: [(&BTreeMap<usize, usize>, Builder); 3] = [
        (&s.nilpotent, nilpotent_block),
        (&s.l_blocks, l_block),
        (&s.lt_blocks, lt_block),
    ];
    for (map, make) in families {
        for k in expand(map) {
            let (e, a) = make(k);
            es.push(e);
            as_.push(a);
        }
    }
    let e_refs: Vec<&Matrix> = es.iter().collect();
    let a_refs: Vec<&Matrix> = as_.iter().collect();
    Pencil::new(Matrix::block_diag(&e_refs), Matrix::block_diag(&a_refs)).expect("same block shapes")
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn single(map: &[(usize, usize)]) -> BTreeMap<usize, usize> {
        map.iter().copied().collect()
    }

    #[test]
    fn from_profile() {
        let prof = DefectProfile { alpha: vec![0, 1], beta_plus: vec![0, 0], index: 2, ..Default::default() };
        let s = structure_from_profile(&prof, None).unwrap();
        assert_eq!(s.nilpotent, single(&[(2, 1)]));
        assert!(s.l_blocks.is_empty() && s.lt_blocks.is_empty());
        assert_eq!(s.core_dim, 0);

        let prof = DefectProfile { alpha: vec![0, 0], beta_plus: vec![0, 1], index: 2, ..Default::default() };
        let s = structure_from_profile(&prof, None).unwrap();
        assert_eq!(s.l_blocks, single(&[(2, 1)]));

        let prof = DefectProfile { delta: 3, ..Default::default() };
        let s = structure_from_profile(&prof, Some(Matrix::identity(3))).unwrap();
        assert_eq!(s.core_dim, 3);
        assert!(s.nilpotent.is_empty());

        let err = structure_from_profile(&prof, Some(Matrix::identity(2)));
        assert!(matches!(err, Err(Error::CoreShape { .. })));
    }

    #[test]
    fn synthesize_examples() {
        let s = KroneckerStructure { nilpotent: single(&[(2, 1)]), ..Default::default() };
        let p = synthesize(&s);
        assert_eq!(p.e(), &Matrix::from_i64(2, 2, &[0, 1, 0, 0]));
        assert_eq!(p.a(), &Matrix::identity(2));

        let s = KroneckerStructure { l_blocks: single(&[(1, 1)]), ..Default::default() };
        let p = synthesize(&s);
        assert_eq!(p.e().shape(), (1, 0));

        let s = KroneckerStructure { core_dim: 1, core: Some(Matrix::identity(1)), ..Default::default() };
        let p = synthesize(&s);
        assert_eq!(p.e(), &Matrix::identity(1));
        assert_eq!(p.a(), &Matrix::identity(1));
    }

    #[test]
    fn dims_follow_block_shapes() {
        let s = KroneckerStructure {
            nilpotent: single(&[(1, 2), (3, 1)]),
            l_blocks: single(&[(1, 1), (2, 2)]),
            lt_blocks: single(&[(3, 1)]),
            core_dim: 2,
            core: None,
        };
        let p = synthesize(&s);
        assert_eq!((p.rows(), p.cols()), (s.codomain_dim(), s.domain_dim()));
        assert_eq!(s.nilpotent_sizes(), vec![1, 1, 3]);
    }

    #[test]
    fn zero_counts_rejected() {
        let s = KroneckerStructure { nilpotent: single(&[(2, 0)]), ..Default::default() };
        assert!(s.validate().is_err());
        let s = KroneckerStructure { l_blocks: single(&[(0, 1)]), ..Default::default() };
        assert!(s.validate().is_err());
    }
}
