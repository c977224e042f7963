//! Explicit bases: coupling constructions, decompositions, canonical forms.

mod coupling;
mod decompose;
mod scramble;
mod structure;
mod weak;

pub use coupling::{coupling_full, coupling_step, CouplingLevel};
pub use decompose::{
    dual_decomposition, kronecker_decompose, primal_decomposition, weierstrass, Decomposition,
    DualDecomposition, Level, Sequence, SequenceKind, Weierstrass,
};
pub use scramble::{random_invertible, scramble, scramble_with_ops};
pub use structure::{
    l_block, lt_block, nilpotent_block, structure_from_profile, synthesize, KroneckerStructure,
};
pub use weak::{weak_canonical, weak_canonical_form, WeakCanonical, WeakElement};

use crate::exactla::Matrix;

/// Change of bases `P` (codomain) and `Q` (domain), plus `R` for weak
/// equivalence results.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Transform {
    pub p: Matrix,
    pub q: Matrix,
    pub r: Option<Matrix>,
}
