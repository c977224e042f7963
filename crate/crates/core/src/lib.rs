//! Exact analysis of matrix pencils `(E, A)`, read as the linear DAE `E x' + A x = 0`.
//!
//! The crate is `no_std` (it needs `alloc`). Everything is computed over the
//! rationals with arbitrary-precision integers, so every rank decision is exact.
//!
//! * [`exactla`]: dense rational matrices, canonical subspaces, kernels,
//!   preimages, complements, inverses and characteristic polynomials.
//! * [`pencil`]: the reduction `V' = E M`, `M' = A^{-1} V'`, its iteration,
//!   the index, the constraint/observation/control defects, the dynamical
//!   dimension, regularity and the strangeness triple `(d, a, s)`.
//! * [`canonical`]: coupling constructions, primal and dual decompositions,
//!   the Kronecker and Weierstrass forms with explicit transforms, the weak
//!   equivalence canonical form, and pencil synthesis from block structure.
//! * [`checks`]: the internal consistency bundle run by `pencil check`.
#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod canonical;
pub mod checks;
mod error;
pub mod exactla;
pub mod pencil;

pub use error::Error;
pub use exactla::{Matrix, Rational, Subspace};
pub use pencil::{DefectProfile, Pencil, ReductionChain, ReductionStep};

pub type Result<T, E = Error> = core::result::Result<T, E>;
