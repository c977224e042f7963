use core::fmt;

/// Errors surfaced by the library. Internal inconsistencies are bugs and
/// panic instead.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Rows of different lengths, or a data buffer that does not match the shape.
    Ragged,
    /// Two matrices that must share a shape do not.
    ShapeMismatch {
        expected: (usize, usize),
        found: (usize, usize),
    },
    /// An operation that needs a square matrix got something else.
    NotSquare { rows: usize, cols: usize },
    Singular,
    /// `complement(S, T)` called with `S` not contained in `T`.
    NotContained,
    /// The direct-sum hypothesis of a coupling construction does not hold.
    CouplingPrecondition(&'static str),
    /// The dual sweep needs a pencil whose `E` is surjective.
    NotSurjective,
    NotRegular,
    /// A structure's core matrix is not `core_dim x core_dim`.
    CoreShape { core_dim: usize, rows: usize, cols: usize },
    /// A block count of zero or a block size of zero.
    InvalidStructure(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Ragged => f.write_str("ragged matrix rows"),
            Error::ShapeMismatch { expected, found } => write!(
                f,
                "shape mismatch: expected {}x{}, found {}x{}",
                expected.0, expected.1, found.0, found.1
            ),
            Error::NotSquare { rows, cols } => write!(f, "matrix is not square ({rows}x{cols})"),
            Error::Singular => f.write_str("singular"),
            Error::NotContained => f.write_str("subspace is not contained in the ambient subspace"),
            Error::CouplingPrecondition(what) => write!(f, "coupling precondition failed: {what}"),
            Error::NotSurjective => f.write_str("E is not surjective"),
            Error::NotRegular => f.write_str("not a regular pencil"),
            Error::CoreShape { core_dim, rows, cols } => write!(
                f,
                "core must be {core_dim}x{core_dim}, found {rows}x{cols}"
            ),
            Error::InvalidStructure(what) => write!(f, "invalid structure: {what}"),
        }
    }
}

impl core::error::Error for Error {}
