//! Error type shared by all operations in this crate.

use crate::power::SingularTriple;
use core::fmt;

/// Errors reported by construction and numeric routines.
#[derive(Debug, Clone)]
pub enum Error {
    /// A matrix was created with zero rows or zero columns.
    InvalidDimensions { rows: usize, cols: usize },
    /// Supplied entry buffer does not match `rows * cols`.
    DataLength { expected: usize, found: usize },
    /// An entry is NaN or infinite.
    NonFinite,
    /// Two operands disagree on a dimension (vector length, column count
    /// or shift modulus).
    DimensionMismatch { expected: usize, found: usize },
    /// The operation requires a nonzero matrix.
    ZeroMatrix,
    /// Power iteration hit its iteration cap before reaching the requested
    /// tolerance. The best iterate reached so far is attached.
    NoConvergence { best: SingularTriple },
    /// A factor vector that must be nonzero was zero.
    DegenerateInput,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidDimensions { rows, cols } => {
                write!(f, "invalid matrix dimensions {rows}x{cols}")
            }
            Error::DataLength { expected, found } => {
                write!(f, "entry buffer length {found}, expected {expected}")
            }
            Error::NonFinite => write!(f, "matrix entries must be finite"),
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            Error::ZeroMatrix => write!(f, "operation requires a nonzero matrix"),
            Error::NoConvergence { best } => write!(
                f,
                "power iteration did not converge (best sigma {:.6e})",
                best.sigma
            ),
            Error::DegenerateInput => write!(f, "factor vectors must be nonzero"),
        }
    }
}

impl core::error::Error for Error {}
