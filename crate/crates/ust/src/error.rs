//! Error type shared by every module in the crate.

use std::fmt;

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong short of an internal invariant violation
/// (those panic with a diagnostic instead, since they indicate a bug).
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// Extended gcd of (0, 0) is undefined.
    #[error("gcd(0, 0) is undefined")]
    BothZero,

    /// The two parameters share a common factor, so they do not describe
    /// a torus knot.
    #[error("{a} and {b} are not coprime (gcd = {g})")]
    NotCoprime { a: i64, b: i64, g: i64 },

    /// `mod_inverse` needs a modulus of at least 2.
    #[error("modulus must be at least 2, got {0}")]
    ModulusTooSmall(i64),

    /// `a` has no inverse modulo `m` because gcd(a, m) != 1.
    #[error("{a} is not invertible modulo {m}")]
    NotInvertible { a: i64, m: i64 },

    /// A denominator outside {1, 2, 4} was requested.
    #[error("denominator must divide 4 and be positive, got {0}")]
    BadDenominator(i64),

    /// The operation is only defined for nontrivial torus knots.
    #[error("operation is not defined for the unknot")]
    UnknotInput,

    /// Pretzel / two-strand parameters must be odd and large enough.
    #[error("parameter must be odd and at least {min}, got {got}")]
    ParameterNotOdd { got: i64, min: i64 },

    /// A parameter exceeds the supported desk-scale bound.
    #[error("parameter {got} exceeds the supported bound {max}")]
    TooLarge { got: i64, max: i64 },

    /// A range bound below the smallest meaningful value.
    #[error("range bound must be at least 2, got {0}")]
    RangeTooSmall(i64),

    /// The requested worker pool could not be created.
    #[error("cannot create worker pool: {0}")]
    WorkerPool(String),

    /// A matrix constructor was handed non-symmetric entries.
    #[error("matrix entry ({i},{j}) = {a} does not match ({j},{i}) = {b}")]
    NotSymmetric { i: usize, j: usize, a: i64, b: i64 },

    /// Rows of unequal length were handed to a matrix constructor.
    #[error("row {row} has length {len}, expected {expected}")]
    RaggedMatrix {
        row: usize,
        len: usize,
        expected: usize,
    },

    /// A scan would exceed the configured resource cap.
    #[error("{what} size {size} exceeds cap {cap}")]
    CapExceeded {
        what: &'static str,
        size: i64,
        cap: i64,
    },

    /// A cross-check between two independent computations failed.
    #[error("verification failed for T({p},{q}): {check}: expected {expected}, got {actual}")]
    Verification {
        p: i64,
        q: i64,
        check: &'static str,
        expected: String,
        actual: String,
    },
}

/// Helper for building `Verification` errors from displayable values.
pub(crate) fn verification(
    p: i64,
    q: i64,
    check: &'static str,
    expected: impl fmt::Display,
    actual: impl fmt::Display,
) -> Error {
    Error::Verification {
        p,
        q,
        check,
        expected: expected.to_string(),
        actual: actual.to_string(),
    }
}
