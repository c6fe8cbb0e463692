//! Symbolic seeds: Laurent polynomials in the three cluster variables and
//! the three frozen coefficient variables.
//!
//! Iterating the exchange relation from the initial seed keeps every cluster
//! variable a genuine Laurent polynomial — each division in
//! [`SymbolicSeed::mutate`] is performed exactly and any nonzero remainder
//! is an error, never a truncation. The multidegrees of the variables under
//! the standard grading recover the g-matrix columns, which is what
//! [`verify_word`] checks.

mod laurent;
mod seed;

pub use laurent::{Exponents, LaurentPoly, N_VARS};
pub use seed::{grading_degree, verify_word, DegreeVector, SymbolicSeed, WordCheck, MAX_SYMBOLIC_WORD_LEN};

use thiserror::Error;

/// Errors from Laurent arithmetic and seed mutation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymbolicError {
    /// An exact division had a nonzero remainder. The exchange relation
    /// always divides exactly, so this signals corrupted input.
    #[error("exact division failed: {detail}")]
    NotDivisible { detail: String },

    /// A polynomial expected to be homogeneous has monomials of two
    /// different degrees.
    #[error("inhomogeneous polynomial: exponents {first:?} and {second:?} have different degrees")]
    Inhomogeneous { first: Exponents, second: Exponents },

    /// The zero polynomial has no degree.
    #[error("the zero polynomial has no degree")]
    ZeroPolynomial,

    /// A word longer than the symbolic cap was submitted for verification.
    #[error("word of length {len} exceeds the symbolic cap of {max}")]
    WordTooLong { len: usize, max: usize },
}
