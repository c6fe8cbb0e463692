//! Extended rationals, Farey triples, and the trivalent mutation tree.
//!
//! The vertices of the Markov mutation tree are [`FareyTriple`]s: unordered
//! triples of pairwise Farey-neighbor extended rationals, one from each
//! [`ParityClass`]. Mutation in a direction `k` replaces the class-`k`
//! component using a Farey mediant or difference of the other two, and every
//! triple descends to the initial triple `[0/1, -1/1, 1/0]` along a unique
//! complexity-decreasing path.

mod rational;
mod triple;
mod word;

pub use rational::{ExtRational, ParityClass};
pub use triple::{enumerate, phi_edge_relabel, psi_edge_relabel, FareyTriple, MAX_ENUMERATION_DEPTH};
pub use word::MutationWord;

use num_bigint::BigInt;
use thiserror::Error;

/// Errors from constructing or transforming extended rationals and triples.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FareyError {
    /// `0/0` represents no extended rational.
    #[error("0/0 does not represent an extended rational")]
    ZeroZero,

    /// A Farey mediant or difference was requested of two values that are
    /// not Farey neighbors.
    #[error("{a} and {b} are not Farey neighbors (delta = {delta})")]
    NotNeighbors { a: ExtRational, b: ExtRational, delta: BigInt },

    /// The infinite value `1/0` has no Farey decomposition.
    #[error("1/0 has no Farey decomposition")]
    InfiniteInput,

    /// A triple was given two values from the same parity class.
    #[error("values {a} and {b} are both of parity class {class}")]
    DuplicateParity { class: ParityClass, a: ExtRational, b: ExtRational },

    /// Descent was requested from the initial triple.
    #[error("the initial triple has no descent direction")]
    IsInitial,

    /// More than one mutation direction strictly decreased the complexity.
    /// Descent from any non-initial triple is provably unique, so this
    /// error indicates corrupted data and is never produced by valid input.
    #[error("descent from {triple} is not unique: {count} directions decrease complexity")]
    NonUniqueDescent { triple: String, count: usize },

    /// A component isomorphism was applied to a triple outside its domain.
    #[error("triple {triple} lies in component {found}, expected {expected}")]
    WrongComponent { triple: String, expected: String, found: String },

    /// Enumeration past the configured depth cap was requested.
    #[error("enumeration depth {depth} exceeds the cap of {max}")]
    DepthTooLarge { depth: usize, max: usize },

    /// A fraction string could not be parsed.
    #[error("cannot parse {input:?} as a fraction (expected `d/r`, an integer, or `inf`)")]
    ParseFraction { input: String },

    /// A triple string did not contain exactly three fractions.
    #[error("cannot parse {input:?} as a triple: expected three comma-separated fractions, found {found}")]
    ParseTripleArity { input: String, found: usize },

    /// A mutation-word letter was not one of `0`, `-1`, `inf`.
    #[error("cannot parse {input:?} as a mutation letter (expected `0`, `-1`, or `inf`)")]
    ParseLetter { input: String },
}
