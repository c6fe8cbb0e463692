//! Exact combinatorics of the Markov cluster algebra.
//!
//! The cluster variables of the Markov cluster algebra are indexed by the
//! vertices of a trivalent tree whose vertices carry *Farey triples*: triples
//! of extended rationals that are pairwise Farey neighbors, one from each
//! parity class. This crate implements that indexing and everything built on
//! top of it, with arbitrary-precision integer arithmetic throughout:
//!
//! - [`farey`] — extended rationals, Farey mediants and differences, parity
//!   classes, triples, tree mutation, descent to the initial triple, and the
//!   component isomorphisms `phi`/`psi`;
//! - [`exchange`] — extended exchange matrices with principal coefficients,
//!   matrix mutation, c-vectors, and the `(Cᵀ)⁻¹` passage to g-matrices;
//! - [`closedform`] — closed-form c- and g-matrices computed directly from a
//!   triple's numerators and denominators, no mutation required;
//! - [`symbolic`] — Laurent-polynomial seeds with principal coefficients,
//!   used to cross-check the closed forms degree by degree;
//! - [`verify`] — a batch self-check suite over the mutation tree.
//!
//! Everything is deterministic: equal inputs produce byte-identical output.

pub mod closedform;
pub mod exchange;
pub mod farey;
pub mod symbolic;
pub mod verify;

pub use closedform::{c_matrix, c_matrix_in_tm1, classify, g_matrix, g_matrix_in_tm1, CaseLabel, TripleCoefficients};
pub use exchange::{g_from_c, markov_b_minus, markov_b_plus, matrix_by_path, CVector, ExchangeError, ExtendedMatrix, GMatrix, Mat3, MatrixJson, VertexCycle};
pub use farey::{enumerate, phi_edge_relabel, psi_edge_relabel, ExtRational, FareyError, FareyTriple, MutationWord, ParityClass, MAX_ENUMERATION_DEPTH};
pub use symbolic::{grading_degree, verify_word, DegreeVector, LaurentPoly, SymbolicError, SymbolicSeed, WordCheck, MAX_SYMBOLIC_WORD_LEN};
pub use verify::{run_verification, CheckOutcome, VerifyOptions, VerifyReport};
