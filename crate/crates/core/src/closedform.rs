//! Closed-form c- and g-matrices, computed directly from a triple's
//! numerators and denominators.
//!
//! On the `MinusOne` branch of the tree (and at the root) the extended
//! matrix of a triple is a fixed orientation plus a complementary part whose
//! entries are affine in the six slot coordinates; which affine form applies
//! depends only on the value order of the three components. The other two
//! branches reduce to that one through the tree isomorphisms
//! [`FareyTriple::phi`] / [`FareyTriple::psi`] and the matching cyclic
//! relabelings of the matrix columns.
//!
//! Every formula here is cross-checked in tests against
//! [`matrix_by_path`](crate::exchange::matrix_by_path), which recomputes the
//! same matrix by replaying the mutation word from the root.

use num_bigint::BigInt;
use num_traits::One;

use crate::exchange::{markov_b_minus, markov_b_plus, ExtendedMatrix, GMatrix, Mat3, VertexCycle};
use crate::farey::{FareyError, FareyTriple, ParityClass};

/// Which of the eight closed-form shapes a triple takes.
///
/// A triple containing `1/0` is *special*: its other two components are then
/// consecutive integers `a/1` and `(a∓1)/1`. All remaining triples fall into
/// one of six strict value orderings of `(q0, qm1, qinf)`.
///
/// The labels describe triples on the `MinusOne` branch (and the root);
/// the classification itself is defined for every valid triple, but the
/// matrix formulas attached to it are only meaningful there.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CaseLabel {
    /// `qinf = 1/0` and `qm1 = q0 - 1`.
    SpecialMinus,
    /// `qinf = 1/0` and `qm1 = q0 + 1`.
    SpecialPlus,
    /// `q0 < qinf < qm1`.
    I,
    /// `qm1 < qinf < q0`.
    II,
    /// `q0 < qm1 < qinf`.
    III,
    /// `qinf < qm1 < q0`.
    IV,
    /// `qm1 < q0 < qinf`.
    V,
    /// `qinf < q0 < qm1`.
    VI,
}

/// The six slot coordinates of a triple: numerator and denominator of each
/// component in slot order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TripleCoefficients {
    /// Numerator of `q0`.
    pub a: BigInt,
    /// Denominator of `q0`.
    pub b: BigInt,
    /// Numerator of `qm1`.
    pub c: BigInt,
    /// Denominator of `qm1`.
    pub d: BigInt,
    /// Numerator of `qinf`.
    pub e: BigInt,
    /// Denominator of `qinf`.
    pub f: BigInt,
}

impl TripleCoefficients {
    pub fn from_triple(triple: &FareyTriple) -> Self {
        TripleCoefficients {
            a: triple.q0().num().clone(),
            b: triple.q0().den().clone(),
            c: triple.qm1().num().clone(),
            d: triple.qm1().den().clone(),
            e: triple.qinf().num().clone(),
            f: triple.qinf().den().clone(),
        }
    }
}

/// Classifies a triple by value order, with the two special shapes reserved
/// for triples containing `1/0`.
pub fn classify(triple: &FareyTriple) -> CaseLabel {
    let (q0, qm1, qinf) = (triple.q0(), triple.qm1(), triple.qinf());
    if qinf.is_infinite() {
        // Both finite components then have denominator 1 (their Farey
        // distance to 1/0 is the denominator), so the numerators are
        // consecutive integers.
        let diff = qm1.num() - q0.num();
        if diff == BigInt::from(-1) {
            return CaseLabel::SpecialMinus;
        }
        if diff.is_one() {
            return CaseLabel::SpecialPlus;
        }
        unreachable!("components neighboring 1/0 are consecutive integers, got {triple}");
    }
    match (q0 < qinf, qm1 < qinf, q0 < qm1) {
        (true, false, _) => CaseLabel::I,
        (false, true, _) => CaseLabel::II,
        (true, true, true) => CaseLabel::III,
        (false, false, false) => CaseLabel::IV,
        (true, true, false) => CaseLabel::V,
        (false, false, true) => CaseLabel::VI,
    }
}

/// The closed-form extended matrix of a triple on the `MinusOne` branch
/// (or the root).
///
/// The principal part is [`markov_b_plus`] for `SpecialMinus` and cases
/// I/IV/V, and [`markov_b_minus`] for `SpecialPlus` and cases II/III/VI; the
/// complementary entries are affine in the slot coordinates. Off that branch
/// the function still evaluates, but only [`c_matrix`] dispatches correctly.
pub fn c_matrix_in_tm1(triple: &FareyTriple) -> ExtendedMatrix {
    let TripleCoefficients { a, b, c, d, e, f } = TripleCoefficients::from_triple(triple);
    let one = BigInt::one;
    let (principal, complementary) = match classify(triple) {
        CaseLabel::SpecialMinus => (
            markov_b_plus(),
            Mat3::new([
                [one() - &a, a.clone(), BigInt::from(0)],
                [-&a, &a + one(), BigInt::from(0)],
                [BigInt::from(0), BigInt::from(0), one()],
            ]),
        ),
        CaseLabel::SpecialPlus => (
            markov_b_minus(),
            Mat3::new([
                [&a + one(), -&a, BigInt::from(0)],
                [&a + BigInt::from(2), -(&a + one()), BigInt::from(0)],
                [BigInt::from(0), BigInt::from(0), one()],
            ]),
        ),
        CaseLabel::I => (
            markov_b_plus(),
            Mat3::new([
                [&a + one(), one() - &c, &c - &a - one()],
                [&a + &b + one(), one() - &c - &d, &c + &d - &a - &b - one()],
                [&b + one(), one() - &d, &d - &b - one()],
            ]),
        ),
        CaseLabel::II => (
            markov_b_minus(),
            Mat3::new([
                [one() - &a, &c + one(), &a - &c - one()],
                [one() - &a - &b, &c + &d + one(), &a + &b - &c - &d - one()],
                [one() - &b, &d + one(), &b - &d - one()],
            ]),
        ),
        CaseLabel::III => (
            markov_b_minus(),
            Mat3::new([
                [&a + one(), &e - &a - one(), one() - &e],
                [&a + &b + one(), &e + &f - &a - &b - one(), one() - &e - &f],
                [&b + one(), &f - &b - one(), one() - &f],
            ]),
        ),
        CaseLabel::IV => (
            markov_b_plus(),
            Mat3::new([
                [one() - &a, &a - &e - one(), &e + one()],
                [one() - &a - &b, &a + &b - &e - &f - one(), &e + &f + one()],
                [one() - &b, &b - &f - one(), &f + one()],
            ]),
        ),
        CaseLabel::V => (
            markov_b_plus(),
            Mat3::new([
                [&e - &c - one(), &c + one(), one() - &e],
                [&e + &f - &c - &d - one(), &c + &d + one(), one() - &e - &f],
                [&f - &d - one(), &d + one(), one() - &f],
            ]),
        ),
        CaseLabel::VI => (
            markov_b_minus(),
            Mat3::new([
                [&c - &e - one(), one() - &c, &e + one()],
                [&c + &d - &e - &f - one(), one() - &c - &d, &e + &f + one()],
                [&d - &f - one(), one() - &d, &f + one()],
            ]),
        ),
    };
    ExtendedMatrix::from_parts(principal, complementary).expect("closed-form parts are well formed")
}

/// The closed-form g-matrix of a triple on the `MinusOne` branch (or the
/// root); the counterpart of [`c_matrix_in_tm1`].
pub fn g_matrix_in_tm1(triple: &FareyTriple) -> GMatrix {
    let TripleCoefficients { a, b, c, d, e, f } = TripleCoefficients::from_triple(triple);
    let one = BigInt::one;
    let rows = if triple.qinf().is_infinite() {
        match classify(triple) {
            CaseLabel::SpecialMinus => [
                [&a + one(), a.clone(), BigInt::from(0)],
                [-&a, one() - &a, BigInt::from(0)],
                [BigInt::from(0), BigInt::from(0), one()],
            ],
            CaseLabel::SpecialPlus => [
                [&a + one(), &a + BigInt::from(2), BigInt::from(0)],
                [-&a, -(&a + one()), BigInt::from(0)],
                [BigInt::from(0), BigInt::from(0), one()],
            ],
            other => unreachable!("triples containing 1/0 are special, got {other:?}"),
        }
    } else {
        [
            [&a + one(), &c + one(), &e + one()],
            [&b - &a - one(), &d - &c - one(), &f - &e - one()],
            [one() - &b, one() - &d, one() - &f],
        ]
    };
    GMatrix(Mat3::new(rows))
}

/// The extended matrix of any triple, computed in closed form.
///
/// Triples on the `MinusOne` branch (and the root) evaluate directly;
/// triples on the `Infinity` and `Zero` branches are pulled back through
/// [`FareyTriple::phi_inv`] / [`FareyTriple::psi_inv`] and the result is
/// relabeled with the matching [`VertexCycle`].
pub fn c_matrix(triple: &FareyTriple) -> Result<ExtendedMatrix, FareyError> {
    match triple.component()? {
        None | Some(ParityClass::MinusOne) => Ok(c_matrix_in_tm1(triple)),
        Some(ParityClass::Infinity) => Ok(c_matrix_in_tm1(&triple.phi_inv()?).act(VertexCycle::CycA)),
        Some(ParityClass::Zero) => Ok(c_matrix_in_tm1(&triple.psi_inv()?).act(VertexCycle::CycB)),
    }
}

/// The g-matrix of any triple, computed in closed form; always equal to
/// [`g_from_c`](crate::exchange::g_from_c) applied to the complementary part
/// of [`c_matrix`].
pub fn g_matrix(triple: &FareyTriple) -> Result<GMatrix, FareyError> {
    match triple.component()? {
        None | Some(ParityClass::MinusOne) => Ok(g_matrix_in_tm1(triple)),
        Some(ParityClass::Infinity) => Ok(g_matrix_in_tm1(&triple.phi_inv()?).act(VertexCycle::CycA)),
        Some(ParityClass::Zero) => Ok(g_matrix_in_tm1(&triple.psi_inv()?).act(VertexCycle::CycB)),
    }
}
