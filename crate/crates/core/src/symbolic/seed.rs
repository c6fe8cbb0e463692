//! Seed mutation and the degree check against closed-form g-matrices.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};

use crate::closedform::g_matrix;
use crate::exchange::{markov_b_plus, ExtendedMatrix};
use crate::farey::{FareyTriple, MutationWord, ParityClass};

use super::laurent::{Exponents, LaurentPoly, N_VARS};
use super::SymbolicError;

/// Hard cap on the length of words submitted to [`verify_word`]. Symbolic
/// mutation cost grows exponentially with word length; this bound keeps the
/// API from accepting words that could never finish.
pub const MAX_SYMBOLIC_WORD_LEN: usize = 32;

/// A multidegree under the three-dimensional grading: one integer per
/// cluster direction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeVector(pub [BigInt; 3]);

impl fmt::Display for DegreeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.0[0], self.0[1], self.0[2])
    }
}

/// A cluster seed with principal coefficients, carried symbolically: the
/// extended matrix together with the three cluster variables as Laurent
/// polynomials in the initial variables `x1..x3` and the frozen variables
/// `x4..x6`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolicSeed {
    matrix: ExtendedMatrix,
    vars: [LaurentPoly; 3],
}

impl SymbolicSeed {
    /// The initial seed: the initial Markov matrix with `x1, x2, x3` in the
    /// three slots.
    pub fn initial() -> Self {
        SymbolicSeed {
            matrix: ExtendedMatrix::markov_initial(),
            vars: [LaurentPoly::var(0), LaurentPoly::var(1), LaurentPoly::var(2)],
        }
    }

    pub fn matrix(&self) -> &ExtendedMatrix {
        &self.matrix
    }

    /// The three cluster variables in column order `(Zero, MinusOne, Infinity)`.
    pub fn vars(&self) -> &[LaurentPoly; 3] {
        &self.vars
    }

    /// The cluster variable in the given direction.
    pub fn var(&self, class: ParityClass) -> &LaurentPoly {
        &self.vars[class.column()]
    }

    /// One seed mutation: the variable in direction `k` is replaced via the
    /// exchange relation
    ///
    /// ```text
    /// x_k' * x_k = prod_i x_i^[b_ik]+  +  prod_i x_i^[-b_ik]+
    /// ```
    ///
    /// with the product running over all six rows of the extended matrix,
    /// and the matrix mutates alongside. The division is exact whenever the
    /// seed was reached from the initial one by mutations; a remainder is
    /// reported as [`SymbolicError::NotDivisible`].
    pub fn mutate(&self, k: ParityClass) -> Result<Self, SymbolicError> {
        let col = k.column();
        let mut plus = LaurentPoly::one();
        let mut minus = LaurentPoly::one();
        for (i, row) in self.matrix.rows().iter().enumerate() {
            // Matrix entries grow at most like the Farey numerators
            // (Fibonacci in the word length), so they fit machine integers
            // comfortably within the word-length cap.
            let b = row[col].to_i64().expect("matrix entry within machine range");
            let factor = if i < 3 { self.vars[i].clone() } else { LaurentPoly::var(i) };
            if b > 0 {
                plus = plus.mul(&factor.pow(b as u64));
            } else if b < 0 {
                minus = minus.mul(&factor.pow(-b as u64));
            }
        }
        let mut vars = self.vars.clone();
        vars[col] = plus.add(&minus).exact_div(&self.vars[col])?;
        Ok(SymbolicSeed { matrix: self.matrix.mutate_class(k), vars })
    }

    /// Applies a word letter by letter.
    pub fn apply_word(&self, word: &MutationWord) -> Result<Self, SymbolicError> {
        word.iter().try_fold(self.clone(), |seed, letter| seed.mutate(letter))
    }
}

/// The grading weights: `x1..x3` are graded by the standard basis vectors
/// and each frozen variable by minus the matching column of the initial
/// principal part, which makes both sides of every exchange relation agree
/// in degree.
fn grading_weights() -> [[BigInt; 3]; N_VARS] {
    let b_plus = markov_b_plus();
    let mut weights: [[BigInt; 3]; N_VARS] = Default::default();
    for j in 0..3 {
        weights[j][j] = BigInt::one();
        weights[3 + j] = b_plus.column(j).map(|entry| -entry);
    }
    weights
}

fn monomial_degree(exponents: &Exponents, weights: &[[BigInt; 3]; N_VARS]) -> [BigInt; 3] {
    let mut degree: [BigInt; 3] = Default::default();
    for (e, weight) in exponents.iter().zip(weights) {
        for (d, w) in degree.iter_mut().zip(weight) {
            *d += w * e;
        }
    }
    degree
}

/// The multidegree of a homogeneous Laurent polynomial.
///
/// Every monomial must have the same weighted degree; two monomials that
/// disagree are reported as [`SymbolicError::Inhomogeneous`], and the zero
/// polynomial has no degree.
pub fn grading_degree(poly: &LaurentPoly) -> Result<DegreeVector, SymbolicError> {
    let weights = grading_weights();
    let mut terms = poly.terms();
    let (first, _) = terms.next().ok_or(SymbolicError::ZeroPolynomial)?;
    let degree = monomial_degree(first, &weights);
    for (exponents, _) in terms {
        if monomial_degree(exponents, &weights) != degree {
            return Err(SymbolicError::Inhomogeneous { first: *first, second: *exponents });
        }
    }
    Ok(DegreeVector(degree))
}

/// The outcome of symbolically checking one mutation word.
#[derive(Debug, Clone)]
pub struct WordCheck {
    pub word: MutationWord,
    pub passed: bool,
    /// The variable degrees in column order, when all three are defined.
    pub degrees: Option<[DegreeVector; 3]>,
    /// One entry per failed check, empty when `passed`.
    pub failures: Vec<String>,
}

/// Applies `word` to the initial seed and triple, then checks that every
/// cluster variable is a homogeneous Laurent polynomial whose degree equals
/// the matching column of the closed-form g-matrix.
///
/// Check failures — a division with remainder, an inhomogeneous variable, a
/// degree that disagrees with the g-matrix — are collected in the returned
/// [`WordCheck`] rather than raised; only a word longer than
/// [`MAX_SYMBOLIC_WORD_LEN`] is an error.
pub fn verify_word(word: &MutationWord) -> Result<WordCheck, SymbolicError> {
    if word.len() > MAX_SYMBOLIC_WORD_LEN {
        return Err(SymbolicError::WordTooLong { len: word.len(), max: MAX_SYMBOLIC_WORD_LEN });
    }
    let mut failures = Vec::new();

    let mut seed = SymbolicSeed::initial();
    let mut triple = FareyTriple::initial();
    for (i, letter) in word.iter().enumerate() {
        match seed.mutate(letter) {
            Ok(next) => seed = next,
            Err(error) => {
                failures.push(format!("step {} (direction {letter}): {error}", i + 1));
                return Ok(WordCheck { word: word.clone(), passed: false, degrees: None, failures });
            }
        }
        triple = triple.mutate(letter);
    }

    let mut degrees = Vec::with_capacity(3);
    for class in ParityClass::ALL {
        match grading_degree(seed.var(class)) {
            Ok(degree) => degrees.push(degree),
            Err(error) => failures.push(format!("variable {class}: {error}")),
        }
    }
    let degrees: Option<[DegreeVector; 3]> = <[DegreeVector; 3]>::try_from(degrees).ok();

    match (&degrees, g_matrix(&triple)) {
        (Some(degrees), Ok(g)) => {
            for (class, degree) in ParityClass::ALL.iter().zip(degrees) {
                let column = g.column(*class);
                if degree.0 != column {
                    failures.push(format!(
                        "variable {class}: degree {degree} differs from the g-vector ({}, {}, {})",
                        column[0], column[1], column[2]
                    ));
                }
            }
        }
        (_, Err(error)) => failures.push(format!("g-matrix unavailable: {error}")),
        (None, Ok(_)) => {}
    }

    Ok(WordCheck { word: word.clone(), passed: failures.is_empty(), degrees, failures })
}
