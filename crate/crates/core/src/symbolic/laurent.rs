//! Laurent polynomials over the integers in six variables.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::SymbolicError;

/// Number of variables: three cluster variables `x1..x3` and three frozen
/// variables `x4..x6`.
pub const N_VARS: usize = 6;

/// One monomial's exponents, indexed by variable. Machine integers suffice:
/// the exponents reachable under the capped word length stay far below the
/// `i64` range.
pub type Exponents = [i64; N_VARS];

/// An integer Laurent polynomial in [`N_VARS`] variables: a map from
/// exponent vectors to nonzero coefficients.
///
/// Terms are kept in a `BTreeMap`, so iteration order — and hence rendering
/// and arithmetic — is deterministic. The map order on `Exponents` arrays is
/// lexicographic, which is the monomial order used for exact division.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LaurentPoly {
    terms: BTreeMap<Exponents, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::monomial([0; N_VARS], BigInt::one())
    }

    /// The single-term polynomial `coefficient * x^exponents`; a zero
    /// coefficient gives the zero polynomial.
    pub fn monomial(exponents: Exponents, coefficient: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !coefficient.is_zero() {
            terms.insert(exponents, coefficient);
        }
        LaurentPoly { terms }
    }

    /// The variable `x_{index+1}`.
    pub fn var(index: usize) -> Self {
        assert!(index < N_VARS, "variable index out of range");
        let mut exponents = [0; N_VARS];
        exponents[index] = 1;
        LaurentPoly::monomial(exponents, BigInt::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending lexicographic order.
    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &BigInt)> {
        self.terms.iter()
    }

    fn insert_term(&mut self, exponents: Exponents, coefficient: BigInt) {
        if coefficient.is_zero() {
            return;
        }
        match self.terms.entry(exponents) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(coefficient);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += coefficient;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (exponents, coefficient) in &other.terms {
            out.insert_term(*exponents, coefficient.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (exponents, coefficient) in &other.terms {
            out.insert_term(*exponents, -coefficient);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = LaurentPoly::zero();
        for (a_exp, a_coeff) in &self.terms {
            for (b_exp, b_coeff) in &other.terms {
                let mut exponents = *a_exp;
                for (e, b) in exponents.iter_mut().zip(b_exp) {
                    *e += b;
                }
                out.insert_term(exponents, a_coeff * b_coeff);
            }
        }
        out
    }

    /// Raises to a non-negative power; single-term polynomials scale their
    /// exponents directly, so frozen-variable powers stay cheap no matter
    /// how large the exponent grows.
    pub fn pow(&self, exponent: u64) -> Self {
        if exponent == 0 {
            return LaurentPoly::one();
        }
        if self.terms.len() == 1 {
            let (exponents, coefficient) = self.terms.iter().next().expect("one term");
            let scaled =
                exponents.map(|e| e.checked_mul(exponent as i64).expect("exponent overflow"));
            return LaurentPoly::monomial(scaled, coefficient.pow(exponent as u32));
        }
        let mut out = self.clone();
        for _ in 1..exponent {
            out = out.mul(self);
        }
        out
    }

    /// The lexicographically largest term.
    fn leading_term(&self) -> Option<(&Exponents, &BigInt)> {
        self.terms.iter().next_back()
    }

    /// Exact division: returns `q` with `self = q * divisor`, or
    /// [`SymbolicError::NotDivisible`] if no such Laurent polynomial exists.
    ///
    /// Both operands are shifted by monomials into ordinary polynomials and
    /// single-divisor division under the lexicographic order is run; it
    /// either terminates with remainder zero or proves non-divisibility,
    /// because the leading term of any true quotient must equal the quotient
    /// of leading terms. The dividend's shift is widened so that the shifted
    /// quotient is an ordinary polynomial too: minimal per-variable
    /// exponents are additive under multiplication (the minimal slice of a
    /// product is the product of minimal slices, and `Z` has no zero
    /// divisors), so any quotient has `min_i(q) = min_i(self) - min_i(divisor)`.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self, SymbolicError> {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Ok(LaurentPoly::zero());
        }
        let divisor_shift = divisor.nonnegative_shift();
        let mut dividend_shift = [0i64; N_VARS];
        for i in 0..N_VARS {
            let quotient_min = self.min_exponent(i) - divisor.min_exponent(i);
            dividend_shift[i] = divisor_shift[i] + (-quotient_min).max(0);
        }
        let mut remainder = self.shifted(&dividend_shift);
        let divisor = divisor.shifted(&divisor_shift);
        let (divisor_exp, divisor_coeff) =
            divisor.leading_term().map(|(e, c)| (*e, c.clone())).expect("nonzero divisor");

        let mut quotient = LaurentPoly::zero();
        while let Some((lead_exp, lead_coeff)) = remainder.leading_term() {
            let mut term_exp = [0i64; N_VARS];
            for i in 0..N_VARS {
                term_exp[i] = lead_exp[i] - divisor_exp[i];
                if term_exp[i] < 0 {
                    return Err(SymbolicError::NotDivisible {
                        detail: format!(
                            "leading monomial {lead_exp:?} is not a multiple of {divisor_exp:?}"
                        ),
                    });
                }
            }
            let (term_coeff, coeff_rem) = num_integer::div_rem(lead_coeff.clone(), divisor_coeff.clone());
            if !coeff_rem.is_zero() {
                return Err(SymbolicError::NotDivisible {
                    detail: format!(
                        "leading coefficient {lead_coeff} is not divisible by {divisor_coeff}"
                    ),
                });
            }
            let term = LaurentPoly::monomial(term_exp, term_coeff);
            remainder = remainder.sub(&term.mul(&divisor));
            quotient = quotient.add(&term);
        }

        // Undo the shifts: self/divisor = (shifted self / shifted divisor)
        // times x^(divisor_shift - dividend_shift).
        let mut unshift = [0i64; N_VARS];
        for i in 0..N_VARS {
            unshift[i] = divisor_shift[i] - dividend_shift[i];
        }
        Ok(quotient.shifted(&unshift))
    }

    /// The componentwise shift that makes every exponent non-negative.
    fn nonnegative_shift(&self) -> Exponents {
        let mut shift = [0i64; N_VARS];
        for exponents in self.terms.keys() {
            for (s, e) in shift.iter_mut().zip(exponents) {
                *s = (*s).min(*e);
            }
        }
        shift.map(|s| -s)
    }

    /// Multiplies by the monomial `x^shift`.
    fn shifted(&self, shift: &Exponents) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(exponents, coefficient)| {
                let mut shifted = *exponents;
                for (e, s) in shifted.iter_mut().zip(shift) {
                    *e += s;
                }
                (shifted, coefficient.clone())
            })
            .collect();
        LaurentPoly { terms }
    }

    /// Whether every coefficient is a positive integer.
    pub fn has_positive_coefficients(&self) -> bool {
        self.terms.values().all(|c| c.is_positive())
    }

    /// The smallest exponent of the given variable across all terms
    /// (0 for the zero polynomial).
    pub fn min_exponent(&self, var: usize) -> i64 {
        self.terms.keys().map(|e| e[var]).min().unwrap_or(0)
    }
}

/// Renders terms leading-first as `c * x1^a1 ... x6^a6`, omitting variables
/// with exponent zero; a bare coefficient stands for a constant term and `0`
/// for the zero polynomial.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (exponents, coefficient)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{coefficient}")?;
            let mut separator = " * ";
            for (var, e) in exponents.iter().enumerate() {
                if *e != 0 {
                    write!(f, "{separator}x{}^{}", var + 1, e)?;
                    separator = " ";
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: usize) -> LaurentPoly {
        LaurentPoly::var(i)
    }

    fn int(n: i64) -> LaurentPoly {
        LaurentPoly::monomial([0; N_VARS], BigInt::from(n))
    }

    #[test]
    fn arithmetic_collects_and_cancels_terms() {
        let p = x(0).add(&x(1));
        assert_eq!(p.num_terms(), 2);
        assert_eq!(p.sub(&x(0)), x(1));
        assert_eq!(p.sub(&p), LaurentPoly::zero());
        assert!(p.sub(&p).is_zero());

        let square = p.mul(&p);
        // (x1 + x2)^2 = x1^2 + 2 x1 x2 + x2^2
        let mut cross = [0; N_VARS];
        cross[0] = 1;
        cross[1] = 1;
        assert_eq!(square.num_terms(), 3);
        assert_eq!(square, p.pow(2));
        assert_eq!(
            square.terms().find(|(e, _)| **e == cross).map(|(_, c)| c.clone()),
            Some(BigInt::from(2))
        );
    }

    #[test]
    fn monomial_powers_scale_exponents() {
        let mut exps = [0; N_VARS];
        exps[3] = -2;
        exps[5] = 1;
        let m = LaurentPoly::monomial(exps, BigInt::from(3));
        let cubed = m.pow(3);
        let mut expected = [0; N_VARS];
        expected[3] = -6;
        expected[5] = 3;
        assert_eq!(cubed, LaurentPoly::monomial(expected, BigInt::from(27)));
        assert_eq!(m.pow(0), LaurentPoly::one());
    }

    #[test]
    fn exact_division_inverts_multiplication() {
        let p = x(0).add(&x(1)).add(&int(1));
        let q = x(1).pow(2).sub(&x(2)).add(&int(5));
        let product = p.mul(&q);
        assert_eq!(product.exact_div(&p).unwrap(), q);
        assert_eq!(product.exact_div(&q).unwrap(), p);
        assert_eq!(LaurentPoly::zero().exact_div(&p).unwrap(), LaurentPoly::zero());
    }

    #[test]
    fn exact_division_handles_negative_exponents() {
        // (x1^-1 x2^2 + x3^-3) / x1^-1 = x2^2 + x1 x3^-3
        let mut a = [0; N_VARS];
        a[0] = -1;
        a[1] = 2;
        let mut b = [0; N_VARS];
        b[2] = -3;
        let dividend = LaurentPoly::monomial(a, BigInt::one()).add(&LaurentPoly::monomial(b, BigInt::one()));
        let mut inv = [0; N_VARS];
        inv[0] = -1;
        let divisor = LaurentPoly::monomial(inv, BigInt::one());
        let quotient = dividend.exact_div(&divisor).unwrap();
        assert_eq!(quotient.mul(&divisor), dividend);
    }

    #[test]
    fn dividing_by_a_monomial_always_succeeds() {
        // Monomials are units, so (x1 + 1) / x2 = x1 x2^-1 + x2^-1.
        let q = x(0).add(&int(1)).exact_div(&x(1)).unwrap();
        let mut a = [0; N_VARS];
        a[0] = 1;
        a[1] = -1;
        let mut b = [0; N_VARS];
        b[1] = -1;
        let expected =
            LaurentPoly::monomial(a, BigInt::one()).add(&LaurentPoly::monomial(b, BigInt::one()));
        assert_eq!(q, expected);
    }

    #[test]
    fn non_divisible_inputs_are_rejected() {
        let err = x(0).add(&int(1)).exact_div(&x(1).add(&int(1))).unwrap_err();
        assert!(matches!(err, SymbolicError::NotDivisible { .. }));

        let err = int(3).exact_div(&int(2)).unwrap_err();
        assert!(matches!(err, SymbolicError::NotDivisible { .. }));

        // x1^2 - x2^2 divides by x1 - x2, but x1^2 + x2^2 does not.
        let diff = x(0).pow(2).sub(&x(1).pow(2));
        let sum = x(0).pow(2).add(&x(1).pow(2));
        let divisor = x(0).sub(&x(1));
        assert_eq!(diff.exact_div(&divisor).unwrap(), x(0).add(&x(1)));
        assert!(sum.exact_div(&divisor).is_err());
    }

    #[test]
    fn rendering_is_leading_first_and_stable() {
        let p = x(0).mul(&x(3).pow(2)).sub(&x(1));
        assert_eq!(p.to_string(), "1 * x1^1 x4^2 + -1 * x2^1");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        assert_eq!(int(7).to_string(), "7");
    }

    #[test]
    fn coefficient_positivity_check() {
        assert!(x(0).add(&x(1)).has_positive_coefficients());
        assert!(!x(0).sub(&x(1)).has_positive_coefficients());
        assert!(LaurentPoly::zero().has_positive_coefficients());
    }
}
