//! Extended rationals `d/r` with `r >= 0`, including `1/0` for infinity.
//!
//! Every value is kept in canonical form: numerator and denominator coprime,
//! denominator non-negative, and the infinite value represented uniquely as
//! `1/0`. Canonical form makes structural equality, hashing, and the parity
//! class of a value well defined.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::FareyError;

/// The parity class of a canonical extended rational, named after the class
/// representative in the initial triple `[0/1, -1/1, 1/0]`.
///
/// Coprimality rules out even/even, so the classes cover every value:
///
/// - [`Zero`](ParityClass::Zero): even numerator, odd denominator (like `0/1`);
/// - [`MinusOne`](ParityClass::MinusOne): odd numerator, odd denominator (like `-1/1`);
/// - [`Infinity`](ParityClass::Infinity): odd numerator, even denominator (like `1/0`).
///
/// The same three labels name the mutation directions of the tree and the
/// columns of every exchange matrix, always in the slot order
/// `(Zero, MinusOne, Infinity)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ParityClass {
    /// Even numerator, odd denominator.
    Zero,
    /// Odd numerator, odd denominator.
    MinusOne,
    /// Odd numerator, even denominator.
    Infinity,
}

impl ParityClass {
    /// The three classes in slot order `(Zero, MinusOne, Infinity)`.
    pub const ALL: [ParityClass; 3] = [ParityClass::Zero, ParityClass::MinusOne, ParityClass::Infinity];

    /// The column index of this class in matrices and seeds: `Zero` is 0,
    /// `MinusOne` is 1, `Infinity` is 2.
    pub fn column(self) -> usize {
        match self {
            ParityClass::Zero => 0,
            ParityClass::MinusOne => 1,
            ParityClass::Infinity => 2,
        }
    }
}

impl fmt::Display for ParityClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParityClass::Zero => write!(f, "0"),
            ParityClass::MinusOne => write!(f, "-1"),
            ParityClass::Infinity => write!(f, "inf"),
        }
    }
}

impl FromStr for ParityClass {
    type Err = FareyError;

    fn from_str(s: &str) -> Result<Self, FareyError> {
        match s.trim() {
            "0" => Ok(ParityClass::Zero),
            "-1" => Ok(ParityClass::MinusOne),
            "inf" => Ok(ParityClass::Infinity),
            other => Err(FareyError::ParseLetter { input: other.to_string() }),
        }
    }
}

/// A canonical extended rational `num/den`.
///
/// Invariants, established by [`ExtRational::new`] and preserved by every
/// operation:
///
/// - `gcd(|num|, den) = 1`,
/// - `den >= 0`, and `den = 0` implies `num = 1` (infinity is exactly `1/0`),
/// - `(num, den) != (0, 0)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExtRational {
    num: BigInt,
    den: BigInt,
}

impl ExtRational {
    /// Canonicalizes `num/den`: divides out the gcd and flips signs so the
    /// denominator is non-negative, mapping both `1/0` and `-1/0` to `1/0`.
    ///
    /// Returns [`FareyError::ZeroZero`] for `0/0`, which names no value.
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Self, FareyError> {
        let (mut num, mut den) = (num.into(), den.into());
        if num.is_zero() && den.is_zero() {
            return Err(FareyError::ZeroZero);
        }
        let g = num.gcd(&den);
        num /= &g;
        den /= &g;
        if den.is_negative() || (den.is_zero() && num.is_negative()) {
            num = -num;
            den = -den;
        }
        Ok(ExtRational { num, den })
    }

    /// The infinite value `1/0`.
    pub fn infinity() -> Self {
        ExtRational { num: BigInt::one(), den: BigInt::zero() }
    }

    /// The numerator of the canonical form.
    pub fn num(&self) -> &BigInt {
        &self.num
    }

    /// The denominator of the canonical form (non-negative).
    pub fn den(&self) -> &BigInt {
        &self.den
    }

    /// Whether this is the infinite value `1/0`.
    pub fn is_infinite(&self) -> bool {
        self.den.is_zero()
    }

    /// The Farey distance `|num(self)·den(other) - den(self)·num(other)|`.
    ///
    /// Two extended rationals are *Farey neighbors* exactly when this is 1.
    pub fn delta(&self, other: &Self) -> BigInt {
        (&self.num * &other.den - &self.den * &other.num).abs()
    }

    /// Whether `self` and `other` are Farey neighbors.
    pub fn is_neighbor(&self, other: &Self) -> bool {
        self.delta(other).is_one()
    }

    /// The Farey mediant `(num + num') / (den + den')` of two neighbors.
    ///
    /// For finite neighbors the mediant lies strictly between them.
    /// Returns [`FareyError::NotNeighbors`] when the Farey distance is not 1.
    pub fn farey_sum(&self, other: &Self) -> Result<Self, FareyError> {
        self.require_neighbor(other)?;
        ExtRational::new(&self.num + &other.num, &self.den + &other.den)
    }

    /// The Farey difference `(num - num') / (den - den')` of two neighbors.
    ///
    /// Equal denominators force the numerators to differ by exactly 1, so the
    /// result is then the canonical infinity `1/0`. Returns
    /// [`FareyError::NotNeighbors`] when the Farey distance is not 1.
    pub fn farey_diff(&self, other: &Self) -> Result<Self, FareyError> {
        self.require_neighbor(other)?;
        ExtRational::new(&self.num - &other.num, &self.den - &other.den)
    }

    fn require_neighbor(&self, other: &Self) -> Result<(), FareyError> {
        let delta = self.delta(other);
        if delta.is_one() {
            Ok(())
        } else {
            Err(FareyError::NotNeighbors { a: self.clone(), b: other.clone(), delta })
        }
    }

    /// The parity class of the canonical form.
    pub fn parity_class(&self) -> ParityClass {
        if self.num.is_even() {
            ParityClass::Zero
        } else if self.den.is_even() {
            ParityClass::Infinity
        } else {
            ParityClass::MinusOne
        }
    }

    /// Splits a finite value into the unique unordered pair of Farey
    /// neighbors `(q', q'')` with `q' ⊕ q'' = q` and all three values
    /// pairwise neighbors, returned with the smaller value first
    /// (infinity counts as largest).
    ///
    /// The pair is found by solving `num·y - den·x = 1` for the unique
    /// `0 <= y < den`; the cofactor is then the Farey difference `q ⊖ q'`.
    /// Returns [`FareyError::InfiniteInput`] for `1/0`.
    pub fn farey_decompose(&self) -> Result<(Self, Self), FareyError> {
        if self.is_infinite() {
            return Err(FareyError::InfiniteInput);
        }
        // num·x + den·t = 1 for some t, so x inverts num modulo den; the
        // representative y = x mod den (0 <= y < den) gives num·y ≡ 1, and
        // the matching x-value is (num·y - 1) / den. den = 1 yields y = 0
        // and the infinite cofactor.
        let e = self.num.extended_gcd(&self.den);
        debug_assert!(e.gcd.is_one());
        let y = e.x.mod_floor(&self.den);
        let x = (&self.num * &y - BigInt::one()) / &self.den;
        let first = ExtRational::new(x, y).expect("num·y - den·x = 1 rules out 0/0");
        let second = self.farey_diff(&first)?;
        debug_assert!(first.is_neighbor(&second));
        if first <= second {
            Ok((first, second))
        } else {
            Ok((second, first))
        }
    }

    /// The rotation `q ↦ -den / (den + num)`, an order-3 map of the extended
    /// rationals that advances the parity class along the cycle
    /// `Zero ↦ MinusOne ↦ Infinity ↦ Zero`.
    pub fn moebius(&self) -> Self {
        ExtRational::new(-self.den.clone(), &self.den + &self.num)
            .expect("-den and den + num are never both zero")
    }

    /// The inverse rotation `q ↦ (num + den) / -num`.
    pub fn moebius_inv(&self) -> Self {
        ExtRational::new(&self.num + &self.den, -self.num.clone())
            .expect("num + den and -num are never both zero")
    }
}

impl From<i64> for ExtRational {
    fn from(n: i64) -> Self {
        ExtRational { num: BigInt::from(n), den: BigInt::one() }
    }
}

/// Total order on the extended rationals with `1/0` greatest.
impl Ord for ExtRational {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self.is_infinite(), other.is_infinite()) {
            (true, true) => Ordering::Equal,
            (true, false) => Ordering::Greater,
            (false, true) => Ordering::Less,
            // Both denominators are positive, so cross-multiplying
            // preserves the order.
            (false, false) => (&self.num * &other.den).cmp(&(&other.num * &self.den)),
        }
    }
}

impl PartialOrd for ExtRational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ExtRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

/// Parses `d/r`, a bare integer (denominator 1), or the alias `inf` (`1/0`).
impl FromStr for ExtRational {
    type Err = FareyError;

    fn from_str(s: &str) -> Result<Self, FareyError> {
        let s = s.trim();
        if s == "inf" {
            return Ok(ExtRational::infinity());
        }
        let parse_int = |part: &str| -> Result<BigInt, FareyError> {
            part.trim().parse::<BigInt>().map_err(|_| FareyError::ParseFraction { input: s.to_string() })
        };
        match s.split_once('/') {
            Some((num, den)) => ExtRational::new(parse_int(num)?, parse_int(den)?),
            None => Ok(ExtRational { num: parse_int(s)?, den: BigInt::one() }),
        }
    }
}
