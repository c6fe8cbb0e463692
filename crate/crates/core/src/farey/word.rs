//! Words in the three mutation directions.

use std::fmt;
use std::str::FromStr;

use super::{FareyError, ParityClass};

/// A finite sequence of mutation directions, applied left to right.
///
/// Because every mutation is an involution, a word with two equal adjacent
/// letters is never shorter than its reduction; the words produced by descent
/// and enumeration are always reduced.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct MutationWord(Vec<ParityClass>);

impl MutationWord {
    /// The empty word.
    pub fn empty() -> Self {
        MutationWord(Vec::new())
    }

    /// Wraps a letter sequence.
    pub fn new(letters: Vec<ParityClass>) -> Self {
        MutationWord(letters)
    }

    /// The letters, in application order.
    pub fn letters(&self) -> &[ParityClass] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Appends a letter.
    pub fn push(&mut self, letter: ParityClass) {
        self.0.push(letter);
    }

    /// The last letter, if any.
    pub fn last(&self) -> Option<ParityClass> {
        self.0.last().copied()
    }

    /// The same letters in reverse order. Since each letter is an
    /// involution, the reversed word undoes the original.
    pub fn reversed(&self) -> Self {
        MutationWord(self.0.iter().rev().copied().collect())
    }

    /// Whether no two adjacent letters are equal.
    pub fn is_reduced(&self) -> bool {
        self.0.windows(2).all(|pair| pair[0] != pair[1])
    }

    pub fn iter(&self) -> impl Iterator<Item = ParityClass> + '_ {
        self.0.iter().copied()
    }
}

impl From<Vec<ParityClass>> for MutationWord {
    fn from(letters: Vec<ParityClass>) -> Self {
        MutationWord(letters)
    }
}

impl<'a> IntoIterator for &'a MutationWord {
    type Item = ParityClass;
    type IntoIter = std::iter::Copied<std::slice::Iter<'a, ParityClass>>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter().copied()
    }
}

/// Renders the letters comma-separated, e.g. `0,-1,inf`; the empty word
/// renders as the empty string.
impl fmt::Display for MutationWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for letter in &self.0 {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{letter}")?;
            first = false;
        }
        Ok(())
    }
}

/// Parses a comma-separated letter list; the empty string is the empty word.
impl FromStr for MutationWord {
    type Err = FareyError;

    fn from_str(s: &str) -> Result<Self, FareyError> {
        if s.trim().is_empty() {
            return Ok(MutationWord::empty());
        }
        s.split(',').map(|letter| letter.parse()).collect::<Result<Vec<_>, _>>().map(MutationWord)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use ParityClass::{Infinity, MinusOne, Zero};

    #[test]
    fn words_render_and_parse_round_trip() {
        let word = MutationWord::new(vec![Zero, MinusOne, Infinity]);
        assert_eq!(word.to_string(), "0,-1,inf");
        assert_eq!("0,-1,inf".parse::<MutationWord>().unwrap(), word);
        assert_eq!("".parse::<MutationWord>().unwrap(), MutationWord::empty());
        assert_eq!(MutationWord::empty().to_string(), "");
        assert_eq!(" -1 , 0 ".parse::<MutationWord>().unwrap(), MutationWord::new(vec![MinusOne, Zero]));
    }

    #[test]
    fn bad_letters_are_rejected() {
        assert_eq!(
            "0,2".parse::<MutationWord>(),
            Err(FareyError::ParseLetter { input: "2".to_string() })
        );
    }

    #[test]
    fn reduction_detects_adjacent_repeats() {
        assert!(MutationWord::new(vec![Zero, MinusOne, Zero]).is_reduced());
        assert!(!MutationWord::new(vec![Zero, Zero]).is_reduced());
        assert!(MutationWord::empty().is_reduced());
    }

    #[test]
    fn reversal_reverses_application_order() {
        let word = MutationWord::new(vec![Zero, MinusOne, Infinity]);
        assert_eq!(word.reversed(), MutationWord::new(vec![Infinity, MinusOne, Zero]));
    }
}
