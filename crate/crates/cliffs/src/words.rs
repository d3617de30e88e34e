//! Words of natural letters, the bound condition, and componentwise order.
//!
//! A word `u = u_1 ... u_n` satisfies the bound condition for a range map
//! `delta` when `u_i <= delta(i)` at every position. Words of a fixed size
//! are ordered componentwise; meet and join are taken letter by letter. The
//! total order on words (used everywhere output must be deterministic) is
//! size first, then lexicographic.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{CliffError, Result};
use crate::range_map::{Letter, RangeMap};

/// A finite word of natural letters.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    /// Letter at a 1-based position.
    pub fn at(&self, i: usize) -> Letter {
        assert!(i >= 1 && i <= self.0.len(), "position out of range");
        self.0[i - 1]
    }

    /// Sum of the letters.
    pub fn weight(&self) -> u64 {
        self.0.iter().map(|&a| u64::from(a)).sum()
    }

    pub fn push(&mut self, a: Letter) {
        self.0.push(a);
    }

    /// Copy of this word with one more letter.
    pub fn appended(&self, a: Letter) -> Word {
        let mut w = self.0.clone();
        w.push(a);
        Word(w)
    }

    /// Prefix of the first `k` letters.
    pub fn prefix(&self, k: usize) -> Word {
        Word(self.0[..k].to_vec())
    }

    /// Concatenation `uv`.
    pub fn concat(&self, other: &Word) -> Word {
        let mut w = self.0.clone();
        w.extend_from_slice(&other.0);
        Word(w)
    }

    /// Does every position satisfy `u_i <= delta(i)`?
    pub fn respects(&self, delta: &RangeMap) -> bool {
        self.0.iter().enumerate().all(|(k, &a)| a <= delta.at(k + 1))
    }

    /// Like [`Word::respects`] but reports the first offending position.
    pub fn check_respects(&self, delta: &RangeMap) -> Result<()> {
        for (k, &a) in self.0.iter().enumerate() {
            let bound = delta.at(k + 1);
            if a > bound {
                return Err(CliffError::LetterOutOfRange {
                    position: k + 1,
                    letter: a,
                    bound,
                });
            }
        }
        Ok(())
    }

    /// Caps every letter at its bound: `min(u_i, delta(i))`.
    pub fn reduce(&self, delta: &RangeMap) -> Word {
        Word(
            self.0
                .iter()
                .enumerate()
                .map(|(k, &a)| a.min(delta.at(k + 1)))
                .collect(),
        )
    }

    /// Componentwise order. Words of different sizes are incomparable.
    pub fn leq(&self, other: &Word) -> bool {
        self.0.len() == other.0.len()
            && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Componentwise minimum of two same-size words.
    pub fn meet(&self, other: &Word) -> Result<Word> {
        self.zip_with(other, |a, b| a.min(b))
    }

    /// Componentwise maximum of two same-size words.
    pub fn join(&self, other: &Word) -> Result<Word> {
        self.zip_with(other, |a, b| a.max(b))
    }

    fn zip_with(&self, other: &Word, f: impl Fn(Letter, Letter) -> Letter) -> Result<Word> {
        if self.0.len() != other.0.len() {
            return Err(CliffError::SizeMismatch {
                left: self.0.len(),
                right: other.0.len(),
            });
        }
        Ok(Word(
            self.0.iter().zip(&other.0).map(|(&a, &b)| f(a, b)).collect(),
        ))
    }

    /// Parses a word. Accepted forms: `eps` (or an empty string) for the
    /// empty word, comma-separated naturals (`0,0,2,2,1`), a run of digits
    /// with one letter per digit (`00221`), or a bracketed letter list
    /// (`[12]`, needed for a single letter past 9).
    pub fn parse(input: &str) -> Result<Word> {
        let bad = |reason: &str| CliffError::BadWord {
            input: input.to_string(),
            reason: reason.to_string(),
        };
        let s = input.trim();
        if s.is_empty() || s == "eps" {
            return Ok(Word::empty());
        }
        let parse_list = |inner: &str| -> Result<Word> {
            let letters = inner
                .split(',')
                .map(|p| {
                    p.trim()
                        .parse::<Letter>()
                        .map_err(|_| bad(&format!("`{}` is not a natural number", p.trim())))
                })
                .collect::<std::result::Result<Vec<_>, _>>()?;
            Ok(Word(letters))
        };
        if let Some(rest) = s.strip_prefix('[') {
            let inner = rest.strip_suffix(']').ok_or_else(|| bad("missing `]`"))?;
            let inner = inner.trim();
            if inner.is_empty() {
                return Ok(Word::empty());
            }
            return parse_list(inner);
        }
        if s.contains(',') {
            return parse_list(s);
        }
        let letters = s
            .chars()
            .map(|c| {
                c.to_digit(10)
                    .ok_or_else(|| bad(&format!("`{c}` is not a digit")))
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(Word(letters))
    }
}

impl From<Vec<Letter>> for Word {
    fn from(letters: Vec<Letter>) -> Self {
        Word(letters)
    }
}

impl From<&[Letter]> for Word {
    fn from(letters: &[Letter]) -> Self {
        Word(letters.to_vec())
    }
}

/// Size first, then lexicographic. This is the canonical enumeration order.
impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical serialization: comma-separated naturals, `eps` when empty.
/// A single letter past 9 uses the bracket form so it never re-parses as a
/// digit run.
impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "eps");
        }
        if self.0.len() == 1 && self.0[0] > 9 {
            return write!(f, "[{}]", self.0[0]);
        }
        for (k, &a) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(w("00221").letters(), &[0, 0, 2, 2, 1]);
        assert_eq!(w("0,0,2,2,1").letters(), &[0, 0, 2, 2, 1]);
        assert_eq!(w("eps"), Word::empty());
        assert_eq!(w(""), Word::empty());
        assert_eq!(w("[0,10,3]").letters(), &[0, 10, 3]);
        assert_eq!(w("[]"), Word::empty());
        assert_eq!(w("00221").to_string(), "0,0,2,2,1");
        assert_eq!(Word::empty().to_string(), "eps");
        assert_eq!(Word::new(vec![0, 10, 3]).to_string(), "0,10,3");
        assert_eq!(Word::new(vec![12]).to_string(), "[12]");
        for u in [Word::new(vec![12]), w("00221"), Word::empty(), w("[0,10,3]")] {
            assert_eq!(w(&u.to_string()), u, "round trip failed for {u}");
        }
        assert!(Word::parse("0a1").is_err());
        assert!(Word::parse("[1,x]").is_err());
        assert!(Word::parse("[1,2").is_err());
        assert!(Word::parse("1,x").is_err());
    }

    #[test]
    fn bound_condition() {
        let d = RangeMap::staircase(1);
        assert!(w("012").respects(&d));
        assert!(w("010").respects(&d));
        assert!(!w("020").respects(&d));
        assert!(!w("1").respects(&d));
        assert!(Word::empty().respects(&d));
        match w("031").check_respects(&d) {
            Err(CliffError::LetterOutOfRange {
                position: 2,
                letter: 3,
                bound: 1,
            }) => {}
            other => panic!("unexpected: {other:?}"),
        }
    }

    #[test]
    fn reduction_caps_letters() {
        let d = RangeMap::staircase(1);
        assert_eq!(w("0412").reduce(&d), w("0112"));
        assert_eq!(w("012").reduce(&d), w("012"));
        let d = RangeMap::parse("seq[0,1,3,1];const(2)").unwrap();
        assert_eq!(w("09999").reduce(&d), w("01312"));
    }

    #[test]
    fn componentwise_order() {
        assert!(w("001").leq(&w("011")));
        assert!(!w("010").leq(&w("001")));
        assert!(!w("01").leq(&w("011")));
        assert_eq!(w("021").meet(&w("012")).unwrap(), w("011"));
        assert_eq!(w("021").join(&w("012")).unwrap(), w("022"));
        assert!(w("01").meet(&w("011")).is_err());
    }

    #[test]
    fn size_lex_total_order() {
        let mut v = vec![w("10"), w("2"), w("01"), w("0"), w("eps"), w("00")];
        v.sort();
        assert_eq!(
            v.iter().map(Word::to_string).collect::<Vec<_>>(),
            vec!["eps", "0", "2", "0,0", "0,1", "1,0"]
        );
    }

    #[test]
    fn weight_and_prefix() {
        assert_eq!(w("00221").weight(), 5);
        assert_eq!(w("00221").prefix(3), w("002"));
        assert_eq!(w("00221").prefix(0), Word::empty());
        assert_eq!(w("002").concat(&w("21")), w("00221"));
        assert_eq!(w("002").appended(3), w("0023"));
    }
}
