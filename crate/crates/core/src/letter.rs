//! Letters of the barred alphabet `{1, 1̄, 2, 2̄, ...}` and words over it.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Deref, DerefMut};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

/// A letter `i` or `ī`, ordered by the symplectic order
/// `1 < 1̄ < 2 < 2̄ < ⋯`.
///
/// Stored as its rank `2i − 1` (unbarred) or `2i` (barred), so the derived
/// ordering on the rank is the symplectic order. Plain type-A letters are the
/// unbarred ones.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter(u16);

impl Letter {
    pub fn new(index: u16, barred: bool) -> Letter {
        assert!(index >= 1, "letter index must be positive");
        Letter(2 * index - u16::from(!barred))
    }

    pub fn unbarred(index: u16) -> Letter {
        Letter::new(index, false)
    }

    pub fn barred(index: u16) -> Letter {
        Letter::new(index, true)
    }

    /// Inverse of [`Letter::rank`].
    pub fn from_rank(rank: u16) -> Letter {
        assert!(rank >= 1, "rank must be positive");
        Letter(rank)
    }

    /// Signed external encoding: `+i` for `i`, `−i` for `ī`.
    pub fn from_signed(value: i64) -> Result<Letter, Error> {
        if value == 0 || value.unsigned_abs() > u64::from(u16::MAX / 2) {
            return Err(Error::InvalidLetter(value));
        }
        Ok(Letter::new(value.unsigned_abs() as u16, value < 0))
    }

    pub fn to_signed(self) -> i64 {
        let i = i64::from(self.index());
        if self.is_barred() {
            -i
        } else {
            i
        }
    }

    pub fn index(self) -> u16 {
        self.0.div_ceil(2)
    }

    pub fn is_barred(self) -> bool {
        self.0 % 2 == 0
    }

    /// Position in the symplectic order, `1..=2k` over `[k̄]`.
    pub fn rank(self) -> u16 {
        self.0
    }

    /// The letter with the same index and the opposite bar.
    pub fn toggle_bar(self) -> Letter {
        Letter::new(self.index(), !self.is_barred())
    }

    /// All `2k` letters of `[k̄]` in increasing order.
    pub fn alphabet_barred(k: u16) -> impl Iterator<Item = Letter> + Clone {
        (1..=2 * k).map(Letter)
    }

    /// The unbarred letters `1..=k`.
    pub fn alphabet_plain(k: u16) -> impl Iterator<Item = Letter> + Clone {
        (1..=k).map(Letter::unbarred)
    }
}

/// Compare two letters in the symplectic order.
pub fn symplectic_cmp(a: Letter, b: Letter) -> Ordering {
    a.cmp(&b)
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_barred() {
            write!(f, "{}\u{0305}", self.index())
        } else {
            write!(f, "{}", self.index())
        }
    }
}

impl Serialize for Letter {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_i64(self.to_signed())
    }
}

impl<'de> Deserialize<'de> for Letter {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let value = i64::deserialize(deserializer)?;
        Letter::from_signed(value).map_err(serde::de::Error::custom)
    }
}

/// A finite word over the barred alphabet.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn new() -> Word {
        Word(Vec::new())
    }

    pub fn from_signed(values: &[i64]) -> Result<Word, Error> {
        values.iter().map(|&v| Letter::from_signed(v)).collect::<Result<_, _>>().map(Word)
    }

    pub fn to_signed(&self) -> Vec<i64> {
        self.0.iter().map(|l| l.to_signed()).collect()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.0.clone();
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    /// All `alphabet.len()^n` words of length `n`, lexicographically.
    pub fn all_of_length(alphabet: &[Letter], n: usize) -> Vec<Word> {
        let mut out = vec![Word::new()];
        for _ in 0..n {
            out = out
                .into_iter()
                .flat_map(|w| {
                    alphabet.iter().map(move |&a| {
                        let mut next = w.0.clone();
                        next.push(a);
                        Word(next)
                    })
                })
                .collect();
        }
        out
    }
}

impl Deref for Word {
    type Target = Vec<Letter>;
    fn deref(&self) -> &Vec<Letter> {
        &self.0
    }
}

impl DerefMut for Word {
    fn deref_mut(&mut self) -> &mut Vec<Letter> {
        &mut self.0
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}
