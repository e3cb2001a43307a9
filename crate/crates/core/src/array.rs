//! Lexicographic two-line arrays, the input of the RSK correspondences.

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;
use crate::letter::{Letter, Word};

/// Pairs `(u_j, v_j)` sorted lexicographically, with `v` compared in the
/// symplectic order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TwoLineArray {
    pairs: Vec<(u32, Letter)>,
}

impl TwoLineArray {
    pub fn new(pairs: Vec<(u32, Letter)>) -> Result<TwoLineArray, Error> {
        if pairs.iter().any(|&(u, _)| u == 0) || pairs.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::NotLexicographic);
        }
        Ok(TwoLineArray { pairs })
    }

    pub fn from_rows(top: &[u32], bottom: &[Letter]) -> Result<TwoLineArray, Error> {
        if top.len() != bottom.len() {
            return Err(Error::RowLengthMismatch);
        }
        TwoLineArray::new(top.iter().copied().zip(bottom.iter().copied()).collect())
    }

    /// The array `(1 … n / w_1 … w_n)`.
    pub fn from_word(word: &Word) -> TwoLineArray {
        TwoLineArray { pairs: word.iter().enumerate().map(|(j, &v)| (j as u32 + 1, v)).collect() }
    }

    pub fn pairs(&self) -> &[(u32, Letter)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn top(&self) -> Vec<u32> {
        self.pairs.iter().map(|p| p.0).collect()
    }

    pub fn bottom(&self) -> Word {
        self.pairs.iter().map(|p| p.1).collect()
    }

    /// Same bottom row with top row `1..=n`.
    pub fn standardize(&self) -> TwoLineArray {
        TwoLineArray::from_word(&self.bottom())
    }

    /// All arrays of length `n` with top entries in `1..=top_max` and bottom
    /// letters drawn from `letters` (multisets of pairs, each listed once).
    pub fn all_of_length(top_max: u32, letters: &[Letter], n: usize) -> Vec<TwoLineArray> {
        let mut kinds: Vec<(u32, Letter)> =
            (1..=top_max).flat_map(|u| letters.iter().map(move |&v| (u, v))).collect();
        kinds.sort();
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(n);
        multisets(&kinds, 0, n, &mut current, &mut out);
        out
    }
}

fn multisets(
    kinds: &[(u32, Letter)],
    from: usize,
    remaining: usize,
    current: &mut Vec<(u32, Letter)>,
    out: &mut Vec<TwoLineArray>,
) {
    if remaining == 0 {
        out.push(TwoLineArray { pairs: current.clone() });
        return;
    }
    for i in from..kinds.len() {
        current.push(kinds[i]);
        multisets(kinds, i, remaining - 1, current, out);
        current.pop();
    }
}

#[derive(Serialize, Deserialize)]
struct ArrayRepr {
    top: Vec<u32>,
    bottom: Vec<Letter>,
}

impl Serialize for TwoLineArray {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        ArrayRepr { top: self.top(), bottom: self.bottom().0 }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for TwoLineArray {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = ArrayRepr::deserialize(deserializer)?;
        TwoLineArray::from_rows(&repr.top, &repr.bottom).map_err(serde::de::Error::custom)
    }
}
