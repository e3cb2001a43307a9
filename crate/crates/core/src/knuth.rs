//! Knuth moves and the Knuth equivalences of types A and C.

use std::collections::{HashSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::correspondences::{rs_a, rs_c};
use crate::error::Error;
use crate::insertion::{berele_insert, row_insert};
use crate::letter::{Letter, Word};
use crate::tableau::KingTableau;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum MoveKind {
    /// `yxz ↦ yzx`
    K1,
    /// `yzx ↦ yxz`
    K2,
    /// `xzy ↦ zxy`
    K3,
    /// `zxy ↦ xzy`
    K4,
}

/// A move applied to the three letters starting at `position` (0-based).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ElementaryMove {
    pub kind: MoveKind,
    pub position: usize,
}

/// Side conditions on the letters `x, y, z` of a move.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum SideConditions {
    /// `x < y ≤ z` for K1/K2 and `x ≤ y < z` for K3/K4. These generate
    /// exactly the classes of equal insertion tableaux.
    #[default]
    Standard,
    /// `x < y ≤ z` for all four moves. Too permissive: `122 ↦ 212` is a K3
    /// move under it but changes the insertion tableau.
    Uniform,
}

impl SideConditions {
    fn admits(self, kind: MoveKind, x: Letter, y: Letter, z: Letter) -> bool {
        match (self, kind) {
            (_, MoveKind::K1 | MoveKind::K2) | (SideConditions::Uniform, _) => x < y && y <= z,
            (SideConditions::Standard, MoveKind::K3 | MoveKind::K4) => x <= y && y < z,
        }
    }
}

/// Every word one elementary move away from `w`, under the standard side
/// conditions.
pub fn elementary_neighbors(w: &Word) -> Vec<(ElementaryMove, Word)> {
    elementary_neighbors_with(w, SideConditions::Standard)
}

pub fn elementary_neighbors_with(w: &Word, conditions: SideConditions) -> Vec<(ElementaryMove, Word)> {
    let mut out = Vec::new();
    for position in 0..w.len().saturating_sub(2) {
        let (a, b, c) = (w[position], w[position + 1], w[position + 2]);
        // each kind reads (x, y, z) off the window and writes the image
        let candidates = [
            (MoveKind::K1, (b, a, c), [a, c, b]),
            (MoveKind::K2, (c, a, b), [a, c, b]),
            (MoveKind::K3, (a, c, b), [b, a, c]),
            (MoveKind::K4, (b, c, a), [b, a, c]),
        ];
        for (kind, (x, y, z), image) in candidates {
            if conditions.admits(kind, x, y, z) {
                let mut next = w.clone();
                next[position..position + 3].copy_from_slice(&image);
                out.push((ElementaryMove { kind, position }, next));
            }
        }
    }
    out
}

/// All words reachable from `w` by elementary moves.
pub fn knuth_class(w: &Word, conditions: SideConditions) -> HashSet<Word> {
    let mut seen = HashSet::from([w.clone()]);
    let mut queue = VecDeque::from([w.clone()]);
    while let Some(u) = queue.pop_front() {
        for (_, v) in elementary_neighbors_with(&u, conditions) {
            if seen.insert(v.clone()) {
                queue.push_back(v);
            }
        }
    }
    seen
}

/// `w ≡_A w'`, decided by comparing Schensted insertion tableaux.
pub fn knuth_equiv_a(w: &Word, w2: &Word) -> bool {
    rs_a(w).0 == rs_a(w2).0
}

/// Strictly decreasing in the symplectic order.
pub fn is_column_word(c: &Word) -> bool {
    c.windows(2).all(|p| p[0] > p[1])
}

/// `c ∼ c'` for column words: equal Berele insertion tableaux.
pub fn column_equiv(c: &Word, c2: &Word) -> Result<bool, Error> {
    if !is_column_word(c) || !is_column_word(c2) {
        return Err(Error::NotColumnWord);
    }
    Ok(knuth_equiv_c(c, c2))
}

/// Berele insertion tableau `P_C(w)`.
pub fn p_c(w: &Word) -> KingTableau {
    rs_c(w).0
}

/// `w ≡_C w'`, decided by comparing Berele insertion tableaux.
pub fn knuth_equiv_c(w: &Word, w2: &Word) -> bool {
    p_c(w) == p_c(w2)
}

/// The row word of `P_C(w)`, the canonical member of the type-C class.
pub fn canonical_word_c(w: &Word) -> Word {
    p_c(w).row_word()
}

/// A K5 instance `(c v, c' v)` from one deleting Berele insertion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct K5Witness {
    /// First column of `T ←_A x`, read bottom to top.
    pub c: Word,
    /// `c` with its `ī i` pair removed.
    pub c_prime: Word,
    /// The remaining columns of `T ←_A x`.
    pub v: Word,
}

impl K5Witness {
    pub fn left(&self) -> Word {
        self.c.concat(&self.v)
    }

    pub fn right(&self) -> Word {
        self.c_prime.concat(&self.v)
    }
}

/// The K5 witness of `T ←_C x`, or `None` when the insertion adds a box.
pub fn k5_witness(t: &KingTableau, x: Letter) -> Option<K5Witness> {
    let (_, step) = berele_insert(t, x);
    if !step.is_deletion() {
        return None;
    }
    let (typed, _) = row_insert(t.as_tableau(), x);
    let first: Vec<Letter> = typed.rows().iter().map(|row| row[0]).collect();
    let i = (1..first.len()).find(|&r| first[r] < Letter::unbarred(r as u16 + 1)).expect("violated column");
    let col = typed.col_word();
    let (c, v) = col.split_at(first.len());
    let c = Word(c.to_vec());
    // c lists column 1 bottom to top: 0-based row r sits at index len - 1 - r
    let (lo, hi) = (first.len() - 1 - i, first.len() - i);
    let c_prime: Word = c.iter().enumerate().filter(|&(j, _)| j != lo && j != hi).map(|(_, &l)| l).collect();
    Some(K5Witness { c, c_prime, v: Word(v.to_vec()) })
}
