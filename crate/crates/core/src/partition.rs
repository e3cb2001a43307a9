//! Partitions (Young diagrams in English convention) and cells.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

/// A box of a diagram, 1-based, row 1 at the top.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Cell {
        assert!(row >= 1 && col >= 1, "cells are 1-based");
        Cell { row, col }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

impl Serialize for Cell {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        [self.row, self.col].serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Cell {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let [row, col] = <[usize; 2]>::deserialize(deserializer)?;
        if row == 0 || col == 0 {
            return Err(serde::de::Error::custom("cells are 1-based"));
        }
        Ok(Cell { row, col })
    }
}

/// Weakly decreasing sequence of positive row lengths.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn empty() -> Partition {
        Partition(Vec::new())
    }

    pub fn new(rows: Vec<usize>) -> Result<Partition, Error> {
        if rows.contains(&0) || rows.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidShape(rows));
        }
        Ok(Partition(rows))
    }

    /// Like [`Partition::new`] but drops trailing zeros first.
    pub fn from_padded(mut rows: Vec<usize>) -> Result<Partition, Error> {
        while rows.last() == Some(&0) {
            rows.pop();
        }
        Partition::new(rows)
    }

    pub fn rows(&self) -> &[usize] {
        &self.0
    }

    /// ℓ(λ).
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// |λ|.
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Length of row `r` (1-based), zero past the last row.
    pub fn row_len(&self, r: usize) -> usize {
        if r == 0 {
            return usize::MAX;
        }
        self.0.get(r - 1).copied().unwrap_or(0)
    }

    /// Height of column `c` (1-based).
    pub fn col_len(&self, c: usize) -> usize {
        self.0.iter().take_while(|&&len| len >= c).count()
    }

    pub fn contains_cell(&self, cell: Cell) -> bool {
        self.row_len(cell.row) >= cell.col
    }

    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (1..=len).map(move |c| Cell::new(r + 1, c)))
    }

    /// λ ⊆ μ as sets of boxes.
    pub fn is_contained_in(&self, other: &Partition) -> bool {
        self.len() <= other.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// λ ⊲ μ: μ is λ plus one box.
    pub fn is_covered_by(&self, other: &Partition) -> bool {
        self.is_contained_in(other) && other.size() == self.size() + 1
    }

    /// Cells that can be removed leaving a partition.
    pub fn removable_cells(&self) -> Vec<Cell> {
        (1..=self.len())
            .filter(|&r| self.row_len(r) > self.row_len(r + 1))
            .map(|r| Cell::new(r, self.row_len(r)))
            .collect()
    }

    /// Cells that can be added keeping a partition.
    pub fn addable_cells(&self) -> Vec<Cell> {
        (1..=self.len() + 1)
            .filter(|&r| r == 1 || self.row_len(r - 1) > self.row_len(r))
            .map(|r| Cell::new(r, self.row_len(r) + 1))
            .collect()
    }

    pub fn with_cell_added(&self, cell: Cell) -> Option<Partition> {
        if !self.addable_cells().contains(&cell) {
            return None;
        }
        let mut rows = self.0.clone();
        if cell.row > rows.len() {
            rows.push(1);
        } else {
            rows[cell.row - 1] += 1;
        }
        Some(Partition(rows))
    }

    pub fn with_cell_removed(&self, cell: Cell) -> Option<Partition> {
        if !self.removable_cells().contains(&cell) {
            return None;
        }
        let mut rows = self.0.clone();
        rows[cell.row - 1] -= 1;
        if rows[cell.row - 1] == 0 {
            rows.pop();
        }
        Some(Partition(rows))
    }

    /// Cells of `self` not in `inner`. Assumes containment.
    pub fn skew_cells<'a>(&'a self, inner: &'a Partition) -> impl Iterator<Item = Cell> + 'a {
        self.cells().filter(move |&c| !inner.contains_cell(c))
    }

    /// Union of the two diagrams.
    pub fn union(&self, other: &Partition) -> Partition {
        let n = self.len().max(other.len());
        Partition((1..=n).map(|r| self.row_len(r).max(other.row_len(r))).collect())
    }

    /// All partitions of `n` with at most `max_rows` rows, in reverse lexicographic order.
    pub fn all_of_size(n: usize, max_rows: usize) -> Vec<Partition> {
        fn go(n: usize, max_part: usize, rows_left: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition(prefix.clone()));
                return;
            }
            if rows_left == 0 {
                return;
            }
            for part in (1..=max_part.min(n)).rev() {
                prefix.push(part);
                go(n - part, part, rows_left - 1, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, max_rows, &mut Vec::new(), &mut out);
        out
    }

    /// All partitions of size at most `n` with at most `max_rows` rows.
    pub fn all_up_to_size(n: usize, max_rows: usize) -> Vec<Partition> {
        (0..=n).flat_map(|m| Partition::all_of_size(m, max_rows)).collect()
    }

    /// All ν with `self/ν` a horizontal strip.
    pub fn horizontal_strip_removals(&self) -> Vec<Partition> {
        let bounds: Vec<(usize, usize)> =
            (1..=self.len()).map(|r| (self.row_len(r + 1), self.row_len(r))).collect();
        product_of_ranges(&bounds)
            .into_iter()
            .map(|rows| Partition::from_padded(rows).expect("interlacing rows form a partition"))
            .collect()
    }

    /// All ρ with `ρ/self` a horizontal strip of at most `max_boxes` boxes.
    pub fn horizontal_strip_additions(&self, max_boxes: usize) -> Vec<Partition> {
        let mut bounds: Vec<(usize, usize)> = Vec::with_capacity(self.len() + 1);
        bounds.push((self.row_len(1), self.row_len(1) + max_boxes));
        for r in 2..=self.len() + 1 {
            bounds.push((self.row_len(r), self.row_len(r - 1)));
        }
        let base = self.size();
        product_of_ranges(&bounds)
            .into_iter()
            .filter(|rows| rows.iter().sum::<usize>() - base <= max_boxes)
            .map(|rows| Partition::from_padded(rows).expect("interlacing rows form a partition"))
            .collect()
    }
}

fn product_of_ranges(bounds: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::with_capacity(bounds.len())];
    for &(lo, hi) in bounds {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (lo..=hi).map(move |v| {
                    let mut next = prefix.clone();
                    next.push(v);
                    next
                })
            })
            .collect();
    }
    out
}

/// Whether `inner ⊆ outer` and `outer/inner` has at most one box per column.
pub fn is_horizontal_strip(inner: &Partition, outer: &Partition) -> bool {
    // interlacing: outer_{r+1} <= inner_r for every r
    inner.is_contained_in(outer) && (1..=outer.len()).all(|r| outer.row_len(r + 1) <= inner.row_len(r))
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("∅");
        }
        write!(f, "(")?;
        for (i, r) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{r}")?;
        }
        write!(f, ")")
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.0.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let rows = Vec::<usize>::deserialize(deserializer)?;
        Partition::from_padded(rows).map_err(serde::de::Error::custom)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(rows: Vec<usize>) -> Result<Self, Error> {
        Partition::from_padded(rows)
    }
}
