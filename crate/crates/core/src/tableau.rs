//! Straight and skew tableaux.

use std::fmt;
use std::ops::Deref;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;
use crate::letter::{Letter, Word};
use crate::partition::{Cell, Partition};

/// A filling of a Young diagram, stored row by row.
///
/// Rows are non-empty and weakly decreasing in length. Semistandardness is a
/// property checked by [`Tableau::is_semistandard`], not a construction
/// invariant, so punctured intermediate states can reuse the type.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tableau<E> {
    rows: Vec<Vec<E>>,
}

impl<E> Default for Tableau<E> {
    fn default() -> Self {
        Tableau { rows: Vec::new() }
    }
}

impl<E: Copy + Ord> Tableau<E> {
    pub fn empty() -> Tableau<E> {
        Tableau { rows: Vec::new() }
    }

    pub fn from_rows(rows: Vec<Vec<E>>) -> Result<Tableau<E>, Error> {
        let lens: Vec<usize> = rows.iter().map(Vec::len).collect();
        Partition::new(lens)?;
        Ok(Tableau { rows })
    }

    /// Builds a tableau and checks it is semistandard.
    pub fn semistandard(rows: Vec<Vec<E>>) -> Result<Tableau<E>, Error> {
        let t = Tableau::from_rows(rows)?;
        if !t.is_semistandard() {
            return Err(Error::NotSemistandard);
        }
        Ok(t)
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<Vec<E>>) -> Tableau<E> {
        debug_assert!(Tableau::from_rows(rows.clone()).is_ok());
        Tableau { rows }
    }

    pub fn rows(&self) -> &[Vec<E>] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<Vec<E>> {
        self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(Vec::len).collect()).expect("rows form a partition")
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn get(&self, cell: Cell) -> Option<E> {
        self.rows.get(cell.row - 1)?.get(cell.col - 1).copied()
    }

    /// Entries in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (Cell, E)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(r, row)| row.iter().enumerate().map(move |(c, &e)| (Cell::new(r + 1, c + 1), e)))
    }

    /// Rows weakly increase, columns strictly increase.
    pub fn is_semistandard(&self) -> bool {
        let rows_ok = self.rows.iter().all(|row| row.windows(2).all(|w| w[0] <= w[1]));
        let cols_ok = self
            .rows
            .windows(2)
            .all(|pair| pair[1].iter().zip(&pair[0]).all(|(below, above)| above < below));
        rows_ok && cols_ok
    }

    pub fn map<F: Copy + Ord>(&self, mut f: impl FnMut(E) -> F) -> Tableau<F> {
        Tableau { rows: self.rows.iter().map(|row| row.iter().map(|&e| f(e)).collect()).collect() }
    }

    /// Adds `value` at `cell`, which must be an addable cell.
    pub(crate) fn push_at(&mut self, cell: Cell, value: E) {
        if cell.row > self.rows.len() {
            debug_assert_eq!(cell.row, self.rows.len() + 1);
            self.rows.push(Vec::new());
        }
        let row = &mut self.rows[cell.row - 1];
        debug_assert_eq!(row.len() + 1, cell.col);
        row.push(value);
    }

    /// Removes the entry at a removable `cell`.
    pub(crate) fn pop_at(&mut self, cell: Cell) -> E {
        let row = &mut self.rows[cell.row - 1];
        debug_assert_eq!(row.len(), cell.col);
        let value = row.pop().expect("cell present");
        if row.is_empty() {
            self.rows.pop();
        }
        value
    }

    pub(crate) fn rows_mut(&mut self) -> &mut Vec<Vec<E>> {
        &mut self.rows
    }
}

impl Tableau<Letter> {
    /// Every row-`i` entry is at least the unbarred letter `i`.
    pub fn satisfies_symplectic_condition(&self) -> bool {
        self.rows
            .iter()
            .enumerate()
            .all(|(r, row)| row.iter().all(|&e| e >= Letter::unbarred(r as u16 + 1)))
    }

    pub fn is_king(&self) -> bool {
        self.is_semistandard() && self.satisfies_symplectic_condition()
    }

    pub fn from_signed(rows: &[Vec<i64>]) -> Result<Tableau<Letter>, Error> {
        let rows = rows
            .iter()
            .map(|row| row.iter().map(|&v| Letter::from_signed(v)).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        Tableau::from_rows(rows)
    }

    /// Reads rows from the bottom row up, each row left to right.
    pub fn row_word(&self) -> Word {
        Word(self.rows.iter().rev().flatten().copied().collect())
    }

    /// Reads each column bottom to top, leftmost column first.
    pub fn col_word(&self) -> Word {
        let width = self.rows.first().map_or(0, Vec::len);
        let mut out = Vec::with_capacity(self.size());
        for c in 0..width {
            for row in self.rows.iter().rev() {
                if let Some(&e) = row.get(c) {
                    out.push(e);
                }
            }
        }
        Word(out)
    }

    /// Number of entries equal to `letter`.
    pub fn count(&self, letter: Letter) -> usize {
        self.rows.iter().flatten().filter(|&&e| e == letter).count()
    }
}

impl Tableau<u32> {
    /// Semistandard with entries exactly `1..=n`, each once.
    pub fn is_standard(&self) -> bool {
        if !self.is_semistandard() {
            return false;
        }
        let mut seen: Vec<u32> = self.rows.iter().flatten().copied().collect();
        seen.sort_unstable();
        seen.iter().enumerate().all(|(i, &v)| v as usize == i + 1)
            && self.rows.iter().all(|row| row.windows(2).all(|w| w[0] < w[1]))
    }

    pub fn count(&self, value: u32) -> usize {
        self.rows.iter().flatten().filter(|&&e| e == value).count()
    }
}

impl<E: fmt::Display> fmt::Display for Tableau<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows.is_empty() {
            return f.write_str("∅");
        }
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                f.write_str(" / ")?;
            }
            for (j, e) in row.iter().enumerate() {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{e}")?;
            }
        }
        Ok(())
    }
}

impl<E: fmt::Display> fmt::Debug for Tableau<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

#[derive(Serialize, Deserialize)]
struct TableauRepr<E> {
    shape: Partition,
    rows: Vec<Vec<E>>,
}

impl<E: Serialize + Copy + Ord> Serialize for Tableau<E> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        TableauRepr { shape: self.shape(), rows: self.rows.clone() }.serialize(serializer)
    }
}

impl<'de, E: DeserializeOwned + Copy + Ord> Deserialize<'de> for Tableau<E> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = TableauRepr::<E>::deserialize(deserializer)?;
        let t = Tableau::from_rows(repr.rows).map_err(serde::de::Error::custom)?;
        if t.shape() != repr.shape {
            return Err(serde::de::Error::custom(Error::ShapeMismatch(repr.shape)));
        }
        Ok(t)
    }
}

/// A semistandard tableau over `[k̄]` satisfying the symplectic condition.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct KingTableau(Tableau<Letter>);

impl KingTableau {
    pub fn empty() -> KingTableau {
        KingTableau(Tableau::empty())
    }

    pub fn new(t: Tableau<Letter>) -> Result<KingTableau, Error> {
        if !t.is_semistandard() {
            return Err(Error::NotSemistandard);
        }
        if !t.satisfies_symplectic_condition() {
            return Err(Error::NotKing);
        }
        Ok(KingTableau(t))
    }

    pub fn from_signed(rows: &[Vec<i64>]) -> Result<KingTableau, Error> {
        KingTableau::new(Tableau::from_signed(rows)?)
    }

    pub(crate) fn new_unchecked(t: Tableau<Letter>) -> KingTableau {
        debug_assert!(t.is_king(), "not King: {t}");
        KingTableau(t)
    }

    /// The King tableau of shape `shape` with every row-`r` entry equal to `r`.
    pub fn superstandard(shape: &Partition) -> KingTableau {
        KingTableau(Tableau {
            rows: shape
                .rows()
                .iter()
                .enumerate()
                .map(|(r, &len)| vec![Letter::unbarred(r as u16 + 1); len])
                .collect(),
        })
    }

    pub fn as_tableau(&self) -> &Tableau<Letter> {
        &self.0
    }

    pub fn into_tableau(self) -> Tableau<Letter> {
        self.0
    }
}

impl Deref for KingTableau {
    type Target = Tableau<Letter>;
    fn deref(&self) -> &Tableau<Letter> {
        &self.0
    }
}

impl TryFrom<Tableau<Letter>> for KingTableau {
    type Error = Error;
    fn try_from(t: Tableau<Letter>) -> Result<Self, Error> {
        KingTableau::new(t)
    }
}

impl fmt::Display for KingTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl fmt::Debug for KingTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(&self.0, f)
    }
}

impl<'de> Deserialize<'de> for KingTableau {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let t = Tableau::<Letter>::deserialize(deserializer)?;
        KingTableau::new(t).map_err(serde::de::Error::custom)
    }
}

/// A filling of `outer/inner`. Cells of `inner` hold `None`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SkewTableau<E> {
    pub(crate) inner: Partition,
    pub(crate) grid: Vec<Vec<Option<E>>>,
}

impl<E: Copy + Ord> SkewTableau<E> {
    /// `rows[r]` lists the entries of row `r + 1` right of the inner shape.
    pub fn new(inner: Partition, rows: Vec<Vec<E>>) -> Result<SkewTableau<E>, Error> {
        let mut grid = Vec::with_capacity(rows.len().max(inner.len()));
        let n = rows.len().max(inner.len());
        for r in 1..=n {
            let mut row: Vec<Option<E>> = vec![None; inner.row_len(r)];
            row.extend(rows.get(r - 1).into_iter().flatten().map(|&e| Some(e)));
            grid.push(row);
        }
        while grid.last().is_some_and(Vec::is_empty) {
            grid.pop();
        }
        let outer = Partition::new(grid.iter().map(Vec::len).collect())
            .map_err(|_| Error::InvalidSkew(inner.clone(), Partition::empty()))?;
        if !inner.is_contained_in(&outer) {
            return Err(Error::InvalidSkew(inner, outer));
        }
        Ok(SkewTableau { inner, grid })
    }

    pub fn from_straight(t: &Tableau<E>) -> SkewTableau<E> {
        SkewTableau {
            inner: Partition::empty(),
            grid: t.rows().iter().map(|row| row.iter().map(|&e| Some(e)).collect()).collect(),
        }
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn outer(&self) -> Partition {
        Partition::new(self.grid.iter().map(Vec::len).collect()).expect("outer is a partition")
    }

    pub fn get(&self, cell: Cell) -> Option<E> {
        self.grid.get(cell.row - 1)?.get(cell.col - 1).copied().flatten()
    }

    /// Semistandard on the filled cells.
    pub fn is_semistandard(&self) -> bool {
        for (r, row) in self.grid.iter().enumerate() {
            for (c, &e) in row.iter().enumerate() {
                let Some(e) = e else { continue };
                if let Some(Some(right)) = row.get(c + 1) {
                    if e > *right {
                        return false;
                    }
                }
                if let Some(Some(below)) = self.grid.get(r + 1).and_then(|b| b.get(c)) {
                    if e >= *below {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Straight tableau if the inner shape is empty.
    pub fn to_straight(&self) -> Option<Tableau<E>> {
        if !self.inner.is_empty() {
            return None;
        }
        Some(Tableau::from_rows_unchecked(
            self.grid.iter().map(|row| row.iter().map(|e| e.expect("filled")).collect()).collect(),
        ))
    }
}

impl SkewTableau<Letter> {
    pub fn row_word(&self) -> Word {
        Word(self.grid.iter().rev().flat_map(|row| row.iter().flatten().copied()).collect())
    }
}

impl<E: fmt::Display> fmt::Debug for SkewTableau<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, row) in self.grid.iter().enumerate() {
            if i > 0 {
                f.write_str(" / ")?;
            }
            for (j, e) in row.iter().enumerate() {
                if j > 0 {
                    f.write_str(" ")?;
                }
                match e {
                    Some(e) => write!(f, "{e}")?,
                    None => f.write_str("·")?,
                }
            }
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(rows: &[Vec<i64>]) -> Tableau<Letter> {
        Tableau::from_signed(rows).unwrap()
    }

    #[test]
    fn row_word_examples() {
        let sample = t(&[vec![1, 2, 4], vec![-2, -2, 6], vec![3, -4], vec![5]]);
        assert_eq!(sample.row_word().to_signed(), vec![5, 3, -4, -2, -2, 6, 1, 2, 4]);
        assert!(Tableau::<Letter>::empty().row_word().is_empty());
        assert_eq!(t(&[vec![1, -1]]).row_word().to_signed(), vec![1, -1]);
    }

    #[test]
    fn col_word_examples() {
        assert_eq!(t(&[vec![1, 2], vec![-2]]).col_word().to_signed(), vec![-2, 1, 2]);
        assert!(Tableau::<Letter>::empty().col_word().is_empty());
        assert_eq!(t(&[vec![1], vec![2], vec![3]]).col_word().to_signed(), vec![3, 2, 1]);
    }

    #[test]
    fn king_condition() {
        let good = t(&[vec![1, 1, 2, -3], vec![2, -2, -2], vec![-3]]);
        assert!(good.is_king());
        let bad = t(&[vec![1, 1, 2, -3], vec![2, -2, -2], vec![-2]]);
        assert!(bad.is_semistandard());
        assert!(!bad.is_king());
        assert_eq!(KingTableau::new(bad), Err(Error::NotKing));
    }

    #[test]
    fn json_round_trip_and_shape_check() {
        let sample = t(&[vec![1, 2, 4], vec![-2, -2, 6], vec![3, -4], vec![5]]);
        let json = serde_json::to_string(&sample).unwrap();
        assert_eq!(json, r#"{"shape":[3,3,2,1],"rows":[[1,2,4],[-2,-2,6],[3,-4],[5]]}"#);
        let back: Tableau<Letter> = serde_json::from_str(&json).unwrap();
        assert_eq!(back, sample);
        assert!(serde_json::from_str::<Tableau<Letter>>(r#"{"shape":[2],"rows":[[1]]}"#).is_err());
        assert!(serde_json::from_str::<Tableau<Letter>>(r#"{"shape":[1,2],"rows":[[1],[2,3]]}"#).is_err());
    }

    #[test]
    fn skew_construction() {
        let s = SkewTableau::new(
            Partition::new(vec![1]).unwrap(),
            vec![vec![Letter::barred(2), Letter::unbarred(6)], vec![Letter::unbarred(3), Letter::barred(4)]],
        )
        .unwrap();
        assert_eq!(s.outer(), Partition::new(vec![3, 2]).unwrap());
        assert_eq!(s.row_word().to_signed(), vec![3, -4, -2, 6]);
        assert!(s.is_semistandard());
    }
}
