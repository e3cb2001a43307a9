//! Exhaustive enumerators for semistandard, King and skew tableaux.
//!
//! Every enumerator returns its results sorted lexicographically by the
//! row-major sequence of letter ranks.

use crate::letter::Letter;
use crate::partition::{Cell, Partition};
use crate::tableau::{KingTableau, SkewTableau, Tableau};

/// Which letters an SSYT may use.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Alphabet {
    /// `1 < 2 < ⋯ < k`.
    Plain(u16),
    /// `1 < 1̄ < ⋯ < k < k̄`, treated as `2k` ordered letters.
    Barred(u16),
}

impl Alphabet {
    pub fn letters(self) -> Vec<Letter> {
        match self {
            Alphabet::Plain(k) => Letter::alphabet_plain(k).collect(),
            Alphabet::Barred(k) => Letter::alphabet_barred(k).collect(),
        }
    }
}

/// All semistandard tableaux of shape `shape` over `alphabet`.
pub fn enumerate_ssyt(alphabet: Alphabet, shape: &Partition) -> Vec<Tableau<Letter>> {
    fill(shape, &Partition::empty(), &alphabet.letters(), false)
        .into_iter()
        .map(|s| s.to_straight().expect("straight shape"))
        .collect()
}

/// All King tableaux of shape `shape` over `[k̄]`.
pub fn enumerate_kt(k: u16, shape: &Partition) -> Vec<KingTableau> {
    if shape.len() > k as usize {
        return Vec::new();
    }
    fill(shape, &Partition::empty(), &Letter::alphabet_barred(k).collect::<Vec<_>>(), true)
        .into_iter()
        .map(|s| KingTableau::new_unchecked(s.to_straight().expect("straight shape")))
        .collect()
}

/// All semistandard fillings of `outer/inner` over the given letters.
pub fn enumerate_skew(inner: &Partition, outer: &Partition, letters: &[Letter]) -> Vec<SkewTableau<Letter>> {
    if !inner.is_contained_in(outer) {
        return Vec::new();
    }
    fill(outer, inner, letters, false)
}

fn fill(outer: &Partition, inner: &Partition, letters: &[Letter], king: bool) -> Vec<SkewTableau<Letter>> {
    let cells: Vec<Cell> = outer.skew_cells(inner).collect();
    let mut grid: Vec<Vec<Option<Letter>>> = outer.rows().iter().map(|&len| vec![None; len]).collect();
    let mut out = Vec::new();
    fill_rec(&cells, 0, &mut grid, letters, king, inner, &mut out);
    out
}

fn fill_rec(
    cells: &[Cell],
    at: usize,
    grid: &mut Vec<Vec<Option<Letter>>>,
    letters: &[Letter],
    king: bool,
    inner: &Partition,
    out: &mut Vec<SkewTableau<Letter>>,
) {
    let Some(&cell) = cells.get(at) else {
        out.push(SkewTableau { inner: inner.clone(), grid: grid.clone() });
        return;
    };
    let (r, c) = (cell.row - 1, cell.col - 1);
    let left = if c > 0 { grid[r][c - 1] } else { None };
    let above = if r > 0 { grid[r - 1][c] } else { None };
    let floor = if king { Some(Letter::unbarred(cell.row as u16)) } else { None };
    for &x in letters {
        if left.is_some_and(|l| x < l) || above.is_some_and(|a| x <= a) || floor.is_some_and(|f| x < f) {
            continue;
        }
        grid[r][c] = Some(x);
        fill_rec(cells, at + 1, grid, letters, king, inner, out);
    }
    grid[r][c] = None;
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn p(rows: &[usize]) -> Partition {
        Partition::from_padded(rows.to_vec()).unwrap()
    }

    #[test]
    fn ssyt_counts() {
        assert_eq!(enumerate_ssyt(Alphabet::Plain(3), &p(&[2, 1])).len(), 8);
        assert!(enumerate_ssyt(Alphabet::Plain(1), &p(&[1, 1])).is_empty());
        assert_eq!(enumerate_ssyt(Alphabet::Plain(2), &p(&[1])).len(), 2);
        assert_eq!(enumerate_ssyt(Alphabet::Plain(2), &Partition::empty()).len(), 1);
    }

    #[test]
    fn kt_counts() {
        assert_eq!(enumerate_kt(2, &p(&[1])).len(), 4);
        assert_eq!(enumerate_kt(2, &p(&[1, 1])).len(), 5);
        assert!(enumerate_kt(1, &p(&[1, 1])).is_empty());
    }

    #[test]
    fn enumeration_is_sorted_and_valid() {
        for shape in Partition::all_up_to_size(4, 4) {
            let ssyt = enumerate_ssyt(Alphabet::Barred(2), &shape);
            assert!(ssyt.windows(2).all(|w| w[0] < w[1]));
            assert!(ssyt.iter().all(|t| t.is_semistandard() && t.shape() == shape));
            let kt = enumerate_kt(2, &shape);
            assert!(kt.iter().all(|t| t.is_king()));
        }
    }

    #[test]
    fn king_tableaux_are_the_symplectic_ssyt() {
        for shape in Partition::all_up_to_size(4, 4) {
            let kt: HashSet<Tableau<Letter>> = enumerate_kt(2, &shape).into_iter().map(KingTableau::into_tableau).collect();
            for t in enumerate_ssyt(Alphabet::Barred(2), &shape) {
                assert_eq!(kt.contains(&t), t.satisfies_symplectic_condition(), "{t}");
            }
            assert!(kt.iter().all(|t| t.shape() == shape));
        }
    }

    #[test]
    fn row_word_is_injective() {
        for shape in Partition::all_up_to_size(5, 5) {
            let all = enumerate_ssyt(Alphabet::Barred(2), &shape);
            let words: HashSet<_> = all.iter().map(|t| t.row_word()).collect();
            assert_eq!(words.len(), all.len());
        }
    }

    #[test]
    fn skew_enumeration() {
        let fillings = enumerate_skew(&p(&[1]), &p(&[2, 1]), &Letter::alphabet_plain(2).collect::<Vec<_>>());
        // two isolated boxes over {1,2}
        assert_eq!(fillings.len(), 4);
        assert!(fillings.iter().all(SkewTableau::is_semistandard));
    }
}
