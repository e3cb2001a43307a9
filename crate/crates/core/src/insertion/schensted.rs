use crate::partition::Cell;
use crate::tableau::Tableau;

/// Schensted row insertion `T ← x`.
///
/// Returns the new tableau and the cell that was added to the shape.
pub fn row_insert<E: Copy + Ord>(t: &Tableau<E>, x: E) -> (Tableau<E>, Cell) {
    let mut out = t.clone();
    let cell = bump_from_row(out.rows_mut(), 0, x);
    (out, cell)
}

/// Inserts `x` into row `start` (0-based) and bumps downward. Returns the new cell.
pub(crate) fn bump_from_row<E: Copy + Ord>(rows: &mut Vec<Vec<E>>, start: usize, mut x: E) -> Cell {
    for r in start.. {
        if r == rows.len() {
            rows.push(vec![x]);
            return Cell::new(r + 1, 1);
        }
        let row = &mut rows[r];
        // first entry strictly larger than x
        let p = row.partition_point(|&e| e <= x);
        if p == row.len() {
            row.push(x);
            return Cell::new(r + 1, p + 1);
        }
        x = std::mem::replace(&mut row[p], x);
    }
    unreachable!()
}

/// Reverse bumping out of `rows`, starting with `y` pushed into row `from`
/// (0-based) and moving upward. Returns the letter evicted from row 1, or
/// `None` if some row has no entry smaller than the incoming one.
pub(crate) fn reverse_bump_from_row<E: Copy + Ord>(rows: &mut [Vec<E>], from: usize, mut y: E) -> Option<E> {
    for r in (0..from).rev() {
        let row = &mut rows[r];
        // rightmost entry strictly smaller than y
        let p = row.partition_point(|&e| e < y);
        if p == 0 {
            return None;
        }
        y = std::mem::replace(&mut row[p - 1], y);
    }
    Some(y)
}

/// Inverse of [`row_insert`]: removes the corner `cell` and reverse-bumps
/// its entry out of the first row.
///
/// Returns `None` when `cell` is not a removable corner.
pub fn reverse_bump<E: Copy + Ord>(t: &Tableau<E>, cell: Cell) -> Option<(Tableau<E>, E)> {
    if !t.shape().removable_cells().contains(&cell) {
        return None;
    }
    let mut out = t.clone();
    let y = out.pop_at(cell);
    let x = reverse_bump_from_row(out.rows_mut(), cell.row - 1, y)?;
    Some((out, x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::{enumerate_ssyt, Alphabet};
    use crate::letter::Letter;
    use crate::partition::Partition;

    fn t(rows: &[Vec<i64>]) -> Tableau<Letter> {
        Tableau::from_signed(rows).unwrap()
    }

    #[test]
    fn insertion_example() {
        let before = t(&[vec![1, 1, 3, 4], vec![2, 5], vec![4]]);
        let (after, cell) = row_insert(&before, Letter::unbarred(2));
        assert_eq!(after, t(&[vec![1, 1, 2, 4], vec![2, 3], vec![4, 5]]));
        assert_eq!(cell, Cell::new(3, 2));
    }

    #[test]
    fn insertion_trivial_cases() {
        let x = Letter::barred(3);
        let (one, cell) = row_insert(&Tableau::empty(), x);
        assert_eq!(one, Tableau::from_rows(vec![vec![x]]).unwrap());
        assert_eq!(cell, Cell::new(1, 1));
        let (appended, cell) = row_insert(&t(&[vec![1, 2]]), Letter::unbarred(3));
        assert_eq!(appended, t(&[vec![1, 2, 3]]));
        assert_eq!(cell, Cell::new(1, 3));
    }

    #[test]
    fn reverse_bump_inverts_insertion() {
        let letters: Vec<Letter> = Letter::alphabet_barred(2).collect();
        for shape in Partition::all_up_to_size(4, 4) {
            for tab in enumerate_ssyt(Alphabet::Barred(2), &shape) {
                for &x in &letters {
                    let (after, cell) = row_insert(&tab, x);
                    assert!(after.is_semistandard());
                    assert_eq!(after.size(), tab.size() + 1);
                    assert_eq!(reverse_bump(&after, cell), Some((tab.clone(), x)));
                }
            }
        }
    }

    #[test]
    fn reverse_bump_rejects_non_corner() {
        let tab = t(&[vec![1, 2], vec![3]]);
        assert!(reverse_bump(&tab, Cell::new(1, 1)).is_none());
    }
}
