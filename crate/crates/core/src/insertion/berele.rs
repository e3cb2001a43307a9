//! Berele insertion on King tableaux and its inverse.

use serde::{Deserialize, Serialize};

use super::jdt::{from_grid, jdt_rectify, slide_out, to_grid};
use super::schensted::{reverse_bump_from_row, row_insert};
use crate::error::Error;
use crate::letter::Letter;
use crate::partition::{Cell, Partition};
use crate::tableau::{KingTableau, SkewTableau, Tableau};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StepKind {
    Added,
    Deleted,
}

/// How one insertion changed the shape: the box added, or the box removed
/// from the pre-insertion shape.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct StepRecord {
    pub kind: StepKind,
    pub cell: Cell,
}

impl StepRecord {
    pub fn added(cell: Cell) -> StepRecord {
        StepRecord { kind: StepKind::Added, cell }
    }

    pub fn deleted(cell: Cell) -> StepRecord {
        StepRecord { kind: StepKind::Deleted, cell }
    }

    pub fn is_deletion(&self) -> bool {
        self.kind == StepKind::Deleted
    }
}

/// Berele insertion `T ←_C x`.
///
/// Schensted bumping, except when the unbarred letter `i` arrives in row `i`
/// and that row holds an `ī`: then the first `ī` becomes `i`, the first `i`
/// (always in column 1) becomes a hole, and the hole is slid out by jeu de
/// taquin and deleted.
pub fn berele_insert(t: &KingTableau, x: Letter) -> (KingTableau, StepRecord) {
    let mut rows = t.rows().to_vec();
    let mut incoming = x;
    for r in 0.. {
        let i = r as u16 + 1;
        if r == rows.len() {
            rows.push(vec![incoming]);
            return (KingTableau::new_unchecked(Tableau::from_rows_unchecked(rows)), StepRecord::added(Cell::new(r + 1, 1)));
        }
        let row = &mut rows[r];
        if incoming == Letter::unbarred(i) {
            if let Some(p) = row.iter().position(|&e| e == Letter::barred(i)) {
                row[p] = Letter::unbarred(i);
                // row i holds only letters >= i, so its i's start the row
                debug_assert_eq!(row[0], Letter::unbarred(i));
                let mut grid = to_grid(&rows);
                grid[r][0] = None;
                let cell = slide_out(&mut grid, Cell::new(r + 1, 1));
                let out = Tableau::from_rows_unchecked(from_grid(grid));
                return (KingTableau::new_unchecked(out), StepRecord::deleted(cell));
            }
        }
        let p = row.partition_point(|&e| e <= incoming);
        if p == row.len() {
            row.push(incoming);
            return (KingTableau::new_unchecked(Tableau::from_rows_unchecked(rows)), StepRecord::added(Cell::new(r + 1, p + 1)));
        }
        incoming = std::mem::replace(&mut row[p], incoming);
    }
    unreachable!()
}

/// Berele insertion computed through type-A insertion: insert as in type A;
/// if the result breaks the symplectic condition, blank the offending
/// `i` over `ī` domino in column 1 and rectify everything from row `i` down.
pub fn berele_insert_via_type_a(t: &KingTableau, x: Letter) -> (KingTableau, StepRecord) {
    let (typed, cell) = row_insert(t.as_tableau(), x);
    if typed.satisfies_symplectic_condition() {
        return (KingTableau::new_unchecked(typed), StepRecord::added(cell));
    }
    let rows = typed.rows();
    let violation = (1..rows.len())
        .find(|&r| rows[r][0] < Letter::unbarred(r as u16 + 1))
        .expect("some row violates the symplectic condition");
    // 0-based row of the unbarred i
    let top = violation - 1;
    let i = top as u16 + 1;
    assert_eq!(rows[top][0], Letter::unbarred(i), "expected i above ī in column 1");
    assert_eq!(rows[violation][0], Letter::barred(i), "expected i above ī in column 1");

    let lower: Vec<Vec<Letter>> = rows[top..]
        .iter()
        .enumerate()
        .map(|(j, row)| if j < 2 { row[1..].to_vec() } else { row.clone() })
        .collect();
    let skew = SkewTableau::new(Partition::new(vec![1, 1]).expect("partition"), lower).expect("skew shape");
    let rect = jdt_rectify(&skew);

    let mut out_rows: Vec<Vec<Letter>> = rows[..top].to_vec();
    out_rows.extend(rect.into_rows());
    let out = Tableau::from_rows(out_rows).expect("rectified rows fit under the rows above");

    let before = t.shape();
    let after = out.shape();
    let deleted = before.cells().find(|&c| !after.contains_cell(c)).expect("one box was deleted");
    debug_assert_eq!(after.size() + 1, before.size());
    (KingTableau::new(out).expect("Berele output is King"), StepRecord::deleted(deleted))
}

/// Inverse of one Berele insertion: the unique `(T, x)` with
/// `berele_insert(T, x) == (t2, step)`.
pub fn berele_reverse(t2: &KingTableau, step: StepRecord) -> Result<(KingTableau, Letter), Error> {
    let shape = t2.shape();
    let (rows, x) = match step.kind {
        StepKind::Added => {
            if !shape.removable_cells().contains(&step.cell) {
                return Err(Error::InvalidBereleStep);
            }
            let mut rows = t2.rows().to_vec();
            let cell = step.cell;
            let y = rows[cell.row - 1].pop().expect("corner present");
            if rows[cell.row - 1].is_empty() {
                rows.pop();
            }
            let x = reverse_bump_from_row(&mut rows, cell.row - 1, y).ok_or(Error::InvalidBereleStep)?;
            (rows, x)
        }
        StepKind::Deleted => {
            if !shape.addable_cells().contains(&step.cell) {
                return Err(Error::InvalidBereleStep);
            }
            uncancel(t2, step.cell)?
        }
    };
    let t = Tableau::from_rows(rows).map_err(|_| Error::InvalidBereleStep)?;
    let t = KingTableau::new(t).map_err(|_| Error::InvalidBereleStep)?;
    if berele_insert(&t, x) != (t2.clone(), step) {
        return Err(Error::InvalidBereleStep);
    }
    Ok((t, x))
}

/// Undo a deletion: put a hole back at `cell`, slide it up/left until it
/// reaches the column-1 cell where the cancellation happened, restore the
/// cancelled `i ī` pair there and reverse-bump `i` out of the rows above.
fn uncancel(t2: &KingTableau, cell: Cell) -> Result<(Vec<Vec<Letter>>, Letter), Error> {
    let mut grid = to_grid(t2.rows());
    if cell.row > grid.len() {
        grid.push(Vec::new());
    }
    grid[cell.row - 1].push(None);

    let (mut r, mut c) = (cell.row - 1, cell.col - 1);
    loop {
        if c == 0 {
            // The cancellation happened in this row iff the row above holds
            // a letter smaller than this row's index (or there is no row
            // above); otherwise the hole came down column 1.
            let above = if r == 0 { None } else { grid[r - 1][0] };
            match above {
                None => break,
                Some(a) if a < Letter::unbarred(r as u16 + 1) => break,
                Some(_) => {
                    grid[r][0] = grid[r - 1][0].take();
                    r -= 1;
                    continue;
                }
            }
        }
        let left = grid[r][c - 1].expect("filled");
        let above = if r > 0 { grid[r - 1][c] } else { None };
        match above {
            Some(a) if a >= left => {
                grid[r][c] = grid[r - 1][c].take();
                r -= 1;
            }
            _ => {
                grid[r][c] = grid[r][c - 1].take();
                c -= 1;
            }
        }
    }

    let i = r as u16 + 1;
    let plain = Letter::unbarred(i);
    grid[r][0] = Some(plain);
    let mut rows = from_grid(grid);
    let last_i = rows[r].iter().rposition(|&e| e == plain).expect("row starts with i");
    rows[r][last_i] = Letter::barred(i);
    let x = reverse_bump_from_row(&mut rows, r, plain).ok_or(Error::InvalidBereleStep)?;
    Ok((rows, x))
}

/// Inserts a whole word, returning every intermediate tableau and step.
pub fn berele_insert_word(word: &[Letter]) -> Vec<(KingTableau, StepRecord)> {
    let mut t = KingTableau::empty();
    word.iter()
        .map(|&x| {
            let (next, step) = berele_insert(&t, x);
            t = next.clone();
            (next, step)
        })
        .collect()
}
