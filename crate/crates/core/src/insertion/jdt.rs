//! Slides on punctured tableaux and jeu-de-taquin rectification.

use std::collections::{BTreeSet, HashMap};
use std::hash::Hash;

use crate::error::Error;
use crate::partition::{Cell, Partition};
use crate::tableau::{SkewTableau, Tableau};

type Grid<E> = Vec<Vec<Option<E>>>;

/// A skew tableau with exactly one designated empty box.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PuncturedTableau<E> {
    inner: Partition,
    grid: Grid<E>,
    hole: Cell,
}

impl<E: Copy + Ord> PuncturedTableau<E> {
    /// Blanks `hole`, which must be a cell of `t`.
    pub fn from_tableau(t: &Tableau<E>, hole: Cell) -> Option<PuncturedTableau<E>> {
        t.get(hole)?;
        let mut grid: Grid<E> = t.rows().iter().map(|row| row.iter().map(|&e| Some(e)).collect()).collect();
        grid[hole.row - 1][hole.col - 1] = None;
        Some(PuncturedTableau { inner: Partition::empty(), grid, hole })
    }

    /// Turns a removable cell of the inner shape of `s` into the puncture.
    pub fn from_skew(s: &SkewTableau<E>, hole: Cell) -> Option<PuncturedTableau<E>> {
        let inner = s.inner().with_cell_removed(hole)?;
        Some(PuncturedTableau { inner, grid: s.grid.clone(), hole })
    }

    pub fn hole(&self) -> Cell {
        self.hole
    }

    pub fn get(&self, cell: Cell) -> Option<E> {
        self.grid.get(cell.row - 1)?.get(cell.col - 1).copied().flatten()
    }

    /// No box below or to the right of the puncture.
    pub fn is_at_outer_corner(&self) -> bool {
        next_hole(&self.grid, self.hole).is_none()
    }

    /// Forgets the puncture once it sits at an outer corner.
    pub fn remove_hole(&self) -> Result<SkewTableau<E>, Error> {
        if !self.is_at_outer_corner() {
            return Err(Error::PunctureAtCorner);
        }
        let mut grid = self.grid.clone();
        remove_cell(&mut grid, self.hole);
        Ok(SkewTableau { inner: self.inner.clone(), grid })
    }

    /// Filled part is semistandard.
    pub fn is_semistandard(&self) -> bool {
        SkewTableau { inner: Partition::empty(), grid: self.grid.clone() }.is_semistandard()
    }
}

/// One slide: the puncture trades places with the smaller of its lower and
/// right neighbours, preferring the lower one on ties.
pub fn forward_slide<E: Copy + Ord>(p: &PuncturedTableau<E>) -> Result<PuncturedTableau<E>, Error> {
    let mut out = p.clone();
    let next = next_hole(&out.grid, out.hole).ok_or(Error::PunctureAtCorner)?;
    move_into_hole(&mut out.grid, out.hole, next);
    out.hole = next;
    Ok(out)
}

fn filled<E: Copy>(grid: &Grid<E>, r: usize, c: usize) -> Option<E> {
    grid.get(r)?.get(c).copied().flatten()
}

/// Where the puncture at `hole` moves next, or `None` at an outer corner.
fn next_hole<E: Copy + Ord>(grid: &Grid<E>, hole: Cell) -> Option<Cell> {
    let (r, c) = (hole.row - 1, hole.col - 1);
    let below = filled(grid, r + 1, c);
    let right = filled(grid, r, c + 1);
    match (below, right) {
        (None, None) => None,
        (Some(_), None) => Some(Cell::new(hole.row + 1, hole.col)),
        (None, Some(_)) => Some(Cell::new(hole.row, hole.col + 1)),
        (Some(x), Some(y)) if x <= y => Some(Cell::new(hole.row + 1, hole.col)),
        (Some(_), Some(_)) => Some(Cell::new(hole.row, hole.col + 1)),
    }
}

fn move_into_hole<E: Copy>(grid: &mut Grid<E>, hole: Cell, from: Cell) {
    let v = grid[from.row - 1][from.col - 1].take();
    grid[hole.row - 1][hole.col - 1] = v;
}

fn remove_cell<E>(grid: &mut Grid<E>, cell: Cell) {
    let row = &mut grid[cell.row - 1];
    debug_assert_eq!(row.len(), cell.col);
    row.pop();
    if row.is_empty() {
        debug_assert_eq!(cell.row, grid.len());
        grid.pop();
    }
}

/// Slides the puncture at `hole` to an outer corner and deletes it.
/// Returns the deleted cell.
pub(crate) fn slide_out<E: Copy + Ord>(grid: &mut Grid<E>, mut hole: Cell) -> Cell {
    while let Some(next) = next_hole(grid, hole) {
        move_into_hole(grid, hole, next);
        hole = next;
    }
    remove_cell(grid, hole);
    hole
}

pub(crate) fn to_grid<E: Copy>(rows: &[Vec<E>]) -> Grid<E> {
    rows.iter().map(|row| row.iter().map(|&e| Some(e)).collect()).collect()
}

pub(crate) fn from_grid<E: Copy>(grid: Grid<E>) -> Vec<Vec<E>> {
    grid.into_iter().map(|row| row.into_iter().map(|e| e.expect("filled cell")).collect()).collect()
}

/// Rectification of `s`, always sliding into the lowest inner corner.
pub fn jdt_rectify<E: Copy + Ord>(s: &SkewTableau<E>) -> Tableau<E> {
    jdt_rectify_with(s, |corners| corners.len() - 1)
}

/// Rectification of `s` where `choose` picks which inner corner (by index
/// into the slice it is given) to slide into at each step.
pub fn jdt_rectify_with<E: Copy + Ord>(s: &SkewTableau<E>, mut choose: impl FnMut(&[Cell]) -> usize) -> Tableau<E> {
    let mut inner = s.inner().clone();
    let mut grid = s.grid.clone();
    while !inner.is_empty() {
        let corners = inner.removable_cells();
        let pick = corners[choose(&corners)];
        inner = inner.with_cell_removed(pick).expect("removable corner");
        slide_out(&mut grid, pick);
    }
    Tableau::from_rows_unchecked(from_grid(grid))
}

/// Every rectification reachable by some order of inner corners. A single
/// element means the order does not matter for `s`.
pub fn jdt_rectifications<E: Copy + Ord + Hash>(s: &SkewTableau<E>) -> BTreeSet<Tableau<E>> {
    fn go<E: Copy + Ord + Hash>(
        inner: Partition,
        grid: Grid<E>,
        memo: &mut HashMap<(Partition, Grid<E>), BTreeSet<Tableau<E>>>,
    ) -> BTreeSet<Tableau<E>> {
        if inner.is_empty() {
            return BTreeSet::from([Tableau::from_rows_unchecked(from_grid(grid))]);
        }
        let key = (inner, grid);
        if let Some(done) = memo.get(&key) {
            return done.clone();
        }
        let (inner, grid) = &key;
        let mut out = BTreeSet::new();
        for corner in inner.removable_cells() {
            let mut next = grid.clone();
            slide_out(&mut next, corner);
            out.extend(go(inner.with_cell_removed(corner).expect("removable corner"), next, memo));
        }
        memo.insert(key, out.clone());
        out
    }
    go(s.inner().clone(), s.grid.clone(), &mut HashMap::new())
}
