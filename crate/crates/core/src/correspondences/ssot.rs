use std::collections::BTreeSet;

use serde::{Deserialize, Deserializer, Serialize};

use super::oscillating::{distance, OscillatingTableau};
use crate::error::Error;
use crate::insertion::StepRecord;
use crate::partition::{Cell, Partition};
use crate::tableau::Tableau;

/// A semistandard oscillating tableau in compact form.
///
/// Each box of the union of all shapes holds the sorted multiset of step
/// numbers that touched it. Step `s` first deletes a horizontal strip, then
/// adds one; a box is present before step `s` iff an odd number of its
/// entries are `< s`, and a box holding `s` twice is deleted and re-added.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Ssot {
    final_shape: Partition,
    grid: Vec<Vec<Vec<u32>>>,
}

/// The shapes around one step: before it, after its deletions, after its
/// additions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SsotStep {
    pub step: u32,
    pub before: Partition,
    pub after_deletion: Partition,
    pub after_addition: Partition,
}

impl Ssot {
    pub fn empty() -> Ssot {
        Ssot { final_shape: Partition::empty(), grid: Vec::new() }
    }

    /// Validates the grid against the step rules and the final shape.
    pub fn new(final_shape: Partition, mut grid: Vec<Vec<Vec<u32>>>) -> Result<Ssot, Error> {
        let lens: Vec<usize> = grid.iter().map(Vec::len).collect();
        Partition::new(lens).map_err(|_| Error::InvalidSsot("grid rows do not form a partition".into()))?;
        for cell in grid.iter_mut().flatten() {
            if cell.is_empty() || cell.contains(&0) {
                return Err(Error::InvalidSsot("every box needs positive step numbers".into()));
            }
            cell.sort_unstable();
        }
        let s = Ssot { final_shape, grid };
        let steps = s.replay()?;
        let end = steps.last().map_or_else(Partition::empty, |st| st.after_addition.clone());
        if end != s.final_shape {
            return Err(Error::InvalidSsot(format!("steps end at {end}, not at {}", s.final_shape)));
        }
        Ok(s)
    }

    /// A semistandard tableau over positive integers is an SSOT whose steps
    /// only add boxes.
    pub fn from_ssyt(t: &Tableau<u32>) -> Result<Ssot, Error> {
        if !t.is_semistandard() {
            return Err(Error::NotSemistandard);
        }
        let grid = t.rows().iter().map(|row| row.iter().map(|&v| vec![v]).collect()).collect();
        Ssot::new(t.shape(), grid)
    }

    /// Writes each label into the box its record touched. The records must
    /// come from a valid run.
    pub(crate) fn from_recorded_steps(final_shape: Partition, steps: &[(u32, StepRecord)]) -> Ssot {
        let mut grid: Vec<Vec<Vec<u32>>> = Vec::new();
        for &(u, step) in steps {
            let (r, c) = (step.cell.row - 1, step.cell.col - 1);
            if r == grid.len() {
                grid.push(Vec::new());
            }
            if c == grid[r].len() {
                grid[r].push(Vec::new());
            }
            grid[r][c].push(u);
        }
        for cell in grid.iter_mut().flatten() {
            cell.sort_unstable();
        }
        Ssot { final_shape, grid }
    }

    pub fn final_shape(&self) -> &Partition {
        &self.final_shape
    }

    pub fn grid(&self) -> &[Vec<Vec<u32>>] {
        &self.grid
    }

    pub fn get(&self, cell: Cell) -> Option<&[u32]> {
        self.grid.get(cell.row - 1)?.get(cell.col - 1).map(Vec::as_slice)
    }

    /// Length `n`: the total number of entries.
    pub fn len(&self) -> usize {
        self.grid.iter().flatten().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// All entries in weakly increasing order.
    pub fn content(&self) -> Vec<u32> {
        let mut all: Vec<u32> = self.grid.iter().flatten().flatten().copied().collect();
        all.sort_unstable();
        all
    }

    /// Number of entries equal to `i`.
    pub fn count(&self, i: u32) -> usize {
        self.grid.iter().flatten().flatten().filter(|&&v| v == i).count()
    }

    pub fn max_entry(&self) -> u32 {
        self.grid.iter().flatten().flatten().copied().max().unwrap_or(0)
    }

    /// Largest number of rows of any intermediate shape.
    pub fn max_rows(&self) -> usize {
        self.grid.len()
    }

    /// Whether this is a `k`-SSOT: steps numbered at most `k` and shapes
    /// with at most `k` rows.
    pub fn fits(&self, k: u32) -> bool {
        self.max_entry() <= k && self.max_rows() <= k as usize
    }

    /// Shapes around every step `1..=max_entry`.
    pub fn steps(&self) -> Vec<SsotStep> {
        self.replay().expect("validated on construction")
    }

    /// The single-box moves in canonical order: within a step, deletions
    /// right to left, then additions left to right.
    pub fn substeps(&self) -> Vec<(u32, StepRecord)> {
        let mut out = Vec::with_capacity(self.len());
        for st in self.steps() {
            let mut deleted: Vec<Cell> = st.before.skew_cells(&st.after_deletion).collect();
            deleted.sort_by_key(|c| std::cmp::Reverse(c.col));
            let mut added: Vec<Cell> = st.after_addition.skew_cells(&st.after_deletion).collect();
            added.sort_by_key(|c| c.col);
            out.extend(deleted.into_iter().map(|c| (st.step, StepRecord::deleted(c))));
            out.extend(added.into_iter().map(|c| (st.step, StepRecord::added(c))));
        }
        out
    }

    /// Replaces the `j`-th entry in canonical order by `j`.
    pub fn standardize(&self) -> OscillatingTableau {
        let records: Vec<StepRecord> = self.substeps().into_iter().map(|(_, r)| r).collect();
        OscillatingTableau::from_steps(&records).expect("substeps of a valid SSOT")
    }

    /// The semistandard tableau of maxima on the final shape.
    pub fn reduce(&self) -> Tableau<u32> {
        let rows = self
            .final_shape
            .rows()
            .iter()
            .enumerate()
            .map(|(r, &len)| (0..len).map(|c| *self.grid[r][c].last().expect("non-empty box")).collect())
            .collect();
        Tableau::from_rows_unchecked(rows)
    }

    fn replay(&self) -> Result<Vec<SsotStep>, Error> {
        let mut shape = Partition::empty();
        let mut present: BTreeSet<Cell> = BTreeSet::new();
        let mut out = Vec::new();
        for s in 1..=self.max_entry() {
            let before = shape.clone();
            let mut deletions = Vec::new();
            let mut additions = Vec::new();
            for (r, row) in self.grid.iter().enumerate() {
                for (c, entries) in row.iter().enumerate() {
                    let cell = Cell::new(r + 1, c + 1);
                    let times = entries.iter().filter(|&&v| v == s).count();
                    let here = present.contains(&cell);
                    match (times, here) {
                        (0, _) => {}
                        (1, true) => deletions.push(cell),
                        (1, false) => additions.push(cell),
                        (2, true) => {
                            deletions.push(cell);
                            additions.push(cell);
                        }
                        _ => return Err(Error::InvalidSsot(format!("box {cell} cannot take step {s} {times} times"))),
                    }
                }
            }
            deletions.sort_by_key(|c| std::cmp::Reverse(c.col));
            for &cell in &deletions {
                shape = shape
                    .with_cell_removed(cell)
                    .ok_or_else(|| Error::InvalidSsot(format!("step {s} deletes {cell}, not a corner")))?;
                present.remove(&cell);
            }
            let after_deletion = shape.clone();
            if !deletions.is_empty() && !crate::partition::is_horizontal_strip(&after_deletion, &before) {
                return Err(Error::InvalidSsot(format!("step {s} deletes more than one box in a column")));
            }
            additions.sort_by_key(|c| c.col);
            for &cell in &additions {
                shape = shape
                    .with_cell_added(cell)
                    .ok_or_else(|| Error::InvalidSsot(format!("step {s} adds {cell}, not addable")))?;
                present.insert(cell);
            }
            if !crate::partition::is_horizontal_strip(&after_deletion, &shape) {
                return Err(Error::InvalidSsot(format!("step {s} adds more than one box in a column")));
            }
            out.push(SsotStep { step: s, before, after_deletion, after_addition: shape.clone() });
        }
        Ok(out)
    }
}

#[derive(Deserialize)]
struct SsotRepr {
    final_shape: Partition,
    grid: Vec<Vec<Vec<u32>>>,
}

impl<'de> Deserialize<'de> for Ssot {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = SsotRepr::deserialize(deserializer)?;
        Ssot::new(repr.final_shape, repr.grid).map_err(serde::de::Error::custom)
    }
}

/// All `k`-SSOTs of length `n` and final shape `shape`, sorted.
///
/// Empty unless `n ≥ |shape|` and `n ≡ |shape| (mod 2)`.
pub fn enumerate_ssot(k: u32, n: usize, shape: &Partition) -> Vec<Ssot> {
    struct Search<'a> {
        k: u32,
        target: &'a Partition,
        grid: Vec<Vec<Vec<u32>>>,
        out: Vec<Ssot>,
    }

    impl Search<'_> {
        fn go(&mut self, step: u32, current: &Partition, remaining: usize) {
            if step > self.k {
                if remaining == 0 && current == self.target {
                    let grid = self.grid.iter().filter(|row| !row.is_empty()).cloned().collect();
                    self.out.push(Ssot { final_shape: self.target.clone(), grid });
                }
                return;
            }
            for removed in current.horizontal_strip_removals() {
                let deleted = current.size() - removed.size();
                if deleted > remaining {
                    continue;
                }
                for added in removed.horizontal_strip_additions(remaining - deleted) {
                    if added.len() > self.k as usize {
                        continue;
                    }
                    let used = deleted + added.size() - removed.size();
                    if distance(&added, self.target) > remaining - used {
                        continue;
                    }
                    let touched: Vec<Cell> = current.skew_cells(&removed).chain(added.skew_cells(&removed)).collect();
                    for &c in &touched {
                        self.push(c, step);
                    }
                    self.go(step + 1, &added, remaining - used);
                    for &c in touched.iter().rev() {
                        self.pop(c);
                    }
                }
            }
        }

        fn push(&mut self, cell: Cell, step: u32) {
            let (r, c) = (cell.row - 1, cell.col - 1);
            while self.grid.len() <= r {
                self.grid.push(Vec::new());
            }
            if self.grid[r].len() == c {
                self.grid[r].push(Vec::new());
            }
            self.grid[r][c].push(step);
        }

        fn pop(&mut self, cell: Cell) {
            let (r, c) = (cell.row - 1, cell.col - 1);
            let entries = &mut self.grid[r][c];
            entries.pop();
            if entries.is_empty() {
                self.grid[r].pop();
            }
        }
    }

    if shape.len() > k as usize || n < shape.size() || (n - shape.size()) % 2 != 0 {
        return Vec::new();
    }
    let mut search = Search { k, target: shape, grid: Vec::new(), out: Vec::new() };
    search.go(1, &Partition::empty(), n);
    search.out.sort();
    search.out
}
