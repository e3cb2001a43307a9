use serde::{Deserialize, Deserializer, Serialize};

use super::ssot::Ssot;
use crate::error::Error;
use crate::insertion::StepRecord;
use crate::partition::Partition;

/// Shapes `∅ = λ₀, λ₁, …, λ_n`, consecutive ones differing by one box.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct OscillatingTableau {
    shapes: Vec<Partition>,
}

impl OscillatingTableau {
    pub fn new(shapes: Vec<Partition>) -> Result<OscillatingTableau, Error> {
        match shapes.first() {
            Some(first) if first.is_empty() => {}
            _ => return Err(Error::InvalidOscillating("must start at the empty partition".into())),
        }
        for (j, w) in shapes.windows(2).enumerate() {
            if !(w[0].is_covered_by(&w[1]) || w[1].is_covered_by(&w[0])) {
                return Err(Error::InvalidOscillating(format!("shapes {j} and {} differ by more than one box", j + 1)));
            }
        }
        Ok(OscillatingTableau { shapes })
    }

    /// Builds the shape sequence from a start at `∅` and a list of steps.
    pub fn from_steps(steps: &[StepRecord]) -> Result<OscillatingTableau, Error> {
        let mut shapes = vec![Partition::empty()];
        for step in steps {
            let last = shapes.last().expect("non-empty");
            let next = if step.is_deletion() { last.with_cell_removed(step.cell) } else { last.with_cell_added(step.cell) };
            shapes.push(next.ok_or_else(|| Error::InvalidOscillating(format!("step {step:?} does not apply")))?);
        }
        Ok(OscillatingTableau { shapes })
    }

    pub fn shapes(&self) -> &[Partition] {
        &self.shapes
    }

    /// Number of steps `n`.
    pub fn len(&self) -> usize {
        self.shapes.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn final_shape(&self) -> &Partition {
        self.shapes.last().expect("non-empty")
    }

    /// Largest number of rows among the shapes.
    pub fn max_rows(&self) -> usize {
        self.shapes.iter().map(Partition::len).max().unwrap_or(0)
    }

    /// The added or deleted box of each step.
    pub fn steps(&self) -> Vec<StepRecord> {
        self.shapes
            .windows(2)
            .map(|w| {
                if w[0].is_covered_by(&w[1]) {
                    StepRecord::added(w[1].skew_cells(&w[0]).next().expect("one new box"))
                } else {
                    StepRecord::deleted(w[0].skew_cells(&w[1]).next().expect("one removed box"))
                }
            })
            .collect()
    }

    /// The compact form: step `j` written into the box it touched.
    pub fn to_compact(&self) -> Ssot {
        let steps: Vec<(u32, StepRecord)> = self.steps().into_iter().enumerate().map(|(j, s)| (j as u32 + 1, s)).collect();
        Ssot::from_recorded_steps(self.final_shape().clone(), &steps)
    }
}

#[derive(Deserialize)]
struct OtRepr {
    shapes: Vec<Partition>,
}

impl<'de> Deserialize<'de> for OscillatingTableau {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = OtRepr::deserialize(deserializer)?;
        OscillatingTableau::new(repr.shapes).map_err(serde::de::Error::custom)
    }
}

/// All oscillating tableaux of length `n` ending at `shape` whose shapes
/// have at most `k` rows.
pub fn enumerate_ot(k: usize, n: usize, shape: &Partition) -> Vec<OscillatingTableau> {
    fn go(k: usize, remaining: usize, target: &Partition, path: &mut Vec<Partition>, out: &mut Vec<OscillatingTableau>) {
        let current = path.last().expect("non-empty").clone();
        if remaining == 0 {
            if &current == target {
                out.push(OscillatingTableau { shapes: path.clone() });
            }
            return;
        }
        if distance(&current, target) > remaining {
            return;
        }
        let mut nexts: Vec<Partition> = current.removable_cells().into_iter().filter_map(|c| current.with_cell_removed(c)).collect();
        nexts.extend(current.addable_cells().into_iter().filter_map(|c| current.with_cell_added(c)).filter(|p| p.len() <= k));
        for next in nexts {
            path.push(next);
            go(k, remaining - 1, target, path, out);
            path.pop();
        }
    }
    let mut out = Vec::new();
    if shape.len() <= k && n >= shape.size() && (n - shape.size()) % 2 == 0 {
        go(k, n, shape, &mut vec![Partition::empty()], &mut out);
    }
    out.sort();
    out
}

/// Number of boxes in the symmetric difference.
pub(crate) fn distance(a: &Partition, b: &Partition) -> usize {
    let rows = a.len().max(b.len());
    (1..=rows).map(|r| a.row_len(r).abs_diff(b.row_len(r))).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(rows: &[usize]) -> Partition {
        Partition::from_padded(rows.to_vec()).unwrap()
    }

    #[test]
    fn validation() {
        assert!(OscillatingTableau::new(vec![p(&[]), p(&[1]), p(&[1, 1])]).is_ok());
        assert!(OscillatingTableau::new(vec![p(&[1])]).is_err());
        assert!(OscillatingTableau::new(vec![p(&[]), p(&[2])]).is_err());
        assert!(OscillatingTableau::new(vec![p(&[]), p(&[1]), p(&[2]), p(&[1, 1])]).is_err());
    }

    /// Brute force: all sequences of partitions of bounded size.
    fn brute_force_count(k: usize, n: usize, shape: &Partition) -> usize {
        let all = Partition::all_up_to_size(n, k);
        let mut paths: Vec<Vec<Partition>> = vec![vec![Partition::empty()]];
        for _ in 0..n {
            paths = paths
                .into_iter()
                .flat_map(|path| {
                    let last = path.last().unwrap().clone();
                    all.iter()
                        .filter(move |q| last.is_covered_by(q) || q.is_covered_by(&last))
                        .map(move |q| {
                            let mut next = path.clone();
                            next.push(q.clone());
                            next
                        })
                        .collect::<Vec<_>>()
                })
                .collect();
        }
        paths.iter().filter(|path| path.last() == Some(shape)).count()
    }

    #[test]
    fn counts_match_brute_force() {
        assert_eq!(enumerate_ot(3, 0, &Partition::empty()).len(), 1);
        assert_eq!(enumerate_ot(2, 2, &Partition::empty()).len(), 1);
        for n in 0..=5 {
            for shape in Partition::all_up_to_size(n, 2) {
                assert_eq!(enumerate_ot(2, n, &shape).len(), brute_force_count(2, n, &shape), "n={n} {shape}");
            }
        }
    }

    #[test]
    fn steps_round_trip() {
        for ot in enumerate_ot(2, 4, &p(&[2])) {
            assert_eq!(OscillatingTableau::from_steps(&ot.steps()).unwrap(), ot);
        }
    }
}
