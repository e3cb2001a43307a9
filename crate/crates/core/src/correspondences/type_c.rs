use serde::{Deserialize, Deserializer, Serialize};

use super::oscillating::OscillatingTableau;
use super::ssot::Ssot;
use crate::array::TwoLineArray;
use crate::error::Error;
use crate::insertion::{berele_insert, berele_reverse, StepRecord};
use crate::letter::Word;
use crate::tableau::KingTableau;

/// Berele's RS correspondence: insert the word letter by letter and record
/// the shape after every step.
pub fn rs_c(word: &Word) -> (KingTableau, OscillatingTableau) {
    let mut p = KingTableau::empty();
    let mut steps = Vec::with_capacity(word.len());
    for &x in word.iter() {
        let (next, step) = berele_insert(&p, x);
        p = next;
        steps.push(step);
    }
    let q = OscillatingTableau::from_steps(&steps).expect("Berele steps chain up");
    (p, q)
}

/// Inverse of [`rs_c`], undoing one Berele step at a time from the end.
pub fn inverse_rs_c(p: &KingTableau, q: &OscillatingTableau) -> Result<Word, Error> {
    if &p.shape() != q.final_shape() {
        return Err(Error::InvalidRsPair);
    }
    let mut t = p.clone();
    let mut letters = Vec::with_capacity(q.len());
    for step in q.steps().into_iter().rev() {
        let (prev, x) = berele_reverse(&t, step).map_err(|_| Error::InvalidRsPair)?;
        t = prev;
        letters.push(x);
    }
    letters.reverse();
    Ok(Word(letters))
}

/// `(P_C(w), Q_C(w))` for a two-line array `w`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct RskOutputC {
    pub p: KingTableau,
    pub q: Ssot,
}

#[derive(Deserialize)]
struct RskOutputRepr {
    p: KingTableau,
    q: Ssot,
}

impl<'de> Deserialize<'de> for RskOutputC {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = RskOutputRepr::deserialize(deserializer)?;
        if &repr.p.shape() != repr.q.final_shape() {
            return Err(serde::de::Error::custom(Error::PairShapeMismatch(repr.p.shape(), repr.q.final_shape().clone())));
        }
        Ok(RskOutputC { p: repr.p, q: repr.q })
    }
}

/// The per-column records of a type-C RSK run: each top entry with the box
/// its insertion added or deleted.
pub fn rsk_c_steps(array: &TwoLineArray) -> (KingTableau, Vec<(u32, StepRecord)>) {
    let mut p = KingTableau::empty();
    let mut steps = Vec::with_capacity(array.len());
    for &(u, v) in array.pairs() {
        let (next, step) = berele_insert(&p, v);
        p = next;
        steps.push((u, step));
    }
    (p, steps)
}

/// Type-C RSK: Berele-insert the bottom row and write each top entry into
/// the box that its insertion added or deleted.
pub fn rsk_c(array: &TwoLineArray) -> RskOutputC {
    let (p, steps) = rsk_c_steps(array);
    let q = Ssot::from_recorded_steps(p.shape(), &steps);
    debug_assert!(Ssot::new(q.final_shape().clone(), q.grid().to_vec()).is_ok());
    RskOutputC { p, q }
}

/// Inverse of [`rsk_c`]: run the inverse RS correspondence on the
/// standardization of `q` and put the content of `q` on top.
pub fn inverse_rsk_c(p: &KingTableau, q: &Ssot) -> Result<TwoLineArray, Error> {
    if &p.shape() != q.final_shape() {
        return Err(Error::PairShapeMismatch(p.shape(), q.final_shape().clone()));
    }
    let bottom = inverse_rs_c(p, &q.standardize())?;
    let array = TwoLineArray::from_rows(&q.content(), &bottom).map_err(|_| Error::InvalidRsPair)?;
    // Non-images standardize fine but fail to reproduce q.
    if rsk_c(&array).q != *q {
        return Err(Error::InvalidRsPair);
    }
    Ok(array)
}

#[cfg(test)]
mod tests {
    use std::collections::HashSet;

    use super::*;
    use crate::letter::Letter;
    use crate::correspondences::{enumerate_ot, enumerate_ssot};
    use crate::enumerate::enumerate_kt;
    use crate::insertion::berele_insert_word;
    use crate::partition::Partition;

    fn p(rows: &[usize]) -> Partition {
        Partition::from_padded(rows.to_vec()).unwrap()
    }

    fn kt(rows: &[Vec<i64>]) -> KingTableau {
        KingTableau::from_signed(rows).unwrap()
    }

    #[test]
    fn rs_c_example() {
        let w = Word::from_signed(&[-2, 2, -2, 2, 1, -1]).unwrap();
        let trace: Vec<KingTableau> = berele_insert_word(&w).into_iter().map(|(t, _)| t).collect();
        let expected = [
            kt(&[vec![-2]]),
            kt(&[vec![2], vec![-2]]),
            kt(&[vec![2, -2], vec![-2]]),
            kt(&[vec![2, 2], vec![-2, -2]]),
            kt(&[vec![1, 2], vec![-2]]),
            kt(&[vec![1, -1]]),
        ];
        assert_eq!(trace, expected);
        let (pw, qw) = rs_c(&w);
        assert_eq!(pw, kt(&[vec![1, -1]]));
        let shapes = vec![p(&[]), p(&[1]), p(&[1, 1]), p(&[2, 1]), p(&[2, 2]), p(&[2, 1]), p(&[2])];
        assert_eq!(qw, OscillatingTableau::new(shapes).unwrap());
        assert_eq!(inverse_rs_c(&pw, &qw), Ok(w));
    }

    #[test]
    fn rsk_c_example() {
        let top = [1, 1, 1, 2, 3, 3, 4, 4, 4, 5, 5];
        let bottom = Word::from_signed(&[-1, 2, -2, 2, 1, -1, 1, 1, -1, 1, -2]).unwrap();
        let array = TwoLineArray::from_rows(&top, &bottom).unwrap();
        let out = rsk_c(&array);
        assert_eq!(out.p, kt(&[vec![1, -2], vec![2]]));
        let q = Ssot::new(p(&[2, 1]), vec![vec![vec![1], vec![1, 4, 4, 5, 5], vec![1, 3]], vec![vec![2, 3, 4]]]).unwrap();
        assert_eq!(out.q, q);
        assert_eq!(inverse_rsk_c(&out.p, &out.q), Ok(array));
    }

    #[test]
    fn empty_inputs() {
        let (pw, qw) = rs_c(&Word::new());
        assert!(pw.is_empty());
        assert!(qw.is_empty());
        assert_eq!(inverse_rs_c(&pw, &qw), Ok(Word::new()));
        let out = rsk_c(&TwoLineArray::default());
        assert_eq!(out.q, Ssot::empty());
        assert_eq!(inverse_rsk_c(&out.p, &out.q), Ok(TwoLineArray::default()));
    }

    #[test]
    fn single_column() {
        let x = Letter::barred(2);
        let array = TwoLineArray::from_rows(&[3], &[x]).unwrap();
        let out = rsk_c(&array);
        assert_eq!(out.p.rows(), &[vec![x]]);
        assert_eq!(out.q.grid(), &[vec![vec![3]]]);
        assert_eq!(inverse_rsk_c(&out.p, &out.q), Ok(array));
    }

    #[test]
    fn rs_c_is_a_bijection_for_small_words() {
        let letters: Vec<Letter> = Letter::alphabet_barred(2).collect();
        for n in 0..=4 {
            let mut seen = HashSet::new();
            for w in Word::all_of_length(&letters, n) {
                let (pw, qw) = rs_c(&w);
                assert!(pw.is_king());
                assert_eq!(&pw.shape(), qw.final_shape());
                assert_eq!(inverse_rs_c(&pw, &qw), Ok(w.clone()));
                assert!(seen.insert((pw, qw)));
            }
            let image: usize = Partition::all_up_to_size(n, 2)
                .iter()
                .map(|l| enumerate_kt(2, l).len() * enumerate_ot(2, n, l).len())
                .sum();
            assert_eq!(image, 4usize.pow(n as u32));
        }
    }

    #[test]
    fn shape_mismatch_is_rejected() {
        let q = OscillatingTableau::new(vec![p(&[]), p(&[1]), p(&[2])]).unwrap();
        assert_eq!(inverse_rs_c(&kt(&[vec![2]]), &q), Err(Error::InvalidRsPair));
        let s = Ssot::new(p(&[2]), vec![vec![vec![1], vec![1]]]).unwrap();
        assert!(inverse_rsk_c(&kt(&[vec![2]]), &s).is_err());
    }

    #[test]
    fn deletion_below_the_first_row() {
        // 2̄ 2 1: the cancellation happens in row 2
        let q = OscillatingTableau::new(vec![p(&[]), p(&[1]), p(&[1, 1]), p(&[1])]).unwrap();
        assert_eq!(inverse_rs_c(&kt(&[vec![1]]), &q), Ok(Word::from_signed(&[-2, 2, 1]).unwrap()));
    }

    #[test]
    fn rsk_c_is_a_bijection_for_small_arrays() {
        let letters: Vec<Letter> = Letter::alphabet_barred(2).collect();
        for n in 0..=3 {
            let arrays = TwoLineArray::all_of_length(2, &letters, n);
            let mut seen = HashSet::new();
            for a in &arrays {
                let out = rsk_c(a);
                assert!(out.q.fits(2));
                assert_eq!(inverse_rsk_c(&out.p, &out.q).as_ref(), Ok(a));
                assert_eq!(out.q.standardize(), rs_c(&a.bottom()).1);
                assert!(seen.insert(out));
            }
            let image: usize = Partition::all_up_to_size(n, 2)
                .iter()
                .map(|l| enumerate_kt(2, l).len() * enumerate_ssot(2, n, l).len())
                .sum();
            assert_eq!(image, arrays.len());
        }
    }
}
