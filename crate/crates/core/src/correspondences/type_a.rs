use crate::array::TwoLineArray;
use crate::error::Error;
use crate::insertion::{reverse_bump, row_insert};
use crate::letter::{Letter, Word};
use crate::partition::Cell;
use crate::tableau::Tableau;

/// Robinson-Schensted: `(P(w), Q(w))` with `Q` standard.
pub fn rs_a(word: &Word) -> (Tableau<Letter>, Tableau<u32>) {
    rsk_a(&TwoLineArray::from_word(word))
}

/// Inverse of [`rs_a`].
pub fn inverse_rs_a(p: &Tableau<Letter>, q: &Tableau<u32>) -> Result<Word, Error> {
    if !q.is_standard() {
        return Err(Error::NotStandard);
    }
    Ok(inverse_rsk_a(p, q)?.bottom())
}

/// RSK: row-insert the bottom row, recording each top entry where the new
/// box appeared.
pub fn rsk_a(array: &TwoLineArray) -> (Tableau<Letter>, Tableau<u32>) {
    let mut p = Tableau::empty();
    let mut q = Tableau::empty();
    for &(u, v) in array.pairs() {
        let (next, cell) = row_insert(&p, v);
        p = next;
        q.push_at(cell, u);
    }
    (p, q)
}

/// Inverse of [`rsk_a`]: repeatedly evict the rightmost copy of the largest
/// entry of `q` and reverse-bump the matching box of `p`.
pub fn inverse_rsk_a(p: &Tableau<Letter>, q: &Tableau<u32>) -> Result<TwoLineArray, Error> {
    if p.shape() != q.shape() {
        return Err(Error::PairShapeMismatch(p.shape(), q.shape()));
    }
    if !p.is_semistandard() || !q.is_semistandard() {
        return Err(Error::NotSemistandard);
    }
    let mut p = p.clone();
    let mut q = q.clone();
    let mut pairs = Vec::with_capacity(q.size());
    while let Some(cell) = rightmost_max(&q) {
        let u = q.pop_at(cell);
        let (smaller, x) = reverse_bump(&p, cell).expect("corner of a semistandard tableau");
        p = smaller;
        pairs.push((u, x));
    }
    pairs.reverse();
    TwoLineArray::new(pairs)
}

fn rightmost_max(q: &Tableau<u32>) -> Option<Cell> {
    q.entries().max_by_key(|&(cell, v)| (v, cell.col)).map(|(cell, _)| cell)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn small_words() {
        assert_eq!(rs_a(&Word::new()), (Tableau::empty(), Tableau::empty()));
        let w = Word::from_signed(&[2, 1]).unwrap();
        let (p, q) = rs_a(&w);
        assert_eq!(p, Tableau::from_signed(&[vec![1], vec![2]]).unwrap());
        assert_eq!(q, Tableau::from_rows(vec![vec![1], vec![2]]).unwrap());
        assert_eq!(inverse_rs_a(&p, &q).unwrap(), w);
        assert_eq!(inverse_rs_a(&Tableau::empty(), &Tableau::empty()).unwrap(), Word::new());
    }

    #[test]
    fn shapes_agree_on_all_short_words() {
        let letters: Vec<Letter> = Letter::alphabet_plain(3).collect();
        for w in Word::all_of_length(&letters, 4) {
            let (p, q) = rs_a(&w);
            assert_eq!(p.shape(), q.shape());
            assert!(q.is_standard());
            assert!(p.is_semistandard());
        }
    }

    #[test]
    fn rs_round_trip_on_barred_alphabet() {
        let letters: Vec<Letter> = Letter::alphabet_barred(2).collect();
        let mut seen = HashSet::new();
        for w in Word::all_of_length(&letters, 5) {
            let (p, q) = rs_a(&w);
            assert_eq!(inverse_rs_a(&p, &q).unwrap(), w);
            assert!(seen.insert((p, q)));
        }
    }

    #[test]
    fn rsk_base_case_and_errors() {
        let arr = TwoLineArray::new(vec![(3, Letter::barred(1))]).unwrap();
        let (p, q) = rsk_a(&arr);
        assert_eq!(p.rows(), &[vec![Letter::barred(1)]]);
        assert_eq!(q.rows(), &[vec![3]]);
        assert_eq!(inverse_rsk_a(&p, &q).unwrap(), arr);
        let wide = Tableau::from_rows(vec![vec![1, 1]]).unwrap();
        assert!(matches!(inverse_rsk_a(&p, &wide), Err(Error::PairShapeMismatch(..))));
        let bad_q = Tableau::from_rows(vec![vec![2], vec![1]]).unwrap();
        let tall_p = Tableau::from_signed(&[vec![1], vec![2]]).unwrap();
        assert_eq!(inverse_rsk_a(&tall_p, &bad_q), Err(Error::NotSemistandard));
        assert!(!inverse_rs_a(&tall_p, &Tableau::from_rows(vec![vec![1], vec![1]]).unwrap()).is_ok());
    }

    #[test]
    fn rsk_is_a_bijection_at_small_scale() {
        let letters: Vec<Letter> = Letter::alphabet_plain(2).collect();
        for n in 0..=3 {
            let arrays = TwoLineArray::all_of_length(2, &letters, n);
            let mut images = HashSet::new();
            for arr in &arrays {
                let (p, q) = rsk_a(arr);
                assert_eq!(p.shape(), q.shape());
                assert!(q.is_semistandard());
                assert_eq!(&inverse_rsk_a(&p, &q).unwrap(), arr);
                images.insert((p, q));
            }
            assert_eq!(images.len(), arrays.len());
        }
    }
}
