//! Exhaustive verification suites. Each returns a [`Report`] carrying the
//! first counterexample found, if any.

use std::collections::{BTreeSet, HashMap, HashSet};

use serde::Serialize;
use serde_json::{json, Value};

use crate::array::TwoLineArray;
use crate::bkinv::{bk_a, bk_c};
use crate::correspondences::{
    enumerate_ot, enumerate_ssot, inverse_rs_c, inverse_rsk_a, inverse_rsk_c, rs_a, rs_c, rsk_a, rsk_c, rsk_c_steps,
};
use crate::enumerate::{enumerate_kt, enumerate_skew, enumerate_ssyt, Alphabet};
use crate::insertion::{berele_insert, berele_insert_via_type_a, berele_reverse, jdt_rectifications, StepRecord};
use crate::knuth::{knuth_class, knuth_equiv_c, p_c, SideConditions};
use crate::letter::{Letter, Word};
use crate::partition::{is_horizontal_strip, Partition};
use crate::symfunc::{
    cauchy_product_truncated, cauchy_rhs_a, cauchy_rhs_c, is_bar_invariant, is_symmetric, sp_poly, ssot_poly, Family,
};
use crate::tableau::Tableau;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub suite: String,
    pub passed: bool,
    /// Number of individual cases examined.
    pub checked: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Value>,
}

struct Run {
    suite: &'static str,
    checked: usize,
}

impl Run {
    fn new(suite: &'static str) -> Run {
        Run { suite, checked: 0 }
    }

    fn check(&mut self, ok: bool, counterexample: impl FnOnce() -> Value) -> Result<(), Report> {
        self.checked += 1;
        if ok {
            Ok(())
        } else {
            Err(Report { suite: self.suite.into(), passed: false, checked: self.checked, counterexample: Some(counterexample()) })
        }
    }

    fn pass(self) -> Report {
        Report { suite: self.suite.into(), passed: true, checked: self.checked, counterexample: None }
    }
}

fn finish(result: Result<Report, Report>) -> Report {
    result.unwrap_or_else(|r| r)
}

fn barred(k: u16) -> Vec<Letter> {
    Letter::alphabet_barred(k).collect()
}

/// Type-A RSK over arrays with top entries and bottom letters in `[k]`,
/// lengths up to `n`: round trip, injectivity, and image size.
pub fn bijection_a(k: u16, n: usize) -> Report {
    finish((|| {
        let mut run = Run::new("bijection-a");
        let letters: Vec<Letter> = Letter::alphabet_plain(k).collect();
        for m in 0..=n {
            let arrays = TwoLineArray::all_of_length(k as u32, &letters, m);
            let mut seen = HashSet::new();
            for a in &arrays {
                let (p, q) = rsk_a(a);
                run.check(p.shape() == q.shape() && p.is_semistandard() && q.is_semistandard(), || json!({"array": a}))?;
                run.check(inverse_rsk_a(&p, &q).as_ref() == Ok(a), || json!({"array": a, "p": p, "q": q}))?;
                run.check(seen.insert((p, q)), || json!({"array": a, "reason": "collision"}))?;
            }
            let image: usize = Partition::all_of_size(m, k as usize)
                .iter()
                .map(|l| enumerate_ssyt(Alphabet::Plain(k), l).len().pow(2))
                .sum();
            run.check(image == arrays.len(), || json!({"n": m, "pairs": image, "arrays": arrays.len()}))?;
            for w in Word::all_of_length(&letters, m) {
                let (p, q) = rs_a(&w);
                run.check(q.is_standard() && crate::correspondences::inverse_rs_a(&p, &q).as_ref() == Ok(&w), || json!({"word": w}))?;
            }
        }
        Ok(run.pass())
    })())
}

/// Berele's RS correspondence over all words in `[k̄]^m`, `m ≤ n`.
pub fn bijection_c(k: u16, n: usize) -> Report {
    finish((|| {
        let mut run = Run::new("bijection-c");
        let letters = barred(k);
        for m in 0..=n {
            let mut seen = HashSet::new();
            for w in Word::all_of_length(&letters, m) {
                let (p, q) = rs_c(&w);
                run.check(p.is_king() && &p.shape() == q.final_shape() && q.max_rows() <= k as usize, || json!({"word": w}))?;
                run.check(inverse_rs_c(&p, &q).as_ref() == Ok(&w), || json!({"word": w, "p": p, "q": q}))?;
                run.check(seen.insert((p, q)), || json!({"word": w, "reason": "collision"}))?;
            }
            let image: usize = Partition::all_up_to_size(m, k as usize)
                .iter()
                .map(|l| enumerate_kt(k, l).len() * enumerate_ot(k as usize, m, l).len())
                .sum();
            let words = (2 * k as usize).pow(m as u32);
            run.check(image == words, || json!({"n": m, "pairs": image, "words": words}))?;
        }
        Ok(run.pass())
    })())
}

/// Shape changes within one block of equal top entries: some deletions
/// forming a horizontal strip, taken right to left, then additions forming
/// a horizontal strip, taken left to right.
pub fn check_block(before: &Partition, steps: &[StepRecord]) -> Result<Partition, String> {
    let split = steps.iter().position(|s| !s.is_deletion()).unwrap_or(steps.len());
    if steps[split..].iter().any(StepRecord::is_deletion) {
        return Err("a deletion follows an addition".into());
    }
    let (deletions, additions) = steps.split_at(split);
    if deletions.windows(2).any(|w| w[0].cell.col <= w[1].cell.col) {
        return Err("deletions are not strictly right to left".into());
    }
    if additions.windows(2).any(|w| w[0].cell.col >= w[1].cell.col) {
        return Err("additions are not strictly left to right".into());
    }
    let mut shape = before.clone();
    for s in deletions {
        shape = shape.with_cell_removed(s.cell).ok_or("deleted box is not a corner")?;
    }
    if !is_horizontal_strip(&shape, before) {
        return Err("deletions do not form a horizontal strip".into());
    }
    let middle = shape.clone();
    for s in additions {
        shape = shape.with_cell_added(s.cell).ok_or("added box is not addable")?;
    }
    if !is_horizontal_strip(&middle, &shape) {
        return Err("additions do not form a horizontal strip".into());
    }
    Ok(shape)
}

/// Checks [`check_block`] on every block of an RSK-C run.
pub fn check_run_blocks(array: &TwoLineArray) -> Result<(), String> {
    let (_, steps) = rsk_c_steps(array);
    let mut shape = Partition::empty();
    for block in steps.chunk_by(|a, b| a.0 == b.0) {
        let records: Vec<StepRecord> = block.iter().map(|s| s.1).collect();
        shape = check_block(&shape, &records).map_err(|e| format!("top entry {}: {e}", block[0].0))?;
    }
    Ok(())
}

/// Type-C RSK over arrays with top entries in `[l]`, bottom letters in
/// `[k̄]`, lengths up to `n`: round trip, injectivity, image size,
/// standardization compatibility, block structure and SSOT validity.
pub fn rsk_c_suite(k: u16, l: u32, n: usize) -> Report {
    finish((|| {
        let mut run = Run::new("rsk-c");
        let letters = barred(k);
        for m in 0..=n {
            let arrays = TwoLineArray::all_of_length(l, &letters, m);
            let mut seen = HashSet::new();
            for a in &arrays {
                let out = rsk_c(a);
                run.check(out.q.fits(l.max(k as u32)) && out.q.max_entry() <= l && out.q.max_rows() <= k as usize, || json!({"array": a}))?;
                run.check(inverse_rsk_c(&out.p, &out.q).as_ref() == Ok(a), || json!({"array": a, "output": out}))?;
                run.check(out.q.standardize() == rs_c(&a.bottom()).1, || json!({"array": a, "reason": "standardization"}))?;
                let blocks = check_run_blocks(a);
                run.check(blocks.is_ok(), || json!({"array": a, "reason": blocks.clone().unwrap_err()}))?;
                run.check(seen.insert(out), || json!({"array": a, "reason": "collision"}))?;
            }
            let image: usize = Partition::all_up_to_size(m, k as usize)
                .iter()
                .map(|shape| {
                    let ssots = enumerate_ssot(l, m, shape).into_iter().filter(|s| s.max_rows() <= k as usize).count();
                    enumerate_kt(k, shape).len() * ssots
                })
                .sum();
            run.check(image == arrays.len(), || json!({"n": m, "pairs": image, "arrays": arrays.len()}))?;
        }
        Ok(run.pass())
    })())
}

/// Horizontal strips of a weakly increasing insertion into every King
/// tableau of size up to `size`, words of length up to `n`.
pub fn strips(k: u16, size: usize, n: usize) -> Report {
    finish((|| {
        let mut run = Run::new("strips");
        let letters = barred(k);
        let words: Vec<Word> = (1..=n)
            .flat_map(|m| Word::all_of_length(&letters, m))
            .filter(|w| w.windows(2).all(|p| p[0] <= p[1]))
            .collect();
        for shape in Partition::all_up_to_size(size, k as usize) {
            for t in enumerate_kt(k, &shape) {
                for w in &words {
                    let mut cur = t.clone();
                    let mut records = Vec::with_capacity(w.len());
                    for &x in w.iter() {
                        let (next, step) = berele_insert(&cur, x);
                        cur = next;
                        records.push(step);
                    }
                    let result = check_block(&shape, &records);
                    run.check(result.is_ok(), || json!({"tableau": t, "word": w, "reason": result.clone().unwrap_err()}))?;
                }
            }
        }
        Ok(run.pass())
    })())
}

/// Berele insertion against its type-A route and its reverse, plus
/// `P_C(row T) = T`, for every King tableau of size up to `size`.
pub fn berele(k: u16, size: usize) -> Report {
    finish((|| {
        let mut run = Run::new("berele");
        for shape in Partition::all_up_to_size(size, k as usize) {
            for t in enumerate_kt(k, &shape) {
                run.check(p_c(&t.row_word()) == t, || json!({"tableau": t, "reason": "P_C(row T) != T"}))?;
                for x in barred(k) {
                    let (out, step) = berele_insert(&t, x);
                    run.check(out.is_king(), || json!({"tableau": t, "letter": x}))?;
                    run.check(berele_insert_via_type_a(&t, x) == (out.clone(), step), || json!({"tableau": t, "letter": x, "reason": "type-A route"}))?;
                    run.check(berele_reverse(&out, step) == Ok((t.clone(), x)), || json!({"tableau": t, "letter": x, "reason": "reverse"}))?;
                    let mut w = t.row_word();
                    w.push(x);
                    run.check(knuth_equiv_c(&out.row_word(), &w), || json!({"tableau": t, "letter": x, "reason": "row word"}))?;
                }
            }
        }
        Ok(run.pass())
    })())
}

/// Knuth closure under K1-K4 against insertion-tableau classes over
/// `[a]^m`, `m ≤ n`, and `≡_A ⇒ ≡_C` over `[c̄]^m`.
pub fn knuth(a: u16, c: u16, n: usize) -> Report {
    finish((|| {
        let mut run = Run::new("knuth");
        let plain: Vec<Letter> = Letter::alphabet_plain(a).collect();
        for m in 0..=n {
            let words = Word::all_of_length(&plain, m);
            let mut classes: HashMap<Tableau<Letter>, HashSet<Word>> = HashMap::new();
            for w in &words {
                classes.entry(rs_a(w).0).or_default().insert(w.clone());
            }
            for w in &words {
                let closure = knuth_class(w, SideConditions::Standard);
                run.check(closure == classes[&rs_a(w).0], || json!({"word": w, "closure": closure.len()}))?;
            }
        }
        for m in 0..=n {
            let mut classes: HashMap<Tableau<Letter>, Vec<Word>> = HashMap::new();
            for w in Word::all_of_length(&barred(c), m) {
                classes.entry(rs_a(&w).0).or_default().push(w);
            }
            for class in classes.values() {
                let pc = p_c(&class[0]);
                for w in class {
                    run.check(p_c(w) == pc, || json!({"left": class[0], "right": w}))?;
                }
            }
        }
        Ok(run.pass())
    })())
}

/// Words whose closure under the uniform side conditions leaves their
/// insertion-tableau class, over `[a]^m`, `m ≤ n`, each with the least
/// word it reaches outside the class.
pub fn uniform_condition_escapes(a: u16, n: usize) -> Vec<(Word, Word)> {
    let plain: Vec<Letter> = Letter::alphabet_plain(a).collect();
    let mut out = Vec::new();
    for m in 0..=n {
        for w in Word::all_of_length(&plain, m) {
            let p = rs_a(&w).0;
            if let Some(v) = knuth_class(&w, SideConditions::Uniform).into_iter().filter(|v| rs_a(v).0 != p).min() {
                out.push((w, v));
            }
        }
    }
    out
}

/// `f_i` on `SSYT_3(μ)` for `|μ| ≤ 5` and `g_i` on `SSOT_{3,5}((2,1))`,
/// `SSOT_{3,3}((2,1))` and `SSOT_{2,n}(λ)` for `|λ| ≤ 3`, `n ≤ 5`.
pub fn bk() -> Report {
    finish((|| {
        let mut run = Run::new("bk");
        for shape in Partition::all_up_to_size(5, 3) {
            for t in enumerate_ssyt(Alphabet::Plain(3), &shape) {
                let t = t.map(|l| l.index() as u32);
                for i in 1..=2 {
                    let f = bk_a(&t, i, 3).expect("valid index");
                    let swapped = (f.count(i), f.count(i + 1)) == (t.count(i + 1), t.count(i));
                    let others = (1..=3).filter(|&j| j != i && j != i + 1).all(|j| f.count(j) == t.count(j));
                    run.check(f.is_semistandard() && f.shape() == t.shape() && swapped && others, || json!({"tableau": t, "i": i}))?;
                    run.check(bk_a(&f, i, 3).as_ref() == Ok(&t), || json!({"tableau": t, "i": i, "reason": "not an involution"}))?;
                }
            }
        }
        let mut families: Vec<(u32, usize, Partition)> = vec![(3, 5, p21()), (3, 3, p21())];
        for shape in Partition::all_up_to_size(3, 2) {
            for n in (shape.size()..=5).step_by(2) {
                families.push((2, n, shape.clone()));
            }
        }
        for (k, n, shape) in families {
            let all: BTreeSet<_> = enumerate_ssot(k, n, &shape).into_iter().collect();
            for s in &all {
                for i in 1..k {
                    let g = bk_c(s, i, k).expect("valid SSOT");
                    let swapped = (g.count(i), g.count(i + 1)) == (s.count(i + 1), s.count(i));
                    let others = (1..=k).filter(|&j| j != i && j != i + 1).all(|j| g.count(j) == s.count(j));
                    run.check(all.contains(&g) && swapped && others, || json!({"ssot": s, "i": i, "k": k}))?;
                    run.check(bk_c(&g, i, k).as_ref() == Ok(s), || json!({"ssot": s, "i": i, "k": k, "reason": "not an involution"}))?;
                }
            }
        }
        Ok(run.pass())
    })())
}

fn p21() -> Partition {
    Partition::new(vec![2, 1]).expect("partition")
}

/// Both expansions of the Cauchy product, up to `y`-degree `n`.
pub fn cauchy(k: u16, n: u32) -> Report {
    finish((|| {
        let mut run = Run::new("cauchy");
        let product = cauchy_product_truncated(k, n);
        let a = cauchy_rhs_a(k, n);
        run.check(product == a, || json!({"k": k, "degree": n, "difference": &product - &a}))?;
        let c = cauchy_rhs_c(k, n);
        run.check(product == c, || json!({"k": k, "degree": n, "difference": &product - &c}))?;
        Ok(run.pass())
    })())
}

/// Symmetry of `ss_{λ,n}` in `y`.
pub fn ssot_symmetry(k: u16, shape: &Partition, n: usize) -> Report {
    finish((|| {
        let mut run = Run::new("ssot-symmetry");
        let ss = ssot_poly(shape, k, n);
        run.check(is_symmetric(&ss, Family::Y, k), || json!({"k": k, "shape": shape, "n": n, "polynomial": ss}))?;
        Ok(run.pass())
    })())
}

/// Symmetry of every `ss_{λ,n}` with `|λ| ≤ size`, `n ≤ |λ| + 2`, and
/// symmetry plus bar invariance of `sp_λ`.
pub fn symmetry(k: u16, size: usize) -> Report {
    finish((|| {
        let mut run = Run::new("symmetry");
        for shape in Partition::all_up_to_size(size, k as usize) {
            for n in shape.size()..=shape.size() + 2 {
                let ss = ssot_poly(&shape, k, n);
                run.check(is_symmetric(&ss, Family::Y, k), || json!({"k": k, "shape": shape, "n": n}))?;
            }
            let sp = sp_poly(&shape, k);
            run.check(is_symmetric(&sp, Family::X, k) && is_bar_invariant(&sp, k), || json!({"k": k, "shape": shape, "sp": sp}))?;
        }
        Ok(run.pass())
    })())
}

/// Confluence of jeu de taquin on every semistandard skew tableau over
/// `[k̄]` with at most `max_boxes` boxes and inner shape of size at most
/// `max_inner`.
pub fn jdt_confluence(k: u16, max_inner: usize, max_boxes: usize) -> Report {
    finish((|| {
        let mut run = Run::new("jdt");
        let letters = barred(k);
        for inner in Partition::all_up_to_size(max_inner, max_inner) {
            if inner.is_empty() {
                continue;
            }
            for outer in Partition::all_up_to_size(inner.size() + max_boxes, 2 * k as usize + inner.len()) {
                if !inner.is_contained_in(&outer) || outer.size() == inner.size() {
                    continue;
                }
                for s in enumerate_skew(&inner, &outer, &letters) {
                    let results = jdt_rectifications(&s);
                    let oracle = rs_a(&s.row_word()).0;
                    run.check(results.len() == 1 && results.contains(&oracle), || json!({"skew": format!("{s:?}"), "results": results.len()}))?;
                }
            }
        }
        Ok(run.pass())
    })())
}

/// Every suite at its default scale.
pub fn all_suites() -> Vec<Report> {
    vec![
        bijection_a(2, 4),
        bijection_c(2, 5),
        rsk_c_suite(2, 2, 4),
        strips(2, 4, 4),
        berele(2, 4),
        knuth(3, 2, 4),
        bk(),
        cauchy(1, 4),
        cauchy(2, 4),
        symmetry(2, 3),
        symmetry(3, 3),
        jdt_confluence(2, 6, 6),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suites_pass() {
        for report in [
            bijection_a(2, 2),
            bijection_c(2, 3),
            rsk_c_suite(2, 2, 2),
            strips(2, 2, 2),
            berele(2, 2),
            knuth(2, 2, 3),
            cauchy(1, 2),
            ssot_symmetry(3, &p21(), 5),
            symmetry(2, 2),
            jdt_confluence(1, 2, 3),
        ] {
            assert!(report.passed, "{report:?}");
            assert!(report.checked > 0);
        }
    }

    #[test]
    fn block_checker_rejects_bad_orders() {
        let c = |r, col| crate::partition::Cell::new(r, col);
        let shape = Partition::new(vec![2]).unwrap();
        assert!(check_block(&shape, &[StepRecord::added(c(1, 3)), StepRecord::deleted(c(1, 3))]).is_err());
        assert!(check_block(&shape, &[StepRecord::added(c(2, 1)), StepRecord::added(c(2, 2))]).is_ok());
        assert!(check_block(&Partition::new(vec![2, 1]).unwrap(), &[StepRecord::added(c(2, 2)), StepRecord::added(c(3, 1))]).is_err());
    }

    #[test]
    fn uniform_conditions_escape_classes() {
        let escapes = uniform_condition_escapes(2, 3);
        assert!(escapes.iter().any(|(w, _)| w.to_signed() == vec![1, 2, 2]));
    }

    #[test]
    fn report_json() {
        let r = cauchy(1, 1);
        assert_eq!(serde_json::to_value(&r).unwrap(), json!({"suite": "cauchy", "passed": true, "checked": 2}));
    }
}
