//! Bender-Knuth involutions on semistandard tableaux and on SSOTs.

use std::collections::BTreeSet;

use crate::correspondences::{inverse_rsk_a, inverse_rsk_c, rsk_a, rsk_c, Ssot};
use crate::enumerate::enumerate_kt;
use crate::error::Error;
use crate::tableau::{KingTableau, Tableau};

fn check_index(i: u32, k: u32) -> Result<(), Error> {
    if i == 0 || i >= k {
        return Err(Error::IndexOutOfRange { i: i as u16, k: k as u16 });
    }
    Ok(())
}

/// The classical involution `f_i`: in every row, the mutable run
/// `i^m (i+1)^n` becomes `i^n (i+1)^m`. An `i` with `i+1` directly below,
/// and that `i+1`, are frozen.
pub fn bk_a(t: &Tableau<u32>, i: u32, k: u32) -> Result<Tableau<u32>, Error> {
    check_index(i, k)?;
    if !t.is_semistandard() {
        return Err(Error::NotSemistandard);
    }
    let rows = t.rows();
    let frozen = |r: usize, c: usize| -> bool {
        let v = rows[r][c];
        (v == i && rows.get(r + 1).and_then(|row| row.get(c)) == Some(&(i + 1)))
            || (v == i + 1 && r > 0 && rows[r - 1][c] == i)
    };
    let mut out = rows.to_vec();
    for (r, row) in out.iter_mut().enumerate() {
        let mutable: Vec<usize> =
            (0..row.len()).filter(|&c| (row[c] == i || row[c] == i + 1) && !frozen(r, c)).collect();
        let m = mutable.iter().filter(|&&c| row[c] == i).count();
        let n = mutable.len() - m;
        for (j, &c) in mutable.iter().enumerate() {
            row[c] = if j < n { i } else { i + 1 };
        }
    }
    Ok(Tableau::from_rows(out).expect("same shape"))
}

/// The involution `g_i` on `k`-SSOTs, computed with the superstandard King
/// tableau as the fixed insertion tableau.
pub fn bk_c(s: &Ssot, i: u32, k: u32) -> Result<Ssot, Error> {
    bk_c_with(s, i, k, &KingTableau::superstandard(s.final_shape()))
}

/// `g_i` through the square of correspondences: pair `s` with `t`, pull
/// back along type-C RSK, apply `f_i` to the type-A recording tableau, and
/// push forward again.
pub fn bk_c_with(s: &Ssot, i: u32, k: u32, t: &KingTableau) -> Result<Ssot, Error> {
    check_index(i, k)?;
    if s.final_shape().len() > k as usize {
        return Err(Error::TooManyRows(s.final_shape().clone(), k as u16));
    }
    if !s.fits(k) {
        return Err(Error::InvalidSsot(format!("not a {k}-SSOT")));
    }
    let w = inverse_rsk_c(t, s)?;
    let (p, q) = rsk_a(&w);
    let w2 = inverse_rsk_a(&p, &bk_a(&q, i, k)?)?;
    let out = rsk_c(&w2);
    debug_assert_eq!(&out.p, t);
    Ok(out.q)
}

/// Every value `g_i(s)` takes as the insertion tableau ranges over
/// `KT_k(λ)`. More than one element means the result depends on the choice.
pub fn bk_c_choices(s: &Ssot, i: u32, k: u32) -> Result<BTreeSet<Ssot>, Error> {
    enumerate_kt(k as u16, s.final_shape()).iter().map(|t| bk_c_with(s, i, k, t)).collect()
}
