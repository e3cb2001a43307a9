//! Exact Laurent polynomials in `x₁±,…,x_k±` and `y₁,…,y_k`, and the
//! generating functions of tableaux: Schur, symplectic Schur and SSOT
//! polynomials, with both expansions of the Cauchy product.

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::correspondences::{enumerate_ssot, Ssot};
use crate::enumerate::{enumerate_kt, enumerate_ssyt, Alphabet};
use crate::letter::Letter;
use crate::partition::Partition;
use crate::tableau::Tableau;

/// Which variables an operation acts on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    X,
    Y,
}

/// `x^a y^b` with integer `a` and non-negative `b`; zero exponents are
/// never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial {
    x: BTreeMap<u16, i32>,
    y: BTreeMap<u16, u32>,
}

impl Monomial {
    pub fn one() -> Monomial {
        Monomial::default()
    }

    pub fn x(j: u16, e: i32) -> Monomial {
        let mut m = Monomial::one();
        m.mul_x(j, e);
        m
    }

    pub fn y(i: u16, e: u32) -> Monomial {
        let mut m = Monomial::one();
        m.mul_y(i, e);
        m
    }

    pub fn x_exponents(&self) -> &BTreeMap<u16, i32> {
        &self.x
    }

    pub fn y_exponents(&self) -> &BTreeMap<u16, u32> {
        &self.y
    }

    pub fn x_exponent(&self, j: u16) -> i32 {
        self.x.get(&j).copied().unwrap_or(0)
    }

    pub fn y_exponent(&self, i: u16) -> u32 {
        self.y.get(&i).copied().unwrap_or(0)
    }

    pub fn y_degree(&self) -> u32 {
        self.y.values().sum()
    }

    fn mul_x(&mut self, j: u16, e: i32) {
        let v = self.x.entry(j).or_insert(0);
        *v += e;
        if *v == 0 {
            self.x.remove(&j);
        }
    }

    fn mul_y(&mut self, i: u16, e: u32) {
        if e > 0 {
            *self.y.entry(i).or_insert(0) += e;
        }
    }

    fn sort_key(&self) -> (u32, Vec<(u16, u32)>, i32, Vec<(u16, i32)>) {
        (
            self.y_degree(),
            self.y.iter().map(|(&i, &e)| (i, e)).collect(),
            self.x.values().sum(),
            self.x.iter().map(|(&j, &e)| (j, e)).collect(),
        )
    }

    /// Applies `f` to the variable indices of `family`.
    fn rename(&self, family: Family, f: impl Fn(u16) -> u16) -> Monomial {
        let mut out = Monomial::one();
        for (&j, &e) in &self.x {
            out.mul_x(if family == Family::X { f(j) } else { j }, e);
        }
        for (&i, &e) in &self.y {
            out.mul_y(if family == Family::Y { f(i) } else { i }, e);
        }
        out
    }
}

/// Graded lexicographic on `(y, x)`.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Mul for &Monomial {
    type Output = Monomial;

    fn mul(self, rhs: &Monomial) -> Monomial {
        let mut out = self.clone();
        for (&j, &e) in &rhs.x {
            out.mul_x(j, e);
        }
        for (&i, &e) in &rhs.y {
            out.mul_y(i, e);
        }
        out
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.x.is_empty() && self.y.is_empty() {
            return write!(f, "1");
        }
        let mut parts = Vec::new();
        for (&j, &e) in &self.x {
            parts.push(if e == 1 { format!("x{j}") } else { format!("x{j}^{e}") });
        }
        for (&i, &e) in &self.y {
            parts.push(if e == 1 { format!("y{i}") } else { format!("y{i}^{e}") });
        }
        write!(f, "{}", parts.join("*"))
    }
}

/// A finite integer combination of monomials with no zero coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPolynomial {
    terms: BTreeMap<Monomial, BigInt>,
}

impl LaurentPolynomial {
    pub fn zero() -> LaurentPolynomial {
        LaurentPolynomial::default()
    }

    pub fn one() -> LaurentPolynomial {
        LaurentPolynomial::from_monomial(Monomial::one())
    }

    pub fn from_monomial(m: Monomial) -> LaurentPolynomial {
        LaurentPolynomial { terms: BTreeMap::from([(m, BigInt::one())]) }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, BigInt)>) -> LaurentPolynomial {
        let mut p = LaurentPolynomial::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    /// `x_j`, `x_j⁻¹`, `y_i` and friends as polynomials.
    pub fn var(family: Family, index: u16, exponent: i32) -> LaurentPolynomial {
        match family {
            Family::X => LaurentPolynomial::from_monomial(Monomial::x(index, exponent)),
            Family::Y => LaurentPolynomial::from_monomial(Monomial::y(index, exponent.try_into().expect("y exponents are non-negative"))),
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    /// Drops every term of total `y`-degree above `n`.
    pub fn truncate_y(&self, n: u32) -> LaurentPolynomial {
        LaurentPolynomial { terms: self.terms.iter().filter(|(m, _)| m.y_degree() <= n).map(|(m, c)| (m.clone(), c.clone())).collect() }
    }

    /// Product with every term of `y`-degree above `n` discarded.
    pub fn mul_truncated(&self, rhs: &LaurentPolynomial, n: u32) -> LaurentPolynomial {
        let mut out = LaurentPolynomial::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                if a.y_degree() + b.y_degree() <= n {
                    out.add_term(a * b, ca * cb);
                }
            }
        }
        out
    }

    /// Exchanges variables `a` and `b` of `family`.
    pub fn swap_vars(&self, family: Family, a: u16, b: u16) -> LaurentPolynomial {
        let f = |j: u16| if j == a { b } else if j == b { a } else { j };
        LaurentPolynomial::from_terms(self.terms.iter().map(|(m, c)| (m.rename(family, f), c.clone())))
    }

    /// Substitutes `x_j ↦ x_j⁻¹`.
    pub fn invert_x(&self, j: u16) -> LaurentPolynomial {
        LaurentPolynomial::from_terms(self.terms.iter().map(|(m, c)| {
            let mut m = m.clone();
            if let Some(e) = m.x.get_mut(&j) {
                *e = -*e;
            }
            (m, c.clone())
        }))
    }
}

impl Add for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn add(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn sub(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        self + &-rhs
    }
}

impl Neg for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn neg(self) -> LaurentPolynomial {
        LaurentPolynomial { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

impl Mul for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn mul(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        self.mul_truncated(rhs, u32::MAX)
    }
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| if c.is_one() { m.to_string() } else { format!("{c}*{m}") })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    coeff: serde_json::Value,
    #[serde(default)]
    x: BTreeMap<String, i32>,
    #[serde(default)]
    y: BTreeMap<String, u32>,
}

/// Coefficients that fit in an `i64` are JSON integers; larger ones are
/// decimal strings.
impl Serialize for LaurentPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let terms: Vec<TermRepr> = self
            .terms
            .iter()
            .map(|(m, c)| TermRepr {
                coeff: c.to_i64().map_or_else(|| serde_json::Value::String(c.to_string()), serde_json::Value::from),
                x: m.x.iter().map(|(j, e)| (j.to_string(), *e)).collect(),
                y: m.y.iter().map(|(i, e)| (i.to_string(), *e)).collect(),
            })
            .collect();
        terms.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for LaurentPolynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let terms = Vec::<TermRepr>::deserialize(deserializer)?;
        let mut p = LaurentPolynomial::zero();
        for t in terms {
            let coeff: BigInt = match &t.coeff {
                serde_json::Value::Number(n) => n.as_i64().map(BigInt::from).ok_or_else(|| D::Error::custom("coefficient is not an integer"))?,
                serde_json::Value::String(s) => s.parse().map_err(D::Error::custom)?,
                _ => return Err(D::Error::custom("coefficient must be an integer")),
            };
            let mut m = Monomial::one();
            for (j, e) in t.x {
                m.mul_x(j.parse().map_err(D::Error::custom)?, e);
            }
            for (i, e) in t.y {
                m.mul_y(i.parse().map_err(D::Error::custom)?, e);
            }
            p.add_term(m, coeff);
        }
        Ok(p)
    }
}

/// `∏ x_{T(m,n)}` with `x_ī = x_i⁻¹`.
pub fn weight_x(t: &Tableau<Letter>) -> Monomial {
    let mut m = Monomial::one();
    for (_, l) in t.entries() {
        m.mul_x(l.index(), if l.is_barred() { -1 } else { 1 });
    }
    m
}

/// `∏ y_j` over every entry `j` of the compact grid.
pub fn weight_y(s: &Ssot) -> Monomial {
    let mut m = Monomial::one();
    for &j in s.grid().iter().flatten().flatten() {
        m.mul_y(j as u16, 1);
    }
    m
}

/// Schur polynomial `s_λ` in `k` variables of `family`.
pub fn schur_poly(shape: &Partition, k: u16, family: Family) -> LaurentPolynomial {
    LaurentPolynomial::from_terms(enumerate_ssyt(Alphabet::Plain(k), shape).iter().map(|t| {
        let mut m = Monomial::one();
        for (_, l) in t.entries() {
            match family {
                Family::X => m.mul_x(l.index(), 1),
                Family::Y => m.mul_y(l.index(), 1),
            }
        }
        (m, BigInt::one())
    }))
}

/// `s_λ(x^±)`: SSYT over the barred alphabet `[k̄]`, weighted with
/// `x_ī = x_i⁻¹`.
pub fn schur_poly_barred(shape: &Partition, k: u16) -> LaurentPolynomial {
    LaurentPolynomial::from_terms(enumerate_ssyt(Alphabet::Barred(k), shape).iter().map(|t| (weight_x(t), BigInt::one())))
}

/// Symplectic Schur polynomial `sp_λ(x^±)` over King tableaux.
pub fn sp_poly(shape: &Partition, k: u16) -> LaurentPolynomial {
    LaurentPolynomial::from_terms(enumerate_kt(k, shape).iter().map(|t| (weight_x(t), BigInt::one())))
}

/// SSOT polynomial `ss_{λ,n}(y)` over `k`-SSOTs of length `n`.
pub fn ssot_poly(shape: &Partition, k: u16, n: usize) -> LaurentPolynomial {
    LaurentPolynomial::from_terms(enumerate_ssot(k as u32, n, shape).iter().map(|s| (weight_y(s), BigInt::one())))
}

/// Elementary symmetric polynomial `e_r` in `k` variables of `family`.
pub fn elementary_poly(r: usize, k: u16, family: Family) -> LaurentPolynomial {
    let column = Partition::from_padded(vec![1; r]).expect("column shape");
    schur_poly(&column, k, family)
}

/// `∏_{i,j ≤ k} (1 − x_j y_i)⁻¹ (1 − x_j⁻¹ y_i)⁻¹` up to total `y`-degree `n`.
pub fn cauchy_product_truncated(k: u16, n: u32) -> LaurentPolynomial {
    let mut out = LaurentPolynomial::one();
    for i in 1..=k {
        for j in 1..=k {
            for sign in [1, -1] {
                let base = &LaurentPolynomial::var(Family::X, j, sign) * &LaurentPolynomial::var(Family::Y, i, 1);
                let mut series = LaurentPolynomial::one();
                let mut power = LaurentPolynomial::one();
                for _ in 0..n {
                    power = power.mul_truncated(&base, n);
                    series = &series + &power;
                }
                out = out.mul_truncated(&series, n);
            }
        }
    }
    out
}

/// `Σ_{ℓ(λ) ≤ k, |λ| ≤ n} s_λ(x^±) s_λ(y)`.
pub fn cauchy_rhs_a(k: u16, n: u32) -> LaurentPolynomial {
    Partition::all_up_to_size(n as usize, k as usize).iter().fold(LaurentPolynomial::zero(), |acc, shape| {
        &acc + &(&schur_poly_barred(shape, k) * &schur_poly(shape, k, Family::Y))
    })
}

/// `Σ_{ℓ(λ) ≤ k} Σ_{m ≤ n} sp_λ(x^±) ss_{λ,m}(y)`.
pub fn cauchy_rhs_c(k: u16, n: u32) -> LaurentPolynomial {
    let mut out = LaurentPolynomial::zero();
    for shape in Partition::all_up_to_size(n as usize, k as usize) {
        let sp = sp_poly(&shape, k);
        let ss = (shape.size()..=n as usize)
            .step_by(2)
            .fold(LaurentPolynomial::zero(), |acc, m| &acc + &ssot_poly(&shape, k, m));
        out = &out + &(&sp * &ss);
    }
    out
}

/// Fixed by every adjacent transposition of the first `k` variables of
/// `family`.
pub fn is_symmetric(p: &LaurentPolynomial, family: Family, k: u16) -> bool {
    (1..k).all(|i| p.swap_vars(family, i, i + 1) == *p)
}

/// Fixed by `x_j ↦ x_j⁻¹` for every `j ≤ k`.
pub fn is_bar_invariant(p: &LaurentPolynomial, k: u16) -> bool {
    (1..=k).all(|j| p.invert_x(j) == *p)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(rows: &[usize]) -> Partition {
        Partition::from_padded(rows.to_vec()).unwrap()
    }

    fn y(i: u16) -> LaurentPolynomial {
        LaurentPolynomial::var(Family::Y, i, 1)
    }

    fn x(j: u16, e: i32) -> LaurentPolynomial {
        LaurentPolynomial::var(Family::X, j, e)
    }

    #[test]
    fn arithmetic() {
        let a = &x(1, 1) + &x(1, -1);
        let sq = &a * &a;
        assert_eq!(sq.coeff(&Monomial::one()), BigInt::from(2));
        assert_eq!(sq.len(), 3);
        assert!((&sq - &sq).is_zero());
        assert_eq!(&x(1, 1) * &x(1, -1), LaurentPolynomial::one());
    }

    #[test]
    fn weights() {
        let box_bar = Tableau::from_signed(&[vec![-1]]).unwrap();
        assert_eq!(weight_x(&box_bar), Monomial::x(1, -1));
        let pq = Tableau::from_signed(&[vec![1], vec![2]]).unwrap();
        assert_eq!(weight_x(&pq), &Monomial::x(1, 1) * &Monomial::x(2, 1));
        let sample = Tableau::from_signed(&[vec![1, -1, 4], vec![-2, -4, 6], vec![3], vec![5]]).unwrap();
        let expected = [Monomial::x(2, -1), Monomial::x(3, 1), Monomial::x(5, 1), Monomial::x(6, 1)]
            .iter()
            .fold(Monomial::one(), |acc, m| &acc * m);
        assert_eq!(weight_x(&sample), expected);
        let q = Ssot::new(p(&[2, 1]), vec![vec![vec![1], vec![1, 4, 4, 5, 5], vec![1, 3]], vec![vec![2, 3, 4]]]).unwrap();
        let expected = [(1, 3), (2, 1), (3, 2), (4, 3), (5, 2)].iter().fold(Monomial::one(), |acc, &(i, e)| &acc * &Monomial::y(i, e));
        assert_eq!(weight_y(&q), expected);
        assert_eq!(weight_y(&q).y_degree(), 11);
        assert_eq!(weight_y(&Ssot::empty()), Monomial::one());
    }

    #[test]
    fn schur_examples() {
        let s21 = schur_poly(&p(&[2, 1]), 3, Family::Y);
        let expected = &(&(&y(1) + &y(2)) * &(&y(1) + &y(3))) * &(&y(2) + &y(3));
        assert_eq!(s21, expected);
        assert_eq!(schur_poly(&Partition::empty(), 3, Family::Y), LaurentPolynomial::one());
        assert_eq!(schur_poly(&p(&[1]), 2, Family::Y), &y(1) + &y(2));
        assert!(is_symmetric(&s21, Family::Y, 3));
        assert!(!is_symmetric(&y(1), Family::Y, 2));
    }

    #[test]
    fn symplectic_schur() {
        let sp1 = sp_poly(&p(&[1]), 2);
        assert_eq!(sp1, [x(1, 1), x(1, -1), x(2, 1), x(2, -1)].iter().fold(LaurentPolynomial::zero(), |a, b| &a + b));
        assert_eq!(sp_poly(&p(&[1, 1]), 2).len(), 5);
        for k in 2..=3 {
            for shape in [p(&[1]), p(&[2]), p(&[1, 1]), p(&[2, 1])] {
                let sp = sp_poly(&shape, k);
                assert!(is_symmetric(&sp, Family::X, k), "{shape} k={k}");
                assert!(is_bar_invariant(&sp, k), "{shape} k={k}");
            }
        }
    }

    #[test]
    fn ssot_polynomials() {
        let shape = p(&[2, 1]);
        let e2 = elementary_poly(2, 3, Family::Y);
        assert_eq!(e2, &(&(&y(1) * &y(2)) + &(&y(1) * &y(3))) + &(&y(2) * &y(3)));
        assert_eq!(ssot_poly(&shape, 3, 5), &e2 * &schur_poly(&shape, 3, Family::Y));
        assert_eq!(ssot_poly(&shape, 3, 3), schur_poly(&shape, 3, Family::Y));
        assert_eq!(ssot_poly(&Partition::empty(), 3, 0), LaurentPolynomial::one());
    }

    #[test]
    fn small_cauchy() {
        assert_eq!(cauchy_product_truncated(2, 0), LaurentPolynomial::one());
        let linear = &LaurentPolynomial::one() + &(&(&x(1, 1) + &x(1, -1)) * &y(1));
        assert_eq!(cauchy_product_truncated(1, 1), linear);
        assert_eq!(cauchy_rhs_a(1, 1), linear);
        assert_eq!(cauchy_rhs_c(1, 1), linear);
        assert_eq!(cauchy_rhs_a(2, 0), LaurentPolynomial::one());
        assert_eq!(cauchy_rhs_c(1, 2), cauchy_product_truncated(1, 2));
        assert_eq!(cauchy_rhs_a(1, 3), cauchy_product_truncated(1, 3));
    }

    #[test]
    fn json_form() {
        let poly = &(&x(1, -1) * &y(2)) + &LaurentPolynomial::from_terms([(Monomial::one(), BigInt::from(3))]);
        let json = serde_json::to_string(&poly).unwrap();
        assert_eq!(json, r#"[{"coeff":3,"x":{},"y":{}},{"coeff":1,"x":{"1":-1},"y":{"2":1}}]"#);
        assert_eq!(serde_json::from_str::<LaurentPolynomial>(&json).unwrap(), poly);
        let huge = LaurentPolynomial::from_terms([(Monomial::one(), BigInt::from(u64::MAX) * 4)]);
        let json = serde_json::to_string(&huge).unwrap();
        assert!(json.contains("\"73786976294838206460\""));
        assert_eq!(serde_json::from_str::<LaurentPolynomial>(&json).unwrap(), huge);
    }
}
