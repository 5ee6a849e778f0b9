//! Sparse integer polynomials in a fixed number of variables, and the
//! generating functions of the tableau families.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::domino_tableaux::{for_each_domino_tableau, DominoTableau};
use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::tableaux::{for_each_tableau, Family, Tableau};

/// Exponent vector `x1^e1 x2^e2 ...`, ordered graded-lex: lower degree first,
/// then lexicographically larger vectors first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.n(), other.n(), "monomials in different variable counts");
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Exchange the exponents of variables `i` and `j` (0-based).
    pub fn swap(&self, i: usize, j: usize) -> Monomial {
        let mut e = self.0.clone();
        e.swap(i, j);
        Monomial(e)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate().filter(|(_, &e)| e > 0) {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, e)?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

/// Exact polynomial; zero coefficients are never stored. Arithmetic panics on
/// `i128` overflow.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    n: usize,
    terms: BTreeMap<Monomial, i128>,
}

impl Polynomial {
    pub fn zero(n: usize) -> Self {
        Polynomial { n, terms: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Self {
        Polynomial::monomial(Monomial::one(n), 1)
    }

    pub fn monomial(m: Monomial, coeff: i128) -> Self {
        let mut p = Polynomial::zero(m.n());
        p.add_term(m, coeff);
        p
    }

    /// The variable `x_i`, 1-based.
    pub fn var(n: usize, i: usize) -> Self {
        assert!((1..=n).contains(&i));
        let mut e = vec![0; n];
        e[i - 1] = 1;
        Polynomial::monomial(Monomial(e), 1)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, i128)> + '_ {
        self.terms.iter().map(|(m, &c)| (m, c))
    }

    pub fn coeff(&self, m: &Monomial) -> i128 {
        self.terms.get(m).copied().unwrap_or(0)
    }

    /// Coefficient of the monomial with the given exponents.
    pub fn coeff_of(&self, exps: &[u32]) -> i128 {
        self.coeff(&Monomial(exps.to_vec()))
    }

    pub fn add_term(&mut self, m: Monomial, coeff: i128) {
        assert_eq!(m.n(), self.n, "monomial has the wrong variable count");
        if coeff == 0 {
            return;
        }
        let entry = self.terms.entry(m);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let c = o.get().checked_add(coeff).expect("coefficient overflow");
                if c == 0 {
                    o.remove();
                } else {
                    *o.get_mut() = c;
                }
            }
        }
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        if self.n != other.n {
            return Err(Error::VariableMismatch(self.n, other.n));
        }
        let mut out = Polynomial::zero(self.n);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_term(a.mul(b), ca.checked_mul(*cb).expect("coefficient overflow"));
            }
        }
        Ok(out)
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        if self.n != other.n {
            return Err(Error::VariableMismatch(self.n, other.n));
        }
        let mut out = self.clone();
        for (m, &c) in &other.terms {
            out.add_term(m.clone(), c);
        }
        Ok(out)
    }

    /// The terms of total degree `d`.
    pub fn homogeneous_component(&self, d: u32) -> Polynomial {
        Polynomial {
            n: self.n,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, &c)| (m.clone(), c))
                .collect(),
        }
    }

    pub fn min_degree(&self) -> Option<u32> {
        self.terms.keys().next().map(Monomial::degree)
    }

    /// Invariant under every transposition of adjacent variables.
    pub fn is_symmetric(&self) -> bool {
        (1..self.n).all(|i| {
            self.terms
                .iter()
                .all(|(m, &c)| self.coeff(&m.swap(i - 1, i)) == c)
        })
    }

    /// Graded-lex smallest monomial whose coefficients differ.
    pub fn first_difference(&self, other: &Polynomial) -> Option<(Monomial, i128, i128)> {
        let keys: std::collections::BTreeSet<&Monomial> =
            self.terms.keys().chain(other.terms.keys()).collect();
        keys.into_iter()
            .map(|m| (m, self.coeff(m), other.coeff(m)))
            .find(|(_, a, b)| a != b)
            .map(|(m, a, b)| (m.clone(), a, b))
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.checked_add(rhs).expect("variable counts differ")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self + &(-rhs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(m, &c)| (m.clone(), c.checked_neg().expect("coefficient overflow")))
                .collect(),
        }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.checked_mul(rhs).expect("variable counts differ")
    }
}

impl fmt::Display for Polynomial {
    /// One `c * monomial` term per line.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str("\n")?;
            }
            write!(f, "{c} * {m}")?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct RawTerm {
    exps: Vec<u32>,
    #[serde(with = "coefficient")]
    coeff: i128,
}

/// Coefficients are JSON integers when they fit in 64 bits and decimal
/// strings otherwise.
mod coefficient {
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(c: &i128, s: S) -> Result<S::Ok, S::Error> {
        match i64::try_from(*c) {
            Ok(small) => s.serialize_i64(small),
            Err(_) => s.serialize_str(&c.to_string()),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<i128, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Small(i64),
            Big(String),
        }
        match Raw::deserialize(de)? {
            Raw::Small(v) => Ok(v.into()),
            Raw::Big(s) => s.parse().map_err(serde::de::Error::custom),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct RawPolynomial {
    n: usize,
    terms: Vec<RawTerm>,
}

impl Serialize for Polynomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RawPolynomial {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(m, &coeff)| RawTerm { exps: m.0.clone(), coeff })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let raw = RawPolynomial::deserialize(de)?;
        let mut p = Polynomial::zero(raw.n);
        for t in raw.terms {
            if t.exps.len() != raw.n {
                return Err(serde::de::Error::custom("exponent vector length differs from n"));
            }
            if t.coeff == 0 {
                return Err(serde::de::Error::custom("zero coefficient"));
            }
            if p.terms.insert(Monomial(t.exps), t.coeff).is_some() {
                return Err(serde::de::Error::custom("repeated monomial"));
            }
        }
        Ok(p)
    }
}

pub fn poly_mul(p: &Polynomial, q: &Polynomial) -> Result<Polynomial> {
    p.checked_mul(q)
}

/// Sign of a flat tableau in its generating function.
pub fn tableau_sign(t: &Tableau) -> i128 {
    let excess = match t.family() {
        Family::Plain | Family::Shifted => return 1,
        Family::SetValued => t.cardinality() as i64 - t.shape().size() as i64,
        Family::ShiftedSetValued => t.cardinality() as i64 - t.shape().up_size() as i64,
    };
    if excess % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Sign of a domino tableau in its generating function.
pub fn domino_sign(t: &DominoTableau) -> i128 {
    let excess = match t.family() {
        Family::Plain | Family::Shifted => return 1,
        Family::SetValued => t.cardinality() as i64 - (t.shape().size() / 2) as i64,
        Family::ShiftedSetValued => t.cardinality() as i64 - t.up_count() as i64,
    };
    if excess % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `s`, `G`, `Q` or `GQ` of `shape` in `n` variables, by family.
pub fn genfun(family: Family, shape: &Partition, n: usize) -> Result<Polynomial> {
    let mut acc: BTreeMap<Monomial, i128> = BTreeMap::new();
    let mut err = None;
    for_each_tableau(family, shape, n as u32, |t| match t.weight(n) {
        Ok(m) => *acc.entry(m).or_insert(0) += tableau_sign(t),
        Err(e) => err = Some(e),
    })?;
    if let Some(e) = err {
        return Err(e);
    }
    Ok(from_accumulated(n, acc))
}

/// Signed weight sum over domino tableaux of `shape`; shifted families count
/// one tableau per equivalence class.
pub fn domino_genfun(family: Family, shape: &Partition, n: usize) -> Result<Polynomial> {
    let mut acc: BTreeMap<Monomial, i128> = BTreeMap::new();
    let mut err = None;
    for_each_domino_tableau(family, shape, n as u32, |t| match t.weight(n) {
        Ok(m) => *acc.entry(m).or_insert(0) += domino_sign(t),
        Err(e) => err = Some(e),
    })?;
    if let Some(e) = err {
        return Err(e);
    }
    Ok(from_accumulated(n, acc))
}

fn from_accumulated(n: usize, acc: BTreeMap<Monomial, i128>) -> Polynomial {
    Polynomial { n, terms: acc.into_iter().filter(|(_, c)| *c != 0).collect() }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn x(n: usize, i: usize) -> Polynomial {
        Polynomial::var(n, i)
    }

    #[test]
    fn products() {
        assert_eq!(&x(2, 1) * &x(2, 2), Polynomial::monomial(Monomial::new(vec![1, 1]), 1));
        let s = &x(2, 1) + &x(2, 2);
        let sq = &s * &s;
        assert_eq!(sq.coeff_of(&[2, 0]), 1);
        assert_eq!(sq.coeff_of(&[1, 1]), 2);
        assert_eq!(sq.coeff_of(&[0, 2]), 1);
        assert_eq!(sq.len(), 3);
        assert!(matches!(poly_mul(&x(2, 1), &x(3, 1)), Err(Error::VariableMismatch(2, 3))));
        assert!((&s - &s).is_zero());
    }

    #[test]
    fn pieri_in_two_variables() {
        let s1 = genfun(Family::Plain, &part(&[1]), 2).unwrap();
        let rhs = &genfun(Family::Plain, &part(&[2]), 2).unwrap()
            + &genfun(Family::Plain, &part(&[1, 1]), 2).unwrap();
        assert_eq!(&s1 * &s1, rhs);
    }

    #[test]
    fn graded_lex_order() {
        let mut p = Polynomial::zero(2);
        for e in [[0, 2], [1, 0], [2, 0], [1, 1], [0, 1]] {
            p.add_term(Monomial::new(e.to_vec()), 1);
        }
        let order: Vec<Vec<u32>> = p.terms().map(|(m, _)| m.exponents().to_vec()).collect();
        assert_eq!(order, vec![vec![1, 0], vec![0, 1], vec![2, 0], vec![1, 1], vec![0, 2]]);
        assert_eq!(p.to_string().lines().next(), Some("1 * x1"));
    }

    #[test]
    fn schur_and_grothendieck_of_21() {
        let s = genfun(Family::Plain, &part(&[2, 1]), 3).unwrap();
        assert_eq!(s.coeff_of(&[2, 1, 0]), 1);
        assert_eq!(s.coeff_of(&[1, 1, 1]), 2);
        assert_eq!(s.terms().map(|(_, c)| c).sum::<i128>(), 8);
        let g = genfun(Family::SetValued, &part(&[2, 1]), 3).unwrap();
        assert_eq!(g.coeff_of(&[2, 1, 0]), 1);
        assert_eq!(g.coeff_of(&[1, 1, 1]), 2);
        assert_eq!(g.coeff_of(&[2, 2, 0]), -1);
        assert_eq!(g.coeff_of(&[2, 1, 1]), -3);
        assert_eq!(g.homogeneous_component(3), s);
    }

    #[test]
    fn q_functions() {
        let q = genfun(Family::Shifted, &part(&[3, 3, 3]), 3).unwrap();
        assert_eq!(q.coeff_of(&[3, 2, 1]), 8);
        let gq = genfun(Family::ShiftedSetValued, &part(&[2, 2]), 2).unwrap();
        assert_eq!(gq.coeff_of(&[2, 1]), 4);
        assert_eq!(gq.coeff_of(&[3, 1]), -2);
        assert!(q.is_symmetric() && gq.is_symmetric());
    }

    #[test]
    fn empty_shape_is_one() {
        for f in Family::ALL {
            assert_eq!(genfun(f, &Partition::empty(), 3).unwrap(), Polynomial::one(3));
        }
    }

    #[test]
    fn asymmetric_detected() {
        assert!(!x(2, 1).is_symmetric());
        assert!((&x(3, 1) + &(&x(3, 2) + &x(3, 3))).is_symmetric());
    }

    #[test]
    fn first_difference_is_smallest() {
        let a = &x(2, 1) + &(&x(2, 1) * &x(2, 2));
        let b = &x(2, 2) + &(&x(2, 1) * &x(2, 2));
        let (m, ca, cb) = a.first_difference(&b).unwrap();
        assert_eq!((m.exponents(), ca, cb), (&[1, 0][..], 1, 0));
        assert!(a.first_difference(&a).is_none());
    }

    #[test]
    fn serde_roundtrip() {
        let g = genfun(Family::SetValued, &part(&[2, 1]), 2).unwrap();
        let s = serde_json::to_string(&g).unwrap();
        let back: Polynomial = serde_json::from_str(&s).unwrap();
        assert_eq!(back, g);
        assert!(serde_json::from_str::<Polynomial>(r#"{"n":2,"terms":[{"exps":[1],"coeff":1}]}"#).is_err());
        let big = Polynomial::monomial(Monomial::one(1), i128::from(i64::MAX) * 4);
        let text = serde_json::to_string(&big).unwrap();
        assert_eq!(serde_json::from_str::<Polynomial>(&text).unwrap(), big);
    }

    #[test]
    #[should_panic(expected = "overflow")]
    fn overflow_panics() {
        let big = Polynomial::monomial(Monomial::one(1), i128::MAX);
        let _ = &big + &big;
    }
}
