use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::sync::{Arc, LazyLock, Mutex};

use num_traits::{One, Signed, Zero};

use super::Rational;
use crate::error::{Error, Result};

/// A named indeterminate.
///
/// Names are totally ordered by a natural order: each name is split into
/// maximal runs of ASCII digits and non-digits, digit runs compare
/// numerically and other runs compare bytewise. So `t_2 < t_10 < x_1`.
/// Ties (e.g. `x01` vs `x1`) fall back to plain bytewise comparison.
#[derive(Clone)]
pub struct Var(Arc<VarInner>);

struct VarInner {
    name: String,
    key: Vec<Chunk>,
}

#[derive(PartialEq, Eq)]
enum Chunk {
    Text(String),
    Digits(String),
}

impl Ord for Chunk {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Chunk::Text(a), Chunk::Text(b)) => a.cmp(b),
            (Chunk::Digits(a), Chunk::Digits(b)) => a.len().cmp(&b.len()).then_with(|| a.cmp(b)),
            (Chunk::Digits(_), Chunk::Text(_)) => Ordering::Less,
            (Chunk::Text(_), Chunk::Digits(_)) => Ordering::Greater,
        }
    }
}

impl PartialOrd for Chunk {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn natural_key(name: &str) -> Vec<Chunk> {
    let mut key = Vec::new();
    let mut cur = String::new();
    let mut in_digits = false;
    for c in name.chars() {
        let d = c.is_ascii_digit();
        if !cur.is_empty() && d != in_digits {
            key.push(make_chunk(std::mem::take(&mut cur), in_digits));
        }
        in_digits = d;
        cur.push(c);
    }
    if !cur.is_empty() {
        key.push(make_chunk(cur, in_digits));
    }
    key
}

fn make_chunk(s: String, digits: bool) -> Chunk {
    if digits {
        let trimmed = s.trim_start_matches('0');
        Chunk::Digits(if trimmed.is_empty() { "0".to_string() } else { trimmed.to_string() })
    } else {
        Chunk::Text(s)
    }
}

static INTERNER: LazyLock<Mutex<HashMap<String, Var>>> = LazyLock::new(|| Mutex::new(HashMap::new()));

impl Var {
    pub fn new(name: &str) -> Var {
        let mut table = INTERNER.lock().unwrap_or_else(|e| e.into_inner());
        if let Some(v) = table.get(name) {
            return v.clone();
        }
        let v = Var(Arc::new(VarInner { name: name.to_string(), key: natural_key(name) }));
        table.insert(name.to_string(), v.clone());
        v
    }

    pub fn name(&self) -> &str {
        &self.0.name
    }
}

impl PartialEq for Var {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.name == other.0.name
    }
}

impl Eq for Var {}

impl Hash for Var {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.name.hash(state)
    }
}

impl Ord for Var {
    fn cmp(&self, other: &Self) -> Ordering {
        if Arc::ptr_eq(&self.0, &other.0) {
            return Ordering::Equal;
        }
        self.0.key.cmp(&other.0.key).then_with(|| self.0.name.cmp(&other.0.name))
    }
}

impl PartialOrd for Var {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.name)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.name)
    }
}

/// A monomial: power product of indeterminates, sorted by variable order,
/// all exponents positive.
///
/// Ordered graded-lexicographically: total degree first, then the exponent of
/// the smallest variable is the most significant.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<(Var, u32)>);

impl Monomial {
    pub fn one() -> Monomial {
        Monomial(Vec::new())
    }

    pub fn var(v: Var, exp: u32) -> Monomial {
        if exp == 0 {
            Monomial::one()
        } else {
            Monomial(vec![(v, exp)])
        }
    }

    /// Builds a monomial from arbitrary (variable, exponent) pairs, merging
    /// repeats and dropping zero exponents.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (Var, u32)>) -> Monomial {
        let mut map: BTreeMap<Var, u32> = BTreeMap::new();
        for (v, e) in pairs {
            *map.entry(v).or_insert(0) += e;
        }
        Monomial(map.into_iter().filter(|(_, e)| *e > 0).collect())
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|(_, e)| e).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn factors(&self) -> &[(Var, u32)] {
        &self.0
    }

    pub fn exponent(&self, v: &Var) -> u32 {
        self.0.iter().find(|(w, _)| w == v).map_or(0, |(_, e)| *e)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0.clone(), a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    fn lex_cmp(&self, other: &Monomial) -> Ordering {
        let (a, b) = (&self.0, &other.0);
        let (mut i, mut j) = (0, 0);
        loop {
            match (a.get(i), b.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some((va, ea)), Some((vb, eb))) => match va.cmp(vb) {
                    Ordering::Equal => {
                        if ea != eb {
                            return ea.cmp(eb);
                        }
                        i += 1;
                        j += 1;
                    }
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Greater => return Ordering::Less,
                },
            }
        }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.lex_cmp(other))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (k, (v, e)) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Exact multivariate polynomial with rational coefficients.
///
/// Canonical form: no zero coefficients stored, so the zero polynomial is the
/// empty map and equality is structural.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Scalar {
    terms: BTreeMap<Monomial, Rational>,
}

impl Scalar {
    pub fn zero() -> Scalar {
        Scalar::default()
    }

    pub fn one() -> Scalar {
        Scalar::from_rational(Rational::one())
    }

    pub fn from_integer(n: i64) -> Scalar {
        Scalar::from_rational(Rational::from_integer(n.into()))
    }

    pub fn from_rational(r: Rational) -> Scalar {
        Scalar::term(r, Monomial::one())
    }

    pub fn term(coeff: Rational, mono: Monomial) -> Scalar {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(mono, coeff);
        }
        Scalar { terms }
    }

    pub fn var(name: &str) -> Scalar {
        Scalar::term(Rational::one(), Monomial::var(Var::new(name), 1))
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Scalar {
        let mut s = Scalar::zero();
        for (m, c) in terms {
            s.add_term(m, c);
        }
        s
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.constant().is_some_and(|c| c.is_one())
    }

    /// The value if this polynomial is a constant (including zero).
    pub fn constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Monomial::degree)
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, mono: &Monomial) -> Rational {
        self.terms.get(mono).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn variables(&self) -> Vec<Var> {
        let mut vs: Vec<Var> = self
            .terms
            .keys()
            .flat_map(|m| m.factors().iter().map(|(v, _)| v.clone()))
            .collect();
        vs.sort();
        vs.dedup();
        vs
    }

    pub fn add_term(&mut self, mono: Monomial, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Scalar {
        if c.is_zero() {
            return Scalar::zero();
        }
        Scalar { terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect() }
    }

    pub fn pow(&self, n: u32) -> Scalar {
        let mut acc = Scalar::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Evaluates at a rational point. Every variable occurring in `self` must
    /// be assigned.
    pub fn eval(&self, assignment: &HashMap<Var, Rational>) -> Result<Rational> {
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (x, e) in m.factors() {
                let val = assignment
                    .get(x)
                    .ok_or_else(|| Error::UnboundIndeterminate(x.name().to_string()))?;
                v *= num_traits::pow(val.clone(), *e as usize);
            }
            total += v;
        }
        Ok(total)
    }

    /// Replaces assigned variables by polynomials; unassigned ones stay.
    pub fn substitute(&self, assignment: &HashMap<Var, Scalar>) -> Scalar {
        let mut total = Scalar::zero();
        for (m, c) in &self.terms {
            let mut kept = Vec::new();
            let mut factor = Scalar::from_rational(c.clone());
            for (x, e) in m.factors() {
                match assignment.get(x) {
                    Some(val) => factor = &factor * &val.pow(*e),
                    None => kept.push((x.clone(), *e)),
                }
            }
            total += &factor * &Scalar::term(Rational::one(), Monomial(kept));
        }
        total
    }

    /// Total degree of each term counted only over variables selected by
    /// `pred`; keeps the terms whose such degree is at most `max`.
    pub fn truncate_in(&self, pred: impl Fn(&Var) -> bool, max: u32) -> Scalar {
        Scalar {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.factors().iter().filter(|(v, _)| pred(v)).map(|(_, e)| e).sum::<u32>() <= max)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Scalar {
        Scalar::from_integer(n)
    }
}

impl From<Rational> for Scalar {
    fn from(r: Rational) -> Scalar {
        Scalar::from_rational(r)
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(mut self, rhs: Scalar) -> Scalar {
        self += &rhs;
        self
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl AddAssign for Scalar {
    fn add_assign(&mut self, rhs: Scalar) {
        if self.terms.is_empty() {
            *self = rhs;
            return;
        }
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c.clone());
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(mut self, rhs: Scalar) -> Scalar {
        self -= &rhs;
        self
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect() }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(mut self) -> Scalar {
        for c in self.terms.values_mut() {
            *c = -c.clone();
        }
        self
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        if self.is_zero() || rhs.is_zero() {
            return Scalar::zero();
        }
        if let Some(c) = self.constant() {
            return rhs.scale(&c);
        }
        if let Some(c) = rhs.constant() {
            return self.scale(&c);
        }
        let mut out = Scalar::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        &self * &rhs
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(n: &str) -> Scalar {
        Scalar::var(n)
    }

    #[test]
    fn natural_variable_order() {
        let mut names = vec!["x_1", "t_10", "t_2", "beta", "t_1", "x_1^(2)"];
        names.sort_by_key(|n| Var::new(n));
        assert_eq!(names, vec!["beta", "t_1", "t_2", "t_10", "x_1", "x_1^(2)"]);
    }

    #[test]
    fn difference_of_squares() {
        let x = v("x");
        let one = Scalar::one();
        let p = &(&x + &one) * &(&x - &one);
        assert_eq!(p, &x.pow(2) - &one);
        assert_eq!(p.to_string(), "x^2 - 1");
    }

    #[test]
    fn zero_absorbs() {
        let p = &v("x") + &v("y");
        assert!((&Scalar::zero() * &p).is_zero());
    }

    #[test]
    fn expansion_matches_hand_computation() {
        let (x1, x2, t1) = (v("x1"), v("x2"), v("t1"));
        let s = &x1 + &x2;
        let p = &s * &(&s + &t1);
        let expected = &(&(&(&x1.pow(2) + &(&x1 * &x2).scale(&Rational::from_integer(2.into()))) + &x2.pow(2))
            + &(&t1 * &x1))
            + &(&t1 * &x2);
        assert_eq!(p, expected);
    }

    #[test]
    fn eval_examples() {
        let x = Var::new("x");
        let p = &v("x").pow(2) - &Scalar::one();
        let a = HashMap::from([(x, Rational::from_integer(3.into()))]);
        assert_eq!(p.eval(&a).unwrap(), Rational::from_integer(8.into()));

        let c = Scalar::from_rational(Rational::new(5.into(), 2.into()));
        assert_eq!(c.eval(&HashMap::new()).unwrap(), Rational::new(5.into(), 2.into()));

        let (x1, x2, t1) = (v("x1"), v("x2"), v("t1"));
        let q = &(&x1 * &x2) + &(&t1 * &(&x1 + &x2));
        let a = HashMap::from([
            (Var::new("x1"), Rational::from_integer(1.into())),
            (Var::new("x2"), Rational::from_integer(2.into())),
            (Var::new("t1"), Rational::from_integer((-1).into())),
        ]);
        assert_eq!(q.eval(&a).unwrap(), Rational::from_integer((-1).into()));
    }

    #[test]
    fn eval_reports_unbound() {
        let err = v("zz").eval(&HashMap::new()).unwrap_err();
        assert_eq!(err, Error::UnboundIndeterminate("zz".into()));
    }

    #[test]
    fn degree_is_additive() {
        let p = &v("a").pow(2) + &v("b");
        let q = &(&v("a") * &v("c")).pow(2) - &Scalar::one();
        assert_eq!((&p * &q).degree(), Some(6));
        assert_eq!(Scalar::zero().degree(), None);
    }

    #[test]
    fn grlex_orders_terms() {
        let p = &(&v("x") + &v("y").pow(2)) + &Scalar::one();
        let order: Vec<String> = p.terms().map(|(m, _)| m.to_string()).collect();
        assert_eq!(order, vec!["1", "x", "y^2"]);
        let q = &(&v("x") * &v("y")) + &v("x").pow(2);
        let order: Vec<String> = q.terms().map(|(m, _)| m.to_string()).collect();
        assert_eq!(order, vec!["x*y", "x^2"]);
    }
}
