use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, LazyLock, RwLock};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exactalg::{Ring, Scalar};
use crate::shapes::{Alphabet, Partition};
use crate::supersym::supersym_schur;

/// Coefficients indexed by partitions, in some basis of symmetric functions.
pub type Coefficients = BTreeMap<Partition, Scalar>;

fn add_into(map: &mut Coefficients, key: Partition, c: &Scalar) {
    if c.is_zero() {
        return;
    }
    let slot = map.entry(key.clone()).or_default();
    *slot += c;
    if slot.is_zero() {
        map.remove(&key);
    }
}

/// An element of `Λ(X)` in the Schur basis. With a truncation `D` it stands
/// for an element of the completion of which only the coefficients with
/// `|μ| ≤ D` are known.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct SymFunc {
    terms: Coefficients,
    truncation: Option<usize>,
}

impl SymFunc {
    pub fn zero() -> SymFunc {
        SymFunc::default()
    }

    pub fn one() -> SymFunc {
        SymFunc::schur(Partition::empty())
    }

    /// `s_λ`.
    pub fn schur(lambda: Partition) -> SymFunc {
        let mut f = SymFunc::zero();
        f.terms.insert(lambda, Scalar::one());
        f
    }

    /// Drops zero coefficients and, under a truncation, everything above it.
    pub fn from_terms(terms: Coefficients, truncation: Option<usize>) -> SymFunc {
        let terms = terms
            .into_iter()
            .filter(|(p, c)| !c.is_zero() && truncation.is_none_or(|d| p.size() <= d))
            .collect();
        SymFunc { terms, truncation }
    }

    pub fn truncated(&self, d: usize) -> SymFunc {
        let d = self.truncation.map_or(d, |e| e.min(d));
        SymFunc::from_terms(self.terms.clone(), Some(d))
    }

    pub fn truncation(&self) -> Option<usize> {
        self.truncation
    }

    pub fn terms(&self) -> &Coefficients {
        &self.terms
    }

    pub fn coefficient(&self, mu: &Partition) -> Scalar {
        self.terms.get(mu).cloned().unwrap_or_default()
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

    /// Largest `|μ|` in the support.
    pub fn max_degree(&self) -> usize {
        self.terms.keys().map(Partition::size).max().unwrap_or(0)
    }

    /// Sum; the truncation is the smaller of the two.
    pub fn add(&self, other: &SymFunc) -> SymFunc {
        let truncation = match (self.truncation, other.truncation) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        let mut terms = self.terms.clone();
        for (p, c) in &other.terms {
            add_into(&mut terms, p.clone(), c);
        }
        SymFunc::from_terms(terms, truncation)
    }

    pub fn scale(&self, c: &Scalar) -> SymFunc {
        SymFunc::from_terms(self.terms.iter().map(|(p, v)| (p.clone(), v * c)).collect(), self.truncation)
    }

    pub fn sub(&self, other: &SymFunc) -> SymFunc {
        self.add(&other.scale(&Scalar::from_integer(-1)))
    }
}

/// `ν ⊇ μ` with `ν/μ` a horizontal strip of `n` boxes.
pub fn horizontal_strips(mu: &Partition, n: usize) -> Vec<Partition> {
    fn go(mu: &Partition, i: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if i > mu.len() + 1 {
            if left == 0 {
                out.push(Partition::new(cur.clone()).expect("strip rows decrease"));
            }
            return;
        }
        let lo = mu.part(i);
        let hi = if i == 1 { lo + left } else { mu.part(i - 1).min(lo + left) };
        for v in lo..=hi {
            cur.push(v);
            go(mu, i + 1, left - (v - lo), cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(mu, 1, n, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// `f · h_n(X)` by the Pieri rule. A truncation `D` becomes `D + n`.
pub fn pieri_mult_h(f: &SymFunc, n: usize) -> SymFunc {
    let mut terms = Coefficients::new();
    for (mu, c) in &f.terms {
        for nu in horizontal_strips(mu, n) {
            add_into(&mut terms, nu, c);
        }
    }
    SymFunc::from_terms(terms, f.truncation.map(|d| d + n))
}

static H_TO_SCHUR: LazyLock<RwLock<HashMap<Partition, Arc<SymFunc>>>> = LazyLock::new(Default::default);

/// `h_ν(X) = h_{ν_1} h_{ν_2} ⋯` in the Schur basis.
pub fn h_product_in_schur(nu: &Partition) -> Arc<SymFunc> {
    if let Some(f) = H_TO_SCHUR.read().expect("cache lock").get(nu) {
        return Arc::clone(f);
    }
    let f = Arc::new(match nu.parts().split_last() {
        None => SymFunc::one(),
        Some((&last, rest)) => {
            let head = Partition::new(rest.to_vec()).expect("prefix of a partition");
            pieri_mult_h(&h_product_in_schur(&head), last)
        }
    });
    H_TO_SCHUR.write().expect("cache lock").insert(nu.clone(), Arc::clone(&f));
    f
}

/// A polynomial in the generators `h_1(X), h_2(X), …` with Scalar
/// coefficients; monomials `h_{ν_1} ⋯ h_{ν_k}` are keyed by the partition `ν`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct HPoly(BTreeMap<Partition, Scalar>);

impl HPoly {
    pub fn constant(c: Scalar) -> HPoly {
        let mut m = BTreeMap::new();
        if !c.is_zero() {
            m.insert(Partition::empty(), c);
        }
        HPoly(m)
    }

    /// `c · h_n(X)`; zero for `n < 0`.
    pub fn h(n: i64, c: Scalar) -> HPoly {
        if n < 0 || c.is_zero() {
            return HPoly::default();
        }
        let key = if n == 0 { Partition::empty() } else { Partition::new(vec![n as usize]).expect("one part") };
        HPoly(BTreeMap::from([(key, c)]))
    }

    pub fn terms(&self) -> &BTreeMap<Partition, Scalar> {
        &self.0
    }

    /// The value at `X = 0`, where every `h_n` with `n > 0` vanishes.
    pub fn at_zero(&self) -> Scalar {
        self.0.get(&Partition::empty()).cloned().unwrap_or_default()
    }

    pub fn to_schur(&self) -> SymFunc {
        let mut terms = Coefficients::new();
        for (nu, c) in &self.0 {
            for (mu, k) in h_product_in_schur(nu).terms() {
                add_into(&mut terms, mu.clone(), &(c * k));
            }
        }
        SymFunc::from_terms(terms, None)
    }
}

impl Ring for HPoly {
    fn zero() -> Self {
        HPoly::default()
    }
    fn one() -> Self {
        HPoly::constant(Scalar::one())
    }
    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }
    fn add(&self, other: &Self) -> Self {
        let mut m = self.0.clone();
        for (p, c) in &other.0 {
            add_into(&mut m, p.clone(), c);
        }
        HPoly(m)
    }
    fn mul(&self, other: &Self) -> Self {
        let mut m = BTreeMap::new();
        for (a, x) in &self.0 {
            for (b, y) in &other.0 {
                let mut parts: Vec<usize> = a.parts().iter().chain(b.parts()).copied().collect();
                parts.sort_unstable_by(|p, q| q.cmp(p));
                add_into(&mut m, Partition::new(parts).expect("sorted parts"), &(x * y));
            }
        }
        HPoly(m)
    }
    fn neg(&self) -> Self {
        HPoly(self.0.iter().map(|(p, c)| (p.clone(), -c)).collect())
    }
}

/// `⟨f, g⟩ = Σ_μ f_μ g_μ`.
///
/// A truncated argument only determines the pairing against functions
/// supported at or below its truncation; pairing two truncated elements is
/// rejected.
pub fn hall_inner(f: &SymFunc, g: &SymFunc) -> Result<Scalar> {
    match (f.truncation, g.truncation) {
        (Some(a), Some(b)) => {
            return Err(Error::Truncation(format!(
                "both arguments are truncated (at {a} and {b}); the pairing is not determined"
            )))
        }
        (Some(d), None) | (None, Some(d)) => {
            let other = if f.truncation.is_some() { g } else { f };
            if other.max_degree() > d {
                return Err(Error::Truncation(format!(
                    "an argument of degree {} is paired with an element truncated at {d}",
                    other.max_degree()
                )));
            }
        }
        (None, None) => {}
    }
    let (small, large) = if f.len() <= g.len() { (f, g) } else { (g, f) };
    let mut acc = Scalar::zero();
    for (mu, c) in &small.terms {
        if let Some(d) = large.terms.get(mu) {
            acc += &(c * d);
        }
    }
    Ok(acc)
}

/// `f(v_1, …, v_n, 0, 0, …)`, each `s_μ` by its Jacobi–Trudi determinant.
pub fn eval_symfunc(f: &SymFunc, vals: &[Scalar]) -> Scalar {
    let x = Alphabet::new(vals.to_vec());
    let mut acc = Scalar::zero();
    for (mu, c) in &f.terms {
        if mu.len() > vals.len() {
            continue;
        }
        acc += &(c * &supersym_schur(mu, &x, &Alphabet::empty()));
    }
    acc
}

/// `s_μ(v_1, …, v_n)` summed over semistandard tableaux; an independent check
/// on [`eval_symfunc`] for small shapes.
pub fn schur_tableau_oracle(mu: &Partition, vals: &[Scalar]) -> Result<Scalar> {
    if vals.len() > 6 || mu.size() > 8 {
        return Err(Error::Tractability(format!(
            "tableau enumeration is limited to 6 values and 8 boxes (got {} and {})",
            vals.len(),
            mu.size()
        )));
    }
    let cells: Vec<(usize, usize)> =
        mu.parts().iter().enumerate().flat_map(|(r, &len)| (0..len).map(move |c| (r, c))).collect();
    let mut filling = vec![vec![0usize; mu.part(1)]; mu.len()];
    let mut acc = Scalar::zero();
    fill(&cells, 0, vals, &mut filling, &mut acc);
    Ok(acc)
}

fn fill(cells: &[(usize, usize)], k: usize, vals: &[Scalar], t: &mut Vec<Vec<usize>>, acc: &mut Scalar) {
    if k == cells.len() {
        let mut m = Scalar::one();
        for &(r, c) in cells {
            m = &m * &vals[t[r][c] - 1];
        }
        *acc += &m;
        return;
    }
    let (r, c) = cells[k];
    let lo_row = if c > 0 { t[r][c - 1] } else { 1 };
    let lo_col = if r > 0 { t[r - 1][c] + 1 } else { 1 };
    for v in lo_row.max(lo_col)..=vals.len() {
        t[r][c] = v;
        fill(cells, k + 1, vals, t, acc);
    }
    t[r][c] = 0;
}

// ---- JSON ----

#[derive(Serialize, Deserialize)]
struct TermJson {
    partition: Partition,
    coeff: Scalar,
}

#[derive(Serialize, Deserialize)]
struct ExpansionJson {
    basis: String,
    truncation: Option<usize>,
    terms: Vec<TermJson>,
}

/// `{basis, truncation, terms: [{partition, coeff}]}` in partition order.
pub fn coefficients_json(basis: &str, truncation: Option<usize>, terms: &Coefficients) -> serde_json::Value {
    let e = ExpansionJson {
        basis: basis.to_string(),
        truncation,
        terms: terms.iter().map(|(p, c)| TermJson { partition: p.clone(), coeff: c.clone() }).collect(),
    };
    serde_json::to_value(e).expect("plain data")
}

impl Serialize for SymFunc {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        coefficients_json("schur", self.truncation, &self.terms).serialize(s)
    }
}

impl<'de> Deserialize<'de> for SymFunc {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<SymFunc, D::Error> {
        let e = ExpansionJson::deserialize(d)?;
        if e.basis != "schur" {
            return Err(serde::de::Error::custom(format!("expected the schur basis, got `{}`", e.basis)));
        }
        let terms = e.terms.into_iter().map(|t| (t.partition, t.coeff)).collect();
        Ok(SymFunc::from_terms(terms, e.truncation))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition;

    fn sum_of(ps: &[Partition]) -> SymFunc {
        ps.iter().fold(SymFunc::zero(), |acc, p| acc.add(&SymFunc::schur(p.clone())))
    }

    fn v(n: &str) -> Scalar {
        Scalar::var(n)
    }

    #[test]
    fn pieri_examples() {
        assert_eq!(pieri_mult_h(&SymFunc::one(), 2), SymFunc::schur(partition![2]));
        assert_eq!(
            pieri_mult_h(&SymFunc::schur(partition![1]), 1),
            sum_of(&[partition![2], partition![1, 1]])
        );
        assert_eq!(
            pieri_mult_h(&SymFunc::schur(partition![2]), 2),
            sum_of(&[partition![4], partition![3, 1], partition![2, 2]])
        );
    }

    #[test]
    fn pieri_raises_truncation() {
        let f = SymFunc::from_terms(SymFunc::schur(partition![1]).terms().clone(), Some(3));
        assert_eq!(pieri_mult_h(&f, 2).truncation(), Some(5));
    }

    #[test]
    fn h_products_have_kostka_coefficients() {
        // h_1^3 = s_3 + 2 s_21 + s_111
        let f = h_product_in_schur(&partition![1, 1, 1]);
        assert_eq!(f.coefficient(&partition![2, 1]), Scalar::from_integer(2));
        assert_eq!(f.coefficient(&partition![3]), Scalar::one());
        assert_eq!(f.coefficient(&partition![1, 1, 1]), Scalar::one());
    }

    #[test]
    fn hall_inner_examples() {
        for a in Partition::up_to(3) {
            for b in Partition::up_to(3) {
                let expect = if a == b { Scalar::one() } else { Scalar::zero() };
                assert_eq!(hall_inner(&SymFunc::schur(a.clone()), &SymFunc::schur(b.clone())).unwrap(), expect);
            }
        }
        assert!(hall_inner(&SymFunc::schur(partition![1]), &SymFunc::zero()).unwrap().is_zero());
    }

    #[test]
    fn hall_inner_truncation_rules() {
        let t = SymFunc::schur(partition![1]).truncated(2);
        assert!(hall_inner(&t, &SymFunc::schur(partition![2])).is_ok());
        assert!(matches!(hall_inner(&t, &SymFunc::schur(partition![2, 1])), Err(Error::Truncation(_))));
        assert!(matches!(hall_inner(&t, &t), Err(Error::Truncation(_))));
    }

    #[test]
    fn eval_examples() {
        let ab = [v("a"), v("b")];
        assert_eq!(eval_symfunc(&SymFunc::schur(partition![1]), &ab), &v("a") + &v("b"));
        assert!(eval_symfunc(&SymFunc::schur(partition![1, 1, 1]), &ab).is_zero());
        let expect = &(&v("a").pow(2) * &v("b")) + &(&v("a") * &v("b").pow(2));
        assert_eq!(eval_symfunc(&SymFunc::schur(partition![2, 1]), &ab), expect);
    }

    #[test]
    fn tableau_oracle_examples() {
        let ab = [v("a"), v("b")];
        assert_eq!(schur_tableau_oracle(&partition![1], &ab).unwrap(), &v("a") + &v("b"));
        assert_eq!(schur_tableau_oracle(&partition![2], &[v("a")]).unwrap(), v("a").pow(2));
        assert_eq!(schur_tableau_oracle(&partition![1, 1], &ab).unwrap(), &v("a") * &v("b"));
        assert!(matches!(schur_tableau_oracle(&partition![9], &ab), Err(Error::Tractability(_))));
    }

    #[test]
    fn hpoly_converts_through_pieri() {
        // h_2 h_1 - h_3 = s_21
        let p = HPoly::h(2, Scalar::one()).mul(&HPoly::h(1, Scalar::one())).add(&HPoly::h(3, Scalar::one()).neg());
        assert_eq!(p.to_schur(), SymFunc::schur(partition![2, 1]));
    }

    #[test]
    fn json_round_trip() {
        let f = SymFunc::schur(partition![2, 1]).add(&SymFunc::schur(partition![2]).scale(&v("t_1"))).truncated(4);
        let j = serde_json::to_value(&f).unwrap();
        assert_eq!(j["basis"], "schur");
        assert_eq!(j["truncation"], 4);
        let back: SymFunc = serde_json::from_value(j).unwrap();
        assert_eq!(back, f);
    }
}
