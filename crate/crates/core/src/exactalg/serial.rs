//! JSON form of [`Scalar`]: a list of `{"coefficient": "p/q", "monomial": {name: exp}}`
//! in descending graded-lex order, monomial keys in variable order.

use serde::de::{self, Deserializer};
use serde::ser::{SerializeMap, SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

use super::{Monomial, Rational, Scalar, Var};

struct MonomialJson<'a>(&'a Monomial);

impl Serialize for MonomialJson<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.factors().len()))?;
        for (v, e) in self.0.factors() {
            map.serialize_entry(v.name(), e)?;
        }
        map.end()
    }
}

#[derive(Serialize)]
struct TermJson<'a> {
    coefficient: String,
    monomial: MonomialJson<'a>,
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.len()))?;
        for (m, c) in self.terms().rev() {
            seq.serialize_element(&TermJson { coefficient: c.to_string(), monomial: MonomialJson(m) })?;
        }
        seq.end()
    }
}

#[derive(Deserialize)]
struct TermIn {
    coefficient: String,
    #[serde(default)]
    monomial: std::collections::BTreeMap<String, u32>,
}

pub(crate) fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim().parse().ok()?, d.trim().parse().ok()?),
        None => (s.parse().ok()?, num_bigint::BigInt::from(1)),
    };
    if den == num_bigint::BigInt::from(0) {
        return None;
    }
    Some(Rational::new(num, den))
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Scalar, D::Error> {
        let terms: Vec<TermIn> = Vec::deserialize(d)?;
        let mut out = Scalar::zero();
        for t in terms {
            let c = parse_rational(&t.coefficient)
                .ok_or_else(|| de::Error::custom(format!("bad coefficient `{}`", t.coefficient)))?;
            let m = Monomial::from_pairs(t.monomial.iter().map(|(n, e)| (Var::new(n), *e)));
            out.add_term(m, c);
        }
        Ok(out)
    }
}
