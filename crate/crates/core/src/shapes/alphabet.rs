use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exactalg::{parse_scalar, Scalar};

/// A finite tuple of ring elements, possibly empty.
///
/// Entries are arbitrary polynomials, so negated letters (`-y`) and numeric
/// specialisations are ordinary alphabets.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Alphabet(Vec<Scalar>);

impl Alphabet {
    pub fn new(entries: Vec<Scalar>) -> Alphabet {
        Alphabet(entries)
    }

    pub fn empty() -> Alphabet {
        Alphabet(Vec::new())
    }

    /// `names` as single indeterminates.
    pub fn vars<S: AsRef<str>>(names: &[S]) -> Alphabet {
        Alphabet(names.iter().map(|n| Scalar::var(n.as_ref())).collect())
    }

    /// Indeterminates `stem_1, …, stem_n`.
    pub fn indexed(stem: &str, n: usize) -> Alphabet {
        Alphabet((1..=n).map(|i| Scalar::var(&format!("{stem}_{i}"))).collect())
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Concatenation `self ∪ other`.
    pub fn union(&self, other: &Alphabet) -> Alphabet {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Alphabet(v)
    }

    pub fn negated(&self) -> Alphabet {
        Alphabet(self.0.iter().map(|e| -e).collect())
    }

    pub fn push(&mut self, entry: Scalar) {
        self.0.push(entry);
    }

    /// The alphabet as a multiset with zero letters removed, sorted. Every
    /// function of an alphabet used in this crate depends only on this.
    pub fn content(&self) -> Vec<Scalar> {
        let mut v: Vec<Scalar> = self.0.iter().filter(|e| !e.is_zero()).cloned().collect();
        v.sort();
        v
    }
}

impl fmt::Debug for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}

impl FromIterator<Scalar> for Alphabet {
    fn from_iter<I: IntoIterator<Item = Scalar>>(iter: I) -> Alphabet {
        Alphabet(iter.into_iter().collect())
    }
}

/// Removes `small` from `big` as multisets; `None` unless `small ⊆ big`.
/// Both inputs must be sorted.
pub(crate) fn multiset_difference(big: &[Scalar], small: &[Scalar]) -> Option<Vec<Scalar>> {
    let mut out = Vec::new();
    let mut j = 0;
    for e in big {
        if j < small.len() && &small[j] == e {
            j += 1;
        } else {
            if j < small.len() && &small[j] < e {
                return None;
            }
            out.push(e.clone());
        }
    }
    (j == small.len()).then_some(out)
}

/// An infinite (or explicitly finite) base sequence `t = (t_1, t_2, …)`.
///
/// Stored as a finite head followed by a rule for the rest.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Sequence {
    head: Vec<Scalar>,
    rest: SequenceRest,
}

#[derive(Clone, PartialEq, Eq, Debug)]
enum SequenceRest {
    End,
    /// `stem_{k + shift}` at relative position `k`.
    Symbolic { stem: String, shift: usize },
    Constant(Scalar),
}

impl Sequence {
    /// Fresh indeterminates `stem_1, stem_2, …`.
    pub fn symbolic(stem: &str) -> Sequence {
        Sequence { head: Vec::new(), rest: SequenceRest::Symbolic { stem: stem.to_string(), shift: 0 } }
    }

    pub fn constant(value: Scalar) -> Sequence {
        Sequence { head: Vec::new(), rest: SequenceRest::Constant(value) }
    }

    pub fn zeros() -> Sequence {
        Sequence::constant(Scalar::zero())
    }

    /// `(-β, -β, …)` with `β` the indeterminate `beta`.
    pub fn beta() -> Sequence {
        Sequence::constant(-Scalar::var("beta"))
    }

    pub fn finite(entries: Vec<Scalar>) -> Sequence {
        Sequence { head: entries, rest: SequenceRest::End }
    }

    /// `head` followed by all of `rest`.
    pub fn with_head(mut head: Vec<Scalar>, rest: Sequence) -> Sequence {
        head.extend(rest.head);
        Sequence { head, rest: rest.rest }
    }

    /// Number of entries if finite.
    pub fn finite_len(&self) -> Option<usize> {
        matches!(self.rest, SequenceRest::End).then_some(self.head.len())
    }

    /// `t_i`, 1-based.
    pub fn get(&self, i: usize) -> Result<Scalar> {
        if i == 0 {
            return Err(Error::OutOfRange { index: 0, len: self.finite_len().unwrap_or(usize::MAX) });
        }
        if i <= self.head.len() {
            return Ok(self.head[i - 1].clone());
        }
        let k = i - self.head.len();
        match &self.rest {
            SequenceRest::End => Err(Error::OutOfRange { index: i, len: self.head.len() }),
            SequenceRest::Symbolic { stem, shift } => Ok(Scalar::var(&format!("{stem}_{}", k + shift))),
            SequenceRest::Constant(c) => Ok(c.clone()),
        }
    }

    /// `(t_1, …, t_n)`.
    pub fn prefix(&self, n: usize) -> Result<Vec<Scalar>> {
        (1..=n).map(|i| self.get(i)).collect()
    }

    /// The sequence with its first `k` entries dropped.
    pub fn shifted(&self, k: usize) -> Sequence {
        if k <= self.head.len() {
            return Sequence { head: self.head[k..].to_vec(), rest: self.rest.clone() };
        }
        let extra = k - self.head.len();
        let rest = match &self.rest {
            SequenceRest::End => SequenceRest::End,
            SequenceRest::Symbolic { stem, shift } => SequenceRest::Symbolic { stem: stem.clone(), shift: shift + extra },
            SequenceRest::Constant(c) => SequenceRest::Constant(c.clone()),
        };
        Sequence { head: Vec::new(), rest }
    }
}

/// `t[i] = (t_1, …, t_{i-1})`.
pub fn refined_alphabet(t: &Sequence, i: usize) -> Result<Alphabet> {
    if i == 0 {
        return Err(Error::Domain("refined alphabets are indexed from 1".into()));
    }
    Ok(Alphabet(t.prefix(i - 1)?))
}

/// How a tuple of tuples continues after its explicit prefix.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Tail {
    /// `x^(i) = ∅`.
    Empty,
    /// `x^(i) = a` for a fixed alphabet.
    Constant(Alphabet),
    /// `x^(i) = base ∪ (t_1, …, t_{i-1+extra})`. With an empty base and
    /// `extra = 0` this is the refined tuple `[t]`.
    Refined { base: Alphabet, t: Sequence, extra: usize },
}

/// A tuple of tuples `(x^(1), x^(2), …)`: explicit prefix plus a tail rule.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AlphabetSequence {
    prefix: Vec<Alphabet>,
    tail: Tail,
}

/// Result of [`stable_tail`]: from index `r` on, each alphabet adds exactly
/// the next entry of `increments` (a zero entry meaning nothing is added).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StableTail {
    pub r: usize,
    pub increments: Sequence,
}

impl AlphabetSequence {
    pub fn new(prefix: Vec<Alphabet>, tail: Tail) -> AlphabetSequence {
        AlphabetSequence { prefix, tail }
    }

    /// The tuple of empty tuples.
    pub fn empty() -> AlphabetSequence {
        AlphabetSequence::new(Vec::new(), Tail::Empty)
    }

    /// The refined tuple `[t]`.
    pub fn refined(t: Sequence) -> AlphabetSequence {
        AlphabetSequence::new(Vec::new(), Tail::Refined { base: Alphabet::empty(), t, extra: 0 })
    }

    /// `x^(i) = base ∪ (t_1, …, t_{i-1})`.
    pub fn refined_over(base: Alphabet, t: Sequence) -> AlphabetSequence {
        AlphabetSequence::new(Vec::new(), Tail::Refined { base, t, extra: 0 })
    }

    pub fn constant(a: Alphabet) -> AlphabetSequence {
        AlphabetSequence::new(Vec::new(), Tail::Constant(a))
    }

    /// Explicit alphabets followed by empty ones.
    pub fn explicit(prefix: Vec<Alphabet>) -> AlphabetSequence {
        AlphabetSequence::new(prefix, Tail::Empty)
    }

    pub fn prefix(&self) -> &[Alphabet] {
        &self.prefix
    }

    pub fn tail(&self) -> &Tail {
        &self.tail
    }

    /// `x^(i)`, 1-based.
    pub fn get(&self, i: usize) -> Result<Alphabet> {
        if i == 0 {
            return Err(Error::Domain("tuples of tuples are indexed from 1".into()));
        }
        if i <= self.prefix.len() {
            return Ok(self.prefix[i - 1].clone());
        }
        match &self.tail {
            Tail::Empty => Ok(Alphabet::empty()),
            Tail::Constant(a) => Ok(a.clone()),
            Tail::Refined { base, t, extra } => Ok(base.union(&Alphabet(t.prefix(i - 1 + extra)?))),
        }
    }

    /// The first `n` alphabets.
    pub fn take(&self, n: usize) -> Result<Vec<Alphabet>> {
        (1..=n).map(|i| self.get(i)).collect()
    }
}

/// Checks the eventual-increment condition: the minimal `R` with
/// `x^(R+p) \ x^(R) = (t_1, …, t_p)` for every `p > 0`, as multisets with zero
/// letters ignored. `None` when no such `R` exists.
///
/// For a refined tail over a finite base sequence, the condition is checked
/// only as far as the sequence is defined and the returned increments are
/// finite too.
pub fn stable_tail(bx: &AlphabetSequence) -> Option<StableTail> {
    let l = bx.prefix.len();
    // step i: x^(i) -> x^(i+1), for i = 1..=l (the last one enters the tail)
    let mut steps: Vec<Option<Scalar>> = Vec::with_capacity(l);
    for i in 1..=l {
        let (Ok(a), Ok(b)) = (bx.get(i), bx.get(i + 1)) else {
            steps.push(None);
            continue;
        };
        let added = multiset_difference(&b.content(), &a.content());
        steps.push(match added.as_deref() {
            Some([]) => Some(Scalar::zero()),
            Some([one]) => Some(one.clone()),
            _ => None,
        });
    }
    let r = steps.iter().rposition(Option::is_none).map_or(1, |bad| bad + 2);
    let head: Vec<Scalar> = steps[r - 1..].iter().map(|s| s.clone().expect("valid step")).collect();
    let rest = match &bx.tail {
        Tail::Empty | Tail::Constant(_) => Sequence::zeros(),
        Tail::Refined { t, extra, .. } => t.shifted(l + extra),
    };
    Some(StableTail { r, increments: Sequence::with_head(head, rest) })
}

// ---- JSON forms ----

#[derive(Deserialize)]
#[serde(untagged)]
enum EntryIn {
    Int(i64),
    Expr(String),
    Full(Scalar),
}

impl EntryIn {
    fn into_scalar(self) -> Result<Scalar> {
        match self {
            EntryIn::Int(n) => Ok(Scalar::from_integer(n)),
            EntryIn::Expr(s) => parse_scalar(&s),
            EntryIn::Full(s) => Ok(s),
        }
    }
}

fn entries_in<E: serde::de::Error>(v: Vec<EntryIn>) -> std::result::Result<Vec<Scalar>, E> {
    v.into_iter().map(|e| e.into_scalar().map_err(E::custom)).collect()
}

impl Serialize for Alphabet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

/// Accepts each entry as a Scalar serialization, an integer, or a literal
/// string such as `"x1"` or `"-beta"`.
impl<'de> Deserialize<'de> for Alphabet {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Alphabet, D::Error> {
        Ok(Alphabet(entries_in(Vec::<EntryIn>::deserialize(d)?)?))
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum SequenceIn {
    Finite(Vec<EntryIn>),
    Tagged {
        kind: String,
        #[serde(default)]
        stem: Option<String>,
        #[serde(default)]
        value: Option<EntryIn>,
        #[serde(default)]
        head: Vec<EntryIn>,
    },
}

/// JSON: a plain array is a finite sequence; otherwise
/// `{"kind": "symbolic", "stem": "t"}`, `{"kind": "constant", "value": …}`,
/// `{"kind": "zero"}` or `{"kind": "beta"}`, each with an optional `head`.
impl<'de> Deserialize<'de> for Sequence {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Sequence, D::Error> {
        use serde::de::Error as _;
        match SequenceIn::deserialize(d)? {
            SequenceIn::Finite(v) => Ok(Sequence::finite(entries_in(v)?)),
            SequenceIn::Tagged { kind, stem, value, head } => {
                let rest = match kind.as_str() {
                    "symbolic" => Sequence::symbolic(stem.as_deref().unwrap_or("t")),
                    "constant" => {
                        let v = value.ok_or_else(|| D::Error::custom("constant sequence needs `value`"))?;
                        Sequence::constant(v.into_scalar().map_err(D::Error::custom)?)
                    }
                    "zero" => Sequence::zeros(),
                    "beta" => Sequence::beta(),
                    "finite" => Sequence::finite(Vec::new()),
                    other => return Err(D::Error::custom(format!("unknown sequence kind `{other}`"))),
                };
                Ok(Sequence::with_head(entries_in(head)?, rest))
            }
        }
    }
}

impl Serialize for Sequence {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        if let SequenceRest::End = self.rest {
            return self.head.serialize(s);
        }
        let mut m = s.serialize_map(None)?;
        match &self.rest {
            SequenceRest::Symbolic { stem, shift } => {
                m.serialize_entry("kind", "symbolic")?;
                m.serialize_entry("stem", stem)?;
                if *shift > 0 {
                    m.serialize_entry("shift", shift)?;
                }
            }
            SequenceRest::Constant(c) => {
                m.serialize_entry("kind", "constant")?;
                m.serialize_entry("value", c)?;
            }
            SequenceRest::End => unreachable!(),
        }
        if !self.head.is_empty() {
            m.serialize_entry("head", &self.head)?;
        }
        m.end()
    }
}

#[derive(Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
enum TailIn {
    Empty,
    Constant {
        alphabet: Alphabet,
    },
    Refined {
        t: Sequence,
        #[serde(default)]
        base: Alphabet,
        #[serde(default)]
        extra: usize,
    },
}

#[derive(Deserialize)]
struct AlphabetSequenceIn {
    #[serde(default)]
    prefix: Vec<Alphabet>,
    #[serde(default)]
    tail: Option<TailIn>,
}

/// JSON: `{"prefix": [[…], …], "tail": {"kind": "empty" | "constant" | "refined", …}}`.
/// A missing tail means `empty`.
impl<'de> Deserialize<'de> for AlphabetSequence {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<AlphabetSequence, D::Error> {
        let raw = AlphabetSequenceIn::deserialize(d)?;
        let tail = match raw.tail.unwrap_or(TailIn::Empty) {
            TailIn::Empty => Tail::Empty,
            TailIn::Constant { alphabet } => Tail::Constant(alphabet),
            TailIn::Refined { t, base, extra } => Tail::Refined { base, t, extra },
        };
        Ok(AlphabetSequence::new(raw.prefix, tail))
    }
}

impl Serialize for AlphabetSequence {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        struct TailOut<'a>(&'a Tail);
        impl Serialize for TailOut<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                let mut m = s.serialize_map(None)?;
                match self.0 {
                    Tail::Empty => m.serialize_entry("kind", "empty")?,
                    Tail::Constant(a) => {
                        m.serialize_entry("kind", "constant")?;
                        m.serialize_entry("alphabet", a)?;
                    }
                    Tail::Refined { base, t, extra } => {
                        m.serialize_entry("kind", "refined")?;
                        m.serialize_entry("t", t)?;
                        if !base.is_empty() {
                            m.serialize_entry("base", base)?;
                        }
                        if *extra > 0 {
                            m.serialize_entry("extra", extra)?;
                        }
                    }
                }
                m.end()
            }
        }
        let mut m = s.serialize_map(Some(2))?;
        m.serialize_entry("prefix", &self.prefix)?;
        m.serialize_entry("tail", &TailOut(&self.tail))?;
        m.end()
    }
}
