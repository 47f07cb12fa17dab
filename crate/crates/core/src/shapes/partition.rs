use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// An integer partition: weakly decreasing positive parts. Trailing zeros are
/// trimmed on construction, so `(2,1,0)` and `(2,1)` are the same value.
///
/// Partitions are ordered by size, then reverse-lexicographically, so within
/// a fixed size `(3) < (2,1) < (1,1,1)`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Partition> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Domain(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Partition {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// The `i`-th part, 1-based; zero beyond the length.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn transpose(&self) -> Partition {
        let width = self.part(1);
        Partition((1..=width).map(|c| self.0.iter().filter(|&&p| p >= c).count()).collect())
    }

    /// `true` iff `other ⊆ self` as Young diagrams.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(m, l)| m <= l)
    }

    /// All partitions of `n`, in the crate's partition order.
    pub fn of_size(n: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fill(n, n, &mut cur, &mut out);
        out
    }

    /// All partitions of size at most `d`.
    pub fn up_to(d: usize) -> Vec<Partition> {
        (0..=d).flat_map(Partition::of_size).collect()
    }

    /// All `μ ⊆ self`, sorted.
    pub fn subpartitions(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        sub_fill(&self.0, 0, usize::MAX, &mut cur, &mut out);
        out.sort();
        out
    }

    /// All `μ ⊇ self` with `|μ| ≤ max_size` and, if given, `ℓ(μ) ≤ max_len`.
    pub fn superpartitions(&self, max_size: usize, max_len: Option<usize>) -> Vec<Partition> {
        if self.size() > max_size || max_len.is_some_and(|l| self.len() > l) {
            return Vec::new();
        }
        let mut out: Vec<Partition> = Partition::up_to(max_size)
            .into_iter()
            .filter(|mu| mu.contains(self) && max_len.is_none_or(|l| mu.len() <= l))
            .collect();
        out.sort();
        out
    }

    /// `self / inner` is a horizontal strip (no two boxes in one column).
    pub fn is_horizontal_strip_over(&self, inner: &Partition) -> bool {
        self.contains(inner) && (1..=self.len()).all(|i| i == 1 || self.part(i) <= inner.part(i - 1))
    }
}

fn fill(remaining: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition(cur.clone()));
        return;
    }
    for p in (1..=remaining.min(max)).rev() {
        cur.push(p);
        fill(remaining - p, p, cur, out);
        cur.pop();
    }
}

fn sub_fill(outer: &[usize], i: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if i == outer.len() {
        out.push(Partition::new(cur.clone()).expect("weakly decreasing by construction"));
        return;
    }
    for p in 0..=outer[i].min(max) {
        cur.push(p);
        sub_fill(outer, i + 1, p, cur, out);
        cur.pop();
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size().cmp(&other.size()).then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("∅");
        }
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Partition, D::Error> {
        let parts = Vec::<usize>::deserialize(d)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

/// `partition![2, 1]` builds a partition, panicking on invalid input.
#[macro_export]
macro_rules! partition {
    ($($p:expr),* $(,)?) => {
        $crate::shapes::Partition::new(vec![$($p),*]).expect("valid partition literal")
    };
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn transpose_examples() {
        assert_eq!(partition![3, 1].transpose(), partition![2, 1, 1]);
        assert_eq!(Partition::empty().transpose(), Partition::empty());
        assert_eq!(partition![2, 2].transpose(), partition![2, 2]);
    }

    #[test]
    fn containment_examples() {
        assert!(partition![2, 1].contains(&partition![1, 1]));
        assert!(!partition![2, 2].contains(&partition![3]));
        assert!(partition![4, 2].contains(&Partition::empty()));
        assert!(Partition::empty().contains(&Partition::empty()));
    }

    #[test]
    fn trailing_zeros_and_validation() {
        assert_eq!(partition![2, 1, 0, 0], partition![2, 1]);
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0, 1]).is_err());
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=8).map(|n| Partition::of_size(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22]);
        assert_eq!(partition![2, 1].subpartitions().len(), 5);
    }

    #[test]
    fn ordering_is_graded_reverse_lex() {
        let ps = Partition::of_size(3);
        assert_eq!(ps, vec![partition![3], partition![2, 1], partition![1, 1, 1]]);
        let mut all = Partition::up_to(3);
        all.reverse();
        all.sort();
        assert_eq!(all, Partition::up_to(3));
    }

    #[test]
    fn horizontal_strips() {
        assert!(partition![3, 1].is_horizontal_strip_over(&partition![2]));
        assert!(partition![2, 2].is_horizontal_strip_over(&partition![2]));
        assert!(!partition![2, 1, 1].is_horizontal_strip_over(&partition![1]));
        assert!(!partition![1, 1].is_horizontal_strip_over(&Partition::empty()));
    }

    #[test]
    fn superpartitions_respect_bounds() {
        let sup = partition![1].superpartitions(3, Some(2));
        assert_eq!(sup, vec![partition![1], partition![2], partition![1, 1], partition![3], partition![2, 1]]);
    }
}
