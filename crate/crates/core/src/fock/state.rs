use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use crate::exactalg::{Rational, Scalar};
use crate::shapes::Partition;

/// A charged Maya diagram: the occupied levels are `l_i = λ_i - i + charge`
/// for `i ≥ 1`, so every level below `charge - ℓ(λ)` is filled.
///
/// The basis vector it names is `ψ_{l_1} ψ_{l_2} ⋯ ψ_{l_N} |charge - N⟩` for
/// any `N ≥ ℓ(λ)`; these agree because `ψ_{-r}|-r⟩ = |-r+1⟩`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct MayaState {
    pub charge: i64,
    pub partition: Partition,
}

impl MayaState {
    pub fn new(charge: i64, partition: Partition) -> MayaState {
        MayaState { charge, partition }
    }

    /// The shifted vacuum `|charge⟩`.
    pub fn vacuum(charge: i64) -> MayaState {
        MayaState::new(charge, Partition::empty())
    }

    /// `l_1 > ⋯ > l_n`.
    pub fn levels(&self, n: usize) -> Vec<i64> {
        (1..=n).map(|i| self.partition.part(i) as i64 - i as i64 + self.charge).collect()
    }

    /// Highest occupied level.
    pub fn top_level(&self) -> i64 {
        self.partition.part(1) as i64 - 1 + self.charge
    }

    /// Every level at or below this one is occupied.
    pub fn sea_level(&self) -> i64 {
        self.charge - self.partition.len() as i64 - 1
    }

    pub fn is_occupied(&self, m: i64) -> bool {
        m <= self.sea_level() || self.levels(self.partition.len()).contains(&m)
    }

    /// Window size `N` such that `l_N < m`, so that all occupied levels `≥ m`
    /// are among `l_1, …, l_N`.
    fn window(&self, m: i64) -> usize {
        (self.partition.len() as i64).max(self.charge - m) as usize + 1
    }

    /// `ψ_m |self⟩` as `(state, negative sign)`, or `None` if level `m` is full.
    pub fn psi(&self, m: i64) -> Option<(MayaState, bool)> {
        let n = self.window(m);
        let mut lv = self.levels(n);
        if lv.contains(&m) {
            return None;
        }
        let above = lv.iter().filter(|&&l| l > m).count();
        lv.insert(above, m);
        Some((from_levels(self.charge + 1, &lv), above % 2 == 1))
    }

    /// `ψ*_m |self⟩` as `(state, negative sign)`, or `None` if level `m` is empty.
    pub fn psi_star(&self, m: i64) -> Option<(MayaState, bool)> {
        let n = self.window(m);
        let mut lv = self.levels(n);
        let pos = lv.iter().position(|&l| l == m)?;
        lv.remove(pos);
        Some((from_levels(self.charge - 1, &lv), pos % 2 == 1))
    }
}

/// The state whose top levels are `lv` (strictly decreasing) and whose
/// remaining levels form a full sea directly below them.
fn from_levels(charge: i64, lv: &[i64]) -> MayaState {
    let parts = lv.iter().enumerate().map(|(i, &l)| (l + i as i64 + 1 - charge) as usize).collect();
    MayaState::new(charge, Partition::new(parts).expect("levels are strictly decreasing"))
}

fn level(l: i64) -> String {
    if (0..10).contains(&l) {
        format!("ψ_{l}")
    } else {
        format!("ψ_{{{l}}}")
    }
}

impl fmt::Display for MayaState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.partition.len();
        for l in self.levels(n) {
            write!(f, "{} ", level(l))?;
        }
        write!(f, "|{}⟩", self.charge - n as i64)
    }
}

/// A finite linear combination of basis states of a single charge.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FockVector {
    charge: i64,
    terms: BTreeMap<Partition, Scalar>,
}

impl FockVector {
    pub fn zero(charge: i64) -> FockVector {
        FockVector { charge, terms: BTreeMap::new() }
    }

    pub fn basis(state: MayaState) -> FockVector {
        let mut v = FockVector::zero(state.charge);
        v.terms.insert(state.partition, Scalar::one());
        v
    }

    /// `|charge⟩`.
    pub fn vacuum(charge: i64) -> FockVector {
        FockVector::basis(MayaState::vacuum(charge))
    }

    pub fn charge(&self) -> i64 {
        self.charge
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

    pub fn terms(&self) -> impl Iterator<Item = (MayaState, &Scalar)> + '_ {
        self.terms.iter().map(|(p, c)| (MayaState::new(self.charge, p.clone()), c))
    }

    /// Coefficients keyed by partition.
    pub fn coefficients(&self) -> &BTreeMap<Partition, Scalar> {
        &self.terms
    }

    pub fn coefficient(&self, partition: &Partition) -> Scalar {
        self.terms.get(partition).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, partition: Partition, coeff: &Scalar) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(partition) {
            Entry::Vacant(e) => {
                e.insert(coeff.clone());
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_assign(&mut self, other: &FockVector) {
        for (p, c) in &other.terms {
            self.add_term(p.clone(), c);
        }
    }

    pub fn add(&self, other: &FockVector) -> FockVector {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn sub(&self, other: &FockVector) -> FockVector {
        self.add(&other.scale(&Scalar::from_integer(-1)))
    }

    pub fn scale(&self, c: &Scalar) -> FockVector {
        let mut out = FockVector::zero(self.charge);
        if c.is_zero() {
            return out;
        }
        for (p, v) in &self.terms {
            out.add_term(p.clone(), &(v * c));
        }
        out
    }

    pub fn scale_rational(&self, c: &Rational) -> FockVector {
        self.scale(&Scalar::from_rational(c.clone()))
    }

    /// Largest `|λ|` in the support, i.e. the top energy.
    pub fn max_energy(&self) -> usize {
        self.terms.keys().map(Partition::size).max().unwrap_or(0)
    }

    /// Largest `ℓ(λ)` in the support.
    pub fn max_length(&self) -> usize {
        self.terms.keys().map(Partition::len).max().unwrap_or(0)
    }

    /// Builds `Σ c_s · f(s)` where `f` produces signed basis states.
    pub(crate) fn map_states(
        &self,
        charge: i64,
        mut f: impl FnMut(&MayaState) -> Vec<(MayaState, Scalar)>,
    ) -> FockVector {
        let mut out = FockVector::zero(charge);
        for (p, c) in &self.terms {
            let s = MayaState::new(self.charge, p.clone());
            for (t, w) in f(&s) {
                debug_assert_eq!(t.charge, charge);
                out.add_term(t.partition, &(c * &w));
            }
        }
        out
    }
}

impl fmt::Display for FockVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms()
            .map(|(s, c)| if c.is_one() { s.to_string() } else { format!("({c}) {s}") })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition;

    #[test]
    fn display_lists_levels() {
        assert_eq!(MayaState::new(0, partition![2, 1]).to_string(), "ψ_1 ψ_{-1} |-2⟩");
        assert_eq!(MayaState::vacuum(-3).to_string(), "|-3⟩");
    }

    #[test]
    fn psi_on_shifted_vacuum() {
        for r in 0..4 {
            let (s, neg) = MayaState::vacuum(-r).psi(-r).unwrap();
            assert_eq!(s, MayaState::vacuum(-r + 1));
            assert!(!neg);
        }
        assert!(MayaState::vacuum(-2).psi(-3).is_none());
    }

    #[test]
    fn psi_star_kills_vacuum_above_sea() {
        for n in 0..4 {
            assert!(MayaState::vacuum(0).psi_star(n).is_none());
        }
        let (s, neg) = MayaState::vacuum(0).psi_star(-1).unwrap();
        assert_eq!(s, MayaState::vacuum(-1));
        assert!(!neg);
    }

    #[test]
    fn insertion_sign_counts_levels_above() {
        // ψ_{-1}|(1)⟩ with |(1)⟩ = ψ_0 |-1⟩: moving ψ_{-1} past ψ_0 flips the
        // sign and fills the sea of charge one
        let s = MayaState::new(0, partition![1]);
        let (t, neg) = s.psi(-1).unwrap();
        assert!(neg);
        assert_eq!(t, MayaState::vacuum(1));
        let (t, neg) = MayaState::new(0, partition![2]).psi(-1).unwrap();
        assert!(neg);
        assert_eq!(t, MayaState::new(1, partition![1]));
    }

    #[test]
    fn removal_then_insertion_is_identity() {
        let s = MayaState::new(0, partition![3, 1]);
        for m in s.levels(4) {
            let (t, n1) = s.psi_star(m).unwrap();
            let (u, n2) = t.psi(m).unwrap();
            assert_eq!(u, s);
            assert_eq!(n1, n2);
        }
    }

    #[test]
    fn vector_arithmetic_cancels() {
        let v = FockVector::basis(MayaState::new(0, partition![1]));
        assert!(v.sub(&v).is_zero());
        assert_eq!(v.add(&v).coefficient(&partition![1]), Scalar::from_integer(2));
    }
}
