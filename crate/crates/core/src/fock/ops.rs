use std::fmt;

use super::state::{FockVector, MayaState};
use crate::exactalg::{Rational, Scalar};
use crate::shapes::Alphabet;
use crate::supersym::{h_super, p_power};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Mode {
    /// Creation `ψ_m`, raises charge by one.
    Psi,
    /// Annihilation `ψ*_m`, lowers charge by one.
    PsiStar,
}

fn signed(state: MayaState, negative: bool) -> (MayaState, Scalar) {
    (state, Scalar::from_integer(if negative { -1 } else { 1 }))
}

fn charge_shift(mode: Mode) -> i64 {
    match mode {
        Mode::Psi => 1,
        Mode::PsiStar => -1,
    }
}

/// `ψ_m v` or `ψ*_m v`.
pub fn apply_fermion(mode: Mode, m: i64, v: &FockVector) -> FockVector {
    v.map_states(v.charge() + charge_shift(mode), |s| {
        let hit = match mode {
            Mode::Psi => s.psi(m),
            Mode::PsiStar => s.psi_star(m),
        };
        hit.into_iter().map(|(t, neg)| signed(t, neg)).collect()
    })
}

/// `a_m v = Σ_i ψ_i ψ*_{i+m} v` for `m ≠ 0`; `a_0` acts as the charge.
///
/// Each basis state contributes one term per level move `j → j - m` with `j`
/// occupied and `j - m` empty, so the sum is finite for either sign of `m`.
pub fn apply_heisenberg(m: i64, v: &FockVector) -> FockVector {
    if m == 0 {
        return v.scale(&Scalar::from_integer(v.charge()));
    }
    v.map_states(v.charge(), |s| {
        let window = s.partition.len() + m.unsigned_abs() as usize + 1;
        let mut out = Vec::new();
        for j in s.levels(window) {
            let Some((mid, n1)) = s.psi_star(j) else { continue };
            if let Some((t, n2)) = mid.psi(j - m) {
                out.push(signed(t, n1 != n2));
            }
        }
        out
    })
}

/// `H(x/y) v = Σ_{n ≥ 1} p_n(x/y)/n · a_n v`, truncated at the top energy of
/// `v` since `a_n` with `n` above it annihilates everything.
pub fn apply_h(x: &Alphabet, y: &Alphabet, v: &FockVector) -> FockVector {
    let mut out = FockVector::zero(v.charge());
    for n in 1..=v.max_energy() as i64 {
        let p = p_power(n, x, y).expect("positive index");
        if p.is_zero() {
            continue;
        }
        let coeff = p.scale(&Rational::new(1.into(), n.into()));
        out.add_assign(&apply_heisenberg(n, v).scale(&coeff));
    }
    out
}

/// `e^{±H(x/y)} v = Σ_k (±H)^k v / k!`; the series stops because `H` strictly
/// lowers energy.
pub fn apply_exp_h(x: &Alphabet, y: &Alphabet, sign: i64, v: &FockVector) -> FockVector {
    let (x, y) = if sign >= 0 { (x, y) } else { (y, x) };
    // e^{-H(x/y)} = e^{H(y/x)} since p_n(y/x) = -p_n(x/y)
    let mut total = v.clone();
    let mut term = v.clone();
    let mut k: i64 = 0;
    while !term.is_zero() {
        k += 1;
        term = apply_h(x, y, &term).scale_rational(&Rational::new(1.into(), k.into()));
        total.add_assign(&term);
    }
    total
}

/// A conjugation `X ↦ e^{H(x/y)} X e^{-H(x/y)}`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Dressing {
    pub x: Alphabet,
    pub y: Alphabet,
}

impl Dressing {
    pub fn new(x: Alphabet, y: Alphabet) -> Dressing {
        Dressing { x, y }
    }

    pub fn none() -> Dressing {
        Dressing::default()
    }

    /// Conjugation by `e^{-H(x/y)}`, which is `e^{H(y/x)}`.
    pub fn inverse(&self) -> Dressing {
        Dressing { x: self.y.clone(), y: self.x.clone() }
    }

    pub fn is_trivial(&self) -> bool {
        self.x.content() == self.y.content()
    }
}

/// `e^{H(x/y)} ψ_n e^{-H(x/y)} = Σ_i h_i(x/y) ψ_{n-i}` and
/// `e^{H(x/y)} ψ*_n e^{-H(x/y)} = Σ_i h_i(y/x) ψ*_{n+i}` applied to `v`.
///
/// On a basis state only finitely many modes act: `ψ_{n-i}` dies once `n - i`
/// reaches the filled sea, `ψ*_{n+i}` once `n + i` passes the top level.
pub fn apply_dressed_fermion(mode: Mode, n: i64, dressing: &Dressing, v: &FockVector) -> FockVector {
    let Dressing { x, y } = dressing;
    v.map_states(v.charge() + charge_shift(mode), |s| {
        let mut out = Vec::new();
        match mode {
            Mode::Psi => {
                for i in 0..=(n - s.sea_level() - 1).max(-1) {
                    let h = h_super(i, x, y);
                    if h.is_zero() {
                        continue;
                    }
                    if let Some((t, neg)) = s.psi(n - i) {
                        out.push((t, if neg { -h } else { h }));
                    }
                }
            }
            Mode::PsiStar => {
                for i in 0..=(s.top_level() - n).max(-1) {
                    let h = h_super(i, y, x);
                    if h.is_zero() {
                        continue;
                    }
                    if let Some((t, neg)) = s.psi_star(n + i) {
                        out.push((t, if neg { -h } else { h }));
                    }
                }
            }
        }
        out
    })
}

/// Operators that can be composed into words.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Operator {
    Psi(i64),
    PsiStar(i64),
    Dressed(Mode, i64, Dressing),
    /// `e^{sign·H(x/y)}`.
    ExpH(Alphabet, Alphabet, i64),
    Heisenberg(i64),
}

impl Operator {
    pub fn apply(&self, v: &FockVector) -> FockVector {
        match self {
            Operator::Psi(m) => apply_fermion(Mode::Psi, *m, v),
            Operator::PsiStar(m) => apply_fermion(Mode::PsiStar, *m, v),
            Operator::Dressed(mode, m, d) => apply_dressed_fermion(*mode, *m, d, v),
            Operator::ExpH(x, y, sign) => apply_exp_h(x, y, *sign, v),
            Operator::Heisenberg(m) => apply_heisenberg(*m, v),
        }
    }
}

impl fmt::Display for Operator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Operator::Psi(m) => write!(f, "ψ_{{{m}}}"),
            Operator::PsiStar(m) => write!(f, "ψ*_{{{m}}}"),
            Operator::Dressed(Mode::Psi, m, d) => write!(f, "e^H({:?}/{:?}) ψ_{{{m}}} e^-H", d.x, d.y),
            Operator::Dressed(Mode::PsiStar, m, d) => write!(f, "e^H({:?}/{:?}) ψ*_{{{m}}} e^-H", d.x, d.y),
            Operator::ExpH(x, y, s) => write!(f, "e^{{{s}H({x:?}/{y:?})}}"),
            Operator::Heisenberg(m) => write!(f, "a_{{{m}}}"),
        }
    }
}

/// Applies `word[0] word[1] ⋯ word[k-1]` to `v`, rightmost first.
pub fn apply_word(word: &[Operator], v: &FockVector) -> FockVector {
    word.iter().rev().fold(v.clone(), |acc, op| op.apply(&acc))
}
