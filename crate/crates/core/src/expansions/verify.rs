//! Executable checks of the identities relating the two engines. Each suite
//! returns a [`Report`] naming every failing case.

use std::collections::HashMap;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use super::formulas::{
    expand_in_refined_basis, refined_dual_grothendieck, schur_expand_multischur, skew_function,
    stable_grothendieck_schur, truncated_dual_expansion,
};
use super::symfunc::{eval_symfunc, hall_inner, schur_tableau_oracle, SymFunc};
use crate::error::Result;
use crate::exactalg::{det, rat, Rational, Scalar, Var};
use crate::fock::{
    apply_dressed_fermion, apply_exp_h, apply_fermion, apply_heisenberg, bra_refined_pair, bra_refined_pair_at,
    ket_general, ket_partition, ket_refined, vacuum_image, wick_expectation, Dressing, FockVector, MayaState, Mode,
};
use crate::shapes::{Alphabet, AlphabetSequence, Partition, Sequence};
use crate::supersym::supersym_schur;

/// Outcome of one verification suite.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub theorem: String,
    pub parameters: serde_json::Value,
    pub passed: bool,
    pub cases: usize,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub failures: Vec<String>,
}

const MAX_LISTED_FAILURES: usize = 20;

impl Report {
    fn from_checks(theorem: &str, parameters: serde_json::Value, checks: Vec<(String, bool)>) -> Report {
        let cases = checks.len();
        let failures: Vec<String> =
            checks.into_iter().filter(|(_, ok)| !ok).map(|(l, _)| l).take(MAX_LISTED_FAILURES).collect();
        Report { theorem: theorem.to_string(), parameters, passed: failures.is_empty(), cases, failures }
    }

    /// Merges suites run under one theorem name.
    fn combine(theorem: &str, parameters: serde_json::Value, parts: Vec<Report>) -> Report {
        let cases = parts.iter().map(|r| r.cases).sum();
        let failures: Vec<String> = parts
            .iter()
            .flat_map(|r| r.failures.iter().map(move |f| format!("{}: {f}", r.theorem)))
            .take(MAX_LISTED_FAILURES)
            .collect();
        let passed = parts.iter().all(|r| r.passed);
        Report { theorem: theorem.to_string(), parameters, passed, cases, failures }
    }
}

fn delta(a: &Partition, b: &Partition) -> Scalar {
    if a == b {
        Scalar::one()
    } else {
        Scalar::zero()
    }
}

/// `(stem_1, …, stem_n)` as Scalars.
pub fn variables(stem: &str, n: usize) -> Vec<Scalar> {
    (1..=n).map(|i| Scalar::var(&format!("{stem}_{i}"))).collect()
}

fn one_letter_tuple(stem: &str, n: usize) -> AlphabetSequence {
    AlphabetSequence::explicit(variables(stem, n).into_iter().map(|v| Alphabet::new(vec![v])).collect())
}

/// `_{[t]}⟨μ|λ⟩_{[t]} = δ_{λμ}` for all `|λ|, |μ| ≤ max_weight`, with the kets
/// also checked for independence of the vacuum depth.
pub fn orthonormality(t: &Sequence, max_weight: usize) -> Result<Report> {
    let shapes = Partition::up_to(max_weight);
    let kets = shapes
        .par_iter()
        .map(|l| {
            let r = l.len() + 1;
            Ok((ket_refined(l, t, r)?, ket_refined(l, t, r + 1)?))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut checks: Vec<(String, bool)> = shapes
        .iter()
        .zip(&kets)
        .map(|(l, (a, b))| (format!("ket {l} depends on r"), a == b))
        .collect();
    let pairs: Vec<(usize, usize)> = (0..shapes.len()).flat_map(|i| (0..shapes.len()).map(move |j| (i, j))).collect();
    let pairings = pairs
        .par_iter()
        .map(|&(i, j)| {
            let got = bra_refined_pair(&shapes[j], t, &kets[i].0)?;
            Ok((format!("⟨{}|{}⟩ = {got}", shapes[j], shapes[i]), got == delta(&shapes[i], &shapes[j])))
        })
        .collect::<Result<Vec<_>>>()?;
    checks.extend(pairings);
    Ok(Report::from_checks("orthonormality", json!({"maxWeight": max_weight}), checks))
}

/// For one-letter tuples `x^(i) = (a_i)`, `y^(i) = (b_i)`: the closed-form
/// coefficients in the refined basis equal the Fock pairings
/// `_{[t]}⟨μ|λ⟩_{bx/by}`, and the Schur coefficients equal the standard
/// components of `|λ⟩_{bx/by}`.
pub fn dual_engine(t: &Sequence, max_weight: usize) -> Result<Report> {
    let bx = one_letter_tuple("a", max_weight);
    let by = one_letter_tuple("b", max_weight);
    let checks = Partition::up_to(max_weight)
        .par_iter()
        .map(|lambda| {
            let r = lambda.len();
            let ket = ket_general(lambda, &bx, &by, r)?;
            let deeper = ket_general(lambda, &bx, &by, r + 1)?;
            let closed = expand_in_refined_basis(lambda, &bx, &by, t)?;
            let schur = schur_expand_multischur(lambda, &bx, &by)?;
            let mut out = vec![(format!("ket {lambda} depends on r"), ket == deeper)];
            for mu in lambda.subpartitions() {
                let fermionic = bra_refined_pair(&mu, t, &ket)?;
                let c = closed.get(&mu).cloned().unwrap_or_default();
                out.push((format!("refined coefficient {mu} in {lambda}"), c == fermionic));
                out.push((
                    format!("schur coefficient {mu} in {lambda}"),
                    schur.coefficient(&mu) == ket.coefficient(&mu),
                ));
            }
            // nothing outside the subpartitions
            out.push((
                format!("support of {lambda}"),
                ket.coefficients().keys().all(|mu| lambda.contains(mu)),
            ));
            Ok(out)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Report::from_checks("dual-engine", json!({"maxWeight": max_weight}), checks.into_iter().flatten().collect()))
}

/// `⟨G_λ(X;t), g_μ(X;t)⟩ = δ_{λμ}` with `G` truncated at `D`, all `|λ|, |μ| ≤ D`.
pub fn hall_duality(t: &Sequence, d: usize) -> Result<Report> {
    let shapes = Partition::up_to(d);
    let big = shapes.par_iter().map(|l| stable_grothendieck_schur(l, t, d)).collect::<Result<Vec<_>>>()?;
    let small = shapes.par_iter().map(|m| refined_dual_grothendieck(m, t)).collect::<Result<Vec<_>>>()?;
    let mut checks = Vec::new();
    for (l, g_big) in shapes.iter().zip(&big) {
        for (m, g_small) in shapes.iter().zip(&small) {
            let got = hall_inner(g_big, g_small)?;
            checks.push((format!("⟨G_{l}, g_{m}⟩ = {got}"), got == delta(l, m)));
        }
    }
    Ok(Report::from_checks("hall-duality", json!({"truncation": d}), checks))
}

fn y_var(v: &Var) -> bool {
    v.name().starts_with("Y_")
}

/// `Σ_{|λ| ≤ D} g_λ(X;t) G_λ(Y;t) = Π 1/(1 - X_i Y_j)` in `n + m` variables,
/// compared in `Y`-degree at most `D`.
pub fn verify_cauchy(t: &Sequence, d: usize, n: usize, m: usize) -> Result<bool> {
    let (xs, ys) = (variables("X", n), variables("Y", m));
    let terms = Partition::up_to(d)
        .par_iter()
        .map(|l| {
            let g = eval_symfunc(&refined_dual_grothendieck(l, t)?, &xs);
            let big = eval_symfunc(&stable_grothendieck_schur(l, t, d)?, &ys);
            Ok((&g * &big).truncate_in(y_var, d as u32))
        })
        .collect::<Result<Vec<_>>>()?;
    let lhs = terms.into_iter().fold(Scalar::zero(), |a, b| a + b);
    let mut rhs = Scalar::one();
    for x in &xs {
        for y in &ys {
            let xy = x * y;
            let geometric = (0..=d as u32).fold(Scalar::zero(), |acc, k| acc + xy.pow(k));
            rhs = (&rhs * &geometric).truncate_in(y_var, d as u32);
        }
    }
    Ok(lhs == rhs)
}

/// `s_λ(X,Y)_{bx/by} = Σ_{μ ⊆ λ} s_{λ/μ}(X)_{(bx/by)/[t]} s_μ(Y)_{[t]}` in
/// `n` and `m` variables.
pub fn verify_branching_general(
    lambda: &Partition,
    bx: &AlphabetSequence,
    by: &AlphabetSequence,
    t: &Sequence,
    n: usize,
    m: usize,
) -> Result<bool> {
    let (xs, ys) = (variables("X", n), variables("Y", m));
    let both: Vec<Scalar> = xs.iter().chain(&ys).cloned().collect();
    let lhs = eval_symfunc(&schur_expand_multischur(lambda, bx, by)?, &both);
    let bt = AlphabetSequence::refined(t.clone());
    let pieces = lambda
        .subpartitions()
        .into_par_iter()
        .map(|mu| {
            let skew = eval_symfunc(&skew_function(lambda, &mu, bx, by, &bt)?, &xs);
            let g = eval_symfunc(&refined_dual_grothendieck(&mu, t)?, &ys);
            Ok(&skew * &g)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(lhs == pieces.into_iter().fold(Scalar::zero(), |a, b| a + b))
}

/// The refined case `bx = [t]`, `by = ∅` of [`verify_branching_general`].
pub fn verify_branching(lambda: &Partition, t: &Sequence, n: usize, m: usize) -> Result<bool> {
    verify_branching_general(lambda, &AlphabetSequence::refined(t.clone()), &AlphabetSequence::empty(), t, n, m)
}

pub fn cauchy(t: &Sequence, d: usize, n: usize, m: usize) -> Result<Report> {
    let ok = verify_cauchy(t, d, n, m)?;
    Ok(Report::from_checks(
        "cauchy",
        json!({"truncation": d, "n": n, "m": m}),
        vec![(format!("kernel to degree {d}"), ok)],
    ))
}

/// Refined branching for all `|λ| ≤ max_weight`, plus the general form for
/// a tuple of distinct letters when `general_weight > 0`.
pub fn branching(t: &Sequence, max_weight: usize, n: usize, m: usize, general_weight: usize) -> Result<Report> {
    let mut checks = Partition::up_to(max_weight)
        .par_iter()
        .map(|l| Ok((format!("refined {l}"), verify_branching(l, t, n, m)?)))
        .collect::<Result<Vec<_>>>()?;
    let bx = AlphabetSequence::explicit(vec![
        Alphabet::vars(&["c_1"]),
        Alphabet::vars(&["c_2", "c_3"]),
        Alphabet::vars(&["c_4"]),
    ]);
    let by = AlphabetSequence::explicit(vec![Alphabet::vars(&["d_1"])]);
    for l in Partition::up_to(general_weight) {
        checks.push((format!("general {l}"), verify_branching_general(&l, &bx, &by, t, n, m)?));
    }
    Ok(Report::from_checks(
        "branching",
        json!({"maxWeight": max_weight, "n": n, "m": m, "generalWeight": general_weight}),
        checks,
    ))
}

/// `G_λ(X_1..X_r; t)` and `s^r_λ(X_1..X_r)^{[t]}` agree up to degree `D`.
pub fn truncation_stability(t: &Sequence, max_weight: usize, max_r: usize, max_d: usize) -> Result<Report> {
    let bt = AlphabetSequence::refined(t.clone());
    let mut cases = Vec::new();
    for l in Partition::up_to(max_weight) {
        for r in l.len().max(1)..=max_r {
            for d in l.size()..=max_d {
                cases.push((l.clone(), r, d));
            }
        }
    }
    let checks = cases
        .par_iter()
        .map(|(l, r, d)| {
            let xs = variables("X", *r);
            let stable = eval_symfunc(&stable_grothendieck_schur(l, t, *d)?, &xs);
            let truncated = eval_symfunc(&truncated_dual_expansion(l, &bt, *r, *d)?, &xs);
            Ok((format!("{l} r={r} D={d}"), stable == truncated))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Report::from_checks(
        "truncation-stability",
        json!({"maxWeight": max_weight, "maxR": max_r, "maxTruncation": max_d}),
        checks,
    ))
}

fn binomial(n: i64, k: i64) -> Rational {
    if k < 0 || k > n {
        return rat(0);
    }
    (0..k).fold(rat(1), |acc, i| acc * rat(n - i) / rat(i + 1))
}

/// `Σ_{μ ⊇ λ} det(binom(i-1, -λ_i+μ_j+i-j) β^{-λ_i+μ_j+i-j}) s_μ`, the
/// Schur expansion of the stable Grothendieck function.
pub fn beta_binomial_expansion(lambda: &Partition, d: usize) -> SymFunc {
    let beta = Scalar::var("beta");
    let terms = lambda
        .superpartitions(d, None)
        .into_iter()
        .map(|mu| {
            let size = mu.len();
            let rows: Vec<Vec<Scalar>> = (1..=size)
                .map(|i| {
                    (1..=size)
                        .map(|j| {
                            let k = -(lambda.part(i) as i64) + mu.part(j) as i64 + i as i64 - j as i64;
                            let b = binomial(i as i64 - 1, k);
                            if b == rat(0) {
                                Scalar::zero()
                            } else {
                                beta.pow(k as u32).scale(&b)
                            }
                        })
                        .collect()
                })
                .collect();
            (mu, det(&rows).expect("square"))
        })
        .collect();
    SymFunc::from_terms(terms, Some(d))
}

/// At `t = (-β, -β, …)`: `g_λ(x_1..x_n)` equals the fermionic expression
/// `⟨0|e^{H(x)} ψ_{λ_1-1} e^{H(-β)} ⋯ ψ_{λ_r-r}|-r⟩`, and `G_λ` has the
/// binomial Schur expansion.
pub fn beta_chain(max_weight: usize, nvars: usize, d: usize) -> Result<Report> {
    let b = Sequence::beta();
    let xs = variables("x", nvars);
    let x = Alphabet::new(xs.clone());
    let mut checks = Partition::up_to(max_weight)
        .par_iter()
        .map(|l| {
            let sym = eval_symfunc(&refined_dual_grothendieck(l, &b)?, &xs);
            let fermionic = vacuum_image(&ket_refined(l, &b, l.len() + 1)?, &x, &Alphabet::empty())?;
            Ok((format!("dual {l}"), sym == fermionic))
        })
        .collect::<Result<Vec<_>>>()?;
    let stable = Partition::up_to(d)
        .par_iter()
        .map(|l| Ok((format!("stable {l}"), stable_grothendieck_schur(l, &b, d)? == beta_binomial_expansion(l, d))))
        .collect::<Result<Vec<_>>>()?;
    checks.extend(stable);
    Ok(Report::from_checks(
        "beta-chain",
        json!({"maxWeight": max_weight, "variables": nvars, "truncation": d}),
        checks,
    ))
}

/// Jacobi–Trudi evaluation against tableaux.
pub fn schur_evaluation(max_weight: usize, nvars: usize) -> Result<Report> {
    let mut checks = Vec::new();
    for n in 0..=nvars {
        let vals = variables("v", n);
        for mu in Partition::up_to(max_weight) {
            let ok = eval_symfunc(&SymFunc::schur(mu.clone()), &vals) == schur_tableau_oracle(&mu, &vals)?;
            checks.push((format!("s_{mu} in {n} variables"), ok));
        }
    }
    Ok(Report::from_checks("schur-evaluation", json!({"maxWeight": max_weight, "variables": nvars}), checks))
}

/// `s_λ(x/y) = (-1)^{|λ|} s_{λ'}(y/x)`.
pub fn transpose_duality(max_weight: usize) -> Report {
    let x = Alphabet::vars(&["x_1", "x_2"]);
    let y = Alphabet::vars(&["y_1", "y_2"]);
    let checks = Partition::up_to(max_weight)
        .par_iter()
        .map(|l| {
            let lhs = supersym_schur(l, &x, &y);
            let mut rhs = supersym_schur(&l.transpose(), &y, &x);
            if l.size() % 2 == 1 {
                rhs = -rhs;
            }
            (format!("{l}"), lhs == rhs)
        })
        .collect();
    Report::from_checks("transpose-duality", json!({"maxWeight": max_weight}), checks)
}

/// Basis states of charges `-1, 0, 1` with at most `max_energy` boxes.
fn sample_states(max_energy: usize) -> Vec<FockVector> {
    let mut out = Vec::new();
    for c in -1..=1 {
        for p in Partition::up_to(max_energy) {
            out.push(FockVector::basis(MayaState::new(c, p)));
        }
    }
    // one mixed vector
    let mixed = FockVector::basis(MayaState::new(0, Partition::new(vec![2, 1]).expect("partition")))
        .add(&FockVector::basis(MayaState::new(0, Partition::new(vec![3]).expect("partition"))).scale(&Scalar::var("w")));
    out.push(mixed);
    out
}

/// Canonical anticommutation and Heisenberg relations for every index pair
/// in `[-window, window]`.
pub fn fermion_relations(window: i64, max_energy: usize) -> Report {
    let states = sample_states(max_energy);
    let idx: Vec<(i64, i64)> = (-window..=window).flat_map(|m| (-window..=window).map(move |n| (m, n))).collect();
    let psi = |m, v: &FockVector| apply_fermion(Mode::Psi, m, v);
    let psis = |m, v: &FockVector| apply_fermion(Mode::PsiStar, m, v);
    let checks: Vec<(String, bool)> = idx
        .par_iter()
        .flat_map_iter(|&(m, n)| {
            let mut out = Vec::new();
            for (k, v) in states.iter().enumerate() {
                let anti = psi(m, &psis(n, v)).add(&psis(n, &psi(m, v)));
                let expect = if m == n { v.clone() } else { FockVector::zero(v.charge()) };
                out.push((format!("{{ψ_{m}, ψ*_{n}}} on #{k}"), anti == expect));
                let pp = psi(m, &psi(n, v)).add(&psi(n, &psi(m, v)));
                out.push((format!("{{ψ_{m}, ψ_{n}}} on #{k}"), pp.is_zero()));
                let ss = psis(m, &psis(n, v)).add(&psis(n, &psis(m, v)));
                out.push((format!("{{ψ*_{m}, ψ*_{n}}} on #{k}"), ss.is_zero()));

                let aa = apply_heisenberg(m, &apply_heisenberg(n, v)).sub(&apply_heisenberg(n, &apply_heisenberg(m, v)));
                let expect = if m + n == 0 { v.scale(&Scalar::from_integer(m)) } else { FockVector::zero(v.charge()) };
                out.push((format!("[a_{m}, a_{n}] on #{k}"), aa == expect));
                let ap = apply_heisenberg(m, &psi(n, v)).sub(&psi(n, &apply_heisenberg(m, v)));
                out.push((format!("[a_{m}, ψ_{n}] on #{k}"), ap == psi(n - m, v)));
                let aps = apply_heisenberg(m, &psis(n, v)).sub(&psis(n, &apply_heisenberg(m, v)));
                out.push((format!("[a_{m}, ψ*_{n}] on #{k}"), aps == psis(n + m, v).scale(&Scalar::from_integer(-1))));
            }
            out
        })
        .collect();
    Report::from_checks("fermion-relations", json!({"window": window, "maxEnergy": max_energy}), checks)
}

/// `⟨-r| ψ*_{m_r} ⋯ ψ*_{m_1} ψ_{n_1} ⋯ ψ_{n_r} |-r⟩ = δ_{m,n}` for strictly
/// decreasing sequences bounded below by `-r`, entries at most `top`.
pub fn vacuum_pairing(max_r: usize, top: i64) -> Report {
    fn decreasing(r: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
        if r == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for first in (lo..=hi).rev() {
            for mut rest in decreasing(r - 1, lo, first - 1) {
                rest.insert(0, first);
                out.push(rest);
            }
        }
        out
    }
    let mut checks = Vec::new();
    for r in 0..=max_r {
        let seqs = decreasing(r, -(r as i64), top);
        for ns in &seqs {
            let mut v = FockVector::vacuum(-(r as i64));
            for &n in ns.iter().rev() {
                v = apply_fermion(Mode::Psi, n, &v);
            }
            for ms in &seqs {
                let mut w = v.clone();
                for &m in ms {
                    w = apply_fermion(Mode::PsiStar, m, &w);
                }
                let got = w.coefficient(&Partition::empty());
                let expect = if ms == ns { Scalar::one() } else { Scalar::zero() };
                checks.push((format!("r={r} m={ms:?} n={ns:?}"), got == expect));
            }
        }
    }
    Report::from_checks("vacuum-pairing", json!({"maxR": max_r, "top": top}), checks)
}

/// `⟨0|e^{H(x/y)}|λ⟩ = s_λ(x/y)`, both by applying the exponential and by
/// Wick's determinant of dressed pairings.
pub fn boson_fermion(max_weight: usize) -> Result<Report> {
    let x = Alphabet::vars(&["x_1", "x_2"]);
    let y = Alphabet::vars(&["y_1", "y_2"]);
    let d = Dressing::new(x.clone(), y.clone());
    let checks = Partition::up_to(max_weight)
        .par_iter()
        .map(|l| {
            let r = l.len();
            let expect = supersym_schur(l, &x, &y);
            let direct = vacuum_image(&ket_partition(l, r)?, &x, &y)?;
            // moving e^H to the right conjugates each ψ and then fixes |-r⟩ = ψ*_{-r} ⋯ ψ*_{-1} |0⟩
            let rows: Vec<(i64, Dressing)> =
                (1..=r).map(|i| (l.part(i) as i64 - i as i64, d.clone())).collect();
            let cols: Vec<(i64, Dressing)> = (1..=r).map(|j| (-(j as i64), Dressing::none())).collect();
            let wick = wick_expectation(&rows, &cols)?;
            Ok(vec![(format!("{l} direct"), direct == expect), (format!("{l} wick"), wick == expect)])
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Report::from_checks("boson-fermion", json!({"maxWeight": max_weight}), checks.into_iter().flatten().collect()))
}

/// The classical layer: tableau evaluation, transpose duality and the
/// fermion relations.
pub fn classical(max_weight: usize, nvars: usize, window: i64) -> Result<Report> {
    let parts = vec![
        schur_evaluation(max_weight, nvars)?,
        transpose_duality(5),
        fermion_relations(window, 3),
        vacuum_pairing(3, window),
        boson_fermion(5)?,
    ];
    Ok(Report::combine(
        "classical",
        json!({"maxWeight": max_weight, "variables": nvars, "window": window}),
        parts,
    ))
}

// ---- seeded random suites ----

fn random_scalar(rng: &mut StdRng, names: &[&str]) -> Scalar {
    let mut s = Scalar::zero();
    for _ in 0..rng.gen_range(0..4) {
        let mut term = Scalar::from_rational(Rational::new(rng.gen_range(-5..=5).into(), rng.gen_range(1..=3).into()));
        for _ in 0..rng.gen_range(0..3) {
            term = &term * &Scalar::var(names[rng.gen_range(0..names.len())]);
        }
        s += term;
    }
    s
}

/// Ring axioms and determinant identities on random Scalars.
pub fn ring_axioms(seed: u64, cases: usize) -> Result<Report> {
    let mut rng = StdRng::seed_from_u64(seed);
    let names = ["x", "y", "t_1", "t_2"];
    let mut checks = Vec::new();
    for k in 0..cases {
        let (a, b, c) = (random_scalar(&mut rng, &names), random_scalar(&mut rng, &names), random_scalar(&mut rng, &names));
        checks.push((format!("#{k} commutativity"), &a * &b == &b * &a && &a + &b == &b + &a));
        checks.push((format!("#{k} associativity"), &(&a * &b) * &c == &a * &(&b * &c)));
        checks.push((format!("#{k} distributivity"), &a * &(&b + &c) == &(&a * &b) + &(&a * &c)));
        let m: Vec<Vec<Scalar>> = (0..3).map(|_| (0..3).map(|_| random_scalar(&mut rng, &names)).collect()).collect();
        let point: HashMap<Var, Rational> =
            names.iter().map(|n| (Var::new(n), Rational::new(rng.gen_range(-4..=4).into(), rng.gen_range(1..=3).into()))).collect();
        let lhs = det(&m)?.eval(&point)?;
        let evaluated: Vec<Vec<Rational>> =
            m.iter().map(|row| row.iter().map(|e| e.eval(&point)).collect::<Result<Vec<_>>>()).collect::<Result<_>>()?;
        checks.push((format!("#{k} eval commutes with det"), lhs == det(&evaluated)?));
    }
    Ok(Report::from_checks("ring-axioms", json!({"seed": seed, "cases": cases}), checks))
}

/// Dressed fermions against conjugation by `e^{±H}` on random vectors.
pub fn dressing(seed: u64, cases: usize) -> Result<Report> {
    let mut rng = StdRng::seed_from_u64(seed);
    let shapes = Partition::up_to(3);
    let letters = ["p", "q", "u"];
    let mut checks = Vec::new();
    for k in 0..cases {
        let mut v = FockVector::zero(0);
        for _ in 0..rng.gen_range(1..4) {
            let p = shapes[rng.gen_range(0..shapes.len())].clone();
            v.add_term(p, &Scalar::from_integer(rng.gen_range(1..4)));
        }
        let pick = |rng: &mut StdRng| -> Alphabet {
            (0..rng.gen_range(0..3)).map(|_| Scalar::var(letters[rng.gen_range(0..letters.len())])).collect()
        };
        let (x, y) = (pick(&mut rng), pick(&mut rng));
        let n = rng.gen_range(-3..=3);
        let mode = if rng.gen_bool(0.5) { Mode::Psi } else { Mode::PsiStar };
        let d = Dressing::new(x.clone(), y.clone());
        let lhs = apply_dressed_fermion(mode, n, &d, &v);
        let rhs = apply_exp_h(&x, &y, 1, &apply_fermion(mode, n, &apply_exp_h(&x, &y, -1, &v)));
        checks.push((format!("#{k} {mode:?}_{n} by {x:?}/{y:?}"), lhs == rhs));
    }
    Ok(Report::from_checks("dressing", json!({"seed": seed, "cases": cases}), checks))
}

/// `_{[t]}⟨μ|v⟩` computed at the default bra size and one deeper.
pub fn bra_depth_agrees(mu: &Partition, t: &Sequence, v: &FockVector) -> Result<bool> {
    let r = mu.len().max(v.max_length()) + 1;
    Ok(bra_refined_pair_at(mu, t, v, r)? == bra_refined_pair_at(mu, t, v, r + 1)?)
}
