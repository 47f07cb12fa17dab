//! Acceptance suite: one line per criterion, nonzero exit on any failure.
//!
//! Every comparison is exact equality of rational polynomials; the
//! tolerance is pinned at zero.

use std::process::ExitCode;
use std::time::Instant;

use multischur::exactalg::{Rational, Scalar};
use multischur::expansions::verify::{self, Report};
use multischur::expansions::{stable_grothendieck_schur, SymFunc};
use multischur::shapes::{Partition, Sequence};

/// Exact arithmetic throughout: any nonzero difference fails.
const TOLERANCE: u32 = 0;

type Criterion = fn() -> multischur::Result<Outcome>;

struct Outcome {
    passed: bool,
    cases: usize,
    notes: Vec<String>,
}

impl Outcome {
    fn from_reports(reports: Vec<Report>) -> Outcome {
        let passed = reports.iter().all(|r| r.passed);
        let cases = reports.iter().map(|r| r.cases).sum();
        let notes = reports.iter().flat_map(|r| r.failures.iter().map(move |f| format!("{}: {f}", r.theorem))).collect();
        Outcome { passed, cases, notes }
    }
}

fn symbolic_t() -> Sequence {
    Sequence::symbolic("t")
}

fn criterion_1() -> multischur::Result<Outcome> {
    Ok(Outcome::from_reports(vec![verify::orthonormality(&symbolic_t(), 5)?]))
}

fn criterion_2() -> multischur::Result<Outcome> {
    Ok(Outcome::from_reports(vec![verify::dual_engine(&symbolic_t(), 4)?]))
}

fn criterion_3() -> multischur::Result<Outcome> {
    Ok(Outcome::from_reports(vec![verify::hall_duality(&symbolic_t(), 5)?]))
}

fn criterion_4() -> multischur::Result<Outcome> {
    Ok(Outcome::from_reports(vec![
        verify::cauchy(&symbolic_t(), 3, 2, 2)?,
        verify::cauchy(&Sequence::zeros(), 4, 2, 2)?,
    ]))
}

fn criterion_5() -> multischur::Result<Outcome> {
    Ok(Outcome::from_reports(vec![verify::branching(&symbolic_t(), 5, 2, 2, 3)?]))
}

fn criterion_6() -> multischur::Result<Outcome> {
    Ok(Outcome::from_reports(vec![verify::truncation_stability(&symbolic_t(), 3, 3, 5)?]))
}

/// `binom(i-1, k) β^k` determinants by the Leibniz sum over permutations,
/// kept separate from the library's own binomial expansion.
fn leibniz_binomial_expansion(lambda: &Partition, d: usize) -> SymFunc {
    fn permutations(n: usize) -> Vec<(Vec<usize>, bool)> {
        if n == 0 {
            return vec![(vec![], false)];
        }
        let mut out = Vec::new();
        for (p, odd) in permutations(n - 1) {
            for pos in 0..n {
                let mut q = p.clone();
                q.insert(pos, n - 1);
                // inserting the largest element at `pos` adds n-1-pos inversions
                out.push((q, odd ^ ((n - 1 - pos) % 2 == 1)));
            }
        }
        out
    }
    fn choose(n: i64, k: i64) -> Rational {
        if k < 0 || k > n {
            return Rational::from_integer(0.into());
        }
        let mut num = 1i64;
        let mut den = 1i64;
        for i in 0..k {
            num *= n - i;
            den *= i + 1;
        }
        Rational::new(num.into(), den.into())
    }
    let beta = Scalar::var("beta");
    let mut terms = std::collections::BTreeMap::new();
    for mu in Partition::up_to(d).into_iter().filter(|mu| mu.contains(lambda)) {
        let n = mu.len();
        let mut total = Scalar::zero();
        for (perm, odd) in permutations(n) {
            let mut prod = Scalar::one();
            for (i0, &j0) in perm.iter().enumerate() {
                let (i, j) = (i0 as i64 + 1, j0 as i64 + 1);
                let k = -(lambda.part(i0 + 1) as i64) + mu.part(j0 + 1) as i64 + i - j;
                let c = choose(i - 1, k);
                prod = &prod * &Scalar::from_rational(c);
                if prod.is_zero() {
                    break;
                }
                prod = &prod * &beta.pow(k as u32);
            }
            total = if odd { &total - &prod } else { &total + &prod };
        }
        terms.insert(mu, total);
    }
    SymFunc::from_terms(terms, Some(d))
}

fn criterion_7() -> multischur::Result<Outcome> {
    let mut out = Outcome::from_reports(vec![verify::beta_chain(4, 2, 5)?]);
    let beta = Sequence::beta();
    for lambda in Partition::up_to(5) {
        out.cases += 1;
        if stable_grothendieck_schur(&lambda, &beta, 5)? != leibniz_binomial_expansion(&lambda, 5) {
            out.passed = false;
            out.notes.push(format!("binomial oracle disagrees at {lambda}"));
        }
    }
    Ok(out)
}

fn criterion_8() -> multischur::Result<Outcome> {
    Ok(Outcome::from_reports(vec![verify::classical(6, 4, 3)?]))
}

fn main() -> ExitCode {
    let criteria: [(&str, Criterion); 8] = [
        ("refined orthonormality, |λ|,|μ| ≤ 5", criterion_1),
        ("closed form vs Fock pairing, |λ| ≤ 4", criterion_2),
        ("Hall duality of G and g, D = 5", criterion_3),
        ("Cauchy kernel, symbolic t D = 3 and t = 0 D = 4", criterion_4),
        ("branching, |λ| ≤ 5 refined and |λ| ≤ 3 general", criterion_5),
        ("truncation stability, |λ| ≤ 3, r ≤ 3, D ≤ 5", criterion_6),
        ("β-specialisation chain", criterion_7),
        ("classical sanity and fermion relations", criterion_8),
    ];
    println!("acceptance: exact arithmetic, tolerance = {TOLERANCE}");
    let mut all = true;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = run();
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(o) => {
                let tag = if o.passed { "PASS" } else { "FAIL" };
                println!("[{tag}] criterion {}: {name} ({} cases, {secs:.2}s)", k + 1, o.cases);
                for n in o.notes.iter().take(10) {
                    println!("       {n}");
                }
                all &= o.passed;
            }
            Err(e) => {
                println!("[FAIL] criterion {}: {name} (error: {e}, {secs:.2}s)", k + 1);
                all = false;
            }
        }
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
