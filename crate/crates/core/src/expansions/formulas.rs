use rayon::prelude::*;

use super::symfunc::{Coefficients, HPoly, SymFunc};
use crate::error::{Error, Result};
use crate::exactalg::{det, Ring, Scalar};
use crate::shapes::{stable_tail, Alphabet, AlphabetSequence, Partition, Sequence};
use crate::supersym::{e_elem, h_super};

/// Index data of a Jacobi–Trudi type determinant: the shapes `λ`, `μ` and
/// the matrix size.
#[derive(Clone, Debug)]
pub struct CoefficientMatrixSpec<'a> {
    pub lambda: &'a Partition,
    pub mu: &'a Partition,
    pub size: usize,
}

impl<'a> CoefficientMatrixSpec<'a> {
    pub fn new(lambda: &'a Partition, mu: &'a Partition, size: usize) -> Result<Self> {
        if size < lambda.len().max(mu.len()) {
            return Err(Error::Dimension(format!("matrix size {size} is below the lengths of {lambda} and {mu}")));
        }
        Ok(CoefficientMatrixSpec { lambda, mu, size })
    }

    /// `λ_i - μ_j - i + j`, 1-based.
    pub fn shift(&self, i: usize, j: usize) -> i64 {
        self.lambda.part(i) as i64 - self.mu.part(j) as i64 - i as i64 + j as i64
    }

    /// `det(entry(i, j, λ_i - μ_j - i + j))_{1 ≤ i,j ≤ size}`.
    pub fn determinant<R: Ring>(&self, mut entry: impl FnMut(usize, usize, i64) -> Result<R>) -> Result<R> {
        let mut rows = Vec::with_capacity(self.size);
        for i in 1..=self.size {
            let mut row = Vec::with_capacity(self.size);
            for j in 1..=self.size {
                row.push(entry(i, j, self.shift(i, j))?);
            }
            rows.push(row);
        }
        det(&rows)
    }
}

fn collect_nonzero(pairs: Vec<(Partition, Scalar)>) -> Coefficients {
    pairs.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

fn check_degree(lambda: &Partition, d: usize) -> Result<()> {
    if d < lambda.size() {
        return Err(Error::Domain(format!("degree bound {d} is below |{lambda}| = {}", lambda.size())));
    }
    Ok(())
}

fn prefix_alphabet(t: &Sequence, n: usize) -> Result<Alphabet> {
    Ok(Alphabet::new(t.prefix(n)?))
}

/// `S_λ(bx/by) = det(h_{λ_i-i+j}(x^(i)/y^(i)))` of size `ℓ(λ)`.
pub fn multi_schur(lambda: &Partition, bx: &AlphabetSequence, by: &AlphabetSequence) -> Result<Scalar> {
    skew_multi_schur(lambda, &Partition::empty(), bx, by)
}

/// `S_{λ/μ}(bx/by) = det(h_{λ_i-μ_j-i+j}(x^(i)/y^(i)))` of size `max(ℓ(λ), ℓ(μ))`.
pub fn skew_multi_schur(
    lambda: &Partition,
    mu: &Partition,
    bx: &AlphabetSequence,
    by: &AlphabetSequence,
) -> Result<Scalar> {
    let spec = CoefficientMatrixSpec::new(lambda, mu, lambda.len().max(mu.len()))?;
    spec.determinant(|i, _, k| Ok(h_super(k, &bx.get(i)?, &by.get(i)?)))
}

/// The flagged Schur polynomial: the multi-Schur function with
/// `x^(i) = (x_1, …, x_{f_i})` and no `y`.
pub fn flagged_schur(lambda: &Partition, flag: &[usize], vars: &[Scalar]) -> Result<Scalar> {
    if flag.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::Domain(format!("flag {flag:?} is not weakly increasing")));
    }
    if flag.len() < lambda.len() {
        return Err(Error::Domain(format!("flag {flag:?} is shorter than ℓ({lambda})")));
    }
    if let Some(&f) = flag.iter().find(|&&f| f > vars.len()) {
        return Err(Error::OutOfRange { index: f, len: vars.len() });
    }
    let bx = AlphabetSequence::explicit(flag.iter().map(|&f| Alphabet::new(vars[..f].to_vec())).collect());
    multi_schur(lambda, &bx, &AlphabetSequence::empty())
}

/// `s_λ(X)_{bx/by} = Σ_{μ ⊆ λ} S_{λ/μ}(bx/by) s_μ(X)`.
pub fn schur_expand_multischur(lambda: &Partition, bx: &AlphabetSequence, by: &AlphabetSequence) -> Result<SymFunc> {
    let pairs = lambda
        .subpartitions()
        .into_par_iter()
        .map(|mu| skew_multi_schur(lambda, &mu, bx, by).map(|c| (mu, c)))
        .collect::<Result<Vec<_>>>()?;
    Ok(SymFunc::from_terms(collect_nonzero(pairs), None))
}

/// `g_λ(X; t)`: the Schur expansion of the refined tuple `[t]`.
pub fn refined_dual_grothendieck(lambda: &Partition, t: &Sequence) -> Result<SymFunc> {
    schur_expand_multischur(lambda, &AlphabetSequence::refined(t.clone()), &AlphabetSequence::empty())
}

/// Coefficients of `s_λ(X)_{bx/by}` in the basis `g_μ(X; t)`:
/// `det(h_{λ_i-μ_j-i+j}(x^(i) / (y^(i) ∪ (t_1, …, t_{j-1}))))` of size `ℓ(λ)`.
pub fn expand_in_refined_basis(
    lambda: &Partition,
    bx: &AlphabetSequence,
    by: &AlphabetSequence,
    t: &Sequence,
) -> Result<Coefficients> {
    let pairs = lambda
        .subpartitions()
        .into_par_iter()
        .map(|mu| {
            let spec = CoefficientMatrixSpec::new(lambda, &mu, lambda.len())?;
            let c = spec.determinant(|i, j, k| Ok(h_super(k, &bx.get(i)?, &by.get(i)?.union(&prefix_alphabet(t, j - 1)?))))?;
            Ok((mu, c))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(collect_nonzero(pairs))
}

/// `s^r_λ(X)^{bx} = Σ det(e_{-λ_i+μ_j+i-j}(-x^(i))) s_μ(X)` over `μ ⊇ λ` with
/// `ℓ(μ) ≤ r`, kept up to degree `D`.
pub fn truncated_dual_expansion(lambda: &Partition, bx: &AlphabetSequence, r: usize, d: usize) -> Result<SymFunc> {
    check_degree(lambda, d)?;
    if r < lambda.len() {
        return Err(Error::Domain(format!("r = {r} is below ℓ({lambda})")));
    }
    let negated: Vec<Alphabet> = bx.take(r)?.iter().map(Alphabet::negated).collect();
    let pairs = lambda
        .superpartitions(d, Some(r))
        .into_par_iter()
        .map(|mu| {
            let spec = CoefficientMatrixSpec::new(lambda, &mu, r)?;
            let c = spec.determinant(|i, _, k| Ok(e_elem(-k, &negated[i - 1])))?;
            Ok((mu, c))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SymFunc::from_terms(collect_nonzero(pairs), Some(d)))
}

/// Coefficients of `s_λ(X)^{bx}` in the stable basis `G_μ(X; t)` for
/// `μ ⊇ λ`, `|μ| ≤ D`: `det(h_{-λ_i+μ_j+i-j}((t_1, …, t_{j-1}) / x^(i)))` of
/// size `max(R, ℓ(μ))`.
///
/// `bx` must eventually grow by the entries of `t`, one per index, from some
/// `R` on; otherwise the stable dual does not exist.
pub fn stable_dual_in_g(lambda: &Partition, bx: &AlphabetSequence, t: &Sequence, d: usize) -> Result<Coefficients> {
    stable_dual_in_g_sized(lambda, bx, t, d, 0)
}

/// [`stable_dual_in_g`] with the matrix size raised to at least `min_size`.
pub fn stable_dual_in_g_sized(
    lambda: &Partition,
    bx: &AlphabetSequence,
    t: &Sequence,
    d: usize,
    min_size: usize,
) -> Result<Coefficients> {
    check_degree(lambda, d)?;
    let st = stable_tail(bx)
        .ok_or_else(|| Error::Stability("the tuple never settles into growth by one letter per index".into()))?;
    let supers = lambda.superpartitions(d, None);
    let top = supers.iter().map(Partition::len).max().unwrap_or(0).max(st.r).max(min_size);
    // the letters added after x^(R) must be the sequence t itself
    for p in 1..=top + d {
        let (Ok(a), Ok(b)) = (st.increments.get(p), t.get(p)) else {
            return Err(Error::Stability(format!("cannot compare the tail of the tuple with t at index {p}")));
        };
        if a != b {
            return Err(Error::Stability(format!("the tuple grows by {a} at step {p} but t_{p} = {b}")));
        }
    }
    let xs = bx.take(top)?;
    let pairs = supers
        .into_par_iter()
        .map(|mu| {
            let size = st.r.max(mu.len()).max(min_size);
            let spec = CoefficientMatrixSpec::new(lambda, &mu, size)?;
            let c = spec.determinant(|i, j, k| Ok(h_super(-k, &prefix_alphabet(t, j - 1)?, &xs[i - 1])))?;
            Ok((mu, c))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(collect_nonzero(pairs))
}

/// `G_λ(X; t)` in the Schur basis up to degree `D`:
/// `Σ_{μ ⊇ λ} det(e_{-λ_i+μ_j+i-j}(-t_1, …, -t_{i-1})) s_μ(X)` with size `ℓ(μ)`.
pub fn stable_grothendieck_schur(lambda: &Partition, t: &Sequence, d: usize) -> Result<SymFunc> {
    check_degree(lambda, d)?;
    let pairs = lambda
        .superpartitions(d, None)
        .into_par_iter()
        .map(|mu| {
            let spec = CoefficientMatrixSpec::new(lambda, &mu, mu.len().max(lambda.len()))?;
            let c = spec.determinant(|i, _, k| Ok(e_elem(-k, &prefix_alphabet(t, i - 1)?.negated())))?;
            Ok((mu, c))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SymFunc::from_terms(collect_nonzero(pairs), Some(d)))
}

/// `s_{λ/μ}(X)_{(bx/by)/bp}` in the Schur basis, from the determinant
/// `det(Σ_{m+n=λ_i-μ_j-i+j} h_m(x^(i)/(y^(i) ∪ p^(j))) h_n(X))`.
///
/// The matrix size is `max(ℓ(λ), ℓ(μ), R)` where `R` is the stability index
/// of `bp`.
pub fn skew_function(
    lambda: &Partition,
    mu: &Partition,
    bx: &AlphabetSequence,
    by: &AlphabetSequence,
    bp: &AlphabetSequence,
) -> Result<SymFunc> {
    let size = skew_size(lambda, mu, bp)?;
    Ok(skew_hpoly(lambda, mu, bx, by, bp, size)?.to_schur())
}

fn skew_size(lambda: &Partition, mu: &Partition, bp: &AlphabetSequence) -> Result<usize> {
    let st = stable_tail(bp)
        .ok_or_else(|| Error::Stability("the bra tuple never settles into growth by one letter per index".into()))?;
    Ok(lambda.len().max(mu.len()).max(st.r))
}

/// The skew determinant as a polynomial in the `h_n(X)`, at an explicit size.
pub fn skew_hpoly(
    lambda: &Partition,
    mu: &Partition,
    bx: &AlphabetSequence,
    by: &AlphabetSequence,
    bp: &AlphabetSequence,
    size: usize,
) -> Result<HPoly> {
    let spec = CoefficientMatrixSpec::new(lambda, mu, size)?;
    spec.determinant(|i, j, k| {
        let (x, y) = (bx.get(i)?, by.get(i)?.union(&bp.get(j)?));
        let mut entry = HPoly::default();
        for m in 0..=k.max(-1) {
            let c = h_super(m, &x, &y);
            entry = entry.add(&HPoly::h(k - m, c));
        }
        Ok(entry)
    })
}
