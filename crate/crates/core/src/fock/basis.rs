use super::ops::{apply_dressed_fermion, apply_exp_h, apply_fermion, Dressing, Mode};
use super::state::{FockVector, MayaState};
use crate::error::{Error, Result};
use crate::exactalg::{det, Scalar};
use crate::shapes::{Alphabet, AlphabetSequence, Partition, Sequence};

fn check_r(lambda: &Partition, r: usize) -> Result<()> {
    if r < lambda.len() {
        return Err(Error::Domain(format!("r = {r} is below ℓ({lambda}) = {}", lambda.len())));
    }
    Ok(())
}

fn one_letter(t: &Sequence, i: usize) -> Result<Alphabet> {
    Ok(Alphabet::new(vec![t.get(i)?]))
}

/// `|λ⟩ = ψ_{λ_1-1} ψ_{λ_2-2} ⋯ ψ_{λ_r-r} |-r⟩`.
pub fn ket_partition(lambda: &Partition, r: usize) -> Result<FockVector> {
    check_r(lambda, r)?;
    let mut v = FockVector::vacuum(-(r as i64));
    for i in (1..=r).rev() {
        v = apply_fermion(Mode::Psi, lambda.part(i) as i64 - i as i64, &v);
    }
    Ok(v)
}

/// `|λ⟩_{bx/by}`: the dressed creators `e^{H(x^(i)/y^(i))} ψ_{λ_i-i} e^{-H(x^(i)/y^(i))}`
/// applied to `|-r⟩` for `i = r, …, 1`.
pub fn ket_general(lambda: &Partition, bx: &AlphabetSequence, by: &AlphabetSequence, r: usize) -> Result<FockVector> {
    check_r(lambda, r)?;
    let mut v = FockVector::vacuum(-(r as i64));
    for i in (1..=r).rev() {
        let d = Dressing::new(bx.get(i)?, by.get(i)?);
        v = apply_dressed_fermion(Mode::Psi, lambda.part(i) as i64 - i as i64, &d, &v);
    }
    Ok(v)
}

/// `|λ⟩_{[t]} = ψ_{λ_1-1} e^{H(t_1)} ψ_{λ_2-2} e^{H(t_2)} ⋯ ψ_{λ_r-r} e^{H(t_r)} |-r⟩`.
pub fn ket_refined(lambda: &Partition, t: &Sequence, r: usize) -> Result<FockVector> {
    check_r(lambda, r)?;
    let mut v = FockVector::vacuum(-(r as i64));
    for i in (1..=r).rev() {
        // e^{H(t_r)} fixes |-r⟩
        if i < r {
            v = apply_exp_h(&one_letter(t, i)?, &Alphabet::empty(), 1, &v);
        }
        v = apply_fermion(Mode::Psi, lambda.part(i) as i64 - i as i64, &v);
    }
    Ok(v)
}

/// `_{[t]}⟨μ|v⟩` with the bra
/// `⟨-r| e^{-H(t_r)} ψ*_{μ_r-r} ⋯ e^{-H(t_1)} ψ*_{μ_1-1}`, using
/// `r = max(ℓ(μ), ℓ of the support of v) + 1`.
pub fn bra_refined_pair(mu: &Partition, t: &Sequence, v: &FockVector) -> Result<Scalar> {
    let r = mu.len().max(v.max_length()) + 1;
    bra_refined_pair_at(mu, t, v, r)
}

/// [`bra_refined_pair`] at an explicit bra size `r`.
pub fn bra_refined_pair_at(mu: &Partition, t: &Sequence, v: &FockVector, r: usize) -> Result<Scalar> {
    if v.charge() != 0 {
        return Err(Error::Charge { expected: 0, found: v.charge() });
    }
    check_r(mu, r)?;
    let mut w = v.clone();
    for j in 1..=r {
        w = apply_fermion(Mode::PsiStar, mu.part(j) as i64 - j as i64, &w);
        if w.is_zero() {
            return Ok(Scalar::zero());
        }
        w = apply_exp_h(&one_letter(t, j)?, &Alphabet::empty(), -1, &w);
    }
    Ok(w.coefficient(&Partition::empty()))
}

/// `_{bp}⟨μ|v⟩` for a general tuple `bp` satisfying the stability
/// condition: `⟨-r| e^{-H(p^(r+1))} ∏_{j=r..1} e^{H(p^(j))} ψ*_{μ_j-j} e^{-H(p^(j))}`.
pub fn bra_general_pair_at(mu: &Partition, bp: &AlphabetSequence, v: &FockVector, r: usize) -> Result<Scalar> {
    if v.charge() != 0 {
        return Err(Error::Charge { expected: 0, found: v.charge() });
    }
    check_r(mu, r)?;
    let mut w = v.clone();
    for j in 1..=r {
        // applying ⟨·| to ψ*-side: the dressing of a bra factor acts on kets as
        // the dressed annihilator
        let d = Dressing::new(bp.get(j)?, Alphabet::empty());
        w = apply_dressed_fermion(Mode::PsiStar, mu.part(j) as i64 - j as i64, &d, &w);
        if w.is_zero() {
            return Ok(Scalar::zero());
        }
    }
    let w = apply_exp_h(&bp.get(r + 1)?, &Alphabet::empty(), -1, &w);
    Ok(w.coefficient(&Partition::empty()))
}

/// `⟨0| e^{H(x/y)} |v⟩`.
pub fn vacuum_image(v: &FockVector, x: &Alphabet, y: &Alphabet) -> Result<Scalar> {
    if v.charge() != 0 {
        return Err(Error::Charge { expected: 0, found: v.charge() });
    }
    Ok(apply_exp_h(x, y, 1, v).coefficient(&Partition::empty()))
}

/// `⟨0| Ψ_{m_1} ⋯ Ψ_{m_k} Ψ*_{n_k} ⋯ Ψ*_{n_1} |0⟩` for dressed fermions,
/// computed as `det(⟨Ψ_{m_i} Ψ*_{n_j}⟩)`.
pub fn wick_expectation(rows: &[(i64, Dressing)], cols: &[(i64, Dressing)]) -> Result<Scalar> {
    if rows.len() != cols.len() {
        return Err(Error::Dimension(format!("{} creators against {} annihilators", rows.len(), cols.len())));
    }
    let vac = FockVector::vacuum(0);
    let annihilated: Vec<FockVector> =
        cols.iter().map(|(n, d)| apply_dressed_fermion(Mode::PsiStar, *n, d, &vac)).collect();
    let matrix: Vec<Vec<Scalar>> = rows
        .iter()
        .map(|(m, d)| {
            annihilated
                .iter()
                .map(|w| apply_dressed_fermion(Mode::Psi, *m, d, w).coefficient(&Partition::empty()))
                .collect()
        })
        .collect();
    det(&matrix)
}

/// `⟨0| X |0⟩` for the word `ψ_{m_1} ⋯ ψ_{m_k} ψ*_{n_k} ⋯ ψ*_{n_1}` applied
/// literally, for checking [`wick_expectation`].
pub fn direct_expectation(rows: &[(i64, Dressing)], cols: &[(i64, Dressing)]) -> Scalar {
    let mut v = FockVector::vacuum(0);
    for (n, d) in cols {
        v = apply_dressed_fermion(Mode::PsiStar, *n, d, &v);
    }
    for (m, d) in rows.iter().rev() {
        v = apply_dressed_fermion(Mode::Psi, *m, d, &v);
    }
    if v.charge() != 0 {
        return Scalar::zero();
    }
    v.coefficient(&Partition::empty())
}

/// The standard basis state `|λ⟩` in charge zero.
pub fn standard_ket(lambda: &Partition) -> FockVector {
    FockVector::basis(MayaState::new(0, lambda.clone()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition;

    #[test]
    fn ket_partition_examples() {
        assert_eq!(ket_partition(&Partition::empty(), 0).unwrap(), FockVector::vacuum(0));
        assert_eq!(ket_partition(&partition![2, 1], 2).unwrap(), standard_ket(&partition![2, 1]));
        assert_eq!(ket_partition(&partition![1], 2).unwrap(), ket_partition(&partition![1], 1).unwrap());
        assert!(matches!(ket_partition(&partition![1, 1], 1), Err(Error::Domain(_))));
    }

    #[test]
    fn ket_refined_with_zero_sequence_is_standard() {
        for lambda in Partition::up_to(4) {
            let r = lambda.len() + 1;
            assert_eq!(ket_refined(&lambda, &Sequence::zeros(), r).unwrap(), standard_ket(&lambda));
        }
    }

    #[test]
    fn ket_refined_matches_general_form() {
        let t = Sequence::symbolic("t");
        let lambda = partition![2, 1];
        for r in 2..4 {
            let a = ket_refined(&lambda, &t, r).unwrap();
            let b = ket_general(&lambda, &AlphabetSequence::refined(t.clone()), &AlphabetSequence::empty(), r).unwrap();
            assert_eq!(a, b, "r={r}");
        }
    }

    #[test]
    fn orthonormal_small_cases() {
        let t = Sequence::symbolic("t");
        let shapes = Partition::up_to(3);
        for lambda in &shapes {
            let v = ket_refined(lambda, &t, lambda.len() + 1).unwrap();
            for mu in &shapes {
                let expect = if mu == lambda { Scalar::one() } else { Scalar::zero() };
                assert_eq!(bra_refined_pair(mu, &t, &v).unwrap(), expect, "{mu} vs {lambda}");
            }
        }
    }

    #[test]
    fn bra_rejects_wrong_charge() {
        let v = FockVector::vacuum(1);
        assert_eq!(
            bra_refined_pair(&Partition::empty(), &Sequence::symbolic("t"), &v),
            Err(Error::Charge { expected: 0, found: 1 })
        );
        assert_eq!(bra_refined_pair(&Partition::empty(), &Sequence::symbolic("t"), &FockVector::vacuum(0)), Ok(Scalar::one()));
    }

    #[test]
    fn general_bra_matches_refined_bra() {
        let t = Sequence::symbolic("t");
        let bp = AlphabetSequence::refined(t.clone());
        let v = ket_general(
            &partition![2, 1],
            &AlphabetSequence::explicit(vec![Alphabet::vars(&["a1"]), Alphabet::vars(&["a2"])]),
            &AlphabetSequence::empty(),
            3,
        )
        .unwrap();
        for mu in partition![2, 1].subpartitions() {
            for r in 3..5 {
                assert_eq!(
                    bra_general_pair_at(&mu, &bp, &v, r).unwrap(),
                    bra_refined_pair_at(&mu, &t, &v, r).unwrap(),
                    "{mu} r={r}"
                );
            }
        }
    }

    #[test]
    fn wick_examples() {
        let n = Dressing::none;
        assert_eq!(wick_expectation(&[(-1, n())], &[(-1, n())]).unwrap(), Scalar::one());
        assert_eq!(wick_expectation(&[(0, n())], &[(0, n())]).unwrap(), Scalar::zero());
        let x = Alphabet::vars(&["x1", "x2"]);
        let y = Alphabet::vars(&["y1"]);
        for l1 in 0..4 {
            let d = Dressing::new(x.clone(), y.clone());
            assert_eq!(
                wick_expectation(&[(l1 - 1, d)], &[(-1, n())]).unwrap(),
                crate::supersym::h_super(l1, &x, &y)
            );
        }
        assert!(matches!(wick_expectation(&[], &[(0, n())]), Err(Error::Dimension(_))));
    }

    #[test]
    fn wick_matches_direct_word() {
        let x = Alphabet::vars(&["x1"]);
        let d = Dressing::new(x, Alphabet::empty());
        let rows = vec![(1, d.clone()), (-1, d)];
        let cols = vec![(-1, Dressing::none()), (-2, Dressing::none())];
        assert_eq!(wick_expectation(&rows, &cols).unwrap(), direct_expectation(&rows, &cols));
    }

    #[test]
    fn vacuum_image_of_single_box() {
        let x = Alphabet::vars(&["x1", "x2"]);
        let got = vacuum_image(&standard_ket(&partition![1]), &x, &Alphabet::empty()).unwrap();
        assert_eq!(got, &Scalar::var("x1") + &Scalar::var("x2"));
    }
}
