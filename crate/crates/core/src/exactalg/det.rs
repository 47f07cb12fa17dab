use super::Ring;
use crate::error::{Error, Result};

/// Division-free determinant of a square matrix given by rows.
///
/// Laplace expansion over rows with memoisation on the set of columns already
/// used: `partial[mask]` accumulates the signed sum over all ways of placing
/// the first `popcount(mask)` rows into the columns of `mask`. Costs
/// `O(2^n * n)` ring multiplications, which is fine for the matrix sizes used
/// in this crate (rarely above 8).
///
/// The 0x0 determinant is `1`.
pub fn det<R: Ring>(rows: &[Vec<R>]) -> Result<R> {
    let n = rows.len();
    if let Some((i, r)) = rows.iter().enumerate().find(|(_, r)| r.len() != n) {
        return Err(Error::Dimension(format!(
            "row {i} has {} entries in a matrix with {n} rows",
            r.len()
        )));
    }
    if n == 0 {
        return Ok(R::one());
    }
    if n > 24 {
        return Err(Error::Dimension(format!("{n}x{n} is too large for subset expansion")));
    }
    let full = (1usize << n) - 1;
    let mut partial: Vec<Option<R>> = vec![None; 1 << n];
    partial[0] = Some(R::one());
    for mask in 0..full {
        let Some(acc) = partial[mask].take() else { continue };
        let row = mask.count_ones() as usize;
        for (col, entry) in rows[row].iter().enumerate() {
            let bit = 1 << col;
            if mask & bit != 0 || entry.is_zero() {
                continue;
            }
            // columns already used to the right of `col` are inversions
            let inversions = (mask >> (col + 1)).count_ones();
            let mut term = acc.mul(entry);
            if inversions % 2 == 1 {
                term = term.neg();
            }
            let slot = &mut partial[mask | bit];
            *slot = Some(match slot.take() {
                Some(prev) => prev.add(&term),
                None => term,
            });
        }
    }
    Ok(partial[full].take().unwrap_or_else(R::zero))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::Scalar;

    fn s(n: &str) -> Scalar {
        Scalar::var(n)
    }

    #[test]
    fn empty_matrix_is_one() {
        let m: Vec<Vec<Scalar>> = vec![];
        assert_eq!(det(&m).unwrap(), Scalar::one());
    }

    #[test]
    fn two_by_two() {
        let m = vec![vec![s("a"), s("b")], vec![s("c"), s("d")]];
        assert_eq!(det(&m).unwrap(), &(&s("a") * &s("d")) - &(&s("b") * &s("c")));
    }

    #[test]
    fn equal_rows_vanish() {
        let r = vec![s("a"), s("b"), Scalar::from_integer(3)];
        let m = vec![r.clone(), vec![s("c"), s("d"), s("e")], r];
        assert!(det(&m).unwrap().is_zero());
    }

    #[test]
    fn non_square_is_rejected() {
        let m = vec![vec![s("a"), s("b")]];
        assert!(matches!(det(&m), Err(Error::Dimension(_))));
    }

    #[test]
    fn permutation_sign() {
        // anti-diagonal 3x3 identity: permutation (0 2) is odd
        let z = Scalar::zero;
        let o = Scalar::one;
        let m = vec![vec![z(), z(), o()], vec![z(), o(), z()], vec![o(), z(), z()]];
        assert_eq!(det(&m).unwrap(), Scalar::from_integer(-1));
    }
}
