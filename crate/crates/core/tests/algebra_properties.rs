//! Property tests for the exact algebra, partitions, alphabets and
//! supersymmetric generators.

use std::collections::HashMap;

use multischur::exactalg::{det, Monomial, Rational, Scalar, Var};
use multischur::shapes::{refined_alphabet, Alphabet, AlphabetSequence, Partition, Sequence};
use multischur::supersym::{e_elem, h_super, supersym_schur};
use proptest::prelude::*;

const NAMES: [&str; 3] = ["a", "b", "c"];

fn scalar() -> impl Strategy<Value = Scalar> {
    prop::collection::vec((-3i64..=3, 0u32..3, 0u32..3, 0u32..2), 0..4).prop_map(|terms| {
        let mut s = Scalar::zero();
        for (c, ea, eb, ec) in terms {
            let m = Monomial::from_pairs([(Var::new("a"), ea), (Var::new("b"), eb), (Var::new("c"), ec)]);
            s.add_term(m, Rational::from_integer(c.into()));
        }
        s
    })
}

fn rational() -> impl Strategy<Value = Rational> {
    (-5i64..=5, 1i64..=4).prop_map(|(p, q)| Rational::new(p.into(), q.into()))
}

fn matrix(n: usize) -> impl Strategy<Value = Vec<Vec<Scalar>>> {
    prop::collection::vec(prop::collection::vec(scalar(), n), n)
}

fn partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(0usize..5, 0..4).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

/// Laplace expansion along the first row.
fn cofactor_det(m: &[Vec<Scalar>]) -> Scalar {
    if m.is_empty() {
        return Scalar::one();
    }
    let mut total = Scalar::zero();
    for j in 0..m.len() {
        let minor: Vec<Vec<Scalar>> =
            m[1..].iter().map(|row| row.iter().enumerate().filter(|(k, _)| *k != j).map(|(_, x)| x.clone()).collect()).collect();
        let term = &m[0][j] * &cofactor_det(&minor);
        total = if j % 2 == 0 { &total + &term } else { &total - &term };
    }
    total
}

fn x_alphabet(n: usize) -> Alphabet {
    Alphabet::indexed("x", n)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &Scalar::zero(), a.clone());
        prop_assert_eq!(&a * &Scalar::one(), a.clone());
        prop_assert!((&a - &a).is_zero());
        prop_assert!((&a * &Scalar::zero()).is_zero());
    }

    #[test]
    fn determinant_matches_cofactor_expansion(m in matrix(4)) {
        prop_assert_eq!(det(&m).unwrap(), cofactor_det(&m));
    }

    #[test]
    fn evaluation_commutes_with_determinant(m in matrix(3), va in rational(), vb in rational(), vc in rational()) {
        let point: HashMap<Var, Rational> =
            NAMES.iter().zip([va, vb, vc]).map(|(n, v)| (Var::new(n), v)).collect();
        let evaluated: Vec<Vec<Scalar>> = m
            .iter()
            .map(|row| row.iter().map(|x| Scalar::from_rational(x.eval(&point).unwrap())).collect())
            .collect();
        let lhs = det(&m).unwrap().eval(&point).unwrap();
        let rhs = det(&evaluated).unwrap().constant().unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn equal_rows_give_zero(m in matrix(3)) {
        let mut m = m;
        m[2] = m[0].clone();
        prop_assert!(det(&m).unwrap().is_zero());
    }

    #[test]
    fn transpose_is_an_involution(p in partition()) {
        prop_assert_eq!(p.transpose().transpose(), p.clone());
        prop_assert_eq!(p.transpose().size(), p.size());
    }

    #[test]
    fn containment_is_a_partial_order(a in partition(), b in partition(), c in partition()) {
        prop_assert!(a.contains(&a));
        if a.contains(&b) && b.contains(&a) {
            prop_assert_eq!(&a, &b);
        }
        if a.contains(&b) && b.contains(&c) {
            prop_assert!(a.contains(&c));
        }
        prop_assert!(a.contains(&Partition::empty()));
    }

    #[test]
    fn subpartitions_are_exactly_the_contained_shapes(p in partition()) {
        let subs = p.subpartitions();
        prop_assert!(subs.iter().all(|mu| p.contains(mu)));
        let expected = Partition::up_to(p.size()).into_iter().filter(|mu| p.contains(mu)).count();
        prop_assert_eq!(subs.len(), expected);
    }

    #[test]
    fn refined_alphabets_grow_by_one_letter(i in 1usize..8) {
        let t = Sequence::symbolic("t");
        let a = refined_alphabet(&t, i).unwrap();
        let b = refined_alphabet(&t, i + 1).unwrap();
        prop_assert_eq!(a.len() + 1, b.len());
        prop_assert_eq!(&b.entries()[..a.len()], a.entries());
        prop_assert_eq!(&b.entries()[a.len()], &Scalar::var(&format!("t_{i}")));
        prop_assert_eq!(AlphabetSequence::refined(t).get(i).unwrap(), a);
    }

    #[test]
    fn generating_series_are_mutually_inverse(n in 1i64..6, nx in 0usize..3, ny in 0usize..3) {
        let x = x_alphabet(nx);
        let y = Alphabet::indexed("y", ny);
        let mut total = Scalar::zero();
        for k in 0..=n {
            total += &h_super(k, &x, &y) * &h_super(n - k, &y, &x);
        }
        prop_assert!(total.is_zero());
    }

    #[test]
    fn complete_and_elementary_are_dual(n in 1i64..6, nx in 1usize..4) {
        // Σ (-1)^k e_k h_{n-k} = 0 for n > 0
        let x = x_alphabet(nx);
        let mut total = Scalar::zero();
        for k in 0..=n {
            let term = &e_elem(k, &x) * &h_super(n - k, &x, &Alphabet::empty());
            total = if k % 2 == 0 { &total + &term } else { &total - &term };
        }
        prop_assert!(total.is_zero());
    }

    #[test]
    fn shared_letters_cancel(n in 0i64..5, p in partition()) {
        let x = x_alphabet(2);
        let y = Alphabet::vars(&["y1"]);
        let shared = Alphabet::vars(&["c"]);
        prop_assert_eq!(h_super(n, &x.union(&shared), &y.union(&shared)), h_super(n, &x, &y));
        if p.size() <= 4 {
            prop_assert_eq!(
                supersym_schur(&p, &x.union(&shared), &y.union(&shared)),
                supersym_schur(&p, &x, &y)
            );
        }
    }

    #[test]
    fn json_round_trip(a in scalar()) {
        let text = serde_json::to_string(&a).unwrap();
        let back: Scalar = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back, a);
    }
}
