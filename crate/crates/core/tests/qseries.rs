mod common;

use num_bigint::BigInt;
use proptest::prelude::*;

use baxlab_core::qseries::{
    baxter_number, baxter_polynomial_lhs, baxter_polynomial_rhs, catalan, q_binomial,
    tlp_count_formula, PolyTerm, QPoly, TQPoly,
};

/// Evaluates a `(t,q)` polynomial at integers.
fn eval(p: &TQPoly, t: u32, q: u32) -> BigInt {
    p.terms()
        .map(|((i, j), c)| c * BigInt::from(t).pow(i) * BigInt::from(q).pow(j))
        .sum()
}

#[test]
fn q_binomial_matches_subset_oracle() {
    for n in 0..=14 {
        for k in 0..=n {
            let got: Vec<BigInt> = q_binomial(n as u32, k as u32).to_dense();
            let want: Vec<BigInt> = common::q_binomial(n, k)
                .into_iter()
                .map(BigInt::from)
                .collect();
            assert_eq!(got, want, "[{n} {k}]");
        }
    }
}

#[test]
fn q_binomial_symmetry_and_specialization() {
    for n in 0..=20u32 {
        for k in 0..=n {
            let p = q_binomial(n, k);
            let top = k * (n - k);
            assert_eq!(p.degree(), Some(top));
            for d in 0..=top {
                assert_eq!(p.coeff(d), p.coeff(top - d), "[{n} {k}] at q^{d}");
            }
            assert_eq!(
                p.eval_at_one(),
                BigInt::from(common::binom(n as u128, k as u128))
            );
        }
    }
    assert!(q_binomial(3, 4).is_zero());
}

#[test]
fn q_binomial_examples() {
    assert_eq!(q_binomial(3, 2), QPoly::from_coeffs(&[1, 1, 1]));
    assert_eq!(q_binomial(4, 2), QPoly::from_coeffs(&[1, 1, 2, 1, 1]));
    assert_eq!(q_binomial(7, 0), QPoly::one());
}

#[test]
fn exact_division() {
    let a = QPoly::from_coeffs(&[1, 1, 1]);
    assert_eq!((&a * &a).exact_div(&a).unwrap(), a);
    assert_eq!(
        q_binomial(4, 2)
            .exact_div(&QPoly::from_coeffs(&[1, 0, 1]))
            .unwrap(),
        a
    );
    assert!(QPoly::from_coeffs(&[1, 1]).exact_div(&a).is_err());
    assert!(a.exact_div(&QPoly::zero()).is_err());
}

#[test]
fn counts_match_oracle() {
    for n in 1..=20u64 {
        assert_eq!(
            baxter_number(n),
            common::baxter_number(n as u128) as u64,
            "B_{n}"
        );
        let sum: u128 = (0..n)
            .map(|k| tlp_count_formula(n, k).to_u64().unwrap() as u128)
            .sum();
        assert_eq!(sum, common::baxter_number(n as u128));
    }
    let first: Vec<u64> = (1..=10)
        .map(|n| baxter_number(n).to_u64().unwrap())
        .collect();
    assert_eq!(first, [1, 2, 6, 22, 92, 422, 2074, 10754, 58202, 326240]);
    for n in 0..=15 {
        assert_eq!(catalan(n), common::catalan(n as u128) as u64);
    }
}

#[test]
fn polynomial_identity_against_brute_statistics() {
    for n in 1..=7 {
        let lhs = baxter_polynomial_lhs(n);
        let rhs = baxter_polynomial_rhs(n as u32).unwrap();
        assert_eq!(lhs, rhs, "n={n}");
        let brute = common::baxter_polynomial_brute(n);
        let got: Vec<((u32, u32), BigInt)> = lhs.terms().map(|(k, c)| (k, c.clone())).collect();
        let want: Vec<((u32, u32), BigInt)> = brute
            .into_iter()
            .map(|(k, c)| (k, BigInt::from(c)))
            .collect();
        assert_eq!(got, want, "n={n}");
    }
}

#[test]
fn closed_form_agrees_with_integer_evaluation() {
    for n in 1..=12u32 {
        let rhs = baxter_polynomial_rhs(n).unwrap();
        for (t, q) in [(1, 1), (2, 2), (3, 2), (1, 3)] {
            let want = if q == 1 {
                // the product formula needs q >= 2; at q = 1 the value is a plain count
                BigInt::from(
                    (0..n as u128)
                        .map(|k| common::tlp_summand(n as u128, k) * (t as u128).pow(k as u32))
                        .sum::<u128>(),
                )
            } else {
                common::baxter_polynomial_at(n, t, q)
            };
            assert_eq!(eval(&rhs, t, q), want, "n={n} t={t} q={q}");
        }
        assert_eq!(
            rhs.eval_at_one(),
            BigInt::from(common::baxter_number(n as u128))
        );
    }
}

#[test]
fn polynomial_examples() {
    assert_eq!(baxter_polynomial_rhs(1).unwrap(), TQPoly::one());
    let two = baxter_polynomial_rhs(2).unwrap();
    assert_eq!(two, &TQPoly::one() + &TQPoly::monomial(1, 3, 1));
    assert_eq!(two.to_string(), "1 + t*q^3");
    assert_eq!(
        two.to_terms(),
        [
            PolyTerm {
                t: 0,
                q: 0,
                c: "1".into()
            },
            PolyTerm {
                t: 1,
                q: 3,
                c: "1".into()
            }
        ]
    );
    assert_eq!(TQPoly::from_terms(&two.to_terms()).unwrap(), two);
}

proptest! {
    #[test]
    fn multiplication_then_division(a in prop::collection::vec(-20i64..20, 1..8), b in prop::collection::vec(-20i64..20, 1..6)) {
        let a = QPoly::from_coeffs(&a);
        let b = QPoly::from_coeffs(&b);
        prop_assume!(!b.is_zero());
        prop_assert_eq!((&a * &b).exact_div(&b).unwrap(), a);
    }

    #[test]
    fn q_binomial_pascal_rule(n in 1u32..=18, k in 1u32..=18) {
        prop_assume!(k <= n);
        // [n k] = [n-1 k-1] + q^k [n-1 k]
        let lhs = q_binomial(n, k);
        let rhs = &q_binomial(n - 1, k - 1) + &q_binomial(n - 1, k).shift(k);
        prop_assert_eq!(lhs, rhs);
    }
}
