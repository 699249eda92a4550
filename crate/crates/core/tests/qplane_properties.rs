mod common;

use homdual::exact_math::{pow, rat, ratio};
use homdual::qplane::{
    classical_product, eval_word, hom_power_left, hom_product, normal_order, q_factorial, qbinom,
    quantum_binomial_expand, twist, Letter, QParams, QPoly,
};
use homdual::recseq::BiSequence;
use homdual::Rational;
use num_traits::Zero;
use proptest::prelude::*;

use common::{binomial, qbinom_by_inversions, WordSum};

fn q_values() -> Vec<Rational> {
    vec![rat(1), rat(2), ratio(5, 3)]
}

fn params(q: &Rational, k: &Rational) -> QParams {
    QParams::new(q.clone(), k.clone()).unwrap()
}

fn word_strategy(max: usize) -> impl Strategy<Value = Vec<Letter>> {
    prop::collection::vec(prop::bool::ANY.prop_map(|b| if b { Letter::X } else { Letter::Y }), 0..=max)
}

fn bytes(w: &[Letter]) -> Vec<u8> {
    w.iter().map(|l| if *l == Letter::X { b'x' } else { b'y' }).collect()
}

fn from_normal_form(p: &QParams, nf: std::collections::BTreeMap<(usize, usize), Rational>) -> QPoly {
    QPoly::from_terms(p.clone(), nf)
}

fn x_plus_y(p: &QParams) -> QPoly {
    QPoly::x(p.clone()).add(&QPoly::y(p.clone())).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn normal_order_matches_inversion_count(w in word_strategy(8), qi in 0usize..3) {
        let q = &q_values()[qi];
        let p = params(q, &rat(1));
        let expected = from_normal_form(&p, WordSum::word(&bytes(&w)).normal_form(q));
        prop_assert_eq!(normal_order(&w, &p), expected);
    }

    #[test]
    fn normal_order_is_multiplicative(u in word_strategy(6), v in word_strategy(6), qi in 0usize..3) {
        let p = params(&q_values()[qi], &rat(1));
        let mut uv = u.clone();
        uv.extend(&v);
        let lhs = normal_order(&uv, &p);
        let rhs = classical_product(&normal_order(&u, &p), &normal_order(&v, &p)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn hom_product_is_hom_associative(
        a in (0usize..4, 0usize..4), b in (0usize..4, 0usize..4), c in (0usize..4, 0usize..4),
        qi in 0usize..3,
        k in prop::sample::select(vec![rat(1), rat(2), ratio(-1, 3)]),
    ) {
        let p = params(&q_values()[qi], &k);
        let mono = |(m, n): (usize, usize)| QPoly::monomial(p.clone(), m, n, rat(1));
        let (a, b, c) = (mono(a), mono(b), mono(c));
        // α(a)(bc) = (ab)α(c)
        let lhs = hom_product(&twist(&a), &hom_product(&b, &c).unwrap()).unwrap();
        let rhs = hom_product(&hom_product(&a, &b).unwrap(), &twist(&c)).unwrap();
        prop_assert_eq!(lhs, rhs);
        // α(ab) = α(a)α(b)
        prop_assert_eq!(
            twist(&hom_product(&a, &b).unwrap()),
            hom_product(&twist(&a), &twist(&b)).unwrap()
        );
    }
}

#[test]
fn reordering_picks_up_q_to_the_mn() {
    let f = BiSequence::from_fn(6, 6, |m, n| ratio((m * 7 + n + 1) as i64, (n + 2) as i64));
    for q in q_values().into_iter().chain([rat(-1), ratio(-2, 7)]) {
        let p = params(&q, &rat(1));
        for m in 0..=6 {
            for n in 0..=6 {
                let mut w = vec![Letter::Y; n];
                w.extend(std::iter::repeat_n(Letter::X, m));
                let got = eval_word(&f, &w, &p).unwrap();
                assert_eq!(got, pow(&q, (m * n) as i64) * f.get(m, n).unwrap());
            }
        }
    }
}

#[test]
fn quantum_binomial_matches_left_hom_power() {
    for (q, k) in [(rat(1), rat(1)), (rat(2), rat(1)), (rat(2), rat(3)), (ratio(5, 3), ratio(1, 2))] {
        let p = params(&q, &k);
        for n in 1..=8 {
            let formula = quantum_binomial_expand(n, &p);
            assert_eq!(formula, hom_power_left(&x_plus_y(&p), n), "q={q} k={k} n={n}");
            // independent expansion of the left-nested power over words
            let mut acc = WordSum(vec![(rat(1), b"x".to_vec()), (rat(1), b"y".to_vec())]);
            let base = acc.clone();
            for _ in 1..n {
                acc = acc.hom_mul(&base, &k);
            }
            assert_eq!(formula, from_normal_form(&p, acc.normal_form(&q)), "q={q} k={k} n={n}");
        }
    }
}

#[test]
fn gaussian_binomials() {
    for q in [rat(2), ratio(5, 3), rat(-1), rat(1), ratio(-1, 2)] {
        for n in 0..=12 {
            for i in 0..=n {
                let b = qbinom(n, i, &q).unwrap();
                if n <= 10 {
                    assert_eq!(b, qbinom_by_inversions(n, i, &q), "n={n} i={i} q={q}");
                }
                if i >= 1 && i < n {
                    let pascal = qbinom(n - 1, i - 1, &q).unwrap() + pow(&q, i as i64) * qbinom(n - 1, i, &q).unwrap();
                    assert_eq!(b, pascal);
                }
                let denom = q_factorial(i, &q) * q_factorial(n - i, &q);
                if !denom.is_zero() {
                    assert_eq!(b, q_factorial(n, &q) / denom, "n={n} i={i} q={q}");
                }
                if q == rat(1) {
                    assert_eq!(b, binomial(n, i));
                }
            }
        }
    }
    assert_eq!(qbinom(4, 2, &rat(2)).unwrap(), rat(35));
    assert!(qbinom(2, 3, &rat(2)).is_err());
    assert!(qbinom(2, 1, &rat(0)).is_err());
}
