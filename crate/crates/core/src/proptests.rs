//! Randomized algebraic invariants across the whole stack.

use std::cmp::Ordering;

use num_bigint::BigInt;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::braid::{bbm_first, bbm_strand, group_equal, BraidWord, Generator};
use crate::hecke::{
    from_sigma_prime, pi_normalize, pi_normalize_randomized, t_prime_loop_letters, to_sigma_prime,
};
use crate::scalars::modular::DEFAULT_PRIMES;
use crate::scalars::{sample_point, IntLaurent, RationalFn, SMonomial, XScalar};
use crate::skein::{compare_order, export_system, SignSet, SkeinSystem, StrandSet, SystemParams};
use crate::trace::trace_of_word;

fn laurent() -> impl Strategy<Value = IntLaurent> {
    prop::collection::vec(((-3..=3i32, -3..=3i32), -4..=4i64), 0..5)
        .prop_map(|v| IntLaurent::from_terms(v.into_iter().map(|(e, c)| (e, BigInt::from(c)))))
}

fn nonzero_laurent() -> impl Strategy<Value = IntLaurent> {
    laurent().prop_filter("nonzero", |x| !x.is_zero())
}

fn rational() -> impl Strategy<Value = RationalFn> {
    (laurent(), nonzero_laurent()).prop_map(|(a, b)| RationalFn::new(a, b).unwrap())
}

fn letters(strands: usize, max_len: usize) -> impl Strategy<Value = Vec<Generator>> {
    prop::collection::vec((0..strands, any::<bool>()), 0..=max_len).prop_map(|v| {
        v.into_iter()
            .map(|(i, pos)| {
                let s = if pos { 1 } else { -1 };
                if i == 0 {
                    Generator::t(s)
                } else {
                    Generator::s(i, s)
                }
            })
            .collect()
    })
}

fn word(strands: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    letters(strands, max_len).prop_map(move |l| BraidWord::new(strands, l).unwrap())
}

fn sized_word(max_strands: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    (1..=max_strands).prop_flat_map(move |n| word(n, max_len))
}

fn loops() -> impl Strategy<Value = Vec<(usize, i32)>> {
    prop::collection::vec(-2..=2i32, 0..4)
        .prop_map(|v| v.into_iter().enumerate().filter(|&(_, k)| k != 0).collect())
}

fn with_letters(w: &BraidWord, strands: usize, extra: &[Generator]) -> BraidWord {
    let mut l = w.letters().to_vec();
    l.extend_from_slice(extra);
    BraidWord::new(strands, l).unwrap()
}

proptest! {
    #[test]
    fn laurent_ring_axioms(a in laurent(), b in laurent(), c in laurent()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&(&a - &b) + &b) == a);
    }

    #[test]
    fn rational_field_inverse(a in rational()) {
        prop_assume!(!a.is_zero());
        prop_assert!((&a * &a.inv().unwrap()).is_one());
        prop_assert!(a.div(&a).unwrap().is_one());
    }

    #[test]
    fn rational_form_is_canonical(a in laurent(), b in nonzero_laurent(), c in nonzero_laurent()) {
        let x = RationalFn::new(a.clone(), b.clone()).unwrap();
        let y = RationalFn::new(&a * &c, &b * &c).unwrap();
        prop_assert_eq!(x, y);
    }

    #[test]
    fn rational_arithmetic(a in rational(), b in rational(), c in rational()) {
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert!((&(&a - &b) + &b) == a);
    }

    #[test]
    fn xscalar_inverse(a in rational(), b in rational()) {
        let x = XScalar::new(a, b);
        prop_assume!(!x.is_zero());
        prop_assert!((&x * &x.inv().unwrap()).is_one());
    }

    #[test]
    fn reduction_mod_p_is_a_homomorphism(a in laurent(), b in laurent(), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = DEFAULT_PRIMES[0];
        let at = sample_point(p, [], &mut rng).unwrap();
        let (ma, mb) = (at.laurent(&a).unwrap(), at.laurent(&b).unwrap());
        prop_assert_eq!(at.laurent(&(&a + &b)).unwrap(), (ma + mb) % p);
        prop_assert_eq!(at.laurent(&(&a * &b)).unwrap(), (ma as u128 * mb as u128 % p as u128) as u64);
    }

    #[test]
    fn free_reduction(w in sized_word(4, 16)) {
        let r = w.free_reduce();
        prop_assert_eq!(r.free_reduce(), r.clone());
        prop_assert!(r.len() <= w.len());
        prop_assert_eq!(r.exponent_sum(), w.exponent_sum());
        prop_assert!(group_equal(&r, &w));
        prop_assert!(w.concat(&w.inverse()).free_reduce().is_empty());
    }

    #[test]
    fn band_move_exponent_sum(w in sized_word(3, 10), p in 1..4i64, pos in any::<bool>(), i in 1..4usize) {
        let s = if pos { 1 } else { -1 };
        let shifted = w.exponent_sum() + 2 * w.loop_exponent() + s as i64;
        let first = bbm_first(&w, p, s).unwrap();
        prop_assert_eq!(first.exponent_sum(), shifted);
        prop_assert_eq!(first.loop_exponent(), w.loop_exponent() + p);
        prop_assert_eq!(first.strands(), w.strands() + 1);
        prop_assume!(i <= w.strands());
        prop_assert_eq!(bbm_strand(&w, i, p, s).unwrap().exponent_sum(), shifted);
    }

    #[test]
    fn compare_order_is_total(a in loops(), b in loops(), c in loops()) {
        prop_assert_eq!(compare_order(&a, &b), compare_order(&b, &a).reverse());
        prop_assert_eq!(compare_order(&a, &b) == Ordering::Equal, a == b);
        if compare_order(&a, &b) != Ordering::Greater && compare_order(&b, &c) != Ordering::Greater {
            prop_assert_ne!(compare_order(&a, &c), Ordering::Greater);
        }
    }
}

/// The relators of the mixed braid group, on `n` strands.
fn relator(kind: usize, i: usize, n: usize) -> Vec<Generator> {
    let s = |j: usize, e: i8| Generator::s(j, e);
    match kind {
        0 => vec![s(i, 1), s(i, -1)],
        1 => vec![Generator::t(1), Generator::t(-1)],
        // far commutation, needs n ≥ 4
        2 => vec![s(1, 1), s(3, 1), s(1, -1), s(3, -1)],
        3 if i + 1 < n => vec![
            s(i, 1),
            s(i + 1, 1),
            s(i, 1),
            s(i + 1, -1),
            s(i, -1),
            s(i + 1, -1),
        ],
        4 => vec![
            Generator::t(1),
            s(1, 1),
            Generator::t(1),
            s(1, 1),
            Generator::t(-1),
            s(1, -1),
            Generator::t(-1),
            s(1, -1),
        ],
        5 if i >= 2 => vec![Generator::t(1), s(i, 1), Generator::t(-1), s(i, -1)],
        _ => vec![],
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn relators_vanish(u in word(4, 5), v in word(4, 5), kind in 0..6usize, i in 1..4usize) {
        let mut l = u.letters().to_vec();
        l.extend(relator(kind, i, 4));
        l.extend_from_slice(v.letters());
        let with = BraidWord::new(4, l).unwrap();
        prop_assert_eq!(pi_normalize(&with), pi_normalize(&u.concat(&v)));
    }

    #[test]
    fn quadratic_relation(u in word(3, 5), v in word(3, 5), i in 1..3usize) {
        let g = Generator::s(i, 1);
        let uv = pi_normalize(&u.concat(&v));
        let ugv = pi_normalize(&with_letters(&u, 3, &[g]).concat(&v));
        let uggv = pi_normalize(&with_letters(&u, 3, &[g, g]).concat(&v));
        let q = IntLaurent::q();
        let rhs = ugv.scale(&(&q - &IntLaurent::one())).add(&uv.scale(&q)).unwrap();
        prop_assert_eq!(uggv, rhs);
    }

    #[test]
    fn normalization_is_route_independent(w in sized_word(4, 10), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        prop_assert_eq!(pi_normalize_randomized(&w, &mut rng), pi_normalize(&w));
    }

    #[test]
    fn change_of_basis_round_trips(w in sized_word(3, 10)) {
        let x = pi_normalize(&w);
        prop_assert_eq!(from_sigma_prime(&to_sigma_prime(&x)), x);
    }

    #[test]
    fn trace_is_cyclic(a in word(3, 6), b in word(3, 6)) {
        prop_assert_eq!(trace_of_word(&a.concat(&b)), trace_of_word(&b.concat(&a)));
    }

    #[test]
    fn trace_of_stabilized(a in sized_word(3, 8)) {
        let n = a.strands();
        let up = with_letters(&a, n + 1, &[Generator::s(n, 1)]);
        prop_assert_eq!(trace_of_word(&up), trace_of_word(&a).scale(&IntLaurent::z()));
    }

    #[test]
    fn trace_of_new_loop(a in sized_word(3, 8), k in prop_oneof![-3..=-1i32, 1..=3i32]) {
        let n = a.strands();
        let up = with_letters(&a, n + 1, &t_prime_loop_letters(n, k));
        prop_assert_eq!(trace_of_word(&up), trace_of_word(&a).mul_monomial(&SMonomial::s(k)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(6))]

    #[test]
    fn exported_systems_round_trip(p in 1..4i64, lo in -1..=1i64, max_index in 0..2usize, first in any::<bool>(), signs in 0..3usize) {
        let params = SystemParams {
            p,
            levels: (lo, lo + 1),
            max_index,
            max_exp: 1,
            strands: if first { StrandSet::First } else { StrandSet::All },
            signs: [SignSet::BOTH, SignSet::parse("+").unwrap(), SignSet::parse("-").unwrap()][signs],
        };
        let sys = export_system(&params).unwrap();
        let text = sys.to_json();
        let back = SkeinSystem::from_json(&text).unwrap();
        prop_assert_eq!(&back, &sys);
        prop_assert_eq!(back.to_json(), text);
    }
}
