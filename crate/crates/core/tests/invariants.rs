use num_bigint::BigInt;
use proptest::prelude::*;
use qkborel::relations::{elementary_e, system_relation, RelationVector};
use qkborel::rings::{GroupRingElement, RingElement, Weight};
use qkborel::semimod::star_map;
use qkborel::weyl::{demazure_by_division, demazure_d, LetterSet, SignedPerm};

const N: usize = 3;

fn weight() -> impl Strategy<Value = Weight> {
    prop::collection::vec(-3i32..=3, N).prop_map(Weight::from_vec)
}

fn element() -> impl Strategy<Value = GroupRingElement> {
    prop::collection::vec((weight(), -4i64..=4), 0..6)
        .prop_map(|ts| GroupRingElement::from_terms(N, ts.into_iter().map(|(w, c)| (w, BigInt::from(c)))))
}

/// Monomials and binomials `c(e^μ - e^ν)`.
fn divisor() -> impl Strategy<Value = GroupRingElement> {
    (weight(), weight(), prop::sample::select(vec![-2i64, -1, 1, 3]), any::<bool>()).prop_map(|(mu, nu, c, binomial)| {
        let m = GroupRingElement::monomial(mu);
        let d = if binomial && m != GroupRingElement::monomial(nu.clone()) { &m - &GroupRingElement::monomial(nu) } else { m };
        d.scale_int(c)
    })
}

fn perm() -> impl Strategy<Value = SignedPerm> {
    prop::collection::vec(1usize..=N, 0..8).prop_map(|word| SignedPerm::from_word(N, &word))
}

proptest! {
    #[test]
    fn group_ring_is_a_commutative_ring(a in element(), b in element(), c in element()) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn exact_division_inverts_multiplication(a in element(), b in divisor()) {
        prop_assert_eq!((&a * &b).exact_div(&b).unwrap(), a);
    }

    #[test]
    fn binomials_do_not_divide_units(mu in weight(), nu in weight()) {
        prop_assume!(mu != nu);
        let d = &GroupRingElement::monomial(mu) - &GroupRingElement::monomial(nu);
        prop_assert!(GroupRingElement::one(N).exact_div(&d).is_err());
    }

    #[test]
    fn demazure_closed_form_matches_division(f in element(), i in 1usize..=N) {
        prop_assert_eq!(demazure_d(i, &f), demazure_by_division(i, &f).unwrap());
    }

    #[test]
    fn demazure_is_idempotent(f in element(), i in 1usize..=N) {
        let once = demazure_d(i, &f);
        prop_assert_eq!(demazure_d(i, &once), once);
    }

    #[test]
    fn signed_permutations_form_a_group(u in perm(), v in perm(), w in perm(), mu in weight()) {
        prop_assert!(u.compose(&u.inverse()).is_identity());
        prop_assert_eq!(u.compose(&v).compose(&w), u.compose(&v.compose(&w)));
        prop_assert_eq!(u.length(), u.inverse().length());
        prop_assert_eq!(u.compose(&v).act_weight(&mu), u.act_weight(&v.act_weight(&mu)));
        prop_assert_eq!(u.act_weight(&mu).dot(&u.act_weight(&mu)), mu.dot(&mu));
    }

    #[test]
    fn window_notation_round_trips(u in perm()) {
        prop_assert_eq!(u.to_string().parse::<SignedPerm>().unwrap(), u);
    }

    #[test]
    fn star_map_is_an_involution(bits in 0u32..(1 << (2 * N))) {
        let s = LetterSet::from_bits(N, bits);
        prop_assert_eq!(star_map(&star_map(&s)), s);
    }

    #[test]
    fn relation_evaluation_is_linear(
        a in prop::collection::vec(element(), 4),
        b in prop::collection::vec(element(), 4),
        vals in prop::collection::vec(element(), 4),
        mu in weight(),
    ) {
        let ra = RelationVector::from_coeffs(N, a.clone());
        let rb = RelationVector::from_coeffs(N, b.clone());
        let sum = RelationVector::from_coeffs(N, a.iter().zip(&b).map(|(x, y)| x + y).collect());
        let lhs = sum.evaluate(&vals).unwrap();
        prop_assert_eq!(lhs, &ra.evaluate(&vals).unwrap() + &rb.evaluate(&vals).unwrap());
        let shifted = ra.shift(&mu).evaluate(&vals).unwrap();
        prop_assert_eq!(shifted, &GroupRingElement::monomial(mu) * &ra.evaluate(&vals).unwrap());
    }

    #[test]
    fn system_annihilates_elementary_sums_after_any_shift(k in 0usize..N, mu in weight()) {
        let e: Vec<GroupRingElement> = (0..=N as i64).map(|l| elementary_e(N, l)).collect();
        let r = system_relation(N, k).shift(&mu);
        prop_assert!(r.evaluate(&e).unwrap().is_zero());
    }
}
