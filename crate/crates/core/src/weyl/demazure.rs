use num_bigint::BigInt;

use super::root::RootC;
use crate::error::Result;
use crate::rings::{GroupRingElement, RingElement, Weight};

/// `D_i(e^ν)` by its closed form: with `m = ⟨ν, α_i^∨⟩`,
/// `m ≤ 0` gives `e^ν + e^{ν+α_i} + ⋯ + e^{ν-mα_i}`, `m = 1` gives `0`, and
/// `m ≥ 2` gives `-(e^{ν-α_i} + ⋯ + e^{ν-(m-1)α_i})`.
pub fn demazure_monomial(i: usize, nu: &Weight) -> GroupRingElement {
    let n = nu.rank();
    let alpha = RootC::simple(n, i);
    let a = alpha.weight(n);
    let m = alpha.pair(nu) as i32;
    let mut out = GroupRingElement::zero(n);
    if m <= 0 {
        for r in 0..=-m {
            out.add_term_in_place(nu + &a.scaled(r), BigInt::from(1));
        }
    } else {
        for r in 1..m {
            out.add_term_in_place(nu - &a.scaled(r), BigInt::from(-1));
        }
    }
    out
}

/// The Demazure operator `D_i` on ℤ[P], extended linearly from the closed form.
pub fn demazure_d(i: usize, f: &GroupRingElement) -> GroupRingElement {
    let mut out = GroupRingElement::zero(f.rank());
    for (nu, c) in f.terms() {
        out = &out + &demazure_monomial(i, nu).scale(c);
    }
    out
}

/// `D_i(f) = (f - e^{α_i}·s_i f) / (1 - e^{α_i})`, evaluated by exact division.
pub fn demazure_by_division(i: usize, f: &GroupRingElement) -> Result<GroupRingElement> {
    let n = f.rank();
    let alpha = RootC::simple(n, i);
    let a = alpha.weight(n);
    let reflected = f.map_weights(|w| alpha.reflect_weight(w));
    let numer = f - &reflected.shift(&a);
    let denom = &GroupRingElement::one(n) - &GroupRingElement::monomial(a);
    numer.exact_div(&denom)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(v: &[i32]) -> GroupRingElement {
        GroupRingElement::monomial(Weight::from_vec(v.to_vec()))
    }

    #[test]
    fn vanishes_when_pairing_is_one() {
        assert!(demazure_d(1, &e(&[1, 0])).is_zero());
        assert!(demazure_d(2, &e(&[0, 1])).is_zero());
    }

    #[test]
    fn fixes_constants() {
        assert!(demazure_d(1, &GroupRingElement::one(2)).is_one());
    }

    #[test]
    fn d1_of_second_coordinate() {
        assert_eq!(demazure_d(1, &e(&[0, 1])), e(&[0, 1]) + e(&[1, 0]));
    }

    #[test]
    fn closed_form_matches_division() {
        for n in 1..=3usize {
            let range = -3..=3;
            let mut weights = vec![vec![]];
            for _ in 0..n {
                weights = weights
                    .into_iter()
                    .flat_map(|v: Vec<i32>| range.clone().map(move |c| [v.clone(), vec![c]].concat()))
                    .collect();
            }
            for v in weights {
                let f = e(&v);
                for i in 1..=n {
                    assert_eq!(demazure_d(i, &f), demazure_by_division(i, &f).unwrap(), "i={i} ν={v:?}");
                    assert_eq!(demazure_d(i, &demazure_d(i, &f)), demazure_d(i, &f));
                }
            }
        }
    }
}
