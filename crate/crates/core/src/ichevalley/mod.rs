//! Inverse Chevalley expansion of `e^{−w(ε_m)}[O_{Q_G(w)}]` by chains of
//! admissible subsets, its closed forms at `w = s_1⋯s_n⋯s_k` and
//! `w = s_1⋯s_k`, the cancellation analysis, and the `q = 1` recursions.

mod cancellation;
mod evaluator;
mod identities;
mod sum;

pub use cancellation::{cancellation_report, CancellationReport};
pub use evaluator::{chain_terms, inverse_chevalley, lhs_weight, ChainTerm, SumBlock};
pub use identities::{
    coroot_interval, derive_recurrence, ic1_data, ic2_closed_form, rec1_literal, rec2_literal, IcIdentity, Recurrence,
};
pub use sum::{ClassKey, SemiClassSum};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::Weight;
    use crate::weyl::{Coroot, SignedPerm};

    #[test]
    fn rank_one_expansion() {
        let w = SignedPerm::simple(1, 1);
        let got = inverse_chevalley(&w, 1).unwrap();
        let e = |c: i32| Weight::from_vec(vec![c]);
        let t = Coroot::from_vec(vec![1]);
        let mut want = SemiClassSum::signed(w.clone(), Coroot::zero(1), e(-1), 1, 0);
        want.add_assign(&SemiClassSum::signed(SignedPerm::identity(1), t.clone(), e(1), 1, 1));
        want.add_assign(&SemiClassSum::signed(w, t, e(1), -1, 1));
        assert_eq!(got, want);
    }

    #[test]
    fn evaluator_matches_closed_form() {
        for n in 1..=3 {
            for k in 1..=n {
                let w = SignedPerm::mountain(n, k);
                assert_eq!(lhs_weight(&w, k), Weight::epsilon(n, 1));
                assert_eq!(inverse_chevalley(&w, k).unwrap(), ic2_closed_form(n, k).unwrap().rhs, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn cancellation_small() {
        for n in 1..=3 {
            for k in 1..=n {
                let r = cancellation_report(n, k).unwrap();
                assert!(r.passed(), "{r:?}");
            }
        }
    }

    #[test]
    fn derived_recurrences_match_literals() {
        for n in 2..=3 {
            for k in 1..n {
                let d = derive_recurrence(
                    &ic1_data(n, k).unwrap(),
                    &-Weight::epsilon(n, k as i32 + 1),
                    Some(&SignedPerm::prefix(n, k + 1)),
                )
                .unwrap();
                assert_eq!(d, rec1_literal(n, k).unwrap());
            }
        }
        for n in 1..=3 {
            for k in 1..=n {
                let target = (k >= 2).then(|| SignedPerm::mountain(n, k - 1));
                let d = derive_recurrence(&ic2_closed_form(n, k).unwrap(), &Weight::epsilon(n, k as i32), target.as_ref())
                    .unwrap();
                assert_eq!(d, rec2_literal(n, k).unwrap());
            }
        }
    }

    #[test]
    fn zero_twist_keeps_classes() {
        let id = ic2_closed_form(2, 1).unwrap();
        assert_eq!(id.rhs.twist(&Weight::zero(2)), id.rhs);
    }
}
