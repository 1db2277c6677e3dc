use qkborel::ichevalley::{derive_recurrence, ic1_data, ic2_closed_form, rec1_literal, rec2_literal, Recurrence};
use qkborel::rings::{Truncation, Weight};
use qkborel::semimod::{ff_signed_sum, p_closed, q_closed, FfVariant, SemiModElement};
use qkborel::weyl::SignedPerm;
use qkborel::{Error, Result};

/// Schubert classes of `s_1⋯s_j` and `s_1⋯s_n⋯s_j` replaced by their module closed forms.
fn closed_form_class(n: usize, trunc: Truncation) -> impl Fn(&SignedPerm) -> Result<SemiModElement> {
    move |w: &SignedPerm| {
        for j in 0..=n {
            if *w == SignedPerm::prefix(n, j) {
                return p_closed(n, j, trunc);
            }
        }
        for j in 1..=n {
            if *w == SignedPerm::mountain(n, j) {
                return q_closed(n, j, trunc);
            }
        }
        Err(Error::UnsupportedOperand(format!("no closed form for {w}")))
    }
}

fn assert_holds(r: &Recurrence, n: usize, trunc: Truncation, what: &str) {
    let (lhs, rhs) = r.evaluate(trunc, closed_form_class(n, trunc)).unwrap();
    assert_eq!(lhs, rhs, "{what} fails on closed forms at n={n}: first difference {:?}", lhs.first_difference(&rhs));
}

#[test]
fn literal_recurrences_hold_on_closed_forms() {
    for n in 1..=3 {
        let trunc = Some(2 * n as u32 + 2);
        for k in 1..n {
            assert_holds(&rec1_literal(n, k).unwrap(), n, trunc, &format!("first recurrence, k={k}"));
        }
        for k in 2..=n {
            assert_holds(&rec2_literal(n, k).unwrap(), n, trunc, &format!("second recurrence, k={k}"));
        }
    }
}

#[test]
fn recurrences_hold_exactly() {
    let n = 2;
    assert_holds(&rec1_literal(n, 1).unwrap(), n, None, "first recurrence");
    assert_holds(&rec2_literal(n, 2).unwrap(), n, None, "second recurrence");
}

/// Without a target the right-hand side is the alternating sum of the `F_l`,
/// which vanishes only in the quotient.
#[test]
fn untargeted_recurrence_is_alternating_sum() {
    for n in 1..=3 {
        let trunc = Some(2 * n as u32 + 2);
        let r = rec2_literal(n, 1).unwrap();
        assert!(r.target.is_none());
        let (_, rhs) = r.evaluate(trunc, closed_form_class(n, trunc)).unwrap();
        assert_eq!(rhs, ff_signed_sum(n, FfVariant::Full, trunc).unwrap(), "n={n}");
    }
}

#[test]
fn derived_recurrences_agree_with_literal_ones() {
    for n in 1..=3 {
        for k in 1..=n {
            let ic2 = ic2_closed_form(n, k).unwrap();
            let twist = Weight::epsilon(n, k as i32);
            let target = (k >= 2).then(|| SignedPerm::mountain(n, k - 1));
            let derived = derive_recurrence(&ic2, &twist, target.as_ref()).unwrap();
            assert_eq!(derived, rec2_literal(n, k).unwrap(), "n={n} k={k}");
        }
        for k in 1..n {
            let twist = -Weight::epsilon(n, k as i32 + 1);
            let derived = derive_recurrence(&ic1_data(n, k).unwrap(), &twist, Some(&SignedPerm::prefix(n, k + 1))).unwrap();
            assert_eq!(derived, rec1_literal(n, k).unwrap(), "n={n} k={k}");
        }
    }
}

#[test]
fn lhs_weight_of_mountain_is_first_coordinate() {
    for n in 1..=4 {
        for k in 1..=n {
            assert_eq!(ic2_closed_form(n, k).unwrap().lhs_weight, Weight::epsilon(n, 1));
        }
    }
}
