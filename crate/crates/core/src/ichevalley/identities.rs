use super::sum::SemiClassSum;
use crate::error::{Error, Result};
use crate::rings::{GroupRingElement, QExtElement, Weight};
use crate::semimod::SemiModElement;
use crate::weyl::{Coroot, SignedPerm};

/// `α_a^∨ + α_{a+1}^∨ + ⋯ + α_b^∨` (zero when `a > b`).
pub fn coroot_interval(n: usize, a: usize, b: usize) -> Coroot {
    Coroot::from_vec((1..=n).map(|i| i32::from(a <= i && i <= b)).collect())
}

fn eps(n: usize, j: usize) -> Weight {
    Weight::epsilon(n, j as i32)
}

/// An identity `e^ν [O_{Q_G(w)}] = rhs`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IcIdentity {
    pub lhs_weight: Weight,
    pub lhs_class: SignedPerm,
    pub rhs: SemiClassSum,
}

/// `target = rhs` at `q = 1`; `target = None` means `0 = rhs`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Recurrence {
    pub target: Option<SignedPerm>,
    pub rhs: SemiClassSum,
}

/// The closed form of `e^{ε_1}[O_{Q_G(s_1⋯s_n⋯s_k)}]`, `1 ≤ k ≤ n`.
pub fn ic2_closed_form(n: usize, k: usize) -> Result<IcIdentity> {
    if k == 0 || k > n {
        return Err(Error::Config(format!("k={k} outside 1..={n}")));
    }
    let zero = Coroot::zero(n);
    let mut rhs = SemiClassSum::signed(SignedPerm::mountain(n, k), zero.clone(), -eps(n, k), 1, 0);
    if k >= 2 {
        rhs.add_assign(&SemiClassSum::signed(SignedPerm::mountain(n, k - 1), zero, -eps(n, k), -1, 0));
    }
    for j in k + 1..=n {
        let xi = coroot_interval(n, k, j - 1);
        rhs.add_assign(&SemiClassSum::signed(SignedPerm::mountain(n, j), xi.clone(), -eps(n, j), 1, 1));
        rhs.add_assign(&SemiClassSum::signed(SignedPerm::mountain(n, j - 1), xi, -eps(n, j), -1, 1));
    }
    for j in 1..=k {
        let xi = coroot_interval(n, j, n);
        rhs.add_assign(&SemiClassSum::signed(SignedPerm::prefix(n, j - 1), xi.clone(), eps(n, j), 1, 1));
        rhs.add_assign(&SemiClassSum::signed(SignedPerm::prefix(n, j), xi, eps(n, j), -1, 1));
    }
    Ok(IcIdentity { lhs_weight: eps(n, 1), lhs_class: SignedPerm::mountain(n, k), rhs })
}

/// `e^{ε_1}[O_{Q_G(s_1⋯s_k)}]` expanded, `1 ≤ k ≤ n − 1`.
pub fn ic1_data(n: usize, k: usize) -> Result<IcIdentity> {
    if k == 0 || k >= n {
        return Err(Error::Config(format!("k={k} outside 1..={}", n.saturating_sub(1))));
    }
    let zero = Coroot::zero(n);
    let e = eps(n, k + 1);
    let mut rhs = SemiClassSum::signed(SignedPerm::prefix(n, k), zero.clone(), e.clone(), 1, 0);
    rhs.add_assign(&SemiClassSum::signed(SignedPerm::prefix(n, k + 1), zero, e, -1, 0));
    for j in 1..=k {
        let xi = coroot_interval(n, j, k);
        rhs.add_assign(&SemiClassSum::signed(SignedPerm::prefix(n, j - 1), xi.clone(), eps(n, j), 1, 1));
        rhs.add_assign(&SemiClassSum::signed(SignedPerm::prefix(n, j), xi, eps(n, j), -1, 1));
    }
    Ok(IcIdentity { lhs_weight: eps(n, 1), lhs_class: SignedPerm::prefix(n, k), rhs })
}

/// Tensors both sides by `O(μ)`, sets `q = 1`, and solves for the class
/// `[O_{Q_G(target)}]` (translation `0`, weight `0` after twisting).
pub fn derive_recurrence(identity: &IcIdentity, twist: &Weight, target: Option<&SignedPerm>) -> Result<Recurrence> {
    let n = identity.lhs_class.rank();
    let zero = Coroot::zero(n);
    let lhs_coeff = QExtElement::from_group_ring(&GroupRingElement::monomial(identity.lhs_weight.clone()));
    let lhs = SemiClassSum::single(identity.lhs_class.clone(), zero.clone(), twist.clone(), lhs_coeff);
    let twisted = identity.rhs.twist(twist).specialize_q_one();
    // 0 = rhs − lhs
    let mut balance = &twisted - &lhs.specialize_q_one();
    let Some(t) = target else {
        return Ok(Recurrence { target: None, rhs: balance });
    };
    let origin = Weight::zero(n);
    let c = balance.coeff(t, &zero, &origin);
    let unit = if c == QExtElement::from_int(n, -1) {
        1
    } else if c == QExtElement::from_int(n, 1) {
        -1
    } else {
        return Err(Error::CheckFailed(format!("target class {t} has coefficient {c}, not ±1")));
    };
    balance.add_term(t.clone(), zero, origin, -&c);
    Ok(Recurrence { target: Some(t.clone()), rhs: balance.scale(&QExtElement::from_int(n, unit)) })
}

/// `[O(s_1⋯s_{k+1})]` expressed through `e^{ε_1}`, `s_1⋯s_j` and translations,
/// `1 ≤ k ≤ n − 1`, transcribed term by term.
pub fn rec1_literal(n: usize, k: usize) -> Result<Recurrence> {
    if k == 0 || k >= n {
        return Err(Error::Config(format!("k={k} outside 1..={}", n.saturating_sub(1))));
    }
    let zero = Coroot::zero(n);
    let tw = -eps(n, k + 1);
    let mut rhs = SemiClassSum::single(
        SignedPerm::prefix(n, k),
        zero.clone(),
        tw.clone(),
        QExtElement::from_group_ring(&GroupRingElement::monomial(eps(n, 1))).scale_int(-1),
    );
    rhs.add_assign(&SemiClassSum::signed(SignedPerm::prefix(n, k), zero, Weight::zero(n), 1, 0));
    for j in 1..=k {
        let xi = coroot_interval(n, j, k);
        let l = &eps(n, j) + &tw;
        rhs.add_assign(&SemiClassSum::signed(SignedPerm::prefix(n, j - 1), xi.clone(), l.clone(), 1, 0));
        rhs.add_assign(&SemiClassSum::signed(SignedPerm::prefix(n, j), xi, l, -1, 0));
    }
    Ok(Recurrence { target: Some(SignedPerm::prefix(n, k + 1)), rhs })
}

/// The recursion for `[O(s_1⋯s_n⋯s_{k−1})]`, `1 ≤ k ≤ n`; at `k = 1` the
/// target is absent.
pub fn rec2_literal(n: usize, k: usize) -> Result<Recurrence> {
    if k == 0 || k > n {
        return Err(Error::Config(format!("k={k} outside 1..={n}")));
    }
    let zero = Coroot::zero(n);
    let ek = eps(n, k);
    let w = SignedPerm::mountain(n, k);
    let mut rhs = SemiClassSum::single(
        w.clone(),
        zero.clone(),
        ek.clone(),
        QExtElement::from_group_ring(&GroupRingElement::monomial(eps(n, 1))).scale_int(-1),
    );
    rhs.add_assign(&SemiClassSum::signed(w, zero, Weight::zero(n), 1, 0));
    for j in k + 1..=n {
        let xi = coroot_interval(n, k, j - 1);
        let l = &ek - &eps(n, j);
        rhs.add_assign(&SemiClassSum::signed(SignedPerm::mountain(n, j), xi.clone(), l.clone(), 1, 0));
        rhs.add_assign(&SemiClassSum::signed(SignedPerm::mountain(n, j - 1), xi, l, -1, 0));
    }
    for j in 1..=k {
        let xi = coroot_interval(n, j, n);
        let l = &eps(n, j) + &ek;
        rhs.add_assign(&SemiClassSum::signed(SignedPerm::prefix(n, j - 1), xi.clone(), l.clone(), 1, 0));
        rhs.add_assign(&SemiClassSum::signed(SignedPerm::prefix(n, j), xi, l, -1, 0));
    }
    let target = (k >= 2).then(|| SignedPerm::mountain(n, k - 1));
    Ok(Recurrence { target, rhs })
}

impl Recurrence {
    /// Substitutes module elements for the Schubert classes on both sides;
    /// returns `(lhs, rhs)` with `lhs = 0` when there is no target.
    pub fn evaluate<F>(&self, trunc: crate::rings::Truncation, sub: F) -> Result<(SemiModElement, SemiModElement)>
    where
        F: Fn(&SignedPerm) -> Result<SemiModElement>,
    {
        let n = self.rhs.rank();
        let lhs = match &self.target {
            Some(t) => sub(t)?.with_truncation(trunc)?,
            None => SemiModElement::zero(n, trunc),
        };
        Ok((lhs, self.rhs.substitute(trunc, &sub)?))
    }
}
