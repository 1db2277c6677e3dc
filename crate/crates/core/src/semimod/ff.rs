use rayon::prelude::*;

use super::element::SemiModElement;
use super::factors::psi_product;
use crate::error::{Error, Result};
use crate::rings::{GroupRingElement, NovikovSeries, Truncation, Weight};
use crate::weyl::{LetterSet, SignedPerm};

/// Which index set the subsets `I` of `𝔽_l` range over.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FfVariant {
    /// `I ⊆ [1, 1̄]`.
    Full,
    /// `I ⊆ [1, k]`.
    Upper(usize),
    /// `I ⊆ [1, \overline{k+1}]`, with `\overline{n+1} := n`.
    Barred(usize),
}

/// Number of leading positions of `[1, 1̄]` that `I` may use.
pub fn subset_range(n: usize, variant: FfVariant) -> Result<usize> {
    match variant {
        FfVariant::Full => Ok(2 * n),
        FfVariant::Upper(k) if k <= n => Ok(k),
        FfVariant::Barred(k) if k <= n => Ok(2 * n - k),
        other => Err(Error::Config(format!("{other:?} out of range for rank {n}"))),
    }
}

/// `ε_I = Σ_{x ∈ I} ε_x`.
pub fn set_weight(set: &LetterSet) -> Weight {
    let mut w = Weight::zero(set.rank());
    for x in set.iter() {
        w.add_in_place(&Weight::epsilon(set.rank(), x));
    }
    w
}

fn accumulate(n: usize, sets: Vec<LetterSet>, trunc: Truncation, signed: bool) -> SemiModElement {
    let e = SignedPerm::identity(n);
    let parts: Vec<(Weight, NovikovSeries)> = sets
        .into_par_iter()
        .map(|s| {
            let mut c = psi_product(&s, trunc);
            if signed {
                let l = s.len() as i32;
                let sign = if l % 2 == 0 { 1 } else { -1 };
                let twist = GroupRingElement::monomial(Weight::epsilon(n, 1).scaled(l)).scale_int(sign);
                c = &c * &NovikovSeries::from_group_ring(&twist, trunc);
            }
            (-set_weight(&s), c)
        })
        .collect();
    let mut out = SemiModElement::zero(n, trunc);
    for (lambda, c) in parts {
        out.add_term(e.clone(), lambda, c);
    }
    out
}

/// `𝔽_l`, `𝔽_l^k` or `𝔽_l^{k̄}`: `Σ_{|I| = l} (Π_x ψ_I(x)) [O_{Q_G}(−ε_I)]`.
pub fn ff(n: usize, l: usize, variant: FfVariant, trunc: Truncation) -> Result<SemiModElement> {
    let top = subset_range(n, variant)?;
    Ok(accumulate(n, LetterSet::sized_subsets_of_prefix(n, top, l), trunc, false))
}

/// `Σ_l (−1)^l e^{lε_1} 𝔽_l^{variant}` over every `l` the range allows.
pub fn ff_signed_sum(n: usize, variant: FfVariant, trunc: Truncation) -> Result<SemiModElement> {
    let top = subset_range(n, variant)?;
    Ok(accumulate(n, LetterSet::subsets_of_prefix(n, top).collect(), trunc, true))
}

/// Closed form of `𝔓_k = [O_{Q_G(s_1 ⋯ s_k)}]`.
pub fn p_closed(n: usize, k: usize, trunc: Truncation) -> Result<SemiModElement> {
    ff_signed_sum(n, FfVariant::Upper(k), trunc)
}

/// Closed form of `𝔔_k = [O_{Q_G(s_1 ⋯ s_n ⋯ s_k)}]`; `k = 0` gives the
/// full alternating sum.
pub fn q_closed(n: usize, k: usize, trunc: Truncation) -> Result<SemiModElement> {
    ff_signed_sum(n, FfVariant::Barred(k), trunc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(n: usize, coords: Vec<i32>, c: NovikovSeries) -> SemiModElement {
        assert_eq!(coords.len(), n);
        SemiModElement::basis_term(SignedPerm::identity(n), Weight::from_vec(coords), c)
    }

    #[test]
    fn ff_zero_is_one() {
        for n in 1..=3 {
            assert_eq!(ff(n, 0, FfVariant::Full, None).unwrap(), SemiModElement::line_bundle(Weight::zero(n), None));
        }
    }

    #[test]
    fn ff_one_at_rank_one() {
        let got = ff(1, 1, FfVariant::Full, None).unwrap();
        let want = &b(1, vec![-1], NovikovSeries::one(1, None)) + &b(1, vec![1], NovikovSeries::one_minus_var(1, 1, None));
        assert_eq!(got, want);
    }

    #[test]
    fn barred_top_equals_upper_top() {
        for n in 1..=3 {
            for l in 0..=n {
                assert_eq!(
                    ff(n, l, FfVariant::Barred(n), None).unwrap(),
                    ff(n, l, FfVariant::Upper(n), None).unwrap()
                );
            }
        }
    }

    #[test]
    fn rejects_out_of_range_variant() {
        assert!(ff(2, 1, FfVariant::Upper(3), None).is_err());
    }
}
