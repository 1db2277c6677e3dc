use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::relations::elementary_vars;
use crate::rings::{
    GroupRingElement, NovikovSeries, QExtElement, RationalSeries, RingElement, Truncation, Weight, ZLaurentElement,
};
use crate::semimod::factors::product_rational;
use crate::semimod::{set_weight, subset_range, zeta, FfVariant};
use crate::weyl::LetterSet;

/// A Laurent polynomial in `z_1, …, z_n` whose coefficients are exact
/// quotients [`RationalSeries`] in the Novikov variables.
#[derive(Clone, PartialEq)]
pub struct RationalLaurent {
    rank: usize,
    terms: BTreeMap<Weight, RationalSeries>,
}

impl RationalLaurent {
    pub fn zero(rank: usize) -> Self {
        RationalLaurent { rank, terms: BTreeMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Weight, &RationalSeries)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Adds `c·z^a`.
    pub fn add_term(&mut self, a: Weight, c: RationalSeries) {
        let sum = match self.terms.remove(&a) {
            Some(old) => &old + &c,
            None => c,
        };
        if !sum.is_zero() {
            self.terms.insert(a, sum);
        }
    }

    /// Adds a scalar `g ∈ ℤ[P]` to the constant term.
    pub fn add_scalar(&mut self, g: &GroupRingElement) {
        let c = RationalSeries::from_poly(&NovikovSeries::from_group_ring(g, None)).expect("exact");
        self.add_term(Weight::zero(self.rank), c);
    }

    pub fn scale_group_ring(&self, g: &GroupRingElement) -> Self {
        let c = RationalSeries::from_poly(&NovikovSeries::from_group_ring(g, None)).expect("exact");
        let mut out = Self::zero(self.rank);
        for (a, x) in &self.terms {
            out.add_term(a.clone(), x * &c);
        }
        out
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        if self.rank != other.rank {
            return Err(Error::Config(format!("rank mismatch: {} vs {}", self.rank, other.rank)));
        }
        let mut out = self.clone();
        for (a, c) in &other.terms {
            out.add_term(a.clone(), c.clone());
        }
        Ok(out)
    }

    /// Expands the coefficients: exactly when `trunc` is `None` (every
    /// coefficient must then be a polynomial), otherwise to degree `D`.
    pub fn to_laurent(&self, trunc: Truncation) -> Result<ZLaurentElement> {
        let mut out = ZLaurentElement::zero(self.rank, trunc);
        for (a, c) in &self.terms {
            let series = match trunc {
                Some(d) => c.to_series(d),
                None => c.to_polynomial().ok_or_else(|| {
                    Error::UnsupportedOperand(format!("coefficient {c} of z^{a} is not a polynomial"))
                })?,
            };
            out = &out + &ZLaurentElement::monomial(a.clone(), series);
        }
        Ok(out)
    }

    /// `Q_1 = ⋯ = Q_n = 0`; denominators become 1.
    pub fn specialize_q_zero(&self) -> ZLaurentElement {
        let mut out = ZLaurentElement::zero(self.rank, None);
        for (a, c) in &self.terms {
            out = &out + &ZLaurentElement::monomial(a.clone(), c.numerator().specialize_zero());
        }
        out
    }

    pub fn to_json(&self) -> Value {
        Value::Array(self.terms.iter().map(|(a, c)| json!({ "z": a.coords(), "coeff": c.to_string() })).collect())
    }
}

impl fmt::Display for RationalLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (a, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}*z{a}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for RationalLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn subset_sum<F>(n: usize, sets: Vec<LetterSet>, coeff: F) -> RationalLaurent
where
    F: Fn(&LetterSet) -> RationalSeries + Sync,
{
    let parts: Vec<(Weight, RationalSeries)> = sets.into_par_iter().map(|s| (set_weight(&s), coeff(&s))).collect();
    let mut out = RationalLaurent::zero(n);
    for (a, c) in parts {
        out.add_term(a, c);
    }
    out
}

fn sign_twist(n: usize, l: usize) -> GroupRingElement {
    let sign = if l.is_multiple_of(2) { 1 } else { -1 };
    GroupRingElement::monomial(Weight::epsilon(n, 1).scaled(-(l as i32))).scale_int(sign)
}

/// `F_l`, `F_l^k` or `F_l^{k̄}`: `Σ_{|I| = l} (Π_x ζ_I(x)) z^I`.
pub fn f_rational(n: usize, l: usize, variant: FfVariant) -> Result<RationalLaurent> {
    let top = subset_range(n, variant)?;
    Ok(subset_sum(n, LetterSet::sized_subsets_of_prefix(n, top, l), |s| product_rational(s, zeta)))
}

/// [`f_rational`] expanded by [`RationalLaurent::to_laurent`].
pub fn f_poly(n: usize, l: usize, variant: FfVariant, trunc: Truncation) -> Result<ZLaurentElement> {
    f_rational(n, l, variant)?.to_laurent(trunc)
}

/// `Σ_{|I| = l} (Π_x f(I, x)) z^I` for any factor table `f`.
pub fn factor_sum(
    n: usize,
    l: usize,
    f: fn(&LetterSet, i32) -> crate::semimod::OperatorFactor,
) -> RationalLaurent {
    subset_sum(n, LetterSet::sized_subsets_of_prefix(n, 2 * n, l), |s| product_rational(s, f))
}

/// `Σ_{|I| = l} (Π_x ζ_I(x))(Π_x η_I(x)) z^I`.
pub fn zeta_eta_sum(n: usize, l: usize) -> RationalLaurent {
    use crate::semimod::eta;
    subset_sum(n, LetterSet::sized_subsets_of_prefix(n, 2 * n, l), |s| {
        &product_rational(s, zeta) * &product_rational(s, eta)
    })
}

/// `e_l(z_1, …, z_n, z_n^{−1}, …, z_1^{−1})` with integer coefficients.
pub fn elementary_z(n: usize, l: usize) -> ZLaurentElement {
    let vars: Vec<Weight> = crate::relations::doubled_variables(n, 1, n);
    let e = elementary_vars(n, &vars, l as i64);
    let mut out = ZLaurentElement::zero(n, None);
    for (a, c) in e.terms() {
        let coeff = NovikovSeries::constant(QExtElement::from_int(n, 1).scale(c), None);
        out = &out + &ZLaurentElement::monomial(a.clone(), coeff);
    }
    out
}

/// `F_l − E_l` for `1 ≤ l ≤ n`.
pub fn ideal_generators(n: usize) -> Result<Vec<RationalLaurent>> {
    (1..=n)
        .map(|l| {
            let mut g = f_rational(n, l, FfVariant::Full)?;
            let e = crate::relations::elementary_e(n, l as i64);
            g.add_scalar(&e.negated());
            Ok(g)
        })
        .collect()
}

/// `Σ_l (−1)^l e^{−lε_1} F_l^k` (or `F_l^{k̄}` with `barred`), the polynomial
/// representing the Schubert class of `s_1⋯s_k` (resp. `s_1⋯s_n⋯s_k`).
pub fn schubert_poly(n: usize, k: usize, barred: bool) -> Result<RationalLaurent> {
    let variant = if barred { FfVariant::Barred(k) } else { FfVariant::Upper(k) };
    let top = subset_range(n, variant)?;
    let mut out = RationalLaurent::zero(n);
    for l in 0..=top {
        out = out.checked_add(&f_rational(n, l, variant)?.scale_group_ring(&sign_twist(n, l)))?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f_one_at_rank_one() {
        let f = f_poly(1, 1, FfVariant::Full, None).unwrap();
        let want = &ZLaurentElement::z(1, 1, None).scale(&NovikovSeries::one_minus_var(1, 1, None))
            + &ZLaurentElement::z(1, -1, None);
        assert_eq!(f, want);
    }

    #[test]
    fn f_zero_is_one() {
        for n in 1..=3 {
            assert_eq!(f_poly(n, 0, FfVariant::Full, None).unwrap(), ZLaurentElement::one(n, None));
        }
    }

    #[test]
    fn rank_one_generator() {
        let g = ideal_generators(1).unwrap();
        assert_eq!(g.len(), 1);
        let e = |a| GroupRingElement::monomial(Weight::from_vec(vec![a]));
        let mut want = f_rational(1, 1, FfVariant::Full).unwrap();
        want.add_scalar(&(&e(1) + &e(-1)).negated());
        assert_eq!(g[0], want);
    }

    #[test]
    fn top_schubert_polys_agree() {
        for n in 1..=3 {
            assert_eq!(schubert_poly(n, n, false).unwrap(), schubert_poly(n, n, true).unwrap());
        }
    }
}
