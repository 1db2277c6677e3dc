use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::rings::{GroupRingElement, NovikovSeries, QExtElement, RingElement, SeriesExp, Truncation, Weight};
use crate::weyl::{demazure_d, Coroot, SignedPerm};

/// Basis key `(w, λ)` standing for `[O_{Q_G(w)}(λ)]`.
pub type BasisKey = (SignedPerm, Weight);

/// A finite sum `Σ c_{w,λ}·[O_{Q_G(w)}(λ)]` whose coefficients are power series
/// in the shift operators `𝒯_1, …, 𝒯_n` over ℤ[P]; `𝒯^ξ` applied to
/// `[O_{Q_G(w)}]` is `[O_{Q_G(w t_ξ)}]`.
#[derive(Clone, PartialEq, Eq)]
pub struct SemiModElement {
    rank: usize,
    trunc: Truncation,
    terms: BTreeMap<BasisKey, NovikovSeries>,
}

impl SemiModElement {
    pub fn zero(rank: usize, trunc: Truncation) -> Self {
        SemiModElement { rank, trunc, terms: BTreeMap::new() }
    }

    /// `c·[O_{Q_G(w)}(λ)]`.
    pub fn basis_term(w: SignedPerm, lambda: Weight, c: NovikovSeries) -> Self {
        let mut out = Self::zero(c.rank(), c.truncation());
        out.add_term(w, lambda, c);
        out
    }

    /// `[O_{Q_G}(λ)]`.
    pub fn line_bundle(lambda: Weight, trunc: Truncation) -> Self {
        let n = lambda.rank();
        Self::basis_term(SignedPerm::identity(n), lambda, NovikovSeries::one(n, trunc))
    }

    /// `[O_{Q_G(w t_ξ)}(λ)]` for `ξ ∈ Q^{∨,+}`.
    pub fn class(w: SignedPerm, xi: &Coroot, lambda: Weight, trunc: Truncation) -> Result<Self> {
        let c = Self::translation_coeff(xi, trunc)?;
        Ok(Self::basis_term(w, lambda, c))
    }

    /// `𝒯^ξ` as a series.
    pub fn translation_coeff(xi: &Coroot, trunc: Truncation) -> Result<NovikovSeries> {
        if !xi.is_nonnegative() {
            return Err(Error::UnsupportedOperand(format!("translation {xi} is not in Q^∨,+")));
        }
        let exp = SeriesExp::from_vec(xi.coords().iter().map(|&c| c as u32).collect());
        Ok(NovikovSeries::monomial(exp, QExtElement::one(xi.rank()), trunc))
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn truncation(&self) -> Truncation {
        self.trunc
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BasisKey, &NovikovSeries)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &SignedPerm, lambda: &Weight) -> NovikovSeries {
        self.terms
            .get(&(w.clone(), lambda.clone()))
            .cloned()
            .unwrap_or_else(|| NovikovSeries::zero(self.rank, self.trunc))
    }

    pub fn add_term(&mut self, w: SignedPerm, lambda: Weight, c: NovikovSeries) {
        let c = c.with_truncation(self.trunc).expect("truncation mismatch");
        if c.is_zero() {
            return;
        }
        let key = (w, lambda);
        let sum = match self.terms.remove(&key) {
            Some(old) => &old + &c,
            None => c,
        };
        if !sum.is_zero() {
            self.terms.insert(key, sum);
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        if self.rank != other.rank {
            return Err(Error::Config(format!("module rank mismatch: {} vs {}", self.rank, other.rank)));
        }
        let trunc = match (self.trunc, other.trunc) {
            (None, t) | (t, None) => t,
            (Some(a), Some(b)) if a == b => Some(a),
            (Some(a), Some(b)) => return Err(Error::Config(format!("truncation degree mismatch: {a} vs {b}"))),
        };
        let mut out = self.with_truncation(trunc)?;
        for ((w, l), c) in &other.terms {
            out.add_term(w.clone(), l.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn with_truncation(&self, trunc: Truncation) -> Result<Self> {
        let mut out = Self::zero(self.rank, trunc);
        for ((w, l), c) in &self.terms {
            out.add_term(w.clone(), l.clone(), c.with_truncation(trunc)?);
        }
        Ok(out)
    }

    /// Multiplies every coefficient by `c` (a scalar in ℤ[P], `q`, or a series
    /// in `𝒯`).
    pub fn scale(&self, c: &NovikovSeries) -> Self {
        let trunc = match (self.trunc, c.truncation()) {
            (None, t) | (t, None) => t,
            (Some(a), _) => Some(a),
        };
        let mut out = Self::zero(self.rank, trunc);
        for ((w, l), x) in &self.terms {
            out.add_term(w.clone(), l.clone(), x * c);
        }
        out
    }

    pub fn scale_group_ring(&self, g: &GroupRingElement) -> Self {
        self.scale(&NovikovSeries::from_group_ring(g, None))
    }

    /// `e^ν · Z`.
    pub fn scale_exp(&self, nu: &Weight) -> Self {
        self.scale_group_ring(&GroupRingElement::monomial(nu.clone()))
    }

    pub fn scale_int(&self, c: i64) -> Self {
        self.scale(&NovikovSeries::from_int(self.rank, c, None))
    }

    /// `𝒯_{lo} 𝒯_{lo+1} ⋯ 𝒯_{hi} Z`.
    pub fn shift_range(&self, lo: usize, hi: usize) -> Self {
        self.scale(&NovikovSeries::var_product(self.rank, lo, hi, None))
    }

    /// `Z ⊗ [O_{Q_G}(μ)]`.
    pub fn tensor(&self, mu: &Weight) -> Self {
        SemiModElement {
            rank: self.rank,
            trunc: self.trunc,
            terms: self.terms.iter().map(|((w, l), c)| ((w.clone(), l + mu), c.clone())).collect(),
        }
    }

    /// Applies the Demazure operator `D_i` to the ℤ[P] part of every
    /// coefficient; only defined on translation classes (Weyl part `e`).
    pub fn demazure_module(&self, i: usize) -> Result<Self> {
        if let Some(((w, _), _)) = self.terms.iter().find(|((w, _), _)| !w.is_identity()) {
            return Err(Error::UnsupportedOperand(format!(
                "Demazure operator on a class with Weyl part {w}"
            )));
        }
        let mut out = Self::zero(self.rank, self.trunc);
        for ((w, l), c) in &self.terms {
            let image = c.map_coeffs(|x| x.map_levels(|g| demazure_d(i, g)));
            out.add_term(w.clone(), l.clone(), image);
        }
        Ok(out)
    }

    /// The first basis key on which `self` and `other` differ, with both
    /// coefficients.
    pub fn first_difference(&self, other: &Self) -> Option<(BasisKey, NovikovSeries, NovikovSeries)> {
        let diff = self - other;
        diff.terms.keys().next().map(|k| {
            let (w, l) = k.clone();
            let a = self.coeff(&w, &l);
            let b = other.coeff(&w, &l);
            (k.clone(), a, b)
        })
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|((w, l), c)| json!({ "w": w.to_string(), "lambda": l.coords(), "coeff": c.to_json() }))
                .collect(),
        )
    }

    /// One `(w, λ, coefficient)` triple per line, coefficients written in `T`.
    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0\n".to_string();
        }
        let mut out = String::new();
        for ((w, l), c) in &self.terms {
            out.push_str(&format!("({w}, {l}, {})\n", c.render("T")));
        }
        out
    }
}

impl Add for &SemiModElement {
    type Output = SemiModElement;
    fn add(self, rhs: &SemiModElement) -> SemiModElement {
        self.checked_add(rhs).expect("module operand mismatch")
    }
}

impl Sub for &SemiModElement {
    type Output = SemiModElement;
    fn sub(self, rhs: &SemiModElement) -> SemiModElement {
        self + &-rhs
    }
}

impl Neg for &SemiModElement {
    type Output = SemiModElement;
    fn neg(self) -> SemiModElement {
        SemiModElement {
            rank: self.rank,
            trunc: self.trunc,
            terms: self.terms.iter().map(|(k, c)| (k.clone(), c.negated())).collect(),
        }
    }
}

impl Add for SemiModElement {
    type Output = SemiModElement;
    fn add(self, rhs: SemiModElement) -> SemiModElement {
        &self + &rhs
    }
}

impl Sub for SemiModElement {
    type Output = SemiModElement;
    fn sub(self, rhs: SemiModElement) -> SemiModElement {
        &self - &rhs
    }
}

impl Neg for SemiModElement {
    type Output = SemiModElement;
    fn neg(self) -> SemiModElement {
        -&self
    }
}

impl fmt::Display for SemiModElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.render().trim_end())
    }
}

impl fmt::Debug for SemiModElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn demazure_on_translation_classes() {
        let n = 2;
        let b = SemiModElement::line_bundle(Weight::from_vec(vec![1, 0]), None);
        assert_eq!(b.demazure_module(1).unwrap(), b);
        let killed = b.scale_exp(&Weight::from_vec(vec![1, 0]));
        assert!(killed.demazure_module(1).unwrap().is_zero());
        let non_translation = SemiModElement::basis_term(
            SignedPerm::simple(n, 1),
            Weight::zero(n),
            NovikovSeries::one(n, None),
        );
        assert!(matches!(non_translation.demazure_module(1), Err(Error::UnsupportedOperand(_))));
    }

    #[test]
    fn tensor_is_invertible() {
        let mu = Weight::from_vec(vec![1, -2]);
        let b = SemiModElement::line_bundle(Weight::from_vec(vec![0, 1]), Some(3)).shift_range(1, 2);
        assert_eq!(b.tensor(&mu).tensor(&-&mu), b);
    }
}
