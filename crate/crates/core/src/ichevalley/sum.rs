use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde_json::{json, Value};

use crate::error::Result;
use crate::rings::{NovikovSeries, QExtElement, Truncation, Weight};
use crate::semimod::SemiModElement;
use crate::weyl::{Coroot, SignedPerm};

/// Key `(w, ξ, λ)` for the class `[O_{Q_G(w t_ξ)}(λ)]`.
pub type ClassKey = (SignedPerm, Coroot, Weight);

/// A finite sum `Σ c·[O_{Q_G(w t_ξ)}(λ)]` with `c ∈ ℤ[q^{±1}][P]` and
/// `ξ ∈ Q^{∨,+}`.
#[derive(Clone, PartialEq, Eq)]
pub struct SemiClassSum {
    rank: usize,
    terms: BTreeMap<ClassKey, QExtElement>,
}

impl SemiClassSum {
    pub fn zero(rank: usize) -> Self {
        SemiClassSum { rank, terms: BTreeMap::new() }
    }

    /// `c·[O_{Q_G(w t_ξ)}(λ)]`.
    pub fn single(w: SignedPerm, xi: Coroot, lambda: Weight, c: QExtElement) -> Self {
        let mut out = Self::zero(w.rank());
        out.add_term(w, xi, lambda, c);
        out
    }

    /// `±q^a·[O_{Q_G(w t_ξ)}(λ)]`.
    pub fn signed(w: SignedPerm, xi: Coroot, lambda: Weight, sign: i64, q_exp: i32) -> Self {
        let n = w.rank();
        let c = QExtElement::q_power(n, q_exp).scale_int(sign);
        Self::single(w, xi, lambda, c)
    }

    pub fn rank(&self) -> usize {
        self.rank
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

    pub fn terms(&self) -> impl Iterator<Item = (&ClassKey, &QExtElement)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &SignedPerm, xi: &Coroot, lambda: &Weight) -> QExtElement {
        self.terms
            .get(&(w.clone(), xi.clone(), lambda.clone()))
            .cloned()
            .unwrap_or_else(|| QExtElement::zero(self.rank))
    }

    pub fn add_term(&mut self, w: SignedPerm, xi: Coroot, lambda: Weight, c: QExtElement) {
        assert!(xi.is_nonnegative(), "translation {xi} outside Q^∨,+");
        if c.is_empty() {
            return;
        }
        let key = (w, xi, lambda);
        let sum = match self.terms.remove(&key) {
            Some(old) => &old + &c,
            None => c,
        };
        if !sum.is_empty() {
            self.terms.insert(key, sum);
        }
    }

    pub fn add_assign(&mut self, other: &SemiClassSum) {
        for ((w, xi, l), c) in &other.terms {
            self.add_term(w.clone(), xi.clone(), l.clone(), c.clone());
        }
    }

    /// Tensor with `[O_{Q_G}(μ)]`: `λ ↦ λ + μ`.
    pub fn twist(&self, mu: &Weight) -> Self {
        SemiClassSum {
            rank: self.rank,
            terms: self.terms.iter().map(|((w, xi, l), c)| ((w.clone(), xi.clone(), l + mu), c.clone())).collect(),
        }
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &QExtElement) -> Self {
        let mut out = Self::zero(self.rank);
        for ((w, xi, l), x) in &self.terms {
            out.add_term(w.clone(), xi.clone(), l.clone(), x * c);
        }
        out
    }

    /// `q ↦ 1`.
    pub fn specialize_q_one(&self) -> Self {
        let mut out = Self::zero(self.rank);
        for ((w, xi, l), c) in &self.terms {
            out.add_term(w.clone(), xi.clone(), l.clone(), QExtElement::from_group_ring(&c.specialize_q_one()));
        }
        out
    }

    /// Distinct `q`-exponents, increasing.
    pub fn q_exponents(&self) -> Vec<i32> {
        let mut out: Vec<i32> = self.terms.values().flat_map(|c| c.terms().map(|(k, _, _)| k).collect::<Vec<_>>()).collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Replaces each class `[O_{Q_G(w t_ξ)}(λ)]` by `𝒯^ξ·sub(w) ⊗ O(λ)` after
    /// `q ↦ 1`.
    pub fn substitute<F>(&self, trunc: Truncation, sub: F) -> Result<SemiModElement>
    where
        F: Fn(&SignedPerm) -> Result<SemiModElement>,
    {
        let mut out = SemiModElement::zero(self.rank, trunc);
        for ((w, xi, l), c) in &self.terms {
            let g = c.specialize_q_one();
            let coeff = &SemiModElement::translation_coeff(xi, trunc)? * &NovikovSeries::from_group_ring(&g, trunc);
            let image = sub(w)?.scale(&coeff).tensor(l);
            out = out.checked_add(&image)?;
        }
        Ok(out)
    }

    /// The classes themselves as basis elements `(w, λ)` with coefficient
    /// `𝒯^ξ` (after `q ↦ 1`).
    pub fn to_semimod(&self, trunc: Truncation) -> Result<SemiModElement> {
        let n = self.rank;
        self.substitute(trunc, |w| Ok(SemiModElement::basis_term(w.clone(), Weight::zero(n), NovikovSeries::one(n, trunc))))
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|((w, xi, l), c)| {
                    json!({ "w": w.to_string(), "xi": xi.coords(), "lambda": l.coords(), "coeff": c.to_json() })
                })
                .collect(),
        )
    }

    /// One line per class: `coeff * [w t_ξ](λ)`.
    pub fn render(&self) -> String {
        self.terms
            .iter()
            .map(|((w, xi, l), c)| {
                let t = if xi.is_zero() { String::new() } else { format!(" t{xi}") };
                format!("({c}) * [{w}{t}]({l})")
            })
            .collect::<Vec<_>>()
            .join("\n")
    }
}

impl Add for &SemiClassSum {
    type Output = SemiClassSum;
    fn add(self, rhs: &SemiClassSum) -> SemiClassSum {
        let mut out = self.clone();
        out.add_assign(rhs);
        out
    }
}

impl Neg for &SemiClassSum {
    type Output = SemiClassSum;
    fn neg(self) -> SemiClassSum {
        SemiClassSum { rank: self.rank, terms: self.terms.iter().map(|(k, c)| (k.clone(), -c)).collect() }
    }
}

impl Sub for &SemiClassSum {
    type Output = SemiClassSum;
    fn sub(self, rhs: &SemiClassSum) -> SemiClassSum {
        self + &(-rhs)
    }
}

impl fmt::Display for SemiClassSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        write!(f, "{}", self.render())
    }
}

impl fmt::Debug for SemiClassSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
