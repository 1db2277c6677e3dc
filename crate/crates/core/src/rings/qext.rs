use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde_json::{json, Value};

use super::group_ring::write_signed_terms;
use super::{add_term, check_rank, forward_ring_ops, Coeff, GroupRingElement, RingElement, Weight};
use crate::error::Result;

/// An element of ℤ[q^{±1}][P], keyed by `(q-exponent, weight)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QExtElement {
    rank: usize,
    terms: BTreeMap<(i32, Weight), BigInt>,
}

impl QExtElement {
    pub fn zero(rank: usize) -> Self {
        QExtElement { rank, terms: BTreeMap::new() }
    }

    pub fn one(rank: usize) -> Self {
        Self::from_int(rank, 1)
    }

    pub fn from_int(rank: usize, c: i64) -> Self {
        Self::term(0, Weight::zero(rank), BigInt::from(c))
    }

    /// `c·q^k·e^λ`.
    pub fn term(q: i32, weight: Weight, coeff: BigInt) -> Self {
        let mut out = Self::zero(weight.rank());
        add_term(&mut out.terms, (q, weight), coeff);
        out
    }

    pub fn q_power(rank: usize, k: i32) -> Self {
        Self::term(k, Weight::zero(rank), BigInt::one())
    }

    pub fn from_group_ring(g: &GroupRingElement) -> Self {
        Self::from_levels(g.rank(), [(0, g.clone())])
    }

    /// Assembles `Σ_k q^k g_k`.
    pub fn from_levels<I>(rank: usize, levels: I) -> Self
    where
        I: IntoIterator<Item = (i32, GroupRingElement)>,
    {
        let mut out = Self::zero(rank);
        for (k, g) in levels {
            for (w, c) in g.terms() {
                add_term(&mut out.terms, (k, w.clone()), c.clone());
            }
        }
        out
    }

    /// Splits into `q^k`-homogeneous parts.
    pub fn levels(&self) -> BTreeMap<i32, GroupRingElement> {
        let mut out: BTreeMap<i32, GroupRingElement> = BTreeMap::new();
        for ((k, w), c) in &self.terms {
            out.entry(*k)
                .or_insert_with(|| GroupRingElement::zero(self.rank))
                .add_term_in_place(w.clone(), c.clone());
        }
        out
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, &Weight, &BigInt)> {
        self.terms.iter().map(|((k, w), c)| (*k, w, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The ring map `q ↦ 1` onto ℤ[P].
    pub fn specialize_q_one(&self) -> GroupRingElement {
        GroupRingElement::from_terms(self.rank, self.terms.iter().map(|((_, w), c)| (w.clone(), c.clone())))
    }

    /// Applies a ℤ-linear map of ℤ[P] on every `q^k` level.
    pub fn map_levels<F: Fn(&GroupRingElement) -> GroupRingElement>(&self, f: F) -> Self {
        Self::from_levels(self.rank, self.levels().into_iter().map(|(k, g)| (k, f(&g))))
    }

    pub fn map_weights<F: Fn(&Weight) -> Weight>(&self, f: F) -> Self {
        let mut out = Self::zero(self.rank);
        for ((k, w), c) in &self.terms {
            add_term(&mut out.terms, (*k, f(w)), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let mut out = Self::zero(self.rank);
        for (key, x) in &self.terms {
            add_term(&mut out.terms, key.clone(), x * c);
        }
        out
    }

    pub fn scale_int(&self, c: i64) -> Self {
        self.scale(&BigInt::from(c))
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .all(|((k, w), c)| *k == 0 && w.is_zero() && c.is_one())
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|((k, w), c)| json!({ "q": k, "weight": w.coords(), "coeff": c.to_string() }))
                .collect(),
        )
    }

    fn monomial_text(k: i32, w: &Weight) -> String {
        let mut parts = Vec::new();
        if k != 0 {
            parts.push(format!("q^{k}"));
        }
        if !w.is_zero() {
            parts.push(format!("e{w}"));
        }
        parts.join("*")
    }
}

impl Coeff for QExtElement {
    fn coeff_is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn coeff_add_assign(&mut self, other: &Self) {
        for (key, c) in &other.terms {
            add_term(&mut self.terms, key.clone(), c.clone());
        }
    }
}

impl RingElement for QExtElement {
    fn rank(&self) -> usize {
        self.rank
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn checked_add(&self, other: &Self) -> Result<Self> {
        check_rank("q-extension", self.rank, other.rank)?;
        let mut out = self.clone();
        out.coeff_add_assign(other);
        Ok(out)
    }

    fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&other.negated())
    }

    fn checked_mul(&self, other: &Self) -> Result<Self> {
        check_rank("q-extension", self.rank, other.rank)?;
        let mut out = Self::zero(self.rank);
        for ((k1, w1), c1) in &self.terms {
            for ((k2, w2), c2) in &other.terms {
                add_term(&mut out.terms, (k1 + k2, w1 + w2), c1 * c2);
            }
        }
        Ok(out)
    }

    fn negated(&self) -> Self {
        QExtElement {
            rank: self.rank,
            terms: self.terms.iter().map(|(key, c)| (key.clone(), -c)).collect(),
        }
    }
}

forward_ring_ops!(QExtElement);

impl fmt::Display for QExtElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_signed_terms(f, self.terms.iter().map(|((k, w), c)| (c, Self::monomial_text(*k, w))))
    }
}

impl fmt::Debug for QExtElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn q_one_specialization_is_multiplicative() {
        let w = Weight::from_vec(vec![1, -1]);
        let a = QExtElement::q_power(2, 2) + QExtElement::term(-1, w.clone(), BigInt::from(3));
        let b = QExtElement::q_power(2, -1) - QExtElement::one(2);
        assert_eq!((&a * &b).specialize_q_one(), a.specialize_q_one() * b.specialize_q_one());
    }

    #[test]
    fn levels_round_trip() {
        let w = Weight::from_vec(vec![1]);
        let a = QExtElement::term(1, w.clone(), BigInt::from(2)) + QExtElement::from_int(1, -1);
        assert_eq!(QExtElement::from_levels(1, a.levels()), a);
        assert_eq!(a.to_string(), "-1 + 2*q^1*e[1]");
    }
}
