use std::collections::BTreeMap;
use std::fmt;

use serde_json::{json, Value};

use super::series::join_truncation;
use super::{add_term, check_rank, forward_ring_ops, NovikovSeries, RingElement, Truncation, Weight};
use crate::error::Result;

/// A Laurent polynomial in `z_1, …, z_n` over [`NovikovSeries`]; `z_{j̄}` is
/// `z_j^{-1}`.
#[derive(Clone, PartialEq, Eq)]
pub struct ZLaurentElement {
    rank: usize,
    trunc: Truncation,
    terms: BTreeMap<Weight, NovikovSeries>,
}

impl ZLaurentElement {
    pub fn zero(rank: usize, trunc: Truncation) -> Self {
        ZLaurentElement { rank, trunc, terms: BTreeMap::new() }
    }

    pub fn one(rank: usize, trunc: Truncation) -> Self {
        Self::from_series(NovikovSeries::one(rank, trunc))
    }

    pub fn from_series(c: NovikovSeries) -> Self {
        Self::monomial(Weight::zero(c.rank()), c)
    }

    /// `c·z^a`.
    pub fn monomial(exp: Weight, c: NovikovSeries) -> Self {
        let mut out = Self::zero(c.rank(), c.truncation());
        add_term(&mut out.terms, exp, c);
        out
    }

    /// `z_x` for a signed letter `x` (`z_{-j} = z_j^{-1}`).
    pub fn z(rank: usize, letter: i32, trunc: Truncation) -> Self {
        Self::monomial(Weight::epsilon(rank, letter), NovikovSeries::one(rank, trunc))
    }

    pub fn truncation(&self) -> Truncation {
        self.trunc
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Weight, &NovikovSeries)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: &Weight) -> NovikovSeries {
        self.terms
            .get(exp)
            .cloned()
            .unwrap_or_else(|| NovikovSeries::zero(self.rank, self.trunc))
    }

    pub fn scale(&self, c: &NovikovSeries) -> Self {
        self * &Self::from_series(c.clone())
    }

    /// Replaces every coefficient by its value at `Q_1 = ⋯ = Q_n = 0`.
    pub fn specialize_q_zero(&self) -> Self {
        let mut out = Self::zero(self.rank, self.trunc);
        for (e, c) in &self.terms {
            add_term(&mut out.terms, e.clone(), c.specialize_zero());
        }
        out
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|(e, c)| json!({ "z": e.coords(), "coeff": c.to_json() }))
                .collect(),
        )
    }

    fn z_text(e: &Weight) -> String {
        e.coords()
            .iter()
            .enumerate()
            .filter(|(_, &a)| a != 0)
            .map(|(i, &a)| if a == 1 { format!("z{}", i + 1) } else { format!("z{}^{a}", i + 1) })
            .collect::<Vec<_>>()
            .join("*")
    }
}

impl RingElement for ZLaurentElement {
    fn rank(&self) -> usize {
        self.rank
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn checked_add(&self, other: &Self) -> Result<Self> {
        check_rank("Laurent", self.rank, other.rank)?;
        let trunc = join_truncation(self.trunc, other.trunc)?;
        let mut out = Self::zero(self.rank, trunc);
        for (e, c) in self.terms.iter().chain(&other.terms) {
            add_term(&mut out.terms, e.clone(), c.with_truncation(trunc)?);
        }
        Ok(out)
    }

    fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&other.negated())
    }

    fn checked_mul(&self, other: &Self) -> Result<Self> {
        check_rank("Laurent", self.rank, other.rank)?;
        let trunc = join_truncation(self.trunc, other.trunc)?;
        let mut out = Self::zero(self.rank, trunc);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                add_term(&mut out.terms, e1 + e2, c1.checked_mul(c2)?);
            }
        }
        Ok(out)
    }

    fn negated(&self) -> Self {
        ZLaurentElement {
            rank: self.rank,
            trunc: self.trunc,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c.negated())).collect(),
        }
    }
}

forward_ring_ops!(ZLaurentElement);

impl fmt::Display for ZLaurentElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            let z = Self::z_text(e);
            match (c.is_one(), z.is_empty()) {
                (_, true) => write!(f, "({c})")?,
                (true, false) => write!(f, "{z}")?,
                (false, false) => write!(f, "({c})*{z}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for ZLaurentElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn specialization_drops_novikov_terms() {
        let t = Some(4);
        let f = ZLaurentElement::z(1, 1, t).scale(&NovikovSeries::one_minus_var(1, 1, t)) + ZLaurentElement::z(1, -1, t);
        let expected = ZLaurentElement::z(1, 1, t) + ZLaurentElement::z(1, -1, t);
        assert_eq!(f.specialize_q_zero(), expected);
        assert_eq!(ZLaurentElement::one(1, t).specialize_q_zero(), ZLaurentElement::one(1, t));
    }

    #[test]
    fn z_inverse_cancels() {
        let t = Some(2);
        let p = ZLaurentElement::z(2, 2, t) * ZLaurentElement::z(2, -2, t);
        assert_eq!(p, ZLaurentElement::one(2, t));
    }
}
