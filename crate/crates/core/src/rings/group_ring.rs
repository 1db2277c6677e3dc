use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use super::{add_term, check_rank, forward_ring_ops, RingElement, Weight};
use crate::error::{Error, Result};

/// An element of ℤ[P] = ℤ[e^{±ε_1}, …, e^{±ε_n}] in canonical sparse form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GroupRingElement {
    rank: usize,
    terms: BTreeMap<Weight, BigInt>,
}

impl GroupRingElement {
    pub fn zero(rank: usize) -> Self {
        GroupRingElement { rank, terms: BTreeMap::new() }
    }

    pub fn one(rank: usize) -> Self {
        Self::monomial(Weight::zero(rank))
    }

    pub fn from_int(rank: usize, c: i64) -> Self {
        Self::term(Weight::zero(rank), BigInt::from(c))
    }

    /// `e^λ`.
    pub fn monomial(weight: Weight) -> Self {
        Self::term(weight, BigInt::one())
    }

    pub fn term(weight: Weight, coeff: BigInt) -> Self {
        let mut out = Self::zero(weight.rank());
        add_term(&mut out.terms, weight, coeff);
        out
    }

    /// Builds an element from arbitrary (possibly repeated) terms.
    pub fn from_terms<I>(rank: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Weight, BigInt)>,
    {
        let mut out = Self::zero(rank);
        for (w, c) in terms {
            assert_eq!(w.rank(), rank, "weight rank mismatch");
            add_term(&mut out.terms, w, c);
        }
        out
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Weight, &BigInt)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, weight: &Weight) -> BigInt {
        self.terms.get(weight).cloned().unwrap_or_default()
    }

    /// The single term if this element is a nonzero monomial `c·e^λ`.
    pub fn as_monomial(&self) -> Option<(&Weight, &BigInt)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    pub fn is_one(&self) -> bool {
        matches!(self.as_monomial(), Some((w, c)) if w.is_zero() && c.is_one())
    }

    pub fn add_term_in_place(&mut self, weight: Weight, coeff: BigInt) {
        add_term(&mut self.terms, weight, coeff);
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero(self.rank);
        }
        GroupRingElement {
            rank: self.rank,
            terms: self.terms.iter().map(|(w, x)| (w.clone(), x * c)).collect(),
        }
    }

    pub fn scale_int(&self, c: i64) -> Self {
        self.scale(&BigInt::from(c))
    }

    /// Multiplication by `e^μ`.
    pub fn shift(&self, mu: &Weight) -> Self {
        GroupRingElement {
            rank: self.rank,
            terms: self.terms.iter().map(|(w, c)| (w + mu, c.clone())).collect(),
        }
    }

    /// Applies `f` to every exponent (e.g. a Weyl group action).
    pub fn map_weights<F: Fn(&Weight) -> Weight>(&self, f: F) -> Self {
        Self::from_terms(self.rank, self.terms.iter().map(|(w, c)| (f(w), c.clone())))
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.rank);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Exact quotient `a / d` for a monomial or a binomial `c(e^μ - e^ν)` divisor.
    pub fn exact_div(&self, d: &GroupRingElement) -> Result<GroupRingElement> {
        check_rank("group ring", self.rank, d.rank)?;
        let not_divisible = || Error::NotDivisible {
            dividend: self.to_string(),
            divisor: d.to_string(),
        };
        match d.terms.len() {
            1 => {
                let (mu, c) = d.terms.iter().next().unwrap();
                let neg_mu = -mu;
                let mut out = Self::zero(self.rank);
                for (w, x) in &self.terms {
                    let (q, r) = x.div_rem(c);
                    if !r.is_zero() {
                        return Err(not_divisible());
                    }
                    out.terms.insert(w + &neg_mu, q);
                }
                Ok(out)
            }
            2 => {
                let mut it = d.terms.iter();
                let (mu, c1) = it.next().unwrap();
                let (nu, c2) = it.next().unwrap();
                if c1 != &-c2 {
                    return Err(Error::UnsupportedDivisor(d.to_string()));
                }
                // d = c1·e^μ·(1 - e^γ)
                let lead = Self::term(mu.clone(), c1.clone());
                let partial = self.exact_div(&lead).map_err(|_| not_divisible())?;
                let gamma = nu - mu;
                partial
                    .div_one_minus(&gamma)
                    .ok_or_else(not_divisible)
            }
            _ => Err(Error::UnsupportedDivisor(d.to_string())),
        }
    }

    /// Division by `1 - e^γ`, reducing lowest terms along the grading `⟨·, γ⟩`.
    fn div_one_minus(&self, gamma: &Weight) -> Option<GroupRingElement> {
        if self.is_zero() {
            return Some(self.clone());
        }
        let grade = |w: &Weight| w.dot(gamma);
        let step = gamma.dot(gamma);
        let max_grade = self.terms.keys().map(grade).max().unwrap();
        let bound = max_grade - step;
        let mut rem: BTreeMap<(i64, Weight), BigInt> = self
            .terms
            .iter()
            .map(|(w, c)| ((grade(w), w.clone()), c.clone()))
            .collect();
        let mut quotient = Self::zero(self.rank);
        while let Some(((g, w), c)) = rem.pop_first() {
            if g > bound {
                return None;
            }
            let up = &w + gamma;
            add_term(&mut rem, (g + step, up), c.clone());
            quotient.terms.insert(w, c);
        }
        Some(quotient)
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|(w, c)| json!({ "weight": w.coords(), "coeff": c.to_string() }))
                .collect(),
        )
    }
}

impl RingElement for GroupRingElement {
    fn rank(&self) -> usize {
        self.rank
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn checked_add(&self, other: &Self) -> Result<Self> {
        check_rank("group ring", self.rank, other.rank)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            add_term(&mut out.terms, w.clone(), c.clone());
        }
        Ok(out)
    }

    fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&other.negated())
    }

    fn checked_mul(&self, other: &Self) -> Result<Self> {
        check_rank("group ring", self.rank, other.rank)?;
        let mut out = Self::zero(self.rank);
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                add_term(&mut out.terms, w1 + w2, c1 * c2);
            }
        }
        Ok(out)
    }

    fn negated(&self) -> Self {
        GroupRingElement {
            rank: self.rank,
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect(),
        }
    }
}

forward_ring_ops!(GroupRingElement);

/// Writes a signed sum of `(coefficient, monomial text)` pairs; an empty
/// monomial text denotes the unit.
pub(crate) fn write_signed_terms<'a, I>(f: &mut fmt::Formatter<'_>, terms: I) -> fmt::Result
where
    I: IntoIterator<Item = (&'a BigInt, String)>,
{
    let mut first = true;
    for (c, mono) in terms {
        let neg = c.is_negative();
        let abs = c.abs();
        if first {
            if neg {
                write!(f, "-")?;
            }
        } else {
            write!(f, "{}", if neg { " - " } else { " + " })?;
        }
        first = false;
        match (abs.is_one(), mono.is_empty()) {
            (true, true) => write!(f, "1")?,
            (true, false) => write!(f, "{mono}")?,
            (false, true) => write!(f, "{abs}")?,
            (false, false) => write!(f, "{abs}*{mono}")?,
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl fmt::Display for GroupRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_signed_terms(
            f,
            self.terms.iter().map(|(w, c)| {
                let mono = if w.is_zero() { String::new() } else { format!("e{w}") };
                (c, mono)
            }),
        )
    }
}

impl fmt::Debug for GroupRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(v: &[i32]) -> GroupRingElement {
        GroupRingElement::monomial(Weight::from_vec(v.to_vec()))
    }

    #[test]
    fn inverse_monomials_multiply_to_one() {
        assert!((e(&[1, 0]) * e(&[-1, 0])).is_one());
    }

    #[test]
    fn distributes_over_sum() {
        let lhs = e(&[1]) * (e(&[1]) + e(&[-1]));
        assert_eq!(lhs, e(&[2]) + e(&[0]));
    }

    #[test]
    fn divides_difference_of_squares() {
        let one = GroupRingElement::one(2);
        let a = &one - &e(&[2, 2]);
        let d = &one - &e(&[1, 1]);
        assert_eq!(a.exact_div(&d).unwrap(), &one + &e(&[1, 1]));
    }

    #[test]
    fn divides_power_difference() {
        let a = e(&[-2, 0]) - e(&[0, -2]);
        let d = GroupRingElement::one(2) - e(&[1, -1]);
        let expected = e(&[-2, 0]) * (GroupRingElement::one(2) + e(&[1, -1]));
        assert_eq!(a.exact_div(&d).unwrap(), expected);
    }

    #[test]
    fn rejects_non_divisible() {
        let d = GroupRingElement::one(1) - e(&[1]);
        let err = GroupRingElement::one(1).exact_div(&d).unwrap_err();
        assert!(matches!(err, Error::NotDivisible { .. }));
    }

    #[test]
    fn rejects_unsupported_divisor() {
        let d = GroupRingElement::one(1) + e(&[1]);
        let err = e(&[2]).exact_div(&d).unwrap_err();
        assert!(matches!(err, Error::UnsupportedDivisor(_)));
    }

    #[test]
    fn monomial_division_checks_coefficients() {
        let a = GroupRingElement::from_int(1, 3);
        let d = GroupRingElement::from_int(1, 2);
        assert!(a.exact_div(&d).is_err());
        let a = GroupRingElement::from_int(1, 6).shift(&Weight::from_vec(vec![2]));
        assert_eq!(a.exact_div(&d).unwrap(), GroupRingElement::from_int(1, 3).shift(&Weight::from_vec(vec![2])));
    }

    #[test]
    fn display_is_sorted_and_signed() {
        let x = e(&[1, 0]) - e(&[0, 0]).scale_int(2) + e(&[-1, 0]);
        assert_eq!(x.to_string(), "e[-1,0] - 2 + e[1,0]");
        assert_eq!(GroupRingElement::zero(2).to_string(), "0");
    }

    #[test]
    fn mismatched_rank_is_config_error() {
        let err = e(&[1]).checked_add(&e(&[1, 0])).unwrap_err();
        assert!(matches!(err, Error::Config(_)));
    }
}
