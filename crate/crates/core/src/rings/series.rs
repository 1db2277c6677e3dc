use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use serde_json::{json, Value};

use super::{add_term, check_rank, forward_ring_ops, Coeff, GroupRingElement, QExtElement, RingElement};
use crate::error::{Error, Result};

/// Total-degree truncation: `Some(D)` drops every term of degree `> D`,
/// `None` keeps polynomials exactly.
pub type Truncation = Option<u32>;

/// Exponent vector of a monomial in the series variables.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SeriesExp(Vec<u32>);

impl SeriesExp {
    pub fn zero(rank: usize) -> Self {
        SeriesExp(vec![0; rank])
    }

    pub fn from_vec(v: Vec<u32>) -> Self {
        SeriesExp(v)
    }

    /// The monomial `x_j`.
    pub fn var(rank: usize, j: usize) -> Self {
        let mut v = vec![0; rank];
        v[j - 1] = 1;
        SeriesExp(v)
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    fn plus(&self, other: &SeriesExp) -> SeriesExp {
        SeriesExp(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `x1^a*x3^b` rendering with variable prefix `var`; empty for the unit.
    pub fn render(&self, var: &str) -> String {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| if e == 1 { format!("{var}{}", i + 1) } else { format!("{var}{}^{e}", i + 1) })
            .collect::<Vec<_>>()
            .join("*")
    }
}

impl fmt::Debug for SeriesExp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// Combined truncation of two operands; an exact polynomial adapts to a
/// truncated partner.
pub(crate) fn join_truncation(a: Truncation, b: Truncation) -> Result<Truncation> {
    match (a, b) {
        (None, t) | (t, None) => Ok(t),
        (Some(x), Some(y)) if x == y => Ok(Some(x)),
        (Some(x), Some(y)) => Err(Error::Config(format!("truncation degree mismatch: {x} vs {y}"))),
    }
}

/// A formal power series in `n` commuting variables (Novikov variables `Q_j`
/// or shift operators `𝒯_j`) with ℤ[q^{±1}][P] coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct NovikovSeries {
    rank: usize,
    trunc: Truncation,
    terms: BTreeMap<SeriesExp, QExtElement>,
}

impl NovikovSeries {
    pub fn zero(rank: usize, trunc: Truncation) -> Self {
        NovikovSeries { rank, trunc, terms: BTreeMap::new() }
    }

    pub fn one(rank: usize, trunc: Truncation) -> Self {
        Self::constant(QExtElement::one(rank), trunc)
    }

    pub fn from_int(rank: usize, c: i64, trunc: Truncation) -> Self {
        Self::constant(QExtElement::from_int(rank, c), trunc)
    }

    pub fn constant(c: QExtElement, trunc: Truncation) -> Self {
        Self::monomial(SeriesExp::zero(c.rank()), c, trunc)
    }

    pub fn from_group_ring(g: &GroupRingElement, trunc: Truncation) -> Self {
        Self::constant(QExtElement::from_group_ring(g), trunc)
    }

    pub fn monomial(exp: SeriesExp, coeff: QExtElement, trunc: Truncation) -> Self {
        let mut out = Self::zero(coeff.rank(), trunc);
        if trunc.is_none_or(|d| exp.degree() <= d) {
            add_term(&mut out.terms, exp, coeff);
        }
        out
    }

    /// The variable `x_j`; `x_0` is zero.
    pub fn var(rank: usize, j: usize, trunc: Truncation) -> Self {
        if j == 0 {
            return Self::zero(rank, trunc);
        }
        Self::monomial(SeriesExp::var(rank, j), QExtElement::one(rank), trunc)
    }

    /// `x_lo·x_{lo+1}⋯x_hi`; zero when the range contains the index 0.
    pub fn var_product(rank: usize, lo: usize, hi: usize, trunc: Truncation) -> Self {
        if lo == 0 {
            return Self::zero(rank, trunc);
        }
        let mut v = vec![0; rank];
        for slot in v.iter_mut().take(hi).skip(lo - 1) {
            *slot = 1;
        }
        Self::monomial(SeriesExp(v), QExtElement::one(rank), trunc)
    }

    /// `1 - x_j`, which is `1` for `j = 0`.
    pub fn one_minus_var(rank: usize, j: usize, trunc: Truncation) -> Self {
        &Self::one(rank, trunc) - &Self::var(rank, j, trunc)
    }

    /// `Σ_{k=0}^{D} x_j^k`, the inverse of `1 - x_j` up to degree `D`; for
    /// `j = 0` this is `1`.
    pub fn geometric_inverse(rank: usize, j: usize, d: u32) -> Self {
        let trunc = Some(d);
        if j == 0 {
            return Self::one(rank, trunc);
        }
        let mut out = Self::zero(rank, trunc);
        for k in 0..=d {
            let mut v = vec![0; rank];
            v[j - 1] = k;
            add_term(&mut out.terms, SeriesExp(v), QExtElement::one(rank));
        }
        out
    }

    pub fn truncation(&self) -> Truncation {
        self.trunc
    }

    /// Re-truncates at `trunc`; exact polynomials may be truncated, but a
    /// truncated series cannot be promoted to a different degree.
    pub fn with_truncation(&self, trunc: Truncation) -> Result<Self> {
        let joined = join_truncation(self.trunc, trunc)?;
        let terms = self
            .terms
            .iter()
            .filter(|(e, _)| joined.is_none_or(|d| e.degree() <= d))
            .map(|(e, c)| (e.clone(), c.clone()))
            .collect();
        Ok(NovikovSeries { rank: self.rank, trunc: joined, terms })
    }

    pub fn terms(&self) -> impl Iterator<Item = (&SeriesExp, &QExtElement)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: &SeriesExp) -> QExtElement {
        self.terms.get(exp).cloned().unwrap_or_else(|| QExtElement::zero(self.rank))
    }

    pub fn add_term_in_place(&mut self, exp: SeriesExp, coeff: QExtElement) {
        if self.trunc.is_none_or(|d| exp.degree() <= d) {
            add_term(&mut self.terms, exp, coeff);
        }
    }

    /// Degree-zero coefficient.
    pub fn constant_term(&self) -> QExtElement {
        self.coeff(&SeriesExp::zero(self.rank))
    }

    /// The specialization `x_1 = ⋯ = x_n = 0`, kept as a series.
    pub fn specialize_zero(&self) -> Self {
        Self::constant(self.constant_term(), self.trunc)
    }

    pub fn max_degree(&self) -> u32 {
        self.terms.keys().map(SeriesExp::degree).max().unwrap_or(0)
    }

    pub fn map_coeffs<F: Fn(&QExtElement) -> QExtElement>(&self, f: F) -> Self {
        let mut out = Self::zero(self.rank, self.trunc);
        for (e, c) in &self.terms {
            add_term(&mut out.terms, e.clone(), f(c));
        }
        out
    }

    pub fn scale_coeff(&self, c: &QExtElement) -> Self {
        self.map_coeffs(|x| x * c)
    }

    pub fn scale_int(&self, c: i64) -> Self {
        let c = BigInt::from(c);
        self.map_coeffs(|x| x.scale(&c))
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.rank, self.trunc);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Is this a single nonzero coefficient times the unit monomial?
    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .all(|(e, c)| e.is_zero() && c.is_one())
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|(e, c)| json!({ "exp": e.exps(), "coeff": c.to_json() }))
                .collect(),
        )
    }

    /// Text rendering with variable prefix `var` (e.g. `Q` or `T`).
    pub fn render(&self, var: &str) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (e, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                out.push_str(" + ");
            }
            let mono = e.render(var);
            let coeff = c.to_string();
            match (mono.is_empty(), c.len() == 1) {
                (true, _) => out.push_str(&coeff),
                (false, true) if coeff == "1" => out.push_str(&mono),
                (false, true) if coeff == "-1" => {
                    out.push('-');
                    out.push_str(&mono);
                }
                (false, true) => {
                    out.push_str(&coeff);
                    out.push('*');
                    out.push_str(&mono);
                }
                (false, false) => {
                    out.push('(');
                    out.push_str(&coeff);
                    out.push_str(")*");
                    out.push_str(&mono);
                }
            }
        }
        out
    }
}

impl Coeff for NovikovSeries {
    fn coeff_is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn coeff_add_assign(&mut self, other: &Self) {
        *self = &*self + other;
    }
}

impl RingElement for NovikovSeries {
    fn rank(&self) -> usize {
        self.rank
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn checked_add(&self, other: &Self) -> Result<Self> {
        check_rank("series", self.rank, other.rank)?;
        let trunc = join_truncation(self.trunc, other.trunc)?;
        let mut out = self.with_truncation(trunc)?;
        for (e, c) in &other.terms {
            out.add_term_in_place(e.clone(), c.clone());
        }
        Ok(out)
    }

    fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&other.negated())
    }

    fn checked_mul(&self, other: &Self) -> Result<Self> {
        check_rank("series", self.rank, other.rank)?;
        let trunc = join_truncation(self.trunc, other.trunc)?;
        let mut out = Self::zero(self.rank, trunc);
        let rhs: Vec<(u32, &SeriesExp, &QExtElement)> =
            other.terms.iter().map(|(e, c)| (e.degree(), e, c)).collect();
        for (e1, c1) in &self.terms {
            let d1 = e1.degree();
            if trunc.is_some_and(|d| d1 > d) {
                continue;
            }
            for &(d2, e2, c2) in &rhs {
                if trunc.is_some_and(|d| d1 + d2 > d) {
                    continue;
                }
                add_term(&mut out.terms, e1.plus(e2), c1 * c2);
            }
        }
        Ok(out)
    }

    fn negated(&self) -> Self {
        NovikovSeries {
            rank: self.rank,
            trunc: self.trunc,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

forward_ring_ops!(NovikovSeries);

impl fmt::Display for NovikovSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("Q"))
    }
}

impl fmt::Debug for NovikovSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (trunc {:?})", self.render("Q"), self.trunc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn truncated_geometric_identity() {
        let d = Some(2);
        let lhs = NovikovSeries::one_minus_var(1, 1, d)
            * (NovikovSeries::one(1, d) + NovikovSeries::var(1, 1, d) + NovikovSeries::var(1, 1, d).pow(2));
        assert!(lhs.is_one());
    }

    #[test]
    fn geometric_inverse_terms() {
        let g = NovikovSeries::geometric_inverse(1, 1, 3);
        assert_eq!(g.to_string(), "1 + Q1 + Q1^2 + Q1^3");
        assert!((NovikovSeries::one_minus_var(1, 1, Some(3)) * g).is_one());
    }

    #[test]
    fn phi_style_factor() {
        // 1 + Q1 Q2 / (1 - Q1) at n = 2, D = 3
        let d = 3;
        let f = NovikovSeries::one(2, Some(d))
            + NovikovSeries::var_product(2, 1, 2, Some(d)) * NovikovSeries::geometric_inverse(2, 1, d);
        let expected = NovikovSeries::one(2, Some(d))
            + NovikovSeries::monomial(SeriesExp::from_vec(vec![1, 1]), QExtElement::one(2), Some(d))
            + NovikovSeries::monomial(SeriesExp::from_vec(vec![2, 1]), QExtElement::one(2), Some(d));
        assert_eq!(f, expected);
    }

    #[test]
    fn truncation_mismatch_is_config_error() {
        let a = NovikovSeries::one(1, Some(2));
        let b = NovikovSeries::one(1, Some(3));
        assert!(matches!(a.checked_mul(&b), Err(Error::Config(_))));
        assert!(a.checked_mul(&NovikovSeries::one(1, None)).is_ok());
    }

    #[test]
    fn index_zero_conventions() {
        assert!(NovikovSeries::var(2, 0, None).is_zero());
        assert!(NovikovSeries::one_minus_var(2, 0, None).is_one());
        assert!(NovikovSeries::var_product(2, 0, 2, None).is_zero());
    }
}
