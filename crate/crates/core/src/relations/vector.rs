use std::fmt;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::rings::{GroupRingElement, RingElement, Weight};
use crate::weyl::demazure_d;

/// `Σ_l c_l X_l = 0` with `X_l` standing for `𝔽_l`; usually `0 ≤ l ≤ n`, but
/// any length is allowed (e.g. `2n + 1` before folding by symmetry).
#[derive(Clone, PartialEq, Eq)]
pub struct RelationVector {
    n: usize,
    coeffs: Vec<GroupRingElement>,
}

impl RelationVector {
    pub fn zero(n: usize) -> Self {
        Self::with_len(n, n + 1)
    }

    pub fn with_len(n: usize, len: usize) -> Self {
        RelationVector { n, coeffs: vec![GroupRingElement::zero(n); len] }
    }

    pub fn from_coeffs(n: usize, coeffs: Vec<GroupRingElement>) -> Self {
        assert!(coeffs.iter().all(|c| c.rank() == n));
        RelationVector { n, coeffs }
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> &[GroupRingElement] {
        &self.coeffs
    }

    pub fn coeff(&self, l: usize) -> &GroupRingElement {
        &self.coeffs[l]
    }

    pub fn add_to(&mut self, l: usize, c: &GroupRingElement) {
        self.coeffs[l] = &self.coeffs[l] + c;
    }

    /// Largest `l` with `c_l ≠ 0`.
    pub fn top(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| !c.is_zero())
    }

    fn map<F: Fn(&GroupRingElement) -> Result<GroupRingElement>>(&self, f: F) -> Result<Self> {
        Ok(RelationVector { n: self.n, coeffs: self.coeffs.iter().map(f).collect::<Result<_>>()? })
    }

    /// `e^μ · relation`.
    pub fn shift(&self, mu: &Weight) -> Self {
        self.map(|c| Ok(c.shift(mu))).expect("infallible")
    }

    pub fn scale(&self, g: &GroupRingElement) -> Self {
        self.map(|c| c.checked_mul(g)).expect("rank checked")
    }

    /// `D_i` applied coefficientwise (every `𝔽_l` is a sum of translation
    /// classes, on which the Demazure operator acts through the coefficient).
    pub fn demazure(&self, i: usize) -> Self {
        self.map(|c| Ok(demazure_d(i, c))).expect("infallible")
    }

    /// Divides every coefficient exactly by `d`.
    pub fn exact_div(&self, d: &GroupRingElement) -> Result<Self> {
        self.map(|c| c.exact_div(d))
    }

    /// `Σ_l c_l·x_l`.
    pub fn evaluate(&self, values: &[GroupRingElement]) -> Result<GroupRingElement> {
        if values.len() != self.coeffs.len() {
            return Err(Error::Config(format!("expected {} values, got {}", self.coeffs.len(), values.len())));
        }
        let mut acc = GroupRingElement::zero(self.n);
        for (c, x) in self.coeffs.iter().zip(values) {
            acc = &acc + &c.checked_mul(x)?;
        }
        Ok(acc)
    }

    /// Folds a relation in `X_0, …, X_{2n}` onto `X_0, …, X_n` via
    /// `X_{n+l} = X_{n−l}`.
    pub fn fold_symmetric(&self) -> Result<Self> {
        let n = self.n;
        if self.coeffs.len() != 2 * n + 1 {
            return Err(Error::Config(format!("folding needs {} slots, got {}", 2 * n + 1, self.coeffs.len())));
        }
        let mut out = Self::zero(n);
        for (l, c) in self.coeffs.iter().enumerate() {
            out.add_to(if l > n { 2 * n - l } else { l }, c);
        }
        Ok(out)
    }

    /// First `l` where the two relations differ.
    pub fn first_difference(&self, other: &Self) -> Option<usize> {
        (0..self.coeffs.len().max(other.coeffs.len())).find(|&l| self.coeffs.get(l) != other.coeffs.get(l))
    }

    /// Monomial `m` with `m·self = other`, if any.
    pub fn monomial_ratio(&self, other: &Self) -> Option<Weight> {
        let l = self.top()?;
        let (wa, ca) = self.coeffs[l].terms().next()?;
        let (wb, cb) = other.coeffs[l].terms().next()?;
        if ca != cb {
            return None;
        }
        let mu = wb - wa;
        (self.shift(&mu) == *other).then_some(mu)
    }

    pub fn to_json(&self) -> Value {
        json!(self.coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>())
    }
}

impl fmt::Display for RelationVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(l, c)| format!("({c})*F{l}"))
            .collect();
        if parts.is_empty() {
            write!(f, "0 = 0")
        } else {
            write!(f, "{} = 0", parts.join(" + "))
        }
    }
}

impl fmt::Debug for RelationVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
