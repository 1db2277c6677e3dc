use std::fmt;

use super::{check_rank, forward_ring_ops, NovikovSeries, RingElement};
use crate::error::{Error, Result};

/// A quotient `p / Π_j (1 - x_j)^{m_j}` with an exact polynomial numerator.
/// Equality is decided by cross-multiplying denominators.
#[derive(Clone)]
pub struct RationalSeries {
    num: NovikovSeries,
    den: Vec<u32>,
}

impl RationalSeries {
    pub fn from_poly(p: &NovikovSeries) -> Result<Self> {
        if p.truncation().is_some() {
            return Err(Error::Config("rational numerators must be exact polynomials".into()));
        }
        Ok(RationalSeries { num: p.clone(), den: vec![0; p.rank()] })
    }

    pub fn zero(rank: usize) -> Self {
        RationalSeries { num: NovikovSeries::zero(rank, None), den: vec![0; rank] }
    }

    pub fn one(rank: usize) -> Self {
        RationalSeries { num: NovikovSeries::one(rank, None), den: vec![0; rank] }
    }

    /// `1 / (1 - x_j)`; equal to `1` for `j = 0`.
    pub fn geometric(rank: usize, j: usize) -> Self {
        let mut out = Self::one(rank);
        if j > 0 {
            out.den[j - 1] = 1;
        }
        out
    }

    pub fn numerator(&self) -> &NovikovSeries {
        &self.num
    }

    pub fn denominator(&self) -> &[u32] {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.iter().all(|&m| m == 0)
    }

    fn clearing_factor(rank: usize, from: &[u32], to: &[u32]) -> NovikovSeries {
        let mut f = NovikovSeries::one(rank, None);
        for (j, (&a, &b)) in from.iter().zip(to).enumerate() {
            f = &f * &NovikovSeries::one_minus_var(rank, j + 1, None).pow(b - a);
        }
        f
    }

    /// Numerator over the denominator `Π (1 - x_j)^{target_j}`; requires
    /// `target ≥ den` coordinatewise.
    pub fn numerator_over(&self, target: &[u32]) -> NovikovSeries {
        assert!(self.den.iter().zip(target).all(|(a, b)| a <= b));
        &self.num * &Self::clearing_factor(self.num.rank(), &self.den, target)
    }

    fn common_den(&self, other: &Self) -> Vec<u32> {
        self.den.iter().zip(&other.den).map(|(a, b)| *a.max(b)).collect()
    }

    /// The exact polynomial value, when the denominator divides the numerator.
    pub fn to_polynomial(&self) -> Option<NovikovSeries> {
        if self.is_polynomial() {
            return Some(self.num.clone());
        }
        // a polynomial quotient has degree at most that of the numerator
        let d = self.num.max_degree();
        let mut candidate = NovikovSeries::zero(self.num.rank(), None);
        for (e, c) in self.to_series(d).terms() {
            candidate.add_term_in_place(e.clone(), c.clone());
        }
        let zero = vec![0; self.den.len()];
        let back = &candidate * &Self::clearing_factor(self.num.rank(), &zero, &self.den);
        (back == self.num).then_some(candidate)
    }

    /// Power-series expansion truncated at total degree `d`.
    pub fn to_series(&self, d: u32) -> NovikovSeries {
        let rank = self.num.rank();
        let mut out = self.num.with_truncation(Some(d)).expect("exact numerator");
        for (j, &m) in self.den.iter().enumerate() {
            if m > 0 {
                out = &out * &NovikovSeries::geometric_inverse(rank, j + 1, d).pow(m);
            }
        }
        out
    }
}

impl RingElement for RationalSeries {
    fn rank(&self) -> usize {
        self.num.rank()
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn checked_add(&self, other: &Self) -> Result<Self> {
        check_rank("rational series", self.rank(), other.rank())?;
        let den = self.common_den(other);
        let num = &self.numerator_over(&den) + &other.numerator_over(&den);
        Ok(RationalSeries { num, den })
    }

    fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&other.negated())
    }

    fn checked_mul(&self, other: &Self) -> Result<Self> {
        check_rank("rational series", self.rank(), other.rank())?;
        Ok(RationalSeries {
            num: &self.num * &other.num,
            den: self.den.iter().zip(&other.den).map(|(a, b)| a + b).collect(),
        })
    }

    fn negated(&self) -> Self {
        RationalSeries { num: self.num.negated(), den: self.den.clone() }
    }
}

forward_ring_ops!(RationalSeries);

impl PartialEq for RationalSeries {
    fn eq(&self, other: &Self) -> bool {
        if self.rank() != other.rank() {
            return false;
        }
        let den = self.common_den(other);
        self.numerator_over(&den) == other.numerator_over(&den)
    }
}

impl fmt::Display for RationalSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.num)?;
        for (j, &m) in self.den.iter().enumerate() {
            if m > 0 {
                write!(f, "/(1-Q{})^{m}", j + 1)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for RationalSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn geometric_times_one_minus_is_one() {
        let p = RationalSeries::from_poly(&NovikovSeries::one_minus_var(2, 2, None)).unwrap();
        assert_eq!(p * RationalSeries::geometric(2, 2), RationalSeries::one(2));
    }

    #[test]
    fn sum_over_common_denominator() {
        // 1/(1-x) - x/(1-x) = 1
        let x = RationalSeries::from_poly(&NovikovSeries::var(1, 1, None)).unwrap();
        let g = RationalSeries::geometric(1, 1);
        assert_eq!(&g - &(&x * &g), RationalSeries::one(1));
    }

    #[test]
    fn polynomial_quotients_are_recognized() {
        let p = RationalSeries::from_poly(&NovikovSeries::one_minus_var(2, 1, None)).unwrap();
        let q = &p * &RationalSeries::geometric(2, 1);
        assert_eq!(q.to_polynomial(), Some(NovikovSeries::one(2, None)));
        assert_eq!(RationalSeries::geometric(2, 2).to_polynomial(), None);
    }

    #[test]
    fn expansion_matches_truncated_arithmetic() {
        let x = RationalSeries::from_poly(&NovikovSeries::var_product(2, 1, 2, None)).unwrap();
        let r = &RationalSeries::one(2) + &(&x * &RationalSeries::geometric(2, 1));
        let d = 4;
        let expected = NovikovSeries::one(2, Some(d))
            + NovikovSeries::var_product(2, 1, 2, Some(d)) * NovikovSeries::geometric_inverse(2, 1, d);
        assert_eq!(r.to_series(d), expected);
    }
}
