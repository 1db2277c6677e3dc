//! Truncated power series in an auxiliary variable `t` with ℤ[P] coefficients,
//! used to check the generating-function identities behind the solution.

use super::symmetric::{complete_table, doubled_variables, elementary_table};
use crate::rings::{GroupRingElement, RingElement, Weight};

/// `Σ_{d ≤ D} a_d t^d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TSeries {
    n: usize,
    coeffs: Vec<GroupRingElement>,
}

impl TSeries {
    pub fn zero(n: usize, degree: usize) -> Self {
        TSeries { n, coeffs: vec![GroupRingElement::zero(n); degree + 1] }
    }

    pub fn one(n: usize, degree: usize) -> Self {
        let mut s = Self::zero(n, degree);
        s.coeffs[0] = GroupRingElement::one(n);
        s
    }

    /// Coefficients beyond `degree` are dropped.
    pub fn from_coeffs(n: usize, degree: usize, coeffs: &[GroupRingElement]) -> Self {
        let mut s = Self::zero(n, degree);
        for (d, c) in coeffs.iter().enumerate().take(degree + 1) {
            s.coeffs[d] = c.clone();
        }
        s
    }

    pub fn degree_bound(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, d: usize) -> &GroupRingElement {
        &self.coeffs[d]
    }

    /// Largest `d` with a nonzero coefficient.
    pub fn top(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| !c.is_zero())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let deg = self.degree_bound().min(other.degree_bound());
        let mut out = Self::zero(self.n, deg);
        for (i, a) in self.coeffs.iter().enumerate().take(deg + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(deg + 1 - i) {
                out.coeffs[i + j] = &out.coeffs[i + j] + &(a * b);
            }
        }
        out
    }

    /// `t ↦ −t`.
    pub fn negate_t(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(d, c)| if d % 2 == 1 { c.negated() } else { c.clone() })
            .collect();
        TSeries { n: self.n, coeffs }
    }

    /// `1 + e^μ t`.
    pub fn linear(n: usize, degree: usize, mu: &Weight) -> Self {
        Self::from_coeffs(n, degree, &[GroupRingElement::one(n), GroupRingElement::monomial(mu.clone())])
    }

    /// `1 / (1 − e^μ t)`.
    pub fn geometric(n: usize, degree: usize, mu: &Weight) -> Self {
        let coeffs: Vec<_> = (0..=degree).map(|d| GroupRingElement::monomial(mu.scaled(d as i32))).collect();
        Self::from_coeffs(n, degree, &coeffs)
    }

    /// `1 − t²`.
    pub fn one_minus_t_squared(n: usize, degree: usize) -> Self {
        let one = GroupRingElement::one(n);
        Self::from_coeffs(n, degree, &[one.clone(), GroupRingElement::zero(n), one.negated()])
    }
}

/// `Σ_l (H^{k+1}_l − H^{k+1}_{l−2}) t^l`, computed from the complete table.
pub fn h_difference_series(n: usize, k: usize, degree: usize) -> TSeries {
    let h = complete_table(n, &doubled_variables(n, 1, k + 1), degree);
    let coeffs: Vec<_> = (0..=degree).map(|l| if l >= 2 { &h[l] - &h[l - 2] } else { h[l].clone() }).collect();
    TSeries::from_coeffs(n, degree, &coeffs)
}

/// `(1 − t²) Π_{i ≤ k+1} 1/((1 − e^{ε_i}t)(1 − e^{−ε_i}t))`, computed as a product.
pub fn h_difference_product(n: usize, k: usize, degree: usize) -> TSeries {
    doubled_variables(n, 1, k + 1)
        .iter()
        .fold(TSeries::one_minus_t_squared(n, degree), |acc, mu| acc.mul(&TSeries::geometric(n, degree, mu)))
}

/// `Σ_l E_l t^l` from the elementary table.
pub fn elementary_series(n: usize, degree: usize) -> TSeries {
    TSeries::from_coeffs(n, degree, &elementary_table(n, &doubled_variables(n, 1, n)))
}

/// `Π_{i ≤ n} (1 + e^{ε_i}t)(1 + e^{−ε_i}t)`.
pub fn elementary_product(n: usize, degree: usize) -> TSeries {
    linear_product(n, 1, n, degree)
}

fn linear_product(n: usize, lo: usize, hi: usize, degree: usize) -> TSeries {
    let vars = if lo <= hi { doubled_variables(n, lo, hi) } else { Vec::new() };
    vars.iter().fold(TSeries::one(n, degree), |acc, mu| acc.mul(&TSeries::linear(n, degree, mu)))
}

/// Left side `(Σ (−1)^l (H_l − H_{l−2}) t^l)(Σ E_m t^m)`.
pub fn combined_lhs(n: usize, k: usize, degree: usize) -> TSeries {
    h_difference_series(n, k, degree).negate_t().mul(&elementary_series(n, degree))
}

/// Right side `(1 − t²) Π_{i=k+2}^{n} (1 + e^{ε_i}t)(1 + e^{−ε_i}t)`.
pub fn combined_rhs(n: usize, k: usize, degree: usize) -> TSeries {
    TSeries::one_minus_t_squared(n, degree).mul(&linear_product(n, k + 2, n, degree))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn last_k_gives_one_minus_t_squared() {
        for n in 1..=4 {
            assert_eq!(combined_rhs(n, n - 1, 2 * n), TSeries::one_minus_t_squared(n, 2 * n));
        }
    }

    #[test]
    fn geometric_inverts_linear() {
        let n = 2;
        let mu = Weight::from_vec(vec![1, -1]);
        let inv = TSeries::linear(n, 5, &mu).negate_t();
        assert_eq!(inv.mul(&TSeries::geometric(n, 5, &mu)), TSeries::one(n, 5));
    }
}
