//! Coefficient factors attached to a subset `I ⊆ [1, 1̄]` and a letter `j`:
//! `ψ_I`, `φ_I^sinf`, `θ_I^sinf` in the shift operators, and (reused by the
//! Borel presentation) `ζ_I`, `η_I`, `φ_I^Q` in the Novikov variables.

use std::fmt;

use crate::error::{Error, Result};
use crate::rings::{NovikovSeries, RationalSeries, RingElement, Truncation};
use crate::weyl::LetterSet;

/// A factor built from one series variable `x_j` (index 0 stands for the
/// zero variable).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum OperatorFactor {
    One,
    /// `1 - x_j`.
    OneMinus(usize),
    /// `1 - x_j + x_j x_{j+1} ⋯ x_n`.
    OneMinusPlusTail(usize),
    /// `1 / (1 - x_j)`.
    Geometric(usize),
    /// `1 + x_j x_{j+1} ⋯ x_n / (1 - x_j)`.
    OnePlusTailGeometric(usize),
}

impl OperatorFactor {
    /// Truncated power series; factors with denominators need `Some(D)`.
    pub fn to_series(self, n: usize, trunc: Truncation) -> Result<NovikovSeries> {
        let one = NovikovSeries::one(n, trunc);
        let geometric = |j: usize| match trunc {
            Some(d) => Ok(NovikovSeries::geometric_inverse(n, j, d)),
            None if j == 0 => Ok(NovikovSeries::one(n, None)),
            None => Err(Error::Config(format!(
                "1/(1-x{j}) has no exact polynomial form; use rational arithmetic"
            ))),
        };
        Ok(match self {
            OperatorFactor::One => one,
            OperatorFactor::OneMinus(j) => NovikovSeries::one_minus_var(n, j, trunc),
            OperatorFactor::OneMinusPlusTail(j) => {
                &NovikovSeries::one_minus_var(n, j, trunc) + &NovikovSeries::var_product(n, j, n, trunc)
            }
            OperatorFactor::Geometric(j) => geometric(j)?,
            OperatorFactor::OnePlusTailGeometric(j) => {
                &one + &(&NovikovSeries::var_product(n, j, n, trunc) * &geometric(j)?)
            }
        })
    }

    /// Exact value as a quotient by powers of `(1 - x_j)`.
    pub fn to_rational(self, n: usize) -> RationalSeries {
        let poly = |p: NovikovSeries| RationalSeries::from_poly(&p).expect("exact polynomial");
        match self {
            OperatorFactor::Geometric(j) => RationalSeries::geometric(n, j),
            OperatorFactor::OnePlusTailGeometric(j) => {
                let tail = poly(NovikovSeries::var_product(n, j, n, None));
                &RationalSeries::one(n) + &(&tail * &RationalSeries::geometric(n, j))
            }
            other => poly(other.to_series(n, None).expect("polynomial factor")),
        }
    }

    pub fn is_one(self) -> bool {
        matches!(self, OperatorFactor::One)
    }

    /// Text form with variable prefix `var`.
    pub fn render(self, n: usize, var: &str) -> String {
        let tail = |j: usize| (j..=n).map(|i| format!("{var}{i}")).collect::<Vec<_>>().join("*");
        match self {
            OperatorFactor::One => "1".into(),
            OperatorFactor::OneMinus(j) => format!("1-{var}{j}"),
            OperatorFactor::OneMinusPlusTail(j) => format!("1-{var}{j}+{}", tail(j)),
            OperatorFactor::Geometric(j) => format!("1/(1-{var}{j})"),
            OperatorFactor::OnePlusTailGeometric(j) => format!("1+{}/(1-{var}{j})", tail(j)),
        }
    }
}

impl fmt::Display for OperatorFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// The letter following an unbarred `j`, with `n + 1 := n̄`.
fn successor(n: usize, j: usize) -> i32 {
    if j < n {
        j as i32 + 1
    } else {
        -(n as i32)
    }
}

fn check_letter(n: usize, x: i32) {
    assert!(x != 0 && x.unsigned_abs() as usize <= n, "letter {x} out of range for rank {n}");
}

/// `ψ_I(x)`.
pub fn psi(set: &LetterSet, x: i32) -> OperatorFactor {
    let n = set.rank();
    check_letter(n, x);
    let j = x.unsigned_abs() as usize;
    if x > 0 {
        if !set.contains(x) && set.contains(successor(n, j)) {
            return OperatorFactor::OneMinus(j);
        }
        return OperatorFactor::One;
    }
    if j == 1 {
        return OperatorFactor::One;
    }
    let prev = (j - 1) as i32;
    if set.adjacent_pair(prev, -prev) {
        OperatorFactor::OneMinusPlusTail(j - 1)
    } else if !set.contains(x) && set.contains(-prev) {
        OperatorFactor::OneMinus(j - 1)
    } else {
        OperatorFactor::One
    }
}

/// `φ_I^sinf(x)`.
pub fn phi_sinf(set: &LetterSet, x: i32) -> OperatorFactor {
    let n = set.rank();
    check_letter(n, x);
    let j = x.unsigned_abs() as usize;
    if x > 0 {
        if set.contains(x) && set.contains(successor(n, j)) {
            return OperatorFactor::Geometric(j);
        }
        return OperatorFactor::One;
    }
    if j == 1 {
        return OperatorFactor::One;
    }
    let prev = (j - 1) as i32;
    if set.adjacent_pair(prev, -prev) {
        OperatorFactor::OnePlusTailGeometric(j - 1)
    } else if set.contains(x) && set.contains(-prev) {
        OperatorFactor::Geometric(j - 1)
    } else {
        OperatorFactor::One
    }
}

/// `θ_I^sinf(x)`.
pub fn theta_sinf(set: &LetterSet, x: i32) -> OperatorFactor {
    let n = set.rank();
    check_letter(n, x);
    let j = x.unsigned_abs() as usize;
    if x > 0 {
        if set.contains(successor(n, j)) {
            return OperatorFactor::OneMinus(j);
        }
        return OperatorFactor::One;
    }
    if j == 1 {
        return OperatorFactor::One;
    }
    if set.contains(-((j - 1) as i32)) {
        OperatorFactor::OneMinus(j - 1)
    } else {
        OperatorFactor::One
    }
}

/// `ζ_I(x)`; the barred first case uses the form `{⋯ < j-1 < \overline{j-1} < ⋯}`
/// and `ζ_I(1̄) = 1`.
pub fn zeta(set: &LetterSet, x: i32) -> OperatorFactor {
    let n = set.rank();
    check_letter(n, x);
    let j = x.unsigned_abs() as usize;
    if x > 0 {
        if set.contains(x) && !set.contains(successor(n, j)) {
            return OperatorFactor::OneMinus(j);
        }
        return OperatorFactor::One;
    }
    if j == 1 {
        return OperatorFactor::One;
    }
    let prev = (j - 1) as i32;
    if set.adjacent_pair(prev, -prev) {
        OperatorFactor::OnePlusTailGeometric(j - 1)
    } else if set.contains(x) && !set.contains(-prev) {
        OperatorFactor::OneMinus(j - 1)
    } else {
        OperatorFactor::One
    }
}

/// `η_I(x)`: `1/(1-Q_j)` for `j ∈ I`, `1/(1-Q_{j-1})` for `j̄ ∈ I` (`Q_0 = 0`).
pub fn eta(set: &LetterSet, x: i32) -> OperatorFactor {
    let n = set.rank();
    check_letter(n, x);
    if !set.contains(x) {
        return OperatorFactor::One;
    }
    let j = x.unsigned_abs() as usize;
    if x > 0 {
        OperatorFactor::Geometric(j)
    } else if j == 1 {
        OperatorFactor::One
    } else {
        OperatorFactor::Geometric(j - 1)
    }
}

/// `φ_I^Q(x)`, the same case table as `φ_I^sinf` in the Novikov variables.
pub fn phi_q(set: &LetterSet, x: i32) -> OperatorFactor {
    phi_sinf(set, x)
}

/// `Π_{x ∈ [1, 1̄]} f(I, x)` as a series.
pub fn product_series(
    set: &LetterSet,
    f: fn(&LetterSet, i32) -> OperatorFactor,
    trunc: Truncation,
) -> Result<NovikovSeries> {
    let n = set.rank();
    let mut acc = NovikovSeries::one(n, trunc);
    for x in crate::weyl::letter::letters(n) {
        let factor = f(set, x);
        if !factor.is_one() {
            acc = acc.checked_mul(&factor.to_series(n, trunc)?)?;
        }
    }
    Ok(acc)
}

/// `Π_{x ∈ [1, 1̄]} f(I, x)` as an exact quotient.
pub fn product_rational(set: &LetterSet, f: fn(&LetterSet, i32) -> OperatorFactor) -> RationalSeries {
    let n = set.rank();
    let mut acc = RationalSeries::one(n);
    for x in crate::weyl::letter::letters(n) {
        let factor = f(set, x);
        if !factor.is_one() {
            acc = &acc * &factor.to_rational(n);
        }
    }
    acc
}

/// `Π_x ψ_I(x)`, always a polynomial.
pub fn psi_product(set: &LetterSet, trunc: Truncation) -> NovikovSeries {
    product_series(set, psi, trunc).expect("ψ factors are polynomials")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table_example() -> LetterSet {
        LetterSet::from_letters(4, &[2, 3, -3, -1])
    }

    #[test]
    fn psi_table_example() {
        let s = table_example();
        let got: Vec<OperatorFactor> = crate::weyl::letter::letters(4).into_iter().map(|x| psi(&s, x)).collect();
        use OperatorFactor::*;
        assert_eq!(got, vec![OneMinus(1), One, One, One, OneMinusPlusTail(3), One, OneMinus(1), One]);
    }

    #[test]
    fn zeta_entries_that_follow_the_definition() {
        let s = table_example();
        assert_eq!(zeta(&s, 3), OperatorFactor::OneMinus(3));
        assert_eq!(zeta(&s, -4), OperatorFactor::OnePlusTailGeometric(3));
        assert_eq!(zeta(&s, 1), OperatorFactor::One);
        assert_eq!(zeta(&s, -1), OperatorFactor::One);
    }

    #[test]
    fn empty_set_gives_unit_factors() {
        let s = LetterSet::empty(3);
        for x in crate::weyl::letter::letters(3) {
            for f in [psi, phi_sinf, theta_sinf, zeta, eta, phi_q] {
                assert!(f(&s, x).is_one());
            }
        }
    }

    #[test]
    fn renders() {
        assert_eq!(OperatorFactor::OneMinusPlusTail(3).render(4, "T"), "1-T3+T3*T4");
        assert_eq!(OperatorFactor::OnePlusTailGeometric(1).render(2, "Q"), "1+Q1*Q2/(1-Q1)");
    }
}
