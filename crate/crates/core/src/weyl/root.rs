use std::fmt;

use serde::{Deserialize, Serialize};

use crate::rings::Weight;

/// A positive root of type `C_n`: `(i,j) = ε_i - ε_j`, `(i,j̄) = ε_i + ε_j`
/// (`i < j`), or `(i,ī) = 2ε_i`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum RootC {
    Minus(usize, usize),
    Plus(usize, usize),
    Long(usize),
}

/// An element of the coroot lattice in the basis of simple coroots.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Coroot(Vec<i32>);

impl Coroot {
    pub fn zero(n: usize) -> Self {
        Coroot(vec![0; n])
    }

    pub fn from_vec(v: Vec<i32>) -> Self {
        Coroot(v)
    }

    /// Converts from ε-coordinates (`α_i^∨ = ε_i - ε_{i+1}`, `α_n^∨ = ε_n`).
    pub fn from_eps(x: &Weight) -> Self {
        let mut acc = 0;
        Coroot(
            x.coords()
                .iter()
                .map(|c| {
                    acc += c;
                    acc
                })
                .collect(),
        )
    }

    pub fn to_eps(&self) -> Weight {
        let n = self.0.len();
        Weight::from_vec(
            (0..n)
                .map(|k| self.0[k] - if k == 0 { 0 } else { self.0[k - 1] })
                .collect(),
        )
    }

    pub fn coords(&self) -> &[i32] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    /// Membership in `Q^{∨,+}`.
    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn plus(&self, other: &Coroot) -> Coroot {
        Coroot(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `⟨λ, ξ⟩`.
    pub fn pair(&self, lambda: &Weight) -> i64 {
        lambda.dot(&self.to_eps())
    }
}

impl fmt::Display for Coroot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", Weight::from_vec(self.0.clone()))
    }
}

impl fmt::Debug for Coroot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl RootC {
    /// Simple root `α_i`.
    pub fn simple(n: usize, i: usize) -> RootC {
        assert!(i >= 1 && i <= n);
        if i < n {
            RootC::Minus(i, i + 1)
        } else {
            RootC::Long(n)
        }
    }

    /// All `n²` positive roots in a fixed order.
    pub fn positive_roots(n: usize) -> Vec<RootC> {
        let mut out = Vec::with_capacity(n * n);
        for i in 1..=n {
            for j in i + 1..=n {
                out.push(RootC::Minus(i, j));
            }
            for j in i + 1..=n {
                out.push(RootC::Plus(i, j));
            }
            out.push(RootC::Long(i));
        }
        out
    }

    /// The root as a pair of letters `(a, b)` with `a < b` in `[1, 1̄]`.
    pub fn letters(&self) -> (i32, i32) {
        match *self {
            RootC::Minus(i, j) => (i as i32, j as i32),
            RootC::Plus(i, j) => (i as i32, -(j as i32)),
            RootC::Long(i) => (i as i32, -(i as i32)),
        }
    }

    /// The root in ε-coordinates.
    pub fn weight(&self, n: usize) -> Weight {
        let mut v = vec![0; n];
        match *self {
            RootC::Minus(i, j) => {
                v[i - 1] = 1;
                v[j - 1] = -1;
            }
            RootC::Plus(i, j) => {
                v[i - 1] = 1;
                v[j - 1] = 1;
            }
            RootC::Long(i) => v[i - 1] = 2,
        }
        Weight::from_vec(v)
    }

    /// The coroot in ε-coordinates (`(2ε_i)^∨ = ε_i`).
    pub fn coroot_eps(&self, n: usize) -> Weight {
        match *self {
            RootC::Long(i) => Weight::epsilon(n, i as i32),
            _ => self.weight(n),
        }
    }

    /// The coroot in the simple-coroot basis.
    pub fn coroot(&self, n: usize) -> Coroot {
        Coroot::from_eps(&self.coroot_eps(n))
    }

    /// `⟨λ, α^∨⟩`.
    pub fn pair(&self, lambda: &Weight) -> i64 {
        lambda.dot(&self.coroot_eps(lambda.rank()))
    }

    /// `s_α(λ) = λ - ⟨λ, α^∨⟩ α`.
    pub fn reflect_weight(&self, lambda: &Weight) -> Weight {
        let n = lambda.rank();
        let m = self.pair(lambda) as i32;
        lambda - &self.weight(n).scaled(m)
    }

    /// The positive root with the given ε-coordinates, if any.
    pub fn from_weight(w: &Weight) -> Option<RootC> {
        let n = w.rank();
        RootC::positive_roots(n).into_iter().find(|r| &r.weight(n) == w)
    }

    /// `(1,2)`, `(1,-2)`, `(1,-1)`.
    pub fn label(&self) -> String {
        let (a, b) = self.letters();
        format!("({a},{b})")
    }
}

impl fmt::Display for RootC {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

impl fmt::Debug for RootC {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// Whether a root written in ε-coordinates is positive (its first nonzero
/// coordinate is positive).
pub fn is_positive_weight(w: &Weight) -> bool {
    w.coords().iter().find(|&&c| c != 0).is_some_and(|&c| c > 0)
}

/// `ρ` computed as half the sum of the positive roots.
pub fn rho(n: usize) -> Weight {
    let mut sum = Weight::zero(n);
    for r in RootC::positive_roots(n) {
        sum.add_in_place(&r.weight(n));
    }
    Weight::from_vec(sum.coords().iter().map(|c| c / 2).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn root_count_and_rho() {
        for n in 1..=5 {
            assert_eq!(RootC::positive_roots(n).len(), n * n);
            let r = rho(n);
            let expected: Vec<i32> = (1..=n).map(|i| (n - i + 1) as i32).collect();
            assert_eq!(r.coords(), &expected[..]);
        }
    }

    #[test]
    fn cartan_matrix() {
        let n = 4;
        for i in 1..=n {
            for j in 1..=n {
                let a = RootC::simple(n, j).pair(&RootC::simple(n, i).weight(n));
                let expected = if i == j {
                    2
                } else if i.abs_diff(j) == 1 {
                    // ⟨α_n, α_{n-1}^∨⟩ = -2, ⟨α_{n-1}, α_n^∨⟩ = -1
                    if i == n { -2 } else { -1 }
                } else {
                    0
                };
                assert_eq!(a, expected, "⟨α_{i}, α_{j}^∨⟩");
            }
        }
    }

    #[test]
    fn coroot_expansions() {
        let n = 4;
        assert_eq!(RootC::Minus(1, 3).coroot(n).coords(), &[1, 1, 0, 0]);
        assert_eq!(RootC::Long(2).coroot(n).coords(), &[0, 1, 1, 1]);
        assert_eq!(RootC::Plus(2, 3).coroot(n).coords(), &[0, 1, 2, 2]);
        for r in RootC::positive_roots(n) {
            assert_eq!(r.coroot(n).to_eps(), r.coroot_eps(n));
            assert!(r.coroot(n).is_nonnegative());
        }
    }
}
