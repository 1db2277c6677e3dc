use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::root::{is_positive_weight, RootC};
use crate::error::{Error, Result};
use crate::rings::Weight;

/// Largest rank for which the whole group is enumerated.
pub const MAX_ENUMERATION_RANK: usize = 6;

/// A signed permutation of `[1, n]` in window notation `[w(1), …, w(n)]`,
/// with `-k` standing for `k̄`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPerm {
    window: Vec<i32>,
}

impl SignedPerm {
    pub fn identity(n: usize) -> Self {
        SignedPerm { window: (1..=n as i32).collect() }
    }

    pub fn from_window(window: Vec<i32>) -> Result<Self> {
        let n = window.len();
        let mut seen = vec![false; n + 1];
        for &x in &window {
            let k = x.unsigned_abs() as usize;
            if k == 0 || k > n || seen[k] {
                return Err(Error::Parse(format!("{window:?} is not a signed permutation")));
            }
            seen[k] = true;
        }
        Ok(SignedPerm { window })
    }

    pub fn rank(&self) -> usize {
        self.window.len()
    }

    pub fn window(&self) -> &[i32] {
        &self.window
    }

    /// Simple reflection `s_i` (`s_n` flips the sign of `n`).
    pub fn simple(n: usize, i: usize) -> Self {
        Self::reflection(n, &RootC::simple(n, i))
    }

    /// The longest element `w∘ = [1̄, …, n̄]`.
    pub fn longest(n: usize) -> Self {
        SignedPerm { window: (1..=n as i32).map(|k| -k).collect() }
    }

    /// The reflection `s_α`: `s_{(i,j)}` swaps `i, j`; `s_{(i,j̄)}` sends
    /// `i ↦ j̄, j ↦ ī`; `s_{(i,ī)}` sends `i ↦ ī`.
    pub fn reflection(n: usize, root: &RootC) -> Self {
        let mut w = Self::identity(n);
        match *root {
            RootC::Minus(i, j) => {
                w.window[i - 1] = j as i32;
                w.window[j - 1] = i as i32;
            }
            RootC::Plus(i, j) => {
                w.window[i - 1] = -(j as i32);
                w.window[j - 1] = -(i as i32);
            }
            RootC::Long(i) => w.window[i - 1] = -(i as i32),
        }
        w
    }

    /// Product of simple reflections `s_{i_1} ⋯ s_{i_r}`.
    pub fn from_word(n: usize, word: &[usize]) -> Self {
        word.iter()
            .fold(Self::identity(n), |acc, &i| acc.compose(&Self::simple(n, i)))
    }

    /// `w(x)` for a letter `x ∈ [1, 1̄]`.
    pub fn act(&self, x: i32) -> i32 {
        let v = self.window[x.unsigned_abs() as usize - 1];
        if x > 0 {
            v
        } else {
            -v
        }
    }

    /// `(self ∘ other)(x) = self(other(x))`.
    pub fn compose(&self, other: &SignedPerm) -> SignedPerm {
        SignedPerm { window: other.window.iter().map(|&x| self.act(x)).collect() }
    }

    pub fn inverse(&self) -> SignedPerm {
        let mut inv = vec![0; self.rank()];
        for (k, &x) in self.window.iter().enumerate() {
            let kk = (k + 1) as i32;
            let m = x.unsigned_abs() as usize;
            inv[m - 1] = if x > 0 { kk } else { -kk };
        }
        SignedPerm { window: inv }
    }

    /// Right multiplication by a reflection: `w s_α`.
    pub fn times_reflection(&self, root: &RootC) -> SignedPerm {
        self.compose(&Self::reflection(self.rank(), root))
    }

    /// Action on weights: `w ε_k = ε_{w(k)}`.
    pub fn act_weight(&self, lambda: &Weight) -> Weight {
        let mut out = vec![0; self.rank()];
        for (k, &c) in lambda.coords().iter().enumerate() {
            let x = self.window[k];
            out[x.unsigned_abs() as usize - 1] += c * x.signum();
        }
        Weight::from_vec(out)
    }

    /// Number of positive roots sent to negative roots.
    pub fn length(&self) -> usize {
        let n = self.rank();
        RootC::positive_roots(n)
            .iter()
            .filter(|r| !is_positive_weight(&self.act_weight(&r.weight(n))))
            .count()
    }

    pub fn is_identity(&self) -> bool {
        self.window.iter().enumerate().all(|(k, &x)| x == (k + 1) as i32)
    }

    /// `s_1 s_2 ⋯ s_k` (`k = 0` gives the identity).
    pub fn prefix(n: usize, k: usize) -> SignedPerm {
        assert!(k <= n);
        Self::from_word(n, &(1..=k).collect::<Vec<_>>())
    }

    /// `s_1 ⋯ s_{n-1} s_n s_{n-1} ⋯ s_k` for `1 ≤ k ≤ n`.
    pub fn mountain(n: usize, k: usize) -> SignedPerm {
        assert!(k >= 1 && k <= n);
        let mut word: Vec<usize> = (1..=n).collect();
        word.extend((k..n).rev());
        Self::from_word(n, &word)
    }
}

/// All `2^n n!` signed permutations: underlying permutations in lexicographic
/// order, and for each the sign patterns in binary order.
pub fn enumerate_group(n: usize) -> Result<Vec<SignedPerm>> {
    if n == 0 || n > MAX_ENUMERATION_RANK {
        return Err(Error::Config(format!(
            "rank {n} outside the supported range 1..={MAX_ENUMERATION_RANK}"
        )));
    }
    let mut perms: Vec<Vec<i32>> = Vec::new();
    let mut current = Vec::with_capacity(n);
    let mut used = vec![false; n + 1];
    permutations(n, &mut current, &mut used, &mut perms);
    let mut out = Vec::with_capacity(perms.len() << n);
    for p in perms {
        for signs in 0u32..(1 << n) {
            let window = p
                .iter()
                .enumerate()
                .map(|(k, &x)| if signs >> (n - 1 - k) & 1 == 1 { -x } else { x })
                .collect();
            out.push(SignedPerm { window });
        }
    }
    Ok(out)
}

fn permutations(n: usize, current: &mut Vec<i32>, used: &mut [bool], out: &mut Vec<Vec<i32>>) {
    if current.len() == n {
        out.push(current.clone());
        return;
    }
    for x in 1..=n {
        if !used[x] {
            used[x] = true;
            current.push(x as i32);
            permutations(n, current, used, out);
            current.pop();
            used[x] = false;
        }
    }
}

impl fmt::Display for SignedPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, x) in self.window.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for SignedPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for SignedPerm {
    type Err = Error;

    /// Parses window notation such as `[2,3,-1]` (brackets optional).
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('[').trim_end_matches(']');
        let window = inner
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<i32>()
                    .map_err(|e| Error::Parse(format!("bad window entry {t:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_window(window)
    }
}

impl Serialize for SignedPerm {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for SignedPerm {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_orders() {
        assert_eq!(enumerate_group(1).unwrap().len(), 2);
        assert_eq!(enumerate_group(2).unwrap().len(), 8);
        assert_eq!(enumerate_group(4).unwrap().len(), 384);
        assert!(enumerate_group(0).is_err());
        assert!(enumerate_group(7).is_err());
    }

    #[test]
    fn reflection_tables() {
        let n = 3;
        let s = SignedPerm::reflection(n, &RootC::Long(2));
        assert_eq!(s.act(2), -2);
        assert_eq!(s.act(1), 1);
        assert_eq!(s.act(-3), -3);
        let s = SignedPerm::reflection(n, &RootC::Plus(1, 3));
        assert_eq!(s.act(1), -3);
        assert_eq!(s.act(3), -1);
        assert_eq!(s.act(-1), 3);
    }

    #[test]
    fn mountain_word_window() {
        // s_1 ⋯ s_{n-1} s_n s_{n-1} ⋯ s_k = [2, 3, …, k, 1̄, k+1, …, n]
        for n in 1..=5 {
            for k in 1..=n {
                let w = SignedPerm::mountain(n, k);
                let mut expected: Vec<i32> = (2..=k as i32).collect();
                expected.push(-1);
                expected.extend(k as i32 + 1..=n as i32);
                assert_eq!(w.window(), &expected[..], "n={n} k={k}");
            }
        }
    }

    #[test]
    fn lengths() {
        assert_eq!(SignedPerm::identity(3).length(), 0);
        assert_eq!(SignedPerm::from_word(2, &[1, 2]).length(), 2);
        for n in 1..=4 {
            assert_eq!(SignedPerm::longest(n).length(), n * n);
        }
    }

    #[test]
    fn parse_round_trip() {
        let w: SignedPerm = "[2,3,-1]".parse().unwrap();
        assert_eq!(w.to_string(), "[2,3,-1]");
        assert!("[2,2,-1]".parse::<SignedPerm>().is_err());
    }
}
