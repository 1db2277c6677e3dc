//! The totally ordered alphabet `[1, 1̄] = {1 < ⋯ < n < n̄ < ⋯ < 1̄}`, encoded as
//! signed integers (`-k` is `k̄`), and subsets of it as bitmasks.

use std::fmt;

use crate::error::{Error, Result};

/// Position of a letter in `[1, 1̄]`, from 1 (for `1`) to `2n` (for `1̄`).
pub fn position(n: usize, x: i32) -> usize {
    let k = x.unsigned_abs() as usize;
    debug_assert!(k >= 1 && k <= n, "letter {x} out of range for rank {n}");
    if x > 0 {
        k
    } else {
        2 * n + 1 - k
    }
}

pub fn from_position(n: usize, p: usize) -> i32 {
    debug_assert!(p >= 1 && p <= 2 * n);
    if p <= n {
        p as i32
    } else {
        -((2 * n + 1 - p) as i32)
    }
}

/// `a < b` in the order of `[1, 1̄]`.
pub fn less(n: usize, a: i32, b: i32) -> bool {
    position(n, a) < position(n, b)
}

/// All letters in increasing order.
pub fn letters(n: usize) -> Vec<i32> {
    (1..=2 * n).map(|p| from_position(n, p)).collect()
}

/// `x̄`.
pub fn bar(x: i32) -> i32 {
    -x
}

pub fn format_letter(x: i32) -> String {
    if x > 0 {
        x.to_string()
    } else {
        format!("{}bar", -x)
    }
}

/// Parses `3`, `-3`, or `3bar`.
pub fn parse_letter(n: usize, s: &str) -> Result<i32> {
    let s = s.trim();
    let x = if let Some(stripped) = s.strip_suffix("bar") {
        -stripped.trim().parse::<i32>().map_err(|e| Error::Parse(format!("bad letter {s:?}: {e}")))?
    } else {
        s.parse::<i32>().map_err(|e| Error::Parse(format!("bad letter {s:?}: {e}")))?
    };
    if x == 0 || x.unsigned_abs() as usize > n {
        return Err(Error::Parse(format!("letter {s:?} out of range for rank {n}")));
    }
    Ok(x)
}

/// A subset of `[1, 1̄]`, bit `p - 1` standing for the letter at position `p`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LetterSet {
    n: usize,
    bits: u32,
}

impl LetterSet {
    pub fn empty(n: usize) -> Self {
        assert!(n <= 15, "rank too large for letter sets");
        LetterSet { n, bits: 0 }
    }

    pub fn from_bits(n: usize, bits: u32) -> Self {
        assert!(n <= 15 && (2 * n == 32 || bits >> (2 * n) == 0));
        LetterSet { n, bits }
    }

    pub fn from_letters(n: usize, xs: &[i32]) -> Self {
        let mut s = Self::empty(n);
        for &x in xs {
            s.insert(x);
        }
        s
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn contains(&self, x: i32) -> bool {
        self.bits >> (position(self.n, x) - 1) & 1 == 1
    }

    pub fn insert(&mut self, x: i32) {
        self.bits |= 1 << (position(self.n, x) - 1);
    }

    pub fn remove(&mut self, x: i32) {
        self.bits &= !(1 << (position(self.n, x) - 1));
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    /// Elements in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = i32> + '_ {
        (1..=2 * self.n)
            .filter(|p| self.bits >> (p - 1) & 1 == 1)
            .map(|p| from_position(self.n, p))
    }

    pub fn union(&self, other: &LetterSet) -> LetterSet {
        LetterSet { n: self.n, bits: self.bits | other.bits }
    }

    pub fn is_disjoint(&self, other: &LetterSet) -> bool {
        self.bits & other.bits == 0
    }

    pub fn is_subset(&self, other: &LetterSet) -> bool {
        self.bits & !other.bits == 0
    }

    /// `a, b ∈ I` with no element of `I` strictly between them, i.e. `I` is of
    /// the form `{⋯ < a < b < ⋯}`.
    pub fn adjacent_pair(&self, a: i32, b: i32) -> bool {
        if !(self.contains(a) && self.contains(b)) {
            return false;
        }
        let (pa, pb) = (position(self.n, a), position(self.n, b));
        if pa >= pb {
            return false;
        }
        (pa + 1..pb).all(|p| self.bits >> (p - 1) & 1 == 0)
    }

    /// All subsets of the initial segment of positions `1..=top`.
    pub fn subsets_of_prefix(n: usize, top: usize) -> impl Iterator<Item = LetterSet> {
        (0u32..(1u32 << top)).map(move |bits| LetterSet::from_bits(n, bits))
    }

    /// All subsets of `[1, 1̄]` with exactly `l` elements drawn from positions
    /// `1..=top`, in increasing bitmask order.
    pub fn sized_subsets_of_prefix(n: usize, top: usize, l: usize) -> Vec<LetterSet> {
        Self::subsets_of_prefix(n, top).filter(|s| s.len() == l).collect()
    }
}

impl fmt::Display for LetterSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, x) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for LetterSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_of_alphabet() {
        assert_eq!(letters(3), vec![1, 2, 3, -3, -2, -1]);
        assert!(less(3, 3, -3));
        assert!(less(3, -2, -1));
        assert!(!less(3, -1, 1));
    }

    #[test]
    fn adjacency_in_subsets() {
        let s = LetterSet::from_letters(4, &[2, 3, -3, -1]);
        assert!(s.adjacent_pair(3, -3));
        assert!(!s.adjacent_pair(2, -3));
        assert!(s.adjacent_pair(-3, -1));
        assert!(!s.adjacent_pair(-3, 3));
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![2, 3, -3, -1]);
    }

    #[test]
    fn parse_letters() {
        assert_eq!(parse_letter(3, "2bar").unwrap(), -2);
        assert_eq!(parse_letter(3, "-3").unwrap(), -3);
        assert!(parse_letter(3, "4").is_err());
        assert!(parse_letter(3, "0").is_err());
    }
}
