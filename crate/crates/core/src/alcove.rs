//! Quantum alcove model: the root sequences `Θ_k` and `Γ_k(k)`, admissible
//! subsets with their `end`/`down` statistics, decreasing chains `𝒮_{m,j}`,
//! and the filtered families `𝒜_w^{x,l}`.

use std::collections::HashMap;
use std::fmt;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::qbg::{edge_by_length, EdgeKind};
use crate::weyl::letter::{self, position};
use crate::weyl::{Coroot, RootC, SignedPerm};

/// A root `±α` with `α` positive.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SeqRoot {
    pub root: RootC,
    pub negative: bool,
}

impl SeqRoot {
    pub fn neg(root: RootC) -> Self {
        SeqRoot { root, negative: true }
    }

    /// `|γ|`.
    pub fn abs(&self) -> RootC {
        self.root
    }
}

impl fmt::Display for SeqRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.negative {
            write!(f, "-{}", self.root)
        } else {
            write!(f, "{}", self.root)
        }
    }
}

impl fmt::Debug for SeqRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

pub type RootSequence = Vec<SeqRoot>;

/// `Θ_k = (-(1,k), …, -(k-1,k))`.
pub fn theta_seq(n: usize, k: usize) -> RootSequence {
    assert!(k >= 1 && k <= n);
    (1..k).map(|i| SeqRoot::neg(RootC::Minus(i, k))).collect()
}

/// `Γ_k(k) = (-(1,k̄), …, -(k-1,k̄), -(k,\overline{k+1}), …, -(k,n̄), -(k,k̄),
/// -(k,n), …, -(k,k+1))`.
pub fn gamma_seq(n: usize, k: usize) -> RootSequence {
    assert!(k >= 1 && k <= n);
    let mut out: RootSequence = (1..k).map(|i| SeqRoot::neg(RootC::Plus(i, k))).collect();
    out.extend((k + 1..=n).map(|m| SeqRoot::neg(RootC::Plus(k, m))));
    out.push(SeqRoot::neg(RootC::Long(k)));
    out.extend((k + 1..=n).rev().map(|m| SeqRoot::neg(RootC::Minus(k, m))));
    out
}

/// The sequence attached to a letter: `Θ_x` for `x` unbarred, `Γ_{|x|}(|x|)`
/// for `x` barred.
pub fn seq_for_letter(n: usize, x: i32) -> RootSequence {
    let k = x.unsigned_abs() as usize;
    if x > 0 {
        theta_seq(n, k)
    } else {
        gamma_seq(n, k)
    }
}

/// Parses `theta:K` or `gamma:K`.
pub fn parse_seq(n: usize, spec: &str) -> Result<RootSequence> {
    let (kind, k) = spec
        .split_once(':')
        .ok_or_else(|| Error::Parse(format!("expected theta:K or gamma:K, got {spec:?}")))?;
    let k: usize = k.trim().parse().map_err(|e| Error::Parse(format!("bad index in {spec:?}: {e}")))?;
    if k == 0 || k > n {
        return Err(Error::Parse(format!("index {k} out of range for rank {n}")));
    }
    match kind.trim() {
        "theta" => Ok(theta_seq(n, k)),
        "gamma" => Ok(gamma_seq(n, k)),
        other => Err(Error::Parse(format!("unknown sequence kind {other:?}"))),
    }
}

/// One step `w_{i-1} → w_i` of the walk of an admissible subset.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PathStep {
    pub root: RootC,
    pub target: SignedPerm,
    pub kind: EdgeKind,
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct AdmissibleSubset {
    pub base: SignedPerm,
    /// Chosen indices into the sequence, increasing (0-based).
    pub positions: Vec<usize>,
    /// The chosen roots, in order.
    pub roots: Vec<SeqRoot>,
    pub path: Vec<PathStep>,
    pub end: SignedPerm,
    pub down: Coroot,
}

impl AdmissibleSubset {
    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "positions": self.positions.iter().map(|p| p + 1).collect::<Vec<_>>(),
            "roots": self.roots.iter().map(|r| r.to_string()).collect::<Vec<_>>(),
            "end": self.end.to_string(),
            "down": self.down.coords(),
        })
    }
}

impl fmt::Display for AdmissibleSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, r) in self.roots.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{r}")?;
        }
        write!(f, "}} end={} down={}", self.end, self.down)
    }
}

/// All `w`-admissible subsets of `seq`, in lexicographic order of positions
/// (so `∅` comes first).
pub fn admissible_subsets(w: &SignedPerm, seq: &[SeqRoot]) -> Vec<AdmissibleSubset> {
    let n = w.rank();
    let mut cache: HashMap<(SignedPerm, RootC), Option<EdgeKind>> = HashMap::new();
    let mut out = Vec::new();
    let mut current = AdmissibleSubset {
        base: w.clone(),
        positions: Vec::new(),
        roots: Vec::new(),
        path: Vec::new(),
        end: w.clone(),
        down: Coroot::zero(n),
    };
    extend(seq, 0, &mut current, &mut cache, &mut out);
    out
}

fn extend(
    seq: &[SeqRoot],
    start: usize,
    current: &mut AdmissibleSubset,
    cache: &mut HashMap<(SignedPerm, RootC), Option<EdgeKind>>,
    out: &mut Vec<AdmissibleSubset>,
) {
    out.push(current.clone());
    let n = current.base.rank();
    for p in start..seq.len() {
        let root = seq[p].abs();
        let from = current.end.clone();
        let kind = *cache
            .entry((from.clone(), root))
            .or_insert_with(|| edge_by_length(&from, &root));
        let Some(kind) = kind else { continue };
        let target = from.times_reflection(&root);
        let saved_down = current.down.clone();
        if kind == EdgeKind::Quantum {
            current.down = current.down.plus(&root.coroot(n));
        }
        current.positions.push(p);
        current.roots.push(seq[p]);
        current.path.push(PathStep { root, target: target.clone(), kind });
        current.end = target;
        extend(seq, p + 1, current, cache, out);
        current.positions.pop();
        current.roots.pop();
        current.path.pop();
        current.end = from;
        current.down = saved_down;
    }
}

/// `𝒮_{m,j}`: all chains `m > j_1 > ⋯ > j_r = j` in `[1, 1̄]`, `r ≥ 1`,
/// ordered by the chain read as a sequence of positions, longest-first within
/// equal prefixes.
pub fn s_chains(n: usize, m: i32, j: i32) -> Result<Vec<Vec<i32>>> {
    let (pm, pj) = (position(n, m), position(n, j));
    if pj >= pm {
        return Err(Error::Config(format!("chain bounds require {j} < {m}")));
    }
    let inner: Vec<i32> = (pj + 1..pm).rev().map(|p| letter::from_position(n, p)).collect();
    let d = inner.len();
    let mut out = Vec::with_capacity(1 << d);
    for mask in 0u32..(1 << d) {
        let mut chain: Vec<i32> = (0..d).filter(|b| mask >> b & 1 == 1).map(|b| inner[b]).collect();
        chain.push(j);
        out.push(chain);
    }
    out.sort_by(|a, b| {
        let pa: Vec<std::cmp::Reverse<usize>> = a.iter().map(|&x| std::cmp::Reverse(position(n, x))).collect();
        let pb: Vec<std::cmp::Reverse<usize>> = b.iter().map(|&x| std::cmp::Reverse(position(n, x))).collect();
        pa.cmp(&pb)
    });
    Ok(out)
}

/// `𝒜_w^{x,l}`: nonempty admissible subsets of `w` for the sequence attached to
/// the letter `x` whose end `e` satisfies `e^{-1} w ε_x = ε_l`.
pub fn a_filtered(w: &SignedPerm, x: i32, l: i32) -> Vec<AdmissibleSubset> {
    let n = w.rank();
    let wx = w.act(x);
    admissible_subsets(w, &seq_for_letter(n, x))
        .into_iter()
        .filter(|a| !a.is_empty() && a.end.inverse().act(wx) == l)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sequence_lengths() {
        for n in 1..=5 {
            for k in 1..=n {
                assert_eq!(theta_seq(n, k).len(), k - 1);
                assert_eq!(gamma_seq(n, k).len(), 2 * n - k);
                assert_eq!(gamma_seq(n, k)[n - 1].root, RootC::Long(k));
            }
        }
        assert!(theta_seq(3, 1).is_empty());
    }

    #[test]
    fn chain_counts() {
        let n = 3;
        let ls = letter::letters(n);
        for (a, &j) in ls.iter().enumerate() {
            for &m in &ls[a + 1..] {
                let d = (position(n, m) - position(n, j)) as u32;
                assert_eq!(s_chains(n, m, j).unwrap().len(), 1 << (d - 1));
            }
        }
        assert_eq!(s_chains(3, 2, 1).unwrap(), vec![vec![1]]);
        assert!(s_chains(3, 1, 2).is_err());
    }

    #[test]
    fn empty_subset_is_first() {
        let w = SignedPerm::identity(3);
        let subs = admissible_subsets(&w, &gamma_seq(3, 2));
        assert!(subs[0].is_empty());
        assert_eq!(subs[0].end, w);
        assert!(subs[0].down.is_zero());
    }
}
