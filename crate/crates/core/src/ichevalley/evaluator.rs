use std::collections::HashMap;

use rayon::prelude::*;
use serde::Serialize;

use super::sum::SemiClassSum;
use crate::alcove::{admissible_subsets, gamma_seq, seq_for_letter, theta_seq, AdmissibleSubset, RootSequence};
use crate::error::{Error, Result};
use crate::rings::{QExtElement, Weight};
use crate::weyl::letter::less;
use crate::weyl::{Coroot, SignedPerm};

/// Which of the three sums a term belongs to.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
pub enum SumBlock {
    /// `Σ_{B ∈ 𝒜(w, Θ_m)}`.
    Direct,
    /// Chains ending at a barred letter `j̄`, inner sum over `Θ_j`.
    BarredChain,
    /// Chains ending at an unbarred letter `j`, inner sum over `Γ_j(j)`.
    UnbarredChain,
}

/// One chain tuple `(j, (j_1, …, j_r), A_1, …, A_r)` with its summed inner
/// `B`-contribution.
#[derive(Clone, Debug)]
pub struct ChainTerm {
    pub block: SumBlock,
    /// `j_1 > ⋯ > j_r`; empty for the direct sum.
    pub chain: Vec<i32>,
    /// 1-based positions of each `A_i` in its sequence.
    pub subsets: Vec<Vec<usize>>,
    /// `(−1)^{|A_1| + ⋯ + |A_r| − r}`.
    pub sign: i64,
    pub q_exp: i32,
    /// `down(A_1, …, A_r)`.
    pub down: Coroot,
    pub contribution: SemiClassSum,
}

type Cache = HashMap<(SignedPerm, i32), Vec<AdmissibleSubset>>;

fn subsets_for(cache: &mut Cache, w: &SignedPerm, x: i32) -> Vec<AdmissibleSubset> {
    cache
        .entry((w.clone(), x))
        .or_insert_with(|| admissible_subsets(w, &seq_for_letter(w.rank(), x)))
        .clone()
}

fn inner_sum(start: &SignedPerm, seq: &RootSequence, down: &Coroot, lambda: &Weight, coeff: &QExtElement) -> SemiClassSum {
    let mut out = SemiClassSum::zero(start.rank());
    for b in admissible_subsets(start, seq) {
        let sign = if b.len() % 2 == 0 { 1 } else { -1 };
        out.add_term(b.end.clone(), down.plus(&b.down), lambda.clone(), coeff.scale_int(sign));
    }
    out
}

struct Frame {
    chain: Vec<i32>,
    subsets: Vec<Vec<usize>>,
    size: usize,
    down: Coroot,
}

fn emit(frame: &Frame, end: &SignedPerm) -> ChainTerm {
    let n = end.rank();
    let y = *frame.chain.last().expect("nonempty chain");
    let j = y.unsigned_abs() as usize;
    let r = frame.chain.len();
    let sign = if (frame.size - r).is_multiple_of(2) { 1 } else { -1 };
    let pairing = frame.down.pair(&Weight::epsilon(n, j as i32)) as i32;
    let (block, q_exp, seq, lambda) = if y < 0 {
        (SumBlock::BarredChain, -pairing, theta_seq(n, j), -Weight::epsilon(n, j as i32))
    } else {
        (SumBlock::UnbarredChain, pairing, gamma_seq(n, j), Weight::epsilon(n, j as i32))
    };
    let coeff = QExtElement::q_power(n, q_exp).scale_int(sign);
    ChainTerm {
        block,
        chain: frame.chain.clone(),
        subsets: frame.subsets.clone(),
        sign,
        q_exp,
        down: frame.down.clone(),
        contribution: inner_sum(end, &seq, &frame.down, &lambda, &coeff),
    }
}

fn descend(w: &SignedPerm, letter: i32, frame: &mut Frame, cache: &mut Cache, out: &mut Vec<ChainTerm>) {
    let n = w.rank();
    let image = w.act(letter);
    for a in subsets_for(cache, w, letter) {
        if a.is_empty() {
            continue;
        }
        let next = a.end.inverse().act(image);
        if !less(n, next, letter) {
            continue;
        }
        step(&a, next, frame, cache, out);
    }
}

fn step(a: &AdmissibleSubset, next: i32, frame: &mut Frame, cache: &mut Cache, out: &mut Vec<ChainTerm>) {
    let saved = frame.down.clone();
    frame.chain.push(next);
    frame.subsets.push(a.positions.iter().map(|p| p + 1).collect());
    frame.size += a.len();
    frame.down = frame.down.plus(&a.down);
    out.push(emit(frame, &a.end));
    descend(&a.end, next, frame, cache, out);
    frame.chain.pop();
    frame.subsets.pop();
    frame.size -= a.len();
    frame.down = saved;
}

/// Every term of the inverse Chevalley expansion of `e^{−w(ε_m)}[O_{Q_G(w)}]`:
/// the direct sum first, then chain terms in depth-first order.
pub fn chain_terms(w: &SignedPerm, m: usize) -> Result<Vec<ChainTerm>> {
    let n = w.rank();
    if m == 0 || m > n {
        return Err(Error::Config(format!("m={m} outside 1..={n}")));
    }
    let zero = Coroot::zero(n);
    let direct = ChainTerm {
        block: SumBlock::Direct,
        chain: Vec::new(),
        subsets: Vec::new(),
        sign: 1,
        q_exp: 0,
        down: zero.clone(),
        contribution: inner_sum(w, &theta_seq(n, m), &zero, &-Weight::epsilon(n, m as i32), &QExtElement::one(n)),
    };
    let start = -(m as i32);
    let image = w.act(start);
    let firsts: Vec<(AdmissibleSubset, i32)> = admissible_subsets(w, &seq_for_letter(n, start))
        .into_iter()
        .filter(|a| !a.is_empty())
        .map(|a| {
            let next = a.end.inverse().act(image);
            (a, next)
        })
        .filter(|(_, next)| less(n, *next, start))
        .collect();
    let branches: Vec<Vec<ChainTerm>> = firsts
        .par_iter()
        .map(|(a, next)| {
            let mut cache = Cache::new();
            let mut frame = Frame { chain: Vec::new(), subsets: Vec::new(), size: 0, down: zero.clone() };
            let mut out = Vec::new();
            step(a, *next, &mut frame, &mut cache, &mut out);
            out
        })
        .collect();
    let mut out = vec![direct];
    out.extend(branches.into_iter().flatten());
    Ok(out)
}

/// The right-hand side of the inverse Chevalley identity for
/// `e^{−w(ε_m)}[O_{Q_G(w)}]`.
pub fn inverse_chevalley(w: &SignedPerm, m: usize) -> Result<SemiClassSum> {
    let mut out = SemiClassSum::zero(w.rank());
    for t in chain_terms(w, m)? {
        out.add_assign(&t.contribution);
    }
    Ok(out)
}

/// `−w(ε_m)`, the weight multiplying `[O_{Q_G(w)}]` on the left-hand side.
pub fn lhs_weight(w: &SignedPerm, m: usize) -> Weight {
    -w.act_weight(&Weight::epsilon(w.rank(), m as i32))
}
