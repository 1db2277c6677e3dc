use std::collections::BTreeMap;

use serde::Serialize;

use super::evaluator::{chain_terms, SumBlock};
use super::identities::ic2_closed_form;
use super::sum::SemiClassSum;
use crate::error::Result;
use crate::weyl::SignedPerm;

/// How the unbarred-chain terms of the expansion at `w = s_1⋯s_n⋯s_k`,
/// `m = k`, cancel.
#[derive(Clone, Debug, Serialize)]
pub struct CancellationReport {
    pub n: usize,
    pub k: usize,
    /// Unbarred chains with a nonzero contribution that have no partner.
    pub survivors: Vec<Vec<i32>>,
    /// Chains ending at a barred letter (all kept).
    pub barred_chains: Vec<Vec<i32>>,
    /// `(…, l̄, l, …)` matched with `(…, l, …)`; each pair sums to zero.
    pub pairs: Vec<(Vec<i32>, Vec<i32>)>,
    /// Nonzero chain groups left unaccounted for, or pairs not summing to zero.
    pub unmatched: Vec<Vec<i32>>,
    /// Whether the survivors are exactly `(k, k−1, …, j)` for `1 ≤ j ≤ k`.
    pub survivors_expected: bool,
    /// Whether the full expansion equals the closed form.
    pub matches_closed_form: bool,
}

impl CancellationReport {
    pub fn passed(&self) -> bool {
        self.unmatched.is_empty() && self.survivors_expected && self.matches_closed_form
    }
}

/// The chain obtained by deleting the barred letter right before the first
/// unbarred entry, when the chain has the shape `(…, l̄, l, …)`.
fn partner(chain: &[i32]) -> Option<Vec<i32>> {
    let i = chain.iter().position(|&x| x > 0)?;
    if i == 0 || chain[i - 1] != -chain[i] {
        return None;
    }
    let mut out = chain.to_vec();
    out.remove(i - 1);
    Some(out)
}

pub fn cancellation_report(n: usize, k: usize) -> Result<CancellationReport> {
    let w = SignedPerm::mountain(n, k);
    let terms = chain_terms(&w, k)?;
    let mut groups: BTreeMap<Vec<i32>, SemiClassSum> = BTreeMap::new();
    let mut barred = Vec::new();
    let mut total = SemiClassSum::zero(n);
    for t in &terms {
        total.add_assign(&t.contribution);
        match t.block {
            SumBlock::UnbarredChain => groups.entry(t.chain.clone()).or_insert_with(|| SemiClassSum::zero(n)).add_assign(&t.contribution),
            SumBlock::BarredChain if !t.contribution.is_zero() => barred.push(t.chain.clone()),
            _ => {}
        }
    }
    groups.retain(|_, v| !v.is_zero());
    barred.sort();
    barred.dedup();

    let mut pairs = Vec::new();
    let mut unmatched = Vec::new();
    let mut used: Vec<Vec<i32>> = Vec::new();
    for (chain, sum) in &groups {
        if let Some(p) = partner(chain) {
            let other = groups.get(&p).cloned().unwrap_or_else(|| SemiClassSum::zero(n));
            if (sum + &other).is_zero() {
                pairs.push((chain.clone(), p.clone()));
                used.push(chain.clone());
                used.push(p);
            } else {
                unmatched.push(chain.clone());
            }
        }
    }
    let survivors: Vec<Vec<i32>> = groups.keys().filter(|c| !used.contains(c)).cloned().collect();
    let mut expected: Vec<Vec<i32>> = (1..=k).map(|j| (j..=k).rev().map(|x| x as i32).collect()).collect();
    expected.sort();
    let mut sorted = survivors.clone();
    sorted.sort();
    let closed = ic2_closed_form(n, k)?;
    Ok(CancellationReport {
        n,
        k,
        survivors_expected: sorted == expected,
        survivors,
        barred_chains: barred,
        pairs,
        unmatched,
        matches_closed_form: total == closed.rhs,
    })
}
