use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use super::CheckResult;
use crate::alcove::{admissible_subsets, gamma_seq, theta_seq};
use crate::error::{Error, Result};
use crate::ichevalley::{
    cancellation_report, coroot_interval, derive_recurrence, ic1_data, ic2_closed_form, inverse_chevalley, lhs_weight,
    rec1_literal, rec2_literal,
};
use crate::qbg::{edge_by_length, edge_by_pattern};
use crate::rings::{Truncation, Weight};
use crate::weyl::{enumerate_group, Coroot, RootC, SignedPerm};
use crate::{qkpres, relations, semimod};

/// The identity suites, in report order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Qbg,
    Alcove,
    Ic,
    Semimod,
    Relations,
    Qkpres,
}

impl Suite {
    pub const ALL: [Suite; 6] = [Suite::Qbg, Suite::Alcove, Suite::Ic, Suite::Semimod, Suite::Relations, Suite::Qkpres];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Qbg => "qbg",
            Suite::Alcove => "alcove",
            Suite::Ic => "ic",
            Suite::Semimod => "semimod",
            Suite::Relations => "relations",
            Suite::Qkpres => "qkpres",
        }
    }

    pub fn parse(s: &str) -> Result<Vec<Suite>> {
        if s == "all" {
            return Ok(Self::ALL.to_vec());
        }
        Self::ALL
            .iter()
            .find(|x| x.name() == s)
            .map(|x| vec![*x])
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

/// `edge_by_pattern ≡ edge_by_length` over every `(w, α)`.
pub fn check_qbg(n: usize) -> Result<CheckResult> {
    let group = enumerate_group(n)?;
    let roots = RootC::positive_roots(n);
    let fails: Vec<String> = group
        .par_iter()
        .flat_map_iter(|w| {
            roots.iter().filter_map(move |r| {
                let (a, b) = (edge_by_pattern(w, r), edge_by_length(w, r));
                (a != b).then(|| format!("w={w} α={r}: pattern {a:?}, length {b:?}"))
            })
        })
        .collect();
    Ok(CheckResult::from_failures("qbg", format!("pattern criterion = length criterion (n={n})"), group.len() * roots.len(), &fails))
}

/// One expected admissible subset: the chosen roots, `end` and `down`.
pub type Listing = Vec<(Vec<RootC>, SignedPerm, Coroot)>;

/// The listings for `w = s_1⋯s_n⋯s_k` and `Θ_k`, `Γ_k(k)`: `∅`, `{−(k−1,k)}`
/// for `Θ_k`; `∅`, `{−(k,k+1)}`, `{−(k,k̄)}`, `{−(k,k̄), −(k,k+1)}` for
/// `Γ_k(k)` (entries with an index outside `[1, n]` are absent).
pub fn mountain_listings(n: usize, k: usize) -> (Listing, Listing) {
    let w = SignedPerm::mountain(n, k);
    let zero = Coroot::zero(n);
    let mut theta = vec![(vec![], w.clone(), zero.clone())];
    if k >= 2 {
        theta.push((vec![RootC::Minus(k - 1, k)], SignedPerm::mountain(n, k - 1), zero.clone()));
    }
    let tail = coroot_interval(n, k, n);
    let mut gamma = vec![(vec![], w.clone(), zero)];
    if k < n {
        gamma.push((vec![RootC::Minus(k, k + 1)], SignedPerm::mountain(n, k + 1), coroot_interval(n, k, k)));
    }
    gamma.push((vec![RootC::Long(k)], SignedPerm::prefix(n, k - 1), tail.clone()));
    if k < n {
        gamma.push((vec![RootC::Long(k), RootC::Minus(k, k + 1)], SignedPerm::prefix(n, k), tail));
    }
    (theta, gamma)
}

fn listing_of(w: &SignedPerm, seq: &[crate::alcove::SeqRoot]) -> Listing {
    admissible_subsets(w, seq)
        .into_iter()
        .map(|a| (a.roots.iter().map(|r| r.abs()).collect(), a.end, a.down))
        .collect()
}

fn same_listing(mut a: Listing, mut b: Listing) -> bool {
    a.sort_by(|x, y| format!("{x:?}").cmp(&format!("{y:?}")));
    b.sort_by(|x, y| format!("{x:?}").cmp(&format!("{y:?}")));
    a == b
}

pub fn check_alcove(n: usize) -> CheckResult {
    let mut fails = Vec::new();
    for k in 1..=n {
        let w = SignedPerm::mountain(n, k);
        let (theta, gamma) = mountain_listings(n, k);
        if !same_listing(listing_of(&w, &theta_seq(n, k)), theta) {
            fails.push(format!("Θ_{k}"));
        }
        if !same_listing(listing_of(&w, &gamma_seq(n, k)), gamma) {
            fails.push(format!("Γ_{k}({k})"));
        }
    }
    CheckResult::from_failures("alcove", format!("admissible subsets at s_1..s_n..s_k (n={n})"), 2 * n, &fails)
}

pub fn check_ic(n: usize) -> Result<Vec<CheckResult>> {
    let per_k: Vec<(Option<String>, Option<String>, Vec<String>)> = (1..=n)
        .into_par_iter()
        .map(|k| -> Result<_> {
            let w = SignedPerm::mountain(n, k);
            let closed = ic2_closed_form(n, k)?;
            let eval = (inverse_chevalley(&w, k)? != closed.rhs || lhs_weight(&w, k) != closed.lhs_weight)
                .then(|| format!("k={k}"));
            let rep = cancellation_report(n, k)?;
            let cancel = (!rep.passed()).then(|| format!("k={k}: unmatched {:?}", rep.unmatched));
            let mut rec = Vec::new();
            let target = (k >= 2).then(|| SignedPerm::mountain(n, k - 1));
            if derive_recurrence(&closed, &Weight::epsilon(n, k as i32), target.as_ref())? != rec2_literal(n, k)? {
                rec.push(format!("barred k={k}"));
            }
            if k < n {
                let d = derive_recurrence(
                    &ic1_data(n, k)?,
                    &-Weight::epsilon(n, k as i32 + 1),
                    Some(&SignedPerm::prefix(n, k + 1)),
                )?;
                if d != rec1_literal(n, k)? {
                    rec.push(format!("unbarred k={k}"));
                }
            }
            Ok((eval, cancel, rec))
        })
        .collect::<Result<_>>()?;
    let eval: Vec<String> = per_k.iter().filter_map(|x| x.0.clone()).collect();
    let cancel: Vec<String> = per_k.iter().filter_map(|x| x.1.clone()).collect();
    let rec: Vec<String> = per_k.iter().flat_map(|x| x.2.clone()).collect();
    Ok(vec![
        CheckResult::from_failures("ic", format!("evaluator = closed form (n={n})"), n, &eval),
        CheckResult::from_failures("ic", format!("cancellation pairing (n={n})"), n, &cancel),
        CheckResult::from_failures("ic", format!("derived recurrences = literal (n={n})"), 2 * n - 1, &rec),
    ])
}

pub fn check_semimod(n: usize, trunc: Truncation) -> Vec<CheckResult> {
    let mut out = semimod::check_recursion(n, trunc);
    out.push(semimod::check_symmetry(n, trunc));
    out.extend(semimod::check_factorization(n, trunc));
    out.push(semimod::check_star_involution(n));
    out.push(semimod::check_duality(n));
    out.push(semimod::check_s_equals_t(n));
    out.push(semimod::check_lemma_duality(n));
    out
}

/// Timed results of one suite.
#[derive(Clone, Debug, Serialize)]
pub struct SuiteRun {
    pub suite: Suite,
    pub checks: Vec<CheckResult>,
    pub millis: u128,
}

pub fn run_suite(suite: Suite, n: usize, trunc: Truncation) -> Result<SuiteRun> {
    if n == 0 {
        return Err(Error::Config("rank must be at least 1".into()));
    }
    let start = Instant::now();
    let checks = match suite {
        Suite::Qbg => vec![check_qbg(n)?],
        Suite::Alcove => vec![check_alcove(n)],
        Suite::Ic => check_ic(n)?,
        Suite::Semimod => check_semimod(n, trunc),
        Suite::Relations => relations::check_relations(n, trunc)?,
        Suite::Qkpres => qkpres::check_qkpres(n, trunc)?,
    };
    Ok(SuiteRun { suite, checks, millis: start.elapsed().as_millis() })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_suite_passes_at_rank_two() {
        for s in Suite::ALL {
            let run = run_suite(s, 2, Some(6)).unwrap();
            for c in run.checks {
                assert!(c.passed, "{}: {}", c.name, c.detail);
            }
        }
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(Suite::parse(s.name()).unwrap(), vec![s]);
        }
        assert_eq!(Suite::parse("all").unwrap().len(), 6);
        assert!(Suite::parse("nope").is_err());
    }
}
