//! Named checks of the relation engine, reported as [`CheckResult`]s.

use rayon::prelude::*;

use super::derivation::{
    base_relation, demazure_chain, derive_secondary, folded_alternating_relation, alternating_relation, nested_sum,
    secondary_literal, system_arbitrary,
};
use super::generating::{
    combined_lhs, combined_rhs, elementary_product, elementary_series, h_difference_product, h_difference_series,
};
use super::symmetric::{complete_h_vars, doubled_variables, elementary_e};
use super::system::{assemble_system, assemble_system_derived, prefactor_audit, solve_relations, system_relation};
use crate::error::Result;
use crate::rings::{GroupRingElement, Truncation, Weight};
use crate::semimod::{ff, q_closed, FfVariant};
use crate::verify::CheckResult;

const SUITE: &str = "relations";

fn h_diff(rank: usize, vars: &[Weight], m: i64) -> GroupRingElement {
    &complete_h_vars(rank, vars, m) - &complete_h_vars(rank, vars, m - 2)
}

fn mono(w: Weight) -> GroupRingElement {
    GroupRingElement::monomial(w)
}

fn eps(n: usize, i: usize) -> Weight {
    Weight::epsilon(n, i as i32)
}

/// Failures of the complete-symmetric identities in `vars` variables (`m ≤ max_m`).
pub fn complete_symmetric_failures(vars: usize, max_m: i64) -> Vec<String> {
    let mut fails = Vec::new();
    let doubled = doubled_variables(vars, 1, vars);
    if complete_h_vars(vars, &doubled, 0) != GroupRingElement::one(vars) {
        fails.push(format!("h_0 ≠ 1 in {vars} variables"));
    }
    for m in 1..=max_m {
        let ok = match vars {
            1 => {
                let x = eps(1, 1);
                &mono(x.scaled(m as i32)) + &mono(x.scaled(-(m as i32))) == h_diff(1, &doubled, m)
            }
            2 => {
                let (x1, x2) = (eps(2, 1), eps(2, 2));
                let len = m as i32 + 1;
                let a = GroupRingElement::from_terms(2, (0..len).map(|k| ((&x1 - &x2).scaled(k), 1.into())));
                let b = GroupRingElement::from_terms(2, (0..len).map(|k| ((&x1 + &x2).scaled(k), 1.into())));
                (&a * &b).shift(&x1.scaled(-(m as i32))) == h_diff(2, &doubled, m)
            }
            _ => {
                let top = m + vars as i64 - 2;
                nested_sum(vars, vars - 2, top, -top, 1) == h_diff(vars, &doubled, m)
            }
        };
        if !ok {
            fails.push(format!("{vars} variables, m={m}"));
        }
    }
    fails
}

pub fn check_complete_symmetric(n: usize, max_m: i64) -> Vec<CheckResult> {
    let ranks: Vec<usize> = (1..=n.max(3)).collect();
    let fails: Vec<String> = ranks.par_iter().flat_map_iter(|&v| complete_symmetric_failures(v, max_m)).collect();
    let mut out = vec![CheckResult::from_failures(
        SUITE,
        format!("complete symmetric identities (vars ≤ {}, m ≤ {max_m})", n.max(3)),
        ranks.len() * max_m as usize,
        &fails,
    )];
    let sym: Vec<String> = (1..=n as i64)
        .filter(|&l| elementary_e(n, n as i64 + l) != elementary_e(n, n as i64 - l))
        .map(|l| format!("l={l}"))
        .collect();
    out.push(CheckResult::from_failures(SUITE, format!("E_(n+l) = E_(n-l) (n={n})"), n, &sym));
    out
}

pub fn check_generating_identities(n: usize, degree: usize) -> Vec<CheckResult> {
    let degree = degree.max(2 * n);
    let per_k: Vec<(Vec<String>, Vec<String>, Vec<String>)> = (0..n)
        .into_par_iter()
        .map(|k| {
            let mut gf1 = Vec::new();
            let mut gf3 = Vec::new();
            let mut vanish = Vec::new();
            if h_difference_series(n, k, degree) != h_difference_product(n, k, degree) {
                gf1.push(format!("k={k}"));
            }
            let (lhs, rhs) = (combined_lhs(n, k, degree), combined_rhs(n, k, degree));
            if lhs != rhs {
                gf3.push(format!("k={k}"));
            }
            if rhs.top().is_some_and(|t| t > 2 * (n - k - 1) + 2) {
                gf3.push(format!("k={k}: right side has degree {:?}", rhs.top()));
            }
            if !lhs.coeff(n - k).is_empty() {
                vanish.push(format!("k={k}: coefficient {}", lhs.coeff(n - k)));
            }
            (gf1, gf3, vanish)
        })
        .collect();
    let collect = |f: fn(&(Vec<String>, Vec<String>, Vec<String>)) -> &Vec<String>| -> Vec<String> {
        per_k.iter().flat_map(|x| f(x).clone()).collect()
    };
    let gf2 = if elementary_series(n, degree) == elementary_product(n, degree) { vec![] } else { vec!["E".into()] };
    vec![
        CheckResult::from_failures(SUITE, format!("complete generating function (n={n})"), n, &collect(|x| &x.0)),
        CheckResult::from_failures(SUITE, format!("elementary generating function (n={n})"), 1, &gf2),
        CheckResult::from_failures(SUITE, format!("combined generating function (n={n})"), n, &collect(|x| &x.1)),
        CheckResult::from_failures(SUITE, format!("t^(n-k) coefficient vanishes (n={n})"), n, &collect(|x| &x.2)),
    ]
}

/// Base relation, secondary relation and the chain against their closed forms.
pub fn check_derivation(n: usize) -> Result<Vec<CheckResult>> {
    let mut out = Vec::new();
    let fold_ok = folded_alternating_relation(n)? == base_relation(n);
    out.push(CheckResult::from_failures(
        SUITE,
        format!("folded alternating sum = base relation (n={n})"),
        1,
        &if fold_ok { vec![] } else { vec!["mismatch".into()] },
    ));
    if n >= 2 {
        let got = derive_secondary(&base_relation(n))?;
        let want = secondary_literal(n);
        let fails: Vec<String> = got.first_difference(&want).map(|l| format!("first difference at l={l}")).into_iter().collect();
        out.push(CheckResult::from_failures(SUITE, format!("D_1 image = secondary relation (n={n})"), n + 1, &fails));
    }
    if n >= 3 {
        let chain = demazure_chain(n)?;
        let mut fails = Vec::new();
        for (k, rel) in chain.iter().enumerate().skip(2) {
            if let Some(l) = rel.first_difference(&system_arbitrary(n, k)?) {
                fails.push(format!("k={k}: first difference at l={l}"));
            }
        }
        out.push(CheckResult::from_failures(SUITE, format!("D_k chain = nested sums (n={n})"), n - 2, &fails));
    }
    let fails: Vec<String> = prefactor_audit(n)?
        .into_iter()
        .filter(|a| !a.passed())
        .map(|a| format!("k={}: observed {:?}, expected {}", a.k, a.observed, a.expected))
        .collect();
    out.push(CheckResult::from_failures(SUITE, format!("chain prefactors (n={n})"), n, &fails));
    Ok(out)
}

/// The alternating relation evaluated on the module elements `𝔽_l` is the
/// closed form produced by the barred recursion.
pub fn check_module_link(n: usize, trunc: Truncation) -> Result<CheckResult> {
    let rel = alternating_relation(n);
    let mut acc = q_closed(n, 0, trunc)?.scale_int(0);
    for (l, c) in rel.coeffs().iter().enumerate() {
        acc = &acc + &ff(n, l, FfVariant::Full, trunc)?.scale_group_ring(c);
    }
    let want = q_closed(n, 0, trunc)?;
    let fails: Vec<String> = acc.first_difference(&want).map(|(k, _, _)| format!("first difference at {k:?}")).into_iter().collect();
    Ok(CheckResult::from_failures(SUITE, format!("alternating relation on F_l = closed form (n={n})"), 2 * n + 1, &fails))
}

/// The system annihilates `E`, and its solution is `E` by either assembly.
pub fn check_system(n: usize) -> Result<Vec<CheckResult>> {
    let e: Vec<GroupRingElement> = (0..=n as i64).map(|l| elementary_e(n, l)).collect();
    let annihilate: Vec<String> = (0..n)
        .filter_map(|k| {
            let v = system_relation(n, k).evaluate(&e).ok()?;
            (!v.is_empty()).then(|| format!("k={k}: residue {v}"))
        })
        .collect();
    let mut out = vec![CheckResult::from_failures(SUITE, format!("system annihilates E (n={n})"), n, &annihilate)];
    let solved = solve_relations(n, &assemble_system(n))?;
    let fails: Vec<String> =
        (0..=n).filter(|&l| solved[l] != e[l]).map(|l| format!("l={l}: got {}", solved[l])).collect();
    out.push(CheckResult::from_failures(SUITE, format!("solution = E (n={n})"), n + 1, &fails));
    let derived = solve_relations(n, &assemble_system_derived(n)?)?;
    let same = if derived == solved { vec![] } else { vec!["assembly paths disagree".to_string()] };
    out.push(CheckResult::from_failures(SUITE, format!("solution independent of assembly (n={n})"), n + 1, &same));
    Ok(out)
}

/// Every relations check at rank `n`.
pub fn check_relations(n: usize, trunc: Truncation) -> Result<Vec<CheckResult>> {
    let mut out = check_derivation(n)?;
    out.extend(check_system(n)?);
    out.extend(check_complete_symmetric(n, 6));
    out.extend(check_generating_identities(n, 2 * n));
    out.push(check_module_link(n, trunc)?);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_symmetric_identities_hold() {
        for v in 1..=4 {
            assert!(complete_symmetric_failures(v, 6).is_empty(), "vars={v}");
        }
    }

    #[test]
    fn last_variable_shift_is_needed() {
        // without the +1 on x_{N-1} the sum is x_{N-1}^{-1}(h_m - h_{m-2})
        for v in 3..=4 {
            let doubled = doubled_variables(v, 1, v);
            for m in 1..=4 {
                let top = m + v as i64 - 2;
                let unshifted = nested_sum(v, v - 2, top, -top, 1).shift(&eps(v, v - 1).scaled(-1));
                assert_ne!(unshifted, h_diff(v, &doubled, m));
                assert_eq!(unshifted, h_diff(v, &doubled, m).shift(&eps(v, v - 1).scaled(-1)));
            }
        }
    }

    #[test]
    fn all_checks_pass_small_rank() {
        for n in 1..=3 {
            for c in check_relations(n, Some(2 * n as u32 + 2)).unwrap() {
                assert!(c.passed, "{}: {}", c.name, c.detail);
            }
        }
    }
}
