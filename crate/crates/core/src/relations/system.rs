//! The recurrence system in complete symmetric polynomials and its solution.

use num_traits::{One, Signed};
use rayon::prelude::*;

use super::derivation::demazure_chain;
use super::symmetric::complete_h;
use super::vector::RelationVector;
use crate::error::{Error, Result};
use crate::rings::{GroupRingElement, RingElement, Weight};

/// `Σ_{l ≤ n−k} (−1)^l (H^{k+1}_{n−l−k} − H^{k+1}_{n−l−k−2}) X_l`.
pub fn system_relation(n: usize, k: usize) -> RelationVector {
    assert!(k < n);
    let mut out = RelationVector::zero(n);
    for l in 0..=n - k {
        let m = (n - l - k) as i64;
        let c = &complete_h(n, m, k + 1) - &complete_h(n, m - 2, k + 1);
        out.add_to(l, &if l % 2 == 0 { c } else { c.negated() });
    }
    out
}

/// The relations `k = 0, …, n − 1` in complete symmetric form.
pub fn assemble_system(n: usize) -> Vec<RelationVector> {
    (0..n).into_par_iter().map(|k| system_relation(n, k)).collect()
}

/// The monomial `e^μ` turning the `k`-th Demazure-derived relation into the
/// `k`-th relation of [`assemble_system`]: `0`, `ε_1`, and
/// `−(n−1)ε_1 + ε_2 + ⋯ + ε_k` for `k ≥ 2`.
pub fn chain_prefactor(n: usize, k: usize) -> Weight {
    let mut c = vec![0i32; n];
    match k {
        0 => {}
        1 => c[0] = 1,
        _ => {
            c[0] = -(n as i32 - 1);
            for x in c.iter_mut().take(k).skip(1) {
                *x = 1;
            }
        }
    }
    Weight::from_vec(c)
}

/// The prefactor `−(2n−k−2)ε_1 + ε_2 + ⋯ + ε_{n−1}` as printed for `k ≥ 2`;
/// it agrees with [`chain_prefactor`] only at `k = n − 1`.
pub fn printed_prefactor(n: usize, k: usize) -> Weight {
    let mut c = vec![0i32; n];
    c[0] = -(2 * n as i32 - k as i32 - 2);
    for x in c.iter_mut().take(n - 1).skip(1) {
        *x = 1;
    }
    Weight::from_vec(c)
}

/// Per-`k` comparison of the derived chain against the symmetric-form system.
#[derive(Debug, Clone)]
pub struct PrefactorAudit {
    pub k: usize,
    /// `e^μ` with `e^μ · derived = literal`, if it exists.
    pub observed: Option<Weight>,
    pub expected: Weight,
    pub printed_agrees: bool,
}

impl PrefactorAudit {
    pub fn passed(&self) -> bool {
        self.observed.as_ref() == Some(&self.expected)
    }
}

pub fn prefactor_audit(n: usize) -> Result<Vec<PrefactorAudit>> {
    let chain = demazure_chain(n)?;
    Ok(chain
        .par_iter()
        .enumerate()
        .map(|(k, derived)| {
            let literal = system_relation(n, k);
            let printed_agrees = k >= 2 && derived.shift(&printed_prefactor(n, k)) == literal;
            PrefactorAudit { k, observed: derived.monomial_ratio(&literal), expected: chain_prefactor(n, k), printed_agrees }
        })
        .collect())
}

/// The system assembled from the Demazure chain scaled by [`chain_prefactor`].
pub fn assemble_system_derived(n: usize) -> Result<Vec<RelationVector>> {
    Ok(demazure_chain(n)?
        .iter()
        .enumerate()
        .map(|(k, r)| r.shift(&chain_prefactor(n, k)))
        .collect())
}

/// Solves `X_0 = 1` together with relations `k = n−1, …, 0`, where relation `k`
/// determines `X_{n−k}` through its unit leading coefficient.
pub fn solve_relations(n: usize, relations: &[RelationVector]) -> Result<Vec<GroupRingElement>> {
    if relations.len() != n {
        return Err(Error::Solver(format!("expected {n} relations, got {}", relations.len())));
    }
    let mut x = vec![GroupRingElement::one(n)];
    for k in (0..n).rev() {
        let rel = &relations[k];
        let lead_slot = n - k;
        if rel.top() != Some(lead_slot) {
            return Err(Error::Solver(format!("relation {k} does not end at X_{lead_slot}")));
        }
        let lead = rel.coeff(lead_slot);
        let unit = lead.as_monomial().is_some_and(|(_, c)| c.abs().is_one());
        if !unit {
            return Err(Error::Solver(format!("leading coefficient {lead} of relation {k} is not a unit")));
        }
        let mut rest = GroupRingElement::zero(n);
        for (l, xl) in x.iter().enumerate() {
            rest = &rest + &(rel.coeff(l) * xl);
        }
        x.push(rest.negated().exact_div(lead)?);
    }
    Ok(x)
}

/// Solution of the symmetric-form system: `(𝔽_0, …, 𝔽_n)`.
pub fn solve_system(n: usize) -> Result<Vec<GroupRingElement>> {
    if n == 0 {
        return Err(Error::Config("rank must be at least 1".into()));
    }
    solve_relations(n, &assemble_system(n))
}

#[cfg(test)]
mod tests {
    use super::super::symmetric::elementary_e;
    use super::*;

    #[test]
    fn rank_one_system_by_hand() {
        let sol = solve_system(1).unwrap();
        assert_eq!(sol[0], GroupRingElement::one(1));
        let e = |a| GroupRingElement::monomial(Weight::from_vec(vec![a]));
        assert_eq!(sol[1], &e(1) + &e(-1));
    }

    #[test]
    fn solution_is_elementary() {
        for n in 1..=5 {
            let sol = solve_system(n).unwrap();
            for (l, x) in sol.iter().enumerate() {
                assert_eq!(x, &elementary_e(n, l as i64), "n={n} l={l}");
            }
        }
    }

    #[test]
    fn prefactors_close_the_chain() {
        for n in 1..=5 {
            for a in prefactor_audit(n).unwrap() {
                assert!(a.passed(), "n={n} k={}: observed {:?}", a.k, a.observed);
                if a.k >= 2 {
                    assert_eq!(a.printed_agrees, a.k == n - 1, "n={n} k={}", a.k);
                }
            }
        }
    }

    #[test]
    fn both_assembly_paths_solve_alike() {
        for n in 1..=4 {
            let a = solve_relations(n, &assemble_system(n)).unwrap();
            let b = solve_relations(n, &assemble_system_derived(n).unwrap()).unwrap();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn non_unit_leading_coefficient_is_rejected() {
        let n = 1;
        let two = GroupRingElement::from_int(n, 2);
        let rel = RelationVector::from_coeffs(n, vec![GroupRingElement::one(n), two]);
        assert!(matches!(solve_relations(n, &[rel]), Err(Error::Solver(_))));
    }
}
