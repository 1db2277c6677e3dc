//! The Demazure derivation chain: base relation, its `D_1` image, and the
//! successive `D_k` images, each next to its closed form.

use num_bigint::BigInt;

use super::vector::RelationVector;
use crate::error::{Error, Result};
use crate::rings::{GroupRingElement, Weight};

fn eps(n: usize, i: usize) -> Weight {
    Weight::epsilon(n, i as i32)
}

fn sign(l: usize) -> i64 {
    if l.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// `Σ_{r=0}^{len-1} e^{r·step}`.
fn geometric_sum(n: usize, step: &Weight, len: i64) -> GroupRingElement {
    GroupRingElement::from_terms(n, (0..len.max(0)).map(|r| (step.scaled(r as i32), BigInt::from(1))))
}

/// `Σ_{l<n} (−1)^l (e^{−(n−l)ε_1} + e^{(n−l)ε_1}) X_l + (−1)^n X_n`.
pub fn base_relation(n: usize) -> RelationVector {
    let e1 = eps(n, 1);
    let mut coeffs = Vec::with_capacity(n + 1);
    for l in 0..n {
        let d = (n - l) as i32;
        let c = GroupRingElement::from_terms(n, [(e1.scaled(-d), BigInt::from(1)), (e1.scaled(d), BigInt::from(1))]);
        coeffs.push(c.scale_int(sign(l)));
    }
    coeffs.push(GroupRingElement::from_int(n, sign(n)));
    RelationVector::from_coeffs(n, coeffs)
}

/// `Σ_{l=0}^{2n} (−1)^l e^{lε_1} X_l`, the alternating sum produced by the last
/// step of the barred recursion.
pub fn alternating_relation(n: usize) -> RelationVector {
    let e1 = eps(n, 1);
    let coeffs = (0..=2 * n)
        .map(|l| GroupRingElement::monomial(e1.scaled(l as i32)).scale_int(sign(l)))
        .collect();
    RelationVector::from_coeffs(n, coeffs)
}

/// `e^{−nε_1}` times [`alternating_relation`], folded by `X_{n+l} = X_{n−l}`.
pub fn folded_alternating_relation(n: usize) -> Result<RelationVector> {
    alternating_relation(n).shift(&eps(n, 1).scaled(-(n as i32))).fold_symmetric()
}

/// Multiply by `e^{ε_k}`, apply `D_k`, divide by `e^{ε_k}(1 − e^{ε_k+ε_{k+1}})`.
pub fn demazure_step(rel: &RelationVector, k: usize) -> Result<RelationVector> {
    let n = rel.rank();
    if k == 0 || k >= n {
        return Err(Error::Config(format!("Demazure step index {k} outside 1..{n}")));
    }
    let ek = eps(n, k);
    let divisor = GroupRingElement::from_terms(
        n,
        [(ek.clone(), BigInt::from(1)), (&ek.scaled(2) + &eps(n, k + 1), BigInt::from(-1))],
    );
    rel.shift(&ek).demazure(k).exact_div(&divisor).map_err(|e| {
        Error::CheckFailed(format!("derivation mismatch at step {k}: {e}"))
    })
}

/// `D_1`-image of a relation (normally [`base_relation`]).
pub fn derive_secondary(rel: &RelationVector) -> Result<RelationVector> {
    if rel.rank() < 2 {
        return Err(Error::Config("the secondary relation needs n ≥ 2".into()));
    }
    demazure_step(rel, 1)
}

/// `Σ_{l<n} (−1)^l e^{−(n−l)ε_1} (Σ_{r<n−l} e^{r(ε_1−ε_2)}) (Σ_{s<n−l} e^{s(ε_1+ε_2)}) X_l`.
pub fn secondary_literal(n: usize) -> RelationVector {
    assert!(n >= 2);
    let (e1, e2) = (eps(n, 1), eps(n, 2));
    let minus = &e1 - &e2;
    let plus = &e1 + &e2;
    let mut out = RelationVector::zero(n);
    for l in 0..n {
        let len = (n - l) as i64;
        let c = (&geometric_sum(n, &minus, len) * &geometric_sum(n, &plus, len))
            .shift(&e1.scaled(-(len as i32)))
            .scale_int(sign(l));
        out.add_to(l, &c);
    }
    out
}

/// The nested sum over `r_1 ≥ ⋯ ≥ r_D` and `s_1, …, s_D`:
///
/// * `r_1 ∈ [D, top]`, `s_1 ∈ [0, top − r_1]`;
/// * `r_i ∈ [D + 1 − i, r_{i−1} − 1]`, `s_i ∈ [0, r_{i−1} − 1 − r_i]`;
///
/// of `e^{(first + r_1 + 2s_1)ε_1 + Σ_{i=2}^{D} (−r_{i−1} + r_i + 2s_i + mid)ε_i + (−r_D + mid)ε_{D+1}}`
/// times `Σ_{p<r_D} e^{p(ε_{D+1}−ε_{D+2})} Σ_{q<r_D} e^{q(ε_{D+1}+ε_{D+2})}`,
/// in rank `n ≥ D + 2`.
pub fn nested_sum(n: usize, depth: usize, top: i64, first: i64, mid: i64) -> GroupRingElement {
    assert!(depth >= 1 && n >= depth + 2);
    let mut out = GroupRingElement::zero(n);
    let mut exps = vec![0i64; n];
    exps[0] = first;
    nested_level(n, depth, 1, top, mid, &mut exps, &mut out);
    out
}

fn nested_level(
    n: usize,
    depth: usize,
    i: usize,
    bound: i64,
    mid: i64,
    exps: &mut [i64],
    out: &mut GroupRingElement,
) {
    // level i chooses r_i ∈ [depth+1−i, bound] and s_i ∈ [0, bound − r_i]
    let lo = (depth + 1 - i) as i64;
    for r in lo..=bound {
        for s in 0..=bound - r {
            let saved = (exps[i - 1], exps[i]);
            exps[i - 1] += r + 2 * s;
            exps[i] += mid - r;
            if i < depth {
                nested_level(n, depth, i + 1, r - 1, mid, exps, out);
            } else {
                let base = Weight::from_vec(exps.iter().map(|&x| x as i32).collect());
                let (a, b) = (eps(n, depth + 1), eps(n, depth + 2));
                let tail = &geometric_sum(n, &(&a - &b), r) * &geometric_sum(n, &(&a + &b), r);
                *out = &*out + &tail.shift(&base);
            }
            exps[i - 1] = saved.0;
            exps[i] = saved.1;
        }
    }
}

/// Closed form of the `k`-th relation of the chain, `2 ≤ k ≤ n − 1`:
/// `Σ_{l ≤ n−k} (−1)^l N_{k−1}(top = n−l−1, first = l) X_l`.
pub fn system_arbitrary(n: usize, k: usize) -> Result<RelationVector> {
    if k < 2 || k + 1 > n {
        return Err(Error::Config(format!("system_arbitrary needs 2 ≤ k ≤ n − 1, got k={k}, n={n}")));
    }
    let mut out = RelationVector::zero(n);
    for l in 0..=n - k {
        let c = nested_sum(n, k - 1, (n - l - 1) as i64, l as i64, 0).scale_int(sign(l));
        out.add_to(l, &c);
    }
    Ok(out)
}

/// One step of the chain: `k = 2` starts from `e^{nε_1}·prev` (with `prev`
/// the secondary relation); larger `k` use `prev` directly.
pub fn induction_step(prev: &RelationVector, k: usize) -> Result<RelationVector> {
    let n = prev.rank();
    if k == 2 {
        demazure_step(&prev.shift(&eps(n, 1).scaled(n as i32)), 2)
    } else {
        demazure_step(prev, k)
    }
}

/// The derived relations for `k = 0, …, n − 1`: base, secondary, then the
/// induction steps.
pub fn demazure_chain(n: usize) -> Result<Vec<RelationVector>> {
    let mut out = vec![base_relation(n)];
    if n >= 2 {
        out.push(derive_secondary(&out[0])?);
    }
    for k in 2..n {
        let next = induction_step(&out[k - 1], k)?;
        out.push(next);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::RingElement;

    #[test]
    fn base_relation_small_ranks() {
        let r = base_relation(2);
        let e = |a: i32| GroupRingElement::monomial(Weight::from_vec(vec![a, 0]));
        assert_eq!(r.coeff(0), &(&e(-2) + &e(2)));
        assert_eq!(r.coeff(1), &(&e(-1) + &e(1)).scale_int(-1));
        assert_eq!(r.coeff(2), &GroupRingElement::one(2));
    }

    #[test]
    fn fold_recovers_base_relation() {
        for n in 1..=5 {
            assert_eq!(folded_alternating_relation(n).unwrap(), base_relation(n));
        }
    }

    #[test]
    fn secondary_matches_literal() {
        for n in 2..=5 {
            assert_eq!(derive_secondary(&base_relation(n)).unwrap(), secondary_literal(n), "n={n}");
        }
    }

    #[test]
    fn secondary_last_term_collapses() {
        for n in 2..=4 {
            let c = secondary_literal(n).coeff(n - 1).clone();
            let want = GroupRingElement::monomial(Weight::epsilon(n, -1)).scale_int(sign(n - 1));
            assert_eq!(c, want);
            assert!(secondary_literal(n).coeff(n).is_zero());
        }
    }

    #[test]
    fn chain_matches_nested_sums() {
        for n in 3..=5 {
            let chain = demazure_chain(n).unwrap();
            for k in 2..n {
                assert_eq!(chain[k], system_arbitrary(n, k).unwrap(), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn last_slot_is_single_tuple() {
        let n = 4;
        for k in 2..n {
            let rel = system_arbitrary(n, k).unwrap();
            assert_eq!(rel.coeff(n - k).len(), 1);
        }
    }
}
