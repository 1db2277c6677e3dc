use rayon::prelude::*;

use super::element::SemiModElement;
use super::factors::{eta, phi_q, phi_sinf, psi, theta_sinf, zeta, OperatorFactor};
use super::ff::{ff, p_closed, q_closed, FfVariant};
use crate::error::Result;
use crate::rings::{RationalSeries, RingElement, Truncation, Weight};
use crate::verify::CheckResult;
use crate::weyl::letter::letters;
use crate::weyl::LetterSet;

const SUITE: &str = "semimod";

fn eps(n: usize, x: i32) -> Weight {
    Weight::epsilon(n, x)
}

/// Right-hand side of the recursion producing `𝔓_{k+1}` from `𝔓_0, …, 𝔓_k`,
/// `0 ≤ k ≤ n − 1`, with `p(j)` supplying `𝔓_j`.
pub fn rec3_rhs<F>(n: usize, k: usize, p: F) -> Result<SemiModElement>
where
    F: Fn(usize) -> Result<SemiModElement>,
{
    let pk = p(k)?;
    let twist = -eps(n, k as i32 + 1);
    let mut out = (&pk - &pk.scale_exp(&eps(n, 1)).tensor(&twist)).with_truncation(pk.truncation())?;
    for j in 1..=k {
        let mu = &eps(n, j as i32) + &twist;
        let diff = &p(j - 1)? - &p(j)?;
        out = out.checked_add(&diff.shift_range(j, k).tensor(&mu))?;
    }
    Ok(out)
}

/// Right-hand side of the recursion producing `𝔔_{k−1}`, `1 ≤ k ≤ n`, from
/// `𝔔_k, …, 𝔔_n` (`q(j)`) and `𝔓_0, …, 𝔓_k` (`p(j)`).
pub fn rec4_rhs<F, G>(n: usize, k: usize, q: F, p: G) -> Result<SemiModElement>
where
    F: Fn(usize) -> Result<SemiModElement>,
    G: Fn(usize) -> Result<SemiModElement>,
{
    let qk = q(k)?;
    let ek = eps(n, k as i32);
    let mut out = &qk - &qk.scale_exp(&eps(n, 1)).tensor(&ek);
    for j in k + 1..=n {
        let diff = &q(j)? - &q(j - 1)?;
        out = out.checked_add(&diff.shift_range(k, j - 1).tensor(&(&ek - &eps(n, j as i32))))?;
    }
    for j in 1..=k {
        let diff = &p(j - 1)? - &p(j)?;
        out = out.checked_add(&diff.shift_range(j, n).tensor(&(&ek + &eps(n, j as i32))))?;
    }
    Ok(out)
}

/// Names the first basis key and `𝒯`-monomial where `got` and `want` differ.
pub(crate) fn describe_difference(got: &SemiModElement, want: &SemiModElement) -> String {
    match got.first_difference(want) {
        None => "equal".into(),
        Some(((w, lambda), a, b)) => {
            let diff = &a - &b;
            let mono = diff.terms().next().map(|(e, _)| e.render("T")).unwrap_or_default();
            format!("differs at (w={w}, λ={lambda}, T-monomial {mono}): got {a}, expected {b}")
        }
    }
}

fn compare(label: String, got: Result<SemiModElement>, want: Result<SemiModElement>) -> Option<String> {
    match (got, want) {
        (Ok(g), Ok(w)) if g == w => None,
        (Ok(g), Ok(w)) => Some(format!("{label}: {}", describe_difference(&g, &w))),
        (Err(e), _) | (_, Err(e)) => Some(format!("{label}: {e}")),
    }
}

/// Checks that the closed forms of `𝔓_k` and `𝔔_k` satisfy both recursions,
/// that `𝔓_0 = 1`, `𝔓_n = 𝔔_n`, and that the last step of the `𝔔` recursion
/// lands on `Σ_l (−1)^l e^{lε_1} 𝔽_l`.
pub fn check_recursion(n: usize, trunc: Truncation) -> Vec<CheckResult> {
    let p = |j: usize| p_closed(n, j, trunc);
    let q = |j: usize| q_closed(n, j, trunc);
    let mut out = Vec::new();

    let base = compare("P_0".into(), p(0), Ok(SemiModElement::line_bundle(Weight::zero(n), trunc)));
    out.push(CheckResult::from_failures(SUITE, format!("P_0 = 1 (n={n})"), 1, base.as_slice()));

    let fails: Vec<String> = (0..n)
        .into_par_iter()
        .filter_map(|k| compare(format!("k={k}"), rec3_rhs(n, k, p), p(k + 1)))
        .collect();
    out.push(CheckResult::from_failures(SUITE, format!("closed forms satisfy the P-recursion (n={n})"), n, &fails));

    let fails: Vec<String> = (1..=n)
        .into_par_iter()
        .filter_map(|k| compare(format!("k={k}"), rec4_rhs(n, k, q, p), q(k - 1)))
        .collect();
    out.push(CheckResult::from_failures(SUITE, format!("closed forms satisfy the Q-recursion (n={n})"), n, &fails));

    let top = compare("P_n vs Q_n".into(), p(n), q(n));
    out.push(CheckResult::from_failures(SUITE, format!("P_n = Q_n (n={n})"), 1, top.as_slice()));

    let full = compare(
        "k=1".into(),
        rec4_rhs(n, 1, q, p),
        super::ff::ff_signed_sum(n, FfVariant::Full, trunc),
    );
    out.push(CheckResult::from_failures(
        SUITE,
        format!("Q-recursion at k=1 yields the alternating sum of F_l (n={n})"),
        1,
        full.as_slice(),
    ));
    out
}

/// `𝔽_l = 𝔽_{2n−l}` for `0 ≤ l ≤ n`.
pub fn check_symmetry(n: usize, trunc: Truncation) -> CheckResult {
    let fails: Vec<String> = (0..=n)
        .into_par_iter()
        .filter_map(|l| {
            compare(format!("l={l}"), ff(n, l, FfVariant::Full, trunc), ff(n, 2 * n - l, FfVariant::Full, trunc))
        })
        .collect();
    CheckResult::from_failures(SUITE, format!("F_l = F_(2n-l) (n={n})"), n + 1, &fails)
}

type FactorFn = fn(&LetterSet, i32) -> OperatorFactor;

fn product_check(
    n: usize,
    trunc: Truncation,
    lhs: (FactorFn, FactorFn),
    rhs: FactorFn,
    label: &str,
) -> Vec<String> {
    (0u32..1 << (2 * n))
        .into_par_iter()
        .flat_map_iter(|bits| {
            let set = LetterSet::from_bits(n, bits);
            letters(n).into_iter().filter_map(move |x| {
                let (a, b, c) = (lhs.0(&set, x), lhs.1(&set, x), rhs(&set, x));
                let exact = &a.to_rational(n) * &b.to_rational(n) == c.to_rational(n);
                let series_ok = match trunc {
                    Some(_) => {
                        let s = |f: OperatorFactor| f.to_series(n, trunc).expect("truncated");
                        s(a).checked_mul(&s(b)).map(|p| p == s(c)).unwrap_or(false)
                    }
                    None => true,
                };
                (!(exact && series_ok)).then(|| format!("{label} fails at I={set}, x={x}"))
            })
        })
        .collect()
}

fn exact_product_rational(set: &LetterSet, f: FactorFn) -> RationalSeries {
    super::factors::product_rational(set, f)
}

/// `φ^sinf·θ^sinf = ψ` and `ζ·η = φ^Q` letter by letter, exactly and (when
/// `trunc` is set) as truncated series; also the full products over `[1, 1̄]`.
pub fn check_factorization(n: usize, trunc: Truncation) -> Vec<CheckResult> {
    let count = (1usize << (2 * n)) * 2 * n;
    let a = product_check(n, trunc, (phi_sinf, theta_sinf), psi, "phi*theta = psi");
    let b = product_check(n, trunc, (zeta, eta), phi_q, "zeta*eta = phi^Q");
    let whole: Vec<String> = (0u32..1 << (2 * n))
        .into_par_iter()
        .filter_map(|bits| {
            let set = LetterSet::from_bits(n, bits);
            let lhs = &exact_product_rational(&set, phi_sinf) * &exact_product_rational(&set, theta_sinf);
            (lhs != exact_product_rational(&set, psi)).then(|| format!("product over letters fails at I={set}"))
        })
        .collect();
    vec![
        CheckResult::from_failures(SUITE, format!("phi^sinf * theta^sinf = psi letterwise (n={n})"), count, &a),
        CheckResult::from_failures(SUITE, format!("zeta * eta = phi^Q letterwise (n={n})"), count, &b),
        CheckResult::from_failures(SUITE, format!("phi^sinf * theta^sinf = psi over [1,1bar] (n={n})"), 1 << (2 * n), &whole),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recursion_small_ranks() {
        for n in 1..=3 {
            for r in check_recursion(n, None) {
                assert!(r.passed, "{r:?}");
            }
        }
    }

    #[test]
    fn symmetry_small_ranks() {
        for n in 1..=3 {
            assert!(check_symmetry(n, None).passed);
        }
    }

    #[test]
    fn factorizations_hold() {
        for n in 1..=3 {
            for r in check_factorization(n, Some(2 * n as u32 + 2)) {
                assert!(r.passed, "{r:?}");
            }
        }
    }
}
