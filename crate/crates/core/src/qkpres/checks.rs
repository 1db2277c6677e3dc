use num_integer::binomial;
use rayon::prelude::*;

use super::dictionary::to_semimod;
use super::poly::{elementary_z, f_rational, factor_sum, ideal_generators, schubert_poly, zeta_eta_sum};
use crate::error::Result;
use crate::relations::elementary_e;
use crate::rings::{NovikovSeries, QExtElement, RingElement, Truncation, ZLaurentElement};
use crate::semimod::{ff, p_closed, phi_q, q_closed, FfVariant};
use crate::verify::CheckResult;

const SUITE: &str = "qkpres";

fn variants(n: usize) -> Vec<(FfVariant, usize)> {
    let mut out = vec![(FfVariant::Full, 2 * n)];
    for k in 1..=n {
        out.push((FfVariant::Upper(k), k));
        out.push((FfVariant::Barred(k), 2 * n - k));
    }
    out
}

/// `Σ_I (Πζ_I)(Πη_I) z^I = Σ_I (Πφ^Q_I) z^I` for every `l`.
pub fn check_lemma_polynomial(n: usize) -> CheckResult {
    let fails: Vec<String> = (0..=2 * n)
        .into_par_iter()
        .filter(|&l| zeta_eta_sum(n, l) != factor_sum(n, l, phi_q))
        .map(|l| format!("l={l}"))
        .collect();
    CheckResult::from_failures(SUITE, format!("sum of zeta*eta = sum of phi^Q (n={n})"), 2 * n + 1, &fails)
}

/// `to_semimod(F_l^{variant}) = 𝔽_l^{variant}`, exactly and (if given) truncated.
pub fn check_dictionary(n: usize, trunc: Truncation) -> Result<Vec<CheckResult>> {
    let cases: Vec<(FfVariant, usize)> =
        variants(n).into_iter().flat_map(|(v, top)| (0..=top).map(move |l| (v, l))).collect();
    let mut out = Vec::new();
    let modes: Vec<Truncation> = match trunc {
        Some(d) => vec![None, Some(d)],
        None => vec![None],
    };
    for mode in modes {
        let fails: Vec<String> = cases
            .par_iter()
            .map(|&(v, l)| -> Result<Option<String>> {
                let got = to_semimod(&f_rational(n, l, v)?, mode)?;
                let want = ff(n, l, v, mode)?;
                Ok(got.first_difference(&want).map(|(key, a, b)| format!("{v:?} l={l} at {key:?}: {a} vs {b}")))
            })
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .flatten()
            .collect();
        let label = match mode {
            None => "exact".to_string(),
            Some(d) => format!("D={d}"),
        };
        out.push(CheckResult::from_failures(
            SUITE,
            format!("dictionary maps F_l to module F_l (n={n}, {label})"),
            cases.len(),
            &fails,
        ));
    }
    let mut sym = Vec::new();
    for l in 1..=n {
        if to_semimod(&f_rational(n, n + l, FfVariant::Full)?, None)?
            != to_semimod(&f_rational(n, n - l, FfVariant::Full)?, None)?
        {
            sym.push(format!("l={l}"));
        }
    }
    out.push(CheckResult::from_failures(SUITE, format!("images of F_(n+l), F_(n-l) agree (n={n})"), n, &sym));
    Ok(out)
}

/// Schubert polynomials map to the closed forms of the module classes.
pub fn check_schubert(n: usize) -> Result<CheckResult> {
    let mut fails = Vec::new();
    for k in 1..=n {
        if to_semimod(&schubert_poly(n, k, false)?, None)? != p_closed(n, k, None)? {
            fails.push(format!("upper k={k}"));
        }
        if to_semimod(&schubert_poly(n, k, true)?, None)? != q_closed(n, k, None)? {
            fails.push(format!("barred k={k}"));
        }
    }
    Ok(CheckResult::from_failures(SUITE, format!("Schubert polynomials map to closed forms (n={n})"), 2 * n, &fails))
}

/// `F_l|_{Q=0} = e_l(z, z^{−1})` with `C(2n, l)` terms, and the ideal
/// generators specialize to the classical ones.
pub fn check_specialization(n: usize) -> Result<Vec<CheckResult>> {
    let fails: Vec<String> = (0..=2 * n)
        .into_par_iter()
        .map(|l| -> Result<Option<String>> {
            let at_zero = f_rational(n, l, FfVariant::Full)?.specialize_q_zero();
            let want = elementary_z(n, l);
            let count = binomial(2 * n, l);
            Ok(if at_zero != want {
                Some(format!("l={l}: {at_zero}"))
            } else if at_zero.len() > count {
                Some(format!("l={l}: {} terms, at most {count} expected", at_zero.len()))
            } else {
                None
            })
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    let mut out = vec![CheckResult::from_failures(SUITE, format!("F_l at Q=0 is e_l(z) (n={n})"), 2 * n + 1, &fails)];
    let gens = ideal_generators(n)?;
    let mut gen_fails = Vec::new();
    if gens.len() != n {
        gen_fails.push(format!("{} generators", gens.len()));
    }
    for (i, g) in gens.iter().enumerate() {
        let l = i + 1;
        let e = elementary_e(n, l as i64).negated();
        let scalar = ZLaurentElement::from_series(NovikovSeries::constant(QExtElement::from_group_ring(&e), None));
        if g.specialize_q_zero() != &elementary_z(n, l) + &scalar {
            gen_fails.push(format!("l={l}"));
        }
    }
    out.push(CheckResult::from_failures(SUITE, format!("ideal generators at Q=0 (n={n})"), n, &gen_fails));
    Ok(out)
}

/// Every qkpres check at rank `n`.
pub fn check_qkpres(n: usize, trunc: Truncation) -> Result<Vec<CheckResult>> {
    let mut out = vec![check_lemma_polynomial(n)];
    out.extend(check_dictionary(n, trunc)?);
    out.push(check_schubert(n)?);
    out.extend(check_specialization(n)?);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_checks_pass_small_rank() {
        for n in 1..=2 {
            for c in check_qkpres(n, Some(2 * n as u32 + 2)).unwrap() {
                assert!(c.passed, "{}: {}", c.name, c.detail);
            }
        }
    }
}
