//! Translation of z-polynomials into the semi-infinite module:
//! `z_j ↦ (1 − 𝒯_{j−1})/(1 − 𝒯_j) · [O(−ε_j)]`, `z_j^{−1}` to its inverse
//! `(1 − 𝒯_j)/(1 − 𝒯_{j−1}) · [O(ε_j)]`, `Q_j ↦ 𝒯_j`, `e^μ ↦ e^{−μ}`.

use super::poly::RationalLaurent;
use crate::error::{Error, Result};
use crate::rings::{NovikovSeries, RationalSeries, RingElement, Truncation, Weight, ZLaurentElement};
use crate::semimod::SemiModElement;
use crate::weyl::SignedPerm;

fn one_minus(n: usize, j: usize) -> RationalSeries {
    RationalSeries::from_poly(&NovikovSeries::one_minus_var(n, j, None)).expect("exact")
}

/// The scalar attached to `z^a`: `Π_j ((1 − 𝒯_{j−1})/(1 − 𝒯_j))^{a_j}`.
pub fn monomial_ratio(a: &Weight) -> RationalSeries {
    let n = a.rank();
    let mut out = RationalSeries::one(n);
    for j in 1..=n {
        let e = a.coord(j);
        let (up, down) = if e > 0 { (j - 1, j) } else { (j, j - 1) };
        for _ in 0..e.unsigned_abs() {
            out = &(&out * &one_minus(n, up)) * &RationalSeries::geometric(n, down);
        }
    }
    out
}

/// `e^μ ↦ e^{−μ}` on every coefficient of a quotient.
fn invert_weights(c: &RationalSeries) -> RationalSeries {
    let n = c.numerator().rank();
    let num = c.numerator().map_coeffs(|x| x.map_weights(|w| -w));
    let mut out = RationalSeries::from_poly(&num).expect("exact numerator");
    for (j, &m) in c.denominator().iter().enumerate() {
        for _ in 0..m {
            out = &out * &RationalSeries::geometric(n, j + 1);
        }
    }
    out
}

/// Image in the semi-infinite module; exact (`trunc = None`) only when every
/// image coefficient is a polynomial in `𝒯`.
pub fn to_semimod(p: &RationalLaurent, trunc: Truncation) -> Result<SemiModElement> {
    let n = p.rank();
    let mut out = SemiModElement::zero(n, trunc);
    for (a, c) in p.terms() {
        let image = &invert_weights(c) * &monomial_ratio(a);
        let series = match trunc {
            Some(d) => image.to_series(d),
            None => image.to_polynomial().ok_or_else(|| {
                Error::UnsupportedOperand(format!("image coefficient {image} of z^{a} needs a truncation degree"))
            })?,
        };
        out.add_term(SignedPerm::identity(n), -a, series);
    }
    Ok(out)
}

/// [`to_semimod`] for an already expanded Laurent polynomial, to degree `d`.
pub fn to_semimod_series(p: &ZLaurentElement, d: u32) -> Result<SemiModElement> {
    let mut rational = RationalLaurent::zero(p.rank());
    for (a, c) in p.terms() {
        let exact = c.with_truncation(Some(d))?;
        let mut poly = NovikovSeries::zero(exact.rank(), None);
        for (e, x) in exact.terms() {
            poly.add_term_in_place(e.clone(), x.clone());
        }
        rational.add_term(a.clone(), RationalSeries::from_poly(&poly)?);
    }
    to_semimod(&rational, Some(d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::GroupRingElement;

    #[test]
    fn z_times_inverse_is_one() {
        for n in 1..=3 {
            for j in 1..=n {
                let mut a = vec![0; n];
                a[j - 1] = 1;
                let mut b = vec![0; n];
                b[j - 1] = -1;
                let r = &monomial_ratio(&Weight::from_vec(a)) * &monomial_ratio(&Weight::from_vec(b));
                assert_eq!(r, RationalSeries::one(n));
            }
        }
    }

    #[test]
    fn one_maps_to_one() {
        let mut p = RationalLaurent::zero(2);
        p.add_scalar(&GroupRingElement::one(2));
        assert_eq!(to_semimod(&p, None).unwrap(), SemiModElement::line_bundle(Weight::zero(2), None));
    }
}
