//! The z-side presentation: `F_l` and its variants, the ideal generators
//! `F_l − E_l`, Schubert-class polynomials, and their images in the
//! semi-infinite module.

mod checks;
mod dictionary;
mod poly;

pub use checks::{check_dictionary, check_lemma_polynomial, check_qkpres, check_schubert, check_specialization};
pub use dictionary::{monomial_ratio, to_semimod, to_semimod_series};
pub use poly::{
    elementary_z, f_poly, f_rational, factor_sum, ideal_generators, schubert_poly, zeta_eta_sum, RationalLaurent,
};
