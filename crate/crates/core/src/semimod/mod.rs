//! Truncated model of `K_T(Q_G)`: classes `[O_{Q_G(w t_ξ)}(λ)]` with
//! coefficients in the shift operators, the elements `𝔽_l`, `𝔓_k`, `𝔔_k`, and
//! the recursion, symmetry and duality checks.

mod duality;
mod element;
pub mod factors;
mod ff;
mod recursion;

pub use duality::{
    check_duality, check_lemma_duality, check_s_equals_t, check_star_involution, jab_sets, star_map,
    Decomposition,
};
pub use element::{BasisKey, SemiModElement};
pub use factors::{eta, phi_q, phi_sinf, psi, theta_sinf, zeta, OperatorFactor};
pub use ff::{ff, ff_signed_sum, p_closed, q_closed, set_weight, subset_range, FfVariant};
pub use recursion::{check_factorization, check_recursion, check_symmetry, rec3_rhs, rec4_rhs};
