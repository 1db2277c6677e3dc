//! Scalar relations among the unknowns `X_l = 𝔽_l` with ℤ[P] coefficients:
//! the Demazure derivation chain, the recurrence system and its solution.

mod checks;
mod derivation;
mod generating;
mod symmetric;
mod system;
mod vector;

pub use checks::{
    check_complete_symmetric, check_derivation, check_generating_identities, check_module_link, check_relations,
    check_system, complete_symmetric_failures,
};
pub use derivation::{
    alternating_relation, base_relation, demazure_chain, demazure_step, derive_secondary,
    folded_alternating_relation, induction_step, nested_sum, secondary_literal, system_arbitrary,
};
pub use generating::{
    combined_lhs, combined_rhs, elementary_product, elementary_series, h_difference_product, h_difference_series,
    TSeries,
};
pub use symmetric::{
    complete_h, complete_h_bruteforce, complete_h_vars, complete_table, doubled_variables, elementary_e,
    elementary_table, elementary_vars,
};
pub use system::{
    assemble_system, assemble_system_derived, chain_prefactor, prefactor_audit, printed_prefactor, solve_relations,
    solve_system, system_relation, PrefactorAudit,
};
pub use vector::RelationVector;
