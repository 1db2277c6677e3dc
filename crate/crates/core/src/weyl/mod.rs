//! The type `C_n` Weyl group as signed permutations, its roots and coroots,
//! and the Demazure operators on ℤ[P].

mod demazure;
pub mod letter;
mod perm;
mod root;

pub use demazure::{demazure_by_division, demazure_d, demazure_monomial};
pub use letter::LetterSet;
pub use perm::{enumerate_group, SignedPerm, MAX_ENUMERATION_RANK};
pub use root::{is_positive_weight, rho, Coroot, RootC};

use crate::rings::Weight;

/// `⟨λ, ξ⟩` for a coroot `ξ` given in the simple-coroot basis.
pub fn pairing(lambda: &Weight, xi: &Coroot) -> i64 {
    xi.pair(lambda)
}
