//! Exact algebra for the torus-equivariant quantum K-ring of type C flag
//! manifolds: coefficient rings, the signed permutation group, the quantum
//! Bruhat graph and alcove model, inverse Chevalley evaluation, the
//! semi-infinite module model, scalar relations, and the Borel-type
//! presentation.

pub mod alcove;
pub mod error;
pub mod ichevalley;
pub mod qbg;
pub mod qkpres;
pub mod relations;
pub mod rings;
pub mod semimod;
pub mod verify;
pub mod weyl;

pub use error::{Error, Result};
