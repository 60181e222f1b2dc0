//! Brute-force verification over small prime fields.
//!
//! Everything the rest of the crate computes combinatorially can be checked
//! here by exhaustive linear algebra: hom spaces between explicit modules,
//! Jordan types of quotients, and full censuses of embeddings of a nilpotent
//! operator into a larger one, classified up to equivalence.

pub mod gf;
pub mod oracle;

pub use gf::{jordan_type, nilpotent_matrix, Echelon, Gf, Mat};
