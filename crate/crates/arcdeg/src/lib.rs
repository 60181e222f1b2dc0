//! Invariant subspaces of nilpotent operators, compared up to degeneration.
//!
//! A point of study is a pair `(V, U)`: a finite-dimensional vector space
//! `V` with a nilpotent operator, and an invariant subspace `U` that the
//! square of the operator kills. Pairs with fixed types `alpha` (of `U`),
//! `beta` (of `V`) and `gamma` (of `V/U`) form finitely many isomorphism
//! classes, indexed by subscripted Littlewood-Richardson fillings, and carry
//! a partial order: which classes collapse onto which under limits.
//!
//! This crate decides and witnesses that order combinatorially:
//!
//! - [`partition`]: partitions, conjugates, dominance, strips.
//! - [`tableau`]: the fillings ([`tableau::LrTableau`]) and their subscripted
//!   refinements ([`tableau::KleinTableau`]).
//! - [`arc`]: arc diagrams of refinements and their crossing counts.
//! - [`s2`]: decomposition of a pair into indecomposables and the hom-count
//!   tables between them.
//! - [`order`]: the hom-difference criterion, certificates, and the four
//!   moves (A)-(D) that walk chains through the order.
//! - [`poset`]: whole Hasse diagrams for a filling or a type.
//! - [`ff`]: a brute-force census over a small finite field, used as an
//!   independent oracle for every formula above.
//! - [`cli`]: the `arcdeg` command-line interface.

pub mod arc;
pub mod cli;
pub mod error;
pub mod ff;
pub mod order;
pub mod partition;
pub mod poset;
pub mod s2;
pub mod tableau;

pub use arc::ArcDiagram;
pub use error::{Error, Result};
pub use order::{DeltaHom, DeltaMesh, Move, Strategy};
pub use partition::Partition;
pub use s2::{Indec, Module};
pub use tableau::{KleinTableau, LrTableau};
