//! Exact computer algebra for free quasi-symmetric functions, noncommutative
//! symmetric functions and their signed and colored variants, together with
//! the enumeration oracles (alternating permutations, snakes, valley-signed
//! permutations) the algebraic identities are checked against.

pub mod catalog;
pub mod classes;
pub mod coeff;
pub mod composition;
pub mod egf;
pub mod error;
pub mod fqsym;
pub mod fqsym2;
pub mod graded;
pub mod module;
pub mod mr;
pub mod perm;
pub mod ssym;
pub mod sym;
pub mod tilde_matrices;
pub mod trees;
pub mod triangles;
pub mod verify;

pub use coeff::Coeff;
pub use composition::{BComposition, Composition};
pub use error::{Error, Result};
pub use graded::GradedSeries;
pub use module::{Basis, BasisKey, ModuleElement, SignedComposition};
pub use perm::{ColoredPermutation, LetterOrder};
