//! Exact-arithmetic kernel for finite-dimensional color Hom-algebras given by
//! structure constants.
//!
//! An algebra is a graded basis, a bicharacter on the grading group, a dense
//! structure tensor `e_i · e_j = Σ_k c[i][j][k] e_k`, and an even twisting map
//! `α`. The [`checks`] module decides the standard identities (Hom-associative,
//! Hom-Novikov, Hom-Lie, ...) exactly over basis tuples and returns a witness on
//! failure; [`constructions`] and [`quadratic`] build new algebras from old ones
//! (twists, commutators, derivation products, tensor and direct sums); the
//! [`catalog`] holds reproducible instances and a seeded operator search.

pub mod catalog;
pub mod checks;
pub mod constructions;
mod error;
pub mod graded;
pub mod grading;
pub mod linalg;
pub mod quadratic;
pub mod scalar;

pub use error::Error;
pub use graded::{ColorHomAlgebra, GradedBasis, GradedLinearMap, StructureTensor};
pub use grading::{Bicharacter, GradeGroup, GroupElement};
pub use linalg::{Matrix, Vector};
pub use scalar::{Field, Scalar};

pub type Result<T, E = Error> = std::result::Result<T, E>;
