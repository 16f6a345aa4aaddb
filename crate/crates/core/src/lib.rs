//! Skew affine fibrations, Hurwitz-Radon families and square identities,
//! computed in exact arithmetic.
//!
//! `R^n` is fibered by pairwise skew affine `p`-planes exactly when
//! `p <= rho(n - p) - 1`, `rho` being the Hurwitz-Radon function. This crate
//! evaluates that criterion ([`rho`]), builds maximal Hurwitz-Radon matrix
//! families ([`hrfamily`]), turns them into square identities ([`squares`]),
//! explicit fibrations ([`fibration`]) and tangent vector fields on spheres
//! ([`vfields`]), and checks every claimed property with exact integer or
//! rational arithmetic.

pub mod algebras;
pub mod cli;
pub mod error;
pub mod fibration;
pub mod hrfamily;
pub mod linalg;
pub mod matrix;
pub mod poly;
pub mod rho;
pub mod sampling;
pub mod squares;
pub mod vfields;

pub use error::{Error, Result};
pub use fibration::{
    build_fibration, check_pairwise_skew, compose, fiber_through, gram, project, restrict,
    ComposedFibration, FiberSpec, SkewFibration, SkewVerdict,
};
pub use hrfamily::{
    construct_family, normalize_last_identity, verify_hurwitz_equations,
    verify_linear_combinations, HurwitzRadonFamily, NormalizedFamily,
};
pub use linalg::Rational;
pub use matrix::IntMatrix;
pub use rho::{
    exists_fibration, fiber_dims, generate_table, is_dominant, is_doubly_dominant, rho,
    scan_propositions,
};
pub use squares::{identity_from_family, verify_identity, SquareIdentity};
pub use vfields::{check_independence, tangent_fields, TangentFieldSet};
