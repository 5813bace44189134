//! Generalized polarization products on complex normed spaces.
//!
//! Every complex norm `‖·‖` induces a product `⟨x|y⟩` by applying the
//! polarization identity to the normalized vectors and rescaling by
//! `‖x‖·‖y‖`. On inner-product spaces this recovers the inner product;
//! on arbitrary norms it is merely conjugate-symmetric, real- and
//! imaginary-homogeneous, and — remarkably — still satisfies the
//! Cauchy-Schwarz inequality `|⟨x|y⟩| ≤ ‖x‖·‖y‖`.
//!
//! This crate provides:
//!
//! * [`norms`] — a closed, serializable family of norms on ℂⁿ with
//!   evaluation, sampling-based axiom validation, and seeded random
//!   generation;
//! * [`product`] — the polarization product and checkers for its
//!   algebraic properties;
//! * [`csb`] — the full Cauchy-Schwarz proof machinery on ℂ² (the
//!   s,t,v,w reduction, canonical orientation, the three-case split
//!   and the supporting inequality chain) as numeric checks producing
//!   a [`csb::ProofTrace`];
//! * [`explorer`] — seeded multi-start pattern search for stress
//!   testing the inequality and measuring phase-homogeneity defects.
//!
//! All operations are pure functions of their inputs; batch drivers are
//! data-parallel via rayon when the `parallel` feature (default) is
//! enabled, with bitwise-identical results in sequential mode.

pub mod batch;
pub mod check;
pub mod csb;
mod error;
pub mod explorer;
mod linalg;
pub mod norms;
pub mod numeric;
pub mod product;
pub mod seeds;
pub mod tolerances;
pub mod vector;

pub use check::Check;
pub use error::Error;
pub use linalg::ComplexMatrix;
pub use norms::{
    eval_norm, random_norm, validate_norm, NormDescriptor, NormFamily, NormValidation, PExponent,
};
pub use product::{polarization_product, ProductValue};
pub use vector::CVector;
