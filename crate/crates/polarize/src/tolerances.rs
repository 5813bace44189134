//! Numeric tolerances used across the crate.
//!
//! Checks compare double-precision evaluations of exact inequalities and
//! identities, so every threshold is an error budget, not a model
//! parameter. Relative tolerances are applied against a scale formed from
//! the magnitudes of the operands (`1 + |operands|`).

/// Base relative tolerance for single-rounding identities and the norm
/// axioms.
pub const REL_TOL: f64 = 1e-9;

/// `⟨x|x⟩ = ‖x‖²` and the stvw/product consistency identities; these
/// follow the same arithmetic path twice and stay near machine epsilon.
pub const SELF_PRODUCT_TOL: f64 = 1e-12;

/// The final Cauchy-Schwarz bound `|4⟨e₁|e₂⟩|² ≤ 16` compounds several
/// squarings, so it gets a looser budget.
pub const FINAL_BOUND_TOL: f64 = 1e-7;

/// Tie tolerance for the case split at `√2/2` and for the orientation
/// comparisons `s ≤ t`, `v ≤ w`.
pub const TIE_TOL: f64 = 1e-12;

/// Callers of unit-vector-only checks must normalize to this accuracy.
pub const UNIT_TOL: f64 = 1e-12;

/// Vectors with norm below this are treated as zero by the product
/// (avoids overflow in `x/‖x‖`).
pub const ZERO_VECTOR_NORM: f64 = 1e-300;

/// Raw optimizer iterates with norm below this are rejected rather than
/// normalized.
pub const MIN_RAW_NORM: f64 = 1e-6;

/// Exact vector identities (decompositions of (1,1) and (1,i)).
pub const IDENTITY_RESIDUAL_TOL: f64 = 1e-12;

/// Linear-independence threshold: Euclidean residual of b after
/// projecting out a, relative to ‖b‖₂.
pub const INDEPENDENCE_TOL: f64 = 1e-9;

/// Directional norms at or below this (on Euclidean-unit directions)
/// count as definiteness failures.
pub const DEFINITENESS_TOL: f64 = 1e-9;

/// Stress searches must keep the Cauchy-Schwarz ratio below `1 + this`.
pub const CSB_STRESS_TOL: f64 = 1e-7;

/// Conjecture exploration: defects below this are numerical noise.
pub const NOISE_FLOOR: f64 = 1e-8;

/// Conjecture exploration: defects above this are structural. The five
/// orders of magnitude between the two thresholds keep the flags crisp.
pub const STRUCTURAL_DEFECT: f64 = 1e-3;
