//! A single named inequality check with its margin.

use serde::{Deserialize, Serialize};

/// Record of one inequality `lhs ≤ rhs` (or equality within tolerance).
///
/// `margin = rhs − lhs`; nonnegative means the inequality holds with
/// slack. `passed` applies the tolerance the check was created with, so
/// a marginally negative `margin` can still pass.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub lhs: f64,
    pub rhs: f64,
    pub margin: f64,
    pub passed: bool,
}

impl Check {
    /// `lhs ≤ rhs` within additive tolerance.
    pub fn le(name: impl Into<String>, lhs: f64, rhs: f64, tol: f64) -> Self {
        Check {
            name: name.into(),
            lhs,
            rhs,
            margin: rhs - lhs,
            passed: lhs <= rhs + tol,
        }
    }

    /// `value ≥ bound` within additive tolerance.
    pub fn ge(name: impl Into<String>, value: f64, bound: f64, tol: f64) -> Self {
        Check {
            name: name.into(),
            lhs: bound,
            rhs: value,
            margin: value - bound,
            passed: value >= bound - tol,
        }
    }

    /// `|value − target| ≤ tol`.
    pub fn close(name: impl Into<String>, value: f64, target: f64, tol: f64) -> Self {
        Check::le(name, (value - target).abs(), tol, 0.0)
    }
}

/// True iff every check passed.
pub fn all_passed(checks: &[Check]) -> bool {
    checks.iter().all(|c| c.passed)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn le_respects_tolerance() {
        assert!(Check::le("x", 1.0, 1.0, 0.0).passed);
        assert!(Check::le("x", 1.0 + 1e-12, 1.0, 1e-9).passed);
        assert!(!Check::le("x", 1.1, 1.0, 1e-9).passed);
    }

    #[test]
    fn close_measures_distance() {
        let c = Check::close("x", 2.0, 2.0 + 5e-13, 1e-12);
        assert!(c.passed);
        assert!(c.lhs > 0.0);
    }
}
