//! The Cauchy-Schwarz proof machinery on ℂ², as numeric checks.
//!
//! Any candidate violating pair in any complex normed space reduces to a
//! norm on ℂ² with unit basis vectors and the single product
//! `⟨(1,0)|(0,1)⟩`. That product is determined by the four norms
//!
//! ```text
//! ‖(1,1)‖ = 1/s,  ‖(1,−1)‖ = 1/t,  ‖(1,i)‖ = 1/v,  ‖(1,−i)‖ = 1/w
//! ```
//!
//! via `⟨(1,0)|(0,1)⟩ = ¼[(1/s)² − (1/t)² + i((1/v)² − (1/w)²)]`, and the
//! inequality `|⟨(1,0)|(0,1)⟩| ≤ 1` becomes
//! `[(1/s)²−(1/t)²]² + [(1/v)²−(1/w)²]² ≤ 16`.
//!
//! [`verify_csb_proof`] replays the whole argument on a concrete norm:
//! canonical orientation (`s ≤ t`, `v ≤ w`), the `s,t,v,w ≥ 1/2` bounds,
//! the split into cases (a)/(b)/(c) on whether `t` and `w` exceed
//! `√2/2`, the R-function estimates behind inequalities (A) and (B),
//! and inequality (C) for the hard case — recording every margin in a
//! [`ProofTrace`]. Failed checks are findings, not errors.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::check::Check;
use crate::norms::{self, NormDescriptor};
use crate::tolerances::{
    FINAL_BOUND_TOL, IDENTITY_RESIDUAL_TOL, INDEPENDENCE_TOL, REL_TOL, SELF_PRODUCT_TOL, TIE_TOL,
    ZERO_VECTOR_NORM,
};
use crate::vector::CVector;
use crate::Error;

const FRAC_SQRT2_2: f64 = std::f64::consts::FRAC_1_SQRT_2;

/// The four positive reals with `1/s = ‖(1,1)‖`, `1/t = ‖(1,−1)‖`,
/// `1/v = ‖(1,i)‖`, `1/w = ‖(1,−i)‖` under a norm on ℂ².
///
/// Serializes as the array `[s, t, v, w]`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct StvwQuadruple {
    pub s: f64,
    pub t: f64,
    pub v: f64,
    pub w: f64,
}

impl StvwQuadruple {
    pub fn new(s: f64, t: f64, v: f64, w: f64) -> Result<Self, Error> {
        for value in [s, t, v, w] {
            if !(value.is_finite() && value > 0.0) {
                return Err(Error::Domain(format!(
                    "quadruple entries must be positive and finite, got {value}"
                )));
            }
        }
        Ok(StvwQuadruple { s, t, v, w })
    }

    pub fn inv_s(&self) -> f64 {
        1.0 / self.s
    }
    pub fn inv_t(&self) -> f64 {
        1.0 / self.t
    }
    pub fn inv_v(&self) -> f64 {
        1.0 / self.v
    }
    pub fn inv_w(&self) -> f64 {
        1.0 / self.w
    }

    /// `|4·⟨(1,0)|(0,1)⟩|² = [(1/s)²−(1/t)²]² + [(1/v)²−(1/w)²]²`.
    pub fn final_bound(&self) -> f64 {
        let re = self.inv_s().powi(2) - self.inv_t().powi(2);
        let im = self.inv_v().powi(2) - self.inv_w().powi(2);
        re * re + im * im
    }
}

impl Serialize for StvwQuadruple {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        [self.s, self.t, self.v, self.w].serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for StvwQuadruple {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let [s, t, v, w] = <[f64; 4]>::deserialize(deserializer)?;
        StvwQuadruple::new(s, t, v, w).map_err(serde::de::Error::custom)
    }
}

/// Basis transformations used by the canonical orientation. Both leave
/// `|⟨(1,0)|(0,1)⟩|` unchanged: negating the first basis vector negates
/// the product, swapping the arguments conjugates it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum OrientationOp {
    NegateFirst,
    SwapArguments,
}

/// The three-way case split on whether `t` and `w` exceed `√2/2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ProofCase {
    /// both `t, w ∈ [1/2, √2/2]`
    A,
    /// exactly one of `t, w` exceeds `√2/2`
    B,
    /// both exceed `√2/2`
    C,
}

/// Per-norm record of the proof replay: the oriented quadruple, which
/// transformations were applied, which case fired, every inequality
/// margin, and the final bound value.
#[derive(Clone, Debug, Serialize)]
pub struct ProofTrace {
    pub case: ProofCase,
    pub stvw: StvwQuadruple,
    pub orientation: Vec<OrientationOp>,
    pub checks: Vec<Check>,
    pub final_bound: f64,
}

impl ProofTrace {
    pub fn passed(&self) -> bool {
        crate::check::all_passed(&self.checks)
    }
}

/// Tolerances for the proof replay; the defaults are the module values.
#[derive(Clone, Copy, Debug)]
pub struct ProofTolerances {
    /// additive tolerance on single-rounding inequalities
    pub check: f64,
    /// tolerance on the squared final bound and the case chains
    pub final_bound: f64,
    /// tie tolerance for orientation and the case boundaries
    pub tie: f64,
}

impl Default for ProofTolerances {
    fn default() -> Self {
        ProofTolerances {
            check: REL_TOL,
            final_bound: FINAL_BOUND_TOL,
            tie: TIE_TOL,
        }
    }
}

/// The norm a base norm induces on the plane spanned by `a` and `b`,
/// with the basis normalized so that `(1,0)` and `(0,1)` are unit:
/// `‖(α,β)‖ = ‖α·â + β·b̂‖_base` with `â = a/‖a‖`, `b̂ = b/‖b‖`.
///
/// Dependent `a, b` are rejected; the Cauchy-Schwarz inequality for a
/// dependent pair is immediate and is checked directly by the explorer.
pub fn induce_c2_norm(
    base: &NormDescriptor,
    a: &CVector,
    b: &CVector,
) -> Result<NormDescriptor, Error> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            got: b.dim(),
        });
    }
    if let Some(d) = base.dim() {
        if d != a.dim() {
            return Err(Error::DimensionMismatch {
                expected: d,
                got: a.dim(),
            });
        }
    }
    let residual = norms::independence_residual(a, b);
    if !residual.is_finite() || residual <= INDEPENDENCE_TOL {
        return Err(Error::DependentVectors { residual });
    }
    let norm_a = base.eval(a)?;
    let norm_b = base.eval(b)?;
    if norm_a < ZERO_VECTOR_NORM || norm_b < ZERO_VECTOR_NORM {
        return Err(Error::InvalidDescriptor(
            "spanning vector has zero norm".into(),
        ));
    }
    Ok(NormDescriptor::InducedOnC2 {
        base: Box::new(base.clone()),
        a: a.scaled(Complex64::new(1.0 / norm_a, 0.0)),
        b: b.scaled(Complex64::new(1.0 / norm_b, 0.0)),
    })
}

fn require_dim2(c2: &NormDescriptor) -> Result<(), Error> {
    match c2.dim() {
        Some(2) | None => Ok(()),
        Some(d) => Err(Error::DimensionMismatch {
            expected: 2,
            got: d,
        }),
    }
}

fn c2_vector(x: (f64, f64), y: (f64, f64)) -> CVector {
    CVector::new(vec![Complex64::new(x.0, x.1), Complex64::new(y.0, y.1)]).unwrap()
}

/// The reciprocals of the quadruple are the norms of `(1,1)`, `(1,−1)`,
/// `(1,i)`, `(1,−i)`.
pub fn compute_stvw(c2: &NormDescriptor) -> Result<StvwQuadruple, Error> {
    require_dim2(c2)?;
    let n_s = c2.eval(&c2_vector((1.0, 0.0), (1.0, 0.0)))?;
    let n_t = c2.eval(&c2_vector((1.0, 0.0), (-1.0, 0.0)))?;
    let n_v = c2.eval(&c2_vector((1.0, 0.0), (0.0, 1.0)))?;
    let n_w = c2.eval(&c2_vector((1.0, 0.0), (0.0, -1.0)))?;
    StvwQuadruple::new(1.0 / n_s, 1.0 / n_t, 1.0 / n_v, 1.0 / n_w)
}

/// `¼[(1/s)² − (1/t)² + i((1/v)² − (1/w)²)]` — the product
/// `⟨(1,0)|(0,1)⟩` expressed through the quadruple.
pub fn product_from_stvw(q: &StvwQuadruple) -> Complex64 {
    Complex64::new(
        q.inv_s().powi(2) - q.inv_t().powi(2),
        q.inv_v().powi(2) - q.inv_w().powi(2),
    ) * 0.25
}

fn orientation_ops(q: &StvwQuadruple, tie: f64) -> (Vec<OrientationOp>, StvwQuadruple) {
    let mut ops = Vec::new();
    let mut q = *q;
    if q.s > q.t + tie {
        // negating the first basis vector exchanges both pairs
        q = StvwQuadruple {
            s: q.t,
            t: q.s,
            v: q.w,
            w: q.v,
        };
        ops.push(OrientationOp::NegateFirst);
    }
    if q.v > q.w + tie {
        // swapping the arguments conjugates the product
        q = StvwQuadruple {
            v: q.w,
            w: q.v,
            ..q
        };
        ops.push(OrientationOp::SwapArguments);
    }
    (ops, q)
}

/// Basis pair implementing a sequence of orientation ops, expressed in
/// the coordinates of the norm being oriented.
fn oriented_basis(ops: &[OrientationOp], a: &CVector, b: &CVector) -> (CVector, CVector) {
    let mut pair = (a.clone(), b.clone());
    for op in ops {
        pair = match op {
            OrientationOp::NegateFirst => (pair.0.scaled(Complex64::new(-1.0, 0.0)), pair.1),
            OrientationOp::SwapArguments => (pair.1, pair.0),
        };
    }
    pair
}

/// Reorient a norm on ℂ² so that `s ≤ t` and `v ≤ w` (equivalently,
/// `⟨(1,0)|(0,1)⟩` has nonnegative real and imaginary parts). Returns
/// the reoriented norm and the ops applied; `|⟨(1,0)|(0,1)⟩|` is
/// preserved exactly, since the maps only negate or conjugate.
pub fn canonical_orientation(
    c2: &NormDescriptor,
) -> Result<(NormDescriptor, Vec<OrientationOp>), Error> {
    require_dim2(c2)?;
    let q = compute_stvw(c2)?;
    let (ops, _) = orientation_ops(&q, TIE_TOL);
    if ops.is_empty() {
        return Ok((c2.clone(), ops));
    }
    let (a, b) = oriented_basis(&ops, &CVector::basis(2, 0), &CVector::basis(2, 1));
    Ok((
        NormDescriptor::InducedOnC2 {
            base: Box::new(c2.clone()),
            a,
            b,
        },
        ops,
    ))
}

/// `R(b) = 2·√(1 + 2b² − 2b) + √2·|b|/w` — the right-hand side of the
/// first inequality behind (A). Always positive; requires `w ≥ 1/2`.
pub fn r_function(b: f64, w: f64) -> f64 {
    debug_assert!(w >= 0.5);
    2.0 * (1.0 + 2.0 * b * b - 2.0 * b).sqrt() + std::f64::consts::SQRT_2 * b.abs() / w
}

/// The unique positive stationary point of `R(·)`:
/// `b* = ½[1 − 1/√(4w² − 1)]`, nonnegative iff `w ≥ √2/2`.
pub fn b_star(w: f64) -> Result<f64, Error> {
    let disc = 4.0 * w * w - 1.0;
    if w.is_nan() || w <= 0.5 || disc <= 0.0 {
        return Err(Error::Domain(format!("b_star requires w > 1/2, got {w}")));
    }
    Ok(0.5 * (1.0 - 1.0 / disc.sqrt()))
}

/// For each sampled `b`, both R-style estimates on the quadruple:
/// `1/s ≤ 2√(1+2b²−2b) + √2·|b|/w` and the analogue with `v` and `t`.
/// They hold for every real `b`; minimizing the right-hand side over
/// `b` produces the (A)/(B) bounds.
pub fn check_r_estimates(q: &StvwQuadruple, b_samples: &[f64]) -> Vec<Check> {
    let mut checks = Vec::with_capacity(2 * b_samples.len());
    for &b in b_samples {
        let parabola = 2.0 * (1.0 + 2.0 * b * b - 2.0 * b).sqrt();
        let scaled = std::f64::consts::SQRT_2 * b.abs();
        checks.push(Check::le(
            "r_estimate_s",
            q.inv_s(),
            parabola + scaled * q.inv_w(),
            REL_TOL,
        ));
        checks.push(Check::le(
            "r_estimate_v",
            q.inv_v(),
            parabola + scaled * q.inv_t(),
            REL_TOL,
        ));
    }
    checks
}

/// Result of the (A)/(B) estimates: outside their precondition
/// (`w ≥ √2/2`, resp. `t ≥ √2/2`) the case split routes around them.
#[derive(Clone, Debug)]
pub enum BoundOutcome {
    Applicable { bound: f64, check: Check },
    NotApplicable,
}

fn r_min_squared(x: f64) -> f64 {
    // R(b*)² = 2 + √(4x² − 1)/x²
    2.0 + (4.0 * x * x - 1.0).sqrt() / (x * x)
}

/// Inequality (A): `(1/s)² ≤ 2 + √(4w²−1)/w²`, applicable for `w ≥ √2/2`.
pub fn bound_a(q: &StvwQuadruple) -> BoundOutcome {
    if q.w < FRAC_SQRT2_2 - TIE_TOL {
        return BoundOutcome::NotApplicable;
    }
    let bound = r_min_squared(q.w);
    BoundOutcome::Applicable {
        bound,
        check: Check::le("bound_A", q.inv_s().powi(2), bound, REL_TOL),
    }
}

/// Inequality (B): `(1/v)² ≤ 2 + √(4t²−1)/t²`, applicable for `t ≥ √2/2`.
pub fn bound_b(q: &StvwQuadruple) -> BoundOutcome {
    if q.t < FRAC_SQRT2_2 - TIE_TOL {
        return BoundOutcome::NotApplicable;
    }
    let bound = r_min_squared(q.t);
    BoundOutcome::Applicable {
        bound,
        check: Check::le("bound_B", q.inv_v().powi(2), bound, REL_TOL),
    }
}

fn require_half(t: f64, w: f64) -> Result<(), Error> {
    if t.abs() < 0.5 || w.abs() < 0.5 {
        return Err(Error::Domain(format!(
            "inequality requires |t|, |w| ≥ 1/2, got t = {t}, w = {w}"
        )));
    }
    Ok(())
}

/// Inequality (D): returns `(lhs, rhs)` of
/// `(2t²−1)√(4w²−1) + (2w²−1)√(4t²−1) ≤ 4t²w²`.
pub fn inequality_d(t: f64, w: f64) -> Result<(f64, f64), Error> {
    require_half(t, w)?;
    let lhs = (2.0 * t * t - 1.0) * (4.0 * w * w - 1.0).sqrt()
        + (2.0 * w * w - 1.0) * (4.0 * t * t - 1.0).sqrt();
    let rhs = 4.0 * t * t * w * w;
    Ok((lhs, rhs))
}

/// The equality locus of (D): `t = √2·w/(√(4w²−1) − 1)`, `w ≠ √2/2`.
pub fn d_equality_locus(w: f64) -> Result<f64, Error> {
    require_half(w, w)?;
    let denom = (4.0 * w * w - 1.0).sqrt() - 1.0;
    if denom.abs() < 1e-12 {
        return Err(Error::Domain("locus is undefined at w = √2/2".into()));
    }
    Ok(std::f64::consts::SQRT_2 * w / denom)
}

/// Inequality (C): returns `(lhs, 16 − lhs)` for
/// `[2 + √(4w²−1)/w² − (1/t)²]² + [2 + √(4t²−1)/t² − (1/w)²]² ≤ 16`.
pub fn inequality_c(q: &StvwQuadruple) -> Result<(f64, f64), Error> {
    require_half(q.t, q.w)?;
    let first = r_min_squared(q.w) - q.inv_t().powi(2);
    let second = r_min_squared(q.t) - q.inv_w().powi(2);
    let lhs = first * first + second * second;
    Ok((lhs, 16.0 - lhs))
}

/// Residual of the algebra chain that proves (D): with `h = √(4t²−1)`,
/// `k = √(4w²−1)`,
/// `(h²k² + h² + k² + 1) − 2(h²k − k + k²h − h) = [h(k−1) − (k+1)]²`.
pub fn check_substitution_identity(t: f64, w: f64) -> Result<f64, Error> {
    require_half(t, w)?;
    let h = (4.0 * t * t - 1.0).sqrt();
    let k = (4.0 * w * w - 1.0).sqrt();
    let expanded =
        (h * h * k * k + h * h + k * k + 1.0) - 2.0 * (h * h * k - k + k * k * h - h);
    let square = {
        let root = h * (k - 1.0) - (k + 1.0);
        root * root
    };
    Ok((expanded - square).abs())
}

/// `G(a,b) = √((1−a)²+b²) + √((1−b)²+a²) + √(a²+b²)` — the sum of three
/// hypotenuses whose infimum controls the decomposition bounds.
pub fn g_map(a: f64, b: f64) -> f64 {
    ((1.0 - a).powi(2) + b * b).sqrt()
        + ((1.0 - b).powi(2) + a * a).sqrt()
        + (a * a + b * b).sqrt()
}

/// Minimum of `G` along the diagonal `a = b`, in closed form:
/// location `(3−√3)/6 ≈ 0.211`, value `√(2+√3) = (√2+√6)/2 ≈ 1.932`.
pub fn g_diagonal_minimum() -> (f64, f64) {
    ((3.0 - 3f64.sqrt()) / 6.0, (2.0 + 3f64.sqrt()).sqrt())
}

/// Replay the Cauchy-Schwarz proof on a norm over ℂ² with the default
/// tolerances.
pub fn verify_csb_proof(c2: &NormDescriptor) -> Result<ProofTrace, Error> {
    verify_csb_proof_with(c2, &ProofTolerances::default())
}

/// Replay the proof with explicit tolerances.
///
/// The basis is normalized first (the reduction step), so arbitrary ℂ²
/// norms are accepted; the quadruple and all bounds refer to the
/// normalized norm. Failed checks produce a trace with `passed = false`
/// entries, never an error.
pub fn verify_csb_proof_with(
    c2: &NormDescriptor,
    tols: &ProofTolerances,
) -> Result<ProofTrace, Error> {
    require_dim2(c2)?;

    // Reduction: normalize the basis so ‖(1,0)‖ = ‖(0,1)‖ = 1.
    let e1 = CVector::basis(2, 0);
    let e2 = CVector::basis(2, 1);
    let n1 = c2.eval(&e1)?;
    let n2 = c2.eval(&e2)?;
    if n1 < ZERO_VECTOR_NORM || n2 < ZERO_VECTOR_NORM {
        return Err(Error::InvalidDescriptor(
            "basis vector has zero norm".into(),
        ));
    }
    let a_hat = e1.scaled(Complex64::new(1.0 / n1, 0.0));
    let b_hat = e2.scaled(Complex64::new(1.0 / n2, 0.0));
    let reduced = NormDescriptor::InducedOnC2 {
        base: Box::new(c2.clone()),
        a: a_hat.clone(),
        b: b_hat.clone(),
    };

    let raw = compute_stvw(&reduced)?;
    let (orientation, q) = orientation_ops(&raw, tols.tie);
    let final_bound = q.final_bound();

    let mut checks = Vec::new();
    for (name, value) in [
        ("lower_bound_s", q.s),
        ("lower_bound_t", q.t),
        ("lower_bound_v", q.v),
        ("lower_bound_w", q.w),
    ] {
        checks.push(Check::ge(name, value, 0.5, tols.check));
    }
    checks.push(Check::le("orientation_s_le_t", q.s, q.t, tols.tie));
    checks.push(Check::le("orientation_v_le_w", q.v, q.w, tols.tie));
    checks.push(Check::le("s_le_one", q.s, 1.0, tols.check));
    checks.push(Check::le("v_le_one", q.v, 1.0, tols.check));

    let t_low = q.t <= FRAC_SQRT2_2 + tols.tie;
    let w_low = q.w <= FRAC_SQRT2_2 + tols.tie;
    let case = match (t_low, w_low) {
        (true, true) => ProofCase::A,
        (false, false) => ProofCase::C,
        _ => ProofCase::B,
    };

    match case {
        ProofCase::A => {
            // spreads are at most 4 − (2/√2)² = 2, so the bound is 2·2² = 8
            checks.push(Check::le(
                "case_a_re_spread",
                q.inv_s().powi(2) - q.inv_t().powi(2),
                2.0,
                tols.check,
            ));
            checks.push(Check::le(
                "case_a_im_spread",
                q.inv_v().powi(2) - q.inv_w().powi(2),
                2.0,
                tols.check,
            ));
            checks.push(Check::le("case_a_bound", final_bound, 8.0, tols.final_bound));
        }
        ProofCase::B => {
            // the estimate from the high variable plus the crude 4-bound
            // on the other term collapses to 16 − 4/high²
            let high = if t_low { q.w } else { q.t };
            let outcome = if t_low { bound_a(&q) } else { bound_b(&q) };
            if let BoundOutcome::Applicable { check, .. } = outcome {
                checks.push(check);
            }
            checks.push(Check::le(
                "case_b_bound",
                final_bound,
                16.0 - 4.0 / (high * high),
                tols.final_bound,
            ));
        }
        ProofCase::C => {
            if let BoundOutcome::Applicable { check, .. } = bound_a(&q) {
                checks.push(check);
            }
            if let BoundOutcome::Applicable { check, .. } = bound_b(&q) {
                checks.push(check);
            }
            let (lhs, _) = inequality_c(&q)?;
            checks.push(Check::le("inequality_C", lhs, 16.0, tols.final_bound));
            checks.push(Check::le("case_c_bound", final_bound, lhs, tols.final_bound));
        }
    }

    // degenerate sub-case s = t: the real term vanishes and
    // (1/v)⁴ ≤ 2⁴ bounds the product directly
    if (q.s - q.t).abs() <= tols.tie {
        let quartic = q.inv_v().powi(4);
        checks.push(Check::le("degenerate_v_bound", quartic, 16.0, tols.final_bound));
        checks.push(Check::le(
            "degenerate_final",
            final_bound,
            quartic,
            tols.final_bound,
        ));
    }

    checks.push(Check::le(
        "csb_final_bound",
        final_bound,
        16.0,
        tols.final_bound,
    ));

    Ok(ProofTrace {
        case,
        stvw: q,
        orientation,
        checks,
        final_bound,
    })
}

/// Supporting relations on a canonically oriented quadruple:
/// diagonal-minimum estimates, collinearity of the derived triples,
/// the `min{t,w} ≤ √2` bound, and the triangle-identity inequalities.
pub fn check_quadruple_relations(
    q: &StvwQuadruple,
    c2: &NormDescriptor,
) -> Result<Vec<Check>, Error> {
    let recomputed = compute_stvw(c2)?;
    let consistency = [
        (q.s, recomputed.s),
        (q.t, recomputed.t),
        (q.v, recomputed.v),
        (q.w, recomputed.w),
    ]
    .iter()
    .map(|(a, b)| (a - b).abs() / (1.0 + a.abs()))
    .fold(0.0f64, f64::max);

    let mut checks = vec![Check::le(
        "stvw_consistency",
        consistency,
        SELF_PRODUCT_TOL,
        0.0,
    )];

    // diagonal value of G; an upper bound for the unknown infimum
    let (_, m_diag) = g_diagonal_minimum();
    checks.push(Check::le(
        "g_minimum_bound_s",
        q.inv_s(),
        m_diag * q.inv_w().max(1.0),
        REL_TOL,
    ));
    checks.push(Check::le(
        "g_minimum_bound_v",
        q.inv_v(),
        m_diag * q.inv_t().max(1.0),
        REL_TOL,
    ));

    if 2.0 * q.s - 1.0 > TIE_TOL {
        checks.push(Check::le(
            "fraction_bound_s",
            q.s,
            q.s / (2.0 * q.s - 1.0),
            REL_TOL,
        ));
    }
    if 2.0 * q.v - 1.0 > TIE_TOL {
        checks.push(Check::le(
            "fraction_bound_v",
            q.v,
            q.v / (2.0 * q.v - 1.0),
            REL_TOL,
        ));
    }

    checks.push(Check::le("s_le_one", q.s, 1.0, REL_TOL));
    checks.push(Check::le("v_le_one", q.v, 1.0, REL_TOL));
    checks.extend(collinearity_checks(q));
    checks.push(Check::le(
        "min_tw_le_sqrt2",
        q.t.min(q.w),
        std::f64::consts::SQRT_2,
        REL_TOL,
    ));

    let (inv_s, inv_t, inv_v, inv_w) = (q.inv_s(), q.inv_t(), q.inv_v(), q.inv_w());
    checks.push(Check::le("reciprocal_sum_bound_s", inv_s, inv_v + inv_t + inv_w, REL_TOL));
    checks.push(Check::le("reciprocal_sum_bound_v", inv_v, inv_s + inv_t + inv_w, REL_TOL));

    checks.push(Check::le("st_diff_le_two", inv_s - inv_t, 2.0, REL_TOL));
    checks.push(Check::ge("st_sum_ge_two", inv_s + inv_t, 2.0, REL_TOL));
    checks.push(Check::le("vw_diff_le_two", inv_v - inv_w, 2.0, REL_TOL));
    checks.push(Check::ge("vw_sum_ge_two", inv_v + inv_w, 2.0, REL_TOL));

    let sqrt2 = std::f64::consts::SQRT_2;
    for (alpha, inv_alpha) in [("s", inv_s), ("t", inv_t)] {
        for (gamma, inv_gamma) in [("v", inv_v), ("w", inv_w)] {
            checks.push(Check::le(
                format!("cross_diff_{alpha}{gamma}"),
                (inv_alpha - inv_gamma).abs(),
                sqrt2,
                REL_TOL,
            ));
            checks.push(Check::ge(
                format!("cross_sum_{alpha}{gamma}"),
                inv_alpha + inv_gamma,
                sqrt2,
                REL_TOL,
            ));
        }
    }

    checks.push(Check::ge(
        "harmonic_mean_bound_s",
        q.s,
        sqrt2 * q.v * q.w / (q.v + q.w),
        REL_TOL,
    ));
    checks.push(Check::ge(
        "harmonic_mean_bound_v",
        q.v,
        sqrt2 * q.s * q.t / (q.s + q.t),
        REL_TOL,
    ));

    Ok(checks)
}

/// Collinearity of `(t,−t), (1,0), (t,t)/(2t−1)` and of
/// `(s,s), (1,0), (s,−s)/(2s−1)`, measured as the modulus of the 2×2
/// determinant of the difference vectors. Skipped in the special case
/// `2st = s + t` (where the two lines meet) and wherever the third
/// point blows up.
fn collinearity_checks(q: &StvwQuadruple) -> Vec<Check> {
    let mut checks = Vec::new();
    let special = (2.0 * q.s * q.t - (q.s + q.t)).abs() <= REL_TOL * (1.0 + 2.0 * q.s * q.t);
    if special {
        return checks;
    }
    let det = |p1: (f64, f64), p2: (f64, f64), p3: (f64, f64)| -> (f64, f64) {
        let d1 = (p1.0 - p2.0, p1.1 - p2.1);
        let d2 = (p3.0 - p2.0, p3.1 - p2.1);
        let residual = (d1.0 * d2.1 - d1.1 * d2.0).abs();
        let scale = 1.0
            + d1.0.hypot(d1.1) * d2.0.hypot(d2.1);
        (residual, scale)
    };
    if 2.0 * q.t - 1.0 > REL_TOL {
        let third = q.t / (2.0 * q.t - 1.0);
        let (residual, scale) = det((q.t, -q.t), (1.0, 0.0), (third, third));
        checks.push(Check::le("collinearity_first", residual, REL_TOL * scale, 0.0));
    }
    if 2.0 * q.s - 1.0 > REL_TOL {
        let third = q.s / (2.0 * q.s - 1.0);
        let (residual, scale) = det((q.s, q.s), (1.0, 0.0), (third, -third));
        checks.push(Check::le("collinearity_second", residual, REL_TOL * scale, 0.0));
    }
    checks
}

/// Verify the two exact decompositions of `(1,1)` and `(1,i)` over the
/// basis `{(1,0), (0,1), (1,−i)}` resp. `{(1,0), (0,1), (1,−1)}` and the
/// norm bounds they imply via the triangle inequality. The bounds
/// assume unit basis vectors (a reduced norm).
pub fn decomposition_identities_check(
    c2: &NormDescriptor,
    a: f64,
    b: f64,
) -> Result<Vec<Check>, Error> {
    require_dim2(c2)?;
    if !(a.is_finite() && b.is_finite()) {
        return Err(Error::Domain("decomposition parameters must be finite".into()));
    }
    let e1 = CVector::basis(2, 0);
    let e2 = CVector::basis(2, 1);

    let mut checks = Vec::new();

    // (1,1) = [(1−a)−ib]·(1,0) + [(1−b)+ia]·(0,1) + [a+ib]·(1,−i)
    let ones = c2_vector((1.0, 0.0), (1.0, 0.0));
    let minus_i = c2_vector((1.0, 0.0), (0.0, -1.0));
    let c1 = Complex64::new(1.0 - a, -b);
    let c2c = Complex64::new(1.0 - b, a);
    let c3 = Complex64::new(a, b);
    let recombined = CVector::lin_comb(c1, &e1, c2c, &e2).add(&minus_i.scaled(c3));
    let residual_one = recombined.sub(&ones).max_modulus();
    checks.push(Check::le(
        "decomposition_residual_one",
        residual_one,
        IDENTITY_RESIDUAL_TOL,
        0.0,
    ));

    let hyp1 = ((1.0 - a).powi(2) + b * b).sqrt();
    let hyp2 = ((1.0 - b).powi(2) + a * a).sqrt();
    let hyp3 = (a * a + b * b).sqrt();
    let bound_s = hyp1 + hyp2 + hyp3 * c2.eval(&minus_i)?;
    let norm_ones = c2.eval(&ones)?;
    checks.push(Check::le(
        "decomposition_bound_s",
        norm_ones,
        bound_s,
        REL_TOL * (1.0 + bound_s),
    ));

    // (1,i) = [(1−a)+ib]·(1,0) + [i(1−b)+a]·(0,1) + [a−ib]·(1,−1)
    let one_i = c2_vector((1.0, 0.0), (0.0, 1.0));
    let minus_one = c2_vector((1.0, 0.0), (-1.0, 0.0));
    let d1 = Complex64::new(1.0 - a, b);
    let d2 = Complex64::new(a, 1.0 - b);
    let d3 = Complex64::new(a, -b);
    let recombined = CVector::lin_comb(d1, &e1, d2, &e2).add(&minus_one.scaled(d3));
    let residual_two = recombined.sub(&one_i).max_modulus();
    checks.push(Check::le(
        "decomposition_residual_two",
        residual_two,
        IDENTITY_RESIDUAL_TOL,
        0.0,
    ));

    let bound_v = hyp1 + hyp2 + hyp3 * c2.eval(&minus_one)?;
    let norm_one_i = c2.eval(&one_i)?;
    checks.push(Check::le(
        "decomposition_bound_v",
        norm_one_i,
        bound_v,
        REL_TOL * (1.0 + bound_v),
    ));

    Ok(checks)
}
