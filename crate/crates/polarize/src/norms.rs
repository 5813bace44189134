//! Norm descriptors on ℂⁿ: a closed, serializable family of norms.
//!
//! Seven variants span smooth (Hermitian quadratic), polyhedral
//! (maxima of linear functionals) and non-smooth mixed geometries:
//!
//! * `pnorm` — the ℓp norms, `p ∈ [1, ∞]`;
//! * `weighted_pnorm` — ℓp of the weighted moduli `(w_k·|x_k|)`;
//! * `hermitian` — `√(x†Ax)` for Hermitian positive definite `A`;
//! * `dual_max` — `max_k |⟨f_k, x⟩|` over functionals spanning ℂⁿ;
//! * `mixture` — a nonnegative weighted sum of norms;
//! * `max_of` — a pointwise maximum of norms;
//! * `induced_c2` — the norm `(α, β) ↦ ‖α·a + β·b‖` that a base norm
//!   induces on the plane spanned by two independent vectors.
//!
//! Descriptors are immutable values, cheap to clone, and round-trip
//! bit-exactly through their JSON encoding. Complex scalars encode as
//! `[re, im]` pairs and `p = ∞` as the string `"inf"`.

use num_complex::Complex64;
use rand::Rng;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::linalg::{self, ComplexMatrix};
use crate::seeds::{self, rng_from_seed};
use crate::tolerances::{DEFINITENESS_TOL, INDEPENDENCE_TOL, REL_TOL};
use crate::vector::CVector;
use crate::Error;

/// The exponent of an ℓp norm; `∞` is a distinguished value so that
/// evaluation can switch to max-of-moduli instead of overflowing powers.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum PExponent {
    Finite(f64),
    Infinity,
}

impl PExponent {
    pub fn is_valid(self) -> bool {
        match self {
            PExponent::Finite(p) => p.is_finite() && p >= 1.0,
            PExponent::Infinity => true,
        }
    }
}

impl Serialize for PExponent {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            PExponent::Finite(p) => serializer.serialize_f64(*p),
            PExponent::Infinity => serializer.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for PExponent {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct PVisitor;
        impl<'de> serde::de::Visitor<'de> for PVisitor {
            type Value = PExponent;
            fn expecting(&self, f: &mut std::fmt::Formatter) -> std::fmt::Result {
                f.write_str("a number ≥ 1 or the string \"inf\"")
            }
            fn visit_f64<E: serde::de::Error>(self, v: f64) -> Result<PExponent, E> {
                Ok(PExponent::Finite(v))
            }
            fn visit_u64<E: serde::de::Error>(self, v: u64) -> Result<PExponent, E> {
                Ok(PExponent::Finite(v as f64))
            }
            fn visit_i64<E: serde::de::Error>(self, v: i64) -> Result<PExponent, E> {
                Ok(PExponent::Finite(v as f64))
            }
            fn visit_str<E: serde::de::Error>(self, v: &str) -> Result<PExponent, E> {
                if v == "inf" {
                    Ok(PExponent::Infinity)
                } else {
                    Err(E::custom(format!("unknown exponent string {v:?}")))
                }
            }
        }
        deserializer.deserialize_any(PVisitor)
    }
}

/// A closed description of a norm on ℂⁿ.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum NormDescriptor {
    Pnorm {
        p: PExponent,
    },
    WeightedPnorm {
        p: PExponent,
        weights: Vec<f64>,
    },
    #[serde(rename = "hermitian")]
    HermitianQuadratic {
        matrix: ComplexMatrix,
    },
    DualMax {
        functionals: Vec<CVector>,
    },
    Mixture {
        parts: Vec<NormDescriptor>,
        coefficients: Vec<f64>,
    },
    MaxOf {
        parts: Vec<NormDescriptor>,
    },
    #[serde(rename = "induced_c2")]
    InducedOnC2 {
        base: Box<NormDescriptor>,
        a: CVector,
        b: CVector,
    },
}

impl NormDescriptor {
    /// ℓp on any dimension.
    pub fn pnorm(p: PExponent) -> Self {
        NormDescriptor::Pnorm { p }
    }

    pub fn l1() -> Self {
        NormDescriptor::Pnorm {
            p: PExponent::Finite(1.0),
        }
    }

    pub fn l2() -> Self {
        NormDescriptor::Pnorm {
            p: PExponent::Finite(2.0),
        }
    }

    pub fn linf() -> Self {
        NormDescriptor::Pnorm {
            p: PExponent::Infinity,
        }
    }

    /// The dimension this descriptor constrains its arguments to.
    /// `Pnorm` applies to any dimension and returns `None`.
    pub fn dim(&self) -> Option<usize> {
        match self {
            NormDescriptor::Pnorm { .. } => None,
            NormDescriptor::WeightedPnorm { weights, .. } => Some(weights.len()),
            NormDescriptor::HermitianQuadratic { matrix } => Some(matrix.dim()),
            NormDescriptor::DualMax { functionals } => {
                functionals.first().map(|f| f.dim())
            }
            NormDescriptor::Mixture { parts, .. } | NormDescriptor::MaxOf { parts } => {
                parts.iter().find_map(|p| p.dim())
            }
            NormDescriptor::InducedOnC2 { .. } => Some(2),
        }
    }

    fn check_dim(&self, x: &CVector) -> Result<(), Error> {
        match self.dim() {
            Some(d) if d != x.dim() => Err(Error::DimensionMismatch {
                expected: d,
                got: x.dim(),
            }),
            _ => Ok(()),
        }
    }

    /// Structural and semantic validation of the descriptor parameters:
    /// exponents ≥ 1, weights positive, the matrix Hermitian positive
    /// definite, functionals spanning, coefficients admissible, and the
    /// induced plane spanned by independent vectors.
    pub fn validate(&self) -> Result<(), Error> {
        match self {
            NormDescriptor::Pnorm { p } => {
                if !p.is_valid() {
                    return Err(Error::InvalidDescriptor(format!("p must be ≥ 1, got {p:?}")));
                }
            }
            NormDescriptor::WeightedPnorm { p, weights } => {
                if !p.is_valid() {
                    return Err(Error::InvalidDescriptor(format!("p must be ≥ 1, got {p:?}")));
                }
                if weights.is_empty() {
                    return Err(Error::InvalidDescriptor("weights are empty".into()));
                }
                if weights.iter().any(|w| !w.is_finite() || *w <= 0.0) {
                    return Err(Error::InvalidDescriptor(
                        "weights must be finite and positive".into(),
                    ));
                }
            }
            NormDescriptor::HermitianQuadratic { matrix } => {
                let scale = matrix.max_modulus().max(1e-300);
                if matrix.hermitian_defect() > 1e-12 * scale {
                    return Err(Error::InvalidDescriptor("matrix is not Hermitian".into()));
                }
                if !linalg::is_positive_definite(matrix) {
                    return Err(Error::InvalidDescriptor(
                        "matrix is not positive definite".into(),
                    ));
                }
            }
            NormDescriptor::DualMax { functionals } => {
                let dim = match functionals.first() {
                    Some(f) => f.dim(),
                    None => return Err(Error::InvalidDescriptor("no functionals".into())),
                };
                if functionals.iter().any(|f| f.dim() != dim) {
                    return Err(Error::InvalidDescriptor(
                        "functionals have mixed dimensions".into(),
                    ));
                }
                if functionals.len() < dim {
                    return Err(Error::InvalidDescriptor(format!(
                        "need at least {dim} functionals, got {}",
                        functionals.len()
                    )));
                }
                let rows: Vec<Vec<Complex64>> = functionals
                    .iter()
                    .map(|f| f.components().iter().map(|z| z.conj()).collect())
                    .collect();
                let (rank, _) = linalg::rank_and_kernel(&rows, 1e-12);
                if rank < dim {
                    return Err(Error::InvalidDescriptor(format!(
                        "functionals span a subspace of rank {rank} < {dim}"
                    )));
                }
            }
            NormDescriptor::Mixture {
                parts,
                coefficients,
            } => {
                if parts.is_empty() {
                    return Err(Error::InvalidDescriptor("mixture has no parts".into()));
                }
                if parts.len() != coefficients.len() {
                    return Err(Error::InvalidDescriptor(
                        "mixture parts and coefficients differ in length".into(),
                    ));
                }
                if coefficients.iter().any(|c| !c.is_finite() || *c < 0.0) {
                    return Err(Error::InvalidDescriptor(
                        "coefficients must be finite and nonnegative".into(),
                    ));
                }
                if !coefficients.iter().any(|c| *c > 0.0) {
                    return Err(Error::InvalidDescriptor(
                        "at least one coefficient must be positive".into(),
                    ));
                }
                check_equal_dims(parts)?;
                for part in parts {
                    part.validate()?;
                }
            }
            NormDescriptor::MaxOf { parts } => {
                if parts.is_empty() {
                    return Err(Error::InvalidDescriptor("max_of has no parts".into()));
                }
                check_equal_dims(parts)?;
                for part in parts {
                    part.validate()?;
                }
            }
            NormDescriptor::InducedOnC2 { base, a, b } => {
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
                base.validate()?;
                let residual = independence_residual(a, b);
                if !residual.is_finite() || residual <= INDEPENDENCE_TOL {
                    return Err(Error::DependentVectors { residual });
                }
            }
        }
        Ok(())
    }

    /// For degenerate descriptors, a Euclidean-unit direction with norm
    /// zero: the common kernel of non-spanning functionals, the
    /// nonpositive eigendirection of a non-PD matrix, or the dependency
    /// direction of an induced plane.
    fn kernel_witness(&self) -> Option<CVector> {
        match self {
            NormDescriptor::DualMax { functionals } => {
                let dim = functionals.first()?.dim();
                let rows: Vec<Vec<Complex64>> = functionals
                    .iter()
                    .map(|f| f.components().iter().map(|z| z.conj()).collect())
                    .collect();
                let (rank, kernel) = linalg::rank_and_kernel(&rows, 1e-12);
                if rank < dim {
                    kernel
                } else {
                    None
                }
            }
            NormDescriptor::HermitianQuadratic { matrix } => {
                let scale = matrix.max_modulus().max(1e-300);
                if linalg::is_positive_definite(matrix)
                    || matrix.hermitian_defect() > 1e-12 * scale
                {
                    return None;
                }
                let (lambda, v) = linalg::min_eigenpair(matrix);
                if lambda <= 1e-12 * scale {
                    Some(v)
                } else {
                    None
                }
            }
            NormDescriptor::InducedOnC2 { a, b, .. } => {
                if independence_residual(a, b) > INDEPENDENCE_TOL {
                    return None;
                }
                // b ≈ λ·a, so (λ, −1) maps to λa − b ≈ 0.
                let denom = a.herm_pair(a);
                if denom.re <= 0.0 {
                    return Some(CVector::basis(2, 0));
                }
                let lambda = a.herm_pair(b) / denom;
                let w = CVector::new(vec![lambda, Complex64::new(-1.0, 0.0)]).ok()?;
                let norm = w.euclidean_norm();
                Some(w.scaled(Complex64::new(1.0 / norm, 0.0)))
            }
            _ => None,
        }
    }

    /// Evaluate the norm at `x`.
    pub fn eval(&self, x: &CVector) -> Result<f64, Error> {
        self.check_dim(x)?;
        match self {
            NormDescriptor::Pnorm { p } => {
                if !p.is_valid() {
                    return Err(Error::InvalidDescriptor(format!("p must be ≥ 1, got {p:?}")));
                }
                Ok(pnorm_of_moduli(
                    x.components().iter().map(|z| z.norm()),
                    *p,
                ))
            }
            NormDescriptor::WeightedPnorm { p, weights } => {
                if !p.is_valid() {
                    return Err(Error::InvalidDescriptor(format!("p must be ≥ 1, got {p:?}")));
                }
                if weights.iter().any(|w| !w.is_finite() || *w <= 0.0) {
                    return Err(Error::InvalidDescriptor(
                        "weights must be finite and positive".into(),
                    ));
                }
                Ok(pnorm_of_moduli(
                    x.components()
                        .iter()
                        .zip(weights)
                        .map(|(z, w)| w * z.norm()),
                    *p,
                ))
            }
            NormDescriptor::HermitianQuadratic { matrix } => {
                let q = matrix.quadform(x);
                let scale = matrix.max_modulus() * x.euclidean_norm().powi(2);
                if q.re < -REL_TOL * (1.0 + scale) {
                    return Err(Error::InvalidDescriptor(
                        "quadratic form is not positive semidefinite".into(),
                    ));
                }
                Ok(q.re.max(0.0).sqrt())
            }
            NormDescriptor::DualMax { functionals } => {
                if functionals.is_empty() {
                    return Err(Error::InvalidDescriptor("no functionals".into()));
                }
                Ok(functionals
                    .iter()
                    .map(|f| f.herm_pair(x).norm())
                    .fold(0.0, f64::max))
            }
            NormDescriptor::Mixture {
                parts,
                coefficients,
            } => {
                if parts.len() != coefficients.len() {
                    return Err(Error::InvalidDescriptor(
                        "mixture parts and coefficients differ in length".into(),
                    ));
                }
                let mut acc = 0.0;
                for (part, c) in parts.iter().zip(coefficients) {
                    acc += c * part.eval(x)?;
                }
                Ok(acc)
            }
            NormDescriptor::MaxOf { parts } => {
                let mut acc = 0.0f64;
                for part in parts {
                    acc = acc.max(part.eval(x)?);
                }
                Ok(acc)
            }
            NormDescriptor::InducedOnC2 { base, a, b } => {
                let alpha = x.components()[0];
                let beta = x.components()[1];
                base.eval(&CVector::lin_comb(alpha, a, beta, b))
            }
        }
    }
}

fn check_equal_dims(parts: &[NormDescriptor]) -> Result<(), Error> {
    let mut concrete: Option<usize> = None;
    for part in parts {
        if let Some(d) = part.dim() {
            match concrete {
                Some(c) if c != d => {
                    return Err(Error::DimensionMismatch {
                        expected: c,
                        got: d,
                    })
                }
                _ => concrete = Some(d),
            }
        }
    }
    Ok(())
}

/// Euclidean residual of `b` after projecting out `a`, relative to
/// `‖b‖₂`. Zero means dependent.
pub(crate) fn independence_residual(a: &CVector, b: &CVector) -> f64 {
    let bb = b.euclidean_norm();
    if bb == 0.0 {
        return 0.0;
    }
    let aa = a.herm_pair(a);
    if aa.re == 0.0 {
        return 0.0;
    }
    let coeff = a.herm_pair(b) / aa;
    let residual = b.sub(&a.scaled(coeff));
    residual.euclidean_norm() / bb
}

/// ℓp of a sequence of nonnegative moduli, with the largest modulus
/// factored out so large exponents cannot overflow.
fn pnorm_of_moduli(moduli: impl Iterator<Item = f64>, p: PExponent) -> f64 {
    let m: Vec<f64> = moduli.collect();
    let peak = m.iter().copied().fold(0.0f64, f64::max);
    if peak == 0.0 {
        return 0.0;
    }
    match p {
        PExponent::Infinity => peak,
        PExponent::Finite(p) => {
            if p == 1.0 {
                m.iter().sum()
            } else if p == 2.0 {
                peak * m.iter().map(|v| (v / peak).powi(2)).sum::<f64>().sqrt()
            } else {
                peak * m.iter().map(|v| (v / peak).powf(p)).sum::<f64>().powf(1.0 / p)
            }
        }
    }
}

/// Top-level evaluation: `‖x‖` under the descriptor.
pub fn eval_norm(descriptor: &NormDescriptor, x: &CVector) -> Result<f64, Error> {
    descriptor.eval(x)
}

/// The three norm axioms checked by `validate_norm`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Axiom {
    AbsoluteHomogeneity,
    TriangleInequality,
    PositiveDefiniteness,
}

/// Worst violation found for one axiom.
///
/// Homogeneity and triangle margins are residuals relative to the scale
/// of the operands; the definiteness margin is `max(0, tol − m)/tol`
/// where `m` is the smallest directional norm seen on Euclidean-unit
/// directions (1.0 means a norm-zero direction was found).
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AxiomCheck {
    pub axiom: Axiom,
    pub worst_violation: f64,
    pub tolerance: f64,
    pub passed: bool,
}

/// Report of a sampling-based norm-axiom validation.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct NormValidation {
    /// Set when the descriptor parameters themselves are invalid;
    /// reported rather than thrown.
    pub descriptor_error: Option<String>,
    pub axioms: Vec<AxiomCheck>,
    pub n_samples: usize,
    pub seed: u64,
}

impl NormValidation {
    pub fn passed(&self) -> bool {
        self.descriptor_error.is_none() && self.axioms.iter().all(|a| a.passed)
    }
}

/// Check the norm axioms on `n_samples` random inputs.
///
/// Absolute homogeneity and the triangle inequality are sampled;
/// positive definiteness combines sampling with a structural search for
/// a norm-zero direction (non-spanning functionals, non-PD matrices and
/// dependent induced planes all have one, and random sampling alone
/// would never hit it).
pub fn validate_norm(descriptor: &NormDescriptor, n_samples: usize, seed: u64) -> NormValidation {
    let n_samples = n_samples.max(1);
    let mut rng = rng_from_seed(seed);
    let dim = descriptor.dim().unwrap_or(2);

    let descriptor_error = descriptor.validate().err().map(|e| e.to_string());

    let mut worst_hom = 0.0f64;
    let mut worst_tri = 0.0f64;
    let mut min_directional = f64::INFINITY;

    let record_directional = |d: &NormDescriptor, x: &CVector, min_dir: &mut f64| {
        let e = x.euclidean_norm();
        if e < 1e-9 {
            return;
        }
        if let Ok(n) = d.eval(&x.scaled(Complex64::new(1.0 / e, 0.0))) {
            *min_dir = min_dir.min(n);
        }
    };

    if let Some(witness) = descriptor.kernel_witness() {
        record_directional(descriptor, &witness, &mut min_directional);
    }

    for _ in 0..n_samples {
        let x = seeds::random_vector(dim, &mut rng);
        let y = seeds::random_vector(dim, &mut rng);
        let z = seeds::random_scalar(&mut rng, 1e-3, 1e3);

        let (nx, ny, nzx, nxy) = match (
            descriptor.eval(&x),
            descriptor.eval(&y),
            descriptor.eval(&x.scaled(z)),
            descriptor.eval(&x.add(&y)),
        ) {
            (Ok(a), Ok(b), Ok(c), Ok(d)) => (a, b, c, d),
            // evaluation failures are descriptor problems, already reported
            _ => continue,
        };

        let hom = (nzx - z.norm() * nx).abs() / (1.0 + z.norm() * nx);
        worst_hom = worst_hom.max(hom);

        let tri = (nxy - nx - ny) / (1.0 + nx + ny);
        worst_tri = worst_tri.max(tri);

        record_directional(descriptor, &x, &mut min_directional);
    }

    let def_violation = if min_directional.is_finite() {
        ((DEFINITENESS_TOL - min_directional) / DEFINITENESS_TOL).clamp(0.0, 1.0)
    } else {
        1.0
    };

    NormValidation {
        descriptor_error,
        axioms: vec![
            AxiomCheck {
                axiom: Axiom::AbsoluteHomogeneity,
                worst_violation: worst_hom,
                tolerance: REL_TOL,
                passed: worst_hom <= REL_TOL,
            },
            AxiomCheck {
                axiom: Axiom::TriangleInequality,
                worst_violation: worst_tri,
                tolerance: REL_TOL,
                passed: worst_tri <= REL_TOL,
            },
            AxiomCheck {
                axiom: Axiom::PositiveDefiniteness,
                worst_violation: def_violation,
                tolerance: 0.0,
                passed: def_violation <= 0.0,
            },
        ],
        n_samples,
        seed,
    }
}

/// Tags naming the descriptor variants, for random generation and CLIs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NormFamily {
    Pnorm,
    WeightedPnorm,
    Hermitian,
    DualMax,
    Mixture,
    MaxOf,
    InducedC2,
}

impl NormFamily {
    pub const ALL: [NormFamily; 7] = [
        NormFamily::Pnorm,
        NormFamily::WeightedPnorm,
        NormFamily::Hermitian,
        NormFamily::DualMax,
        NormFamily::Mixture,
        NormFamily::MaxOf,
        NormFamily::InducedC2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            NormFamily::Pnorm => "pnorm",
            NormFamily::WeightedPnorm => "weighted_pnorm",
            NormFamily::Hermitian => "hermitian",
            NormFamily::DualMax => "dual_max",
            NormFamily::Mixture => "mixture",
            NormFamily::MaxOf => "max_of",
            NormFamily::InducedC2 => "induced_c2",
        }
    }
}

impl std::str::FromStr for NormFamily {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        NormFamily::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::InvalidDescriptor(format!("unknown norm family {s:?}")))
    }
}

impl std::fmt::Display for NormFamily {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

const GENERATION_RETRIES: u32 = 64;

/// Deterministically sample a valid descriptor of the given family and
/// dimension. Pure function of `(family, dim, seed)`; parameters are
/// resampled (bounded retries) until `validate` accepts them.
pub fn random_norm(family: NormFamily, dim: usize, seed: u64) -> Result<NormDescriptor, Error> {
    if dim < 1 {
        return Err(Error::InvalidDescriptor("dim must be ≥ 1".into()));
    }
    if family == NormFamily::InducedC2 && dim != 2 {
        return Err(Error::InvalidDescriptor(
            "induced_c2 norms have dimension 2".into(),
        ));
    }
    let mut rng = rng_from_seed(seed);
    for _ in 0..GENERATION_RETRIES {
        let candidate = sample_family(family, dim, &mut rng)?;
        if candidate.validate().is_ok() {
            return Ok(candidate);
        }
    }
    Err(Error::GenerationFailed {
        retries: GENERATION_RETRIES,
        reason: format!("no valid {family} descriptor of dim {dim}"),
    })
}

fn sample_p<R: Rng>(rng: &mut R) -> PExponent {
    let u: f64 = rng.gen();
    if u < 0.15 {
        PExponent::Infinity
    } else if u < 0.30 {
        PExponent::Finite(1.0)
    } else if u < 0.45 {
        PExponent::Finite(2.0)
    } else {
        let v: f64 = rng.gen();
        PExponent::Finite(1.0 + 7.0 * v * v)
    }
}

fn sample_family<R: Rng>(
    family: NormFamily,
    dim: usize,
    rng: &mut R,
) -> Result<NormDescriptor, Error> {
    Ok(match family {
        NormFamily::Pnorm => NormDescriptor::Pnorm { p: sample_p(rng) },
        NormFamily::WeightedPnorm => NormDescriptor::WeightedPnorm {
            p: sample_p(rng),
            weights: (0..dim).map(|_| seeds::log_uniform(rng, 0.25, 4.0)).collect(),
        },
        NormFamily::Hermitian => NormDescriptor::HermitianQuadratic {
            matrix: random_hermitian_pd(dim, rng)?,
        },
        NormFamily::DualMax => {
            let count = dim + rng.gen_range(0..=2);
            NormDescriptor::DualMax {
                functionals: (0..count).map(|_| seeds::random_vector(dim, rng)).collect(),
            }
        }
        NormFamily::Mixture => {
            let count = rng.gen_range(2..=3);
            NormDescriptor::Mixture {
                parts: (0..count)
                    .map(|_| sample_leaf(dim, rng))
                    .collect::<Result<_, _>>()?,
                coefficients: (0..count).map(|_| rng.gen_range(0.1..2.0)).collect(),
            }
        }
        NormFamily::MaxOf => {
            let count = rng.gen_range(2..=3);
            NormDescriptor::MaxOf {
                parts: (0..count)
                    .map(|_| sample_leaf(dim, rng))
                    .collect::<Result<_, _>>()?,
            }
        }
        NormFamily::InducedC2 => {
            let base_dim = 2 + rng.gen_range(0..=1);
            let base = sample_leaf(base_dim, rng)?;
            let a = seeds::random_vector(base_dim, rng);
            let b = seeds::random_vector(base_dim, rng);
            crate::csb::induce_c2_norm(&base, &a, &b)?
        }
    })
}

/// Leaf families used as parts of compound descriptors.
fn sample_leaf<R: Rng>(dim: usize, rng: &mut R) -> Result<NormDescriptor, Error> {
    let choice = rng.gen_range(0..4);
    let family = [
        NormFamily::Pnorm,
        NormFamily::WeightedPnorm,
        NormFamily::Hermitian,
        NormFamily::DualMax,
    ][choice];
    sample_family(family, dim, rng)
}

/// `B†B + εI` with standard complex normal `B` and `ε = 1e-3`; the
/// lower triangle is computed once and mirrored, so the result is
/// exactly Hermitian.
fn random_hermitian_pd<R: Rng>(dim: usize, rng: &mut R) -> Result<ComplexMatrix, Error> {
    let b: Vec<Vec<Complex64>> = (0..dim)
        .map(|_| (0..dim).map(|_| seeds::standard_complex(rng)).collect())
        .collect();
    let mut rows = vec![vec![Complex64::new(0.0, 0.0); dim]; dim];
    for j in 0..dim {
        for k in 0..=j {
            // (B†B)_jk = Σ_m conj(B_mj)·B_mk
            let mut acc = Complex64::new(0.0, 0.0);
            for b_row in &b {
                acc += b_row[j].conj() * b_row[k];
            }
            if j == k {
                rows[j][j] = Complex64::new(acc.re + 1e-3, 0.0);
            } else {
                rows[j][k] = acc;
                rows[k][j] = acc.conj();
            }
        }
    }
    ComplexMatrix::new(rows)
}
