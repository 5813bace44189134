//! Optimization-driven stress testing.
//!
//! The searches maximize non-smooth objectives (the norms include ℓ∞
//! and maxima of functionals), so no gradients: a multi-start compass
//! pattern search over the raw real parameters, with shrinking steps
//! and relative convergence `1e-10`.
//!
//! Parameterization: raw vectors in ℂⁿ, rejected when their norm drops
//! below `1e-6`, otherwise normalized by the norm inside the objective.
//! The global phase of each raw vector is fixed by rotating its first
//! significant component to the positive real axis; the phases of the
//! remaining components stay free. (The product is invariant under a
//! joint rotation of both arguments, and the searched maxima are
//! attained inside this gauge.)
//!
//! Determinism: restart `i` derives its sub-seed from `(seed, i)` and
//! results merge in restart order, so a report is a pure function of
//! `(norm, budgets, seed)` regardless of thread count.

use rand::Rng;
use serde::Serialize;

use crate::batch::batch_map;
use crate::norms::{random_norm, NormDescriptor, NormFamily};
use crate::product::{phase_homogeneity_defect_at, polarization_product};
use crate::seeds::{child_seed, random_vector, rng_from_seed};
use crate::tolerances::{MIN_RAW_NORM, NOISE_FLOOR, STRUCTURAL_DEFECT};
use crate::vector::CVector;
use crate::Error;

/// Outcome of one stress search.
#[derive(Clone, Debug, Serialize)]
pub struct SearchReport {
    pub objective: String,
    pub best_value: f64,
    /// The argmax unit vectors (x, then y).
    pub witnesses: Vec<CVector>,
    /// The argmax phase, for phase-defect searches.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub phase: Option<f64>,
    pub norm: NormDescriptor,
    pub seed: u64,
    pub restarts: usize,
    pub iterations: usize,
    pub converged: bool,
}

struct RestartOutcome {
    value: f64,
    params: Vec<f64>,
    iterations: usize,
    converged: bool,
}

const INITIAL_STEP: f64 = 0.5;
const RELATIVE_CONVERGENCE: f64 = 1e-10;
const REJECTED: f64 = -1.0;

/// Compass search, maximizing. One iteration sweeps all ±h coordinate
/// moves and takes the best improving one; a failed sweep halves h.
fn pattern_search(
    objective: &(impl Fn(&[f64]) -> f64 + ?Sized),
    mut params: Vec<f64>,
    max_iters: usize,
) -> RestartOutcome {
    let mut value = objective(&params);
    let mut step = INITIAL_STEP;
    let mut iterations = 0;
    let mut converged = false;

    for _ in 0..max_iters {
        iterations += 1;
        let mut best_move: Option<(usize, f64, f64)> = None;
        for k in 0..params.len() {
            let original = params[k];
            for delta in [step, -step] {
                params[k] = original + delta;
                let candidate = objective(&params);
                if candidate > value && best_move.is_none_or(|(_, _, v)| candidate > v) {
                    best_move = Some((k, original + delta, candidate));
                }
            }
            params[k] = original;
        }
        match best_move {
            Some((k, new_param, new_value)) => {
                params[k] = new_param;
                value = new_value;
            }
            None => {
                step *= 0.5;
                let scale = params.iter().fold(1.0f64, |acc, p| acc.max(p.abs()));
                if step < RELATIVE_CONVERGENCE * scale {
                    converged = true;
                    break;
                }
            }
        }
    }

    RestartOutcome {
        value,
        params,
        iterations,
        converged,
    }
}

fn vector_from_params(params: &[f64], dim: usize) -> CVector {
    CVector::from_pairs(
        &(0..dim)
            .map(|k| (params[2 * k], params[2 * k + 1]))
            .collect::<Vec<_>>(),
    )
    .expect("search parameters are finite")
}

fn params_from_vector(v: &CVector) -> Vec<f64> {
    v.components()
        .iter()
        .flat_map(|z| [z.re, z.im])
        .collect()
}

/// Gauge and normalize a raw vector; `None` when it is rejected.
fn unit_from_raw(norm: &NormDescriptor, raw: &CVector) -> Option<CVector> {
    let gauged = raw.gauge_leading_phase();
    let n = norm.eval(&gauged).ok()?;
    if !(n.is_finite() && n >= MIN_RAW_NORM) {
        return None;
    }
    Some(gauged.scaled(num_complex::Complex64::new(1.0 / n, 0.0)))
}

fn merge_restarts(outcomes: Vec<RestartOutcome>) -> RestartOutcome {
    outcomes
        .into_iter()
        .reduce(|best, next| if next.value > best.value { next } else { best })
        .expect("at least one restart")
}

/// Search for the largest Cauchy-Schwarz ratio `|⟨x|y⟩|/(‖x‖·‖y‖)` over
/// unit pairs. Restart 0 starts on the diagonal `y = x`, where the
/// ratio is exactly 1; further restarts are random.
pub fn max_abs_product(
    norm: &NormDescriptor,
    restarts: usize,
    iters: usize,
    seed: u64,
) -> Result<SearchReport, Error> {
    if restarts < 1 || iters < 1 {
        return Err(Error::Domain("budgets must be at least 1".into()));
    }
    norm.validate()?;
    let dim = norm.dim().unwrap_or(2);

    let objective = move |params: &[f64]| -> f64 {
        let x_raw = vector_from_params(&params[..2 * dim], dim);
        let y_raw = vector_from_params(&params[2 * dim..], dim);
        let (Some(x), Some(y)) = (unit_from_raw(norm, &x_raw), unit_from_raw(norm, &y_raw))
        else {
            return REJECTED;
        };
        match polarization_product(norm, &x, &y) {
            Ok(p) => p.csb_ratio(),
            Err(_) => REJECTED,
        }
    };

    let outcomes = batch_map(restarts, |i| {
        let mut rng = rng_from_seed(child_seed(seed, i as u64));
        let x0 = params_from_vector(&random_vector(dim, &mut rng));
        let y0 = if i == 0 {
            x0.clone()
        } else {
            params_from_vector(&random_vector(dim, &mut rng))
        };
        let start = [x0, y0].concat();
        pattern_search(&objective, start, iters)
    });
    let best = merge_restarts(outcomes);

    let x = unit_from_raw(norm, &vector_from_params(&best.params[..2 * dim], dim))
        .expect("winning restart has admissible parameters");
    let y = unit_from_raw(norm, &vector_from_params(&best.params[2 * dim..], dim))
        .expect("winning restart has admissible parameters");
    let best_value = polarization_product(norm, &x, &y)?.csb_ratio();

    Ok(SearchReport {
        objective: "max_abs_product".into(),
        best_value,
        witnesses: vec![x, y],
        phase: None,
        norm: norm.clone(),
        seed,
        restarts,
        iterations: best.iterations,
        converged: best.converged,
    })
}

/// Search for the largest phase-homogeneity defect
/// `|⟨e^{iφ}x|y⟩ − e^{iφ}⟨x|y⟩|` over unit pairs and `φ ∈ [0, 2π)`.
pub fn max_phase_defect(
    norm: &NormDescriptor,
    restarts: usize,
    iters: usize,
    seed: u64,
) -> Result<SearchReport, Error> {
    if restarts < 1 || iters < 1 {
        return Err(Error::Domain("budgets must be at least 1".into()));
    }
    norm.validate()?;
    let dim = norm.dim().unwrap_or(2);

    let objective = move |params: &[f64]| -> f64 {
        let x_raw = vector_from_params(&params[..2 * dim], dim);
        let y_raw = vector_from_params(&params[2 * dim..4 * dim], dim);
        let phi = params[4 * dim];
        let (Some(x), Some(y)) = (unit_from_raw(norm, &x_raw), unit_from_raw(norm, &y_raw))
        else {
            return REJECTED;
        };
        phase_homogeneity_defect_at(norm, &x, &y, phi).unwrap_or(REJECTED)
    };

    let outcomes = batch_map(restarts, |i| {
        let mut rng = rng_from_seed(child_seed(seed, i as u64));
        let mut start = params_from_vector(&random_vector(dim, &mut rng));
        start.extend(params_from_vector(&random_vector(dim, &mut rng)));
        start.push(rng.gen::<f64>() * std::f64::consts::TAU);
        pattern_search(&objective, start, iters)
    });
    let best = merge_restarts(outcomes);

    let x = unit_from_raw(norm, &vector_from_params(&best.params[..2 * dim], dim))
        .expect("winning restart has admissible parameters");
    let y = unit_from_raw(norm, &vector_from_params(&best.params[2 * dim..4 * dim], dim))
        .expect("winning restart has admissible parameters");
    let phi = best.params[4 * dim].rem_euclid(std::f64::consts::TAU);
    let best_value = phase_homogeneity_defect_at(norm, &x, &y, phi)?;

    Ok(SearchReport {
        objective: "max_phase_defect".into(),
        best_value,
        witnesses: vec![x, y],
        phase: Some(phi),
        norm: norm.clone(),
        seed,
        restarts,
        iterations: best.iterations,
        converged: best.converged,
    })
}

/// Worst relative parallelogram-law defect
/// `|‖x+y‖² + ‖x−y‖² − 2‖x‖² − 2‖y‖²| / (‖x‖² + ‖y‖²)` over sampled
/// pairs. The sample set starts with all basis pairs (e_i, e_j), i < j,
/// then continues with random pairs.
pub fn parallelogram_defect(
    norm: &NormDescriptor,
    n_samples: usize,
    seed: u64,
) -> Result<f64, Error> {
    if n_samples < 1 {
        return Err(Error::Domain("n_samples must be at least 1".into()));
    }
    let dim = norm.dim().unwrap_or(2);
    let mut rng = rng_from_seed(seed);

    let mut pairs: Vec<(CVector, CVector)> = Vec::with_capacity(n_samples);
    'basis: for i in 0..dim {
        for j in (i + 1)..dim {
            if pairs.len() >= n_samples {
                break 'basis;
            }
            pairs.push((CVector::basis(dim, i), CVector::basis(dim, j)));
        }
    }
    while pairs.len() < n_samples {
        pairs.push((random_vector(dim, &mut rng), random_vector(dim, &mut rng)));
    }

    let mut worst = 0.0f64;
    for (x, y) in &pairs {
        let nx = norm.eval(x)?;
        let ny = norm.eval(y)?;
        let denom = nx * nx + ny * ny;
        if denom == 0.0 {
            continue;
        }
        let plus = norm.eval(&x.add(y))?;
        let minus = norm.eval(&x.sub(y))?;
        let defect = (plus * plus + minus * minus - 2.0 * nx * nx - 2.0 * ny * ny).abs() / denom;
        worst = worst.max(defect);
    }
    Ok(worst)
}

/// Why a norm was flagged during conjecture exploration.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ConjectureFlag {
    /// Phase defect at noise level but the parallelogram law fails
    /// structurally: a would-be counterexample to the nontrivial
    /// direction of the conjecture.
    PhaseHomogeneousWithoutParallelogram,
    /// Parallelogram law holds (inner-product norm) but a structural
    /// phase defect was found: the trivial direction violated, which
    /// would indicate a bug rather than mathematics.
    ParallelogramWithoutPhaseHomogeneity,
}

/// One explored norm with its two defects.
#[derive(Clone, Debug, Serialize)]
pub struct ConjectureOutcome {
    pub norm: NormDescriptor,
    pub parallelogram_defect: f64,
    pub phase_defect: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub flag: Option<ConjectureFlag>,
}

/// Exploration report; flags are findings to reproduce, not failures.
#[derive(Clone, Debug, Serialize)]
pub struct ConjectureReport {
    pub trials: usize,
    pub seed: u64,
    pub outcomes: Vec<ConjectureOutcome>,
}

impl ConjectureReport {
    pub fn flagged(&self) -> Vec<&ConjectureOutcome> {
        self.outcomes.iter().filter(|o| o.flag.is_some()).collect()
    }
}

const CONJECTURE_PARALLELOGRAM_SAMPLES: usize = 200;
const CONJECTURE_RESTARTS: usize = 6;
const CONJECTURE_ITERS: usize = 150;

/// Sample norms from the given families and record, for each, the
/// parallelogram defect and the searched phase defect. A norm is
/// flagged when one defect sits at noise level (≤ 1e-8) while the other
/// is structural (≥ 1e-3).
pub fn explore_conjecture(
    families: &[NormFamily],
    trials: usize,
    seed: u64,
) -> Result<ConjectureReport, Error> {
    if trials < 1 {
        return Err(Error::Domain("trials must be at least 1".into()));
    }
    if families.is_empty() {
        return Err(Error::Domain("at least one family is required".into()));
    }

    let outcomes: Vec<Result<ConjectureOutcome, Error>> = batch_map(trials, |i| {
        let family = families[i % families.len()];
        let trial_seed = child_seed(seed, i as u64);
        let norm = random_norm(family, 2, trial_seed)?;
        let para = parallelogram_defect(&norm, CONJECTURE_PARALLELOGRAM_SAMPLES, child_seed(trial_seed, 1))?;
        let phase = max_phase_defect(
            &norm,
            CONJECTURE_RESTARTS,
            CONJECTURE_ITERS,
            child_seed(trial_seed, 2),
        )?
        .best_value;

        let flag = if phase <= NOISE_FLOOR && para >= STRUCTURAL_DEFECT {
            Some(ConjectureFlag::PhaseHomogeneousWithoutParallelogram)
        } else if para <= NOISE_FLOOR && phase >= STRUCTURAL_DEFECT {
            Some(ConjectureFlag::ParallelogramWithoutPhaseHomogeneity)
        } else {
            None
        };

        Ok(ConjectureOutcome {
            norm,
            parallelogram_defect: para,
            phase_defect: phase,
            flag,
        })
    });

    let outcomes = outcomes.into_iter().collect::<Result<Vec<_>, _>>()?;
    Ok(ConjectureReport {
        trials,
        seed,
        outcomes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::product::counterexample_vectors;

    #[test]
    fn euclidean_ratio_reaches_one_on_the_diagonal() {
        let report = max_abs_product(&NormDescriptor::l2(), 20, 120, 3).unwrap();
        assert!((report.best_value - 1.0).abs() <= 1e-8, "{}", report.best_value);
        // witness x ≈ y
        let diff = report.witnesses[0].sub(&report.witnesses[1]).max_modulus();
        assert!(diff < 1e-4, "witnesses differ by {diff}");
    }

    #[test]
    fn linf_ratio_never_exceeds_one() {
        let report = max_abs_product(&NormDescriptor::linf(), 50, 200, 4).unwrap();
        assert!(report.best_value <= 1.0 + 1e-7, "{}", report.best_value);
        assert!(report.best_value >= 1.0 - 1e-6);
    }

    #[test]
    fn witnesses_are_unit_and_reproduce_the_value() {
        let norm = random_norm(NormFamily::DualMax, 2, 21).unwrap();
        let report = max_abs_product(&norm, 8, 150, 9).unwrap();
        for witness in &report.witnesses {
            let n = norm.eval(witness).unwrap();
            assert!((n - 1.0).abs() <= 1e-10, "witness norm {n}");
        }
        let again = polarization_product(&norm, &report.witnesses[0], &report.witnesses[1])
            .unwrap()
            .csb_ratio();
        assert!((again - report.best_value).abs() <= 1e-12);
    }

    #[test]
    fn reports_are_deterministic() {
        let norm = random_norm(NormFamily::Mixture, 2, 33).unwrap();
        let a = max_abs_product(&norm, 6, 100, 5).unwrap();
        let b = max_abs_product(&norm, 6, 100, 5).unwrap();
        assert_eq!(
            serde_json::to_string(&a).unwrap(),
            serde_json::to_string(&b).unwrap()
        );
    }

    #[test]
    fn phase_defect_is_noise_for_euclidean_norm() {
        let report = max_phase_defect(&NormDescriptor::l2(), 6, 120, 7).unwrap();
        assert!(report.best_value <= 1e-8, "{}", report.best_value);
    }

    #[test]
    fn phase_defect_on_linf_beats_the_known_witness() {
        let report = max_phase_defect(&NormDescriptor::linf(), 24, 250, 11).unwrap();
        assert!(report.best_value >= 0.034, "{}", report.best_value);
        assert!(report.phase.is_some());
    }

    #[test]
    fn parallelogram_defect_examples() {
        let l2 = parallelogram_defect(&NormDescriptor::l2(), 500, 1).unwrap();
        assert!(l2 <= 1e-10, "{l2}");

        // the basis pair e1, e2 already gives |1+1−2−2|/2 = 1
        let linf = parallelogram_defect(&NormDescriptor::linf(), 10, 2).unwrap();
        assert!(linf >= 1.0 - 1e-12, "{linf}");
    }

    #[test]
    fn mixture_defect_scales_with_the_weight() {
        let defect_at = |eps: f64| {
            let d = NormDescriptor::Mixture {
                parts: vec![NormDescriptor::l2(), NormDescriptor::linf()],
                coefficients: vec![1.0, eps],
            };
            parallelogram_defect(&d, 40, 3).unwrap()
        };
        let d3 = defect_at(1e-3);
        let d4 = defect_at(1e-4);
        assert!(d3 > 1e-4 && d3 < 1e-2, "{d3}");
        assert!(d4 > 1e-5 && d4 < 1e-3, "{d4}");
        let ratio = d3 / d4;
        assert!(ratio > 5.0 && ratio < 20.0, "ratio {ratio}");
    }

    #[test]
    fn hermitian_norms_produce_no_flags() {
        let report = explore_conjecture(&[NormFamily::Hermitian], 10, 5).unwrap();
        assert!(report.flagged().is_empty());
        for outcome in &report.outcomes {
            assert!(outcome.parallelogram_defect <= 1e-8);
            assert!(outcome.phase_defect <= 1e-8);
        }
    }

    #[test]
    fn generic_pnorms_have_both_defects_and_no_flags() {
        let report = explore_conjecture(&[NormFamily::Pnorm], 12, 8).unwrap();
        assert!(report.flagged().is_empty());
        for outcome in &report.outcomes {
            let p2ish = outcome.parallelogram_defect <= 1e-8;
            let phase_flat = outcome.phase_defect <= 1e-8;
            // either an inner-product norm (p = 2) with both defects at
            // noise level, or both structurally positive
            assert_eq!(p2ish, phase_flat, "{outcome:?}");
        }
    }

    #[test]
    fn counterexample_defect_is_reachable_from_its_own_start() {
        // sanity: the objective at the known ℓ∞ witness is ≈ 0.0343
        let (x, y) = counterexample_vectors();
        let phi = std::f64::consts::PI / 3.0;
        let defect =
            phase_homogeneity_defect_at(&NormDescriptor::linf(), &x, &y, phi).unwrap();
        assert!(defect > 0.034 && defect < 0.036);
    }
}
