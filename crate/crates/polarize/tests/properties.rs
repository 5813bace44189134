//! Property tests for the library invariants.

mod common;

use num_complex::Complex64;
use polarize::csb::{
    b_star, canonical_orientation, check_quadruple_relations, check_substitution_identity,
    compute_stvw, induce_c2_norm, inequality_c, inequality_d, product_from_stvw, r_function,
    verify_csb_proof, StvwQuadruple,
};
use polarize::explorer::max_abs_product;
use polarize::norms::{eval_norm, random_norm, validate_norm, NormDescriptor, NormFamily};
use polarize::numeric::minimize_scalar;
use polarize::product::{
    check_algebraic_properties, check_phase_identities, check_unit_square_bound,
    polarization_product,
};
use polarize::seeds::{child_seed, random_scalar, random_vector, rng_from_seed};
use polarize::CVector;
use proptest::prelude::*;

fn any_family() -> impl Strategy<Value = NormFamily> {
    prop::sample::select(&NormFamily::ALL[..])
}

fn sampled_norm(family: NormFamily, dim: usize, seed: u64) -> NormDescriptor {
    let dim = if family == NormFamily::InducedC2 { 2 } else { dim };
    random_norm(family, dim, seed).expect("random_norm produces valid descriptors")
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn norm_axioms_hold_on_samples(
        family in any_family(),
        dim in 2usize..=3,
        seed in any::<u64>(),
        sample_seed in any::<u64>(),
    ) {
        let d = sampled_norm(family, dim, seed);
        let dim = d.dim().unwrap_or(dim);
        let mut rng = rng_from_seed(sample_seed);
        for _ in 0..8 {
            let x = random_vector(dim, &mut rng);
            let y = random_vector(dim, &mut rng);
            let z = random_scalar(&mut rng, 1e-3, 1e3);
            let nx = eval_norm(&d, &x).unwrap();
            let ny = eval_norm(&d, &y).unwrap();

            let hom = (eval_norm(&d, &x.scaled(z)).unwrap() - z.norm() * nx).abs();
            prop_assert!(hom <= 1e-9 * (1.0 + nx * z.norm()), "homogeneity {hom}");

            let tri = eval_norm(&d, &x.add(&y)).unwrap() - nx - ny;
            prop_assert!(tri <= 1e-9 * (1.0 + nx + ny), "triangle {tri}");
        }
    }

    #[test]
    fn sampled_norms_validate(family in any_family(), seed in any::<u64>()) {
        let d = sampled_norm(family, 2, seed);
        let report = validate_norm(&d, 64, child_seed(seed, 1));
        prop_assert!(report.passed(), "{report:?}");
    }

    #[test]
    fn descriptor_serialization_round_trips(
        family in any_family(),
        dim in 2usize..=3,
        seed in any::<u64>(),
    ) {
        let d = sampled_norm(family, dim, seed);
        let json = serde_json::to_string(&d).unwrap();
        let back: NormDescriptor = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(&back, &d);
        prop_assert_eq!(serde_json::to_string(&back).unwrap(), json);
    }

    #[test]
    fn algebraic_properties_hold(
        family in any_family(),
        dim in 2usize..=3,
        seed in any::<u64>(),
        sample_seed in any::<u64>(),
        r in -3.0f64..3.0,
    ) {
        let d = sampled_norm(family, dim, seed);
        let dim = d.dim().unwrap_or(dim);
        let mut rng = rng_from_seed(sample_seed);
        let x = random_vector(dim, &mut rng);
        let y = random_vector(dim, &mut rng);
        let report = check_algebraic_properties(&d, &x, &y, r).unwrap();
        prop_assert!(report.passed(), "{:#?}", report.checks);
    }

    #[test]
    fn unit_products_stay_in_square_and_disc(
        family in any_family(),
        seed in any::<u64>(),
        sample_seed in any::<u64>(),
    ) {
        let d = sampled_norm(family, 2, seed);
        let mut rng = rng_from_seed(sample_seed);
        let x = random_vector(2, &mut rng);
        let y = random_vector(2, &mut rng);
        let nx = eval_norm(&d, &x).unwrap();
        let ny = eval_norm(&d, &y).unwrap();
        prop_assume!(nx > 1e-6 && ny > 1e-6);
        let xu = x.scaled(Complex64::new(1.0 / nx, 0.0));
        let yu = y.scaled(Complex64::new(1.0 / ny, 0.0));
        let margins = check_unit_square_bound(&d, &xu, &yu).unwrap();
        prop_assert!(margins.passed(), "{margins:?}");
    }

    #[test]
    fn phase_identities_hold(
        family in any_family(),
        seed in any::<u64>(),
        sample_seed in any::<u64>(),
        phi in 0.0..std::f64::consts::TAU,
    ) {
        let d = sampled_norm(family, 2, seed);
        let mut rng = rng_from_seed(sample_seed);
        let x = random_vector(2, &mut rng);
        let y = random_vector(2, &mut rng);
        let report = check_phase_identities(&d, &x, &y, phi).unwrap();
        prop_assert!(report.passed(), "{:#?}", report.checks);
    }

    #[test]
    fn hermitian_product_matches_sesquilinear_oracle(
        dim in 2usize..=4,
        seed in any::<u64>(),
        sample_seed in any::<u64>(),
    ) {
        let d = random_norm(NormFamily::Hermitian, dim, seed).unwrap();
        let NormDescriptor::HermitianQuadratic { ref matrix } = d else { unreachable!() };
        let mut rng = rng_from_seed(sample_seed);
        let x = random_vector(dim, &mut rng);
        let y = random_vector(dim, &mut rng);
        let p = polarization_product(&d, &x, &y).unwrap();
        let oracle = common::sesquilinear(matrix, &x, &y);
        let err = (p.value - oracle).norm();
        prop_assert!(
            err <= 1e-10 * (1.0 + p.norm_x * p.norm_y),
            "product {:?} vs oracle {oracle:?}",
            p.value
        );
    }

    #[test]
    fn stvw_product_agrees_with_polarization(
        family in any_family(),
        seed in any::<u64>(),
    ) {
        let c2 = sampled_norm(family, 2, seed);
        let reduced =
            induce_c2_norm(&c2, &CVector::basis(2, 0), &CVector::basis(2, 1)).unwrap();
        let q = compute_stvw(&reduced).unwrap();
        let via_quadruple = product_from_stvw(&q);
        let direct = polarization_product(&reduced, &CVector::basis(2, 0), &CVector::basis(2, 1))
            .unwrap()
            .value;
        prop_assert!(
            (via_quadruple - direct).norm() <= 1e-12,
            "{via_quadruple:?} vs {direct:?}"
        );
    }

    #[test]
    fn orientation_preserves_final_bound_bitwise(
        family in any_family(),
        seed in any::<u64>(),
    ) {
        let c2 = sampled_norm(family, 2, seed);
        let before = compute_stvw(&c2).unwrap();
        let (oriented, _) = canonical_orientation(&c2).unwrap();
        let after = compute_stvw(&oriented).unwrap();
        prop_assert_eq!(
            before.final_bound().to_bits(),
            after.final_bound().to_bits(),
            "{:?} vs {:?}",
            before,
            after
        );
    }

    #[test]
    fn proof_traces_pass_on_sampled_norms(family in any_family(), seed in any::<u64>()) {
        let c2 = sampled_norm(family, 2, seed);
        let trace = verify_csb_proof(&c2).unwrap();
        prop_assert!(trace.passed(), "{family} {seed}: {:#?}", trace.checks);
        prop_assert!(trace.final_bound <= 16.0 + 1e-7);
    }

    #[test]
    fn quadruple_relations_pass_post_orientation(family in any_family(), seed in any::<u64>()) {
        let c2 = sampled_norm(family, 2, seed);
        let reduced =
            induce_c2_norm(&c2, &CVector::basis(2, 0), &CVector::basis(2, 1)).unwrap();
        let (oriented, _) = canonical_orientation(&reduced).unwrap();
        let q = compute_stvw(&oriented).unwrap();
        let checks = check_quadruple_relations(&q, &oriented).unwrap();
        prop_assert!(polarize::check::all_passed(&checks), "{checks:#?}");
    }

    #[test]
    fn r_minimum_identity_and_location(w in 0.7072f64..10.0) {
        let b = b_star(w).unwrap();
        let closed = 2.0 + (4.0 * w * w - 1.0).sqrt() / (w * w);
        let squared = r_function(b, w).powi(2);
        prop_assert!((squared - closed).abs() <= 1e-10, "{squared} vs {closed}");

        let (numeric_b, _) = minimize_scalar(|x| r_function(x, w), 0.0, 1.0, 2000, 1e-10);
        prop_assert!((numeric_b - b).abs() <= 1e-6, "{numeric_b} vs {b}");
    }

    #[test]
    fn decomposition_identities_hold(
        family in any_family(),
        seed in any::<u64>(),
        a in -1.0f64..2.0,
        b in -1.0f64..2.0,
    ) {
        let c2 = sampled_norm(family, 2, seed);
        // the norm bounds assume unit basis vectors
        let reduced =
            induce_c2_norm(&c2, &CVector::basis(2, 0), &CVector::basis(2, 1)).unwrap();
        let checks =
            polarize::csb::decomposition_identities_check(&reduced, a, b).unwrap();
        prop_assert!(polarize::check::all_passed(&checks), "{checks:#?}");
    }

    #[test]
    fn inequality_d_and_c_hold(t in 0.5f64..10.0, w in 0.5f64..10.0) {
        let (lhs, rhs) = inequality_d(t, w).unwrap();
        prop_assert!(lhs <= rhs + 1e-9, "D violated at ({t}, {w})");

        let residual = check_substitution_identity(t, w).unwrap();
        let scale = 1.0 + rhs.abs();
        prop_assert!(residual <= 1e-9 * scale, "substitution residual {residual}");

        let q = StvwQuadruple::new(1.0, t, 1.0, w).unwrap();
        let (c_lhs, _) = inequality_c(&q).unwrap();
        prop_assert!(c_lhs <= 16.0 + 1e-7, "C violated at ({t}, {w}): {c_lhs}");
    }
}

proptest! {
    // searches are heavier; fewer cases
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn search_reports_are_pure_functions_of_seed(
        family in any_family(),
        seed in any::<u64>(),
    ) {
        let norm = sampled_norm(family, 2, seed);
        let a = max_abs_product(&norm, 4, 60, child_seed(seed, 9)).unwrap();
        let b = max_abs_product(&norm, 4, 60, child_seed(seed, 9)).unwrap();
        prop_assert_eq!(
            serde_json::to_string(&a).unwrap(),
            serde_json::to_string(&b).unwrap()
        );
        // witnesses re-evaluate to the reported value
        let again = polarization_product(&norm, &a.witnesses[0], &a.witnesses[1])
            .unwrap()
            .csb_ratio();
        prop_assert!((again - a.best_value).abs() <= 1e-12);
        for witness in &a.witnesses {
            let n = eval_norm(&norm, witness).unwrap();
            prop_assert!((n - 1.0).abs() <= 1e-10);
        }
    }

    #[test]
    fn hermitian_search_attains_equality(dim in 2usize..=3, seed in any::<u64>()) {
        let norm = random_norm(NormFamily::Hermitian, dim, seed).unwrap();
        let report = max_abs_product(&norm, 4, 80, child_seed(seed, 3)).unwrap();
        prop_assert!((report.best_value - 1.0).abs() <= 1e-8, "{}", report.best_value);
    }
}
