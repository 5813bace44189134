//! One-shot reproduction of the reference values: each row compares a
//! closed-form target against the recomputed quantity.

use num_complex::Complex64;
use serde::Serialize;
use serde_json::{json, Value};

use polarize::csb::{b_star, d_equality_locus, g_map, inequality_d, r_function};
use polarize::norms::NormDescriptor;
use polarize::numeric::minimize_scalar;
use polarize::product::{counterexample_vectors, polarization_product};
use polarize::Error;

#[derive(Clone, Debug, Serialize)]
pub struct Row {
    pub name: &'static str,
    pub reference: Value,
    pub computed: Value,
    pub abs_error: f64,
    pub tolerance: f64,
    pub passed: bool,
}

fn scalar_row(name: &'static str, reference: f64, computed: f64, tolerance: f64) -> Row {
    let abs_error = (computed - reference).abs();
    Row {
        name,
        reference: json!(reference),
        computed: json!(computed),
        abs_error,
        tolerance,
        passed: abs_error <= tolerance,
    }
}

fn complex_row(
    name: &'static str,
    reference: Complex64,
    computed: Complex64,
    tolerance: f64,
) -> Row {
    let abs_error = (computed - reference).norm();
    Row {
        name,
        reference: json!([reference.re, reference.im]),
        computed: json!([computed.re, computed.im]),
        abs_error,
        tolerance,
        passed: abs_error <= tolerance,
    }
}

pub fn reproduce_rows() -> Result<Vec<Row>, Error> {
    let linf = NormDescriptor::linf();
    let (x, y) = counterexample_vectors();
    let phi = std::f64::consts::PI / 3.0; // e^{iφ} = (1 + i√3)/2
    let phase = Complex64::from_polar(1.0, phi);

    let mut rows = Vec::new();

    // the ℓ∞ product and its radical closed form
    let product = polarization_product(&linf, &x, &y)?.value;
    let radicals = Complex64::new(
        (19.0 + 4.0 * 7f64.sqrt() + 2.0 * 15f64.sqrt()) / 64.0,
        (7.0 - 4.0 * 7f64.sqrt() + 4.0 * 15f64.sqrt()) / 64.0,
    );
    rows.push(complex_row("product_vs_radicals", radicals, product, 1e-12));
    rows.push(complex_row(
        "scaled_product_approx",
        Complex64::new(0.130, 0.598),
        phase * product,
        1e-3,
    ));

    // the rotated first argument and its radical closed form
    let rotated = polarization_product(&linf, &x.rotated(phi), &y)?.value;
    let p_num = 11.0 + 2.0 * (7f64.sqrt() + 21f64.sqrt() - 45f64.sqrt()) - 5.0 * 3f64.sqrt()
        + 15f64.sqrt();
    let q_num = 8.0 + 2.0 * (4.0 * 3f64.sqrt() - 7f64.sqrt() + 15f64.sqrt() + 21f64.sqrt())
        + 45f64.sqrt();
    rows.push(complex_row(
        "rotated_product_vs_radicals",
        Complex64::new(p_num / 64.0, q_num / 64.0),
        rotated,
        1e-12,
    ));
    rows.push(complex_row(
        "rotated_product_approx",
        Complex64::new(0.113, 0.628),
        rotated,
        1e-3,
    ));

    // rotating the argument changes even the modulus
    let discrepancy = (rotated.norm() - product.norm()).abs();
    rows.push(Row {
        name: "modulus_discrepancy_exceeds",
        reference: json!(0.02),
        computed: json!(discrepancy),
        abs_error: (0.02 - discrepancy).max(0.0),
        tolerance: 0.0,
        passed: discrepancy > 0.02,
    });

    // the R-function minimum at w = 1
    let b = b_star(1.0)?;
    rows.push(scalar_row("b_star_at_w1", (3.0 - 3f64.sqrt()) / 6.0, b, 1e-12));
    rows.push(scalar_row(
        "r_squared_at_minimum",
        2.0 + 3f64.sqrt(),
        r_function(b, 1.0).powi(2),
        1e-10,
    ));

    // the diagonal minimum of G, numerically
    let (loc, value) = polarize::csb::g_diagonal_minimum();
    let (numeric_loc, numeric_value) = minimize_scalar(|a| g_map(a, a), 0.0, 1.0, 2000, 1e-10);
    rows.push(scalar_row("g_diagonal_location", loc, numeric_loc, 1e-8));
    rows.push(scalar_row("g_diagonal_value", value, numeric_value, 1e-8));
    rows.push(scalar_row(
        "m_equals_radical_mean",
        (2f64.sqrt() + 6f64.sqrt()) / 2.0,
        value,
        1e-12,
    ));

    // the (D) equality locus at w = 1 and the constant difference at √2/2
    let t = d_equality_locus(1.0)?;
    rows.push(scalar_row(
        "d_locus_t_at_w1",
        std::f64::consts::SQRT_2 / (3f64.sqrt() - 1.0),
        t,
        1e-12,
    ));
    let (lhs, rhs) = inequality_d(t, 1.0)?;
    rows.push(scalar_row("d_equality_gap_at_w1", 0.0, (lhs - rhs).abs(), 1e-9));

    let mut worst = 0.0f64;
    for w in [0.8, 1.0, 2.0, 5.0] {
        let (lhs, rhs) = inequality_d(std::f64::consts::FRAC_1_SQRT_2, w)?;
        worst = worst.max((rhs - lhs - 1.0).abs());
    }
    rows.push(scalar_row("d_constant_difference", 0.0, worst, 1e-9));

    Ok(rows)
}
