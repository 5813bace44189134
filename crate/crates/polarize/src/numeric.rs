//! Scalar minimization: grid prescan, golden-section refinement, and a
//! parabolic polish.

/// Minimize `f` on `[lo, hi]`: scan `grid` evenly spaced points,
/// golden-section within the bracketing cells until the interval width
/// drops below `tol`, then polish with one parabolic fit (golden
/// section alone stalls at ~√ε near smooth minima). Returns
/// `(argmin, min)`. Deterministic.
pub fn minimize_scalar(f: impl Fn(f64) -> f64, lo: f64, hi: f64, grid: usize, tol: f64) -> (f64, f64) {
    assert!(hi > lo && grid >= 2);
    let step = (hi - lo) / grid as f64;
    let mut best_k = 0usize;
    let mut best_val = f64::INFINITY;
    for k in 0..=grid {
        let x = lo + step * k as f64;
        let value = f(x);
        if value < best_val {
            best_val = value;
            best_k = k;
        }
    }
    let mut a = lo + step * best_k.saturating_sub(1) as f64;
    let mut b = (lo + step * (best_k + 1) as f64).min(hi);

    const INV_PHI: f64 = 0.618_033_988_749_894_8;
    let mut c = b - INV_PHI * (b - a);
    let mut d = a + INV_PHI * (b - a);
    let mut fc = f(c);
    let mut fd = f(d);
    while b - a > tol.max(1e-12) {
        if fc < fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INV_PHI * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INV_PHI * (b - a);
            fd = f(d);
        }
    }
    let mut x = 0.5 * (a + b);
    let mut fx = f(x);

    // Parabolic polish through (x−h, x, x+h); kept only when the fit is
    // convex, stays local, and actually improves.
    let h = 1e-5 * (hi - lo).max(1.0);
    if x - h > lo && x + h < hi {
        let (f_minus, f_plus) = (f(x - h), f(x + h));
        let denom = f_plus - 2.0 * fx + f_minus;
        if denom > 0.0 {
            let vertex = x - 0.5 * h * (f_plus - f_minus) / denom;
            if (vertex - x).abs() <= h {
                let fv = f(vertex);
                if fv <= fx {
                    x = vertex;
                    fx = fv;
                }
            }
        }
    }
    (x, fx)
}
