//! Shared test oracles, independent of the library's implementation
//! paths.

use num_complex::Complex64;
use polarize::{CVector, ComplexMatrix};

/// The sesquilinear form `S(x, y) = y†·A·x` (linear in `x`). For a
/// Hermitian positive definite `A` this is the inner product whose norm
/// is `√(x†Ax)`, so the polarization product must reproduce it.
pub fn sesquilinear(matrix: &ComplexMatrix, x: &CVector, y: &CVector) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    for j in 0..matrix.dim() {
        for k in 0..matrix.dim() {
            acc += y.components()[j].conj() * matrix.entry(j, k) * x.components()[k];
        }
    }
    acc
}
