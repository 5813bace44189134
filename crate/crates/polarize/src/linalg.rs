//! Small dense complex linear algebra for descriptor validation.
//!
//! Dimensions here are tiny (norms live on ℂ² to ℂ⁴ in practice), so the
//! straightforward O(n³) routines are plenty.

use num_complex::Complex64;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::vector::CVector;
use crate::Error;

/// A square complex matrix; serializes as nested `[re, im]` pair arrays.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexMatrix {
    rows: Vec<Vec<Complex64>>,
}

impl ComplexMatrix {
    pub fn new(rows: Vec<Vec<Complex64>>) -> Result<Self, Error> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::InvalidDescriptor("empty matrix".into()));
        }
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidDescriptor("matrix is not square".into()));
        }
        if rows
            .iter()
            .flatten()
            .any(|z| !z.re.is_finite() || !z.im.is_finite())
        {
            return Err(Error::InvalidDescriptor("non-finite matrix entry".into()));
        }
        Ok(ComplexMatrix { rows })
    }

    pub fn identity(n: usize) -> Self {
        let mut rows = vec![vec![Complex64::new(0.0, 0.0); n]; n];
        for (k, row) in rows.iter_mut().enumerate() {
            row[k] = Complex64::new(1.0, 0.0);
        }
        ComplexMatrix { rows }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn entry(&self, j: usize, k: usize) -> Complex64 {
        self.rows[j][k]
    }

    pub fn rows(&self) -> &[Vec<Complex64>] {
        &self.rows
    }

    /// Largest entry modulus; scale for relative comparisons.
    pub fn max_modulus(&self) -> f64 {
        self.rows
            .iter()
            .flatten()
            .map(|z| z.norm())
            .fold(0.0, f64::max)
    }

    /// `max_jk |A_jk − conj(A_kj)|`.
    pub fn hermitian_defect(&self) -> f64 {
        let n = self.dim();
        let mut worst = 0.0f64;
        for j in 0..n {
            for k in 0..n {
                worst = worst.max((self.rows[j][k] - self.rows[k][j].conj()).norm());
            }
        }
        worst
    }

    /// Quadratic form `x† A x` (complex; imaginary part is rounding noise
    /// for Hermitian A).
    pub fn quadform(&self, x: &CVector) -> Complex64 {
        let xs = x.components();
        let mut acc = Complex64::new(0.0, 0.0);
        for (j, row) in self.rows.iter().enumerate() {
            for (k, a) in row.iter().enumerate() {
                acc += xs[j].conj() * a * xs[k];
            }
        }
        acc
    }

    /// Matrix-vector product `A x`.
    pub fn mul_vec(&self, x: &CVector) -> CVector {
        let xs = x.components();
        CVector::new(
            self.rows
                .iter()
                .map(|row| row.iter().zip(xs).map(|(a, b)| a * b).sum())
                .collect(),
        )
        .expect("finite product of finite entries")
    }
}

impl Serialize for ComplexMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let wire: Vec<Vec<(f64, f64)>> = self
            .rows
            .iter()
            .map(|row| row.iter().map(|z| (z.re, z.im)).collect())
            .collect();
        wire.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for ComplexMatrix {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let wire: Vec<Vec<(f64, f64)>> = Vec::deserialize(deserializer)?;
        let rows = wire
            .into_iter()
            .map(|row| {
                row.into_iter()
                    .map(|(re, im)| Complex64::new(re, im))
                    .collect()
            })
            .collect();
        ComplexMatrix::new(rows).map_err(D::Error::custom)
    }
}

/// Cholesky test for Hermitian positive definiteness.
///
/// Returns false when any pivot drops below `1e-12` times the matrix
/// scale. Assumes the Hermitian defect was checked separately.
pub(crate) fn is_positive_definite(a: &ComplexMatrix) -> bool {
    let n = a.dim();
    let scale = a.max_modulus().max(1e-300);
    let mut l = vec![vec![Complex64::new(0.0, 0.0); n]; n];
    for j in 0..n {
        for k in 0..=j {
            let mut sum = a.entry(j, k);
            for (x, y) in l[j][..k].iter().zip(&l[k][..k]) {
                sum -= *x * y.conj();
            }
            if j == k {
                let pivot = sum.re;
                if pivot <= 1e-12 * scale {
                    return false;
                }
                l[j][j] = Complex64::new(pivot.sqrt(), 0.0);
            } else {
                l[j][k] = sum / l[k][k];
            }
        }
    }
    true
}

/// Rank of the linear map `x ↦ (rows_k · x)` and, when rank-deficient, a
/// Euclidean-unit kernel vector.
///
/// Gaussian elimination with partial pivoting; pivots below `tol` times
/// the largest entry count as zero.
pub(crate) fn rank_and_kernel(rows: &[Vec<Complex64>], tol: f64) -> (usize, Option<CVector>) {
    let m = rows.len();
    if m == 0 {
        return (0, None);
    }
    let n = rows[0].len();
    let mut a: Vec<Vec<Complex64>> = rows.to_vec();
    let scale = a
        .iter()
        .flatten()
        .map(|z| z.norm())
        .fold(0.0f64, f64::max)
        .max(1e-300);

    let mut pivot_cols: Vec<usize> = Vec::new();
    let mut row = 0usize;
    for col in 0..n {
        // find pivot
        let mut best = row;
        for r in row..m {
            if a[r][col].norm() > a[best][col].norm() {
                best = r;
            }
        }
        if row >= m || a[best][col].norm() <= tol * scale {
            continue;
        }
        a.swap(row, best);
        let pivot = a[row][col];
        let pivot_row: Vec<Complex64> = a[row][col..].to_vec();
        for (r, current) in a.iter_mut().enumerate() {
            if r != row {
                let factor = current[col] / pivot;
                for (entry, p) in current[col..].iter_mut().zip(&pivot_row) {
                    *entry -= factor * *p;
                }
            }
        }
        pivot_cols.push(col);
        row += 1;
        if row == m {
            break;
        }
    }

    let rank = pivot_cols.len();
    if rank >= n {
        return (rank, None);
    }

    // Build a kernel vector from the first free column.
    let free = (0..n).find(|c| !pivot_cols.contains(c)).unwrap();
    let mut x = vec![Complex64::new(0.0, 0.0); n];
    x[free] = Complex64::new(1.0, 0.0);
    // pivot row r reads: a[r][pc]·x[pc] + a[r][free]·x[free] = 0
    for (reduced_row, &pc) in a.iter().zip(&pivot_cols) {
        x[pc] = -reduced_row[free] / reduced_row[pc];
    }
    let v = CVector::new(x).expect("kernel vector is finite");
    let norm = v.euclidean_norm();
    if norm == 0.0 {
        return (rank, None);
    }
    (rank, Some(v.scaled(Complex64::new(1.0 / norm, 0.0))))
}

/// Smallest eigenvalue of a Hermitian matrix with its eigenvector, via
/// power iteration on `cI − A` (c = a Gershgorin upper bound).
pub(crate) fn min_eigenpair(a: &ComplexMatrix) -> (f64, CVector) {
    let n = a.dim();
    let c: f64 = (0..n)
        .map(|j| (0..n).map(|k| a.entry(j, k).norm()).sum::<f64>())
        .fold(0.0, f64::max)
        .max(1.0);
    // deterministic start with all directions present
    let mut v = CVector::new(
        (0..n)
            .map(|k| Complex64::new(1.0 + 0.1 * k as f64, 0.05 * (k as f64 + 1.0)))
            .collect(),
    )
    .unwrap();
    let mut lambda = 0.0;
    for _ in 0..500 {
        let av = a.mul_vec(&v);
        // w = c·v − A·v
        let w = CVector::lin_comb(
            Complex64::new(c, 0.0),
            &v,
            Complex64::new(-1.0, 0.0),
            &av,
        );
        let norm = w.euclidean_norm();
        if norm == 0.0 {
            break;
        }
        v = w.scaled(Complex64::new(1.0 / norm, 0.0));
        lambda = a.quadform(&v).re;
    }
    (lambda, v)
}
