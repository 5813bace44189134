//! Vectors in ℂⁿ.

use num_complex::Complex64;
use serde::de::{SeqAccess, Visitor};
use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::Error;

/// A finite vector in ℂⁿ, n ≥ 1.
///
/// Serializes as a JSON array of `[re, im]` pairs.
#[derive(Clone, Debug, PartialEq)]
pub struct CVector {
    components: Vec<Complex64>,
}

impl CVector {
    /// Checked constructor: components must be non-empty and finite.
    pub fn new(components: Vec<Complex64>) -> Result<Self, Error> {
        if components.is_empty() {
            return Err(Error::InvalidVector("dimension must be at least 1".into()));
        }
        if components
            .iter()
            .any(|z| !z.re.is_finite() || !z.im.is_finite())
        {
            return Err(Error::InvalidVector("non-finite component".into()));
        }
        Ok(CVector { components })
    }

    /// Vector from `(re, im)` pairs.
    pub fn from_pairs(pairs: &[(f64, f64)]) -> Result<Self, Error> {
        Self::new(pairs.iter().map(|&(re, im)| Complex64::new(re, im)).collect())
    }

    /// Vector from real components.
    pub fn from_reals(reals: &[f64]) -> Result<Self, Error> {
        Self::new(reals.iter().map(|&r| Complex64::new(r, 0.0)).collect())
    }

    pub fn zero(dim: usize) -> Self {
        CVector {
            components: vec![Complex64::new(0.0, 0.0); dim.max(1)],
        }
    }

    /// Standard basis vector e_k.
    pub fn basis(dim: usize, k: usize) -> Self {
        let mut components = vec![Complex64::new(0.0, 0.0); dim.max(1)];
        components[k] = Complex64::new(1.0, 0.0);
        CVector { components }
    }

    pub fn dim(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[Complex64] {
        &self.components
    }

    pub fn scaled(&self, z: Complex64) -> Self {
        CVector {
            components: self.components.iter().map(|c| c * z).collect(),
        }
    }

    /// Multiply by `e^{i·phase}`.
    pub fn rotated(&self, phase: f64) -> Self {
        self.scaled(Complex64::from_polar(1.0, phase))
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.dim(), other.dim());
        CVector {
            components: self
                .components
                .iter()
                .zip(&other.components)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        debug_assert_eq!(self.dim(), other.dim());
        CVector {
            components: self
                .components
                .iter()
                .zip(&other.components)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    /// `alpha·x + beta·y`.
    pub fn lin_comb(alpha: Complex64, x: &Self, beta: Complex64, y: &Self) -> Self {
        debug_assert_eq!(x.dim(), y.dim());
        CVector {
            components: x
                .components
                .iter()
                .zip(&y.components)
                .map(|(a, b)| alpha * a + beta * b)
                .collect(),
        }
    }

    /// Hermitian pairing `Σ_j conj(self_j)·other_j`.
    pub fn herm_pair(&self, other: &Self) -> Complex64 {
        debug_assert_eq!(self.dim(), other.dim());
        self.components
            .iter()
            .zip(&other.components)
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    pub fn euclidean_norm(&self) -> f64 {
        self.herm_pair(self).re.max(0.0).sqrt()
    }

    pub fn max_modulus(&self) -> f64 {
        self.components
            .iter()
            .map(|z| z.norm())
            .fold(0.0, f64::max)
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(|z| z.re == 0.0 && z.im == 0.0)
    }

    /// Rotate so the first significant component becomes real and
    /// nonnegative; the phases of the remaining components stay free.
    ///
    /// "Significant" means modulus above `1e-12` times the largest
    /// modulus, which keeps the gauge stable under small perturbations.
    pub fn gauge_leading_phase(&self) -> Self {
        let scale = self.max_modulus();
        if scale == 0.0 {
            return self.clone();
        }
        let lead = self
            .components
            .iter()
            .find(|z| z.norm() > 1e-12 * scale)
            .copied();
        match lead {
            Some(z) => self.scaled(z.conj() / z.norm()),
            None => self.clone(),
        }
    }
}

impl Serialize for CVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.components.len()))?;
        for z in &self.components {
            seq.serialize_element(&(z.re, z.im))?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for CVector {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct PairsVisitor;
        impl<'de> Visitor<'de> for PairsVisitor {
            type Value = CVector;
            fn expecting(&self, f: &mut std::fmt::Formatter) -> std::fmt::Result {
                f.write_str("a sequence of [re, im] pairs")
            }
            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<CVector, A::Error> {
                let mut components = Vec::new();
                while let Some((re, im)) = seq.next_element::<(f64, f64)>()? {
                    components.push(Complex64::new(re, im));
                }
                CVector::new(components).map_err(serde::de::Error::custom)
            }
        }
        deserializer.deserialize_seq(PairsVisitor)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_empty_and_non_finite() {
        assert!(CVector::new(vec![]).is_err());
        assert!(CVector::new(vec![Complex64::new(f64::NAN, 0.0)]).is_err());
        assert!(CVector::new(vec![Complex64::new(0.0, f64::INFINITY)]).is_err());
    }

    #[test]
    fn serializes_as_pair_arrays() {
        let v = CVector::from_pairs(&[(1.0, 0.0), (0.0, -2.5)]).unwrap();
        let json = serde_json::to_string(&v).unwrap();
        assert_eq!(json, "[[1.0,0.0],[0.0,-2.5]]");
        let back: CVector = serde_json::from_str(&json).unwrap();
        assert_eq!(back, v);
    }

    #[test]
    fn gauge_makes_leading_component_real() {
        let v = CVector::from_pairs(&[(0.0, 2.0), (1.0, 1.0)]).unwrap();
        let g = v.gauge_leading_phase();
        let lead = g.components()[0];
        assert!(lead.im.abs() < 1e-12);
        assert!(lead.re > 0.0);
        // moduli unchanged
        assert!((g.components()[1].norm() - v.components()[1].norm()).abs() < 1e-12);
    }

    #[test]
    fn lin_comb_matches_manual() {
        let x = CVector::from_reals(&[1.0, 0.0]).unwrap();
        let y = CVector::from_reals(&[0.0, 1.0]).unwrap();
        let z = CVector::lin_comb(Complex64::new(2.0, 0.0), &x, Complex64::new(0.0, 1.0), &y);
        assert_eq!(z.components()[0], Complex64::new(2.0, 0.0));
        assert_eq!(z.components()[1], Complex64::new(0.0, 1.0));
    }
}
