//! Deterministic seeding.
//!
//! Every sampled object in this crate is a pure function of a 64-bit
//! seed. Batch drivers split one master seed into independent child
//! seeds by index, so results do not depend on evaluation order or
//! thread count.

use num_complex::Complex64;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::vector::CVector;

/// SplitMix64 finalizer; bijective on u64.
pub fn splitmix64(state: u64) -> u64 {
    let mut z = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Child seed for the `index`-th element of a batch keyed by `seed`.
pub fn child_seed(seed: u64, index: u64) -> u64 {
    splitmix64(seed ^ index.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

/// The crate-wide generator: ChaCha8, seeded.
pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Standard complex normal: independent N(0,1) real and imaginary parts.
pub fn standard_complex<R: Rng>(rng: &mut R) -> Complex64 {
    let re: f64 = rng.sample(StandardNormal);
    let im: f64 = rng.sample(StandardNormal);
    Complex64::new(re, im)
}

/// Random vector with standard complex normal components.
pub fn random_vector<R: Rng>(dim: usize, rng: &mut R) -> CVector {
    CVector::new((0..dim).map(|_| standard_complex(rng)).collect())
        .expect("normal samples are finite")
}

/// Log-uniform sample in `[lo, hi]`, both positive.
pub fn log_uniform<R: Rng>(rng: &mut R, lo: f64, hi: f64) -> f64 {
    let u: f64 = rng.gen();
    (lo.ln() + u * (hi.ln() - lo.ln())).exp()
}

/// Random complex scalar with log-uniform modulus and uniform phase.
pub fn random_scalar<R: Rng>(rng: &mut R, lo_mod: f64, hi_mod: f64) -> Complex64 {
    let modulus = log_uniform(rng, lo_mod, hi_mod);
    let phase: f64 = rng.gen::<f64>() * std::f64::consts::TAU;
    Complex64::from_polar(modulus, phase)
}
