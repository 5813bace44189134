//! Index-ordered batch evaluation.
//!
//! `batch_map(n, f)` evaluates `f(0..n)` and collects the results in
//! index order — in parallel via rayon under the `parallel` feature
//! (default), sequentially otherwise. Because workers receive their
//! sub-seeds by index and results are merged in index order, the output
//! is bitwise identical whichever path runs and however many threads
//! rayon uses. `batch_map_seq` is the always-sequential variant, kept
//! callable for benchmark comparisons.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[cfg(feature = "parallel")]
pub fn batch_map<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    (0..n).into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn batch_map<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    (0..n).map(f).collect()
}

/// Sequential reference path; identical results to [`batch_map`].
pub fn batch_map_seq<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    (0..n).map(f).collect()
}
