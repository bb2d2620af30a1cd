//! Fixed-order fan-out helper for Monte Carlo sweeps.
//!
//! Results come back indexed 0..n in a `Vec` regardless of how many
//! workers ran, so downstream reductions are bitwise reproducible.

use alloc::vec::Vec;

#[cfg(feature = "parallel")]
pub fn map_indexed<R, F>(n: usize, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(usize) -> R + Sync,
{
    use rayon::prelude::*;
    (0..n).into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn map_indexed<R, F>(n: usize, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(usize) -> R + Sync,
{
    (0..n).map(f).collect()
}
