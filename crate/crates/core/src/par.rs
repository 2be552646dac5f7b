//! Order-preserving parallel map; sequential without the `std` feature.

use alloc::vec::Vec;

#[cfg(feature = "std")]
pub(crate) fn map_range<R, F>(len: usize, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(usize) -> R + Sync + Send,
{
    use rayon::prelude::*;
    (0..len).into_par_iter().map(f).collect()
}

#[cfg(not(feature = "std"))]
pub(crate) fn map_range<R, F>(len: usize, f: F) -> Vec<R>
where
    F: Fn(usize) -> R,
{
    (0..len).map(f).collect()
}
