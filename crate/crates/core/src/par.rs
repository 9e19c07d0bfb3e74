//! Thin dispatch layer between rayon and sequential iteration.
//!
//! With the default `parallel` feature the mapping helpers fan out over the
//! rayon thread pool; without it they degrade to plain iterators. All
//! callers reduce with order-independent operations, so the feature does not
//! change any result.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[cfg(feature = "parallel")]
pub fn map_collect<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    items.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn map_collect<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    F: Fn(&T) -> R,
{
    items.iter().map(f).collect()
}

/// Sequential version, always available (used by the benches for an
/// apples-to-apples comparison and by callers that are already inside a
/// parallel region).
pub fn map_collect_seq<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    F: Fn(&T) -> R,
{
    items.iter().map(f).collect()
}
