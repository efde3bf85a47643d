//! Sweep execution helpers.
//!
//! Exhaustive sweeps (coherence checks, cocycle validation, equivalence
//! searches) run through these wrappers. With the default `parallel` feature
//! they fan out over rayon; without it they fall back to plain iterators.
//! Both paths return results in input order, so output is identical either
//! way. The `_seq` variants are always available for benchmark comparison.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Name of the active execution mode, for bench labels and reports.
pub fn mode() -> &'static str {
    if cfg!(feature = "parallel") {
        "parallel"
    } else {
        "sequential"
    }
}

pub fn map_collect<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        items.par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        map_collect_seq(items, f)
    }
}

pub fn map_collect_seq<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    F: Fn(&T) -> U,
{
    items.iter().map(f).collect()
}

/// First (in input order) non-`None` result of `f`.
pub fn find_map_first<T, U, F>(items: &[T], f: F) -> Option<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> Option<U> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        items.par_iter().find_map_first(f)
    }
    #[cfg(not(feature = "parallel"))]
    {
        find_map_first_seq(items, f)
    }
}

pub fn find_map_first_seq<T, U, F>(items: &[T], f: F) -> Option<U>
where
    F: Fn(&T) -> Option<U>,
{
    items.iter().find_map(f)
}
