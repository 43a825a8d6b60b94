//! Data-parallel helpers with a sequential fallback.
//!
//! With the `parallel` feature the helpers dispatch to rayon; without it they
//! run on the calling thread. Reductions are ordered so the result never
//! depends on how work was split.

use std::cmp::Ordering;

/// Execution strategy for enumeration and batch routines.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Execution {
    Sequential,
    #[default]
    Parallel,
}

impl Execution {
    /// True when work will actually be spread over threads.
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Execution::Parallel
    }
}

/// Minimum of `f` over `0..count`, ties broken by the lowest index.
pub fn min_by_index<T, F>(exec: Execution, count: u64, f: F) -> Option<(T, u64)>
where
    T: PartialOrd + Send,
    F: Fn(u64) -> T + Sync + Send,
{
    let pick = |a: (T, u64), b: (T, u64)| {
        match b.0.partial_cmp(&a.0) {
            Some(Ordering::Less) => b,
            Some(Ordering::Equal) | None if b.1 < a.1 => b,
            _ => a,
        }
    };
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        use rayon::prelude::*;
        return (0..count)
            .into_par_iter()
            .map(|i| (f(i), i))
            .reduce_with(pick);
    }
    let _ = exec;
    (0..count).map(|i| (f(i), i)).reduce(pick)
}

/// Map `f` over `0..count`, preserving index order in the output.
pub fn map_indexed<T, F>(exec: Execution, count: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        use rayon::prelude::*;
        return (0..count).into_par_iter().map(f).collect();
    }
    let _ = exec;
    (0..count).map(f).collect()
}
