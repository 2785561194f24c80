//! Data-parallel helpers with a sequential fallback.
//!
//! With the `parallel` feature (on by default) [`Execution::Parallel`] runs
//! on the rayon global pool; without it, every helper runs sequentially.
//! Results never depend on the chosen mode: searches return the
//! lowest-index hit and maps preserve order.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Execution {
    Sequential,
    Parallel,
}

impl Default for Execution {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Execution::Parallel
        } else {
            Execution::Sequential
        }
    }
}

impl Execution {
    /// True when work will actually be spread over threads.
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Execution::Parallel
    }
}

/// First index in `0..len` for which `f` yields a value.
pub fn find_first<R, F>(len: usize, exec: Execution, f: F) -> Option<(usize, R)>
where
    R: Send,
    F: Fn(usize) -> Option<R> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        return (0..len)
            .into_par_iter()
            .with_min_len(256)
            .find_map_first(|i| f(i).map(|r| (i, r)));
    }
    let _ = exec;
    (0..len).find_map(|i| f(i).map(|r| (i, r)))
}

pub fn map<T, R, F>(items: &[T], exec: Execution, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        return items.par_iter().with_min_len(256).map(f).collect();
    }
    let _ = exec;
    items.iter().map(f).collect()
}

pub fn map_range<R, F>(len: usize, exec: Execution, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(usize) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        return (0..len).into_par_iter().with_min_len(64).map(f).collect();
    }
    let _ = exec;
    (0..len).map(f).collect()
}

pub fn sum_range<F>(len: usize, exec: Execution, f: F) -> u64
where
    F: Fn(usize) -> u64 + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        return (0..len).into_par_iter().with_min_len(64).map(f).sum();
    }
    let _ = exec;
    (0..len).map(f).sum()
}

pub fn sort_unstable<T: Ord + Send>(items: &mut [T], exec: Execution) {
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        items.par_sort_unstable();
        return;
    }
    let _ = exec;
    items.sort_unstable();
}
