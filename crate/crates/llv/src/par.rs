//! Data-parallel helpers. With the `parallel` feature (on by default) the
//! maps below run on rayon with order-preserving collection, so results are
//! independent of the thread schedule; without it they fall back to plain
//! sequential iteration.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Maps `f` over `items`, preserving order.
#[cfg(feature = "parallel")]
pub fn map_collect<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> U + Sync + Send,
{
    items.into_par_iter().map(f).collect()
}

/// Maps `f` over `items`, preserving order.
#[cfg(not(feature = "parallel"))]
pub fn map_collect<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    F: Fn(T) -> U,
{
    items.into_iter().map(f).collect()
}

/// Caps the global thread pool at `jobs` threads. Only effective once and
/// only with the `parallel` feature; silently ignored otherwise.
pub fn configure_jobs(jobs: usize) {
    #[cfg(feature = "parallel")]
    {
        if jobs > 0 {
            let _ = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global();
        }
    }
    #[cfg(not(feature = "parallel"))]
    {
        let _ = jobs;
    }
}

/// Runs `f` on a dedicated pool with the given thread count when parallel,
/// or directly otherwise. Used by the benchmarks to compare schedules.
#[cfg(feature = "parallel")]
pub fn with_pool<R: Send>(threads: usize, f: impl FnOnce() -> R + Send) -> R {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .expect("failed to build thread pool");
    pool.install(f)
}

/// Runs `f` on a dedicated pool with the given thread count when parallel,
/// or directly otherwise. Used by the benchmarks to compare schedules.
#[cfg(not(feature = "parallel"))]
pub fn with_pool<R>(_threads: usize, f: impl FnOnce() -> R) -> R {
    f()
}
