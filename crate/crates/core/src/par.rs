//! Order-preserving map over a slice, on a rayon pool of the requested width
//! when the `parallel` feature is enabled and sequentially otherwise.

/// Applies `f` to every item and returns the results in input order.
/// `jobs <= 1` always takes the sequential path.
pub fn ordered_map<T, R, F>(items: &[T], jobs: usize, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if jobs > 1 {
        use rayon::prelude::*;
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .expect("failed to build worker pool");
        return pool.install(|| items.par_iter().map(&f).collect());
    }
    #[cfg(not(feature = "parallel"))]
    let _ = jobs;
    items.iter().map(f).collect()
}
