use rayon::prelude::*;
use rayon::ThreadPoolBuilder;

/// Runs `trial` for every index in `0..trials`, possibly in parallel, and
/// returns the results in trial order. `threads = None` uses the global pool.
pub fn run_ordered<T, F>(trials: u64, threads: Option<usize>, trial: F) -> Vec<T>
where
    T: Send,
    F: Fn(u64) -> T + Sync + Send,
{
    let run = || (0..trials).into_par_iter().map(&trial).collect();
    match threads {
        Some(n) => ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build()
            .expect("thread pool")
            .install(run),
        None => run(),
    }
}
