//! Sample-parallel execution with a sequential fallback.
//!
//! Work is always indexed by sample number and collected in index order, so
//! any reduction done afterwards sees the same sequence whatever the worker
//! count.

/// How to run a batch of independent, indexed work units.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Execution {
    #[cfg_attr(not(feature = "parallel"), default)]
    Sequential,
    #[cfg(feature = "parallel")]
    #[default]
    Parallel,
}

impl Execution {
    /// Evaluate `f(0), ..., f(n - 1)` and return the results in index order.
    pub fn map<T, F>(self, n: u64, f: F) -> Vec<T>
    where
        T: Send,
        F: Fn(u64) -> T + Sync + Send,
    {
        match self {
            Execution::Sequential => (0..n).map(f).collect(),
            #[cfg(feature = "parallel")]
            Execution::Parallel => {
                use rayon::prelude::*;
                (0..n).into_par_iter().map(f).collect()
            }
        }
    }
}

/// Run `f` on a pool of `threads` workers (`None`: library default).
/// Without the `parallel` feature this just calls `f`.
pub fn with_threads<R, F>(threads: Option<usize>, f: F) -> R
where
    R: Send,
    F: FnOnce() -> R + Send,
{
    #[cfg(feature = "parallel")]
    {
        if let Some(n) = threads {
            let pool = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build().expect("thread pool");
            return pool.install(f);
        }
        f()
    }
    #[cfg(not(feature = "parallel"))]
    {
        let _ = threads;
        f()
    }
}
