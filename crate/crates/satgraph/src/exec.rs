//! Multi-threaded [`Executor`] backed by a dedicated rayon pool.

use rayon::prelude::*;
use rayon::{ThreadPool, ThreadPoolBuilder};
use satgraph_core::{Executor, Graph};

/// Splits each enumeration level across `workers` threads. Results are
/// collected in item order and the first hit is the lowest index, so the
/// output matches [`satgraph_core::Serial`] exactly.
pub struct Parallel {
    pool: ThreadPool,
}

impl Parallel {
    pub fn new(workers: usize) -> Result<Self, rayon::ThreadPoolBuildError> {
        let pool = ThreadPoolBuilder::new().num_threads(workers.max(1)).build()?;
        Ok(Parallel { pool })
    }

    pub fn workers(&self) -> usize {
        self.pool.current_num_threads()
    }
}

impl Executor for Parallel {
    fn map<T, F>(&self, items: &[Graph], f: F) -> Vec<T>
    where
        T: Send,
        F: Fn(&Graph) -> T + Sync + Send,
    {
        self.pool.install(|| items.par_iter().map(f).collect())
    }

    fn find_first<F>(&self, items: &[Graph], pred: F) -> Option<usize>
    where
        F: Fn(&Graph) -> bool + Sync + Send,
    {
        self.pool.install(|| items.par_iter().position_first(pred))
    }
}
