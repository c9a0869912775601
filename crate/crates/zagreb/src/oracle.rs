//! Parallel driver for the exhaustive oracle.
//!
//! Each neighbor set of vertex `0` is an independent subtree. The subtrees
//! are summarized on a rayon pool and merged; the merge picks the same
//! witness regardless of how the work was split, so results match the
//! sequential oracle exactly.

use std::time::Instant;

use rayon::prelude::*;
use zagreb_core::search::OracleSummary;
use zagreb_core::{DegreeSequence, OracleResult, RealizationSearch, SearchError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TimedOracle {
    pub result: OracleResult,
    pub workers: usize,
    pub elapsed_ms: u128,
}

/// A rayon pool with `jobs` threads, or rayon's default size.
pub fn thread_pool(jobs: Option<usize>) -> rayon::ThreadPool {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(jobs) = jobs {
        builder = builder.num_threads(jobs.max(1));
    }
    builder.build().expect("thread pool")
}

/// Runs the oracle with `jobs` workers (rayon's default when `None`).
pub fn parallel_oracle(seq: &DegreeSequence, cap: usize, jobs: Option<usize>) -> Result<TimedOracle, SearchError> {
    let start = Instant::now();
    let search = RealizationSearch::new(seq, true, cap)?;
    let pool = thread_pool(jobs);
    let summary = pool.install(|| {
        search
            .branches()
            .into_par_iter()
            .map(|b| search.summarize_branch(b))
            .reduce(OracleSummary::default, OracleSummary::merge)
    });
    let result = summary.into_result(seq)?;
    Ok(TimedOracle { result, workers: pool.current_num_threads(), elapsed_ms: start.elapsed().as_millis() })
}
