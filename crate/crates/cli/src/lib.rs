//! File formats, verification sweeps and the `cyclemod` command line on top
//! of [`cyclemod_core`].

pub mod cli;
pub mod corpus;
pub mod render;
pub mod spec_json;
pub mod tables;
pub mod verify;

/// Builds a worker pool with `jobs` threads; `0` means one per logical CPU.
pub fn worker_pool(jobs: usize) -> rayon::ThreadPool {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .expect("failed to start worker threads")
}
