//! Monte Carlo harness: cover-failure frequencies, complexity scaling,
//! per-cell locality, prune soundness and the order-k fit.

pub mod cover;
pub mod gridlocal;
pub mod order_k;
pub mod output;
pub mod prune;
pub mod scaling;
pub mod stats;

pub use cover::{estimate_cover_failure, exact_failure_probability, lemma31_bound, CoverTrial};
pub use gridlocal::{grid_local_complexity, GridLocalReport};
pub use order_k::{order_k_fit, OrderKCell, OrderKReport};
pub use prune::{prune_effectiveness, PruneCell, PruneReport};
pub use scaling::{run_scaling, ExperimentRun, ScaleModel, ScalingSpec, SummaryRow, TrialRecord};

/// SplitMix64 finalizer over `(base, a, b)`, used for per-trial seeds.
pub fn mix_seed(base: u64, a: u64, b: u64) -> u64 {
    let mut z = base ^ a.wrapping_mul(0x9E37_79B9_7F4A_7C15) ^ b.wrapping_mul(0xD1B5_4A32_D192_ED03);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Runs `f` on a pool of `jobs` threads, or on the global pool when `None`.
pub(crate) fn with_jobs<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> T {
    match jobs {
        Some(j) => rayon::ThreadPoolBuilder::new().num_threads(j.max(1)).build().expect("thread pool").install(f),
        None => f(),
    }
}
