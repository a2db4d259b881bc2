//! Runnable identity checks. Each compares two independent computations
//! either symbolically or at seeded random rational points.

mod checks;
mod report;

pub use checks::{
    check_branching, check_correspondence, check_degeneration, check_ik, check_mp_algebra, check_pairing,
    check_rll_spec, check_ybe_spec, configs_for, run_all, run_check, CONFIG_SAMPLE_LIMIT,
};
pub use report::{CheckName, CheckReport, CheckSpec, Mode, Tally, Witness, DEFAULT_TRIALS};

/// Environment variable capping the worker pool.
pub const THREADS_ENV: &str = "VERTEXPOLY_THREADS";

/// Runs `f` inside a rayon pool sized by [`THREADS_ENV`] when it is set to a
/// positive integer, and in the global pool otherwise.
pub fn with_thread_pool<R: Send>(f: impl FnOnce() -> R + Send) -> crate::Result<R> {
    let threads = std::env::var(THREADS_ENV).ok().and_then(|v| v.trim().parse::<usize>().ok()).filter(|&n| n > 0);
    match threads {
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .map_err(|e| crate::Error::InvalidConfig(format!("thread pool: {e}")))?;
            Ok(pool.install(f))
        }
        None => Ok(f()),
    }
}
