//! Command-line driver for laser-assisted proton–nucleus Born scattering:
//! configuration handling, scan dispatch and table output.

// Negated comparisons reject NaN along with out-of-range values.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod commands;
pub mod config;
mod error;
pub mod output;
pub mod validate;

pub use error::CliError;

/// Environment variable capping the worker-thread count.
pub const THREADS_ENV: &str = "LASCAT_THREADS";

/// Sizes the global worker pool from [`THREADS_ENV`] when set.
pub fn configure_threads() -> Result<(), CliError> {
    let Ok(raw) = std::env::var(THREADS_ENV) else {
        return Ok(());
    };
    let threads: usize = raw.trim().parse().ok().filter(|&n| n > 0).ok_or_else(|| {
        CliError::config(
            THREADS_ENV,
            &format!("expected a positive integer, got `{raw}`"),
        )
    })?;
    // A pool built earlier in the process keeps its size.
    let _ = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global();
    Ok(())
}
