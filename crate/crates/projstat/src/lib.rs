//! Std companion to `projstat-core`: a thread-pool executor, report and
//! statistics rendering, and the command-line front end.

pub mod cli;
pub mod render;

use std::collections::BTreeMap;
use std::time::Instant;

use projstat_core::exec::{fold_range, Executor};
use projstat_core::group::{Elements, DEFAULT_BUDGET};
use projstat_core::stats::flag_stats;
use projstat_core::{GroupDescriptor, ProjectiveElement, Result, VerificationReport, Verifier};
use rayon::prelude::*;

/// Environment variable that overrides the enumeration budget.
pub const BUDGET_ENV: &str = "PROJSTAT_BUDGET";

/// Splits the permutation ranks into chunks and folds them on the rayon
/// pool. Chunks are merged left to right, so results do not depend on
/// scheduling.
#[derive(Clone, Copy, Debug)]
pub struct Parallel {
    chunks: u64,
}

impl Default for Parallel {
    fn default() -> Self {
        Self {
            chunks: 4 * rayon::current_num_threads() as u64,
        }
    }
}

impl Parallel {
    pub fn with_chunks(chunks: u64) -> Self {
        Self { chunks: chunks.max(1) }
    }
}

impl Executor for Parallel {
    fn fold_elements<A, I, F, M>(&self, group: GroupDescriptor, identity: I, fold: F, merge: M) -> A
    where
        A: Send,
        I: Fn() -> A + Sync + Send,
        F: Fn(&mut A, &ProjectiveElement) + Sync + Send,
        M: Fn(A, A) -> A + Sync + Send,
    {
        let total = Elements::permutation_count(&group);
        let chunks = self.chunks.min(total.max(1));
        let size = total.div_ceil(chunks).max(1);
        let parts: Vec<A> = (0..chunks)
            .into_par_iter()
            .map(|c| {
                let lo = (c * size).min(total);
                let hi = ((c + 1) * size).min(total);
                fold_range(group, lo..hi, identity(), &fold)
            })
            .collect();
        parts.into_iter().reduce(&merge).unwrap_or_else(identity)
    }
}

/// Budget from [`BUDGET_ENV`], falling back to the library default.
pub fn budget_from_env() -> std::result::Result<u64, String> {
    match std::env::var(BUDGET_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| format!("{BUDGET_ENV} must be a non-negative integer, got {v:?}")),
        Err(_) => Ok(DEFAULT_BUDGET),
    }
}

pub fn parallel_verifier(budget: u64) -> Verifier<Parallel> {
    Verifier::with_executor(Parallel::default()).with_budget(budget)
}

/// Runs `f` and records its wall-clock time in the report.
pub fn timed(f: impl FnOnce() -> Result<VerificationReport>) -> Result<VerificationReport> {
    let start = Instant::now();
    let mut rep = f()?;
    rep.millis = Some(start.elapsed().as_millis() as u64);
    Ok(rep)
}

/// Coefficients of `Σ_g t^{des} q^{fmaj} a^{col}`, keyed by `(des, fmaj, col)`.
pub fn distribution<E: Executor>(exec: &E, group: GroupDescriptor) -> BTreeMap<(u32, u32, u32), u64> {
    exec.fold_elements(
        group,
        BTreeMap::new,
        |acc: &mut BTreeMap<(u32, u32, u32), u64>, g| {
            let f = flag_stats(g);
            *acc.entry((f.des, f.fmaj, f.col)).or_insert(0) += 1;
        },
        |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_insert(0) += v;
            }
            a
        },
    )
}
