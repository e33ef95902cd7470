//! Sequential/parallel execution of exhaustive quantifier scans.
//!
//! Every checker in this crate reduces to "find the first index in
//! `0..total` whose decoded assignment falsifies a formula". The parallel
//! path partitions the index range across the rayon pool and keeps the
//! global minimum, so the reported witness is identical to the sequential
//! one. Without the `parallel` feature everything runs sequentially.

use std::sync::atomic::{AtomicU8, Ordering};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExecMode {
    Sequential,
    Parallel,
}

const MODE_SEQ: u8 = 0;
const MODE_PAR: u8 = 1;

static DEFAULT_MODE: AtomicU8 = AtomicU8::new(if cfg!(feature = "parallel") {
    MODE_PAR
} else {
    MODE_SEQ
});

/// Sets the process-wide default mode used by the convenience checker entry
/// points. Ignored (always sequential) when built without `parallel`.
pub fn set_default_mode(mode: ExecMode) {
    let v = match mode {
        ExecMode::Sequential => MODE_SEQ,
        ExecMode::Parallel => MODE_PAR,
    };
    DEFAULT_MODE.store(v, Ordering::Relaxed);
}

pub fn default_mode() -> ExecMode {
    match DEFAULT_MODE.load(Ordering::Relaxed) {
        MODE_SEQ => ExecMode::Sequential,
        _ => ExecMode::Parallel,
    }
}

/// Configures the rayon pool size. Must be called before the first parallel
/// scan; later calls are silently ignored (rayon's global pool is
/// build-once). No-op without the `parallel` feature.
#[allow(unused_variables)]
pub fn set_workers(workers: usize) {
    #[cfg(feature = "parallel")]
    {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build_global();
    }
}

/// Scans below this many assignments stay sequential even in parallel mode;
/// thread handoff costs more than the scan itself.
const PAR_THRESHOLD: u64 = 1 << 14;

/// Returns the smallest index in `0..total` where `fails` is true, or None.
pub fn find_first(total: u64, mode: ExecMode, fails: impl Fn(u64) -> bool + Sync) -> Option<u64> {
    match mode {
        ExecMode::Sequential => (0..total).find(|&i| fails(i)),
        ExecMode::Parallel => find_first_par(total, &fails),
    }
}

#[cfg(feature = "parallel")]
fn find_first_par(total: u64, fails: &(impl Fn(u64) -> bool + Sync)) -> Option<u64> {
    use rayon::prelude::*;
    if total < PAR_THRESHOLD {
        return (0..total).find(|&i| fails(i));
    }
    (0..total)
        .into_par_iter()
        .with_min_len(PAR_THRESHOLD as usize / 4)
        .find_first(|&i| fails(i))
}

#[cfg(not(feature = "parallel"))]
fn find_first_par(total: u64, fails: &(impl Fn(u64) -> bool + Sync)) -> Option<u64> {
    (0..total).find(|&i| fails(i))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parallel_and_sequential_agree_on_first_hit() {
        let fails = |i: u64| i % 7919 == 0 && i > 0;
        let seq = find_first(100_000, ExecMode::Sequential, fails);
        let par = find_first(100_000, ExecMode::Parallel, fails);
        assert_eq!(seq, Some(7919));
        assert_eq!(par, seq);
    }

    #[test]
    fn empty_and_missing_ranges() {
        assert_eq!(find_first(0, ExecMode::Sequential, |_| true), None);
        assert_eq!(find_first(100_000, ExecMode::Parallel, |_| false), None);
    }
}
