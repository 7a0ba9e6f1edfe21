//! Range verification sharded over scoped threads.

use std::sync::atomic::{AtomicI64, Ordering};
use std::thread;
use std::time::{Duration, Instant};

use quadsum_core::forms::{applicable_count, Searcher};
use quadsum_core::Statement;

use crate::error::{Error, Result};

#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub statement: String,
    pub lo: i64,
    pub hi: i64,
    pub workers: usize,
    /// applicable n examined, up to and including any counterexample
    pub checked_count: u64,
    /// least applicable n in the range with no witness
    pub first_counterexample: Option<i64>,
    pub elapsed: Duration,
}

impl VerificationReport {
    /// The worker-independent part of the report.
    pub fn outcome(&self) -> (u64, Option<i64>) {
        (self.checked_count, self.first_counterexample)
    }
}

/// Receives the number of n scanned since the previous call.
pub type Progress<'a> = &'a (dyn Fn(u64) + Sync);

pub fn verify_range(s: &Statement, lo: i64, hi: i64, workers: usize) -> Result<VerificationReport> {
    verify_range_with(s, lo, hi, workers, None)
}

/// Splits `[lo, hi]` into one contiguous block per worker. A worker stops at
/// its first counterexample, or as soon as a lower block has reported one.
pub fn verify_range_with(
    s: &Statement,
    lo: i64,
    hi: i64,
    workers: usize,
    progress: Option<Progress>,
) -> Result<VerificationReport> {
    if lo > hi {
        return Err(Error::EmptyRange { lo, hi });
    }
    if workers == 0 {
        return Err(
            quadsum_core::Error::InvalidArgument("workers must be at least 1".into()).into(),
        );
    }
    s.validate()?;
    let start = Instant::now();
    let span = (hi as i128 - lo as i128 + 1) as u128;
    let k = (workers as u128).min(span) as usize;
    let bounds: Vec<(i64, i64)> = (0..k)
        .map(|i| {
            let a = lo as i128 + (span * i as u128 / k as u128) as i128;
            let b = lo as i128 + (span * (i as u128 + 1) / k as u128) as i128 - 1;
            (a as i64, b as i64)
        })
        .collect();
    let best = AtomicI64::new(i64::MAX);
    let results: Vec<Result<Option<i64>>> = thread::scope(|sc| {
        let handles: Vec<_> = bounds
            .iter()
            .map(|&(a, b)| {
                let best = &best;
                sc.spawn(move || scan(s, a, b, best, progress))
            })
            .collect();
        handles
            .into_iter()
            .enumerate()
            .map(|(i, h)| h.join().unwrap_or(Err(Error::WorkerPanic(i))))
            .collect()
    });
    let mut first = None;
    for r in results {
        if let Some(n) = r? {
            first = Some(n);
            break;
        }
    }
    Ok(VerificationReport {
        statement: s.id.clone(),
        lo,
        hi,
        workers,
        checked_count: applicable_count(s, lo, first.unwrap_or(hi)),
        first_counterexample: first,
        elapsed: start.elapsed(),
    })
}

const PROGRESS_STEP: u64 = 1000;

fn scan(
    s: &Statement,
    a: i64,
    b: i64,
    best: &AtomicI64,
    progress: Option<Progress>,
) -> Result<Option<i64>> {
    let searcher = Searcher::new(s)?;
    let mut pending = 0u64;
    let mut out = None;
    for n in a..=b {
        if n > best.load(Ordering::Relaxed) {
            break;
        }
        if searcher.has_witness(n)? == Some(false) {
            best.fetch_min(n, Ordering::Relaxed);
            out = Some(n);
            break;
        }
        pending += 1;
        if pending == PROGRESS_STEP {
            if let Some(p) = progress {
                p(pending);
            }
            pending = 0;
        }
    }
    if let (Some(p), true) = (progress, pending > 0) {
        p(pending);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use quadsum_core::lookup;
    use std::sync::atomic::AtomicU64;

    #[test]
    fn examples() {
        let st = lookup("T1.3i").unwrap().statement;
        let r = verify_range(&st, 1, 10_000, 3).unwrap();
        assert_eq!(r.first_counterexample, None);
        assert_eq!(r.checked_count, 10_000);

        let st = lookup("T1.1iii-unsigned-noexcept").unwrap().statement;
        assert_eq!(
            verify_range(&st, 1, 100, 4).unwrap().first_counterexample,
            Some(56)
        );
        let st = lookup("T1.1iii-unsigned").unwrap().statement;
        assert_eq!(
            verify_range(&st, 1, 100, 4).unwrap().first_counterexample,
            None
        );

        let st = lookup("C4.10-noexcept").unwrap().statement;
        let r = verify_range(&st, 0, 100, 2).unwrap();
        assert_eq!(r.first_counterexample, Some(71));
        assert_eq!(r.checked_count, 72);
    }

    #[test]
    fn outcome_is_independent_of_workers() {
        for id in [
            "C4.10-noexcept",
            "T1.4iii-noexcept",
            "C4.7i",
            "T1.1iii-unsigned-noexcept",
        ] {
            let st = lookup(id).unwrap().statement;
            let one = verify_range(&st, 0, 3000, 1).unwrap();
            for w in [2, 4, 7] {
                assert_eq!(
                    verify_range(&st, 0, 3000, w).unwrap().outcome(),
                    one.outcome(),
                    "{id} {w}"
                );
            }
        }
    }

    #[test]
    fn degenerate_inputs() {
        let st = lookup("T1.1ii").unwrap().statement;
        assert!(matches!(
            verify_range(&st, 5, 4, 1),
            Err(Error::EmptyRange { .. })
        ));
        assert!(verify_range(&st, 1, 4, 0).is_err());
        let r = verify_range(&st, 7, 7, 16).unwrap();
        assert_eq!(r.checked_count, 1);
        // applicability starts at 1
        assert_eq!(verify_range(&st, -5, 3, 2).unwrap().checked_count, 3);
    }

    #[test]
    fn progress_counts_every_n() {
        let st = lookup("T1.2i").unwrap().statement;
        let seen = AtomicU64::new(0);
        let cb = |k: u64| {
            seen.fetch_add(k, Ordering::Relaxed);
        };
        verify_range_with(&st, 1, 5000, 3, Some(&cb)).unwrap();
        assert_eq!(seen.load(Ordering::Relaxed), 5000);
    }
}
