//! Cooperative resource limits for the polynomial kernel.
//!
//! The kernel polls these between term-merge batches. When a limit trips it
//! unwinds with an [`Exhausted`] payload, which front ends catch with
//! `std::panic::catch_unwind`.

use std::sync::atomic::{AtomicU64, AtomicUsize, Ordering};
use std::sync::OnceLock;
use std::time::{Duration, Instant};

static MAX_TERMS: AtomicUsize = AtomicUsize::new(usize::MAX);
// milliseconds after EPOCH; 0 means no deadline
static DEADLINE_MS: AtomicU64 = AtomicU64::new(0);
static EPOCH: OnceLock<Instant> = OnceLock::new();

/// Panic payload raised when a limit is exceeded.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exhausted {
    Terms(usize),
    Deadline,
}

fn epoch() -> Instant {
    *EPOCH.get_or_init(Instant::now)
}

pub fn set_max_terms(n: usize) {
    MAX_TERMS.store(n, Ordering::Relaxed);
}

pub fn max_terms() -> usize {
    MAX_TERMS.load(Ordering::Relaxed)
}

pub fn set_timeout(d: Option<Duration>) {
    match d {
        None => DEADLINE_MS.store(0, Ordering::Relaxed),
        Some(d) => {
            let ms = (Instant::now() + d).duration_since(epoch()).as_millis() as u64;
            DEADLINE_MS.store(ms.max(1), Ordering::Relaxed);
        }
    }
}

#[inline]
pub fn check_terms(n: usize) {
    if n > MAX_TERMS.load(Ordering::Relaxed) {
        std::panic::panic_any(Exhausted::Terms(n));
    }
}

#[inline]
pub fn check_deadline() {
    let ms = DEADLINE_MS.load(Ordering::Relaxed);
    if ms != 0 && epoch().elapsed().as_millis() as u64 >= ms {
        std::panic::panic_any(Exhausted::Deadline);
    }
}
