//! Work-sharing over `std::thread::scope`, capped by `FOAM_THREADS`.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::thread;

use foam_core::skein::{run_suite, SkeinReport, Suite};

/// Worker count: `FOAM_THREADS` if set to a positive integer, otherwise the
/// available parallelism.
pub fn threads() -> usize {
    std::env::var("FOAM_THREADS")
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&n| n > 0)
        .unwrap_or_else(|| thread::available_parallelism().map(|n| n.get()).unwrap_or(1))
}

/// `(0..n).map(f)` evaluated on up to `threads()` workers, in index order.
pub fn par_map<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync,
{
    let workers = threads().min(n);
    if workers <= 1 {
        return (0..n).map(f).collect();
    }
    let next = AtomicUsize::new(0);
    let slots: Mutex<Vec<Option<T>>> = Mutex::new((0..n).map(|_| None).collect());
    thread::scope(|s| {
        for _ in 0..workers {
            s.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= n {
                    break;
                }
                let v = f(i);
                slots.lock().unwrap()[i] = Some(v);
            });
        }
    });
    slots.into_inner().unwrap().into_iter().map(|v| v.expect("every index computed")).collect()
}

/// Same report as [`run_suite`], with cases spread over worker threads.
pub fn run_suite_parallel(suite: Suite, seed: u64, count: usize) -> SkeinReport {
    if threads() <= 1 {
        return run_suite(suite, seed, count);
    }
    let outcomes = par_map(count, |i| suite.check_case(seed, i));
    SkeinReport::from_outcomes(suite, seed, outcomes)
}
