//! The ten acceptance criteria, runnable one at a time or as a batch.
//! Each criterion compares the engine with oracles built here from
//! closed formulas or brute force, and reports one line.

use std::fmt;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

macro_rules! ensure {
    ($cond:expr, $($msg:tt)*) => {
        if !$cond {
            return Err(format!($($msg)*));
        }
    };
}

mod annular;
mod gen;
mod oracle;
mod sl2;
mod sl3;
mod spaces;

type Check = std::result::Result<String, String>;

fn ok<T>(r: foam_core::Result<T>, what: impl fmt::Display) -> std::result::Result<T, String> {
    r.map_err(|e| format!("{what}: {e}"))
}

pub const CRITERIA: [(u8, &str); 10] = [
    (1, "sl2 golden evaluations"),
    (2, "sl2 homogeneity and integrality"),
    (3, "sl2 skein suites"),
    (4, "sl2 state space ranks and Gram matrices"),
    (5, "functor isomorphism on elementary cobordisms"),
    (6, "unoriented sl3 evaluations"),
    (7, "oriented sl3 evaluations"),
    (8, "sl3 circle state spaces"),
    (9, "annular homology of braid closures"),
    (10, "performance"),
];

#[derive(Clone, Debug)]
pub struct CriterionResult {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
}

impl fmt::Display for CriterionResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed { "PASS" } else { "FAIL" };
        write!(
            f,
            "criterion {:>2} {verdict} {} ({:.2}s): {}",
            self.id,
            self.name,
            self.elapsed.as_secs_f64(),
            self.detail
        )
    }
}

fn run(id: u8, body: impl FnOnce() -> Check) -> CriterionResult {
    let name = CRITERIA[id as usize - 1].1;
    let start = Instant::now();
    let outcome = catch_unwind(AssertUnwindSafe(body)).unwrap_or_else(|p| {
        let msg = p
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_else(|| "unknown panic".into());
        Err(format!("panicked: {msg}"))
    });
    let elapsed = start.elapsed();
    let (passed, detail) = match outcome {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    CriterionResult { id, name, passed, detail, elapsed }
}

/// Runs criterion `id` (1 to 10). Criterion 10 only times its own
/// evaluations here; [`run_all`] adds the time of the whole batch.
pub fn run_criterion(id: u8) -> Option<CriterionResult> {
    run_with(id, Duration::ZERO)
}

fn run_with(id: u8, before: Duration) -> Option<CriterionResult> {
    let body: fn() -> Check = match id {
        1 => sl2::golden,
        2 => sl2::homogeneity,
        3 => sl2::skein,
        4 => spaces::sl2_ranks,
        5 => spaces::functor,
        6 => sl3::unoriented,
        7 => sl3::oriented,
        8 => spaces::sl3_ranks,
        9 => annular::homology,
        10 => return Some(run(10, || performance(before))),
        _ => return None,
    };
    Some(run(id, body))
}

/// Runs all criteria in order, calling `report` after each one.
pub fn run_all(mut report: impl FnMut(&CriterionResult)) -> Vec<CriterionResult> {
    let start = Instant::now();
    let mut out = Vec::with_capacity(10);
    for (id, _) in CRITERIA {
        let r = run_with(id, start.elapsed()).expect("known criterion");
        report(&r);
        out.push(r);
    }
    out
}

const SINGLE_LIMIT: Duration = Duration::from_secs(1);
const TOTAL_LIMIT: Duration = Duration::from_secs(300);

fn performance(before: Duration) -> Check {
    let start = Instant::now();
    let mut worst = Duration::ZERO;
    for f in sl3::ten_facet_foams() {
        ensure!(f.facets.len() == 10, "benchmark foam has {} facets", f.facets.len());
        let t = Instant::now();
        ok(f.evaluate(), "10-facet evaluation")?;
        let dt = t.elapsed();
        ensure!(dt < SINGLE_LIMIT, "10-facet evaluation took {:.3}s", dt.as_secs_f64());
        worst = worst.max(dt);
    }
    let total = before + start.elapsed();
    ensure!(total < TOTAL_LIMIT, "whole batch took {:.1}s", total.as_secs_f64());
    Ok(format!(
        "slowest 10-facet evaluation {:.3}s; batch total {:.1}s",
        worst.as_secs_f64(),
        total.as_secs_f64()
    ))
}
