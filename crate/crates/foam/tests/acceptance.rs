//! Prints one PASS/FAIL line per acceptance criterion and fails if any
//! criterion fails. Runs without the libtest harness so the lines are
//! always shown.

use std::process::ExitCode;

fn main() -> ExitCode {
    if std::env::args().any(|a| a == "--list") {
        return ExitCode::SUCCESS;
    }
    let results = foam::acceptance::run_all(|r| println!("{r}"));
    let failed = results.iter().filter(|r| !r.passed).count();
    println!("acceptance: {} passed, {failed} failed", results.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
