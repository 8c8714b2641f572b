use foam::acceptance::run_criterion;
use foam::runner::{par_map, run_suite_parallel};
use foam_core::skein::{run_suite, Suite};

#[test]
fn par_map_keeps_order() {
    assert_eq!(par_map(50, |i| i * i), (0..50).map(|i| i * i).collect::<Vec<_>>());
    assert!(par_map(0, |i| i).is_empty());
}

#[test]
fn parallel_suite_matches_sequential() {
    for suite in [Suite::Sl2NeckCutting, Suite::Sl3oSquare] {
        assert_eq!(run_suite_parallel(suite, 3, 20), run_suite(suite, 3, 20));
    }
}

#[test]
fn single_criteria_run_alone() {
    let r = run_criterion(1).unwrap();
    assert!(r.passed, "{r}");
    assert!(r.to_string().starts_with("criterion  1 PASS"));
    assert!(run_criterion(11).is_none());
}
