//! Endpoint experiments pin EVSI: a perfectly revealing experiment is worth
//! exactly as much as perfect information, and an uninformative one is
//! exactly indifferent to learning nothing.

mod common;

use fuzzy_voi_core::generator::{perfectly_revealing, random_discrete_problem, uninformative};
use fuzzy_voi_core::{kolodziejczyk_r, zero, DecisionProblem, RegionOptions};

fn check_revealing(problem: &DecisionProblem) {
    let exp = perfectly_revealing(problem.states().len());
    let evsi = problem.evsi(&exp, &RegionOptions::default()).unwrap();
    let evpi = problem.evpi();
    assert!(evsi.approx_eq(&evpi, 1e-9), "{evsi:?} vs {evpi:?}");
    assert!((kolodziejczyk_r(&evsi, &evpi) - 0.5).abs() <= 1e-9);
}

fn check_uninformative(problem: &DecisionProblem, n_outcomes: usize) {
    let exp = uninformative(problem.states().len(), n_outcomes);
    let evsi = problem.evsi(&exp, &RegionOptions::default()).unwrap();
    assert!((kolodziejczyk_r(&evsi, &zero()) - 0.5).abs() <= 1e-9);
}

#[test]
fn bundled_problem_endpoints() {
    let p = common::neurologist();
    check_revealing(&p);
    check_uninformative(&p, 2);
    check_uninformative(&p, 5);
}

#[test]
fn random_problem_endpoints() {
    for seed in 2000..2050u64 {
        let (problem, _) = random_discrete_problem(seed);
        check_revealing(&problem);
        check_uninformative(&problem, 3);
    }
}
