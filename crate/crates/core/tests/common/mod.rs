//! Shared fixtures for the integration suites: the surgery-classification
//! problem with the bundled utility reconstruction, its crisp variant, and
//! seeded random fuzzy-number generators.
#![allow(dead_code)]

use fuzzy_voi_core::{
    make_crisp, make_trapezoidal, make_triangular, zero, DecisionProblem, Distribution,
    Experiment, FuzzyNumber, StateSpace,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Bundled reconstruction of the "inconvenient" treatment utility.
pub fn inconvenient() -> FuzzyNumber {
    make_triangular(-0.6, -0.3, -0.18).unwrap()
}

/// Bundled reconstruction of the "dangerous" treatment utility.
pub fn dangerous() -> FuzzyNumber {
    make_triangular(-1.0, -0.85, -0.6).unwrap()
}

/// Two states (surgery needed / not), two actions (operate / wait),
/// prior (0.6, 0.4), fuzzy disutilities for the two kinds of mistake.
pub fn neurologist() -> DecisionProblem {
    let states = StateSpace::new(vec!["needs_surgery".into(), "no_surgery".into()]).unwrap();
    let prior = Distribution::new(vec![0.6, 0.4]).unwrap();
    let utilities = vec![
        vec![zero(), dangerous()],
        vec![inconvenient(), zero()],
    ];
    DecisionProblem::new(states, vec!["operate".into(), "wait".into()], prior, utilities)
        .unwrap()
}

/// Diagnostic score: Gaussian with mean 120 (surgery) or 100 (healthy), sd 8.
pub fn score_experiment() -> Experiment {
    Experiment::Gaussian {
        means: vec![120.0, 100.0],
        stds: vec![8.0, 8.0],
    }
}

/// Crisp -1 / -5 variant with a closed-form decision threshold.
pub fn crisp_surgery_problem() -> DecisionProblem {
    let states = StateSpace::new(vec!["needs_surgery".into(), "no_surgery".into()]).unwrap();
    let prior = Distribution::new(vec![0.6, 0.4]).unwrap();
    let utilities = vec![
        vec![zero(), make_crisp(-5.0).unwrap()],
        vec![make_crisp(-1.0).unwrap(), zero()],
    ];
    DecisionProblem::new(states, vec!["operate".into(), "wait".into()], prior, utilities)
        .unwrap()
}

/// A random triangular, trapezoidal, or crisp fuzzy number with support
/// inside roughly [-5, 5]. Suitable for ranking and exact-arithmetic checks.
pub fn random_fuzzy(rng: &mut ChaCha8Rng) -> FuzzyNumber {
    let center = rng.gen_range(-3.0..3.0);
    match rng.gen_range(0u8..4) {
        0 => make_crisp(center).unwrap(),
        1 => {
            let l = rng.gen_range(0.01..1.5);
            let r = rng.gen_range(0.01..1.5);
            make_triangular(center - l, center, center + r).unwrap()
        }
        _ => {
            let l = rng.gen_range(0.01..1.5);
            let plateau = rng.gen_range(0.0..0.8);
            let r = rng.gen_range(0.01..1.5);
            make_trapezoidal(center - l, center, center + plateau, center + plateau + r)
                .unwrap()
        }
    }
}

/// A random fuzzy number whose flanks are at least 0.2 wide, so membership
/// slopes stay below 5. Keeps grid-sampled extension-principle sups within
/// a provable distance of the true values.
pub fn random_gentle_fuzzy(rng: &mut ChaCha8Rng) -> FuzzyNumber {
    let center = rng.gen_range(-3.0..3.0);
    let l = rng.gen_range(0.2..1.2);
    let r = rng.gen_range(0.2..1.2);
    if rng.gen_bool(0.5) {
        make_triangular(center - l, center, center + r).unwrap()
    } else {
        let plateau = rng.gen_range(0.0..0.6);
        make_trapezoidal(center - l, center, center + plateau, center + plateau + r).unwrap()
    }
}
