//! Seeded random decision problems and experiments for stress-testing the
//! information-ordering guarantee.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::decision::DecisionProblem;
use crate::fuzzy::{make_triangular, FuzzyNumber};
use crate::inference::{Distribution, Experiment, StateSpace};

/// A uniformly random point on the probability simplex, via normalized
/// exponential draws.
fn simplex(rng: &mut impl Rng, n: usize) -> Vec<f64> {
    let draws: Vec<f64> = (0..n)
        .map(|_| -(1.0 - rng.gen::<f64>()).ln())
        .collect();
    let total: f64 = draws.iter().sum();
    draws.iter().map(|d| d / total).collect()
}

/// A random triangular utility: the sorted triple of three uniform draws
/// on `[0, 1]`.
fn random_utility(rng: &mut impl Rng) -> FuzzyNumber {
    let mut t = [rng.gen::<f64>(), rng.gen::<f64>(), rng.gen::<f64>()];
    t.sort_by(|a, b| a.partial_cmp(b).unwrap());
    make_triangular(t[0], t[1], t[2]).expect("sorted finite triple")
}

/// A seeded random discrete problem: 2-4 states, 2-4 actions, a 2-5 outcome
/// experiment, simplex-uniform prior and likelihood rows, triangular
/// utilities. The same seed always yields the same problem.
pub fn random_discrete_problem(seed: u64) -> (DecisionProblem, Experiment) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n_states = rng.gen_range(2..=4);
    let n_actions = rng.gen_range(2..=4);
    let n_outcomes = rng.gen_range(2..=5);

    let states =
        StateSpace::new((0..n_states).map(|i| format!("s{i}")).collect()).expect("non-empty");
    let actions: Vec<String> = (0..n_actions).map(|i| format!("a{i}")).collect();
    let prior = Distribution::new(simplex(&mut rng, n_states)).expect("simplex point");
    let utilities: Vec<Vec<FuzzyNumber>> = (0..n_states)
        .map(|_| (0..n_actions).map(|_| random_utility(&mut rng)).collect())
        .collect();
    let likelihood: Vec<Vec<f64>> = (0..n_states)
        .map(|_| simplex(&mut rng, n_outcomes))
        .collect();
    let exp = Experiment::Discrete {
        outcome_names: (0..n_outcomes).map(|k| format!("o{k}")).collect(),
        likelihood,
    };
    let problem =
        DecisionProblem::new(states, actions, prior, utilities).expect("generated dimensions");
    (problem, exp)
}

/// The experiment whose outcome names the state: outcome `i` has probability 1
/// under state `i`.
pub fn perfectly_revealing(n_states: usize) -> Experiment {
    Experiment::Discrete {
        outcome_names: (0..n_states).map(|i| format!("is_s{i}")).collect(),
        likelihood: (0..n_states)
            .map(|i| (0..n_states).map(|j| f64::from(i == j)).collect())
            .collect(),
    }
}

/// An experiment whose likelihood rows are identical, so every outcome leaves
/// the prior unchanged.
pub fn uninformative(n_states: usize, n_outcomes: usize) -> Experiment {
    let row: Vec<f64> = {
        // exact unit sum regardless of outcome count
        let mut r = vec![1.0 / n_outcomes as f64; n_outcomes - 1];
        let partial: f64 = r.iter().sum();
        r.push(1.0 - partial);
        r
    };
    Experiment::Discrete {
        outcome_names: (0..n_outcomes).map(|k| format!("o{k}")).collect(),
        likelihood: vec![row; n_states],
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::inference::{posterior, Observation};

    #[test]
    fn generation_is_deterministic() {
        let (p1, e1) = random_discrete_problem(42);
        let (p2, e2) = random_discrete_problem(42);
        assert_eq!(p1, p2);
        assert_eq!(e1, e2);
        let (p3, _) = random_discrete_problem(43);
        assert_ne!(p1, p3);
    }

    #[test]
    fn generated_problems_are_well_formed() {
        for seed in 0..20 {
            let (p, e) = random_discrete_problem(seed);
            e.validate(p.states().len()).unwrap();
            let sum: f64 = p.prior().probs().iter().sum();
            assert!((sum - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn revealing_experiment_has_identity_likelihood() {
        let e = perfectly_revealing(3);
        let prior = Distribution::new(vec![0.2, 0.3, 0.5]).unwrap();
        for i in 0..3 {
            let post = posterior(&prior, &e, &Observation::DiscreteOutcome(i)).unwrap();
            assert_eq!(post.probs(), Distribution::point_mass(3, i).probs());
        }
    }

    #[test]
    fn uninformative_experiment_preserves_the_prior() {
        let e = uninformative(3, 4);
        e.validate(3).unwrap();
        let prior = Distribution::new(vec![0.2, 0.3, 0.5]).unwrap();
        for k in 0..4 {
            let post = posterior(&prior, &e, &Observation::DiscreteOutcome(k)).unwrap();
            for (a, b) in post.probs().iter().zip(prior.probs()) {
                assert!((a - b).abs() < 1e-15);
            }
        }
    }
}
