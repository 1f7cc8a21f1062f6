//! Finite-state priors, observation models, and Bayesian updating.
//!
//! Experiments are either finite-outcome likelihood tables, which keep every
//! value-of-information integral an exact finite sum, or per-state Gaussian
//! observation models on the real line.

use crate::erf::erfc;
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

const PROB_SUM_TOL: f64 = 1e-9;

/// Ordered, uniquely labeled states of nature.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StateSpace {
    names: Vec<String>,
}

impl StateSpace {
    pub fn new(names: Vec<String>) -> Result<Self> {
        if names.is_empty() {
            return Err(Error::InvalidStateSpace("no states".into()));
        }
        for (i, n) in names.iter().enumerate() {
            if names[..i].contains(n) {
                return Err(Error::InvalidStateSpace(format!("duplicate state {n:?}")));
            }
        }
        Ok(StateSpace { names })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

/// A probability vector aligned with a state space.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Distribution {
    probs: Vec<f64>,
}

impl Distribution {
    pub fn new(probs: Vec<f64>) -> Result<Self> {
        if probs.is_empty() {
            return Err(Error::InvalidDistribution("no probabilities".into()));
        }
        if probs.iter().any(|&p| !p.is_finite() || p < 0.0) {
            return Err(Error::InvalidDistribution(
                "probabilities must be finite and non-negative".into(),
            ));
        }
        let sum: f64 = probs.iter().sum();
        if (sum - 1.0).abs() > PROB_SUM_TOL {
            return Err(Error::InvalidDistribution(format!(
                "probabilities sum to {sum}, expected 1"
            )));
        }
        Ok(Distribution { probs })
    }

    /// Point mass at one state.
    pub fn point_mass(n: usize, at: usize) -> Self {
        let mut probs = vec![0.0; n];
        probs[at] = 1.0;
        Distribution { probs }
    }

    pub fn probs(&self) -> &[f64] {
        &self.probs
    }

    pub fn len(&self) -> usize {
        self.probs.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

/// An observation model whose distribution depends on the state.
#[derive(Debug, Clone, PartialEq)]
pub enum Experiment {
    /// Finite outcome set; one likelihood row per state, each summing to 1.
    Discrete {
        outcome_names: Vec<String>,
        likelihood: Vec<Vec<f64>>,
    },
    /// Per-state Gaussian on the real line, aligned with the state order.
    Gaussian { means: Vec<f64>, stds: Vec<f64> },
}

impl Experiment {
    pub fn validate(&self, n_states: usize) -> Result<()> {
        match self {
            Experiment::Discrete {
                outcome_names,
                likelihood,
            } => {
                if outcome_names.is_empty() {
                    return Err(Error::InvalidExperiment("no outcomes".into()));
                }
                if likelihood.len() != n_states {
                    return Err(Error::InvalidExperiment(format!(
                        "likelihood has {} rows for {} states",
                        likelihood.len(),
                        n_states
                    )));
                }
                for (s, row) in likelihood.iter().enumerate() {
                    if row.len() != outcome_names.len() {
                        return Err(Error::InvalidExperiment(format!(
                            "likelihood row {s} has {} entries for {} outcomes",
                            row.len(),
                            outcome_names.len()
                        )));
                    }
                    if row.iter().any(|&p| !p.is_finite() || p < 0.0) {
                        return Err(Error::InvalidExperiment(format!(
                            "likelihood row {s} has a negative or non-finite entry"
                        )));
                    }
                    let sum: f64 = row.iter().sum();
                    if (sum - 1.0).abs() > PROB_SUM_TOL {
                        return Err(Error::InvalidExperiment(format!(
                            "likelihood row {s} sums to {sum}, expected 1"
                        )));
                    }
                }
                Ok(())
            }
            Experiment::Gaussian { means, stds } => {
                if means.len() != n_states || stds.len() != n_states {
                    return Err(Error::InvalidExperiment(format!(
                        "need one mean and std per state, got {} and {} for {} states",
                        means.len(),
                        stds.len(),
                        n_states
                    )));
                }
                if means.iter().any(|m| !m.is_finite()) {
                    return Err(Error::InvalidExperiment("non-finite mean".into()));
                }
                if stds.iter().any(|s| !s.is_finite() || *s <= 0.0) {
                    return Err(Error::InvalidExperiment(
                        "standard deviations must be positive".into(),
                    ));
                }
                Ok(())
            }
        }
    }

    pub fn is_gaussian(&self) -> bool {
        matches!(self, Experiment::Gaussian { .. })
    }

    pub fn n_outcomes(&self) -> Option<usize> {
        match self {
            Experiment::Discrete { outcome_names, .. } => Some(outcome_names.len()),
            Experiment::Gaussian { .. } => None,
        }
    }
}

/// A single piece of sample information.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Observation {
    DiscreteOutcome(usize),
    RealValue(f64),
}

/// Likelihood of the observation under one state: a table lookup for discrete
/// experiments, the Gaussian density for real-valued ones.
pub fn likelihood(exp: &Experiment, state: usize, obs: &Observation) -> Result<f64> {
    match (exp, obs) {
        (Experiment::Discrete { likelihood, .. }, Observation::DiscreteOutcome(k)) => likelihood
            .get(state)
            .and_then(|row| row.get(*k))
            .copied()
            .ok_or_else(|| Error::InvalidExperiment(format!("outcome index {k} out of range"))),
        (Experiment::Gaussian { means, stds }, Observation::RealValue(x)) => {
            if !x.is_finite() {
                return Err(Error::NonFinite("observation"));
            }
            let m = means[state];
            let s = stds[state];
            let z = (x - m) / s;
            Ok((-0.5 * z * z).exp() / (s * (2.0 * std::f64::consts::PI).sqrt()))
        }
        _ => Err(Error::VariantMismatch),
    }
}

/// Bayes update of the prior given an observation. Errors when the observation
/// is impossible under every positive-prior state; no silent renormalization.
pub fn posterior(prior: &Distribution, exp: &Experiment, obs: &Observation) -> Result<Distribution> {
    let mut weights = Vec::with_capacity(prior.len());
    for (state, &p) in prior.probs().iter().enumerate() {
        weights.push(p * likelihood(exp, state, obs)?);
    }
    let marginal: f64 = weights.iter().sum();
    if marginal <= 0.0 {
        return Err(Error::ZeroMarginal);
    }
    for w in &mut weights {
        *w /= marginal;
    }
    Ok(Distribution { probs: weights })
}

/// Marginal (predictive) probability of a discrete outcome.
pub fn marginal_outcome_prob(prior: &Distribution, exp: &Experiment, outcome: usize) -> Result<f64> {
    let obs = Observation::DiscreteOutcome(outcome);
    let mut total = 0.0;
    for (state, &p) in prior.probs().iter().enumerate() {
        total += p * likelihood(exp, state, &obs)?;
    }
    Ok(total)
}

/// Standard normal CDF via the complementary error function.
pub fn gaussian_cdf(z: f64) -> f64 {
    0.5 * erfc(-z / std::f64::consts::SQRT_2)
}

/// Probability, under one state of a Gaussian experiment, of a union of
/// disjoint sorted intervals. Infinite endpoints are allowed.
pub fn predictive_region_prob(
    exp: &Experiment,
    state: usize,
    region: &[(f64, f64)],
) -> Result<f64> {
    let (means, stds) = match exp {
        Experiment::Gaussian { means, stds } => (means, stds),
        _ => Err(Error::VariantMismatch)?,
    };
    let m = means[state];
    let s = stds[state];
    let mut prev_hi = f64::NEG_INFINITY;
    let mut total = 0.0;
    for &(a, b) in region {
        if a.is_nan() || b.is_nan() || a > b {
            return Err(Error::MalformedRegion(format!("bad interval [{a}, {b}]")));
        }
        if a < prev_hi {
            return Err(Error::MalformedRegion(
                "intervals must be disjoint and sorted".into(),
            ));
        }
        prev_hi = b;
        total += gaussian_cdf((b - m) / s) - gaussian_cdf((a - m) / s);
    }
    Ok(total.clamp(0.0, 1.0))
}
