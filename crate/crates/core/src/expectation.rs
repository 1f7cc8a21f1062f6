//! Simple fuzzy random variables and their expected value:
//! the probability-weighted fuzzy sum over finitely many fuzzy values.

use crate::error::{Error, Result};
use crate::fuzzy::FuzzyNumber;
use crate::inference::Distribution;

const PROB_SUM_TOL: f64 = 1e-9;

/// A simple fuzzy random variable: finitely many fuzzy values with an aligned
/// probability vector.
#[derive(Debug, Clone, PartialEq)]
pub struct SimpleFrv {
    values: Vec<FuzzyNumber>,
    probs: Vec<f64>,
}

impl SimpleFrv {
    pub fn new(values: Vec<FuzzyNumber>, probs: Vec<f64>) -> Result<Self> {
        if values.is_empty() || values.len() != probs.len() {
            return Err(Error::InvalidDistribution(format!(
                "need equal, non-zero value/probability counts, got {} and {}",
                values.len(),
                probs.len()
            )));
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
        Ok(SimpleFrv { values, probs })
    }

    pub fn values(&self) -> &[FuzzyNumber] {
        &self.values
    }

    pub fn probs(&self) -> &[f64] {
        &self.probs
    }

    /// The expected value: a left-to-right fold of fuzzy addition over the
    /// scaled values, in declared order, for bitwise reproducibility.
    /// Zero-probability terms contribute crisp 0 rather than being dropped.
    pub fn expected_value(&self) -> FuzzyNumber {
        let mut acc = self.values[0].scale(self.probs[0]);
        for (value, &p) in self.values.iter().zip(&self.probs).skip(1) {
            acc = acc.add(&value.scale(p));
        }
        acc
    }
}

/// Expected fuzzy utility of one action: the expected value of the simple FRV
/// formed by that action's utility column against `dist`. Serves both prior
/// and posterior distributions.
pub fn expected_utility(column: &[FuzzyNumber], dist: &Distribution) -> Result<FuzzyNumber> {
    if column.len() != dist.probs().len() {
        return Err(Error::InvalidProblem(format!(
            "utility column has {} entries for {} states",
            column.len(),
            dist.probs().len()
        )));
    }
    Ok(SimpleFrv::new(column.to_vec(), dist.probs().to_vec())?.expected_value())
}
