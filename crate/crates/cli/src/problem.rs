//! Declarative problem files: JSON in, a validated [`DecisionProblem`] plus
//! named experiments out.
//!
//! Schema:
//!
//! ```json
//! {
//!   "notes": "optional free text echoed into reports",
//!   "states": { "names": ["s1", "s2"], "prior": [0.6, 0.4] },
//!   "actions": ["a1", "a2"],
//!   "utilities": [ [u(s1,a1), u(s1,a2)], [u(s2,a1), u(s2,a2)] ],
//!   "experiments": [
//!     { "name": "test", "outcomes": ["pos", "neg"], "likelihood": [[.9,.1],[.2,.8]] },
//!     { "name": "score", "gaussian": { "means": [120, 100], "stds": [8, 8] } }
//!   ]
//! }
//! ```
//!
//! Utility literals accept `{"crisp": v}`, `{"tri": [a,b,c]}`,
//! `{"trap": [a,b,c,d]}`, `{"pwl": [[x, mu], ...]}`, or a bare breakpoint
//! list.

use fuzzy_voi_core::{
    DecisionProblem, Distribution, Experiment, FuzzyLiteral, StateSpace,
};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub notes: Option<String>,
    pub states: StatesSection,
    pub actions: Vec<String>,
    /// `utilities[state][action]`, aligned with `states.names` and `actions`.
    pub utilities: Vec<Vec<FuzzyLiteral>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub experiments: Vec<ExperimentSpec>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StatesSection {
    pub names: Vec<String>,
    pub prior: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentSpec {
    pub name: String,
    #[serde(flatten)]
    pub form: ExperimentForm,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ExperimentForm {
    Discrete {
        outcomes: Vec<String>,
        likelihood: Vec<Vec<f64>>,
    },
    Gaussian { gaussian: GaussianSpec },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GaussianSpec {
    pub means: Vec<f64>,
    pub stds: Vec<f64>,
}

impl ExperimentSpec {
    pub fn to_experiment(&self) -> Experiment {
        match &self.form {
            ExperimentForm::Discrete { outcomes, likelihood } => Experiment::Discrete {
                outcome_names: outcomes.clone(),
                likelihood: likelihood.clone(),
            },
            ExperimentForm::Gaussian { gaussian } => Experiment::Gaussian {
                means: gaussian.means.clone(),
                stds: gaussian.stds.clone(),
            },
        }
    }
}

/// A compiled problem: validated decision problem plus named experiments.
#[derive(Debug)]
pub struct Compiled {
    pub notes: Option<String>,
    pub problem: DecisionProblem,
    pub experiments: Vec<(String, Experiment)>,
}

impl ProblemFile {
    /// Validates every component invariant and assembles the decision
    /// problem. Error messages name the offending field.
    pub fn compile(&self) -> Result<Compiled, String> {
        let prior_sum: f64 = self.states.prior.iter().sum();
        if (prior_sum - 1.0).abs() > 1e-9 {
            return Err(format!(
                "states.prior sums to {prior_sum}, expected 1"
            ));
        }
        let states = StateSpace::new(self.states.names.clone())
            .map_err(|e| format!("states.names: {e}"))?;
        let prior = Distribution::new(self.states.prior.clone())
            .map_err(|e| format!("states.prior: {e}"))?;
        if self.utilities.len() != self.states.names.len() {
            return Err(format!(
                "utilities has {} rows for {} states",
                self.utilities.len(),
                self.states.names.len()
            ));
        }
        let mut utilities = Vec::with_capacity(self.utilities.len());
        for (s, row) in self.utilities.iter().enumerate() {
            if row.len() != self.actions.len() {
                return Err(format!(
                    "utilities[{s}] has {} entries for {} actions",
                    row.len(),
                    self.actions.len()
                ));
            }
            let mut out = Vec::with_capacity(row.len());
            for (a, lit) in row.iter().enumerate() {
                out.push(
                    lit.to_fuzzy()
                        .map_err(|e| format!("utilities[{s}][{a}]: {e}"))?,
                );
            }
            utilities.push(out);
        }
        let problem = DecisionProblem::new(states, self.actions.clone(), prior, utilities)
            .map_err(|e| e.to_string())?;
        let mut experiments = Vec::with_capacity(self.experiments.len());
        for spec in &self.experiments {
            if experiments.iter().any(|(n, _)| n == &spec.name) {
                return Err(format!("duplicate experiment name {:?}", spec.name));
            }
            let exp = spec.to_experiment();
            exp.validate(self.states.names.len())
                .map_err(|e| format!("experiment {:?}: {e}", spec.name))?;
            experiments.push((spec.name.clone(), exp));
        }
        Ok(Compiled {
            notes: self.notes.clone(),
            problem,
            experiments,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bundled() -> &'static str {
        include_str!("../scenarios/neurologist.json")
    }

    #[test]
    fn bundled_scenario_compiles() {
        let file: ProblemFile = serde_json::from_str(bundled()).unwrap();
        let compiled = file.compile().unwrap();
        assert_eq!(compiled.problem.states().len(), 2);
        assert_eq!(compiled.problem.actions().len(), 2);
        assert_eq!(compiled.experiments.len(), 1);
        assert!(compiled.experiments[0].1.is_gaussian());
    }

    #[test]
    fn parse_serialize_parse_is_identity() {
        let file: ProblemFile = serde_json::from_str(bundled()).unwrap();
        let text = serde_json::to_string_pretty(&file).unwrap();
        let again: ProblemFile = serde_json::from_str(&text).unwrap();
        assert_eq!(file, again);
    }

    #[test]
    fn bad_prior_sum_names_the_field() {
        let file: ProblemFile = serde_json::from_str(
            r#"{"states":{"names":["a","b"],"prior":[0.5,0.4]},
                "actions":["x"],"utilities":[[{"crisp":0}],[{"crisp":1}]]}"#,
        )
        .unwrap();
        let err = file.compile().unwrap_err();
        assert!(err.contains("states.prior"), "{err}");
    }

    #[test]
    fn misordered_triangle_is_rejected_with_location() {
        let file: ProblemFile = serde_json::from_str(
            r#"{"states":{"names":["a"],"prior":[1.0]},
                "actions":["x"],"utilities":[[{"tri":[2,1,0]}]]}"#,
        )
        .unwrap();
        let err = file.compile().unwrap_err();
        assert!(err.contains("utilities[0][0]"), "{err}");
    }

    #[test]
    fn duplicate_experiment_names_are_rejected() {
        let file: ProblemFile = serde_json::from_str(
            r#"{"states":{"names":["a"],"prior":[1.0]},
                "actions":["x"],"utilities":[[{"crisp":0}]],
                "experiments":[
                  {"name":"e","outcomes":["o"],"likelihood":[[1.0]]},
                  {"name":"e","outcomes":["o"],"likelihood":[[1.0]]}]}"#,
        )
        .unwrap();
        assert!(file.compile().unwrap_err().contains("duplicate"));
    }
}
