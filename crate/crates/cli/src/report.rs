//! Report assembly and rendering: one structured type serialized as JSON
//! under `--json`, or rendered as fixed-layout text with all floats at ten
//! significant digits.

use fuzzy_voi_core::FuzzyNumber;
use serde::{Deserialize, Serialize};

/// Formats a float with ten significant digits, plain notation where
/// reasonable and scientific otherwise, trailing zeros trimmed.
pub fn fmt10(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let exp = x.abs().log10().floor() as i32;
    if (-4..10).contains(&exp) {
        let decimals = (9 - exp).max(0) as usize;
        let s = format!("{:.*}", decimals, x);
        let s = if s.contains('.') {
            s.trim_end_matches('0').trim_end_matches('.').to_string()
        } else {
            s
        };
        if s == "-0" {
            "0".to_string()
        } else {
            s
        }
    } else {
        format!("{:.9e}", x)
    }
}

/// Renders a fuzzy number as its breakpoint list.
pub fn fmt_fuzzy(f: &FuzzyNumber) -> String {
    let pts: Vec<String> = f
        .points()
        .iter()
        .map(|&(x, g)| format!("({}, {})", fmt10(x), fmt10(g)))
        .collect();
    format!("[{}]", pts.join(", "))
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct NamedFuzzy {
    pub name: String,
    pub value: FuzzyNumber,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum RegionsOut {
    /// One posterior-optimal action per discrete outcome.
    Discrete { outcome_actions: Vec<String> },
    /// Threshold partition of the observation line: `actions[i]` is optimal
    /// between `cuts[i-1]` and `cuts[i]`.
    RealLine { cuts: Vec<f64>, actions: Vec<String> },
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ComparisonEntry {
    pub experiment: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub evsi: Option<FuzzyNumber>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

/// The one report schema every command fills a slice of. Optional sections
/// are omitted from the JSON form entirely, so each command's output is
/// minimal but shares field names.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub version: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub notes: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub posterior: Option<Vec<(String, f64)>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected_utilities: Option<Vec<NamedFuzzy>>,
    /// `r_matrix[i][j] = R(EU(action_i), EU(action_j))` for action selection
    /// reports; pairwise EVSI comparisons for `compare`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r_matrix: Option<Vec<Vec<f64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub chosen_action: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub evpi: Option<FuzzyNumber>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub evsi: Option<FuzzyNumber>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub experiment: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub regions: Option<RegionsOut>,
    /// `coefficients[action][state] = prior(state) * P_state(X(action))`:
    /// the scalar weights on each utility entry in the EVSI sum.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coefficients: Option<Vec<Vec<f64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r_evpi_vs_evsi: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r_evsi_vs_zero: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub direct_route_max_deviation: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub comparison: Option<Vec<ComparisonEntry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ranking: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub best_experiment: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trials: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub passed: Option<u64>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub failing_seeds: Vec<u64>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub diagnostics: Vec<String>,
}

impl Report {
    pub fn new(command: String) -> Report {
        Report {
            command,
            version: env!("CARGO_PKG_VERSION").to_string(),
            notes: None,
            posterior: None,
            expected_utilities: None,
            r_matrix: None,
            chosen_action: None,
            evpi: None,
            evsi: None,
            experiment: None,
            regions: None,
            coefficients: None,
            r_evpi_vs_evsi: None,
            r_evsi_vs_zero: None,
            direct_route_max_deviation: None,
            comparison: None,
            ranking: None,
            best_experiment: None,
            trials: None,
            passed: None,
            failing_seeds: Vec::new(),
            diagnostics: Vec::new(),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let mut line = |s: String| {
            out.push_str(&s);
            out.push('\n');
        };
        line(format!("command: {}", self.command));
        if let Some(notes) = &self.notes {
            line(format!("notes: {notes}"));
        }
        if let Some(post) = &self.posterior {
            line("posterior:".into());
            for (name, p) in post {
                line(format!("  {name}: {}", fmt10(*p)));
            }
        }
        if let Some(eus) = &self.expected_utilities {
            line("expected utilities:".into());
            for nf in eus {
                line(format!("  {}: {}", nf.name, fmt_fuzzy(&nf.value)));
            }
        }
        if let Some(m) = &self.r_matrix {
            line("R matrix:".into());
            for row in m {
                let cells: Vec<String> = row.iter().map(|&r| fmt10(r)).collect();
                line(format!("  [{}]", cells.join(", ")));
            }
        }
        if let Some(a) = &self.chosen_action {
            line(format!("chosen action: {a}"));
        }
        if let Some(e) = &self.evpi {
            line(format!("EVPI: {}", fmt_fuzzy(e)));
        }
        if let Some(name) = &self.experiment {
            line(format!("experiment: {name}"));
        }
        if let Some(e) = &self.evsi {
            line(format!("EVSI: {}", fmt_fuzzy(e)));
        }
        match &self.regions {
            Some(RegionsOut::Discrete { outcome_actions }) => {
                line(format!("regions (per outcome): [{}]", outcome_actions.join(", ")));
            }
            Some(RegionsOut::RealLine { cuts, actions }) => {
                let c: Vec<String> = cuts.iter().map(|&x| fmt10(x)).collect();
                line(format!(
                    "regions: cuts [{}], actions [{}]",
                    c.join(", "),
                    actions.join(", ")
                ));
            }
            None => {}
        }
        if let Some(c) = &self.coefficients {
            line("EVSI coefficients (rows: actions, columns: states):".into());
            for row in c {
                let cells: Vec<String> = row.iter().map(|&x| fmt10(x)).collect();
                line(format!("  [{}]", cells.join(", ")));
            }
        }
        if let Some(r) = self.r_evpi_vs_evsi {
            line(format!("R(EVPI, EVSI): {}", fmt10(r)));
        }
        if let Some(r) = self.r_evsi_vs_zero {
            line(format!("R(EVSI, 0): {}", fmt10(r)));
        }
        if let Some(d) = self.direct_route_max_deviation {
            line(format!("direct-route max deviation: {}", fmt10(d)));
        }
        if let Some(entries) = &self.comparison {
            line("comparison:".into());
            for e in entries {
                match (&e.evsi, &e.error) {
                    (Some(v), _) => line(format!("  {}: {}", e.experiment, fmt_fuzzy(v))),
                    (None, Some(err)) => line(format!("  {}: error: {err}", e.experiment)),
                    (None, None) => line(format!("  {}: (no result)", e.experiment)),
                }
            }
        }
        if let Some(rank) = &self.ranking {
            line(format!("ranking: [{}]", rank.join(", ")));
        }
        if let Some(best) = &self.best_experiment {
            line(format!("best experiment: {best}"));
        }
        if let (Some(t), Some(p)) = (self.trials, self.passed) {
            line(format!("{p}/{t} passed"));
        }
        if !self.failing_seeds.is_empty() {
            let seeds: Vec<String> = self.failing_seeds.iter().map(|s| s.to_string()).collect();
            line(format!("failing seeds: [{}]", seeds.join(", ")));
        }
        for d in &self.diagnostics {
            line(format!("diagnostic: {d}"));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ten_significant_digits() {
        assert_eq!(fmt10(0.0), "0");
        assert_eq!(fmt10(1.0), "1");
        assert_eq!(fmt10(-0.5), "-0.5");
        assert_eq!(fmt10(1.0 / 3.0), "0.3333333333");
        assert_eq!(fmt10(12345.6789), "12345.6789");
        assert_eq!(fmt10(1.23456789012e12), "1.234567890e12");
        assert_eq!(fmt10(0.000123456789012), "0.000123456789");
    }

    #[test]
    fn report_round_trips() {
        let mut r = Report::new("analyze".into());
        r.chosen_action = Some("a".into());
        r.r_matrix = Some(vec![vec![0.5, 0.0], vec![1.0, 0.5]]);
        let json = r.to_json();
        let back: Report = serde_json::from_str(&json).unwrap();
        assert_eq!(back.chosen_action.as_deref(), Some("a"));
        assert_eq!(back.r_matrix, r.r_matrix);
    }
}
