//! The decision layer: optimal prior and posterior actions, the value of
//! perfect information, EVPI, posterior-optimal decision regions, EVSI by two
//! independent routes, positive affine transforms, and the ordering check
//! `EVPI >= EVSI >= 0` under the fuzzy preference relation.

use crate::error::{Error, Result};
use crate::expectation::expected_utility;
use crate::fuzzy::{zero, FuzzyNumber};
use crate::inference::{
    likelihood, marginal_outcome_prob, posterior, predictive_region_prob, Distribution, Experiment,
    Observation, StateSpace,
};
use crate::quadrature::gauss_legendre;
use crate::ranking::{best_index, kolodziejczyk_r, Selection, INDIFFERENCE_TOL};

/// A finite Bayesian decision problem with fuzzy utilities.
#[derive(Debug, Clone, PartialEq)]
pub struct DecisionProblem {
    states: StateSpace,
    actions: Vec<String>,
    prior: Distribution,
    /// Total utility table, state-major: `utilities[state][action]`.
    utilities: Vec<Vec<FuzzyNumber>>,
}

impl DecisionProblem {
    pub fn new(
        states: StateSpace,
        actions: Vec<String>,
        prior: Distribution,
        utilities: Vec<Vec<FuzzyNumber>>,
    ) -> Result<Self> {
        if actions.is_empty() {
            return Err(Error::InvalidProblem("no actions".into()));
        }
        for (i, a) in actions.iter().enumerate() {
            if actions[..i].contains(a) {
                return Err(Error::InvalidProblem(format!("duplicate action {a:?}")));
            }
        }
        if prior.len() != states.len() {
            return Err(Error::InvalidProblem(format!(
                "prior has {} entries for {} states",
                prior.len(),
                states.len()
            )));
        }
        if utilities.len() != states.len() {
            return Err(Error::InvalidProblem(format!(
                "utility table has {} rows for {} states",
                utilities.len(),
                states.len()
            )));
        }
        for (s, row) in utilities.iter().enumerate() {
            if row.len() != actions.len() {
                return Err(Error::InvalidProblem(format!(
                    "utility row {s} has {} entries for {} actions",
                    row.len(),
                    actions.len()
                )));
            }
        }
        Ok(DecisionProblem {
            states,
            actions,
            prior,
            utilities,
        })
    }

    pub fn states(&self) -> &StateSpace {
        &self.states
    }

    pub fn actions(&self) -> &[String] {
        &self.actions
    }

    pub fn prior(&self) -> &Distribution {
        &self.prior
    }

    pub fn utility(&self, state: usize, action: usize) -> &FuzzyNumber {
        &self.utilities[state][action]
    }

    fn action_column(&self, action: usize) -> Vec<FuzzyNumber> {
        self.utilities.iter().map(|row| row[action].clone()).collect()
    }

    /// Expected fuzzy utility of every action under a given distribution,
    /// in action order.
    pub fn expected_utilities(&self, dist: &Distribution) -> Result<Vec<FuzzyNumber>> {
        (0..self.actions.len())
            .map(|a| expected_utility(&self.action_column(a), dist))
            .collect()
    }

    pub fn prior_expected_utilities(&self) -> Vec<FuzzyNumber> {
        self.expected_utilities(&self.prior)
            .expect("problem invariants guarantee a total table")
    }

    /// The optimal prior action, with ranking diagnostics.
    pub fn optimal_prior_action(&self) -> Selection {
        best_index(&self.prior_expected_utilities()).expect("actions are non-empty")
    }

    /// The optimal posterior action given an observation.
    pub fn optimal_posterior_action(
        &self,
        exp: &Experiment,
        obs: &Observation,
    ) -> Result<Selection> {
        let post = posterior(&self.prior, exp, obs)?;
        Ok(best_index(&self.expected_utilities(&post)?).expect("actions are non-empty"))
    }

    /// The optimal action when the state is known for certain.
    pub fn perfect_action(&self, state: usize) -> Selection {
        best_index(&self.utilities[state]).expect("actions are non-empty")
    }

    /// `sum over states of U(state, a(state)) * prior(state)`, fixed state order.
    pub fn perfect_info_value(&self) -> FuzzyNumber {
        let mut acc: Option<FuzzyNumber> = None;
        for (s, &p) in self.prior.probs().iter().enumerate() {
            let a = self.perfect_action(s).index;
            let term = self.utilities[s][a].scale(p);
            acc = Some(match acc {
                None => term,
                Some(prev) => prev.add(&term),
            });
        }
        acc.expect("at least one state")
    }

    /// Expected value of perfect information: the perfect-information value
    /// minus the prior-best expected utility, as a fuzzy number.
    pub fn evpi(&self) -> FuzzyNumber {
        let best = self.optimal_prior_action().index;
        let prior_eu = &self.prior_expected_utilities()[best];
        self.perfect_info_value().subtract(prior_eu)
    }

    /// Maps every utility through `scale(lambda)` then `translate(beta)`,
    /// `lambda > 0`. Optimal actions, regions, and the theorem verdicts are
    /// invariant under this transform.
    pub fn affine_transform(&self, lambda: f64, beta: f64) -> Result<DecisionProblem> {
        if !lambda.is_finite() || lambda <= 0.0 {
            return Err(Error::NonPositiveScale(lambda));
        }
        if !beta.is_finite() {
            return Err(Error::NonFinite("shift"));
        }
        let utilities = self
            .utilities
            .iter()
            .map(|row| row.iter().map(|u| u.scale(lambda).translate(beta)).collect())
            .collect();
        Ok(DecisionProblem {
            states: self.states.clone(),
            actions: self.actions.clone(),
            prior: self.prior.clone(),
            utilities,
        })
    }

    /// Decision regions of an experiment.
    pub fn decision_regions(
        &self,
        exp: &Experiment,
        opts: &RegionOptions,
    ) -> Result<RegionPartition> {
        Ok(self.decision_regions_with_diagnostics(exp, opts)?.0)
    }

    /// Decision regions plus diagnostic flags (cycle resolutions, scan-density
    /// warnings).
    pub fn decision_regions_with_diagnostics(
        &self,
        exp: &Experiment,
        opts: &RegionOptions,
    ) -> Result<(RegionPartition, Vec<String>)> {
        exp.validate(self.states.len())?;
        let mut diags = Vec::new();
        match exp {
            Experiment::Discrete { outcome_names, .. } => {
                let mut actions = Vec::with_capacity(outcome_names.len());
                for k in 0..outcome_names.len() {
                    let sel =
                        self.optimal_posterior_action(exp, &Observation::DiscreteOutcome(k))?;
                    if sel.cycle_resolved {
                        diags.push(format!("cycle-resolved: outcome {k}"));
                    }
                    actions.push(sel.index);
                }
                Ok((RegionPartition::DiscreteMap { actions }, diags))
            }
            Experiment::Gaussian { means, stds } => {
                let (lo, hi) = gaussian_scan_range(means, stds);
                let n = opts.grid.max(2);
                let step = (hi - lo) / (n - 1) as f64;
                let winner = |x: f64| -> Result<usize> {
                    Ok(self
                        .optimal_posterior_action(exp, &Observation::RealValue(x))?
                        .index)
                };
                let mut cuts = Vec::new();
                let mut actions = Vec::new();
                let mut prev_x = lo;
                let mut prev_w = winner(lo)?;
                actions.push(prev_w);
                for i in 1..n {
                    let x = lo + step * i as f64;
                    let w = winner(x)?;
                    if w != prev_w {
                        // bisect the preference boundary
                        let (mut a, mut b) = (prev_x, x);
                        while b - a > opts.bisect_tol {
                            let mid = (a + b) / 2.0;
                            if winner(mid)? == prev_w {
                                a = mid;
                            } else {
                                b = mid;
                            }
                        }
                        cuts.push((a + b) / 2.0);
                        actions.push(w);
                        prev_w = w;
                    }
                    prev_x = x;
                }
                if cuts.windows(2).any(|w| w[1] - w[0] < 2.0 * step) {
                    diags.push("scan-density: adjacent cuts closer than two grid steps".into());
                }
                Ok((RegionPartition::RealLine { cuts, actions }, diags))
            }
        }
    }

    /// The normative EVSI path: the partition form, exact given the regions.
    pub fn evsi(&self, exp: &Experiment, opts: &RegionOptions) -> Result<FuzzyNumber> {
        let regions = self.decision_regions(exp, opts)?;
        self.evsi_with_regions(exp, &regions)
    }

    /// EVSI from an explicit region partition:
    /// `sum_i sum_theta U(theta, a_i) * prior(theta) * P_theta(X(a_i))` minus
    /// the prior-best expected utility. Summation is action-major then state,
    /// left to right, for bitwise reproducibility.
    pub fn evsi_with_regions(
        &self,
        exp: &Experiment,
        regions: &RegionPartition,
    ) -> Result<FuzzyNumber> {
        let mass = self.region_state_mass(exp, regions)?;
        let mut acc = zero();
        for (a, per_state) in mass.iter().enumerate() {
            for (s, &p_region) in per_state.iter().enumerate() {
                let coeff = self.prior.probs()[s] * p_region;
                acc = acc.add(&self.utilities[s][a].scale(coeff));
            }
        }
        let best = self.optimal_prior_action().index;
        Ok(acc.subtract(&self.prior_expected_utilities()[best]))
    }

    /// `mass[action][state] = P_state(X(action))`: the probability, under each
    /// state's observation model, of landing in the region where `action` is
    /// posterior-optimal. Multiplying by the prior gives the scalar
    /// coefficients that weight each utility entry in the EVSI sum.
    pub fn region_state_mass(
        &self,
        exp: &Experiment,
        regions: &RegionPartition,
    ) -> Result<Vec<Vec<f64>>> {
        let n_actions = self.actions.len();
        let n_states = self.states.len();
        match (exp, regions) {
            (Experiment::Discrete { likelihood, .. }, RegionPartition::DiscreteMap { actions }) => {
                let mut mass = vec![vec![0.0; n_states]; n_actions];
                for (k, &a) in actions.iter().enumerate() {
                    if a >= n_actions {
                        return Err(Error::MalformedRegion(format!("action index {a}")));
                    }
                    for s in 0..n_states {
                        mass[a][s] += likelihood[s][k];
                    }
                }
                Ok(mass)
            }
            (Experiment::Gaussian { .. }, RegionPartition::RealLine { cuts, actions }) => {
                if actions.len() != cuts.len() + 1 {
                    return Err(Error::MalformedRegion(format!(
                        "{} intervals for {} cuts",
                        actions.len(),
                        cuts.len()
                    )));
                }
                let mut mass = vec![vec![0.0; n_states]; n_actions];
                for (a, intervals) in action_intervals(cuts, actions, n_actions)?.iter().enumerate()
                {
                    for s in 0..n_states {
                        mass[a][s] = predictive_region_prob(exp, s, intervals)?;
                    }
                }
                Ok(mass)
            }
            _ => Err(Error::VariantMismatch),
        }
    }

    /// The integral-form EVSI cross-check: integrates the alpha-cut endpoints
    /// of the posterior-best expected utility against the predictive measure,
    /// one grade level at a time, then reassembles a fuzzy number.
    ///
    /// Exact (a finite sum) for discrete experiments; composite Gauss-Legendre
    /// per region for Gaussian ones. `levels` is the grade-grid size and
    /// `nodes` the per-region quadrature budget.
    pub fn evsi_direct(
        &self,
        exp: &Experiment,
        levels: usize,
        nodes: usize,
        opts: &RegionOptions,
    ) -> Result<(FuzzyNumber, Vec<String>)> {
        exp.validate(self.states.len())?;
        let best = self.optimal_prior_action().index;
        let prior_eu = self.prior_expected_utilities()[best].clone();
        match exp {
            Experiment::Discrete { outcome_names, .. } => {
                let mut acc = zero();
                for k in 0..outcome_names.len() {
                    let obs = Observation::DiscreteOutcome(k);
                    let px = marginal_outcome_prob(&self.prior, exp, k)?;
                    if px == 0.0 {
                        continue;
                    }
                    let post = posterior(&self.prior, exp, &obs)?;
                    let eus = self.expected_utilities(&post)?;
                    let a = best_index(&eus).expect("non-empty").index;
                    acc = acc.add(&eus[a].scale(px));
                }
                Ok((acc.subtract(&prior_eu), Vec::new()))
            }
            Experiment::Gaussian { means, stds } => {
                let levels = levels.max(2);
                let (regions, mut diags) = self.decision_regions_with_diagnostics(exp, opts)?;
                let (cuts, actions) = match &regions {
                    RegionPartition::RealLine { cuts, actions } => (cuts, actions),
                    _ => unreachable!("gaussian regions are real-line partitions"),
                };
                let (scan_lo, scan_hi) = gaussian_scan_range(means, stds);
                let grades: Vec<f64> =
                    (0..levels).map(|j| j as f64 / (levels - 1) as f64).collect();
                let mut lo_int = vec![0.0; levels];
                let mut hi_int = vec![0.0; levels];
                let order = 16;
                let rule = gauss_legendre(order);
                let panels = nodes.div_ceil(order).max(1);
                for (seg, &a) in actions.iter().enumerate() {
                    let a_lo = if seg == 0 { scan_lo } else { cuts[seg - 1] };
                    let a_hi = if seg == cuts.len() { scan_hi } else { cuts[seg] };
                    if a_hi <= a_lo {
                        continue;
                    }
                    let h = (a_hi - a_lo) / panels as f64;
                    for p in 0..panels {
                        let half = h / 2.0;
                        let mid = a_lo + h * p as f64 + half;
                        for &(xi, w) in &rule {
                            let x = mid + half * xi;
                            let obs = Observation::RealValue(x);
                            let density: f64 = self
                                .prior
                                .probs()
                                .iter()
                                .enumerate()
                                .map(|(s, &pr)| pr * likelihood(exp, s, &obs).unwrap())
                                .sum();
                            let post = posterior(&self.prior, exp, &obs)?;
                            let eu = expected_utility(&self.action_column(a), &post)?;
                            let scale = w * half * density;
                            for (j, &g) in grades.iter().enumerate() {
                                let cut = eu.alpha_cut(g).expect("grade in range");
                                lo_int[j] += scale * cut.lo;
                                hi_int[j] += scale * cut.hi;
                            }
                        }
                    }
                }
                // enforce nesting of the integrated level endpoints
                let mut repaired = false;
                for j in 1..levels {
                    if lo_int[j] < lo_int[j - 1] {
                        lo_int[j] = lo_int[j - 1];
                        repaired = true;
                    }
                    if hi_int[j] > hi_int[j - 1] {
                        hi_int[j] = hi_int[j - 1];
                        repaired = true;
                    }
                }
                if lo_int[levels - 1] > hi_int[levels - 1] {
                    let mid = (lo_int[levels - 1] + hi_int[levels - 1]) / 2.0;
                    lo_int[levels - 1] = mid;
                    hi_int[levels - 1] = mid;
                    repaired = true;
                }
                if repaired {
                    diags.push("isotonic-repair: reassembled level endpoints".into());
                }
                let level_data: Vec<(f64, f64, f64)> = grades
                    .iter()
                    .zip(lo_int.iter().zip(&hi_int))
                    .map(|(&g, (&l, &h))| (g, l, h))
                    .collect();
                let integral = FuzzyNumber::from_alpha_levels(&level_data)?;
                Ok((integral.subtract(&prior_eu), diags))
            }
        }
    }

    /// Computes EVPI, EVSI and the ranking coefficients behind
    /// "EVPI is preferred to EVSI is preferred to 0".
    pub fn verify_theorem(&self, exp: &Experiment, opts: &RegionOptions) -> Result<ValueReport> {
        let prior_sel = self.optimal_prior_action();
        let (regions, mut diagnostics) = self.decision_regions_with_diagnostics(exp, opts)?;
        if prior_sel.cycle_resolved {
            diagnostics.push("cycle-resolved: prior action selection".into());
        }
        let evpi = self.evpi();
        let evsi = self.evsi_with_regions(exp, &regions)?;
        Ok(ValueReport {
            r_evpi_vs_evsi: kolodziejczyk_r(&evpi, &evsi),
            r_evsi_vs_zero: kolodziejczyk_r(&evsi, &zero()),
            evpi,
            evsi,
            regions,
            prior_best: prior_sel.index,
            diagnostics,
        })
    }

    /// EVSI per experiment and a ranking by the preference relation; failed
    /// experiments are reported and ranked last.
    pub fn compare_experiments(
        &self,
        exps: &[Experiment],
        opts: &RegionOptions,
    ) -> ExperimentComparison {
        let n = exps.len();
        let mut evsi: Vec<Option<FuzzyNumber>> = Vec::with_capacity(n);
        let mut errors: Vec<Option<Error>> = Vec::with_capacity(n);
        for exp in exps {
            match self.evsi(exp, opts) {
                Ok(v) => {
                    evsi.push(Some(v));
                    errors.push(None);
                }
                Err(e) => {
                    evsi.push(None);
                    errors.push(Some(e));
                }
            }
        }
        let ok_indices: Vec<usize> = (0..n).filter(|&i| evsi[i].is_some()).collect();
        let ok_values: Vec<FuzzyNumber> = ok_indices
            .iter()
            .map(|&i| evsi[i].clone().unwrap())
            .collect();
        let mut r_matrix = vec![vec![f64::NAN; n]; n];
        let mut ranking: Vec<usize> = Vec::with_capacity(n);
        let mut best = None;
        let mut cycle_resolved = false;
        if let Ok(sel) = best_index(&ok_values) {
            for (pi, &i) in ok_indices.iter().enumerate() {
                for (pj, &j) in ok_indices.iter().enumerate() {
                    r_matrix[i][j] = sel.r_matrix[pi][pj];
                }
            }
            best = Some(ok_indices[sel.index]);
            cycle_resolved = sel.cycle_resolved;
            let score = |pi: usize| {
                (0..ok_values.len())
                    .filter(|&pj| pj != pi && sel.r_matrix[pi][pj] < 0.5 - INDIFFERENCE_TOL)
                    .count()
            };
            let mut order: Vec<usize> = (0..ok_indices.len()).collect();
            order.sort_by_key(|&pi| (std::cmp::Reverse(score(pi)), pi));
            ranking.extend(order.into_iter().map(|pi| ok_indices[pi]));
        }
        ranking.extend((0..n).filter(|&i| evsi[i].is_none()));
        ExperimentComparison {
            evsi,
            errors,
            ranking,
            best,
            r_matrix,
            cycle_resolved,
        }
    }
}

/// Scan bounds for a Gaussian experiment: eight standard deviations beyond the
/// extreme means truncate a negligible tail mass per state.
fn gaussian_scan_range(means: &[f64], stds: &[f64]) -> (f64, f64) {
    let min_m = means.iter().cloned().fold(f64::INFINITY, f64::min);
    let max_m = means.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let max_s = stds.iter().cloned().fold(0.0, f64::max);
    (min_m - 8.0 * max_s, max_m + 8.0 * max_s)
}

/// Per-action interval lists from a real-line partition.
fn action_intervals(
    cuts: &[f64],
    actions: &[usize],
    n_actions: usize,
) -> Result<Vec<Vec<(f64, f64)>>> {
    if cuts.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::MalformedRegion("cut points must be ascending".into()));
    }
    let mut out = vec![Vec::new(); n_actions];
    for (seg, &a) in actions.iter().enumerate() {
        if a >= n_actions {
            return Err(Error::MalformedRegion(format!("action index {a}")));
        }
        let lo = if seg == 0 {
            f64::NEG_INFINITY
        } else {
            cuts[seg - 1]
        };
        let hi = if seg == cuts.len() {
            f64::INFINITY
        } else {
            cuts[seg]
        };
        out[a].push((lo, hi));
    }
    Ok(out)
}

/// Options for posterior-optimal region scanning.
#[derive(Debug, Clone, Copy)]
pub struct RegionOptions {
    /// Uniform scan-grid size over the Gaussian observation range.
    pub grid: usize,
    /// Bisection width for preference boundaries.
    pub bisect_tol: f64,
}

impl Default for RegionOptions {
    fn default() -> Self {
        RegionOptions {
            grid: 512,
            bisect_tol: 1e-9,
        }
    }
}

/// The sets of observations on which each action is posterior-optimal.
/// Exact-indifference boundary points attach to the lower-indexed action;
/// a measure-zero convention with no effect on EVSI.
#[derive(Debug, Clone, PartialEq)]
pub enum RegionPartition {
    /// Optimal action per discrete outcome.
    DiscreteMap { actions: Vec<usize> },
    /// Ascending cut points and the optimal action on each resulting interval
    /// (one more interval than cuts, covering the whole line).
    RealLine { cuts: Vec<f64>, actions: Vec<usize> },
}

/// The checkable content of the information-ordering theorem for one problem
/// and experiment.
#[derive(Debug, Clone, PartialEq)]
pub struct ValueReport {
    pub evpi: FuzzyNumber,
    pub evsi: FuzzyNumber,
    /// `R(EVPI, EVSI)`; at most 0.5 when EVPI is preferred or indifferent.
    pub r_evpi_vs_evsi: f64,
    /// `R(EVSI, 0)`; at most 0.5 when EVSI is preferred or indifferent to 0.
    pub r_evsi_vs_zero: f64,
    pub regions: RegionPartition,
    pub prior_best: usize,
    pub diagnostics: Vec<String>,
}

impl ValueReport {
    /// Both orderings hold within the indifference tolerance.
    pub fn theorem_holds(&self) -> bool {
        self.r_evpi_vs_evsi <= 0.5 + INDIFFERENCE_TOL
            && self.r_evsi_vs_zero <= 0.5 + INDIFFERENCE_TOL
    }
}

/// Outcome of ranking a family of experiments by EVSI.
#[derive(Debug, Clone)]
pub struct ExperimentComparison {
    pub evsi: Vec<Option<FuzzyNumber>>,
    pub errors: Vec<Option<Error>>,
    /// Experiment indices, best first; failed experiments trail in input order.
    pub ranking: Vec<usize>,
    pub best: Option<usize>,
    /// `r_matrix[i][j] = R(EVSI_i, EVSI_j)`; NaN when either failed.
    pub r_matrix: Vec<Vec<f64>>,
    pub cycle_resolved: bool,
}
