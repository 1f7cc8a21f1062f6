//! `fuzzy-voi`: Bayesian decision analysis with fuzzy utilities from
//! declarative JSON problem files.
//!
//! Subcommands cover the full analysis pipeline: prior action selection,
//! Bayesian updating, EVPI/EVSI, experiment comparison, plot-data emission,
//! and a seeded randomized check of the information-ordering theorem.
//!
//! Exit codes: 0 success, 2 file/syntax errors, 3 invariant violations,
//! 4 numeric failures (zero marginals, divergent integrals), 5 theorem-check
//! failures.

mod problem;
mod report;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use fuzzy_voi_core::generator::random_discrete_problem;
use fuzzy_voi_core::{
    kolodziejczyk_r, posterior, zero, DecisionProblem, Error as CoreError, Experiment,
    FuzzyNumber, Observation, RegionOptions, RegionPartition,
};

use problem::{Compiled, ProblemFile};
use report::{ComparisonEntry, NamedFuzzy, RegionsOut, Report};

#[derive(Parser)]
#[command(name = "fuzzy-voi", version, about = "Value-of-information analysis with fuzzy utilities")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Prior-stage analysis: expected utilities, pairwise R, chosen action.
    Analyze {
        path: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Bayesian update for one observation, then action selection.
    Posterior {
        path: PathBuf,
        /// Experiment name; defaults to the file's only experiment.
        #[arg(long)]
        experiment: Option<String>,
        /// Real-valued observation (Gaussian experiments).
        #[arg(long, conflicts_with = "outcome")]
        x: Option<f64>,
        /// Outcome name (discrete experiments).
        #[arg(long)]
        outcome: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Expected value of perfect information.
    Evpi {
        path: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Expected value of sample information for one experiment.
    Evsi {
        path: PathBuf,
        #[arg(long)]
        experiment: Option<String>,
        /// Pin the single decision cut instead of scanning for it
        /// (Gaussian experiments only).
        #[arg(long)]
        override_threshold: Option<f64>,
        /// Scan-grid size for decision regions.
        #[arg(long)]
        grid: Option<usize>,
        /// Also run the integral-form route with this many grade levels and
        /// report the maximum alpha-cut deviation.
        #[arg(long)]
        levels: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// EVSI for every experiment in the file, ranked by preference.
    Compare {
        path: PathBuf,
        #[arg(long)]
        grid: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Write one CSV of membership samples per fuzzy quantity.
    Plot {
        path: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        grid: Option<usize>,
    },
    /// Randomized verification of the information-ordering theorem.
    Check {
        #[arg(long, default_value_t = 100)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
}

/// A failure carrying its exit code: 2 parse, 3 invariant, 4 numeric,
/// 5 theorem.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn parse(message: String) -> Failure {
        Failure { code: 2, message }
    }
    fn invariant(message: String) -> Failure {
        Failure { code: 3, message }
    }
    fn numeric(message: String) -> Failure {
        Failure { code: 4, message }
    }
    fn theorem(message: String) -> Failure {
        Failure { code: 5, message }
    }
}

impl From<CoreError> for Failure {
    fn from(e: CoreError) -> Failure {
        let message = e.to_string();
        match e {
            CoreError::ZeroMarginal
            | CoreError::DivergentIntegral
            | CoreError::NonFinite(_)
            | CoreError::AlphaOutOfRange(_) => Failure::numeric(message),
            _ => Failure::invariant(message),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn load(path: &Path) -> Result<(ProblemFile, Compiled), Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::parse(format!("{}: {e}", path.display())))?;
    let file: ProblemFile = serde_json::from_str(&text).map_err(|e| {
        let message = format!("{}: {e}", path.display());
        match e.classify() {
            serde_json::error::Category::Data => Failure::invariant(message),
            _ => Failure::parse(message),
        }
    })?;
    let compiled = file
        .compile()
        .map_err(|m| Failure::invariant(format!("{}: {m}", path.display())))?;
    Ok((file, compiled))
}

fn pick_experiment<'a>(
    compiled: &'a Compiled,
    name: &Option<String>,
) -> Result<(&'a str, &'a Experiment), Failure> {
    match name {
        Some(n) => compiled
            .experiments
            .iter()
            .find(|(en, _)| en == n)
            .map(|(en, e)| (en.as_str(), e))
            .ok_or_else(|| Failure::invariant(format!("no experiment named {n:?}"))),
        None => match compiled.experiments.as_slice() {
            [] => Err(Failure::invariant("the file defines no experiments".into())),
            [(en, e)] => Ok((en.as_str(), e)),
            _ => Err(Failure::invariant(
                "several experiments defined; pick one with --experiment".into(),
            )),
        },
    }
}

fn emit(report: &Report, json: bool) {
    if json {
        print!("{}", report.to_json());
    } else {
        print!("{}", report.to_text());
    }
}

fn named_eus(problem: &DecisionProblem, eus: &[FuzzyNumber]) -> Vec<NamedFuzzy> {
    problem
        .actions()
        .iter()
        .zip(eus)
        .map(|(name, value)| NamedFuzzy {
            name: name.clone(),
            value: value.clone(),
        })
        .collect()
}

fn regions_out(problem: &DecisionProblem, regions: &RegionPartition) -> RegionsOut {
    let name = |a: usize| problem.actions()[a].clone();
    match regions {
        RegionPartition::DiscreteMap { actions } => RegionsOut::Discrete {
            outcome_actions: actions.iter().map(|&a| name(a)).collect(),
        },
        RegionPartition::RealLine { cuts, actions } => RegionsOut::RealLine {
            cuts: cuts.clone(),
            actions: actions.iter().map(|&a| name(a)).collect(),
        },
    }
}

fn region_options(grid: Option<usize>) -> RegionOptions {
    let mut opts = RegionOptions::default();
    if let Some(g) = grid {
        opts.grid = g.max(2);
    }
    opts
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Analyze { path, json } => {
            let (_, compiled) = load(&path)?;
            let problem = &compiled.problem;
            let eus = problem.prior_expected_utilities();
            let sel = problem.optimal_prior_action();
            let mut report = Report::new(format!("analyze {}", path.display()));
            report.notes = compiled.notes.clone();
            report.expected_utilities = Some(named_eus(problem, &eus));
            report.r_matrix = Some(sel.r_matrix.clone());
            report.chosen_action = Some(problem.actions()[sel.index].clone());
            if sel.cycle_resolved {
                report
                    .diagnostics
                    .push("cycle-resolved: prior action selection".into());
            }
            emit(&report, json);
            Ok(())
        }
        Command::Posterior {
            path,
            experiment,
            x,
            outcome,
            json,
        } => {
            let (_, compiled) = load(&path)?;
            let problem = &compiled.problem;
            let (exp_name, exp) = pick_experiment(&compiled, &experiment)?;
            let obs = observation(exp, x, &outcome)?;
            let post = posterior(problem.prior(), exp, &obs)?;
            let eus = problem.expected_utilities(&post)?;
            let sel = problem.optimal_posterior_action(exp, &obs)?;
            let mut report = Report::new(format!("posterior {}", path.display()));
            report.notes = compiled.notes.clone();
            report.experiment = Some(exp_name.to_string());
            report.posterior = Some(
                problem
                    .states()
                    .names()
                    .iter()
                    .cloned()
                    .zip(post.probs().iter().copied())
                    .collect(),
            );
            report.expected_utilities = Some(named_eus(problem, &eus));
            report.r_matrix = Some(sel.r_matrix.clone());
            report.chosen_action = Some(problem.actions()[sel.index].clone());
            emit(&report, json);
            Ok(())
        }
        Command::Evpi { path, json } => {
            let (_, compiled) = load(&path)?;
            let problem = &compiled.problem;
            let evpi = problem.evpi();
            let mut report = Report::new(format!("evpi {}", path.display()));
            report.notes = compiled.notes.clone();
            report.evpi = Some(evpi);
            emit(&report, json);
            Ok(())
        }
        Command::Evsi {
            path,
            experiment,
            override_threshold,
            grid,
            levels,
            json,
        } => {
            let (_, compiled) = load(&path)?;
            let problem = &compiled.problem;
            let (exp_name, exp) = pick_experiment(&compiled, &experiment)?;
            let opts = region_options(grid);
            let (regions, mut diagnostics) = match override_threshold {
                Some(t) => (pinned_regions(problem, exp, t)?, Vec::new()),
                None => problem.decision_regions_with_diagnostics(exp, &opts)?,
            };
            let evsi = problem.evsi_with_regions(exp, &regions)?;
            let mass = problem.region_state_mass(exp, &regions)?;
            let coefficients: Vec<Vec<f64>> = mass
                .iter()
                .map(|per_state| {
                    per_state
                        .iter()
                        .zip(problem.prior().probs())
                        .map(|(&m, &p)| p * m)
                        .collect()
                })
                .collect();
            let evpi = problem.evpi();
            let mut report = Report::new(format!("evsi {}", path.display()));
            report.notes = compiled.notes.clone();
            report.experiment = Some(exp_name.to_string());
            report.regions = Some(regions_out(problem, &regions));
            report.coefficients = Some(coefficients);
            report.r_evpi_vs_evsi = Some(kolodziejczyk_r(&evpi, &evsi));
            report.r_evsi_vs_zero = Some(kolodziejczyk_r(&evsi, &zero()));
            if let Some(levels) = levels {
                let (direct, mut dd) = problem.evsi_direct(exp, levels, 512, &opts)?;
                let mut worst: f64 = 0.0;
                let steps = levels.max(2) - 1;
                for j in 0..=steps {
                    let alpha = j as f64 / steps as f64;
                    let a = evsi.alpha_cut(alpha)?;
                    let b = direct.alpha_cut(alpha)?;
                    worst = worst.max((a.lo - b.lo).abs()).max((a.hi - b.hi).abs());
                }
                report.direct_route_max_deviation = Some(worst);
                diagnostics.append(&mut dd);
            }
            report.evpi = Some(evpi);
            report.evsi = Some(evsi);
            report.diagnostics = diagnostics;
            emit(&report, json);
            Ok(())
        }
        Command::Compare { path, grid, json } => {
            let (_, compiled) = load(&path)?;
            let problem = &compiled.problem;
            if compiled.experiments.is_empty() {
                return Err(Failure::invariant(
                    "the file defines no experiments".into(),
                ));
            }
            let opts = region_options(grid);
            let exps: Vec<Experiment> = compiled
                .experiments
                .iter()
                .map(|(_, e)| e.clone())
                .collect();
            let cmp = problem.compare_experiments(&exps, &opts);
            let names: Vec<&String> = compiled.experiments.iter().map(|(n, _)| n).collect();
            let mut report = Report::new(format!("compare {}", path.display()));
            report.notes = compiled.notes.clone();
            report.comparison = Some(
                names
                    .iter()
                    .enumerate()
                    .map(|(i, n)| ComparisonEntry {
                        experiment: (*n).clone(),
                        evsi: cmp.evsi[i].clone(),
                        error: cmp.errors[i].as_ref().map(|e| e.to_string()),
                    })
                    .collect(),
            );
            report.r_matrix = Some(cmp.r_matrix.clone());
            report.ranking = Some(cmp.ranking.iter().map(|&i| names[i].clone()).collect());
            report.best_experiment = cmp.best.map(|i| names[i].clone());
            if cmp.cycle_resolved {
                report
                    .diagnostics
                    .push("cycle-resolved: experiment ranking".into());
            }
            emit(&report, json);
            Ok(())
        }
        Command::Plot { path, out, grid } => {
            let (_, compiled) = load(&path)?;
            write_plots(&compiled, &out, region_options(grid))
        }
        Command::Check { trials, seed, json } => {
            let opts = RegionOptions::default();
            let mut failing = Vec::new();
            for i in 0..trials {
                let case_seed = seed.wrapping_add(i);
                let (problem, exp) = random_discrete_problem(case_seed);
                match problem.verify_theorem(&exp, &opts) {
                    Ok(r) if r.theorem_holds() => {}
                    _ => failing.push(case_seed),
                }
            }
            let mut report = Report::new(format!("check --trials {trials} --seed {seed}"));
            report.trials = Some(trials);
            report.passed = Some(trials - failing.len() as u64);
            report.failing_seeds = failing.clone();
            emit(&report, json);
            if failing.is_empty() {
                Ok(())
            } else {
                Err(Failure::theorem(format!(
                    "{} of {trials} cases violated the information ordering",
                    failing.len()
                )))
            }
        }
    }
}

fn observation(
    exp: &Experiment,
    x: Option<f64>,
    outcome: &Option<String>,
) -> Result<Observation, Failure> {
    match (exp, x, outcome) {
        (Experiment::Gaussian { .. }, Some(v), None) => Ok(Observation::RealValue(v)),
        (Experiment::Discrete { outcome_names, .. }, None, Some(name)) => outcome_names
            .iter()
            .position(|n| n == name)
            .map(Observation::DiscreteOutcome)
            .ok_or_else(|| Failure::invariant(format!("no outcome named {name:?}"))),
        (Experiment::Gaussian { .. }, _, _) => Err(Failure::invariant(
            "gaussian experiments take an observation via --x".into(),
        )),
        (Experiment::Discrete { .. }, _, _) => Err(Failure::invariant(
            "discrete experiments take an observation via --outcome".into(),
        )),
    }
}

/// Builds the threshold partition for a pinned cut: the optimal action on
/// each side is evaluated at the midpoint of that side's scan segment, so
/// the labels follow the problem's actual preferences away from the cut.
fn pinned_regions(
    problem: &DecisionProblem,
    exp: &Experiment,
    threshold: f64,
) -> Result<RegionPartition, Failure> {
    let (means, stds) = match exp {
        Experiment::Gaussian { means, stds } => (means, stds),
        Experiment::Discrete { .. } => {
            return Err(Failure::invariant(
                "--override-threshold applies to gaussian experiments only".into(),
            ))
        }
    };
    if !threshold.is_finite() {
        return Err(Failure::invariant("--override-threshold must be finite".into()));
    }
    let spread = stds.iter().cloned().fold(0.0f64, f64::max) * 8.0;
    let lo = means.iter().cloned().fold(f64::INFINITY, f64::min) - spread;
    let hi = means.iter().cloned().fold(f64::NEG_INFINITY, f64::max) + spread;
    let lo = lo.min(threshold - 1.0);
    let hi = hi.max(threshold + 1.0);
    let mut actions = Vec::with_capacity(2);
    for mid in [(lo + threshold) / 2.0, (threshold + hi) / 2.0] {
        let sel = problem.optimal_posterior_action(exp, &Observation::RealValue(mid))?;
        actions.push(sel.index);
    }
    Ok(RegionPartition::RealLine {
        cuts: vec![threshold],
        actions,
    })
}

/// One CSV per fuzzy quantity, rows `series,w,mu`, sampled at every
/// breakpoint plus 64 uniform fill points over the support.
fn write_plots(compiled: &Compiled, out: &Path, opts: RegionOptions) -> Result<(), Failure> {
    fs::create_dir_all(out)
        .map_err(|e| Failure::parse(format!("{}: {e}", out.display())))?;
    let problem = &compiled.problem;
    let mut quantities: Vec<(String, FuzzyNumber)> = Vec::new();
    for (s, state) in problem.states().names().iter().enumerate() {
        for (a, action) in problem.actions().iter().enumerate() {
            quantities.push((
                format!("utility_{state}_{action}"),
                problem.utility(s, a).clone(),
            ));
        }
    }
    for (nf, eu) in problem
        .actions()
        .iter()
        .zip(problem.prior_expected_utilities())
    {
        quantities.push((format!("eu_{nf}"), eu));
    }
    quantities.push(("evpi".into(), problem.evpi()));
    for (name, exp) in &compiled.experiments {
        let evsi = problem.evsi(exp, &opts)?;
        quantities.push((format!("evsi_{name}"), evsi));
    }
    for (name, f) in &quantities {
        let file = out.join(format!("{}.csv", sanitize(name)));
        let mut body = String::from("series,w,mu\n");
        for w in sample_points(f) {
            body.push_str(&format!(
                "{name},{},{}\n",
                report::fmt10(w),
                report::fmt10(f.membership_at(w))
            ));
        }
        fs::write(&file, body)
            .map_err(|e| Failure::parse(format!("{}: {e}", file.display())))?;
        println!("wrote {}", file.display());
    }
    Ok(())
}

fn sanitize(name: &str) -> String {
    name.chars()
        .map(|c| if c.is_alphanumeric() || c == '_' || c == '-' { c } else { '_' })
        .collect()
}

/// Breakpoints plus 64 uniform fill points, ascending and deduplicated.
fn sample_points(f: &FuzzyNumber) -> Vec<f64> {
    let support = f.support();
    let mut pts: Vec<f64> = f.points().iter().map(|p| p.0).collect();
    if support.width() > 0.0 {
        for i in 0..64 {
            pts.push(support.lo + support.width() * i as f64 / 63.0);
        }
    }
    pts.sort_by(|a, b| a.partial_cmp(b).unwrap());
    pts.dedup();
    pts
}
