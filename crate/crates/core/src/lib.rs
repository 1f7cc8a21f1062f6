//! Bayesian decision analysis with fuzzy utilities.
//!
//! The crate models decision problems whose consequences are piecewise-linear
//! fuzzy numbers, ranks the resulting fuzzy expected utilities with a
//! Hamming-distance preference index, and computes the expected value of
//! perfect information (EVPI) and of sample information (EVSI) for discrete
//! and Gaussian experiments. The headline guarantee — perfect information is
//! worth at least as much as any sample, which is worth at least nothing —
//! is machine-checkable per problem via [`DecisionProblem::verify_theorem`].
//!
//! Arithmetic on fuzzy numbers is exact at breakpoints: sums, scalar
//! multiples, and differences are computed from level-endpoint functions, not
//! from a discretized grade grid.

pub mod decision;
mod erf;
pub mod error;
pub mod expectation;
pub mod fuzzy;
pub mod generator;
pub mod inference;
pub mod piecewise;
pub mod quadrature;
pub mod ranking;

pub use decision::{
    DecisionProblem, ExperimentComparison, RegionOptions, RegionPartition, ValueReport,
};
pub use error::{Error, Result};
pub use expectation::{expected_utility, SimpleFrv};
pub use fuzzy::{
    make_crisp, make_trapezoidal, make_triangular, zero, FuzzyLiteral, FuzzyNumber, Interval,
};
pub use inference::{
    gaussian_cdf, likelihood, marginal_outcome_prob, posterior, predictive_region_prob,
    Distribution, Experiment, Observation, StateSpace,
};
pub use ranking::{
    best_index, kolodziejczyk_r, prefer, prefer_with_tol, Preference, Selection, Verdict,
    INDIFFERENCE_TOL,
};
