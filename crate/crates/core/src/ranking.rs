//! The Kolodziejczyk preference relation on fuzzy numbers.
//!
//! `R(U, V) = (d1 + d2 + d3) / (d4 + d5 + 2 d3)` is the degree of truth of
//! "U is not higher than V"; `U` is preferred or indifferent to `V` whenever
//! `R(U, V) <= 0.5`.
//!
//! The extended maximum of two monotone profiles is evaluated in closed form:
//! for nondecreasing profiles the extension-principle maximum is the pointwise
//! *minimum* of the memberships, for nonincreasing profiles it is the pointwise
//! *maximum*. (Sketch: for nondecreasing `mu_{>=U}`, the level set
//! `{w : mu(w) >= a}` is a right half-line `[lo(a), inf)`, and the sup-min
//! composition of `max` shifts it to `[max(lo_U(a), lo_V(a)), inf)` — the level
//! set of the pointwise minimum. Mirrored for nonincreasing profiles.) This is
//! the only reading under which a `U` entirely left of `V` gets `R(U, V) = 1`
//! and identical arguments get `0.5`; pointwise-union readings give 0.5 for
//! disjoint pairs and are rejected. The resulting distances collapse to the
//! one-sided forms used below, e.g.
//! `d1 = d(>=U v >=V, >=U) = integral of max(0, mu_{>=U} - mu_{>=V})`.

use crate::error::{Error, Result};
use crate::fuzzy::FuzzyNumber;
use crate::piecewise::{hamming_distance, min_integral, positive_part_distance, PwlFunction};

/// Default tolerance around `R = 0.5` inside which two values are indifferent.
pub const INDIFFERENCE_TOL: f64 = 1e-9;

/// Denominators below this are treated as the identical-crisp case.
const DENOM_EPS: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MonotoneDirection {
    NonDecreasing,
    NonIncreasing,
}

/// A monotone envelope of a membership function: piecewise-linear between its
/// breakpoints, constant beyond them, with tail values 0 on one side and 1 on
/// the other.
#[derive(Debug, Clone, PartialEq)]
pub struct MonotoneProfile {
    func: PwlFunction,
    direction: MonotoneDirection,
}

impl MonotoneProfile {
    pub fn function(&self) -> &PwlFunction {
        &self.func
    }

    pub fn direction(&self) -> MonotoneDirection {
        self.direction
    }

    pub fn value_at(&self, w: f64) -> f64 {
        self.func.value_at(w)
    }
}

/// The nondecreasing envelope "more than or equal to F":
/// `mu(w) = max over u <= w of mu_F(u)`. Equals `mu_F` left of the modal set
/// and 1 from the modal set's left endpoint onward; the descent of `F` is
/// ignored entirely.
pub fn geq_profile(f: &FuzzyNumber) -> MonotoneProfile {
    let modal_start = f
        .points()
        .iter()
        .position(|p| p.1 == 1.0)
        .expect("fuzzy numbers are normal");
    let points = f.points()[..=modal_start].to_vec();
    MonotoneProfile {
        func: PwlFunction::new(points, 0.0, 1.0).expect("valid envelope"),
        direction: MonotoneDirection::NonDecreasing,
    }
}

/// The nonincreasing envelope "less than or equal to F", the mirror image.
pub fn leq_profile(f: &FuzzyNumber) -> MonotoneProfile {
    let modal_end = f
        .points()
        .iter()
        .rposition(|p| p.1 == 1.0)
        .expect("fuzzy numbers are normal");
    let points = f.points()[modal_end..].to_vec();
    MonotoneProfile {
        func: PwlFunction::new(points, 1.0, 0.0).expect("valid envelope"),
        direction: MonotoneDirection::NonIncreasing,
    }
}

/// The Kolodziejczyk coefficient `R(U, V)` in `[0, 1]`.
pub fn kolodziejczyk_r(u: &FuzzyNumber, v: &FuzzyNumber) -> f64 {
    let geq_u = geq_profile(u);
    let geq_v = geq_profile(v);
    let leq_u = leq_profile(u);
    let leq_v = leq_profile(v);
    let mu_u = PwlFunction::from_fuzzy(u);
    let mu_v = PwlFunction::from_fuzzy(v);

    let d1 = positive_part_distance(geq_u.function(), geq_v.function())
        .expect("envelope tails match");
    let d2 = positive_part_distance(leq_v.function(), leq_u.function())
        .expect("envelope tails match");
    let d3 = min_integral(&mu_u, &mu_v).expect("membership tails are 0");
    let d4 = hamming_distance(geq_u.function(), geq_v.function()).expect("envelope tails match");
    let d5 = hamming_distance(leq_u.function(), leq_v.function()).expect("envelope tails match");

    let denom = d4 + d5 + 2.0 * d3;
    if denom < DENOM_EPS {
        // both arguments are the same crisp point: indifference by continuity
        return 0.5;
    }
    (d1 + d2 + d3) / denom
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    FirstPreferred,
    SecondPreferred,
    Indifferent,
}

/// Outcome of comparing two fuzzy numbers.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Preference {
    pub r: f64,
    pub verdict: Verdict,
}

pub fn prefer(u: &FuzzyNumber, v: &FuzzyNumber) -> Preference {
    prefer_with_tol(u, v, INDIFFERENCE_TOL)
}

pub fn prefer_with_tol(u: &FuzzyNumber, v: &FuzzyNumber, tol: f64) -> Preference {
    let r = kolodziejczyk_r(u, v);
    let verdict = if (r - 0.5).abs() <= tol {
        Verdict::Indifferent
    } else if r < 0.5 {
        Verdict::FirstPreferred
    } else {
        Verdict::SecondPreferred
    };
    Preference { r, verdict }
}

/// Diagnostics from selecting a best element of a finite family.
#[derive(Debug, Clone, PartialEq)]
pub struct Selection {
    pub index: usize,
    /// `r_matrix[i][j] = R(candidate_i, candidate_j)`.
    pub r_matrix: Vec<Vec<f64>>,
    /// True when no candidate weakly beat every other and the winner was
    /// picked by Copeland score instead.
    pub cycle_resolved: bool,
}

/// Picks the lowest index `i` with `R(c_i, c_j) <= 0.5 + tol` for all `j`.
/// If a preference cycle leaves no such witness, falls back to the maximum
/// Copeland score (count of strict wins), lowest index on ties, and flags it.
pub fn best_index(candidates: &[FuzzyNumber]) -> Result<Selection> {
    if candidates.is_empty() {
        return Err(Error::EmptyCandidates);
    }
    let n = candidates.len();
    let mut r_matrix = vec![vec![0.5; n]; n];
    for i in 0..n {
        for j in (i + 1)..n {
            let r = kolodziejczyk_r(&candidates[i], &candidates[j]);
            r_matrix[i][j] = r;
            r_matrix[j][i] = 1.0 - r;
        }
    }
    for i in 0..n {
        if (0..n).all(|j| r_matrix[i][j] <= 0.5 + INDIFFERENCE_TOL) {
            return Ok(Selection {
                index: i,
                r_matrix,
                cycle_resolved: false,
            });
        }
    }
    let copeland = |i: usize| {
        (0..n)
            .filter(|&j| j != i && r_matrix[i][j] < 0.5 - INDIFFERENCE_TOL)
            .count()
    };
    let index = (0..n).max_by_key(|&i| (copeland(i), n - i)).unwrap();
    Ok(Selection {
        index,
        r_matrix,
        cycle_resolved: true,
    })
}
