//! Piecewise-linear fuzzy numbers and their exact arithmetic.
//!
//! A fuzzy number here is a normalized, quasiconcave membership function with
//! compact support, represented exactly by its breakpoints. Addition, negation,
//! scaling and translation are closed over this family, so every expected
//! utility, EVPI and EVSI downstream is breakpoint-exact: no alpha-grid
//! discretization happens anywhere in the arithmetic.

use crate::error::{Error, Result};
use serde::de::Deserializer;
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

/// A closed real interval, the value of an alpha-level set.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
}

impl Interval {
    pub fn new(lo: f64, hi: f64) -> Self {
        debug_assert!(lo <= hi);
        Interval { lo, hi }
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }
}

/// A piecewise-linear fuzzy number.
///
/// Invariants, enforced on every construction path:
/// - abscissas strictly increasing, list non-empty;
/// - membership is linear between consecutive breakpoints and 0 outside the
///   support `[first abscissa, last abscissa]`;
/// - grades are quasiconcave: nondecreasing up to some index, nonincreasing
///   afterward, so every alpha-level set is a closed interval;
/// - the maximum grade is exactly 1 and is attained on a contiguous run of
///   breakpoints (the modal set);
/// - a boundary grade is either 0 or exactly 1; the latter encodes a vertical
///   side (e.g. a triangular shape whose peak sits on a support endpoint).
#[derive(Debug, Clone, PartialEq)]
pub struct FuzzyNumber {
    points: Vec<(f64, f64)>,
}

/// The crisp zero, the reference element for "EVSI is non-negative" checks.
pub fn zero() -> FuzzyNumber {
    make_crisp(0.0).expect("0 is finite")
}

/// A fuzzy number whose membership is 1 at `v` and 0 elsewhere.
pub fn make_crisp(v: f64) -> Result<FuzzyNumber> {
    if !v.is_finite() {
        return Err(Error::NonFinite("crisp value"));
    }
    Ok(FuzzyNumber {
        points: vec![(v, 1.0)],
    })
}

/// Triangular fuzzy number with support `[a, c]` and peak at `b`.
/// Degenerate sides collapse: `a == b` or `b == c` gives a vertical side,
/// `a == c` gives a crisp number.
pub fn make_triangular(a: f64, b: f64, c: f64) -> Result<FuzzyNumber> {
    if !(a.is_finite() && b.is_finite() && c.is_finite()) {
        return Err(Error::NonFinite("triangular parameters"));
    }
    if !(a <= b && b <= c) {
        return Err(Error::InvalidFuzzyNumber(format!(
            "triangular parameters must satisfy a <= b <= c, got ({a}, {b}, {c})"
        )));
    }
    if a == c {
        return make_crisp(b);
    }
    let mut pts = Vec::with_capacity(3);
    if a < b {
        pts.push((a, 0.0));
    }
    pts.push((b, 1.0));
    if b < c {
        pts.push((c, 0.0));
    }
    FuzzyNumber::from_breakpoints(pts)
}

/// Trapezoidal fuzzy number with support `[a, d]` and modal interval `[b, c]`.
pub fn make_trapezoidal(a: f64, b: f64, c: f64, d: f64) -> Result<FuzzyNumber> {
    if !(a.is_finite() && b.is_finite() && c.is_finite() && d.is_finite()) {
        return Err(Error::NonFinite("trapezoidal parameters"));
    }
    if !(a <= b && b <= c && c <= d) {
        return Err(Error::InvalidFuzzyNumber(format!(
            "trapezoidal parameters must satisfy a <= b <= c <= d, got ({a}, {b}, {c}, {d})"
        )));
    }
    if a == d {
        return make_crisp(b);
    }
    let mut pts = Vec::with_capacity(4);
    if a < b {
        pts.push((a, 0.0));
    }
    pts.push((b, 1.0));
    if c > b {
        pts.push((c, 1.0));
    }
    if d > c {
        pts.push((d, 0.0));
    }
    FuzzyNumber::from_breakpoints(pts)
}

impl FuzzyNumber {
    /// Validates a candidate breakpoint list. Consecutive exact duplicates are
    /// removed; interior plateau points are preserved as-is.
    pub fn from_breakpoints(points: Vec<(f64, f64)>) -> Result<FuzzyNumber> {
        let mut pts: Vec<(f64, f64)> = Vec::with_capacity(points.len());
        for p in points {
            if pts.last() != Some(&p) {
                pts.push(p);
            }
        }
        if pts.is_empty() {
            return Err(Error::InvalidFuzzyNumber("empty breakpoint list".into()));
        }
        for &(x, g) in &pts {
            if !x.is_finite() || !g.is_finite() {
                return Err(Error::NonFinite("breakpoint"));
            }
            if !(0.0..=1.0).contains(&g) {
                return Err(Error::InvalidFuzzyNumber(format!(
                    "grade {g} outside [0, 1]"
                )));
            }
        }
        for w in pts.windows(2) {
            if w[1].0 <= w[0].0 {
                return Err(Error::InvalidFuzzyNumber(format!(
                    "abscissas not strictly increasing at {}",
                    w[1].0
                )));
            }
        }
        // quasiconcavity: nondecreasing up to a split, nonincreasing afterward
        let mut i = 0;
        while i + 1 < pts.len() && pts[i].1 <= pts[i + 1].1 {
            i += 1;
        }
        while i + 1 < pts.len() {
            if pts[i].1 < pts[i + 1].1 {
                return Err(Error::InvalidFuzzyNumber(
                    "quasiconcavity violated: grades rise after falling".into(),
                ));
            }
            i += 1;
        }
        let max = pts.iter().map(|p| p.1).fold(f64::NEG_INFINITY, f64::max);
        if max != 1.0 {
            return Err(Error::InvalidFuzzyNumber(format!(
                "normality violated: maximum grade {max} != 1"
            )));
        }
        if pts.len() > 1 {
            let first = pts[0].1;
            let last = pts[pts.len() - 1].1;
            // a boundary grade of exactly 1 is a vertical side reaching the
            // modal set; anything strictly between 0 and 1 is rejected
            if (first != 0.0 && first != 1.0) || (last != 0.0 && last != 1.0) {
                return Err(Error::InvalidFuzzyNumber(format!(
                    "boundary grades must be 0 (or 1 for a vertical side), got {first} and {last}"
                )));
            }
        }
        Ok(FuzzyNumber { points: pts })
    }

    /// Rebuilds a fuzzy number from ascending `(grade, lo, hi)` level
    /// endpoints, the last at grade 1. Expects nested levels (`lo`
    /// nondecreasing, `hi` nonincreasing, `lo <= hi`); abscissas that fail to
    /// advance by floating-point drift are clamped to the previous breakpoint.
    pub fn from_alpha_levels(levels: &[(f64, f64, f64)]) -> Result<FuzzyNumber> {
        if levels.is_empty() {
            return Err(Error::InvalidFuzzyNumber("empty level list".into()));
        }
        let top = levels[levels.len() - 1];
        if top.0 != 1.0 {
            return Err(Error::InvalidFuzzyNumber(format!(
                "final level grade {} != 1",
                top.0
            )));
        }
        let mut pts = Vec::with_capacity(2 * levels.len());
        for &(g, lo, _) in levels {
            pts.push((lo, g));
        }
        if top.2 > top.1 {
            pts.push((top.2, 1.0));
        }
        for &(g, _, hi) in levels.iter().rev().skip(1) {
            pts.push((hi, g));
        }
        for w in pts.windows(2) {
            if w[1].0 < w[0].0 {
                return Err(Error::InvalidFuzzyNumber(
                    "level endpoints are not nested".into(),
                ));
            }
        }
        // equal abscissas merge to the highest grade (a vertical side); if a
        // merge swallows a support endpoint, pin the boundary grade back to 0
        let mut pts = dedup_collinear(pts);
        let n = pts.len();
        if n > 1 {
            if pts[0].1 != 1.0 {
                pts[0].1 = 0.0;
            }
            if pts[n - 1].1 != 1.0 {
                pts[n - 1].1 = 0.0;
            }
        }
        FuzzyNumber::from_breakpoints(pts)
    }

    /// The validated breakpoint list.
    pub fn points(&self) -> &[(f64, f64)] {
        &self.points
    }

    pub fn is_crisp(&self) -> bool {
        self.points.len() == 1
    }

    /// Support closure `[first abscissa, last abscissa]`.
    pub fn support(&self) -> Interval {
        Interval::new(self.points[0].0, self.points[self.points.len() - 1].0)
    }

    /// Index of the first breakpoint with grade 1.
    pub(crate) fn modal_start(&self) -> usize {
        self.points.iter().position(|p| p.1 == 1.0).expect("normal")
    }

    /// Index of the last breakpoint with grade 1.
    pub(crate) fn modal_end(&self) -> usize {
        self.points.len()
            - 1
            - self
                .points
                .iter()
                .rev()
                .position(|p| p.1 == 1.0)
                .expect("normal")
    }

    /// The modal set `{w : mu(w) = 1}` as a closed interval.
    pub fn modal_interval(&self) -> Interval {
        Interval::new(
            self.points[self.modal_start()].0,
            self.points[self.modal_end()].0,
        )
    }

    /// Membership grade at `w`: linear interpolation inside the support, 0 outside.
    pub fn membership_at(&self, w: f64) -> f64 {
        let pts = &self.points;
        if w < pts[0].0 || w > pts[pts.len() - 1].0 {
            return 0.0;
        }
        match pts.binary_search_by(|p| p.0.partial_cmp(&w).unwrap()) {
            Ok(i) => pts[i].1,
            Err(i) => {
                // pts[i - 1].0 < w < pts[i].0
                let (x0, g0) = pts[i - 1];
                let (x1, g1) = pts[i];
                g0 + (g1 - g0) * (w - x0) / (x1 - x0)
            }
        }
    }

    /// Left flank: breakpoints up to and including the first modal point.
    /// Grades are nondecreasing along it.
    fn left_flank(&self) -> &[(f64, f64)] {
        &self.points[..=self.modal_start()]
    }

    /// Right flank: breakpoints from the last modal point onward.
    /// Grades are nonincreasing along it.
    fn right_flank(&self) -> &[(f64, f64)] {
        &self.points[self.modal_end()..]
    }

    /// Lower endpoint of the alpha-level set: `inf {w : mu(w) >= g}` for
    /// `g > 0`, support minimum for `g = 0`.
    pub(crate) fn level_lo(&self, g: f64) -> f64 {
        let flank = self.left_flank();
        let i = flank
            .iter()
            .position(|p| p.1 >= g)
            .expect("flank reaches grade 1");
        if i == 0 || flank[i].1 == g {
            flank[i].0
        } else {
            let (x0, g0) = flank[i - 1];
            let (x1, g1) = flank[i];
            x0 + (x1 - x0) * (g - g0) / (g1 - g0)
        }
    }

    /// Limit of the lower level endpoint from above: the right end of a
    /// left-flank plateau at grade `g`, or `level_lo(g)` when no plateau exists.
    fn level_lo_plus(&self, g: f64) -> f64 {
        let flank = self.left_flank();
        match flank.iter().rposition(|p| p.1 <= g) {
            None => flank[0].0, // vertical side below its first grade
            Some(i) => {
                if flank[i].1 == g || i + 1 == flank.len() {
                    flank[i].0
                } else {
                    let (x0, g0) = flank[i];
                    let (x1, g1) = flank[i + 1];
                    x0 + (x1 - x0) * (g - g0) / (g1 - g0)
                }
            }
        }
    }

    /// Upper endpoint of the alpha-level set: `sup {w : mu(w) >= g}` for
    /// `g > 0`, support maximum for `g = 0`.
    pub(crate) fn level_hi(&self, g: f64) -> f64 {
        let flank = self.right_flank();
        let i = flank
            .iter()
            .rposition(|p| p.1 >= g)
            .expect("flank starts at grade 1");
        if i + 1 == flank.len() || flank[i].1 == g {
            flank[i].0
        } else {
            let (x0, g0) = flank[i];
            let (x1, g1) = flank[i + 1];
            x0 + (x1 - x0) * (g0 - g) / (g0 - g1)
        }
    }

    /// Limit of the upper level endpoint from above: the left end of a
    /// right-flank plateau at grade `g`, or `level_hi(g)` when no plateau exists.
    fn level_hi_plus(&self, g: f64) -> f64 {
        let flank = self.right_flank();
        match flank.iter().position(|p| p.1 <= g) {
            None => flank[flank.len() - 1].0,
            Some(i) => {
                if flank[i].1 == g || i == 0 {
                    flank[i].0
                } else {
                    let (x0, g0) = flank[i - 1];
                    let (x1, g1) = flank[i];
                    x0 + (x1 - x0) * (g0 - g) / (g0 - g1)
                }
            }
        }
    }

    /// Closed alpha-level set; for `alpha = 0` the support closure.
    pub fn alpha_cut(&self, alpha: f64) -> Result<Interval> {
        if !alpha.is_finite() || !(0.0..=1.0).contains(&alpha) {
            return Err(Error::AlphaOutOfRange(alpha));
        }
        Ok(Interval::new(self.level_lo(alpha), self.level_hi(alpha)))
    }

    /// Extension-principle sum, computed exactly: both level-endpoint
    /// functions are piecewise-linear in the grade with kinks only at the
    /// operands' breakpoint grades, so evaluating the summed endpoints at the
    /// union of both grade sets reproduces the sum breakpoint-exact.
    pub fn add(&self, other: &FuzzyNumber) -> FuzzyNumber {
        let grades = merged_grades(self, other);
        assemble_from_levels(
            &grades,
            |g| self.level_lo(g) + other.level_lo(g),
            |g| self.level_lo_plus(g) + other.level_lo_plus(g),
            |g| self.level_hi(g) + other.level_hi(g),
            |g| self.level_hi_plus(g) + other.level_hi_plus(g),
        )
    }

    /// Mirror about 0.
    pub fn negate(&self) -> FuzzyNumber {
        let points = self.points.iter().rev().map(|&(x, g)| (-x, g)).collect();
        FuzzyNumber { points }
    }

    /// `self + (-other)`.
    pub fn subtract(&self, other: &FuzzyNumber) -> FuzzyNumber {
        self.add(&other.negate())
    }

    /// Product by a scalar. `lambda = 0` collapses to crisp 0, preserving
    /// normality; negative factors go through negation.
    pub fn scale(&self, lambda: f64) -> FuzzyNumber {
        assert!(lambda.is_finite(), "scale factor must be finite");
        if lambda == 0.0 {
            return zero();
        }
        if lambda < 0.0 {
            return self.negate().scale(-lambda);
        }
        let points = self.points.iter().map(|&(x, g)| (x * lambda, g)).collect();
        FuzzyNumber { points }
    }

    /// Shift all abscissas by `beta`.
    pub fn translate(&self, beta: f64) -> FuzzyNumber {
        assert!(beta.is_finite(), "shift must be finite");
        let points = self.points.iter().map(|&(x, g)| (x + beta, g)).collect();
        FuzzyNumber { points }
    }

    /// Area under the membership function, exact trapezoidal integration.
    pub fn area(&self) -> f64 {
        self.points
            .windows(2)
            .map(|w| (w[1].0 - w[0].0) * (w[0].1 + w[1].1) / 2.0)
            .sum()
    }

    /// Sup-norm equality over the merged breakpoint set; used by tests.
    pub fn approx_eq(&self, other: &FuzzyNumber, tol: f64) -> bool {
        let mut xs: Vec<f64> = self
            .points
            .iter()
            .chain(other.points.iter())
            .map(|p| p.0)
            .collect();
        xs.sort_by(|a, b| a.partial_cmp(b).unwrap());
        xs.dedup();
        let mids: Vec<f64> = xs.windows(2).map(|w| (w[0] + w[1]) / 2.0).collect();
        xs.extend(mids);
        xs.iter()
            .all(|&x| (self.membership_at(x) - other.membership_at(x)).abs() <= tol)
    }
}

fn merged_grades(a: &FuzzyNumber, b: &FuzzyNumber) -> Vec<f64> {
    let mut grades: Vec<f64> = a
        .points
        .iter()
        .chain(b.points.iter())
        .map(|p| p.1)
        .collect();
    grades.sort_by(|x, y| x.partial_cmp(y).unwrap());
    grades.dedup();
    grades
}

/// Rebuilds a fuzzy number from level-endpoint functions sampled at a merged
/// grade set. `lo`/`hi` are the one-sided endpoint values at each grade;
/// plateaus appear wherever the `+` limit differs from the value itself.
fn assemble_from_levels(
    grades: &[f64],
    lo: impl Fn(f64) -> f64,
    lo_plus: impl Fn(f64) -> f64,
    hi: impl Fn(f64) -> f64,
    hi_plus: impl Fn(f64) -> f64,
) -> FuzzyNumber {
    debug_assert_eq!(*grades.last().unwrap(), 1.0);
    let mut pts: Vec<(f64, f64)> = Vec::new();
    for &g in grades.iter().take(grades.len() - 1) {
        let a = lo(g);
        let b = lo_plus(g);
        pts.push((a, g));
        if b > a {
            pts.push((b, g));
        }
    }
    let peak_lo = lo(1.0);
    let peak_hi = hi(1.0);
    pts.push((peak_lo, 1.0));
    if peak_hi > peak_lo {
        pts.push((peak_hi, 1.0));
    }
    for &g in grades.iter().rev().skip(1) {
        let a = hi_plus(g);
        let b = hi(g);
        pts.push((a, g));
        if b > a {
            pts.push((b, g));
        }
    }
    FuzzyNumber {
        points: dedup_collinear(pts),
    }
}

/// Collapses equal abscissas (keeping the highest grade, i.e. a vertical
/// side), exact duplicates, and interior points that sit exactly on the line
/// through their neighbours under the same interpolation `membership_at` uses,
/// so dropping them never changes any membership value.
fn dedup_collinear(pts: Vec<(f64, f64)>) -> Vec<(f64, f64)> {
    let mut out: Vec<(f64, f64)> = Vec::with_capacity(pts.len());
    for (x, g) in pts {
        match out.last_mut() {
            Some(last) if last.0 == x => {
                if g > last.1 {
                    last.1 = g;
                }
            }
            _ => out.push((x, g)),
        }
        while out.len() >= 3 {
            let (x0, g0) = out[out.len() - 3];
            let (x1, g1) = out[out.len() - 2];
            let (x2, g2) = out[out.len() - 1];
            if x0 < x1 && x1 < x2 && g0 + (g2 - g0) * (x1 - x0) / (x2 - x0) == g1 {
                out.remove(out.len() - 2);
            } else {
                break;
            }
        }
    }
    out
}

impl Serialize for FuzzyNumber {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.points.len()))?;
        for &(x, g) in &self.points {
            seq.serialize_element(&[x, g])?;
        }
        seq.end()
    }
}

/// Serialized form of a fuzzy number: either a bare list of `[abscissa, grade]`
/// pairs or one of the shorthand objects `{"crisp": v}`, `{"tri": [a,b,c]}`,
/// `{"trap": [a,b,c,d]}`, `{"pwl": [[x, mu], ...]}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FuzzyLiteral {
    Crisp { crisp: f64 },
    Tri { tri: [f64; 3] },
    Trap { trap: [f64; 4] },
    Pwl { pwl: Vec<[f64; 2]> },
    Bare(Vec<[f64; 2]>),
}

impl FuzzyLiteral {
    pub fn to_fuzzy(&self) -> Result<FuzzyNumber> {
        match self {
            FuzzyLiteral::Crisp { crisp } => make_crisp(*crisp),
            FuzzyLiteral::Tri { tri: [a, b, c] } => make_triangular(*a, *b, *c),
            FuzzyLiteral::Trap { trap: [a, b, c, d] } => make_trapezoidal(*a, *b, *c, *d),
            FuzzyLiteral::Pwl { pwl } | FuzzyLiteral::Bare(pwl) => {
                FuzzyNumber::from_breakpoints(pwl.iter().map(|p| (p[0], p[1])).collect())
            }
        }
    }
}

impl From<&FuzzyNumber> for FuzzyLiteral {
    fn from(f: &FuzzyNumber) -> Self {
        FuzzyLiteral::Bare(f.points.iter().map(|&(x, g)| [x, g]).collect())
    }
}

impl<'de> Deserialize<'de> for FuzzyNumber {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let lit = FuzzyLiteral::deserialize(deserializer)?;
        lit.to_fuzzy().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tri(a: f64, b: f64, c: f64) -> FuzzyNumber {
        make_triangular(a, b, c).unwrap()
    }

    #[test]
    fn crisp_membership() {
        let z = make_crisp(0.0).unwrap();
        assert_eq!(z.membership_at(0.0), 1.0);
        assert_eq!(z.membership_at(0.1), 0.0);
        let three = make_crisp(3.0).unwrap();
        assert_eq!(three.support(), Interval::new(3.0, 3.0));
        assert_eq!(three.modal_interval(), Interval::new(3.0, 3.0));
        assert_eq!(three.membership_at(3.0), 1.0);
    }

    #[test]
    fn crisp_rejects_non_finite() {
        assert!(make_crisp(f64::NAN).is_err());
        assert!(make_crisp(f64::INFINITY).is_err());
    }

    #[test]
    fn crisp_negate_symmetry() {
        let f = make_crisp(2.0).unwrap().negate();
        assert_eq!(f, make_crisp(-2.0).unwrap());
    }

    #[test]
    fn triangular_shapes() {
        let f = tri(0.0, 1.0, 2.0);
        assert_eq!(f.membership_at(1.0), 1.0);
        assert_eq!(f.membership_at(0.5), 0.5);
        assert_eq!(tri(5.0, 5.0, 5.0), make_crisp(5.0).unwrap());
        // vertical left side
        let v = tri(0.0, 0.0, 2.0);
        assert_eq!(v.membership_at(0.0), 1.0);
        assert_eq!(v.membership_at(1.0), 0.5);
        assert_eq!(v.membership_at(-0.01), 0.0);
        assert!(make_triangular(2.0, 1.0, 0.0).is_err());
    }

    #[test]
    fn trapezoidal_shapes() {
        let f = make_trapezoidal(0.0, 1.0, 2.0, 3.0).unwrap();
        assert_eq!(f.modal_interval(), Interval::new(1.0, 2.0));
        assert_eq!(f.membership_at(0.5), 0.5);
        assert_eq!(f.membership_at(2.5), 0.5);
        assert_eq!(make_trapezoidal(0.0, 1.0, 1.0, 2.0).unwrap(), tri(0.0, 1.0, 2.0));
        assert!(make_trapezoidal(0.0, 2.0, 1.0, 3.0).is_err());
    }

    #[test]
    fn breakpoint_validation() {
        assert!(FuzzyNumber::from_breakpoints(vec![(0.0, 0.0), (1.0, 1.0), (2.0, 0.0)]).is_ok());
        // normality
        let e = FuzzyNumber::from_breakpoints(vec![(0.0, 0.0), (1.0, 0.8), (2.0, 0.0)]);
        assert!(matches!(e, Err(Error::InvalidFuzzyNumber(ref m)) if m.contains("normality")));
        // two peaks
        let e = FuzzyNumber::from_breakpoints(vec![
            (0.0, 0.0),
            (1.0, 1.0),
            (2.0, 0.5),
            (3.0, 1.0),
            (4.0, 0.0),
        ]);
        assert!(matches!(e, Err(Error::InvalidFuzzyNumber(ref m)) if m.contains("quasiconcavity")));
        // non-monotone abscissas
        assert!(FuzzyNumber::from_breakpoints(vec![(1.0, 0.0), (0.0, 1.0)]).is_err());
        // boundary grade strictly inside (0, 1)
        assert!(FuzzyNumber::from_breakpoints(vec![(0.0, 0.5), (1.0, 1.0), (2.0, 0.0)]).is_err());
        // grade out of range
        assert!(FuzzyNumber::from_breakpoints(vec![(0.0, 0.0), (1.0, 1.5), (2.0, 0.0)]).is_err());
    }

    #[test]
    fn alpha_cuts() {
        let f = tri(0.0, 1.0, 2.0);
        assert_eq!(f.alpha_cut(0.5).unwrap(), Interval::new(0.5, 1.5));
        assert_eq!(f.alpha_cut(1.0).unwrap(), Interval::new(1.0, 1.0));
        assert_eq!(f.alpha_cut(0.0).unwrap(), f.support());
        assert!(f.alpha_cut(1.5).is_err());
        assert!(f.alpha_cut(-0.1).is_err());
    }

    #[test]
    fn addition() {
        let f = tri(0.0, 1.0, 2.0);
        let g = tri(1.0, 2.0, 4.0);
        assert_eq!(f.add(&g), tri(1.0, 3.0, 6.0));
        assert_eq!(f.add(&zero()), f);
        assert_eq!(f.add(&f.negate()), tri(-2.0, 0.0, 2.0));
    }

    #[test]
    fn addition_with_plateaus() {
        let f = make_trapezoidal(0.0, 1.0, 2.0, 3.0).unwrap();
        let g = make_trapezoidal(1.0, 1.0, 2.0, 5.0).unwrap();
        let s = f.add(&g);
        assert_eq!(s.support(), Interval::new(1.0, 8.0));
        assert_eq!(s.modal_interval(), Interval::new(2.0, 4.0));
        // interior plateau transfers into the sum
        let p = FuzzyNumber::from_breakpoints(vec![
            (0.0, 0.0),
            (1.0, 0.5),
            (2.0, 0.5),
            (3.0, 1.0),
            (4.0, 0.0),
        ])
        .unwrap();
        let s = p.add(&make_crisp(1.0).unwrap());
        assert_eq!(s, p.translate(1.0));
    }

    #[test]
    fn subtraction() {
        assert_eq!(
            make_crisp(5.0).unwrap().subtract(&make_crisp(2.0).unwrap()),
            make_crisp(3.0).unwrap()
        );
        let f = tri(0.0, 1.0, 2.0);
        assert_eq!(f.subtract(&f), tri(-2.0, 0.0, 2.0)); // not crisp 0
        assert_eq!(tri(1.0, 2.0, 3.0).negate(), tri(-3.0, -2.0, -1.0));
    }

    #[test]
    fn scaling_and_translation() {
        let f = tri(0.0, 1.0, 2.0);
        assert_eq!(f.scale(0.5), tri(0.0, 0.5, 1.0));
        assert_eq!(f.scale(0.0), zero());
        assert_eq!(f.scale(1.0), f);
        assert_eq!(f.scale(-1.0), f.negate());
        assert_eq!(f.translate(3.0), tri(3.0, 4.0, 5.0));
        assert_eq!(f.translate(0.0), f);
        assert_eq!(zero().translate(2.5), make_crisp(2.5).unwrap());
    }

    #[test]
    fn areas() {
        assert_eq!(tri(0.0, 1.0, 2.0).area(), 1.0);
        assert_eq!(make_crisp(7.0).unwrap().area(), 0.0);
        assert_eq!(make_trapezoidal(0.0, 1.0, 2.0, 3.0).unwrap().area(), 2.0);
        let f = tri(0.0, 1.0, 2.0);
        assert!((f.scale(-2.0).area() - 2.0 * f.area()).abs() < 1e-12);
    }

    #[test]
    fn serde_forms() {
        let f: FuzzyNumber = serde_json::from_str(r#"{"tri": [0, 1, 2]}"#).unwrap();
        assert_eq!(f, tri(0.0, 1.0, 2.0));
        let f: FuzzyNumber = serde_json::from_str(r#"{"crisp": 3}"#).unwrap();
        assert_eq!(f, make_crisp(3.0).unwrap());
        let f: FuzzyNumber = serde_json::from_str(r#"{"trap": [0, 1, 2, 3]}"#).unwrap();
        assert_eq!(f, make_trapezoidal(0.0, 1.0, 2.0, 3.0).unwrap());
        let f: FuzzyNumber = serde_json::from_str(r#"[[0, 0], [1, 1], [2, 0]]"#).unwrap();
        assert_eq!(f, tri(0.0, 1.0, 2.0));
        let s = serde_json::to_string(&f).unwrap();
        assert_eq!(s, "[[0.0,0.0],[1.0,1.0],[2.0,0.0]]");
        let g: FuzzyNumber = serde_json::from_str(&s).unwrap();
        assert_eq!(f, g);
        assert!(serde_json::from_str::<FuzzyNumber>(r#"{"tri": [2, 1, 0]}"#).is_err());
    }
}
