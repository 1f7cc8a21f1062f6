//! General piecewise-linear functions on the real line and the exact integral
//! primitives built on them: Hamming distance, positive-part distance, and
//! pointwise min/max.
//!
//! Unlike [`FuzzyNumber`](crate::fuzzy::FuzzyNumber), these functions need not
//! be normalized or quasiconcave, and they carry constant tail values so the
//! monotone envelopes of the ranking module (limit 0 on one side, 1 on the
//! other) fit the same representation. Repeated abscissas encode a jump
//! discontinuity; all integrals are insensitive to values on measure-zero sets.

use crate::error::{Error, Result};
use crate::fuzzy::FuzzyNumber;

#[derive(Debug, Clone, PartialEq)]
pub struct PwlFunction {
    /// Breakpoints with nondecreasing abscissas; equal abscissas form a jump.
    points: Vec<(f64, f64)>,
    /// Constant value left of the first breakpoint.
    left_tail: f64,
    /// Constant value right of the last breakpoint.
    right_tail: f64,
}

impl PwlFunction {
    pub fn new(points: Vec<(f64, f64)>, left_tail: f64, right_tail: f64) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::InvalidFuzzyNumber(
                "piecewise-linear function needs at least one breakpoint".into(),
            ));
        }
        for &(x, y) in &points {
            if !x.is_finite() || !y.is_finite() {
                return Err(Error::NonFinite("piecewise-linear breakpoint"));
            }
        }
        if points.windows(2).any(|w| w[1].0 < w[0].0) {
            return Err(Error::InvalidFuzzyNumber(
                "piecewise-linear abscissas must be nondecreasing".into(),
            ));
        }
        Ok(PwlFunction {
            points,
            left_tail,
            right_tail,
        })
    }

    /// Membership function of a fuzzy number, tails 0.
    pub fn from_fuzzy(f: &FuzzyNumber) -> Self {
        PwlFunction {
            points: f.points().to_vec(),
            left_tail: 0.0,
            right_tail: 0.0,
        }
    }

    pub fn points(&self) -> &[(f64, f64)] {
        &self.points
    }

    pub fn left_tail(&self) -> f64 {
        self.left_tail
    }

    pub fn right_tail(&self) -> f64 {
        self.right_tail
    }

    /// Limit from the right, `f(x+)`.
    pub fn eval_right(&self, x: f64) -> f64 {
        let pts = &self.points;
        // last index with abscissa <= x
        let j = pts.partition_point(|p| p.0 <= x);
        if j == 0 {
            return self.left_tail;
        }
        let j = j - 1;
        if j + 1 == pts.len() {
            // at or past the final breakpoint the right limit is the tail
            return self.right_tail;
        }
        let (x0, y0) = pts[j];
        let (x1, y1) = pts[j + 1];
        if x0 == x {
            return y0;
        }
        if x1 == x0 {
            return y1;
        }
        y0 + (y1 - y0) * (x - x0) / (x1 - x0)
    }

    /// Limit from the left, `f(x-)`.
    pub fn eval_left(&self, x: f64) -> f64 {
        let pts = &self.points;
        // first index with abscissa >= x
        let i = pts.partition_point(|p| p.0 < x);
        if i == 0 {
            return self.left_tail;
        }
        if i == pts.len() {
            return self.right_tail;
        }
        let (x1, y1) = pts[i];
        if x1 == x {
            return y1;
        }
        let (x0, y0) = pts[i - 1];
        if x1 == x0 {
            return y0;
        }
        y0 + (y1 - y0) * (x - x0) / (x1 - x0)
    }

    /// Upper value at a point: the larger of the one-sided limits and any
    /// breakpoint value sitting exactly at `x`. Matches the upper-semicontinuous
    /// reading of fuzzy memberships with vertical sides.
    pub fn value_at(&self, x: f64) -> f64 {
        let mut v = self.eval_left(x).max(self.eval_right(x));
        for &(px, py) in &self.points {
            if px == x && py > v {
                v = py;
            }
        }
        v
    }

    fn abscissas(&self) -> impl Iterator<Item = f64> + '_ {
        self.points.iter().map(|p| p.0)
    }
}

fn merged_abscissas(f: &PwlFunction, g: &PwlFunction) -> Vec<f64> {
    let mut xs: Vec<f64> = f.abscissas().chain(g.abscissas()).collect();
    xs.sort_by(|a, b| a.partial_cmp(b).unwrap());
    xs.dedup();
    xs
}

/// Signed trapezoid area of a linear piece.
fn trapezoid(x0: f64, x1: f64, y0: f64, y1: f64) -> f64 {
    (x1 - x0) * (y0 + y1) / 2.0
}

/// Integrates `transform(f, g)` over a segment on which both functions are
/// linear, subdividing exactly at the crossing of the two pieces if one exists.
fn segment_integral(
    x0: f64,
    x1: f64,
    f0: f64,
    f1: f64,
    g0: f64,
    g1: f64,
    pick: impl Fn(f64, f64, f64, f64, f64, f64) -> f64,
) -> f64 {
    let h0 = f0 - g0;
    let h1 = f1 - g1;
    if h0 * h1 < 0.0 {
        // exact linear intersection, no tolerance
        let t = h0 / (h0 - h1);
        let xc = x0 + (x1 - x0) * t;
        let fc = f0 + (f1 - f0) * t;
        let gc = g0 + (g1 - g0) * t;
        pick(x0, xc, f0, fc, g0, gc) + pick(xc, x1, fc, f1, gc, g1)
    } else {
        pick(x0, x1, f0, f1, g0, g1)
    }
}

fn integrate_pair(
    f: &PwlFunction,
    g: &PwlFunction,
    pick: impl Fn(f64, f64, f64, f64, f64, f64) -> f64 + Copy,
) -> f64 {
    let xs = merged_abscissas(f, g);
    let mut total = 0.0;
    for w in xs.windows(2) {
        let (x0, x1) = (w[0], w[1]);
        if x1 == x0 {
            continue;
        }
        total += segment_integral(
            x0,
            x1,
            f.eval_right(x0),
            f.eval_left(x1),
            g.eval_right(x0),
            g.eval_left(x1),
            pick,
        );
    }
    total
}

/// `integral of |f - g|`. Errors if the integrand does not vanish in the tails.
pub fn hamming_distance(f: &PwlFunction, g: &PwlFunction) -> Result<f64> {
    if f.left_tail != g.left_tail || f.right_tail != g.right_tail {
        return Err(Error::DivergentIntegral);
    }
    Ok(integrate_pair(f, g, |x0, x1, f0, f1, g0, g1| {
        trapezoid(x0, x1, f0 - g0, f1 - g1).abs()
    }))
}

/// `integral of max(0, f - g)`. Errors if `f > g` persists into a tail.
pub fn positive_part_distance(f: &PwlFunction, g: &PwlFunction) -> Result<f64> {
    if f.left_tail > g.left_tail || f.right_tail > g.right_tail {
        return Err(Error::DivergentIntegral);
    }
    Ok(integrate_pair(f, g, |x0, x1, f0, f1, g0, g1| {
        let a = trapezoid(x0, x1, f0 - g0, f1 - g1);
        if a > 0.0 {
            a
        } else {
            0.0
        }
    }))
}

/// `integral of min(f, g)`. Errors unless the minimum vanishes in both tails.
pub fn min_integral(f: &PwlFunction, g: &PwlFunction) -> Result<f64> {
    if f.left_tail.min(g.left_tail) != 0.0 || f.right_tail.min(g.right_tail) != 0.0 {
        return Err(Error::DivergentIntegral);
    }
    Ok(integrate_pair(f, g, |x0, x1, f0, f1, g0, g1| {
        // sign of f - g is constant on the piece after crossing subdivision
        if f0 - g0 + (f1 - g1) <= 0.0 {
            trapezoid(x0, x1, f0, f1)
        } else {
            trapezoid(x0, x1, g0, g1)
        }
    }))
}

/// Pointwise minimum of two memberships, exact via merged breakpoints plus
/// crossing subdivision. The result need not be normalized.
pub fn pointwise_min(f: &PwlFunction, g: &PwlFunction) -> PwlFunction {
    combine_pointwise(f, g, f64::min)
}

/// Pointwise maximum, same construction.
pub fn pointwise_max(f: &PwlFunction, g: &PwlFunction) -> PwlFunction {
    combine_pointwise(f, g, f64::max)
}

fn combine_pointwise(f: &PwlFunction, g: &PwlFunction, op: fn(f64, f64) -> f64) -> PwlFunction {
    let xs = merged_abscissas(f, g);
    let mut pts: Vec<(f64, f64)> = Vec::new();
    let push = |x: f64, y: f64, pts: &mut Vec<(f64, f64)>| {
        if pts.last() != Some(&(x, y)) {
            pts.push((x, y));
        }
    };
    for (k, &x) in xs.iter().enumerate() {
        push(x, op(f.eval_left(x), g.eval_left(x)), &mut pts);
        push(x, op(f.eval_right(x), g.eval_right(x)), &mut pts);
        if k + 1 < xs.len() {
            let x1 = xs[k + 1];
            let (f0, f1) = (f.eval_right(x), f.eval_left(x1));
            let (g0, g1) = (g.eval_right(x), g.eval_left(x1));
            let h0 = f0 - g0;
            let h1 = f1 - g1;
            if h0 * h1 < 0.0 {
                let t = h0 / (h0 - h1);
                push(x + (x1 - x) * t, f0 + (f1 - f0) * t, &mut pts);
            }
        }
    }
    PwlFunction {
        points: pts,
        left_tail: op(f.left_tail, g.left_tail),
        right_tail: op(f.right_tail, g.right_tail),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fuzzy::{make_crisp, make_triangular};

    fn mu(a: f64, b: f64, c: f64) -> PwlFunction {
        PwlFunction::from_fuzzy(&make_triangular(a, b, c).unwrap())
    }

    #[test]
    fn hamming_identity() {
        let f = mu(0.0, 1.0, 2.0);
        assert_eq!(hamming_distance(&f, &f).unwrap(), 0.0);
    }

    #[test]
    fn hamming_step_envelopes() {
        // nondecreasing envelopes of crisp(0) and crisp(1): unit steps
        let s0 = PwlFunction::new(vec![(0.0, 1.0)], 0.0, 1.0).unwrap();
        let s1 = PwlFunction::new(vec![(1.0, 1.0)], 0.0, 1.0).unwrap();
        assert_eq!(hamming_distance(&s0, &s1).unwrap(), 1.0);
    }

    #[test]
    fn hamming_shifted_triangles() {
        // value frozen from a brute-force grid oracle (1e6 points)
        let d = hamming_distance(&mu(0.0, 1.0, 2.0), &mu(1.0, 2.0, 3.0)).unwrap();
        assert!((d - 1.5).abs() < 1e-12, "d = {d}");
    }

    #[test]
    fn hamming_divergent_tails() {
        let step = PwlFunction::new(vec![(0.0, 1.0)], 0.0, 1.0).unwrap();
        let flat = mu(0.0, 1.0, 2.0);
        assert_eq!(hamming_distance(&step, &flat), Err(Error::DivergentIntegral));
    }

    #[test]
    fn min_of_disjoint_supports() {
        let f = mu(0.0, 1.0, 2.0);
        let g = mu(4.0, 5.0, 6.0);
        let m = pointwise_min(&f, &g);
        assert_eq!(min_integral(&f, &g).unwrap(), 0.0);
        for x in [-1.0, 0.5, 1.0, 3.0, 5.0, 7.0] {
            assert_eq!(m.value_at(x), 0.0);
        }
    }

    #[test]
    fn min_peak_at_crossing() {
        let f = mu(0.0, 1.0, 2.0);
        let g = mu(1.0, 2.0, 3.0);
        let m = pointwise_min(&f, &g);
        assert_eq!(m.value_at(1.5), 0.5);
        assert_eq!(m.value_at(1.0), 0.0);
        // idempotence
        let mm = pointwise_min(&f, &f);
        for x in [0.0, 0.3, 1.0, 1.7, 2.0] {
            assert_eq!(mm.value_at(x), f.value_at(x));
        }
    }

    #[test]
    fn crisp_membership_has_zero_area() {
        let c = PwlFunction::from_fuzzy(&make_crisp(3.0).unwrap());
        let z = PwlFunction::from_fuzzy(&make_crisp(0.0).unwrap());
        // measure-zero support: distance to the zero membership is 0
        assert_eq!(min_integral(&c, &c).unwrap(), 0.0);
        assert_eq!(hamming_distance(&c, &z).unwrap(), 0.0);
    }

    #[test]
    fn positive_part_is_one_sided() {
        let f = mu(0.0, 1.0, 2.0);
        let g = mu(1.0, 2.0, 3.0);
        let fw = positive_part_distance(&f, &g).unwrap();
        let bw = positive_part_distance(&g, &f).unwrap();
        let full = hamming_distance(&f, &g).unwrap();
        assert!((fw + bw - full).abs() < 1e-12);
    }
}
