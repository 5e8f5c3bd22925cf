//! Non-increasing step functions on `[0, 1)` and finite unions of intervals.
//!
//! A [`StepFunction`] stores breakpoints `0 = t_0 < t_1 < ... < t_m = 1` and
//! values `v_1 > v_2 > ... > v_m`, value `v_i` living on piece `i`. Two
//! evaluation conventions are supported:
//!
//! * [`StepFunction::eval_right`] reads piece `i` on `[t_{i-1}, t_i)`, which is
//!   the right-continuous singular value function `mu_t`;
//! * [`StepFunction::eval_left`] reads piece `i` on `(t_{i-1}, t_i]`, which is
//!   the left-continuous variant `mu^l_t`.
//!
//! The two agree off the breakpoints, so every integral in this module is
//! insensitive to the convention.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Add;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Sub-intervals shorter than this are treated as breakpoint jitter when two
/// step functions are compared piece by piece.
pub const SLIVER: f64 = 1e-12;

/// A logarithmic integral, which is either finite or `-inf` (a zero value was
/// integrated against `log` on a set of positive measure).
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ExtendedLogValue {
    Finite(f64),
    NegInfinity,
}

impl ExtendedLogValue {
    pub fn from_f64(v: f64) -> Self {
        if v == f64::NEG_INFINITY {
            ExtendedLogValue::NegInfinity
        } else {
            ExtendedLogValue::Finite(v)
        }
    }

    pub fn to_f64(self) -> f64 {
        match self {
            ExtendedLogValue::Finite(v) => v,
            ExtendedLogValue::NegInfinity => f64::NEG_INFINITY,
        }
    }

    pub fn is_neg_infinity(self) -> bool {
        matches!(self, ExtendedLogValue::NegInfinity)
    }

    /// `exp` of the value; `-inf` maps to `0`.
    pub fn exp(self) -> f64 {
        match self {
            ExtendedLogValue::Finite(v) => v.exp(),
            ExtendedLogValue::NegInfinity => 0.0,
        }
    }

    /// Multiplies by a non-negative scalar, with `0 * -inf = 0`.
    pub fn scale(self, c: f64) -> Self {
        debug_assert!(c >= 0.0);
        match self {
            ExtendedLogValue::Finite(v) => ExtendedLogValue::Finite(c * v),
            ExtendedLogValue::NegInfinity if c == 0.0 => ExtendedLogValue::Finite(0.0),
            ExtendedLogValue::NegInfinity => ExtendedLogValue::NegInfinity,
        }
    }
}

impl Add for ExtendedLogValue {
    type Output = ExtendedLogValue;

    fn add(self, rhs: Self) -> Self {
        match (self, rhs) {
            (ExtendedLogValue::Finite(a), ExtendedLogValue::Finite(b)) => {
                ExtendedLogValue::Finite(a + b)
            }
            _ => ExtendedLogValue::NegInfinity,
        }
    }
}

impl From<ExtendedLogValue> for f64 {
    fn from(v: ExtendedLogValue) -> f64 {
        v.to_f64()
    }
}

/// One constant piece `[start, end)` of a step function.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Piece {
    pub start: f64,
    pub end: f64,
    pub value: f64,
}

impl Piece {
    pub fn len(&self) -> f64 {
        self.end - self.start
    }

    pub fn midpoint(&self) -> f64 {
        0.5 * (self.start + self.end)
    }
}

/// A non-increasing step function on `[0, 1)` in canonical form.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "StepRecord", into = "StepRecord")]
pub struct StepFunction {
    breaks: Vec<f64>,
    values: Vec<f64>,
}

/// Flat serialized form `{breakpoints: [...], values: [...]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct StepRecord {
    pub breakpoints: Vec<f64>,
    pub values: Vec<f64>,
}

impl TryFrom<StepRecord> for StepFunction {
    type Error = Error;

    fn try_from(r: StepRecord) -> Result<Self> {
        make_step(&r.breakpoints, &r.values)
    }
}

impl From<StepFunction> for StepRecord {
    fn from(f: StepFunction) -> Self {
        StepRecord {
            breakpoints: f.breaks,
            values: f.values,
        }
    }
}

/// Builds a canonical step function, merging adjacent equal values.
pub fn make_step(breaks: &[f64], vals: &[f64]) -> Result<StepFunction> {
    if vals.is_empty() || breaks.len() != vals.len() + 1 {
        return Err(Error::NotPartition(format!(
            "{} breakpoints for {} values",
            breaks.len(),
            vals.len()
        )));
    }
    if breaks[0] != 0.0 || *breaks.last().unwrap() != 1.0 {
        return Err(Error::NotPartition("breakpoints must run from 0 to 1".into()));
    }
    if let Some(w) = breaks.windows(2).find(|w| !(w[0] < w[1])) {
        return Err(Error::NotPartition(format!(
            "breakpoints not strictly increasing at {} -> {}",
            w[0], w[1]
        )));
    }
    if let Some(v) = vals.iter().find(|v| !v.is_finite()) {
        return Err(Error::NotPartition(format!("non-finite value {v}")));
    }
    for (i, w) in vals.windows(2).enumerate() {
        if w[0] < w[1] {
            return Err(Error::NotMonotone {
                index: i + 1,
                left: w[0],
                right: w[1],
            });
        }
    }
    let mut out_breaks = vec![0.0];
    let mut out_vals: Vec<f64> = Vec::with_capacity(vals.len());
    for (i, &v) in vals.iter().enumerate() {
        if out_vals.last() == Some(&v) {
            *out_breaks.last_mut().unwrap() = breaks[i + 1];
        } else {
            out_vals.push(v);
            out_breaks.push(breaks[i + 1]);
        }
    }
    Ok(StepFunction {
        breaks: out_breaks,
        values: out_vals,
    })
}

/// Decreasing rearrangement of a simple function given as `(value, measure)`
/// pairs. The result is the spectral scale of the function in `L^inf[0, 1]`.
pub fn rearrange(pieces: &[(f64, f64)]) -> Result<StepFunction> {
    let total: f64 = pieces.iter().map(|p| p.1).sum();
    if pieces.is_empty()
        || pieces.iter().any(|p| !(p.1 >= 0.0) || !p.0.is_finite())
        || (total - 1.0).abs() > 1e-12
    {
        return Err(Error::MeasureMismatch(total));
    }
    let mut sorted: Vec<(f64, f64)> = pieces.iter().copied().filter(|p| p.1 > 0.0).collect();
    // stable: ties keep input order, which the canonical form then merges
    sorted.sort_by(|a, b| b.0.partial_cmp(&a.0).unwrap_or(Ordering::Equal));

    let mut breaks = vec![0.0];
    let mut vals = Vec::with_capacity(sorted.len());
    let mut acc = 0.0;
    for (i, &(v, m)) in sorted.iter().enumerate() {
        acc += m;
        let b = if i + 1 == sorted.len() { 1.0 } else { acc.min(1.0) };
        if b <= *breaks.last().unwrap() {
            continue;
        }
        breaks.push(b);
        vals.push(v);
    }
    if *breaks.last().unwrap() != 1.0 {
        *breaks.last_mut().unwrap() = 1.0;
    }
    make_step(&breaks, &vals)
}

impl StepFunction {
    pub fn constant(c: f64) -> Self {
        make_step(&[0.0, 1.0], &[c]).expect("finite constant")
    }

    /// Step function with value `vals[j]` on `[j/n, (j+1)/n)`, `n = vals.len()`.
    /// Breakpoints are built as `j as f64 / n as f64`.
    pub fn dyadic(vals: &[f64]) -> Result<Self> {
        let n = vals.len();
        let breaks: Vec<f64> = (0..=n).map(|j| j as f64 / n as f64).collect();
        make_step(&breaks, vals)
    }

    pub fn breakpoints(&self) -> &[f64] {
        &self.breaks
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn num_pieces(&self) -> usize {
        self.values.len()
    }

    pub fn pieces(&self) -> impl Iterator<Item = Piece> + '_ {
        self.values.iter().enumerate().map(move |(i, &v)| Piece {
            start: self.breaks[i],
            end: self.breaks[i + 1],
            value: v,
        })
    }

    pub fn sup(&self) -> f64 {
        self.values[0]
    }

    pub fn inf(&self) -> f64 {
        *self.values.last().unwrap()
    }

    /// Value under the `[t_{i-1}, t_i)` convention.
    pub fn eval_right(&self, t: f64) -> Result<f64> {
        if !(0.0..1.0).contains(&t) {
            return Err(Error::OutOfDomain {
                value: t,
                domain: "[0, 1)",
            });
        }
        let idx = self.breaks.partition_point(|&b| b <= t);
        Ok(self.values[idx - 1])
    }

    /// Value under the `(t_{i-1}, t_i]` convention.
    pub fn eval_left(&self, t: f64) -> Result<f64> {
        if !(t > 0.0 && t <= 1.0) {
            return Err(Error::OutOfDomain {
                value: t,
                domain: "(0, 1]",
            });
        }
        let idx = self.breaks.partition_point(|&b| b < t);
        Ok(self.values[idx - 1])
    }

    /// `s -> -eval_left(self, 1 - s)`: the spectral scale of `-x` when `self`
    /// is the singular value function of a positive `x`.
    pub fn reflect_neg(&self) -> Result<StepFunction> {
        if let Some(&v) = self.values.iter().find(|&&v| v < 0.0) {
            return Err(Error::NegativeValues(v));
        }
        Ok(self.reverse_with(|v| -v))
    }

    /// The step function whose left evaluation at `t` is
    /// `1 / eval_right(self, 1 - t)`.
    pub fn invert_flip(&self) -> Result<StepFunction> {
        if self.values.iter().any(|&v| v <= 0.0) {
            return Err(Error::NotInvertible);
        }
        Ok(self.reverse_with(|v| 1.0 / v))
    }

    // Piece [t_{i-1}, t_i) is sent to [1 - t_i, 1 - t_{i-1}) with value g(v_i);
    // g must be decreasing so the result stays non-increasing.
    fn reverse_with(&self, g: impl Fn(f64) -> f64) -> StepFunction {
        let m = self.values.len();
        let mut breaks = Vec::with_capacity(m + 1);
        breaks.push(0.0);
        for i in (1..m).rev() {
            breaks.push(1.0 - self.breaks[i]);
        }
        breaks.push(1.0);
        let vals: Vec<f64> = self.values.iter().rev().map(|&v| g(v)).collect();
        make_step(&breaks, &vals).expect("reflection of a canonical step function")
    }

    /// `alpha * f` for `alpha >= 0`.
    pub fn scale(&self, alpha: f64) -> Result<StepFunction> {
        if !(alpha >= 0.0) {
            return Err(Error::OutOfDomain {
                value: alpha,
                domain: "[0, inf)",
            });
        }
        let vals: Vec<f64> = self.values.iter().map(|v| alpha * v).collect();
        make_step(&self.breaks, &vals)
    }

    /// `f + a`.
    pub fn shift(&self, a: f64) -> StepFunction {
        let vals: Vec<f64> = self.values.iter().map(|v| v + a).collect();
        make_step(&self.breaks, &vals).expect("shift preserves monotonicity")
    }

    /// `sum_pieces m(piece ∩ K) * g(v_piece)`; pieces missing `K` contribute
    /// nothing even when `g(v) = -inf`.
    pub fn integrate_map(&self, k: &IntervalSet, g: impl Fn(f64) -> f64) -> f64 {
        let mut acc = 0.0;
        for p in self.pieces() {
            let m = k.overlap(p.start, p.end);
            if m > 0.0 {
                acc += m * g(p.value);
            }
        }
        acc
    }

    /// `∫_K log f`, exactly, piece by piece.
    pub fn integrate_log(&self, k: &IntervalSet) -> ExtendedLogValue {
        ExtendedLogValue::from_f64(self.integrate_map(k, f64::ln))
    }

    /// `∫_K g(f(1 - s)) ds`, by the change of variables `u = 1 - s`.
    pub fn integrate_map_reflected(&self, k: &IntervalSet, g: impl Fn(f64) -> f64) -> f64 {
        self.integrate_map(&k.reflect(), g)
    }

    /// Sorted union of both breakpoint sets.
    pub fn merged_breakpoints(&self, other: &StepFunction) -> Vec<f64> {
        let mut all: Vec<f64> = self
            .breaks
            .iter()
            .chain(other.breaks.iter())
            .copied()
            .collect();
        all.sort_by(|a, b| a.partial_cmp(b).unwrap());
        all.dedup();
        all
    }

    /// The piece of the common refinement where the two functions differ the
    /// most, measured by `|a - b| / (1 + max(|a|, |b|))`. Sub-intervals shorter
    /// than [`SLIVER`] are skipped.
    pub fn max_discrepancy(&self, other: &StepFunction) -> Discrepancy {
        let grid = self.merged_breakpoints(other);
        let mut worst = Discrepancy {
            at: 0.5,
            left: self.values[0],
            right: other.values[0],
        };
        let mut worst_score = -1.0;
        for w in grid.windows(2) {
            if w[1] - w[0] <= SLIVER {
                continue;
            }
            let mid = 0.5 * (w[0] + w[1]);
            let a = self.eval_right(mid).unwrap();
            let b = other.eval_right(mid).unwrap();
            let score = (a - b).abs() / (1.0 + a.abs().max(b.abs()));
            if score > worst_score {
                worst_score = score;
                worst = Discrepancy {
                    at: mid,
                    left: a,
                    right: b,
                };
            }
        }
        worst
    }
}

impl fmt::Display for StepFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.pieces().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{}·χ[{}, {})", p.value, p.start, p.end)?;
        }
        Ok(())
    }
}

/// Worst-piece comparison of two step functions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Discrepancy {
    pub at: f64,
    pub left: f64,
    pub right: f64,
}

impl Discrepancy {
    pub fn abs(&self) -> f64 {
        (self.left - self.right).abs()
    }
}

/// A finite union of disjoint half-open intervals `[a, b)` in `[0, 1]`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<(f64, f64)>", into = "Vec<(f64, f64)>")]
pub struct IntervalSet {
    intervals: Vec<(f64, f64)>,
}

impl TryFrom<Vec<(f64, f64)>> for IntervalSet {
    type Error = Error;

    fn try_from(v: Vec<(f64, f64)>) -> Result<Self> {
        IntervalSet::new(v)
    }
}

impl From<IntervalSet> for Vec<(f64, f64)> {
    fn from(k: IntervalSet) -> Self {
        k.intervals
    }
}

impl IntervalSet {
    /// Validates sorted, disjoint, non-empty intervals inside `[0, 1]`;
    /// touching intervals are merged.
    pub fn new(intervals: Vec<(f64, f64)>) -> Result<Self> {
        let mut out: Vec<(f64, f64)> = Vec::with_capacity(intervals.len());
        for &(a, b) in &intervals {
            if !(0.0 <= a && a < b && b <= 1.0) {
                return Err(Error::InvalidIntervals(format!("bad interval [{a}, {b})")));
            }
            match out.last_mut() {
                Some(last) if a < last.1 => {
                    return Err(Error::InvalidIntervals(format!(
                        "[{a}, {b}) overlaps or precedes [{}, {})",
                        last.0, last.1
                    )))
                }
                Some(last) if a == last.1 => last.1 = b,
                _ => out.push((a, b)),
            }
        }
        Ok(IntervalSet { intervals: out })
    }

    pub fn empty() -> Self {
        IntervalSet { intervals: vec![] }
    }

    pub fn unit() -> Self {
        IntervalSet {
            intervals: vec![(0.0, 1.0)],
        }
    }

    pub fn interval(a: f64, b: f64) -> Result<Self> {
        IntervalSet::new(vec![(a, b)])
    }

    /// `[0, t)`; empty for `t = 0`.
    pub fn prefix(t: f64) -> Result<Self> {
        if t == 0.0 {
            Ok(IntervalSet::empty())
        } else {
            IntervalSet::interval(0.0, t)
        }
    }

    /// `⋃_{k ∈ indices} [(k-1)/n, k/n)` for 1-based indices.
    pub fn dyadic(n: usize, indices: &[usize]) -> Result<Self> {
        let mut idx: Vec<usize> = indices.to_vec();
        idx.sort_unstable();
        idx.dedup();
        if idx.iter().any(|&k| k == 0 || k > n) {
            return Err(Error::InvalidIntervals(format!(
                "indices {indices:?} outside 1..={n}"
            )));
        }
        IntervalSet::new(
            idx.iter()
                .map(|&k| ((k - 1) as f64 / n as f64, k as f64 / n as f64))
                .collect(),
        )
    }

    pub fn intervals(&self) -> &[(f64, f64)] {
        &self.intervals
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    pub fn measure(&self) -> f64 {
        self.intervals.iter().map(|(a, b)| b - a).sum()
    }

    /// Lebesgue measure of `K ∩ [a, b)`.
    pub fn overlap(&self, a: f64, b: f64) -> f64 {
        self.intervals
            .iter()
            .map(|&(c, d)| (d.min(b) - c.max(a)).max(0.0))
            .sum()
    }

    /// `{1 - s : s ∈ K}` (up to endpoints).
    pub fn reflect(&self) -> IntervalSet {
        IntervalSet {
            intervals: self
                .intervals
                .iter()
                .rev()
                .map(|&(a, b)| (1.0 - b, 1.0 - a))
                .collect(),
        }
    }

    pub fn complement(&self) -> IntervalSet {
        let mut out = Vec::new();
        let mut cursor = 0.0;
        for &(a, b) in &self.intervals {
            if a > cursor {
                out.push((cursor, a));
            }
            cursor = b;
        }
        if cursor < 1.0 {
            out.push((cursor, 1.0));
        }
        IntervalSet { intervals: out }
    }

    /// Union of two disjoint sets.
    pub fn disjoint_union(&self, other: &IntervalSet) -> Result<IntervalSet> {
        let mut all: Vec<(f64, f64)> = self
            .intervals
            .iter()
            .chain(other.intervals.iter())
            .copied()
            .collect();
        all.sort_by(|x, y| x.0.partial_cmp(&y.0).unwrap());
        IntervalSet::new(all)
    }
}

impl fmt::Display for IntervalSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.intervals.is_empty() {
            return write!(f, "∅");
        }
        for (i, (a, b)) in self.intervals.iter().enumerate() {
            if i > 0 {
                write!(f, " ∪ ")?;
            }
            write!(f, "[{a}, {b})")?;
        }
        Ok(())
    }
}
