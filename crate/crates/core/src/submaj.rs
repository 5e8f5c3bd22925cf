//! Logarithmic, p- and φ-submajorisation between singular value functions.
//!
//! All three relations compare cumulative integrals `t -> ∫_0^t g(μ_s) ds`.
//! The integrands are piecewise constant, so the difference of the two
//! cumulative integrals is piecewise linear in `t` and it is enough to look at
//! the union of both breakpoint sets. A dense grid can be requested instead
//! for auditing that claim.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{self, ComplexMatrix, C64, JACOBI_TOL};
use crate::spectral::{self, HERMITIAN_TOL};
use crate::stepfn::{IntervalSet, StepFunction};

/// Outcome of a relation check at its worst evaluation point.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RelationReport {
    pub holds: bool,
    pub worst_t: f64,
    pub lhs_at_worst: f64,
    pub rhs_at_worst: f64,
    /// `rhs - lhs` minimized over the evaluation points.
    pub slack: f64,
}

/// Where cumulative integrals are compared.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Evaluation {
    Breakpoints,
    DenseGrid { step: f64 },
}

fn evaluation_points(f: &StepFunction, g: &StepFunction, eval: Evaluation) -> Vec<f64> {
    match eval {
        Evaluation::Breakpoints => f
            .merged_breakpoints(g)
            .into_iter()
            .filter(|&t| t > 0.0)
            .collect(),
        Evaluation::DenseGrid { step } => {
            let m = (1.0 / step).ceil() as usize;
            (1..=m).map(|i| (i as f64 * step).min(1.0)).collect()
        }
    }
}

/// `rhs - lhs`, where a `-inf` left side always passes.
pub(crate) fn signed_slack(lhs: f64, rhs: f64) -> f64 {
    if lhs == f64::NEG_INFINITY {
        f64::INFINITY
    } else if rhs == f64::NEG_INFINITY {
        f64::NEG_INFINITY
    } else {
        rhs - lhs
    }
}

fn compare_cumulative(
    f: &StepFunction,
    g: &StepFunction,
    integrand: impl Fn(f64) -> f64,
    tol: f64,
    eval: Evaluation,
) -> RelationReport {
    let mut worst: Option<RelationReport> = None;
    for t in evaluation_points(f, g, eval) {
        let k = IntervalSet::prefix(t).expect("t in (0, 1]");
        let lhs = f.integrate_map(&k, &integrand);
        let rhs = g.integrate_map(&k, &integrand);
        let slack = signed_slack(lhs, rhs);
        let better = match &worst {
            None => true,
            Some(w) => slack < w.slack || (slack.is_nan() && !w.slack.is_nan()),
        };
        if better {
            worst = Some(RelationReport {
                holds: false,
                worst_t: t,
                lhs_at_worst: lhs,
                rhs_at_worst: rhs,
                slack,
            });
        }
    }
    let mut w = worst.expect("at least the point t = 1");
    w.holds = w.slack >= -tol;
    w
}

/// `f ≺≺_log g`: `∫_0^t log f ≤ ∫_0^t log g` for all `t`.
pub fn log_submaj_fn(
    f: &StepFunction,
    g: &StepFunction,
    tol: f64,
    eval: Evaluation,
) -> RelationReport {
    compare_cumulative(f, g, f64::ln, tol, eval)
}

/// `f ≺≺_p g`: `∫_0^t f^p ≤ ∫_0^t g^p` for all `t`.
pub fn p_submaj_fn(
    f: &StepFunction,
    g: &StepFunction,
    p: f64,
    tol: f64,
    eval: Evaluation,
) -> RelationReport {
    compare_cumulative(f, g, |v| v.powf(p), tol, eval)
}

/// `∫_0^t φ(f) ≤ ∫_0^t φ(g)` for all `t`.
pub fn phi_submaj_fn(
    f: &StepFunction,
    g: &StepFunction,
    phi: impl Fn(f64) -> f64,
    tol: f64,
    eval: Evaluation,
) -> RelationReport {
    compare_cumulative(f, g, phi, tol, eval)
}

/// `x ≺≺_log y`, i.e. `Λ_t(x) ≤ Λ_t(y)` for every `t`, compared in log space
/// with absolute tolerance `tol`.
pub fn log_submaj(x: &ComplexMatrix, y: &ComplexMatrix, tol: f64) -> Result<RelationReport> {
    Ok(log_submaj_fn(
        &spectral::mu(x)?,
        &spectral::mu(y)?,
        tol,
        Evaluation::Breakpoints,
    ))
}

/// `x ≺≺_p y`.
pub fn p_submaj(x: &ComplexMatrix, y: &ComplexMatrix, p: f64, tol: f64) -> Result<RelationReport> {
    if !(p > 0.0) {
        return Err(Error::OutOfDomain {
            value: p,
            domain: "(0, inf)",
        });
    }
    Ok(p_submaj_fn(
        &spectral::mu(x)?,
        &spectral::mu(y)?,
        p,
        tol,
        Evaluation::Breakpoints,
    ))
}

/// One condition of the equivalence battery for positive invertible pairs.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "condition")]
pub enum Condition {
    /// `I + r·x ≺≺_log I + r·y`
    ShiftedLog { r: f64 },
    /// `x ≺≺_p y`, `0 < p < 1`
    Power { p: f64 },
    /// `x ≺≺_log y`
    Log,
    /// `∫_0^t φ(μ(x)) ≤ ∫_0^t φ(μ(y))`
    Phi { phi: PhiFamily },
}

/// Sampled non-decreasing `φ` with `φ(0) = 0` and `t -> φ(e^t)` convex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum PhiFamily {
    Sqrt,
    Square,
    Log1p,
}

impl PhiFamily {
    pub const ALL: [PhiFamily; 3] = [PhiFamily::Sqrt, PhiFamily::Square, PhiFamily::Log1p];

    pub fn eval(self, t: f64) -> f64 {
        match self {
            PhiFamily::Sqrt => t.sqrt(),
            PhiFamily::Square => t * t,
            PhiFamily::Log1p => t.ln_1p(),
        }
    }
}

pub const BATTERY_R: [f64; 4] = [0.1, 1.0, 10.0, 100.0];
pub const BATTERY_P: [f64; 3] = [0.25, 0.5, 0.75];

#[derive(Debug, Clone, Serialize)]
pub struct BatteryEntry {
    pub condition: Condition,
    pub report: RelationReport,
}

#[derive(Debug, Clone, Serialize)]
pub struct Battery {
    pub entries: Vec<BatteryEntry>,
    /// `false` iff `x ≺≺_log y` holds while some sampled consequence fails.
    pub consistent: bool,
}

impl Battery {
    pub fn log_holds(&self) -> bool {
        self.entries
            .iter()
            .find(|e| e.condition == Condition::Log)
            .map(|e| e.report.holds)
            .unwrap_or(false)
    }

    pub fn all_hold(&self) -> bool {
        self.entries.iter().all(|e| e.report.holds)
    }
}

fn check_positive_invertible(x: &ComplexMatrix) -> Result<()> {
    if !x.is_hermitian(HERMITIAN_TOL) {
        return Err(Error::NotPositiveInvertible(f64::NAN));
    }
    let eig = linalg::herm_eig(&x.re_part(), JACOBI_TOL)?;
    let low = *eig.eigenvalues.last().unwrap();
    if !(low > 0.0) {
        return Err(Error::NotPositiveInvertible(low));
    }
    Ok(())
}

/// Evaluates the four equivalent conditions on sampled parameters and reports
/// whether log submajorisation, when it holds, is matched by every other condition.
pub fn remark26_battery(x: &ComplexMatrix, y: &ComplexMatrix, tol: f64) -> Result<Battery> {
    check_positive_invertible(x)?;
    check_positive_invertible(y)?;
    let mx = spectral::mu(x)?;
    let my = spectral::mu(y)?;
    let eval = Evaluation::Breakpoints;
    let mut entries = Vec::new();

    for r in BATTERY_R {
        let one = C64::new(1.0, 0.0);
        let lhs = x.scale_real(r).add_identity(one);
        let rhs = y.scale_real(r).add_identity(one);
        entries.push(BatteryEntry {
            condition: Condition::ShiftedLog { r },
            report: log_submaj(&lhs, &rhs, tol)?,
        });
    }
    for p in BATTERY_P {
        entries.push(BatteryEntry {
            condition: Condition::Power { p },
            report: p_submaj_fn(&mx, &my, p, tol, eval),
        });
    }
    entries.push(BatteryEntry {
        condition: Condition::Log,
        report: log_submaj_fn(&mx, &my, tol, eval),
    });
    for phi in PhiFamily::ALL {
        entries.push(BatteryEntry {
            condition: Condition::Phi { phi },
            report: phi_submaj_fn(&mx, &my, |v| phi.eval(v), tol, eval),
        });
    }

    let log_holds = entries
        .iter()
        .any(|e| e.condition == Condition::Log && e.report.holds);
    let consistent = !log_holds || entries.iter().all(|e| e.report.holds);
    Ok(Battery {
        entries,
        consistent,
    })
}
