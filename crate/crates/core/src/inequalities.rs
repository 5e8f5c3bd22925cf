//! Checkers for the Harnack-type, Cayley and singular-value inequalities.
//!
//! Every checker returns [`InequalityReport`]s stating `lhs ≤ rhs` with a
//! signed slack `rhs - lhs`; lower bounds are stated as `bound ≤ value`.
//! Pointwise statements compare singular values directly, integral and
//! determinant statements are compared in log space. Statements about a
//! piece `j` of an `n`-point spectrum are evaluated at the piece midpoint
//! `(2j - 1) / 2n`, whose reflection `1 - s` is formed from integers.

use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::linalg::{self, ComplexMatrix, C64, JACOBI_TOL};
use crate::spectral::{self, HERMITIAN_TOL};
use crate::stepfn::{IntervalSet, StepFunction};
use crate::submaj::signed_slack;

/// Relative agreement required between the constructions of the Harnack
/// middle term and for the Cayley difference formula.
pub const CONSTRUCTION_TOL: f64 = 1e-9;

/// Side-condition tolerance for the trace equality in [`check_prop35`].
pub const SIDE_CONDITION_TOL: f64 = 1e-9;

/// Pass iff `slack ≥ -(atol + rtol · max(|lhs|, |rhs|))`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, serde::Deserialize)]
pub struct Tolerance {
    pub atol: f64,
    pub rtol: f64,
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance {
            atol: 1e-9,
            rtol: 1e-9,
        }
    }
}

impl Tolerance {
    pub fn new(atol: f64, rtol: f64) -> Self {
        Tolerance { atol, rtol }
    }

    /// Allowed shortfall for the pair `(lhs, rhs)`; infinite sides are
    /// ignored in the scale.
    pub fn bound(&self, lhs: f64, rhs: f64) -> f64 {
        let finite = |v: f64| if v.is_finite() { v.abs() } else { 0.0 };
        self.atol + self.rtol * finite(lhs).max(finite(rhs))
    }
}

/// Parameters shared by all checkers.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CheckOptions {
    pub tol: Tolerance,
    /// Strict-contraction margin: inputs must satisfy `‖x‖ ≤ 1 - delta`.
    pub delta: f64,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions {
            tol: Tolerance::default(),
            delta: 1e-3,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ReportKind {
    /// `lhs ≤ rhs`.
    Inequality,
    /// `lhs = rhs`; slack is `-|lhs - rhs|`.
    Identity,
    /// Hypothesis not met; nothing was concluded.
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct InequalityReport {
    /// Checker id, e.g. `harnack_upper`.
    pub name: String,
    /// Which statement of the checker, e.g. `pointwise` or `determinant`.
    pub item: String,
    pub lhs: f64,
    pub rhs: f64,
    pub slack: f64,
    pub pass: bool,
    /// The lesser side is `-inf`, so the statement holds without content.
    pub vacuous: bool,
    pub kind: ReportKind,
    pub context: Value,
}

impl InequalityReport {
    pub fn inequality(
        name: &str,
        item: &str,
        lhs: f64,
        rhs: f64,
        tol: &Tolerance,
        context: Value,
    ) -> Self {
        let slack = signed_slack(lhs, rhs);
        InequalityReport {
            name: name.to_string(),
            item: item.to_string(),
            lhs,
            rhs,
            slack,
            pass: slack >= -tol.bound(lhs, rhs),
            vacuous: lhs == f64::NEG_INFINITY,
            kind: ReportKind::Inequality,
            context,
        }
    }

    pub fn identity(
        name: &str,
        item: &str,
        lhs: f64,
        rhs: f64,
        tol: &Tolerance,
        context: Value,
    ) -> Self {
        let gap = if lhs == rhs { 0.0 } else { (lhs - rhs).abs() };
        let slack = if gap.is_nan() { f64::NEG_INFINITY } else { -gap };
        InequalityReport {
            name: name.to_string(),
            item: item.to_string(),
            lhs,
            rhs,
            slack,
            pass: slack >= -tol.bound(lhs, rhs),
            vacuous: false,
            kind: ReportKind::Identity,
            context,
        }
    }

    pub fn skipped(name: &str, item: &str, lhs: f64, rhs: f64, context: Value) -> Self {
        InequalityReport {
            name: name.to_string(),
            item: item.to_string(),
            lhs,
            rhs,
            slack: f64::INFINITY,
            pass: true,
            vacuous: false,
            kind: ReportKind::Skipped,
            context,
        }
    }

    /// The worst discrepancy between two step functions as an identity.
    fn step_identity(
        name: &str,
        item: &str,
        left: &StepFunction,
        right: &StepFunction,
        tol: &Tolerance,
    ) -> Self {
        let d = left.max_discrepancy(right);
        Self::identity(name, item, d.left, d.right, tol, json!({ "t": d.at }))
    }
}

/// Midpoint of piece `j` (1-based) of an `n`-point spectrum and its
/// reflection.
fn piece_midpoint(n: usize, j: usize) -> (f64, f64) {
    let den = (2 * n) as f64;
    (
        (2 * j - 1) as f64 / den,
        (2 * n - 2 * j + 1) as f64 / den,
    )
}

fn at(f: &StepFunction, t: f64) -> f64 {
    f.eval_right(t).expect("t in [0, 1)")
}

fn at_left(f: &StepFunction, t: f64) -> f64 {
    f.eval_left(t).expect("t in (0, 1]")
}

/// `log((1 + v) / (1 - v))`.
fn log_ratio_up(v: f64) -> f64 {
    v.ln_1p() - (-v).ln_1p()
}

fn require_strict_contraction(x: &ComplexMatrix, delta: f64) -> Result<f64> {
    let norm = linalg::op_norm(x);
    if !(norm <= 1.0 - delta) {
        return Err(Error::NotStrictContraction { norm, delta });
    }
    Ok(norm)
}

fn require_hermitian(x: &ComplexMatrix) -> Result<()> {
    let defect = x.hermitian_defect();
    let norm = x.frobenius_norm();
    if defect > HERMITIAN_TOL * norm {
        return Err(Error::NotHermitian(defect / norm));
    }
    Ok(())
}

/// Smallest eigenvalue of a Hermitian matrix, after checking hermiticity.
fn min_eigenvalue(x: &ComplexMatrix) -> Result<f64> {
    require_hermitian(x)?;
    let eig = linalg::herm_eig(&x.re_part(), JACOBI_TOL)?;
    Ok(*eig.eigenvalues.last().unwrap())
}

fn require_positive(x: &ComplexMatrix) -> Result<()> {
    let min = min_eigenvalue(x)?;
    if min < -HERMITIAN_TOL * linalg::op_norm(x).max(1.0) {
        return Err(Error::NotPositive(min));
    }
    Ok(())
}

fn log_det(x: &ComplexMatrix) -> Result<f64> {
    Ok(spectral::log_fk_det(x)?.to_f64())
}

/// `∫_K log f`, `-inf` allowed.
fn int_log(f: &StepFunction, k: &IntervalSet) -> f64 {
    f.integrate_log(k).to_f64()
}

/// `∫_K g(f(1 - s)) ds`.
fn int_reflected(f: &StepFunction, k: &IntervalSet, g: impl Fn(f64) -> f64) -> f64 {
    f.integrate_map_reflected(k, g)
}

fn prefix(t: f64) -> IntervalSet {
    IntervalSet::prefix(t.clamp(0.0, 1.0)).expect("clamped prefix")
}

fn interval_context(k: &IntervalSet) -> Value {
    json!({ "K": k.intervals(), "t": k.measure() })
}

/// The Harnack middle term `A = (I - x*)^{-1}(I - x*x)(I - x)^{-1}` and the
/// factor `S = (I - x*x)^{1/2}(I - x)^{-1}` with `A = S*S`.
#[derive(Debug, Clone, PartialEq)]
pub struct HarnackMiddle {
    pub a: ComplexMatrix,
    pub s: ComplexMatrix,
    /// Largest pairwise relative Frobenius gap between the constructions.
    pub construction_gap: f64,
}

/// Builds `A` as the direct product, as `2 Re((I - x)^{-1}) - I` and as
/// `Re((I + x)(I - x)^{-1})`, and requires them to agree.
pub fn harnack_middle(x: &ComplexMatrix, delta: f64) -> Result<HarnackMiddle> {
    require_strict_contraction(x, delta)?;
    let n = x.dim();
    let one = C64::new(1.0, 0.0);
    let id = ComplexMatrix::identity(n);
    let i_minus_x = &id - x;
    let inv = linalg::inverse(&i_minus_x)?;
    let defect = &id - &x.adjoint().matmul(x);
    let direct = inv.adjoint().matmul(&defect).matmul(&inv);
    let via_re = inv.re_part().scale_real(2.0).add_identity(-one);
    let via_cayley = x.add_identity(one).matmul(&inv).re_part();
    let scale = direct.frobenius_norm();
    let gap = [
        (&direct - &via_re).frobenius_norm(),
        (&direct - &via_cayley).frobenius_norm(),
        (&via_re - &via_cayley).frobenius_norm(),
    ]
    .into_iter()
    .fold(0.0, f64::max)
        / scale;
    if !(gap <= CONSTRUCTION_TOL) {
        return Err(Error::ConstructionMismatch(gap));
    }
    let s = linalg::sqrt_psd(&defect)?.matmul(&inv);
    Ok(HarnackMiddle {
        a: direct.re_part(),
        s,
        construction_gap: gap,
    })
}

/// The three constructions of the middle term and `S*S` agree.
pub fn check_harnack_middle(
    x: &ComplexMatrix,
    opts: &CheckOptions,
) -> Result<Vec<InequalityReport>> {
    const NAME: &str = "harnack_middle";
    let hm = harnack_middle(x, opts.delta)?;
    let scale = hm.a.frobenius_norm();
    let sts = hm.s.adjoint().matmul(&hm.s);
    let ss_gap = (&hm.a - &sts).frobenius_norm() / scale;
    Ok(vec![
        InequalityReport::inequality(
            NAME,
            "constructions",
            hm.construction_gap,
            CONSTRUCTION_TOL,
            &opts.tol,
            json!({}),
        ),
        InequalityReport::inequality(
            NAME,
            "s_star_s",
            ss_gap,
            CONSTRUCTION_TOL,
            &opts.tol,
            json!({}),
        ),
    ])
}

/// `-μ^ℓ_{1-s}(x) ≤ λ_s(Re x) ≤ μ_s(x)` and the same for `Im x`, per piece.
pub fn check_re_im_bounds(
    x: &ComplexMatrix,
    opts: &CheckOptions,
) -> Result<Vec<InequalityReport>> {
    const NAME: &str = "re_im_bounds";
    let n = x.dim();
    let mu = spectral::mu(x)?;
    let parts = [
        ("re", spectral::lambda_scale(&x.re_part())?),
        ("im", spectral::lambda_scale(&x.im_part())?),
    ];
    let mut out = Vec::with_capacity(4 * n);
    for (label, lam) in &parts {
        for j in 1..=n {
            let (s, r) = piece_midpoint(n, j);
            let l = at(lam, s);
            let ctx = json!({ "j": j, "s": s });
            out.push(InequalityReport::inequality(
                NAME,
                &format!("{label}_lower"),
                -at_left(&mu, r),
                l,
                &opts.tol,
                ctx.clone(),
            ));
            out.push(InequalityReport::inequality(
                NAME,
                &format!("{label}_upper"),
                l,
                at(&mu, s),
                &opts.tol,
                ctx,
            ));
        }
    }
    Ok(out)
}

/// For Hermitian `x`: `λ_s(i Re y - i y) ≤ μ_s(y - αx)` and
/// `λ_s(y - i Im y) ≤ μ_s(y - iαx)`, per piece.
pub fn check_cor_alpha(
    x: &ComplexMatrix,
    y: &ComplexMatrix,
    alpha: f64,
    opts: &CheckOptions,
) -> Result<Vec<InequalityReport>> {
    const NAME: &str = "cor_alpha";
    require_hermitian(x)?;
    let n = x.dim();
    let i = C64::new(0.0, 1.0);
    let first = (&y.re_part().scale(i) - &y.scale(i)).re_part();
    let second = (y - &y.im_part().scale(i)).re_part();
    let pairs = [
        (
            "real_shift",
            spectral::lambda_scale(&first)?,
            spectral::mu(&(y - &x.scale_real(alpha)))?,
        ),
        (
            "imaginary_shift",
            spectral::lambda_scale(&second)?,
            spectral::mu(&(y - &x.scale(i * alpha)))?,
        ),
    ];
    let mut out = Vec::with_capacity(2 * n);
    for (label, lam, mu) in &pairs {
        for j in 1..=n {
            let (s, _) = piece_midpoint(n, j);
            out.push(InequalityReport::inequality(
                NAME,
                label,
                at(lam, s),
                at(mu, s),
                &opts.tol,
                json!({ "j": j, "s": s, "alpha": alpha }),
            ));
        }
    }
    Ok(out)
}

/// `∫_0^t log f ≤ ∫_0^t log g` at every breakpoint of either function.
fn log_submaj_reports(
    name: &str,
    item: &str,
    f: &StepFunction,
    g: &StepFunction,
    tol: &Tolerance,
    extra: &Value,
) -> Vec<InequalityReport> {
    f.merged_breakpoints(g)
        .into_iter()
        .filter(|&t| t > 0.0)
        .map(|t| {
            let k = prefix(t);
            let mut ctx = extra.clone();
            ctx["t"] = json!(t);
            InequalityReport::inequality(name, item, int_log(f, &k), int_log(g, &k), tol, ctx)
        })
        .collect()
}

/// `μ(2 Re x) ≺≺_log μ(t²x*x + t^{-2}I)` and `Δ(2 Re x) ≤ Δ(t²x*x + t^{-2}I)`
/// for each `t`.
pub fn check_remark33(
    x: &ComplexMatrix,
    ts: &[f64],
    opts: &CheckOptions,
) -> Result<Vec<InequalityReport>> {
    const NAME: &str = "remark33";
    let two_re = x.re_part().scale_real(2.0);
    let left = spectral::mu(&two_re)?;
    let left_det = log_det(&two_re)?;
    let gram = x.adjoint().matmul(x);
    let mut out = Vec::new();
    for &t in ts {
        if !(t > 0.0 && t.is_finite()) {
            return Err(Error::OutOfDomain {
                value: t,
                domain: "(0, inf)",
            });
        }
        let bound = gram
            .scale_real(t * t)
            .add_identity(C64::new(1.0 / (t * t), 0.0))
            .re_part();
        let right = spectral::mu(&bound)?;
        let param = json!({ "param": t });
        out.extend(log_submaj_reports(
            NAME,
            "log_submaj",
            &left,
            &right,
            &opts.tol,
            &param,
        ));
        out.push(InequalityReport::inequality(
            NAME,
            "determinant",
            left_det,
            log_det(&bound)?,
            &opts.tol,
            param,
        ));
    }
    Ok(out)
}

/// For `x ≥ 0` with `‖x‖ > 1` and unitary `u`:
/// `μ(x - Re u) ≺≺_log μ(x + I)`, `Δ(x - Re u) ≤ Δ(x + I)`, and, when
/// `τ|x - I| = τ|x - u|` within [`SIDE_CONDITION_TOL`],
/// `Δ(x - u) ≤ Δ(x - I)`. If the side condition fails the last statement is
/// reported as skipped.
pub fn check_prop35(
    x: &ComplexMatrix,
    u: &ComplexMatrix,
    opts: &CheckOptions,
) -> Result<Vec<InequalityReport>> {
    const NAME: &str = "prop35";
    require_positive(x)?;
    let norm = linalg::op_norm(x);
    if !(norm > 1.0) {
        return Err(Error::NormNotAboveOne(norm));
    }
    let one = C64::new(1.0, 0.0);
    let ctx = spectral::TracialContext::new(x.dim());
    let minus_re_u = x - &u.re_part();
    let plus_i = x.add_identity(one);
    let mut out = log_submaj_reports(
        NAME,
        "log_submaj",
        &spectral::mu(&minus_re_u)?,
        &spectral::mu(&plus_i)?,
        &opts.tol,
        &json!({}),
    );
    out.push(InequalityReport::inequality(
        NAME,
        "determinant",
        log_det(&minus_re_u)?,
        log_det(&plus_i)?,
        &opts.tol,
        json!({}),
    ));
    let minus_u = x - u;
    let minus_i = x.add_identity(-one);
    let tau_u = ctx.trace_abs(&minus_u)?;
    let tau_i = ctx.trace_abs(&minus_i)?;
    let side = (tau_u - tau_i).abs();
    let side_ctx = json!({ "side_condition_gap": side, "side_condition_tol": SIDE_CONDITION_TOL });
    if side <= SIDE_CONDITION_TOL {
        out.push(InequalityReport::inequality(
            NAME,
            "equal_trace_determinant",
            log_det(&minus_u)?,
            log_det(&minus_i)?,
            &opts.tol,
            side_ctx,
        ));
    } else {
        out.push(InequalityReport::skipped(
            NAME,
            "equal_trace_determinant",
            tau_u,
            tau_i,
            side_ctx,
        ));
    }
    Ok(out)
}

/// `μ(x^{-1})` equals `t ↦ 1 / μ_{1-t}(x)` for positive invertible `x`.
pub fn check_lemma36(x: &ComplexMatrix, opts: &CheckOptions) -> Result<InequalityReport> {
    require_positive(x)?;
    let inv = linalg::inverse(x).map_err(|e| match e {
        Error::Singular(_) => Error::NotInvertible,
        other => other,
    })?;
    let direct = spectral::mu(&inv)?;
    let flipped = spectral::mu(x)?.invert_flip()?;
    Ok(InequalityReport::step_identity(
        "lemma36", "inverse", &direct, &flipped, &opts.tol,
    ))
}

/// `λ(-x)` equals `s ↦ -μ^ℓ_{1-s}(x)` for positive `x`.
pub fn check_neg_reflection(x: &ComplexMatrix, opts: &CheckOptions) -> Result<InequalityReport> {
    require_positive(x)?;
    let direct = spectral::lambda_scale(&x.scale_real(-1.0))?;
    let reflected = spectral::mu(x)?.reflect_neg()?;
    Ok(InequalityReport::step_identity(
        "neg_reflection",
        "negation",
        &direct,
        &reflected,
        &opts.tol,
    ))
}

/// Items (1)-(4) of the singular value inequalities for `I - x` and
/// `x ± iI`, plus item (5) when `x` is a positive contraction.
///
/// Items (2)-(4) run over the half-grid `a / 2n`, which contains every
/// breakpoint and every piece midpoint, in both continuity variants.
pub fn check_lemma37(x: &ComplexMatrix, opts: &CheckOptions) -> Result<Vec<InequalityReport>> {
    const NAME: &str = "lemma37";
    let n = x.dim();
    let tol = &opts.tol;
    let mut out = Vec::new();

    let h = x.re_part();
    let lam_h = spectral::lambda_scale(&h)?;
    let mu_h = spectral::mu(&h)?;
    for j in 1..=n {
        let (s, _) = piece_midpoint(n, j);
        out.push(InequalityReport::inequality(
            NAME,
            "item1",
            at(&lam_h, s),
            at(&mu_h, s),
            tol,
            json!({ "j": j }),
        ));
    }

    let i = C64::new(0.0, 1.0);
    let mu_x = spectral::mu(x)?;
    let mu_c = spectral::mu(&x.scale_real(-1.0).add_identity(C64::new(1.0, 0.0)))?;
    let mu_plus = spectral::mu(&x.add_identity(i))?;
    let mu_minus = spectral::mu(&x.add_identity(-i))?;
    let den = (2 * n) as f64;
    let grid = |a: usize| a as f64 / den;

    for a in 1..2 * n {
        for b in 1..(2 * n - a) {
            let (t, s) = (grid(a), grid(b));
            let ctx = json!({ "t": t, "s": s });
            out.push(InequalityReport::inequality(
                NAME,
                "item2_right",
                1.0,
                at(&mu_x, t) + at(&mu_c, s),
                tol,
                ctx.clone(),
            ));
            out.push(InequalityReport::inequality(
                NAME,
                "item2_left",
                1.0,
                at_left(&mu_x, t) + at_left(&mu_c, s),
                tol,
                ctx,
            ));
        }
    }

    let complements: [(&str, &StepFunction); 3] = [
        ("item3", &mu_c),
        ("item4_plus", &mu_plus),
        ("item4_minus", &mu_minus),
    ];
    for a in 1..2 * n {
        let (t, r) = (grid(a), grid(2 * n - a));
        for (label, other) in &complements {
            let variants = [
                ("right_left", at(&mu_x, t) + at_left(other, r)),
                ("left_left", at_left(&mu_x, t) + at_left(other, r)),
                ("left_right", at_left(&mu_x, t) + at(other, r)),
            ];
            for (v, sum) in variants {
                out.push(InequalityReport::inequality(
                    NAME,
                    &format!("{label}_{v}"),
                    1.0,
                    sum,
                    tol,
                    json!({ "t": t }),
                ));
            }
        }
    }

    let is_positive_contraction = x.is_hermitian(HERMITIAN_TOL)
        && min_eigenvalue(x)? >= 0.0
        && linalg::op_norm(x) <= 1.0;
    if is_positive_contraction {
        out.push(check_lemma37_item5(x, opts)?);
    }
    Ok(out)
}

/// `μ_t(I - x) = 1 - μ^ℓ_{1-t}(x)` for `0 ≤ x ≤ I`, as step functions.
pub fn check_lemma37_item5(x: &ComplexMatrix, opts: &CheckOptions) -> Result<InequalityReport> {
    require_hermitian(x)?;
    let min = min_eigenvalue(x)?;
    let norm = linalg::op_norm(x);
    let slack = HERMITIAN_TOL * norm.max(1.0);
    if min < -slack || norm > 1.0 + slack {
        return Err(Error::ContractionRequired { norm, min_eig: min });
    }
    let direct = spectral::mu(&x.scale_real(-1.0).add_identity(C64::new(1.0, 0.0)))?;
    let reflected = spectral::mu(x)?.reflect_neg()?.shift(1.0);
    Ok(InequalityReport::step_identity(
        "lemma37", "item5", &direct, &reflected, &opts.tol,
    ))
}

/// With `t = m(K)`:
/// `∫_K log μ(x) + ∫_0^t log μ_{1-s}(y) ≤ ∫_K log μ(xy) ≤ ∫_K log μ(x) + ∫_0^t log μ(y)`.
pub fn check_borel_lemma(
    x: &ComplexMatrix,
    y: &ComplexMatrix,
    k: &IntervalSet,
    opts: &CheckOptions,
) -> Result<Vec<InequalityReport>> {
    const NAME: &str = "borel_lemma";
    let mu_x = spectral::mu(x)?;
    let mu_y = spectral::mu(y)?;
    let mu_xy = spectral::mu(&x.matmul(y))?;
    let p = prefix(k.measure());
    let on_k = mu_x.integrate_log(k);
    let lower = on_k + mu_y.integrate_log(&p.reflect());
    let upper = on_k + mu_y.integrate_log(&p);
    let middle = int_log(&mu_xy, k);
    Ok(vec![
        InequalityReport::inequality(
            NAME,
            "lower",
            lower.to_f64(),
            middle,
            &opts.tol,
            interval_context(k),
        ),
        InequalityReport::inequality(
            NAME,
            "upper",
            middle,
            upper.to_f64(),
            &opts.tol,
            interval_context(k),
        ),
    ])
}

/// Upper Harnack bounds for the middle term `A`:
/// pointwise `μ_j(A) ≤ (1 + s_j)/(1 - s_j)`, the integral forms over `K` and
/// `[0, 1]`, and `Δ(I - x*x) / Δ(I - x)² ≤ exp ∫ log (1 + μ)/(1 - μ)`.
pub fn check_harnack_upper(
    x: &ComplexMatrix,
    k: &IntervalSet,
    opts: &CheckOptions,
) -> Result<Vec<InequalityReport>> {
    const NAME: &str = "harnack_upper";
    let hm = harnack_middle(x, opts.delta)?;
    let n = x.dim();
    let mu_a = spectral::mu(&hm.a)?;
    let mu_x = spectral::mu(x)?;
    let tol = &opts.tol;
    let mut out = Vec::with_capacity(n + 3);
    for j in 1..=n {
        let (s, _) = piece_midpoint(n, j);
        let v = at(&mu_x, s);
        out.push(InequalityReport::inequality(
            NAME,
            "pointwise",
            at(&mu_a, s),
            (1.0 + v) / (1.0 - v),
            tol,
            json!({ "j": j }),
        ));
    }
    let bound_k = mu_x.integrate_map(k, log_ratio_up);
    let bound_unit = mu_x.integrate_map(&IntervalSet::unit(), log_ratio_up);
    out.push(InequalityReport::inequality(
        NAME,
        "integral_k",
        int_log(&mu_a, k),
        bound_k,
        tol,
        interval_context(k),
    ));
    out.push(InequalityReport::inequality(
        NAME,
        "integral_unit",
        bound_k,
        bound_unit,
        tol,
        interval_context(k),
    ));
    out.push(InequalityReport::inequality(
        NAME,
        "determinant",
        determinant_ratio(x)?,
        bound_unit,
        tol,
        json!({}),
    ));
    Ok(out)
}

/// `log Δ(I - x*x) - 2 log Δ(I - x)`.
fn determinant_ratio(x: &ComplexMatrix) -> Result<f64> {
    let id = ComplexMatrix::identity(x.dim());
    let defect = &id - &x.adjoint().matmul(x);
    Ok(log_det(&defect)? - 2.0 * log_det(&(&id - x))?)
}

/// With `t = m(K)`:
/// `∫_0^t 2 log 1/(1 + μ_s(x)) + ∫_K log(1 - μ_{1-s}(x)²) ≤ ∫_K log μ(A)`.
pub fn check_harnack_lower(
    x: &ComplexMatrix,
    k: &IntervalSet,
    opts: &CheckOptions,
) -> Result<InequalityReport> {
    let hm = harnack_middle(x, opts.delta)?;
    let mu_a = spectral::mu(&hm.a)?;
    let mu_x = spectral::mu(x)?;
    let p = prefix(k.measure());
    let bound = -2.0 * mu_x.integrate_map(&p, f64::ln_1p)
        + int_reflected(&mu_x, k, |v| (-v * v).ln_1p());
    Ok(InequalityReport::inequality(
        "harnack_lower",
        "integral_k",
        bound,
        int_log(&mu_a, k),
        &opts.tol,
        interval_context(k),
    ))
}

/// For each `t`: `∫_0^t log (1 - μ)/(1 + μ) ≤ ∫_0^t log μ_{1-s}(A)`, and
/// `exp ∫_0^1 log (1 - μ)/(1 + μ) ≤ Δ(I - x*x) / Δ(I - x)²`.
pub fn check_harnack_corollary(
    x: &ComplexMatrix,
    ts: &[f64],
    opts: &CheckOptions,
) -> Result<Vec<InequalityReport>> {
    const NAME: &str = "harnack_corollary";
    let hm = harnack_middle(x, opts.delta)?;
    let mu_a = spectral::mu(&hm.a)?;
    let mu_x = spectral::mu(x)?;
    let mut out = Vec::with_capacity(ts.len() + 1);
    for &t in ts {
        if !(t > 0.0 && t <= 1.0) {
            return Err(Error::OutOfDomain {
                value: t,
                domain: "(0, 1]",
            });
        }
        let p = prefix(t);
        out.push(InequalityReport::inequality(
            NAME,
            "integral",
            -mu_x.integrate_map(&p, log_ratio_up),
            int_log(&mu_a, &p.reflect()),
            &opts.tol,
            json!({ "t": t }),
        ));
    }
    out.push(InequalityReport::inequality(
        NAME,
        "determinant",
        -mu_x.integrate_map(&IntervalSet::unit(), log_ratio_up),
        determinant_ratio(x)?,
        &opts.tol,
        json!({}),
    ));
    Ok(out)
}

/// For positive strict contractions `x_i`, weights `ω_i` and unitary `u`,
/// with `W = Σ ω_i x_i`: the two-sided bound on `Δ(I - W²)/Δ(I - uW)²` and
/// Lewent's inequality on every piece of the common refinement of the
/// `μ(x_i)`.
pub fn check_weighted(
    xs: &[ComplexMatrix],
    ws: &[f64],
    u: &ComplexMatrix,
    opts: &CheckOptions,
) -> Result<Vec<InequalityReport>> {
    const NAME: &str = "weighted";
    if xs.is_empty() || xs.len() != ws.len() {
        return Err(Error::WeightsInvalid(format!(
            "{} matrices, {} weights",
            xs.len(),
            ws.len()
        )));
    }
    if ws.iter().any(|w| !(*w > 0.0 && w.is_finite())) {
        return Err(Error::WeightsInvalid("weights must be positive".into()));
    }
    let total: f64 = ws.iter().sum();
    if (total - 1.0).abs() > 1e-12 {
        return Err(Error::WeightsInvalid(format!("weights sum to {total}")));
    }
    let n = u.dim();
    if xs.iter().any(|x| x.dim() != n) {
        return Err(Error::DimensionMismatch("all matrices must share u's size".into()));
    }
    let mut mus = Vec::with_capacity(xs.len());
    for x in xs {
        require_positive(x)?;
        require_strict_contraction(x, opts.delta)?;
        mus.push(spectral::mu(x)?);
    }

    let mut w_sum = ComplexMatrix::zeros(n);
    for (x, &w) in xs.iter().zip(ws) {
        w_sum = &w_sum + &x.scale_real(w);
    }
    let w_sum = w_sum.re_part();
    let id = ComplexMatrix::identity(n);
    let middle = log_det(&(&id - &w_sum.matmul(&w_sum)))? - 2.0 * log_det(&(&id - &u.matmul(&w_sum)))?;
    let unit = IntervalSet::unit();
    let upper: f64 = mus
        .iter()
        .zip(ws)
        .map(|(m, w)| w * m.integrate_map(&unit, log_ratio_up))
        .sum();
    let ctx = json!({ "weights": ws });
    let mut out = vec![
        InequalityReport::inequality(NAME, "lower", -upper, middle, &opts.tol, ctx.clone()),
        InequalityReport::inequality(NAME, "upper", middle, upper, &opts.tol, ctx),
    ];

    let mut grid: Vec<f64> = mus.iter().flat_map(|m| m.breakpoints().to_vec()).collect();
    grid.sort_by(|a, b| a.partial_cmp(b).unwrap());
    grid.dedup();
    for w in grid.windows(2) {
        if w[1] - w[0] <= crate::stepfn::SLIVER {
            continue;
        }
        let s = 0.5 * (w[0] + w[1]);
        let vals: Vec<f64> = mus.iter().map(|m| at(m, s)).collect();
        let mean: f64 = vals.iter().zip(ws).map(|(v, w)| w * v).sum();
        let product: f64 = vals.iter().zip(ws).map(|(v, w)| w * log_ratio_up(*v)).sum();
        out.push(InequalityReport::inequality(
            NAME,
            "lewent",
            log_ratio_up(mean),
            product,
            &opts.tol,
            json!({ "s": s }),
        ));
    }
    Ok(out)
}

/// Cayley transform bounds with `t = m(K)`:
/// (a) `∫_K log(1 - μ_{1-s}(x)) - ∫_0^t log(1 + μ(x)) ≤ ∫_K log μ(C(x))
///     ≤ ∫_K log(1 + μ(x)) - ∫_0^t log(1 - μ(x))`;
/// (b) `∫_K log μ(C(x) - C(y)) ≤ ∫_K log 2μ(x - y) - ∫_0^t log[(1 - μ(x))(1 - μ(y))]`;
/// (c) the same with `K = [0, 1]`.
/// The formula `C(x) - C(y) = 2i(y + iI)^{-1}(x - y)(x + iI)^{-1}` is checked
/// first, relative to `‖C(x) - C(y)‖_F`.
pub fn check_cayley(
    x: &ComplexMatrix,
    y: &ComplexMatrix,
    k: &IntervalSet,
    opts: &CheckOptions,
) -> Result<Vec<InequalityReport>> {
    const NAME: &str = "cayley";
    require_strict_contraction(x, opts.delta)?;
    require_strict_contraction(y, opts.delta)?;
    let i = C64::new(0.0, 1.0);
    let cx = linalg::cayley(x)?;
    let cy = linalg::cayley(y)?;
    let diff = &cx - &cy;
    let formula = linalg::inverse(&y.add_identity(i))?
        .matmul(&(x - y))
        .matmul(&linalg::inverse(&x.add_identity(i))?)
        .scale(C64::new(0.0, 2.0));
    let residual = (&diff - &formula).frobenius_norm();
    let tol = &opts.tol;
    let mut out = vec![InequalityReport::inequality(
        NAME,
        "difference_formula",
        residual,
        CONSTRUCTION_TOL * diff.frobenius_norm(),
        tol,
        json!({}),
    )];

    let mu_x = spectral::mu(x)?;
    let mu_y = spectral::mu(y)?;
    let mu_c = spectral::mu(&cx)?;
    let mu_d = spectral::mu(&diff)?;
    let mu_xy = spectral::mu(&(x - y))?;
    let neg_ln = |v: f64| (-v).ln_1p();
    for (suffix, set) in [("k", k.clone()), ("unit", IntervalSet::unit())] {
        let p = prefix(set.measure());
        let ctx = interval_context(&set);
        let lower = int_reflected(&mu_x, &set, neg_ln) - mu_x.integrate_map(&p, f64::ln_1p);
        let upper = mu_x.integrate_map(&set, f64::ln_1p) - mu_x.integrate_map(&p, neg_ln);
        let middle = int_log(&mu_c, &set);
        out.push(InequalityReport::inequality(
            NAME,
            &format!("lower_{suffix}"),
            lower,
            middle,
            tol,
            ctx.clone(),
        ));
        out.push(InequalityReport::inequality(
            NAME,
            &format!("upper_{suffix}"),
            middle,
            upper,
            tol,
            ctx.clone(),
        ));
        let diff_bound = mu_xy.integrate_map(&set, |v| (2.0 * v).ln())
            - mu_x.integrate_map(&p, neg_ln)
            - mu_y.integrate_map(&p, neg_ln);
        out.push(InequalityReport::inequality(
            NAME,
            &format!("difference_{suffix}"),
            int_log(&mu_d, &set),
            diff_bound,
            tol,
            ctx,
        ));
    }
    Ok(out)
}

/// Matrix forms for `A = UZ` with `r_k` the singular values of `Z` and
/// `λ_k` the eigenvalues (descending) of the middle term of `A`:
/// (1) `Π (1 - r)/(1 + r) ≤ det(I - Z*Z)/|det(I - UZ)|² ≤ Π (1 + r)/(1 - r)`,
/// (2) the same bounds for `Π λ_k`,
/// (3) `Π_{k∈K} λ_k ≤ Π_{k∈K} (1 + r_k)/(1 - r_k)`,
/// (4) `Π_{k∈K} (1 - r_k²) · Π_{i≤|K|} (1 + r_i)^{-2} ≤ Π_{k∈K} λ_{n-k+1}`.
/// Items (3) and (4), divided by `n`, are cross-checked as identities against
/// [`check_harnack_upper`] on `⋃_{k∈K} [(k-1)/n, k/n)` and
/// [`check_harnack_lower`] on `⋃_{k∈K} [(n-k)/n, (n-k+1)/n)`.
pub fn check_tung_matrix(
    z: &ComplexMatrix,
    u: &ComplexMatrix,
    index_set: &[usize],
    opts: &CheckOptions,
) -> Result<Vec<InequalityReport>> {
    const NAME: &str = "tung_matrix";
    require_strict_contraction(z, opts.delta)?;
    let n = z.dim();
    if u.dim() != n {
        return Err(Error::DimensionMismatch(format!("Z is {n}×{n}, U is {0}×{0}", u.dim())));
    }
    let mut idx = index_set.to_vec();
    idx.sort_unstable();
    idx.dedup();
    if idx.is_empty() || idx[0] == 0 || *idx.last().unwrap() > n {
        return Err(Error::OutOfDomain {
            value: idx.last().copied().unwrap_or(0) as f64,
            domain: "nonempty subset of {1, ..., n}",
        });
    }
    let a = u.matmul(z);
    let hm = harnack_middle(&a, opts.delta)?;
    let r = linalg::svd(z, JACOBI_TOL)?.sigma;
    let lam = linalg::herm_eig(&hm.a, JACOBI_TOL)?.eigenvalues;
    let tol = &opts.tol;
    let ctx = json!({ "index_set": idx });

    let up: f64 = r.iter().map(|&v| log_ratio_up(v)).sum();
    let id = ComplexMatrix::identity(n);
    let det_form = spectral::log_abs_det(&(&id - &z.adjoint().matmul(z)))?.to_f64()
        - 2.0 * spectral::log_abs_det(&(&id - &a))?.to_f64();
    let eig_form: f64 = lam.iter().map(|v| v.ln()).sum();
    let mut out = vec![
        InequalityReport::inequality(NAME, "det_lower", -up, det_form, tol, json!({})),
        InequalityReport::inequality(NAME, "det_upper", det_form, up, tol, json!({})),
        InequalityReport::inequality(NAME, "eig_lower", -up, eig_form, tol, json!({})),
        InequalityReport::inequality(NAME, "eig_upper", eig_form, up, tol, json!({})),
    ];

    let sub_lhs: f64 = idx.iter().map(|&k| lam[k - 1].ln()).sum();
    let sub_rhs: f64 = idx.iter().map(|&k| log_ratio_up(r[k - 1])).sum();
    out.push(InequalityReport::inequality(
        NAME,
        "subset_upper",
        sub_lhs,
        sub_rhs,
        tol,
        ctx.clone(),
    ));
    let low_bound: f64 = idx.iter().map(|&k| (-r[k - 1] * r[k - 1]).ln_1p()).sum::<f64>()
        - 2.0 * r[..idx.len()].iter().map(|v| v.ln_1p()).sum::<f64>();
    let low_value: f64 = idx.iter().map(|&k| lam[n - k].ln()).sum();
    out.push(InequalityReport::inequality(
        NAME,
        "subset_lower",
        low_bound,
        low_value,
        tol,
        ctx.clone(),
    ));

    let nf = n as f64;
    let k_up = IntervalSet::dyadic(n, &idx)?;
    let reflected: Vec<usize> = idx.iter().map(|&k| n - k + 1).collect();
    let k_low = IntervalSet::dyadic(n, &reflected)?;
    let continuous_up = check_harnack_upper(&a, &k_up, opts)?;
    let integral = continuous_up
        .iter()
        .find(|r| r.item == "integral_k")
        .expect("integral report");
    let continuous_low = check_harnack_lower(&a, &k_low, opts)?;
    let bridges = [
        ("bridge_upper_lhs", sub_lhs / nf, integral.lhs),
        ("bridge_upper_rhs", sub_rhs / nf, integral.rhs),
        ("bridge_lower_lhs", low_bound / nf, continuous_low.lhs),
        ("bridge_lower_rhs", low_value / nf, continuous_low.rhs),
    ];
    for (item, matrix_side, step_side) in bridges {
        out.push(InequalityReport::identity(
            NAME,
            item,
            matrix_side,
            step_side,
            tol,
            ctx.clone(),
        ));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::haar_unitary;
    use crate::oracle::scalar_harnack;

    fn opts() -> CheckOptions {
        CheckOptions::default()
    }

    fn scalar(r: f64) -> ComplexMatrix {
        ComplexMatrix::from_real_diag(&[r])
    }

    fn all_pass(reports: &[InequalityReport]) -> bool {
        reports.iter().all(|r| r.pass)
    }

    #[test]
    fn tolerance_policy() {
        let tol = Tolerance::new(1e-9, 1e-9);
        let r = InequalityReport::inequality("t", "x", 1.0 + 1.5e-9, 1.0, &tol, json!({}));
        assert!(r.pass);
        let r = InequalityReport::inequality("t", "x", 1.0 + 3e-9, 1.0, &tol, json!({}));
        assert!(!r.pass);
        let loose = Tolerance::new(1e-8, 1e-9);
        assert!(InequalityReport::inequality("t", "x", 1.0 + 3e-9, 1.0, &loose, json!({})).pass);
        let v = InequalityReport::inequality("t", "x", f64::NEG_INFINITY, -5.0, &tol, json!({}));
        assert!(v.pass && v.vacuous);
        let f = InequalityReport::inequality("t", "x", -5.0, f64::NEG_INFINITY, &tol, json!({}));
        assert!(!f.pass);
        let id = InequalityReport::identity("t", "x", 2.0, 2.0 + 1e-12, &tol, json!({}));
        assert!(id.pass && id.slack < 0.0);
    }

    #[test]
    fn harnack_middle_examples() {
        let hm = harnack_middle(&ComplexMatrix::zeros(3), 1e-3).unwrap();
        assert!((&hm.a - &ComplexMatrix::identity(3)).frobenius_norm() < 1e-15);
        assert!((&hm.s - &ComplexMatrix::identity(3)).frobenius_norm() < 1e-15);
        let hm = harnack_middle(&scalar(0.5), 1e-3).unwrap();
        assert!((hm.a[(0, 0)].re - 3.0).abs() < 1e-14);
        assert!(matches!(
            harnack_middle(&scalar(0.9995), 1e-3),
            Err(Error::NotStrictContraction { .. })
        ));
    }

    #[test]
    fn harnack_upper_equality_for_scalar_multiples() {
        for r in [0.0, 0.3, 0.9] {
            let x = ComplexMatrix::from_real_diag(&[r, r, r]);
            let reports = check_harnack_upper(&x, &IntervalSet::unit(), &opts()).unwrap();
            assert!(all_pass(&reports));
            let expected = scalar_harnack(r).unwrap().upper;
            for rep in reports.iter().filter(|r| r.item == "pointwise") {
                assert!((rep.lhs - expected).abs() < 1e-12 * expected);
                assert!(rep.slack.abs() < 1e-12 * expected);
            }
        }
    }

    #[test]
    fn harnack_lower_scalar() {
        let r = 0.5;
        let rep = check_harnack_lower(&scalar(r), &IntervalSet::unit(), &opts()).unwrap();
        assert!((rep.rhs - 3f64.ln()).abs() < 1e-13);
        assert!((rep.lhs - (1.0f64 / 3.0).ln()).abs() < 1e-13);
        assert!(rep.pass && rep.slack > 0.0);
        let zero = check_harnack_lower(&ComplexMatrix::zeros(2), &IntervalSet::unit(), &opts())
            .unwrap();
        assert_eq!((zero.lhs, zero.rhs), (0.0, 0.0));
    }

    #[test]
    fn harnack_corollary_scalar() {
        let reports = check_harnack_corollary(&scalar(0.5), &[0.5, 1.0], &opts()).unwrap();
        assert!(all_pass(&reports));
        let det = reports.last().unwrap();
        assert!((det.rhs - 3f64.ln()).abs() < 1e-13);
        assert!((det.lhs + 3f64.ln()).abs() < 1e-13);
    }

    #[test]
    fn re_im_bounds_examples() {
        let x = ComplexMatrix::from_real_diag(&[2.0, 0.5]);
        let reports = check_re_im_bounds(&x, &opts()).unwrap();
        assert_eq!(reports.len(), 8);
        assert!(all_pass(&reports));
        for r in reports.iter().filter(|r| r.item == "re_upper") {
            assert_eq!(r.slack, 0.0);
        }
        let h = ComplexMatrix::from_real_rows(&[&[1.0, 2.0], &[2.0, -1.0]]);
        let ih = h.scale(C64::new(0.0, 1.0));
        assert!(all_pass(&check_re_im_bounds(&ih, &opts()).unwrap()));
    }

    #[test]
    fn cor_alpha_examples() {
        let x = ComplexMatrix::from_real_rows(&[&[1.0, 0.5], &[0.5, -2.0]]);
        let y = crate::linalg::complex_gaussian(
            &mut <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(9),
            2,
        );
        for alpha in [-2.0, 0.0, 1.3] {
            assert!(all_pass(&check_cor_alpha(&x, &y, alpha, &opts()).unwrap()));
        }
        let bad = ComplexMatrix::from_real_rows(&[&[0.0, 1.0], &[0.0, 0.0]]);
        assert!(matches!(
            check_cor_alpha(&bad, &y, 1.0, &opts()),
            Err(Error::NotHermitian(_))
        ));
    }

    #[test]
    fn remark33_examples() {
        let reports = check_remark33(&ComplexMatrix::identity(2), &[1.0], &opts()).unwrap();
        let det = reports.iter().find(|r| r.item == "determinant").unwrap();
        assert!((det.lhs - 2f64.ln()).abs() < 1e-14 && det.slack.abs() < 1e-14);
        let reports = check_remark33(&ComplexMatrix::zeros(2), &[0.5, 2.0], &opts()).unwrap();
        assert!(all_pass(&reports));
        assert!(reports.iter().all(|r| r.vacuous));
    }

    #[test]
    fn prop35_identity_unitary() {
        let x = ComplexMatrix::from_real_diag(&[3.0, 0.5]);
        let reports = check_prop35(&x, &ComplexMatrix::identity(2), &opts()).unwrap();
        assert!(all_pass(&reports));
        let eq = reports.last().unwrap();
        assert_eq!(eq.kind, ReportKind::Inequality);
        assert_eq!(eq.slack, 0.0);
        assert!(matches!(
            check_prop35(&ComplexMatrix::identity(2), &ComplexMatrix::identity(2), &opts()),
            Err(Error::NormNotAboveOne(_))
        ));
    }

    #[test]
    fn prop35_skips_unequal_traces() {
        let x = ComplexMatrix::from_real_diag(&[3.0, 2.0]);
        let u = ComplexMatrix::from_real_diag(&[-1.0, 1.0]);
        let reports = check_prop35(&x, &u, &opts()).unwrap();
        assert_eq!(reports.last().unwrap().kind, ReportKind::Skipped);
        assert!(all_pass(&reports));
    }

    #[test]
    fn lemma36_examples() {
        let r = check_lemma36(&ComplexMatrix::from_real_diag(&[4.0, 0.25]), &opts()).unwrap();
        assert!(r.pass && r.slack.abs() < 1e-15);
        let r = check_lemma36(&ComplexMatrix::identity(3), &opts()).unwrap();
        assert_eq!(r.slack, 0.0);
    }

    #[test]
    fn lemma37_examples() {
        let reports = check_lemma37(&ComplexMatrix::identity(2), &opts()).unwrap();
        assert!(all_pass(&reports));
        assert!(reports
            .iter()
            .filter(|r| r.item.starts_with("item2"))
            .all(|r| r.slack == 0.0));
        let zero = check_lemma37(&ComplexMatrix::zeros(2), &opts()).unwrap();
        assert!(zero.iter().any(|r| r.item == "item5"));
        assert!(all_pass(&zero));
        assert!(matches!(
            check_lemma37_item5(&ComplexMatrix::from_real_diag(&[2.0, 0.0]), &opts()),
            Err(Error::ContractionRequired { .. })
        ));
    }

    #[test]
    fn borel_lemma_examples() {
        let x = ComplexMatrix::from_real_rows(&[&[2.0, 1.0], &[0.0, 0.5]]);
        let k = IntervalSet::new(vec![(0.1, 0.3), (0.6, 0.9)]).unwrap();
        let reports = check_borel_lemma(&x, &ComplexMatrix::identity(2), &k, &opts()).unwrap();
        for r in &reports {
            assert!(r.slack.abs() < 1e-14);
        }
        let y = ComplexMatrix::from_real_rows(&[&[0.0, 1.0], &[3.0, 0.0]]);
        let reports = check_borel_lemma(&x, &y, &IntervalSet::unit(), &opts()).unwrap();
        for r in &reports {
            assert!(r.slack.abs() < 1e-13);
        }
    }

    #[test]
    fn weighted_scalar_example() {
        let xs = [scalar(0.5), scalar(0.0)];
        let reports = check_weighted(&xs, &[0.5, 0.5], &scalar(1.0), &opts()).unwrap();
        assert!(all_pass(&reports));
        let upper = reports.iter().find(|r| r.item == "upper").unwrap();
        assert!((upper.lhs - (5.0f64 / 3.0).ln()).abs() < 1e-14);
        assert!((upper.rhs - 3f64.sqrt().ln()).abs() < 1e-14);
        assert!(matches!(
            check_weighted(&xs, &[0.5, 0.6], &scalar(1.0), &opts()),
            Err(Error::WeightsInvalid(_))
        ));
    }

    #[test]
    fn cayley_examples() {
        let zero = ComplexMatrix::zeros(2);
        let k = IntervalSet::interval(0.25, 0.75).unwrap();
        let reports = check_cayley(&zero, &zero, &k, &opts()).unwrap();
        assert!(all_pass(&reports));
        for r in reports.iter().filter(|r| r.item.starts_with("lower") || r.item.starts_with("upper")) {
            assert_eq!((r.lhs, r.rhs), (0.0, 0.0));
        }
        let diff = reports.iter().find(|r| r.item == "difference_k").unwrap();
        assert!(diff.vacuous);
    }

    #[test]
    fn tung_diagonal_example() {
        let z = ComplexMatrix::from_real_diag(&[0.6, 0.2]);
        let reports = check_tung_matrix(&z, &ComplexMatrix::identity(2), &[1], &opts()).unwrap();
        assert!(all_pass(&reports));
        let sub = reports.iter().find(|r| r.item == "subset_upper").unwrap();
        assert!((sub.lhs - 4f64.ln()).abs() < 1e-13 && sub.slack.abs() < 1e-13);
        let u = haar_unitary(2, 3);
        let reports = check_tung_matrix(&z, &u, &[2], &opts()).unwrap();
        assert!(all_pass(&reports));
    }
}
