//! Seeded random trials over every checker, with per-checker summaries and
//! JSON or CSV output.
//!
//! Each trial draws its inputs from a ChaCha8 stream seeded by a hash of
//! `(master seed, checker id, dim, trial index)`, so a trial can be replayed
//! from its recorded seed and results do not depend on scheduling.

use std::collections::BTreeMap;
use std::fmt;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::inequalities::{self as ineq, CheckOptions, InequalityReport, ReportKind, Tolerance};
use crate::linalg::{self, ComplexMatrix, C64, JACOBI_TOL};
use crate::stepfn::IntervalSet;

/// Environment variable capping the number of worker threads.
pub const THREADS_ENV: &str = "LOGMAJ_THREADS";

/// Failure records kept in full per checker; later failures are only counted.
pub const MAX_RECORDED_FAILURES: usize = 20;

const CHUNK: usize = 128;

macro_rules! checkers {
    ($($variant:ident => $id:literal),* $(,)?) => {
        /// A checker that the harness can drive with random inputs.
        #[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
        pub enum Checker { $($variant),* }

        impl Checker {
            pub const ALL: &'static [Checker] = &[$(Checker::$variant),*];

            pub fn id(self) -> &'static str {
                match self { $(Checker::$variant => $id),* }
            }
        }
    };
}

checkers! {
    HarnackMiddle => "check_harnack_middle",
    ReImBounds => "check_re_im_bounds",
    CorAlpha => "check_cor_alpha",
    Remark33 => "check_remark33",
    Prop35 => "check_prop35",
    Lemma36 => "check_lemma36",
    NegReflection => "check_neg_reflection",
    Lemma37 => "check_lemma37",
    BorelLemma => "check_borel_lemma",
    HarnackUpper => "check_harnack_upper",
    HarnackLower => "check_harnack_lower",
    HarnackCorollary => "check_harnack_corollary",
    Weighted => "check_weighted",
    Cayley => "check_cayley",
    TungMatrix => "check_tung_matrix",
}

impl fmt::Display for Checker {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Checker {
    type Err = Error;

    /// Accepts the id with or without the `check_` prefix.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        Checker::ALL
            .iter()
            .copied()
            .find(|c| c.id() == s || c.id().strip_prefix("check_") == Some(s))
            .ok_or_else(|| Error::ConfigInvalid(format!("unknown checker `{s}`")))
    }
}

/// Parses `all` or a comma-separated list of checker ids.
pub fn parse_suite(s: &str) -> Result<Vec<Checker>> {
    if s.trim() == "all" {
        return Ok(Checker::ALL.to_vec());
    }
    let mut out: Vec<Checker> = s
        .split(',')
        .filter(|p| !p.trim().is_empty())
        .map(str::parse)
        .collect::<Result<_>>()?;
    out.dedup();
    if out.is_empty() {
        return Err(Error::ConfigInvalid("empty suite".into()));
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Json,
    Csv,
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(OutputFormat::Json),
            "csv" => Ok(OutputFormat::Csv),
            other => Err(Error::ConfigInvalid(format!("unknown format `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrialConfig {
    pub suite: Vec<String>,
    pub trials: usize,
    pub dims: Vec<usize>,
    pub seed: u64,
    pub delta: f64,
    pub atol: f64,
    pub rtol: f64,
    /// Largest number of intervals in a sampled `K`.
    pub k_max: usize,
    pub output: Option<PathBuf>,
    pub format: OutputFormat,
}

impl Default for TrialConfig {
    fn default() -> Self {
        TrialConfig {
            suite: vec!["all".into()],
            trials: 100,
            dims: vec![1, 2, 4, 8],
            seed: 0,
            delta: 1e-3,
            atol: 1e-9,
            rtol: 1e-9,
            k_max: 4,
            output: None,
            format: OutputFormat::Json,
        }
    }
}

impl TrialConfig {
    pub fn checkers(&self) -> Result<Vec<Checker>> {
        parse_suite(&self.suite.join(","))
    }

    pub fn options(&self) -> CheckOptions {
        CheckOptions {
            tol: Tolerance::new(self.atol, self.rtol),
            delta: self.delta,
        }
    }

    pub fn validate(&self) -> Result<()> {
        self.checkers()?;
        if self.trials == 0 {
            return Err(Error::ConfigInvalid("trials must be at least 1".into()));
        }
        if self.dims.is_empty() || self.dims.iter().any(|&n| !(1..=64).contains(&n)) {
            return Err(Error::ConfigInvalid(format!(
                "dims {:?} must be a nonempty subset of 1..=64",
                self.dims
            )));
        }
        if !(self.delta > 0.0 && self.delta < 1.0) {
            return Err(Error::ConfigInvalid(format!("delta {} not in (0, 1)", self.delta)));
        }
        if !(self.atol >= 0.0 && self.rtol >= 0.0 && self.atol.is_finite() && self.rtol.is_finite())
        {
            return Err(Error::ConfigInvalid("tolerances must be finite and >= 0".into()));
        }
        if self.k_max == 0 {
            return Err(Error::ConfigInvalid("k_max must be at least 1".into()));
        }
        Ok(())
    }
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

fn fnv1a(s: &str) -> u64 {
    s.bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| {
        (h ^ b as u64).wrapping_mul(0x0000_0100_0000_01b3)
    })
}

/// Seed of one trial's ChaCha8 stream.
pub fn trial_seed(master: u64, checker: Checker, dim: usize, trial: usize) -> u64 {
    let mut h = splitmix64(master);
    for part in [fnv1a(checker.id()), dim as u64, trial as u64] {
        h = splitmix64(h ^ part);
    }
    h
}

/// Complex Gaussian rescaled to operator norm `(1 - delta) · U(0, 1)`.
pub fn gen_contraction<R: Rng + ?Sized>(rng: &mut R, n: usize, delta: f64) -> ComplexMatrix {
    let g = linalg::complex_gaussian(rng, n);
    let target = (1.0 - delta) * rng.random::<f64>() * (1.0 - 1e-12);
    let norm = linalg::op_norm(&g);
    g.scale_real(target / norm)
}

/// `g*g` rescaled so the spectrum lies in `[0, (1 - delta) · U(0, 1)]`.
pub fn gen_positive_contraction<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    delta: f64,
) -> ComplexMatrix {
    let g = linalg::complex_gaussian(rng, n);
    let p = g.adjoint().matmul(&g).re_part();
    let target = (1.0 - delta) * rng.random::<f64>() * (1.0 - 1e-12);
    let norm = linalg::op_norm(&p);
    p.scale_real(target / norm).re_part()
}

/// `V diag(e^{U(-2, 2)}) V*` with Haar `V`.
pub fn gen_positive_invertible<R: Rng + ?Sized>(rng: &mut R, n: usize) -> ComplexMatrix {
    let v = linalg::haar_unitary_with(rng, n);
    let d: Vec<f64> = (0..n).map(|_| rng.random_range(-2.0..2.0f64).exp()).collect();
    conjugate_diag(&v, &d)
}

fn conjugate_diag(v: &ComplexMatrix, d: &[f64]) -> ComplexMatrix {
    v.matmul(&ComplexMatrix::from_real_diag(d))
        .matmul(&v.adjoint())
        .re_part()
}

/// `k ~ U{1..k_max}` intervals from `2k` sorted uniform draws; with `snap`,
/// endpoints are rounded to the grid `j / snap`. Never empty.
pub fn gen_interval_set<R: Rng + ?Sized>(
    rng: &mut R,
    k_max: usize,
    snap: Option<usize>,
) -> IntervalSet {
    let k = rng.random_range(1..=k_max.max(1));
    let mut points: Vec<f64> = (0..2 * k).map(|_| rng.random::<f64>()).collect();
    points.sort_by(|a, b| a.partial_cmp(b).unwrap());
    if let Some(m) = snap {
        for p in &mut points {
            *p = (*p * m as f64).round() / m as f64;
        }
    }
    let pairs: Vec<(f64, f64)> = points
        .chunks(2)
        .filter(|c| c[0] < c[1])
        .map(|c| (c[0], c[1]))
        .collect();
    match IntervalSet::new(pairs) {
        Ok(set) if !set.is_empty() => set,
        _ => match snap {
            Some(m) => IntervalSet::dyadic(m, &[rng.random_range(1..=m)]).expect("valid index"),
            None => IntervalSet::interval(0.0, 1.0).expect("unit interval"),
        },
    }
}

fn gen_k<R: Rng + ?Sized>(rng: &mut R, n: usize, k_max: usize) -> IntervalSet {
    let snap = rng.random_bool(0.5).then_some(n);
    gen_interval_set(rng, k_max, snap)
}

/// Inputs of one trial, kept so failures can be reported with full context.
#[derive(Debug, Clone, Serialize)]
#[serde(tag = "shape", rename_all = "snake_case")]
pub enum TrialInputs {
    Single { x: ComplexMatrix },
    CorAlpha { x: ComplexMatrix, y: ComplexMatrix, alpha: f64 },
    Params { x: ComplexMatrix, ts: Vec<f64> },
    Unitary { x: ComplexMatrix, u: ComplexMatrix },
    Lemma37 { x: ComplexMatrix, p: ComplexMatrix },
    WithSet { x: ComplexMatrix, k: IntervalSet },
    Pair { x: ComplexMatrix, y: ComplexMatrix, k: IntervalSet },
    Weighted { xs: Vec<ComplexMatrix>, ws: Vec<f64>, u: ComplexMatrix },
    Tung { z: ComplexMatrix, u: ComplexMatrix, index_set: Vec<usize> },
}

/// Positive `x` with `‖x‖ > 1` and a random kernel, paired with either a
/// Haar unitary or a unitary that is `I` off the kernel and has random
/// phases on it. The second kind satisfies `τ|x - u| = τ|x - I|` exactly.
fn gen_prop35<R: Rng + ?Sized>(rng: &mut R, n: usize) -> (ComplexMatrix, ComplexMatrix) {
    let v = linalg::haar_unitary_with(rng, n);
    let kernel = rng.random_range(0..n);
    let mut d: Vec<f64> = (0..n)
        .map(|i| {
            if i < kernel {
                0.0
            } else {
                rng.random_range(0.0..3.0)
            }
        })
        .collect();
    d[n - 1] = rng.random_range(1.1..3.0);
    let x = conjugate_diag(&v, &d);
    let u = if rng.random_bool(0.5) {
        linalg::haar_unitary_with(rng, n)
    } else {
        let phases: Vec<C64> = d
            .iter()
            .map(|&e| {
                if e == 0.0 {
                    C64::from_polar(1.0, rng.random_range(-std::f64::consts::PI..std::f64::consts::PI))
                } else {
                    C64::new(1.0, 0.0)
                }
            })
            .collect();
        v.matmul(&ComplexMatrix::from_diag(&phases)).matmul(&v.adjoint())
    };
    (x, u)
}

/// Draws the inputs for `checker` at size `n` from `seed`.
pub fn generate(checker: Checker, n: usize, seed: u64, config: &TrialConfig) -> TrialInputs {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rng = &mut rng;
    let delta = config.delta;
    let k_max = config.k_max;
    match checker {
        Checker::HarnackMiddle => TrialInputs::Single {
            x: gen_contraction(rng, n, delta),
        },
        Checker::ReImBounds => TrialInputs::Single {
            x: linalg::complex_gaussian(rng, n),
        },
        Checker::CorAlpha => TrialInputs::CorAlpha {
            x: linalg::complex_gaussian(rng, n).re_part(),
            y: linalg::complex_gaussian(rng, n),
            alpha: rng.random_range(-2.0..2.0),
        },
        Checker::Remark33 => TrialInputs::Params {
            x: linalg::complex_gaussian(rng, n),
            ts: vec![0.5, 1.0, 2.0, rng.random_range(-2.0..2.0f64).exp()],
        },
        Checker::Prop35 => {
            let (x, u) = gen_prop35(rng, n);
            TrialInputs::Unitary { x, u }
        }
        Checker::Lemma36 => TrialInputs::Single {
            x: gen_positive_invertible(rng, n),
        },
        Checker::NegReflection => {
            let g = linalg::complex_gaussian(rng, n);
            TrialInputs::Single {
                x: g.adjoint().matmul(&g).re_part(),
            }
        }
        Checker::Lemma37 => TrialInputs::Lemma37 {
            x: gen_contraction(rng, n, delta),
            p: gen_positive_contraction(rng, n, delta),
        },
        Checker::BorelLemma => TrialInputs::Pair {
            x: linalg::complex_gaussian(rng, n),
            y: linalg::complex_gaussian(rng, n),
            k: gen_k(rng, n, k_max),
        },
        Checker::HarnackUpper | Checker::HarnackLower => TrialInputs::WithSet {
            x: gen_contraction(rng, n, delta),
            k: gen_k(rng, n, k_max),
        },
        Checker::HarnackCorollary => TrialInputs::Params {
            x: gen_contraction(rng, n, delta),
            ts: vec![rng.random_range(1e-3..1.0), 0.5, 1.0],
        },
        Checker::Weighted => {
            let m = rng.random_range(1..=4);
            let xs = (0..m).map(|_| gen_positive_contraction(rng, n, delta)).collect();
            let raw: Vec<f64> = (0..m).map(|_| rng.random_range(0.05..1.0)).collect();
            let total: f64 = raw.iter().sum();
            TrialInputs::Weighted {
                xs,
                ws: raw.iter().map(|w| w / total).collect(),
                u: linalg::haar_unitary_with(rng, n),
            }
        }
        Checker::Cayley => TrialInputs::Pair {
            x: gen_contraction(rng, n, delta),
            y: gen_contraction(rng, n, delta),
            k: gen_k(rng, n, k_max),
        },
        Checker::TungMatrix => {
            let z = gen_contraction(rng, n, delta);
            let u = linalg::haar_unitary_with(rng, n);
            let mut index_set: Vec<usize> = (1..=n).filter(|_| rng.random_bool(0.5)).collect();
            if index_set.is_empty() {
                index_set.push(rng.random_range(1..=n));
            }
            TrialInputs::Tung { z, u, index_set }
        }
    }
}

/// Runs `checker` on previously drawn inputs.
pub fn evaluate(
    checker: Checker,
    inputs: &TrialInputs,
    opts: &CheckOptions,
) -> Result<Vec<InequalityReport>> {
    use TrialInputs as I;
    match (checker, inputs) {
        (Checker::HarnackMiddle, I::Single { x }) => ineq::check_harnack_middle(x, opts),
        (Checker::ReImBounds, I::Single { x }) => ineq::check_re_im_bounds(x, opts),
        (Checker::CorAlpha, I::CorAlpha { x, y, alpha }) => ineq::check_cor_alpha(x, y, *alpha, opts),
        (Checker::Remark33, I::Params { x, ts }) => ineq::check_remark33(x, ts, opts),
        (Checker::Prop35, I::Unitary { x, u }) => ineq::check_prop35(x, u, opts),
        (Checker::Lemma36, I::Single { x }) => Ok(vec![ineq::check_lemma36(x, opts)?]),
        (Checker::NegReflection, I::Single { x }) => Ok(vec![ineq::check_neg_reflection(x, opts)?]),
        (Checker::Lemma37, I::Lemma37 { x, p }) => {
            let mut out = ineq::check_lemma37(x, opts)?;
            out.push(ineq::check_lemma37_item5(p, opts)?);
            Ok(out)
        }
        (Checker::BorelLemma, I::Pair { x, y, k }) => ineq::check_borel_lemma(x, y, k, opts),
        (Checker::HarnackUpper, I::WithSet { x, k }) => ineq::check_harnack_upper(x, k, opts),
        (Checker::HarnackLower, I::WithSet { x, k }) => Ok(vec![ineq::check_harnack_lower(x, k, opts)?]),
        (Checker::HarnackCorollary, I::Params { x, ts }) => ineq::check_harnack_corollary(x, ts, opts),
        (Checker::Weighted, I::Weighted { xs, ws, u }) => ineq::check_weighted(xs, ws, u, opts),
        (Checker::Cayley, I::Pair { x, y, k }) => ineq::check_cayley(x, y, k, opts),
        (Checker::TungMatrix, I::Tung { z, u, index_set }) => {
            ineq::check_tung_matrix(z, u, index_set, opts)
        }
        (c, _) => Err(Error::ConfigInvalid(format!("inputs do not match {c}"))),
    }
}

/// Everything one trial produced.
#[derive(Debug, Clone)]
pub struct TrialOutcome {
    pub checker: Checker,
    pub dim: usize,
    pub trial: usize,
    pub seed: u64,
    pub inputs: TrialInputs,
    pub result: std::result::Result<Vec<InequalityReport>, Error>,
}

impl TrialOutcome {
    pub fn passed(&self) -> bool {
        matches!(&self.result, Ok(r) if r.iter().all(|r| r.pass))
    }

    /// Passed, with at least one statement holding only because its lesser
    /// side is `-inf`.
    pub fn vacuous(&self) -> bool {
        self.passed() && matches!(&self.result, Ok(r) if r.iter().any(|r| r.vacuous))
    }
}

/// Runs one trial from its seed; used by the suite and for replay.
pub fn run_trial(
    checker: Checker,
    dim: usize,
    trial: usize,
    seed: u64,
    config: &TrialConfig,
) -> TrialOutcome {
    let inputs = generate(checker, dim, seed, config);
    let result = evaluate(checker, &inputs, &config.options());
    TrialOutcome {
        checker,
        dim,
        trial,
        seed,
        inputs,
        result,
    }
}

/// Reruns trial `trial` of `checker` at size `dim` under `config`.
pub fn replay(checker: Checker, dim: usize, trial: usize, config: &TrialConfig) -> TrialOutcome {
    let seed = trial_seed(config.seed, checker, dim, trial);
    run_trial(checker, dim, trial, seed, config)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FailureRecord {
    pub dim: usize,
    pub trial: usize,
    pub seed: u64,
    pub error: Option<String>,
    pub failed_reports: Vec<InequalityReport>,
    pub inputs: Value,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SlackLocation {
    pub dim: usize,
    pub trial: usize,
    pub seed: u64,
    pub item: String,
    pub lhs: f64,
    pub rhs: f64,
    pub context: Value,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ItemSummary {
    pub reports: usize,
    pub min_slack: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckerSummary {
    pub checker: String,
    pub trials: usize,
    /// Passing trials with no vacuous statement.
    pub passes: usize,
    pub vacuous: usize,
    pub failures: usize,
    pub skipped_reports: usize,
    pub recorded_failures: Vec<FailureRecord>,
    pub min_slack: Option<f64>,
    pub argmin: Option<SlackLocation>,
    pub items: BTreeMap<String, ItemSummary>,
}

impl CheckerSummary {
    fn new(checker: Checker) -> Self {
        CheckerSummary {
            checker: checker.id().to_string(),
            trials: 0,
            passes: 0,
            vacuous: 0,
            failures: 0,
            skipped_reports: 0,
            recorded_failures: Vec::new(),
            min_slack: None,
            argmin: None,
            items: BTreeMap::new(),
        }
    }

    fn absorb(&mut self, outcome: &TrialOutcome) {
        self.trials += 1;
        if outcome.vacuous() {
            self.vacuous += 1;
        } else if outcome.passed() {
            self.passes += 1;
        } else {
            self.failures += 1;
            if self.recorded_failures.len() < MAX_RECORDED_FAILURES {
                let (error, failed_reports) = match &outcome.result {
                    Ok(r) => (None, r.iter().filter(|r| !r.pass).cloned().collect()),
                    Err(e) => (Some(e.to_string()), Vec::new()),
                };
                self.recorded_failures.push(FailureRecord {
                    dim: outcome.dim,
                    trial: outcome.trial,
                    seed: outcome.seed,
                    error,
                    failed_reports,
                    inputs: serde_json::to_value(&outcome.inputs).unwrap_or(Value::Null),
                });
            }
        }
        let Ok(reports) = &outcome.result else {
            return;
        };
        for r in reports {
            if r.kind == ReportKind::Skipped {
                self.skipped_reports += 1;
                continue;
            }
            let item = self.items.entry(r.item.clone()).or_insert(ItemSummary {
                reports: 0,
                min_slack: f64::INFINITY,
            });
            item.reports += 1;
            if r.slack < item.min_slack {
                item.min_slack = r.slack;
            }
            if self.min_slack.is_none_or(|m| r.slack < m) {
                self.min_slack = Some(r.slack);
                self.argmin = Some(SlackLocation {
                    dim: outcome.dim,
                    trial: outcome.trial,
                    seed: outcome.seed,
                    item: r.item.clone(),
                    lhs: r.lhs,
                    rhs: r.rhs,
                    context: r.context.clone(),
                });
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteReport {
    pub config: TrialConfig,
    pub total_trials: usize,
    pub total_failures: usize,
    pub checkers: Vec<CheckerSummary>,
    /// Excluded from the determinism contract.
    pub wall_time_seconds: f64,
}

impl SuiteReport {
    pub fn all_passed(&self) -> bool {
        self.total_failures == 0
    }

    pub fn summary(&self, checker: Checker) -> Option<&CheckerSummary> {
        self.checkers.iter().find(|c| c.checker == checker.id())
    }

    /// The report as JSON with the wall-time field removed.
    pub fn deterministic_json(&self) -> String {
        let mut v = serde_json::to_value(self).expect("serializable report");
        if let Value::Object(map) = &mut v {
            map.remove("wall_time_seconds");
        }
        serde_json::to_string_pretty(&v).expect("serializable report")
    }
}

#[derive(Debug, Serialize)]
struct CsvRow<'a> {
    checker: &'a str,
    dim: usize,
    trial: usize,
    lhs: f64,
    rhs: f64,
    slack: f64,
    pass: bool,
    vacuous: bool,
    seed: u64,
}

fn write_csv_rows<W: Write>(w: &mut csv::Writer<W>, outcome: &TrialOutcome) -> Result<()> {
    let checker = outcome.checker.id();
    let row = |lhs, rhs, slack, pass, vacuous| CsvRow {
        checker,
        dim: outcome.dim,
        trial: outcome.trial,
        lhs,
        rhs,
        slack,
        pass,
        vacuous,
        seed: outcome.seed,
    };
    match &outcome.result {
        Ok(reports) => {
            for r in reports {
                w.serialize(row(r.lhs, r.rhs, r.slack, r.pass, r.vacuous))
                    .map_err(|e| Error::Io(e.to_string()))?;
            }
        }
        Err(_) => w
            .serialize(row(f64::NAN, f64::NAN, f64::NAN, false, false))
            .map_err(|e| Error::Io(e.to_string()))?,
    }
    Ok(())
}

/// How trials are scheduled; results are identical either way.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Execution {
    Serial,
    Parallel { threads: Option<usize> },
}

impl Execution {
    /// Parallel unless `LOGMAJ_THREADS` is `1`; that variable caps the
    /// thread count.
    pub fn from_env() -> Self {
        match std::env::var(THREADS_ENV).ok().and_then(|v| v.parse::<usize>().ok()) {
            Some(1) => Execution::Serial,
            Some(t) if t > 1 => Execution::Parallel { threads: Some(t) },
            _ => Execution::Parallel { threads: None },
        }
    }
}

/// Runs the suite with scheduling taken from the environment.
pub fn run_suite(config: &TrialConfig) -> Result<SuiteReport> {
    run_suite_with(config, Execution::from_env())
}

pub fn run_suite_with(config: &TrialConfig, exec: Execution) -> Result<SuiteReport> {
    config.validate()?;
    match exec {
        Execution::Parallel {
            threads: Some(t),
        } => rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build()
            .map_err(|e| Error::ConfigInvalid(e.to_string()))?
            .install(|| run_inner(config, exec)),
        _ => run_inner(config, exec),
    }
}

fn run_inner(config: &TrialConfig, exec: Execution) -> Result<SuiteReport> {
    let start = Instant::now();
    let checkers = config.checkers()?;
    let mut csv_writer = match (&config.output, config.format) {
        (Some(path), OutputFormat::Csv) => Some(csv::Writer::from_writer(BufWriter::new(
            File::create(path)?,
        ))),
        _ => None,
    };
    let mut summaries = Vec::with_capacity(checkers.len());
    for &checker in &checkers {
        let mut summary = CheckerSummary::new(checker);
        for &dim in &config.dims {
            let mut begin = 0;
            while begin < config.trials {
                let end = (begin + CHUNK).min(config.trials);
                let task = |trial: usize| {
                    let seed = trial_seed(config.seed, checker, dim, trial);
                    run_trial(checker, dim, trial, seed, config)
                };
                let outcomes: Vec<TrialOutcome> = match exec {
                    Execution::Serial => (begin..end).map(task).collect(),
                    Execution::Parallel { .. } => (begin..end).into_par_iter().map(task).collect(),
                };
                for outcome in &outcomes {
                    summary.absorb(outcome);
                    if let Some(w) = csv_writer.as_mut() {
                        write_csv_rows(w, outcome)?;
                    }
                }
                begin = end;
            }
        }
        summaries.push(summary);
    }
    if let Some(mut w) = csv_writer {
        w.flush()?;
    }
    let report = SuiteReport {
        config: config.clone(),
        total_trials: summaries.iter().map(|s| s.trials).sum(),
        total_failures: summaries.iter().map(|s| s.failures).sum(),
        checkers: summaries,
        wall_time_seconds: start.elapsed().as_secs_f64(),
    };
    if let (Some(path), OutputFormat::Json) = (&config.output, config.format) {
        write_json(&report, path)?;
    }
    Ok(report)
}

pub fn write_json(report: &SuiteReport, path: &Path) -> Result<()> {
    let mut w = BufWriter::new(File::create(path)?);
    serde_json::to_writer_pretty(&mut w, report)?;
    w.write_all(b"\n")?;
    w.flush()?;
    Ok(())
}

/// One-line-per-checker text summary.
pub fn render_summary(report: &SuiteReport) -> String {
    let mut out = String::new();
    for c in &report.checkers {
        out.push_str(&format!(
            "{:<26} trials {:>6}  pass {:>6}  vacuous {:>4}  fail {:>4}  min slack {}\n",
            c.checker,
            c.trials,
            c.passes,
            c.vacuous,
            c.failures,
            c.min_slack.map_or("-".to_string(), |s| format!("{s:.3e}")),
        ));
    }
    out
}

/// Functionals of a single matrix for the `show` command.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ShowWhat {
    Mu,
    Lambda,
    Det,
    Cayley,
}

impl FromStr for ShowWhat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "mu" => Ok(ShowWhat::Mu),
            "lambda" => Ok(ShowWhat::Lambda),
            "det" => Ok(ShowWhat::Det),
            "cayley" => Ok(ShowWhat::Cayley),
            other => Err(Error::ConfigInvalid(format!("unknown quantity `{other}`"))),
        }
    }
}

pub fn read_matrix(path: &Path) -> Result<ComplexMatrix> {
    let text = std::fs::read_to_string(path)?;
    serde_json::from_str(&text).map_err(|e| Error::Parse(e.to_string()))
}

/// Renders the requested functional of `x` as JSON.
pub fn show(x: &ComplexMatrix, what: ShowWhat) -> Result<Value> {
    use crate::spectral;
    Ok(match what {
        ShowWhat::Mu => json!({ "mu": spectral::mu(x)? }),
        ShowWhat::Lambda => json!({ "lambda": spectral::lambda_scale(x)? }),
        ShowWhat::Det => {
            let log_det = spectral::log_fk_det(x)?.to_f64();
            json!({
                "fk_det": spectral::fk_det(x)?,
                "log_fk_det": if log_det.is_finite() { json!(log_det) } else { json!("-inf") },
                "op_norm": linalg::svd(x, JACOBI_TOL)?.sigma_max(),
            })
        }
        ShowWhat::Cayley => {
            let c = linalg::cayley(x)?;
            json!({ "cayley": c, "mu": spectral::mu(&c)? })
        }
    })
}
