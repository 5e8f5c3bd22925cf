//! Closed-form references that never touch the Jacobi kernels.
//!
//! Diagonal matrices have singular values `|d_j|` and, when real, eigenvalues
//! `d_j`; scalar contractions give the Harnack quantities in closed form; a
//! midpoint rule audits the exact step-function integrals; and a pivoted LU
//! factorization gives `log |det x|` along an independent route.

use crate::error::{Error, Result};
use crate::linalg::{ComplexMatrix, C64};
use crate::stepfn::{IntervalSet, StepFunction};

/// Diagonal entries `d_1, ..., d_n` of a diagonal matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct DiagonalSpec {
    pub entries: Vec<C64>,
}

impl DiagonalSpec {
    pub fn new(entries: Vec<C64>) -> Self {
        DiagonalSpec { entries }
    }

    pub fn real(d: &[f64]) -> Self {
        DiagonalSpec {
            entries: d.iter().map(|&v| C64::new(v, 0.0)).collect(),
        }
    }

    pub fn to_matrix(&self) -> ComplexMatrix {
        ComplexMatrix::from_diag(&self.entries)
    }

    /// Entry-wise reciprocal; real entries take the correctly rounded `1/v`.
    pub fn recip(&self) -> DiagonalSpec {
        DiagonalSpec {
            entries: self
                .entries
                .iter()
                .map(|z| if z.im == 0.0 { C64::new(1.0 / z.re, 0.0) } else { z.inv() })
                .collect(),
        }
    }
}

fn sorted_desc(mut v: Vec<f64>) -> Vec<f64> {
    v.sort_by(|a, b| b.partial_cmp(a).unwrap());
    v
}

/// `|d_j|` sorted descending on the pieces `[(j-1)/n, j/n)`.
pub fn diag_mu(spec: &DiagonalSpec) -> StepFunction {
    let moduli = sorted_desc(spec.entries.iter().map(|z| z.norm()).collect());
    StepFunction::dyadic(&moduli).expect("sorted finite moduli")
}

/// Real parts sorted descending: the spectral scale of a real diagonal.
pub fn diag_lambda(spec: &DiagonalSpec) -> StepFunction {
    let vals = sorted_desc(spec.entries.iter().map(|z| z.re).collect());
    StepFunction::dyadic(&vals).expect("sorted finite values")
}

/// Midpoint rule for `∫_K log f` with `m` equal cells per interval of `K`.
pub fn brute_integral(f: &StepFunction, k: &IntervalSet, m: usize) -> Result<f64> {
    if m == 0 {
        return Err(Error::OutOfDomain {
            value: 0.0,
            domain: "m >= 1",
        });
    }
    let mut acc = 0.0;
    for &(a, b) in k.intervals() {
        let h = (b - a) / m as f64;
        for i in 0..m {
            let s = a + (i as f64 + 0.5) * h;
            let v = f.eval_right(s)?;
            if v <= 0.0 {
                return Err(Error::ZeroOnK);
            }
            acc += h * v.ln();
        }
    }
    Ok(acc)
}

/// Harnack quantities for the 1×1 contraction `r`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScalarHarnack {
    /// `(1 - r^2) / (1 - r)^2`
    pub middle: f64,
    /// `(1 + r) / (1 - r)`
    pub upper: f64,
    /// `(1 - r) / (1 + r)`
    pub lower: f64,
}

pub fn scalar_harnack(r: f64) -> Result<ScalarHarnack> {
    if !(0.0..1.0).contains(&r) {
        return Err(Error::OutOfRange(r));
    }
    Ok(ScalarHarnack {
        middle: (1.0 + r) / (1.0 - r),
        upper: (1.0 + r) / (1.0 - r),
        lower: (1.0 - r) / (1.0 + r),
    })
}

/// `log |det x|` from LU with partial pivoting; `-inf` for an exactly zero
/// pivot.
pub fn lu_log_abs_det(x: &ComplexMatrix) -> f64 {
    let n = x.dim();
    let mut a: Vec<C64> = x.entries().to_vec();
    let mut acc = 0.0;
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&i, &j| a[i * n + col].norm().partial_cmp(&a[j * n + col].norm()).unwrap())
            .unwrap();
        if a[pivot * n + col].norm() == 0.0 {
            return f64::NEG_INFINITY;
        }
        if pivot != col {
            for j in 0..n {
                a.swap(pivot * n + j, col * n + j);
            }
        }
        let d = a[col * n + col];
        acc += d.norm().ln();
        for i in col + 1..n {
            let factor = a[i * n + col] / d;
            for j in col..n {
                let v = a[col * n + j];
                a[i * n + j] -= factor * v;
            }
        }
    }
    acc
}
