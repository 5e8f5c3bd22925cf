//! From matrices to singular value functions, spectral scales and
//! determinants in the tracial algebra `(M_n(C), tr/n)`.
//!
//! Everything determinant-like is computed in log space and exponentiated
//! only at the boundary.

use crate::error::{Error, Result};
use crate::linalg::{self, ComplexMatrix, JACOBI_TOL};
use crate::stepfn::{ExtendedLogValue, IntervalSet, StepFunction};

/// Relative Hermitian defect accepted by [`lambda_scale`].
pub const HERMITIAN_TOL: f64 = 1e-12;

/// The normalized trace `τ_n = tr/n` on `M_n(C)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TracialContext {
    pub n: usize,
}

impl TracialContext {
    pub fn new(n: usize) -> Self {
        TracialContext { n }
    }

    pub fn trace(&self, x: &ComplexMatrix) -> linalg::C64 {
        x.trace() / self.n as f64
    }

    /// `τ(|x|)`, the mean singular value.
    pub fn trace_abs(&self, x: &ComplexMatrix) -> Result<f64> {
        Ok(mu(x)?.integrate_map(&IntervalSet::unit(), |v| v))
    }
}

/// Singular value function: `s_j` on `[(j-1)/n, j/n)`.
pub fn mu(x: &ComplexMatrix) -> Result<StepFunction> {
    let s = linalg::svd(x, JACOBI_TOL)?;
    StepFunction::dyadic(&s.sigma)
}

/// Spectral scale of a Hermitian matrix: eigenvalues (descending) on the
/// pieces `[(j-1)/n, j/n)`.
pub fn lambda_scale(h: &ComplexMatrix) -> Result<StepFunction> {
    let defect = h.hermitian_defect();
    let norm = h.frobenius_norm();
    if defect > HERMITIAN_TOL * norm {
        return Err(Error::NotHermitian(defect / norm));
    }
    let eig = linalg::herm_eig(&h.re_part(), JACOBI_TOL)?;
    StepFunction::dyadic(&eig.eigenvalues)
}

/// `log Δ(x) = (1/n) Σ log s_j`, `-inf` when some `s_j = 0`.
pub fn log_fk_det(x: &ComplexMatrix) -> Result<ExtendedLogValue> {
    Ok(mu(x)?.integrate_log(&IntervalSet::unit()))
}

/// Fuglede-Kadison determinant `(det |x|)^{1/n}`.
pub fn fk_det(x: &ComplexMatrix) -> Result<f64> {
    Ok(log_fk_det(x)?.exp())
}

/// `log |det x| = n · log Δ(x)`.
pub fn log_abs_det(x: &ComplexMatrix) -> Result<ExtendedLogValue> {
    Ok(log_fk_det(x)?.scale(x.dim() as f64))
}

/// `∫_0^t log μ_s(x) ds`.
pub fn log_big_lambda(x: &ComplexMatrix, t: f64) -> Result<ExtendedLogValue> {
    if !(t > 0.0 && t <= 1.0) {
        return Err(Error::OutOfDomain {
            value: t,
            domain: "(0, 1]",
        });
    }
    Ok(mu(x)?.integrate_log(&IntervalSet::prefix(t)?))
}

/// `Λ_t(x) = exp ∫_0^t log μ_s(x) ds`.
pub fn big_lambda(x: &ComplexMatrix, t: f64) -> Result<f64> {
    Ok(log_big_lambda(x, t)?.exp())
}

/// Which spectral discretization of a positive matrix to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DyadicGrid {
    /// Grid `j‖x‖/2^k` anchored at 0; eigenvalues are rounded up, so
    /// `x ≤ x_{k+1} ≤ x_k`.
    Upper,
    /// Grid `δ + j(‖x‖-δ)/2^k` anchored at `δ = λ_min(x) > 0`; eigenvalues are
    /// rounded down, so `x_k ≤ x_{k+1} ≤ x` and all `x_k` stay invertible.
    Lower,
}

/// `f_k(x)` for the step function `f_k` that snaps the spectrum of a positive
/// matrix to a grid of `2^k` cells, in the same eigenbasis. Satisfies
/// `‖x - x_k‖ ≤ range / 2^k`.
pub fn dyadic_approx(x: &ComplexMatrix, k: u32, grid: DyadicGrid) -> Result<ComplexMatrix> {
    let defect = x.hermitian_defect();
    if defect > HERMITIAN_TOL * x.frobenius_norm() {
        return Err(Error::NotHermitian(defect / x.frobenius_norm()));
    }
    let eig = linalg::herm_eig(&x.re_part(), JACOBI_TOL)?;
    let top = eig.eigenvalues[0];
    let bottom = *eig.eigenvalues.last().unwrap();
    if bottom < -HERMITIAN_TOL * top.abs().max(1.0) {
        return Err(Error::NotPositive(bottom));
    }
    let cells = 2f64.powi(k as i32);
    let cells_max = cells - 1.0;
    let snap: Box<dyn Fn(f64) -> f64> = match grid {
        DyadicGrid::Upper => {
            if top <= 0.0 {
                return Ok(ComplexMatrix::zeros(x.dim()));
            }
            let width = top / cells;
            Box::new(move |v: f64| {
                let j = (v.max(0.0) / width).floor() + 1.0;
                j.min(cells) * width
            })
        }
        DyadicGrid::Lower => {
            if bottom <= 0.0 {
                return Err(Error::NotPositiveInvertible(bottom));
            }
            let range = top - bottom;
            if range == 0.0 {
                return Ok(eig.reconstruct());
            }
            let width = range / cells;
            Box::new(move |v: f64| {
                let j = ((v - bottom).max(0.0) / width).floor().min(cells_max);
                bottom + j * width
            })
        }
    };
    Ok(eig.apply(snap))
}

/// Width of the grid used by [`dyadic_approx`] (`‖x‖` or `‖x‖ - λ_min`).
pub fn dyadic_range(x: &ComplexMatrix, grid: DyadicGrid) -> Result<f64> {
    let eig = linalg::herm_eig(&x.re_part(), JACOBI_TOL)?;
    let top = eig.eigenvalues[0];
    Ok(match grid {
        DyadicGrid::Upper => top,
        DyadicGrid::Lower => top - eig.eigenvalues.last().unwrap(),
    })
}
