//! Dense complex matrices and the Jacobi kernels used everywhere else.
//!
//! Hermitian matrices are diagonalized with the cyclic two-sided Jacobi
//! method and general matrices are factored with one-sided (Hestenes) Jacobi
//! SVD. Both use the same complex 2×2 rotation: for a Hermitian pivot block
//! `[[a_pp, a_pq], [conj(a_pq), a_qq]]` the phase of `a_pq` is stripped, a real
//! Jacobi rotation is applied, and the phase is restored.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Sub};

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type C64 = Complex64;

/// Default Jacobi convergence threshold, relative to the Frobenius norm.
pub const JACOBI_TOL: f64 = 1e-14;
/// Full sweeps before a Jacobi kernel gives up.
pub const MAX_SWEEPS: usize = 30;
/// `sigma_min <= SINGULAR_RATIO * sigma_max` is treated as singular.
pub const SINGULAR_RATIO: f64 = 1e-13;

const I: C64 = C64::new(0.0, 1.0);

/// A square complex matrix stored row-major.
#[derive(Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "MatrixFile", into = "MatrixFile")]
pub struct ComplexMatrix {
    n: usize,
    data: Vec<C64>,
}

/// On-disk form: `{"n": 2, "entries": [[re, im], ...]}`, row-major.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MatrixFile {
    pub n: usize,
    pub entries: Vec<[f64; 2]>,
}

impl TryFrom<MatrixFile> for ComplexMatrix {
    type Error = Error;

    fn try_from(f: MatrixFile) -> Result<Self> {
        if f.n == 0 || f.entries.len() != f.n * f.n {
            return Err(Error::Parse(format!(
                "expected {} entries for n = {}, found {}",
                f.n * f.n,
                f.n,
                f.entries.len()
            )));
        }
        if f.entries.iter().flatten().any(|v| !v.is_finite()) {
            return Err(Error::Parse("matrix entries must be finite".into()));
        }
        Ok(ComplexMatrix {
            n: f.n,
            data: f.entries.iter().map(|&[re, im]| C64::new(re, im)).collect(),
        })
    }
}

impl From<ComplexMatrix> for MatrixFile {
    fn from(m: ComplexMatrix) -> Self {
        MatrixFile {
            n: m.n,
            entries: m.data.iter().map(|z| [z.re, z.im]).collect(),
        }
    }
}

impl ComplexMatrix {
    pub fn zeros(n: usize) -> Self {
        ComplexMatrix {
            n,
            data: vec![C64::new(0.0, 0.0); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |i, j| if i == j { C64::new(1.0, 0.0) } else { C64::new(0.0, 0.0) })
    }

    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> C64) -> Self {
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                data.push(f(i, j));
            }
        }
        ComplexMatrix { n, data }
    }

    /// Row-major entries; panics if `entries.len() != n * n`.
    pub fn from_row_major(n: usize, entries: Vec<C64>) -> Self {
        assert_eq!(entries.len(), n * n, "expected {} entries", n * n);
        ComplexMatrix { n, data: entries }
    }

    /// Real matrix from nested rows.
    pub fn from_real_rows(rows: &[&[f64]]) -> Self {
        let n = rows.len();
        Self::from_fn(n, |i, j| C64::new(rows[i][j], 0.0))
    }

    pub fn from_diag(d: &[C64]) -> Self {
        Self::from_fn(d.len(), |i, j| if i == j { d[i] } else { C64::new(0.0, 0.0) })
    }

    pub fn from_real_diag(d: &[f64]) -> Self {
        Self::from_fn(d.len(), |i, j| {
            if i == j {
                C64::new(d[i], 0.0)
            } else {
                C64::new(0.0, 0.0)
            }
        })
    }

    pub fn scalar(z: C64) -> Self {
        ComplexMatrix { n: 1, data: vec![z] }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &[C64] {
        &self.data
    }

    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.n, |i, j| self[(j, i)].conj())
    }

    pub fn scale(&self, c: C64) -> Self {
        ComplexMatrix {
            n: self.n,
            data: self.data.iter().map(|z| z * c).collect(),
        }
    }

    pub fn scale_real(&self, c: f64) -> Self {
        ComplexMatrix {
            n: self.n,
            data: self.data.iter().map(|z| z * c).collect(),
        }
    }

    /// `self + c·I`.
    pub fn add_identity(&self, c: C64) -> Self {
        let mut out = self.clone();
        for i in 0..self.n {
            out[(i, i)] += c;
        }
        out
    }

    /// `(x + x*)/2`, exactly Hermitian.
    pub fn re_part(&self) -> Self {
        Self::from_fn(self.n, |i, j| (self[(i, j)] + self[(j, i)].conj()) * 0.5)
    }

    /// `(x - x*)/(2i)`, exactly Hermitian.
    pub fn im_part(&self) -> Self {
        Self::from_fn(self.n, |i, j| (self[(i, j)] - self[(j, i)].conj()) * C64::new(0.0, -0.5))
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// `‖x - x*‖_F`.
    pub fn hermitian_defect(&self) -> f64 {
        let mut acc = 0.0;
        for i in 0..self.n {
            for j in 0..self.n {
                acc += (self[(i, j)] - self[(j, i)].conj()).norm_sqr();
            }
        }
        acc.sqrt()
    }

    pub fn is_hermitian(&self, rel_tol: f64) -> bool {
        self.hermitian_defect() <= rel_tol * self.frobenius_norm()
    }

    pub fn trace(&self) -> C64 {
        (0..self.n).map(|i| self[(i, i)]).sum()
    }

    pub fn column(&self, j: usize) -> Vec<C64> {
        (0..self.n).map(|i| self[(i, j)]).collect()
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|z| z.re.is_finite() && z.im.is_finite())
    }

    pub fn matmul(&self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.n, rhs.n, "dimension mismatch");
        let n = self.n;
        let mut out = ComplexMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.data[i * n + k];
                if a == C64::new(0.0, 0.0) {
                    continue;
                }
                let row = &rhs.data[k * n..(k + 1) * n];
                let dst = &mut out.data[i * n..(i + 1) * n];
                for (d, b) in dst.iter_mut().zip(row) {
                    *d += a * b;
                }
            }
        }
        out
    }

    /// `self · diag(d)`
    fn scale_cols(&self, d: &[f64]) -> ComplexMatrix {
        Self::from_fn(self.n, |i, j| self[(i, j)] * d[j])
    }

    // A ← A·U on columns p, q where U = [[c, s·e], [-s·conj(e), c]].
    fn rotate_cols(&mut self, p: usize, q: usize, c: f64, s: f64, e: C64) {
        let n = self.n;
        for r in 0..n {
            let ap = self.data[r * n + p];
            let aq = self.data[r * n + q];
            self.data[r * n + p] = ap * c - aq * (e.conj() * s);
            self.data[r * n + q] = ap * (e * s) + aq * c;
        }
    }

    // A ← U*·A on rows p, q.
    fn rotate_rows(&mut self, p: usize, q: usize, c: f64, s: f64, e: C64) {
        let n = self.n;
        for col in 0..n {
            let ap = self.data[p * n + col];
            let aq = self.data[q * n + col];
            self.data[p * n + col] = ap * c - aq * (e * s);
            self.data[q * n + col] = ap * (e.conj() * s) + aq * c;
        }
    }
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = C64;

    fn index(&self, (i, j): (usize, usize)) -> &C64 {
        &self.data[i * self.n + j]
    }
}

impl IndexMut<(usize, usize)> for ComplexMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut C64 {
        &mut self.data[i * self.n + j]
    }
}

impl Mul for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn mul(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        self.matmul(rhs)
    }
}

impl Add for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn add(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.n, rhs.n, "dimension mismatch");
        ComplexMatrix {
            n: self.n,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn sub(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.n, rhs.n, "dimension mismatch");
        ComplexMatrix {
            n: self.n,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl fmt::Debug for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ComplexMatrix({}×{})", self.n, self.n)?;
        for i in 0..self.n {
            write!(f, "  [")?;
            for j in 0..self.n {
                let z = self[(i, j)];
                write!(f, " {:+.6e}{:+.6e}i", z.re, z.im)?;
            }
            writeln!(f, " ]")?;
        }
        Ok(())
    }
}

/// Eigendecomposition `h = basis · diag(eigenvalues) · basis*`, eigenvalues
/// descending.
#[derive(Debug, Clone)]
pub struct SpectralData {
    pub eigenvalues: Vec<f64>,
    pub basis: ComplexMatrix,
}

impl SpectralData {
    pub fn reconstruct(&self) -> ComplexMatrix {
        self.apply(|v| v)
    }

    /// `basis · diag(f(eigenvalues)) · basis*`, i.e. the functional calculus.
    pub fn apply(&self, f: impl Fn(f64) -> f64) -> ComplexMatrix {
        let d: Vec<f64> = self.eigenvalues.iter().map(|&v| f(v)).collect();
        self.basis.scale_cols(&d).matmul(&self.basis.adjoint())
    }
}

/// `x = left · diag(sigma) · right*`, sigma descending.
#[derive(Debug, Clone)]
pub struct SingularData {
    pub left: ComplexMatrix,
    pub sigma: Vec<f64>,
    pub right: ComplexMatrix,
}

impl SingularData {
    pub fn reconstruct(&self) -> ComplexMatrix {
        self.left.scale_cols(&self.sigma).matmul(&self.right.adjoint())
    }

    pub fn sigma_max(&self) -> f64 {
        self.sigma.first().copied().unwrap_or(0.0)
    }

    pub fn sigma_min(&self) -> f64 {
        self.sigma.last().copied().unwrap_or(0.0)
    }
}

/// Rotation `(c, s, e)` annihilating the off-diagonal entry of the Hermitian
/// block `[[app, apq], [conj(apq), aqq]]`, plus the shift `t·|apq|` applied to
/// the diagonal (`app - t|apq|`, `aqq + t|apq|`).
fn hermitian_rotation(app: f64, aqq: f64, apq: C64) -> (f64, f64, C64, f64) {
    let b = apq.norm();
    let e = apq / b;
    let theta = (aqq - app) / (2.0 * b);
    let t = if theta.is_infinite() {
        0.5 / theta
    } else {
        theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
    };
    let c = 1.0 / (t * t + 1.0).sqrt();
    (c, t * c, e, t * b)
}

fn descending_order(vals: &[f64]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..vals.len()).collect();
    idx.sort_by(|&a, &b| vals[b].partial_cmp(&vals[a]).unwrap_or(std::cmp::Ordering::Equal));
    idx
}

fn permute_cols(m: &ComplexMatrix, order: &[usize]) -> ComplexMatrix {
    ComplexMatrix::from_fn(m.n, |i, j| m[(i, order[j])])
}

fn off_diagonal_norm(a: &ComplexMatrix) -> f64 {
    let n = a.n;
    let mut acc = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                acc += a[(i, j)].norm_sqr();
            }
        }
    }
    acc.sqrt()
}

/// Cyclic Jacobi diagonalization of a Hermitian matrix.
///
/// `tol` bounds both the accepted Hermitian defect `‖h - h*‖_F` and the
/// off-diagonal mass at convergence, each relative to `‖h‖_F`.
pub fn herm_eig(h: &ComplexMatrix, tol: f64) -> Result<SpectralData> {
    let n = h.dim();
    let norm = h.frobenius_norm();
    let defect = h.hermitian_defect();
    if defect > tol * norm {
        return Err(Error::NotHermitian(defect / norm));
    }
    let mut a = h.re_part();
    let mut v = ComplexMatrix::identity(n);
    let target = tol * norm;

    let mut converged = off_diagonal_norm(&a) <= target;
    let mut sweeps = 0;
    while !converged {
        if sweeps == MAX_SWEEPS {
            return Err(Error::NoConvergence {
                sweeps,
                residual: off_diagonal_norm(&a) / norm,
            });
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[(p, q)];
                if apq.norm() == 0.0 {
                    continue;
                }
                let app = a[(p, p)].re;
                let aqq = a[(q, q)].re;
                let (c, s, e, shift) = hermitian_rotation(app, aqq, apq);
                a.rotate_cols(p, q, c, s, e);
                a.rotate_rows(p, q, c, s, e);
                v.rotate_cols(p, q, c, s, e);
                a[(p, p)] = C64::new(app - shift, 0.0);
                a[(q, q)] = C64::new(aqq + shift, 0.0);
                a[(p, q)] = C64::new(0.0, 0.0);
                a[(q, p)] = C64::new(0.0, 0.0);
            }
        }
        converged = off_diagonal_norm(&a) <= target;
    }

    let diag: Vec<f64> = (0..n).map(|i| a[(i, i)].re).collect();
    let order = descending_order(&diag);
    Ok(SpectralData {
        eigenvalues: order.iter().map(|&i| diag[i]).collect(),
        basis: permute_cols(&v, &order),
    })
}

/// One-sided Jacobi SVD. Column pairs are rotated until every pair is
/// orthogonal to within `tol` relative to the product of their norms.
pub fn svd(x: &ComplexMatrix, tol: f64) -> Result<SingularData> {
    let n = x.dim();
    let mut w = x.clone();
    let mut v = ComplexMatrix::identity(n);

    let mut sweeps = 0;
    loop {
        let mut worst: f64 = 0.0;
        for p in 0..n {
            for q in p + 1..n {
                let mut alpha = 0.0;
                let mut beta = 0.0;
                let mut gamma = C64::new(0.0, 0.0);
                for r in 0..n {
                    let wp = w.data[r * n + p];
                    let wq = w.data[r * n + q];
                    alpha += wp.norm_sqr();
                    beta += wq.norm_sqr();
                    gamma += wp.conj() * wq;
                }
                if alpha == 0.0 || beta == 0.0 || gamma.norm() == 0.0 {
                    continue;
                }
                let ratio = gamma.norm() / (alpha * beta).sqrt();
                worst = worst.max(ratio);
                if ratio <= tol {
                    continue;
                }
                let (c, s, e, _) = hermitian_rotation(alpha, beta, gamma);
                w.rotate_cols(p, q, c, s, e);
                v.rotate_cols(p, q, c, s, e);
            }
        }
        if worst <= tol {
            break;
        }
        if sweeps == MAX_SWEEPS {
            return Err(Error::NoConvergence {
                sweeps,
                residual: worst,
            });
        }
        sweeps += 1;
    }

    let norms: Vec<f64> = (0..n)
        .map(|j| (0..n).map(|r| w[(r, j)].norm_sqr()).sum::<f64>().sqrt())
        .collect();
    let order = descending_order(&norms);
    let sigma: Vec<f64> = order.iter().map(|&j| norms[j]).collect();
    let candidates: Vec<Vec<C64>> = order
        .iter()
        .map(|&j| {
            if norms[j] > 0.0 {
                w.column(j).iter().map(|z| z / norms[j]).collect()
            } else {
                vec![C64::new(0.0, 0.0); n]
            }
        })
        .collect();
    let left = orthonormal_completion(n, candidates);
    Ok(SingularData {
        left,
        sigma,
        right: permute_cols(&v, &order),
    })
}

/// Modified Gram-Schmidt (two passes) over the candidate columns; candidates
/// that collapse are replaced by orthogonalized standard basis vectors.
fn orthonormal_completion(n: usize, candidates: Vec<Vec<C64>>) -> ComplexMatrix {
    let mut basis: Vec<Vec<C64>> = Vec::with_capacity(n);
    let mut fallback = 0;
    for cand in candidates {
        let mut vtx = orthogonalize(&basis, cand);
        let mut nrm = vec_norm(&vtx);
        while nrm < 0.5 {
            let mut e = vec![C64::new(0.0, 0.0); n];
            e[fallback % n] = C64::new(1.0, 0.0);
            fallback += 1;
            vtx = orthogonalize(&basis, e);
            nrm = vec_norm(&vtx);
        }
        basis.push(vtx.iter().map(|z| z / nrm).collect());
    }
    ComplexMatrix::from_fn(n, |i, j| basis[j][i])
}

fn orthogonalize(basis: &[Vec<C64>], mut v: Vec<C64>) -> Vec<C64> {
    for _ in 0..2 {
        for b in basis {
            let proj: C64 = b.iter().zip(&v).map(|(bi, vi)| bi.conj() * vi).sum();
            for (vi, bi) in v.iter_mut().zip(b) {
                *vi -= proj * bi;
            }
        }
    }
    v
}

fn vec_norm(v: &[C64]) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

/// Largest singular value.
pub fn op_norm(x: &ComplexMatrix) -> f64 {
    svd(x, JACOBI_TOL).map(|s| s.sigma_max()).unwrap_or(f64::NAN)
}

/// `sigma_max / sigma_min` (infinite for singular input).
pub fn condition_number(x: &ComplexMatrix) -> Result<f64> {
    let s = svd(x, JACOBI_TOL)?;
    Ok(s.sigma_max() / s.sigma_min())
}

/// Inverse through the SVD: `right · diag(1/sigma) · left*`.
pub fn inverse(x: &ComplexMatrix) -> Result<ComplexMatrix> {
    let s = svd(x, JACOBI_TOL)?;
    let smax = s.sigma_max();
    let smin = s.sigma_min();
    if smax == 0.0 || smin <= SINGULAR_RATIO * smax {
        return Err(Error::Singular(if smax == 0.0 { 0.0 } else { smin / smax }));
    }
    let inv_sigma: Vec<f64> = s.sigma.iter().map(|v| 1.0 / v).collect();
    Ok(s.right.scale_cols(&inv_sigma).matmul(&s.left.adjoint()))
}

/// `(x - i·I)(x + i·I)^{-1}`.
pub fn cayley(x: &ComplexMatrix) -> Result<ComplexMatrix> {
    let plus = x.add_identity(I);
    let minus = x.add_identity(-I);
    Ok(minus.matmul(&inverse(&plus)?))
}

/// Square root of a positive semidefinite matrix; tiny negative eigenvalues
/// from rounding are clamped to zero.
pub fn sqrt_psd(h: &ComplexMatrix) -> Result<ComplexMatrix> {
    let eig = herm_eig(&h.re_part(), JACOBI_TOL)?;
    Ok(eig.apply(|v| v.max(0.0).sqrt()))
}

/// `|x| = (x* x)^{1/2}`, built from the SVD as `right · diag(sigma) · right*`.
pub fn abs(x: &ComplexMatrix) -> Result<ComplexMatrix> {
    let s = svd(x, JACOBI_TOL)?;
    Ok(s.right.scale_cols(&s.sigma).matmul(&s.right.adjoint()))
}

/// `|x|^alpha` for `alpha > 0`.
pub fn abs_pow(x: &ComplexMatrix, alpha: f64) -> Result<ComplexMatrix> {
    let s = svd(x, JACOBI_TOL)?;
    let p: Vec<f64> = s.sigma.iter().map(|v| v.powf(alpha)).collect();
    Ok(s.right.scale_cols(&p).matmul(&s.right.adjoint()))
}

/// `n × n` matrix of i.i.d. standard complex Gaussians (`E|z|^2 = 1`).
pub fn complex_gaussian<R: Rng + ?Sized>(rng: &mut R, n: usize) -> ComplexMatrix {
    let scale = std::f64::consts::FRAC_1_SQRT_2;
    let data = (0..n * n)
        .map(|_| {
            let re: f64 = rng.sample(StandardNormal);
            let im: f64 = rng.sample(StandardNormal);
            C64::new(re * scale, im * scale)
        })
        .collect();
    ComplexMatrix { n, data }
}

/// Haar-distributed unitary: QR of a complex Gaussian with `R`'s diagonal
/// made positive (Gram-Schmidt produces that normalization directly).
pub fn haar_unitary_with<R: Rng + ?Sized>(rng: &mut R, n: usize) -> ComplexMatrix {
    loop {
        let g = complex_gaussian(rng, n);
        let mut basis: Vec<Vec<C64>> = Vec::with_capacity(n);
        let mut ok = true;
        for j in 0..n {
            let v = orthogonalize(&basis, g.column(j));
            let nrm = vec_norm(&v);
            if !(nrm > 1e-8) {
                ok = false;
                break;
            }
            basis.push(v.iter().map(|z| z / nrm).collect());
        }
        if ok {
            return ComplexMatrix::from_fn(n, |i, j| basis[j][i]);
        }
    }
}

/// Deterministic Haar unitary from a seed (ChaCha8 stream).
pub fn haar_unitary(n: usize, seed: u64) -> ComplexMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    haar_unitary_with(&mut rng, n)
}

/// `‖u* u - I‖_F`.
pub fn unitarity_defect(u: &ComplexMatrix) -> f64 {
    (&u.adjoint().matmul(u) - &ComplexMatrix::identity(u.dim())).frobenius_norm()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    fn random_matrix(n: usize, seed: u64) -> ComplexMatrix {
        complex_gaussian(&mut ChaCha8Rng::seed_from_u64(seed), n)
    }

    #[test]
    fn eig_of_diagonal() {
        let h = ComplexMatrix::from_real_diag(&[1.0, -2.0]);
        let e = herm_eig(&h, JACOBI_TOL).unwrap();
        assert_eq!(e.eigenvalues, vec![1.0, -2.0]);
        assert_eq!(e.basis, ComplexMatrix::identity(2));

        let e = herm_eig(&ComplexMatrix::identity(5), JACOBI_TOL).unwrap();
        assert!(e.eigenvalues.iter().all(|&v| v == 1.0));

        let h = ComplexMatrix::from_real_diag(&[-3.0, 2.0, 7.0]);
        let e = herm_eig(&h, JACOBI_TOL).unwrap();
        assert_eq!(e.eigenvalues, vec![7.0, 2.0, -3.0]);
    }

    #[test]
    fn eig_of_pauli_y() {
        let h = ComplexMatrix::from_row_major(2, vec![c(0., 0.), c(0., -1.), c(0., 1.), c(0., 0.)]);
        let e = herm_eig(&h, JACOBI_TOL).unwrap();
        assert!((e.eigenvalues[0] - 1.0).abs() < 1e-15);
        assert!((e.eigenvalues[1] + 1.0).abs() < 1e-15);
        assert!((&e.reconstruct() - &h).frobenius_norm() < 1e-15);
    }

    #[test]
    fn eig_rejects_non_hermitian() {
        let x = ComplexMatrix::from_real_rows(&[&[1.0, 1.0], &[0.0, 1.0]]);
        assert!(matches!(herm_eig(&x, JACOBI_TOL), Err(Error::NotHermitian(_))));
    }

    #[test]
    fn eig_reconstructs_random_hermitian() {
        for n in [1, 2, 3, 5, 8, 16] {
            let h = random_matrix(n, 11 + n as u64).re_part();
            let e = herm_eig(&h, JACOBI_TOL).unwrap();
            let err = (&e.reconstruct() - &h).frobenius_norm();
            assert!(err <= 1e-10 * h.frobenius_norm(), "n={n} err={err:e}");
            assert!(unitarity_defect(&e.basis) < 1e-12);
            assert!(e.eigenvalues.windows(2).all(|w| w[0] >= w[1]));
        }
    }

    #[test]
    fn svd_examples() {
        let s = svd(&ComplexMatrix::from_real_diag(&[3.0, 1.0]), JACOBI_TOL).unwrap();
        assert_eq!(s.sigma, vec![3.0, 1.0]);
        let s = svd(&ComplexMatrix::from_real_diag(&[1.0, 3.0]), JACOBI_TOL).unwrap();
        assert_eq!(s.sigma, vec![3.0, 1.0]);
        assert!((&s.reconstruct() - &ComplexMatrix::from_real_diag(&[1.0, 3.0])).frobenius_norm() == 0.0);

        let u = haar_unitary(6, 3);
        let s = svd(&u, JACOBI_TOL).unwrap();
        assert!(s.sigma.iter().all(|v| (v - 1.0).abs() < 1e-13));
    }

    #[test]
    fn svd_reconstructs_random_and_rank_deficient() {
        for n in [1, 2, 4, 7, 16] {
            let x = random_matrix(n, 100 + n as u64);
            let s = svd(&x, JACOBI_TOL).unwrap();
            let err = (&s.reconstruct() - &x).frobenius_norm();
            assert!(err <= 1e-10 * x.frobenius_norm(), "n={n} err={err:e}");
            assert!(unitarity_defect(&s.left) < 1e-12);
            assert!(unitarity_defect(&s.right) < 1e-12);
        }
        // rank one
        let u: Vec<C64> = vec![c(1., 2.), c(0., -1.), c(3., 0.5)];
        let w: Vec<C64> = vec![c(0.5, 0.), c(-1., 1.), c(2., 0.)];
        let x = ComplexMatrix::from_fn(3, |i, j| u[i] * w[j].conj());
        let s = svd(&x, JACOBI_TOL).unwrap();
        assert!(s.sigma[1] < 1e-14 * s.sigma[0]);
        assert!(unitarity_defect(&s.left) < 1e-12);
        assert!((&s.reconstruct() - &x).frobenius_norm() <= 1e-13 * x.frobenius_norm());
        // zero matrix
        let s = svd(&ComplexMatrix::zeros(3), JACOBI_TOL).unwrap();
        assert_eq!(s.sigma, vec![0.0; 3]);
        assert!(unitarity_defect(&s.left) < 1e-15);
    }

    #[test]
    fn inverse_examples() {
        let x = ComplexMatrix::from_real_diag(&[4.0, 0.25]);
        let inv = inverse(&x).unwrap();
        assert!((&inv - &ComplexMatrix::from_real_diag(&[0.25, 4.0])).frobenius_norm() < 1e-15);
        assert!((&inverse(&ComplexMatrix::identity(3)).unwrap() - &ComplexMatrix::identity(3))
            .frobenius_norm()
            < 1e-15);
        let x = ComplexMatrix::from_real_rows(&[&[1.0, 1.0], &[0.0, 1.0]]);
        let expected = ComplexMatrix::from_real_rows(&[&[1.0, -1.0], &[0.0, 1.0]]);
        assert!((&inverse(&x).unwrap() - &expected).frobenius_norm() < 1e-14);
        assert!(matches!(
            inverse(&ComplexMatrix::from_real_diag(&[1.0, 0.0])),
            Err(Error::Singular(_))
        ));
    }

    #[test]
    fn inverse_residual_scales_with_condition() {
        for n in [2, 5, 8] {
            let x = random_matrix(n, 7 * n as u64);
            let inv = inverse(&x).unwrap();
            let cond = condition_number(&x).unwrap();
            let id = ComplexMatrix::identity(n);
            assert!((&x.matmul(&inv) - &id).frobenius_norm() <= 1e-9 * cond);
            assert!((&inv.matmul(&x) - &id).frobenius_norm() <= 1e-9 * cond);
        }
    }

    #[test]
    fn cayley_examples() {
        let cz = cayley(&ComplexMatrix::zeros(3)).unwrap();
        assert!((&cz - &ComplexMatrix::identity(3).scale_real(-1.0)).frobenius_norm() < 1e-15);

        let r = 0.3;
        let cr = cayley(&ComplexMatrix::scalar(c(r, 0.0))).unwrap()[(0, 0)];
        let expected = c(r, -1.0) / c(r, 1.0);
        assert!((cr - expected).norm() < 1e-15);
        assert!((cr.norm() - 1.0).abs() < 1e-15);

        let h = random_matrix(6, 5).re_part();
        assert!(unitarity_defect(&cayley(&h).unwrap()) < 1e-10);
    }

    #[test]
    fn haar_unitary_contract() {
        for n in [1, 2, 5, 8, 16] {
            let u = haar_unitary(n, 42);
            assert!(unitarity_defect(&u) <= 1e-12);
            assert_eq!(u, haar_unitary(n, 42));
        }
        let u = haar_unitary(1, 9);
        assert!((u[(0, 0)].norm() - 1.0).abs() < 1e-15);
        assert_ne!(haar_unitary(3, 1), haar_unitary(3, 2));
    }

    #[test]
    fn op_norm_examples() {
        assert_eq!(op_norm(&ComplexMatrix::from_real_diag(&[3.0, 1.0])), 3.0);
        assert!((op_norm(&haar_unitary(4, 0)) - 1.0).abs() < 1e-13);
        assert_eq!(op_norm(&ComplexMatrix::zeros(4)), 0.0);
    }

    #[test]
    fn abs_and_sqrt() {
        let x = random_matrix(4, 77);
        let a = abs(&x).unwrap();
        let a2 = a.matmul(&a);
        let xx = x.adjoint().matmul(&x);
        assert!((&a2 - &xx).frobenius_norm() < 1e-12 * xx.frobenius_norm());
        let r = sqrt_psd(&xx).unwrap();
        assert!((&r - &a).frobenius_norm() < 1e-10 * a.frobenius_norm());
    }

    #[test]
    fn matrix_file_round_trip() {
        let json = r#"{"n":2,"entries":[[1.0,0.0],[0.0,-1.5],[0.0,1.5],[2.0,0.0]]}"#;
        let m: ComplexMatrix = serde_json::from_str(json).unwrap();
        assert_eq!(m[(0, 1)], c(0.0, -1.5));
        assert_eq!(serde_json::to_string(&m).unwrap(), json);
        let bad: std::result::Result<ComplexMatrix, _> =
            serde_json::from_str(r#"{"n":2,"entries":[[1.0,0.0]]}"#);
        assert!(bad.is_err());
    }

    #[test]
    fn re_and_im_parts() {
        let x = random_matrix(3, 8);
        let rebuilt = &x.re_part() + &x.im_part().scale(I);
        assert!((&rebuilt - &x).frobenius_norm() < 1e-15);
        assert_eq!(x.re_part().hermitian_defect(), 0.0);
        assert_eq!(x.im_part().hermitian_defect(), 0.0);
    }
}
