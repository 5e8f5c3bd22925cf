//! Generalized singular numbers and the spectral scale of small matrices,
//! cross-checked against the diagonal closed form.

use logmaj::linalg::{self, ComplexMatrix, C64};
use logmaj::oracle::{self, DiagonalSpec};
use logmaj::spectral;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let x = ComplexMatrix::from_real_rows(&[&[1.0, 2.0], &[0.0, 1.0]]);
    let mu = spectral::mu(&x)?;
    println!("mu(x): breaks {:?} values {:?}", mu.breakpoints(), mu.values());
    println!("mu(x*) agrees: {}", spectral::mu(&x.adjoint())? == mu);

    let h = x.re_part();
    let lam = spectral::lambda_scale(&h)?;
    println!("lambda(Re x): values {:?}", lam.values());

    let d = DiagonalSpec::new(vec![C64::new(0.0, 3.0), C64::new(-1.0, 0.0), C64::new(2.0, 0.0)]);
    let gap = oracle::diag_mu(&d).max_discrepancy(&spectral::mu(&d.to_matrix())?);
    println!("diagonal closed form vs SVD path: {:.1e}", gap.abs());

    let svd = linalg::svd(&x, linalg::JACOBI_TOL)?;
    println!(
        "sigma_max = {:.6}, sigma_min = {:.6}, cond = {:.6}",
        svd.sigma_max(),
        svd.sigma_min(),
        linalg::condition_number(&x)?
    );
    Ok(())
}
