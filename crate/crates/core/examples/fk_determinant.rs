//! The normalized determinant `exp ∫_0^1 log μ_t(x) dt`, its partial
//! version `Λ_t`, and a comparison with LU.

use logmaj::linalg::{self, ComplexMatrix};
use logmaj::oracle;
use logmaj::spectral;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let d = ComplexMatrix::from_real_diag(&[3.0, 1.0]);
    println!("det(diag(3, 1)) = {} (sqrt 3 = {})", spectral::fk_det(&d)?, 3f64.sqrt());

    let singular = ComplexMatrix::from_real_rows(&[&[1.0, 2.0], &[2.0, 4.0]]);
    println!("log det of a singular matrix: {:?}", spectral::log_fk_det(&singular)?);

    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let x = linalg::complex_gaussian(&mut rng, 6);
    let lu = (oracle::lu_log_abs_det(&x) / 6.0).exp();
    println!("random 6x6: singular-value route {:.12}, LU route {:.12}", spectral::fk_det(&x)?, lu);

    for t in [0.25, 0.5, 1.0] {
        println!("Lambda_{t}(x) = {:.6}", spectral::big_lambda(&x, t)?);
    }
    Ok(())
}
