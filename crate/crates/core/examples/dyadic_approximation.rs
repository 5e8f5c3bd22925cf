//! Spectral rounding of a positive matrix to `2^k` levels from above and
//! from below, with the operator-norm error against its bound.

use logmaj::harness;
use logmaj::linalg;
use logmaj::spectral::{self, DyadicGrid};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    let x = harness::gen_positive_invertible(&mut rng, 4);
    for grid in [DyadicGrid::Upper, DyadicGrid::Lower] {
        let range = spectral::dyadic_range(&x, grid)?;
        println!("{grid:?} grid, range {range:.6}");
        for k in [0, 2, 4, 8, 16] {
            let xk = spectral::dyadic_approx(&x, k, grid)?;
            let err = linalg::op_norm(&(&x - &xk));
            println!(
                "  k = {k:>2}: ||x - x_k|| = {err:.3e} <= {:.3e}, det(x_k) = {:.8}",
                range / 2f64.powi(k as i32),
                spectral::fk_det(&xk)?
            );
        }
    }
    println!("det(x) = {:.8}", spectral::fk_det(&x)?);
    Ok(())
}
