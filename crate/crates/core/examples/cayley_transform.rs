//! Cayley transforms of strict contractions and the two-sided bounds on
//! their singular numbers and on the distance between them.

use logmaj::harness;
use logmaj::inequalities::{self as ineq, CheckOptions};
use logmaj::linalg;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let h = linalg::complex_gaussian(&mut rng, 4).re_part();
    let c = linalg::cayley(&h)?;
    println!("self-adjoint input, unitarity defect {:.2e}", linalg::unitarity_defect(&c));

    let x = harness::gen_contraction(&mut rng, 4, 1e-3);
    let y = harness::gen_contraction(&mut rng, 4, 1e-3);

    let k = harness::gen_interval_set(&mut rng, 3, Some(4));
    println!("K = {:?}", k.intervals());
    // items ending in _unit repeat the bounds with K = [0, 1)
    for r in ineq::check_cayley(&x, &y, &k, &CheckOptions::default())? {
        println!("  {:<20} lhs {:>12.6} rhs {:>12.6} pass {}", r.item, r.lhs, r.rhs, r.pass);
    }
    Ok(())
}
