use logmaj::harness;
use logmaj::inequalities::{self as ineq, CheckOptions};
use logmaj::linalg;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

// Convex combinations of positive contractions against a unitary, with
// Lewent's bound on each piece.
fn main() -> Result<(), Box<dyn std::error::Error>> {
    let opts = CheckOptions::default();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let xs: Vec<_> = (0..3).map(|_| harness::gen_positive_contraction(&mut rng, 3, opts.delta)).collect();
    let ws = [0.5, 0.3, 0.2];
    let u = linalg::haar_unitary(3, 99);
    for r in ineq::check_weighted(&xs, &ws, &u, &opts)? {
        println!("{:<10} lhs {:>12.6} rhs {:>12.6} slack {:>10.3e}", r.item, r.lhs, r.rhs, r.slack);
    }
    Ok(())
}
