//! Harnack-type bounds for a strict contraction: the middle term, the
//! pointwise and integral upper bound, and the lower bound over a set.

use logmaj::harness;
use logmaj::inequalities::{self as ineq, CheckOptions, InequalityReport};
use logmaj::stepfn::IntervalSet;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn print(reports: &[InequalityReport]) {
    for r in reports {
        println!(
            "  {:<22} {:<14} lhs {:>12.6} rhs {:>12.6} slack {:>10.3e} {}",
            r.name,
            r.item,
            r.lhs,
            r.rhs,
            r.slack,
            if r.pass { "ok" } else { "FAIL" }
        );
    }
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let opts = CheckOptions::default();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let x = harness::gen_contraction(&mut rng, 4, opts.delta);

    let hm = ineq::harnack_middle(&x, opts.delta)?;
    println!("middle term built three ways, max gap {:.2e}", hm.construction_gap);

    let k = IntervalSet::new(vec![(0.0, 0.3), (0.6, 0.8)])?;
    print(&ineq::check_harnack_middle(&x, &opts)?);
    print(&ineq::check_harnack_upper(&x, &k, &opts)?);
    print(&[ineq::check_harnack_lower(&x, &k, &opts)?]);
    print(&ineq::check_harnack_corollary(&x, &[0.25, 0.5, 1.0], &opts)?);
    Ok(())
}
