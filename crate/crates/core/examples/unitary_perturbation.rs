//! Determinant and eigenvalue bounds for `|det(z + u)|` with `z` a strict
//! contraction and `u` unitary, and their agreement with the continuous
//! Harnack quantities on a dyadic index set.

use logmaj::harness::{self, Checker, TrialConfig, TrialInputs};
use logmaj::inequalities as ineq;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cfg = TrialConfig::default();
    let seed = harness::trial_seed(1, Checker::TungMatrix, 4, 0);
    let TrialInputs::Tung { z, u, index_set } = harness::generate(Checker::TungMatrix, 4, seed, &cfg) else {
        unreachable!("this checker draws a contraction, a unitary and an index set")
    };
    println!("index set {index_set:?}");
    for r in ineq::check_tung_matrix(&z, &u, &index_set, &cfg.options())? {
        println!("  {:<18} lhs {:>14.8} rhs {:>14.8} {:?} pass {}", r.item, r.lhs, r.rhs, r.kind, r.pass);
    }
    Ok(())
}
