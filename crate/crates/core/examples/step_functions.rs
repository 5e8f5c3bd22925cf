//! Non-increasing step functions on [0, 1): construction, one-sided
//! evaluation, reflections and exact log-integrals.

use logmaj::stepfn::{make_step, rearrange, IntervalSet};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let f = make_step(&[0.0, 0.25, 0.5, 1.0], &[4.0, 2.0, 1.0])?;
    println!("f: breaks {:?} values {:?}", f.breakpoints(), f.values());

    // right-continuous vs left-continuous at a breakpoint
    println!("f(0.25) = {}, f(0.25-) = {}", f.eval_right(0.25)?, f.eval_left(0.25)?);

    let g = f.invert_flip()?;
    println!("1/f(1 - s): breaks {:?} values {:?}", g.breakpoints(), g.values());
    let h = f.reflect_neg()?;
    println!("-f(1 - s): values {:?}", h.values());

    let k = IntervalSet::new(vec![(0.0, 0.125), (0.5, 0.75)])?;
    println!("|K| = {}, ∫_K log f = {:?}", k.measure(), f.integrate_log(&k));
    println!("reflected K = {:?}", k.reflect().intervals());

    // decreasing rearrangement of (value, length) pieces
    let r = rearrange(&[(1.0, 0.5), (3.0, 0.25), (2.0, 0.25)])?;
    println!("rearranged: breaks {:?} values {:?}", r.breakpoints(), r.values());
    Ok(())
}
