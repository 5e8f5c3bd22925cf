//! Log, power and φ submajorisation between matrices, plus the battery of
//! conditions that all follow from log submajorisation for positive pairs.

use logmaj::linalg::ComplexMatrix;
use logmaj::submaj;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let x = ComplexMatrix::from_real_diag(&[2.0, 2.0, 0.5]);
    let y = ComplexMatrix::from_real_diag(&[4.0, 1.0, 1.0]);

    let log = submaj::log_submaj(&x, &y, 1e-12)?;
    println!(
        "x <<_log y: {} (worst t = {:.4}, slack {:.3e})",
        log.holds, log.worst_t, log.slack
    );
    println!("y <<_log x: {}", submaj::log_submaj(&y, &x, 1e-12)?.holds);
    println!("x <<_0.5 y: {}", submaj::p_submaj(&x, &y, 0.5, 1e-12)?.holds);

    let battery = submaj::remark26_battery(&x, &y, 1e-9)?;
    for entry in &battery.entries {
        println!("  {:?}: holds = {}", entry.condition, entry.report.holds);
    }
    println!("consistent: {}", battery.consistent);
    Ok(())
}
