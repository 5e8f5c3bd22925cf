//! Runs every checker on random inputs and prints the summary table. Pass a
//! trial count as the first argument (default 50).

use logmaj::harness::{self, TrialConfig};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let trials = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(50);
    let cfg = TrialConfig {
        trials,
        dims: vec![1, 2, 4, 8],
        seed: 42,
        ..TrialConfig::default()
    };
    let report = harness::run_suite(&cfg)?;
    print!("{}", harness::render_summary(&report));
    if !report.all_passed() {
        std::process::exit(1);
    }
    Ok(())
}
