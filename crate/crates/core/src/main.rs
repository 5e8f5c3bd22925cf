use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use logmaj::harness::{self, OutputFormat, ShowWhat, TrialConfig};

#[derive(Parser)]
#[command(name = "logmaj", version, about = "Randomized verification of singular-value and Harnack-type inequalities")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the randomized checker suite.
    Verify {
        /// Comma-separated checker ids, or `all`.
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, value_delimiter = ',', default_value = "1,2,4,8")]
        dims: Vec<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1e-3)]
        delta: f64,
        #[arg(long, default_value_t = 1e-9)]
        atol: f64,
        #[arg(long, default_value_t = 1e-9)]
        rtol: f64,
        #[arg(long = "k-max", default_value_t = 4)]
        k_max: usize,
        #[arg(long, default_value = "json")]
        format: String,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Print a functional of the matrix stored in a JSON file.
    Show {
        #[arg(long)]
        input: PathBuf,
        /// One of mu, lambda, det, cayley.
        #[arg(long, default_value = "mu")]
        what: String,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Verify {
            suite,
            trials,
            dims,
            seed,
            delta,
            atol,
            rtol,
            k_max,
            format,
            output,
        } => {
            let format: OutputFormat = match format.parse() {
                Ok(f) => f,
                Err(e) => {
                    eprintln!("error: {e}");
                    return ExitCode::from(2);
                }
            };
            let config = TrialConfig {
                suite: vec![suite],
                trials,
                dims,
                seed,
                delta,
                atol,
                rtol,
                k_max,
                output,
                format,
            };
            if let Err(e) = config.validate() {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
            match harness::run_suite(&config) {
                Ok(report) => {
                    print!("{}", harness::render_summary(&report));
                    if report.all_passed() {
                        ExitCode::SUCCESS
                    } else {
                        ExitCode::from(1)
                    }
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    ExitCode::from(2)
                }
            }
        }
        Command::Show { input, what } => {
            let result = what
                .parse::<ShowWhat>()
                .and_then(|w| harness::read_matrix(&input).and_then(|x| harness::show(&x, w)));
            match result {
                Ok(v) => {
                    println!("{}", serde_json::to_string_pretty(&v).expect("json value"));
                    ExitCode::SUCCESS
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    ExitCode::from(2)
                }
            }
        }
    }
}
