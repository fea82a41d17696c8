//! `unruh-tangle`: point evaluation, grid sweeps and self-verification.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error, 3 I/O error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use unruh_tangle::format::format_number;
use unruh_tangle::sweep::{OutputFormat, Quantity, SweepConfig, SweepTable};
use unruh_tangle::tangles::{Pair, TangleReport};
use unruh_tangle::{verify, AccelPair, Error};

const EXIT_VERIFY: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_IO: u8 = 3;

#[derive(Parser)]
#[command(
    name = "unruh-tangle",
    version,
    about = "Negativities and π-tangle of a fermionic GHZ state with two accelerated observers"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate every quantity at one (r_b, r_c) point, in radians.
    Eval {
        #[arg(allow_negative_numbers = true)]
        r_b: f64,
        #[arg(allow_negative_numbers = true)]
        r_c: f64,
    },
    /// Sweep a uniform grid over [0, π/4]² and write CSV or JSON.
    Sweep {
        /// Points per axis, endpoints included.
        #[arg(long, default_value_t = 33)]
        grid: usize,
        /// Comma-separated subset of corrected, legacy, numeric, deltas, series.
        #[arg(long, value_delimiter = ',', default_value = "corrected,legacy,numeric,deltas,series")]
        quantities: Vec<Quantity>,
        #[arg(long, default_value = "csv")]
        format: OutputFormat,
        #[arg(long)]
        out: PathBuf,
    },
    /// Run the invariant suites and print a pass/fail table.
    Verify {
        #[arg(long, default_value_t = 33)]
        grid: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Eval { r_b, r_c } => eval(r_b, r_c),
        Command::Sweep {
            grid,
            quantities,
            format,
            out,
        } => sweep(SweepConfig {
            grid_n: grid,
            output_format: format,
            output_path: out,
            quantities,
        }),
        Command::Verify { grid } => run_verify(grid),
    }
}

fn eval(r_b: f64, r_c: f64) -> ExitCode {
    let p = match AccelPair::new(r_b, r_c) {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    };
    let report = match TangleReport::compute(p) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_VERIFY);
        }
    };
    print_report(&report);
    let violations = report.violations();
    if violations.is_empty() {
        ExitCode::SUCCESS
    } else {
        for v in violations {
            eprintln!("inconsistent: {v}");
        }
        ExitCode::from(EXIT_VERIFY)
    }
}

fn print_report(r: &TangleReport) {
    let line = |name: &str, x: f64| println!("{name:<18} {}", format_number(x));
    line("r_b", r.params.r_b());
    line("r_c", r.params.r_c());
    line("n_a", r.n_a);
    line("n_bi", r.n_bi);
    line("n_ci", r.n_ci);
    line("n_a_legacy", r.n_a_legacy);
    line("n_bi_legacy", r.n_bi_legacy);
    line("n_ci_legacy", r.n_ci_legacy);
    line("n_a_numeric", r.n_a_numeric);
    line("n_bi_numeric", r.n_bi_numeric);
    line("n_ci_numeric", r.n_ci_numeric);
    for pair in Pair::ALL {
        line(&format!("two_tangle_{pair}"), r.two_tangles.get(pair));
    }
    line("pi_corrected", r.pi_corrected);
    line("pi_legacy", r.pi_legacy);
    line("pi_numeric", r.pi_numeric);
    line("delta_n_a", r.delta.n_a);
    line("delta_n_bi", r.delta.n_bi);
    line("delta_n_ci", r.delta.n_ci);
    line("delta_pi", r.delta.pi);
    line("delta_pi_series", r.delta_pi_series);
}

fn sweep(config: SweepConfig) -> ExitCode {
    if let Err(e) = config.validate() {
        eprintln!("error: {e}");
        return ExitCode::from(EXIT_USAGE);
    }
    let table = match SweepTable::evaluate(config.grid_n, &config.quantities) {
        Ok(t) => t,
        Err(e @ Error::InvalidConfig(_)) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_VERIFY);
        }
    };
    if let Err(e) = table.write_to(&config.output_path, config.output_format) {
        eprintln!("error: cannot write {}: {e}", config.output_path.display());
        return ExitCode::from(EXIT_IO);
    }
    ExitCode::SUCCESS
}

fn run_verify(grid: usize) -> ExitCode {
    let report = match verify::run(grid) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    };
    print!("{}", report.render_table());
    match report.first_failure() {
        None => ExitCode::SUCCESS,
        Some((suite, failure)) => {
            println!("first failure in {suite}: {failure}");
            ExitCode::from(EXIT_VERIFY)
        }
    }
}
