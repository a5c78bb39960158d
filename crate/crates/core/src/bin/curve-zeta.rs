use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use curve_zeta::cli::{run, RunConfig};

fn main() -> ExitCode {
    let outcome = run(RunConfig::parse());
    print!("{}", outcome.stdout);
    eprint!("{}", outcome.stderr);
    let _ = std::io::stdout().flush();
    ExitCode::from(outcome.code)
}
