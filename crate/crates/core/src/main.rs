use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use wedgekit::cli::{run, Cli, CAP_ENV};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let env_cap = std::env::var(CAP_ENV).ok();
    let outcome = run(&cli, env_cap.as_deref());
    // a closed stdout pipe is not worth a panic
    let _ = std::io::stdout().write_all(outcome.stdout.as_bytes());
    let _ = std::io::stderr().write_all(outcome.stderr.as_bytes());
    ExitCode::from(outcome.code as u8)
}
