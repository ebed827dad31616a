use std::process::ExitCode;

use clap::Parser;

mod args;
mod commands;

use args::Cli;

/// Exit status for malformed input or arguments.
const EXIT_VALIDATION: u8 = 2;
/// Exit status for numerical failures such as an ill-conditioned Gram matrix.
const EXIT_NUMERICAL: u8 = 3;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            if err.numerical {
                ExitCode::from(EXIT_NUMERICAL)
            } else {
                ExitCode::from(EXIT_VALIDATION)
            }
        }
    }
}
