//! `alphanorm`: tables, samples and checks for the α-normal family.
//!
//! Exit codes: 0 success, 1 usage error, 2 numeric failure, 3 failed
//! verification.

mod commands;
mod table;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use commands::{Cli, Outcome};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let mut stdout = std::io::stdout().lock();
    match commands::run(cli) {
        Ok(Outcome { text, verified }) => {
            if stdout.write_all(text.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(2);
            }
            if verified {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(3)
            }
        }
        Err(e) => {
            eprintln!("alphanorm: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
