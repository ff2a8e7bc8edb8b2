use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use holrep_cli::{exit, exit_code, run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match run(&cli.command) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(exit_code(&e) as u8);
        }
    };
    let written = match &cli.command.common().out {
        Some(path) => std::fs::write(path, &outcome.body),
        None => std::io::stdout().write_all(outcome.body.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: cannot write output: {e}");
        return ExitCode::from(exit::INVALID_INPUT as u8);
    }
    ExitCode::from(outcome.code as u8)
}
