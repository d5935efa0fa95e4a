use std::io::{self, Write};
use std::process::ExitCode;

use clap::Parser;
use phasecov_cli::{execute, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut lock = stdout.lock();
    let result = execute(cli, &mut lock).and_then(|()| lock.flush().map_err(Into::into));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("phasecov: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
