use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use solvlie_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = run(&cli.command, cli.timing);
    let mut stdout = std::io::stdout().lock();
    if stdout.write_all(out.text.as_bytes()).and_then(|()| stdout.flush()).is_err() {
        return ExitCode::from(2);
    }
    ExitCode::from(out.code as u8)
}
