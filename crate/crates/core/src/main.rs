use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use parapath::cli::{exit_code_for, run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            let _ = std::io::stdout().write_all(out.output.as_bytes());
            ExitCode::from(out.exit_code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e) as u8)
        }
    }
}
