mod args;
mod commands;
mod error;
mod output;

use std::path::Path;
use std::process::ExitCode;

use clap::Parser;

use crate::args::{Cli, RunConfig};
use crate::error::CliError;

fn configure_threads() -> Result<(), CliError> {
    let Ok(raw) = std::env::var("DIRAC_NL_THREADS") else {
        return Ok(());
    };
    let n: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&n| n >= 1)
        .ok_or_else(|| CliError::Usage(format!("DIRAC_NL_THREADS must be a positive integer, got {raw:?}")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| CliError::Usage(e.to_string()))
}

fn run() -> Result<(), CliError> {
    let cfg = RunConfig::from_cli(Cli::parse()).map_err(CliError::Usage)?;
    configure_threads()?;
    let table = commands::run(&cfg)?;
    let text = output::render(&table, &cfg);
    output::emit(&text, cfg.output_path.as_deref().map(Path::new))?;
    Ok(())
}

fn main() -> ExitCode {
    match run() {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
