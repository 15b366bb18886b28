//! Command-line front end for the `sitepc` library.

mod args;
mod commands;
mod error;
mod output;

use std::process::ExitCode;

use clap::Parser;

use crate::args::Cli;

/// Exit status when `--strict` is set and the result carries a warning.
const WARNING_EXIT: u8 = 3;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = commands::run(&cli.command).and_then(|(out, opts)| {
        out.emit(opts)?;
        Ok(opts.strict && out.warning.is_some())
    });
    match result {
        Ok(false) => ExitCode::SUCCESS,
        Ok(true) => ExitCode::from(WARNING_EXIT),
        Err(e) => {
            eprintln!("{}", e.to_json());
            ExitCode::from(e.exit_code())
        }
    }
}
