#![allow(clippy::neg_cmp_op_on_partial_ord)]

mod args;
mod commands;
mod output;

use std::io::Write;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;

use args::{Cli, Command};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] pdmwell_core::Error),
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

fn write_output(text: &str, out: Option<&std::path::Path>) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, text)?,
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()?;
        }
    }
    Ok(())
}

fn run(cli: Cli) -> Result<bool, CliError> {
    let (rendered, out) = match &cli.command {
        Command::Spectrum(a) => (commands::spectrum(a)?, a.output.out.as_deref()),
        Command::Density(a) => (commands::density(a)?, a.output.out.as_deref()),
        Command::Verify(a) => (commands::verify(a)?, a.out.as_deref()),
        Command::LimitStudy(a) => (commands::limit_study(a)?, a.output.out.as_deref()),
    };
    write_output(&rendered.text, out)?;
    Ok(rendered.pass)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let msg = e.to_string();
            let line = msg.lines().find(|l| !l.trim().is_empty()).unwrap_or("usage error");
            eprintln!("pdmwell: {}", line.trim_start_matches("error: "));
            return ExitCode::from(2);
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            let msg = e.to_string().replace('\n', " ");
            eprintln!("pdmwell: {msg}");
            ExitCode::from(2)
        }
    }
}
