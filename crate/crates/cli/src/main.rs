//! `quotcoh`: reports and verification sweeps for Quot schemes of points.
//!
//! Exit status is 0 when every check passes, 1 on a verification mismatch
//! and 2 on invalid input (including an exhausted work budget).

mod args;
mod commands;
mod verify;

use std::process::ExitCode;

use clap::Parser;
use quotcoh_core::{Budget, Error};

use args::{Cli, Command};
use commands::Output;

fn run(cli: &Cli) -> anyhow::Result<Output> {
    let budget = Budget::from_env()?;
    match &cli.command {
        Command::Series(cmd) => commands::series(cmd),
        Command::Loci(cmd) => commands::loci(cmd),
        Command::Bb(cmd) => commands::bb(cmd),
        Command::Count(cmd) => commands::count(cmd, budget),
        Command::Verify(cmd) => verify::verify(cmd, budget),
    }
}

fn exit_code(result: &anyhow::Result<Output>) -> u8 {
    match result {
        Ok(out) if out.report.passed() => 0,
        Ok(_) => 1,
        Err(e) => match e.downcast_ref::<Error>() {
            Some(Error::Mismatch { .. }) => 1,
            _ => 2,
        },
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(&cli);
    match &result {
        Ok(out) => {
            if cli.json {
                println!("{}", out.report.to_json());
            } else if let Some(csv) = &out.csv {
                print!("{csv}");
            } else {
                println!("{}", out.text);
            }
            if !out.report.passed() && !cli.json {
                eprintln!("mismatches:");
                for m in &out.report.mismatches {
                    eprintln!("  {}: expected {}, got {}", m.check, m.expected, m.actual);
                }
            }
        }
        Err(e) => eprintln!("error: {e:#}"),
    }
    ExitCode::from(exit_code(&result))
}
