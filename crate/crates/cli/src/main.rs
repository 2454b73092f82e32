//! `degchrom`: compute degree chromatic polynomials, run enumeration
//! oracles, and check the leading-term formula and pairwise bounds on trees.
//!
//! Exit codes: 0 when everything passes, 1 on a mathematical failure
//! (failed check, bound violation, non-integral coefficient), 2 on bad
//! input or usage.

mod args;
mod commands;
mod records;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};
use commands::CliError;

fn run(cli: &Cli) -> commands::Outcome {
    if let Some(threads) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .map_err(|e| CliError::Usage(format!("cannot configure {threads} threads: {e}")))?;
    }
    let mut out: Box<dyn Write> = match &cli.output {
        Some(path) => {
            Box::new(BufWriter::new(File::create(path).map_err(|e| {
                CliError::Usage(format!("cannot create {}: {e}", path.display()))
            })?))
        }
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };
    let passed = match &cli.command {
        Command::Compute(a) => commands::compute(a, &mut out),
        Command::Oracle(a) => commands::oracle(a, &mut out),
        Command::Verify(a) => commands::verify(a, &mut out),
        Command::Bounds(a) => commands::bounds(a, &mut out),
        Command::Campaign(a) => commands::campaign(a, &mut out),
    }?;
    out.flush().map_err(|e| CliError::Usage(format!("write failed: {e}")))?;
    Ok(passed)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
