mod args;
mod commands;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use symcay::characters::cache::TableCache;

use crate::args::{CacheAction, Cli, Command};
use crate::commands::Outcome;

fn run(cli: &Cli) -> Result<Outcome, symcay::Error> {
    let cache = TableCache::resolve(cli.cache_dir.as_deref());
    match &cli.command {
        Command::Spectrum(args) => commands::spectrum_cmd(args, cli.format),
        Command::Chartable(args) => commands::chartable_cmd(args, &cache, cli.format),
        Command::Verify(args) => commands::verify_cmd(args, cli.format),
        Command::Identities(args) => commands::identities_cmd(args, cli.format),
        Command::Cache { action: CacheAction::Clear } => commands::cache_clear_cmd(&cache),
    }
}

fn emit(cli: &Cli, text: &str) -> std::io::Result<()> {
    match &cli.output {
        Some(path) => std::fs::write(path, text),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let level = match cli.verbose {
        0 => log::LevelFilter::Warn,
        1 => log::LevelFilter::Info,
        _ => log::LevelFilter::Debug,
    };
    env_logger::Builder::new().filter_level(level).format_timestamp(None).init();

    match run(&cli) {
        Ok(outcome) => {
            if let Err(e) = emit(&cli, &outcome.text) {
                eprintln!("error: cannot write output: {e}");
                return ExitCode::from(2);
            }
            if outcome.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
