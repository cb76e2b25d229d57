use std::fs;
use std::io::{self, Read};
use std::process::ExitCode;

use clap::{CommandFactory, Parser};
use palwild::alloc::PeakAlloc;
use palwild_cli::input::parse_input;
use palwild_cli::{bench, run, thread_cap, Cli, CliError, Command};

#[global_allocator]
static ALLOC: PeakAlloc = PeakAlloc::new();

fn execute(cli: Cli) -> Result<ExitCode, CliError> {
    if let Some(n) = thread_cap(std::env::var("PALWILD_THREADS").ok().as_deref())? {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| CliError::Io(io::Error::other(e)))?;
    }
    let stdout = io::stdout().lock();
    match cli.command {
        Some(Command::Bench(args)) => {
            bench::bench(&args.config()?, Some(&ALLOC), io::BufWriter::new(stdout))?;
            Ok(ExitCode::SUCCESS)
        }
        None => {
            let config = cli.run.config()?;
            let bytes = match cli.run.input.as_deref() {
                None => read_stdin()?,
                Some(p) if p.as_os_str() == "-" => read_stdin()?,
                Some(p) => fs::read(p)?,
            };
            let records = parse_input(&bytes, config.wildcard, config.map_n);
            let failures = run(&config, &records, io::BufWriter::new(stdout), io::stderr())?;
            Ok(if failures > 0 { ExitCode::FAILURE } else { ExitCode::SUCCESS })
        }
    }
}

fn read_stdin() -> io::Result<Vec<u8>> {
    let mut bytes = Vec::new();
    io::stdin().read_to_end(&mut bytes)?;
    Ok(bytes)
}

fn main() -> ExitCode {
    match execute(Cli::parse()) {
        Ok(code) => code,
        Err(CliError::Usage(msg)) => Cli::command()
            .error(clap::error::ErrorKind::ValueValidation, msg)
            .exit(),
        Err(e) => {
            eprintln!("palwild: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
