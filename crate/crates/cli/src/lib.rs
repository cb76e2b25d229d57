//! Command-line front end for `palwild`: input parsing, algorithm dispatch,
//! TSV/JSON output and the benchmark harness.

pub mod bench;
pub mod input;
pub mod output;

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use palwild::generate::Family;
use palwild::{CenteredRadiusArray, Symbol};
use serde::Serialize;
use thiserror::Error;

use bench::BenchConfig;
use input::Record;
use output::{hits, write_record, TSV_HEADER};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Algo {
    /// Direct expansion at every center.
    Naive,
    /// One kangaroo extension per center.
    Lce,
    /// Prefix self-convolutions plus bounded extension.
    Precise,
    /// (1+epsilon)-approximate lower bounds.
    Approx,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Tsv,
    Json,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("record {id}: {source}")]
    Record { id: String, source: palwild::Error },
    #[error(transparent)]
    Algorithm(#[from] palwild::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            _ => 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub algo: Algo,
    pub k: usize,
    pub epsilon: Option<f64>,
    pub wildcard: u8,
    pub map_n: bool,
    pub format: Format,
    pub longest_only: bool,
    pub all_centers: bool,
}

fn check_epsilon(algo: Algo, epsilon: Option<f64>) -> Result<(), CliError> {
    match epsilon {
        None if algo == Algo::Approx => Err(CliError::Usage("--epsilon is required with --algo approx".into())),
        Some(e) if !(e > 0.0 && e <= 0.5) => Err(CliError::Usage(format!("--epsilon must lie in (0, 0.5], got {e}"))),
        _ => Ok(()),
    }
}

/// The maximal palindrome array of `s` by the chosen algorithm.
pub fn compute(algo: Algo, s: &[Symbol], k: usize, epsilon: Option<f64>) -> palwild::Result<CenteredRadiusArray> {
    match algo {
        Algo::Naive => palwild::brute_all_maximal(s, k),
        Algo::Lce => palwild::all_maximal_lce(s, k),
        Algo::Precise => palwild::precise_all_maximal(s, k, None),
        Algo::Approx => {
            let e = epsilon.ok_or(palwild::Error::BadEpsilon(f64::NAN))?;
            palwild::approx_all_maximal(s, e, k)
        }
    }
}

/// Processes records in order. A failing record is reported on `err` and
/// skipped; the number of failures is returned.
pub fn run(config: &RunConfig, records: &[Record], mut out: impl Write, mut err: impl Write) -> Result<usize, CliError> {
    check_epsilon(config.algo, config.epsilon)?;
    if config.format == Format::Tsv {
        writeln!(out, "{TSV_HEADER}")?;
    }
    let mut failures = 0;
    for record in records {
        let result = record
            .parsed
            .as_ref()
            .map_err(Clone::clone)
            .and_then(|s| Ok((s, compute(config.algo, s, config.k, config.epsilon)?)));
        match result {
            Ok((s, radii)) => {
                let hits = hits(&radii, config.all_centers, config.longest_only);
                write_record(&mut out, config, &record.id, s.len(), s.fragment_count(), &hits)?;
            }
            Err(source) => {
                failures += 1;
                let e = CliError::Record {
                    id: record.id.clone(),
                    source,
                };
                writeln!(err, "palwild: {e}")?;
            }
        }
    }
    out.flush()?;
    Ok(failures)
}

/// Reads `PALWILD_THREADS`: `None` for unset or 0, otherwise the cap.
pub fn thread_cap(value: Option<&str>) -> Result<Option<usize>, CliError> {
    match value.map(str::trim) {
        None | Some("") => Ok(None),
        Some(v) => v
            .parse::<usize>()
            .map(|n| (n > 0).then_some(n))
            .map_err(|_| CliError::Usage(format!("PALWILD_THREADS must be a non-negative integer, got {v:?}"))),
    }
}

fn single_byte(s: &str) -> Result<u8, String> {
    match s.as_bytes() {
        [b] => Ok(*b),
        _ => Err(format!("expected a single byte, got {s:?}")),
    }
}

#[derive(Debug, Parser)]
#[command(name = "palwild", version, about = "Maximal palindromes in strings with wildcards")]
#[command(args_conflicts_with_subcommands = true)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Option<Command>,
    #[command(flatten)]
    pub run: RunArgs,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Time the algorithms on generated strings and print CSV.
    Bench(BenchArgs),
}

#[derive(Debug, Args)]
pub struct RunArgs {
    #[arg(long, value_enum, default_value_t = Algo::Precise)]
    pub algo: Algo,
    /// Mismatching pairs allowed per palindrome.
    #[arg(long, default_value_t = 0)]
    pub k: usize,
    /// Approximation factor, required with `--algo approx`.
    #[arg(long)]
    pub epsilon: Option<f64>,
    #[arg(long, value_parser = single_byte, default_value = "?")]
    pub wildcard: u8,
    /// Treat N and n as wildcards too.
    #[arg(long)]
    pub map_n: bool,
    #[arg(long, value_enum, default_value_t = Format::Tsv)]
    pub format: Format,
    /// Only the longest palindromes of each record.
    #[arg(long)]
    pub longest: bool,
    /// Include zero-length centers.
    #[arg(long)]
    pub all_centers: bool,
    /// Input file; `-` or nothing reads stdin.
    pub input: Option<PathBuf>,
}

impl RunArgs {
    pub fn config(&self) -> Result<RunConfig, CliError> {
        check_epsilon(self.algo, self.epsilon)?;
        Ok(RunConfig {
            algo: self.algo,
            k: self.k,
            epsilon: self.epsilon,
            wildcard: self.wildcard,
            map_n: self.map_n,
            format: self.format,
            longest_only: self.longest,
            all_centers: self.all_centers,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Uniform,
    Periodic,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(long = "algos", alias = "algo", value_enum, value_delimiter = ',', default_value = "precise")]
    pub algos: Vec<Algo>,
    #[arg(long, value_delimiter = ',', required = true)]
    pub sizes: Vec<usize>,
    /// Wildcard probabilities.
    #[arg(long, value_delimiter = ',', default_value = "0.5")]
    pub densities: Vec<f64>,
    #[arg(long, value_delimiter = ',', default_value = "2")]
    pub sigmas: Vec<usize>,
    #[arg(long, value_delimiter = ',', default_value = "0")]
    pub ks: Vec<usize>,
    #[arg(long, default_value_t = 1)]
    pub reps: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub epsilon: Option<f64>,
    #[arg(long, value_enum, default_value_t = FamilyArg::Uniform)]
    pub family: FamilyArg,
}

impl BenchArgs {
    pub fn config(&self) -> Result<BenchConfig, CliError> {
        for &algo in &self.algos {
            check_epsilon(algo, self.epsilon)?;
        }
        if let Some(d) = self.densities.iter().find(|d| !(0.0..=1.0).contains(*d)) {
            return Err(CliError::Usage(format!("densities must lie in [0, 1], got {d}")));
        }
        Ok(BenchConfig {
            algos: self.algos.clone(),
            sizes: self.sizes.clone(),
            densities: self.densities.clone(),
            sigmas: self.sigmas.clone(),
            ks: self.ks.clone(),
            reps: self.reps,
            seed: self.seed,
            epsilon: self.epsilon,
            family: match self.family {
                FamilyArg::Uniform => Family::Uniform,
                FamilyArg::Periodic => Family::Periodic,
            },
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::input::parse_input;

    fn config(algo: Algo, k: usize) -> RunConfig {
        RunConfig {
            algo,
            k,
            epsilon: None,
            wildcard: b'?',
            map_n: false,
            format: Format::Tsv,
            longest_only: false,
            all_centers: false,
        }
    }

    fn render(config: &RunConfig, text: &str) -> (String, usize) {
        let records = parse_input(text.as_bytes(), config.wildcard, config.map_n);
        let mut out = Vec::new();
        let failures = run(config, &records, &mut out, std::io::sink()).unwrap();
        (String::from_utf8(out).unwrap(), failures)
    }

    #[test]
    fn precise_row_for_example_center() {
        let (text, _) = render(&config(Algo::Precise, 0), "b?baac?cec?cc\n");
        assert!(text.starts_with("record\tcenter\tstart\tend\tlength\tmismatches\n"));
        assert!(text.lines().any(|l| l == "input\t15\t5\t11\t7\t0"), "{text}");
        assert!(!text.contains(" \n") && !text.contains('\r'));
    }

    #[test]
    fn longest_with_mismatch() {
        let c = RunConfig {
            longest_only: true,
            ..config(Algo::Lce, 1)
        };
        let (text, _) = render(&c, "abcdcbx");
        assert_eq!(text, format!("{TSV_HEADER}\ninput\t7\t1\t7\t7\t1\n"));
    }

    #[test]
    fn exact_algorithms_agree_byte_for_byte() {
        let input = ">a\nb?baac?cec?cc\n>b\nab??ba?ca\n";
        for k in [0, 1, 2] {
            let naive = render(&config(Algo::Naive, k), input);
            assert_eq!(render(&config(Algo::Precise, k), input), naive);
            assert_eq!(render(&config(Algo::Lce, k), input), naive);
        }
    }

    #[test]
    fn row_geometry() {
        let c = RunConfig {
            all_centers: true,
            ..config(Algo::Naive, 0)
        };
        let records = parse_input(b"ab?ba?c", b'?', false);
        let radii = compute(Algo::Naive, records[0].parsed.as_ref().unwrap(), 0, None).unwrap();
        let rows = hits(&radii, c.all_centers, false);
        assert_eq!(rows.len(), 13);
        for h in &rows {
            assert_eq!(h.center, h.start + h.end - 1);
            assert_eq!(h.end + 1 - h.start, h.length);
        }
        assert!(hits(&radii, false, false).iter().all(|h| h.length > 0));
    }

    #[test]
    fn json_key_order() {
        let c = RunConfig {
            format: Format::Json,
            epsilon: Some(0.25),
            longest_only: true,
            ..config(Algo::Approx, 0)
        };
        let (text, _) = render(&c, ">r1\nAB?BA\n");
        assert_eq!(
            text,
            "{\"id\":\"r1\",\"n\":5,\"G\":1,\"k\":0,\"algo\":\"approx\",\"epsilon\":0.25,\"guarantee\":1.25,\
             \"hits\":[{\"center\":5,\"start\":1,\"end\":5,\"length\":5,\"mismatches\":0}]}\n"
        );
        let plain = RunConfig {
            format: Format::Json,
            ..config(Algo::Precise, 0)
        };
        let (text, _) = render(&plain, ">r1\nAB?BA\n");
        assert!(text.starts_with("{\"id\":\"r1\",\"n\":5,\"G\":1,\"k\":0,\"algo\":\"precise\",\"hits\":["));
    }

    #[test]
    fn record_errors_are_isolated() {
        let records = parse_input(b">r1\n\n>r2\nA\n", b'?', false);
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let failures = run(&config(Algo::Precise, 0), &records, &mut out, &mut err).unwrap();
        assert_eq!(failures, 1);
        assert!(String::from_utf8(err).unwrap().contains("record r1"));
        assert_eq!(String::from_utf8(out).unwrap(), format!("{TSV_HEADER}\nr2\t1\t1\t1\t1\t0\n"));
    }

    #[test]
    fn usage_errors() {
        let e = run(&config(Algo::Approx, 0), &[], std::io::sink(), std::io::sink()).unwrap_err();
        assert_eq!(e.exit_code(), 2);
        let cli = Cli::try_parse_from(["palwild", "--algo", "approx"]).unwrap();
        assert_eq!(cli.run.config().unwrap_err().exit_code(), 2);
        let cli = Cli::try_parse_from(["palwild", "--algo", "precise", "--epsilon", "0.7"]).unwrap();
        assert!(cli.run.config().is_err());
        assert!(Cli::try_parse_from(["palwild", "--wildcard", "ab"]).is_err());
        assert!(Cli::try_parse_from(["palwild", "--k", "-1"]).is_err());
    }

    #[test]
    fn argument_parsing() {
        let cli = Cli::try_parse_from(["palwild", "--algo", "lce", "--k", "2", "--wildcard", "N", "--format", "json", "x.fa"]).unwrap();
        let c = cli.run.config().unwrap();
        assert_eq!((c.algo, c.k, c.wildcard, c.format), (Algo::Lce, 2, b'N', Format::Json));
        assert_eq!(cli.run.input, Some(PathBuf::from("x.fa")));
        let cli = Cli::try_parse_from(["palwild", "bench", "--sizes", "64,128", "--algos", "naive,approx", "--epsilon", "0.5"]).unwrap();
        let Some(Command::Bench(b)) = cli.command else { panic!("bench") };
        let b = b.config().unwrap();
        assert_eq!(b.sizes, vec![64, 128]);
        assert_eq!(b.algos, vec![Algo::Naive, Algo::Approx]);
        let cli = Cli::try_parse_from(["palwild", "bench", "--sizes", "64", "--algos", "approx"]).unwrap();
        let Some(Command::Bench(b)) = cli.command else { panic!("bench") };
        assert_eq!(b.config().unwrap_err().exit_code(), 2);
    }

    #[test]
    fn thread_cap_values() {
        assert_eq!(thread_cap(None).unwrap(), None);
        assert_eq!(thread_cap(Some("0")).unwrap(), None);
        assert_eq!(thread_cap(Some("3")).unwrap(), Some(3));
        assert!(thread_cap(Some("many")).is_err());
    }
}
