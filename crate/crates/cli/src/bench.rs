//! Timing harness over generated inputs.
//!
//! Inputs come from `palwild::generate` (ChaCha8 seeded with `--seed`), so a
//! row's `algo,n,G,sigma,k,epsilon,seed` fully reproduces its input.

use std::io::Write;
use std::time::Instant;

use palwild::alloc::PeakAlloc;
use palwild::generate::{generate, Family, GeneratorSpec};
use serde::Serialize;

use crate::{compute, Algo, CliError};

#[derive(Clone, Debug, PartialEq)]
pub struct BenchConfig {
    pub algos: Vec<Algo>,
    pub sizes: Vec<usize>,
    pub densities: Vec<f64>,
    pub sigmas: Vec<usize>,
    pub ks: Vec<usize>,
    pub reps: usize,
    pub seed: u64,
    pub epsilon: Option<f64>,
    pub family: Family,
}

#[derive(Debug, Serialize)]
struct Row {
    algo: Algo,
    n: usize,
    #[serde(rename = "G")]
    fragments: usize,
    sigma: usize,
    k: usize,
    epsilon: Option<f64>,
    seed: u64,
    rep: usize,
    millis: String,
    /// Allocator high-water mark above the pre-run level, in bytes; empty
    /// when no counting allocator is registered.
    peak_mem_estimate: Option<usize>,
}

/// Runs every combination `reps` times and writes one CSV row per run.
pub fn bench(config: &BenchConfig, peak: Option<&PeakAlloc>, out: impl Write) -> Result<(), CliError> {
    let mut csv = csv::Writer::from_writer(out);
    for &algo in &config.algos {
        let epsilon = (algo == Algo::Approx).then_some(config.epsilon).flatten();
        for &n in &config.sizes {
            for &density in &config.densities {
                for &sigma in &config.sigmas {
                    let spec = GeneratorSpec {
                        family: config.family,
                        ..GeneratorSpec::new(n, density, sigma, config.seed)
                    };
                    let s = generate(&spec);
                    for &k in &config.ks {
                        for rep in 0..config.reps {
                            let base = peak.map(|p| {
                                p.reset_peak();
                                p.current()
                            });
                            let start = Instant::now();
                            compute(algo, &s, k, epsilon)?;
                            let millis = start.elapsed().as_secs_f64() * 1e3;
                            csv.serialize(Row {
                                algo,
                                n,
                                fragments: s.fragment_count(),
                                sigma,
                                k,
                                epsilon,
                                seed: config.seed,
                                rep,
                                millis: format!("{millis:.3}"),
                                peak_mem_estimate: peak.zip(base).map(|(p, b)| p.peak().saturating_sub(b)),
                            })?;
                        }
                    }
                }
            }
        }
    }
    csv.flush()?;
    Ok(())
}
