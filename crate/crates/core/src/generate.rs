//! Reproducible random inputs.
//!
//! Strings are drawn from a ChaCha8 stream seeded with `seed` (via
//! `SeedableRng::seed_from_u64`), so the same parameters give the same string
//! on every platform and run.

use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::wildcard::{Symbol, WildcardString};

/// Shape of the solid part of a generated string.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Family {
    /// Every solid position independently uniform over `sigma` symbols.
    #[default]
    Uniform,
    /// Position `i` holds symbol `i mod sigma`, so long palindromes are
    /// everywhere and direct scanning is quadratic.
    Periodic,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GeneratorSpec {
    pub n: usize,
    /// Probability that a position is a wildcard.
    pub density: f64,
    pub sigma: usize,
    pub seed: u64,
    pub family: Family,
}

impl GeneratorSpec {
    pub fn new(n: usize, density: f64, sigma: usize, seed: u64) -> Self {
        GeneratorSpec {
            n,
            density,
            sigma,
            seed,
            family: Family::Uniform,
        }
    }

    pub fn periodic(self) -> Self {
        GeneratorSpec {
            family: Family::Periodic,
            ..self
        }
    }
}

pub fn generate(spec: &GeneratorSpec) -> WildcardString {
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let sigma = spec.sigma.max(1) as u32;
    let symbols = (0..spec.n)
        .map(|i| {
            let wild = rng.random::<f64>() < spec.density;
            let code = match spec.family {
                Family::Uniform => rng.random_range(0..sigma),
                Family::Periodic => i as u32 % sigma,
            };
            if wild {
                Symbol::WILDCARD
            } else {
                Symbol::new(code).expect("small alphabet")
            }
        })
        .collect();
    WildcardString::from_symbols(symbols)
}
