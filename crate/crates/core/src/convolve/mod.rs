//! Wildcard-aware counting and matching convolutions.
//!
//! For a text `T` of length `n` and a pattern `P` of length `m <= n`, entry
//! `i` (0-based, `0 <= i < n + m - 1`) of both arrays describes the alignment
//! that places `P[m-1]` under `T[i]`, including the partial overhangs at
//! either end. Only pairs of two different solid symbols count as mismatches.

mod fft;
mod selfconv;

use std::collections::HashMap;
use std::ops::Deref;

pub use fft::{conv_int, conv_naive};
pub use selfconv::{for_each_self_hit, odd_self_counts, self_counts, self_hits, PalHit};

use crate::error::{Error, Result};
use crate::wildcard::Symbol;
use fft::{round_checked, RealTransform};
use realfft::num_complex::Complex64;

/// Inputs shorter than this are always convolved directly.
const NAIVE_LEN: usize = 64;

/// Per-alignment mismatch counts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountArray(Vec<usize>);

impl CountArray {
    pub fn new(values: Vec<usize>) -> Self {
        CountArray(values)
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    /// Pointwise `min(value, k + 1)`.
    pub fn clamp(mut self, k: usize) -> Self {
        self.0.iter_mut().for_each(|v| *v = (*v).min(k + 1));
        self
    }
}

impl Deref for CountArray {
    type Target = [usize];

    fn deref(&self) -> &[usize] {
        &self.0
    }
}

/// Per-alignment match flags.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchArray(Vec<bool>);

impl MatchArray {
    pub fn into_vec(self) -> Vec<bool> {
        self.0
    }
}

impl Deref for MatchArray {
    type Target = [bool];

    fn deref(&self) -> &[bool] {
        &self.0
    }
}

/// How mismatch counts are computed. All variants return identical arrays.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConvStrategy {
    /// Definitional O(nm) scan.
    Naive,
    /// One indicator convolution per solid symbol.
    PerCharacter,
    /// Convolution for symbols with at least `threshold` pattern occurrences,
    /// direct pair enumeration for the rest.
    FrequencySplit { threshold: usize },
}

impl ConvStrategy {
    /// Frequency split with the threshold balancing transform cost against
    /// pair enumeration for a pattern of length `m`.
    pub fn frequency_split(m: usize) -> Self {
        let m = m as f64;
        let threshold = (m * (m + 1.0).log2()).sqrt().ceil() as usize;
        ConvStrategy::FrequencySplit {
            threshold: threshold.max(1),
        }
    }

    /// The strategy chosen for inputs of length `len` over `sigma` solid symbols.
    pub fn auto(len: usize, sigma: usize) -> Self {
        if len <= NAIVE_LEN {
            ConvStrategy::Naive
        } else if per_character_preferred(len, sigma) {
            ConvStrategy::PerCharacter
        } else {
            ConvStrategy::frequency_split(len)
        }
    }
}

fn log2_at_least_one(n: usize) -> f64 {
    (n as f64).log2().max(1.0)
}

/// `sigma * log n <= sqrt(n log n)`.
pub fn per_character_preferred(n: usize, sigma: usize) -> bool {
    let log = log2_at_least_one(n);
    sigma as f64 * log <= (n as f64 * log).sqrt()
}

/// Estimated cost of one counting convolution of length `n` over `sigma`
/// symbols, `n * min(sigma log n, sqrt(n log n))`.
pub fn cost_f(n: usize, sigma: usize) -> u64 {
    if n <= 1 {
        return 1;
    }
    let log = log2_at_least_one(n);
    let per_position = (sigma.max(1) as f64 * log).min((n as f64 * log).sqrt());
    ((n as f64) * per_position).ceil().max(1.0) as u64
}

/// Core engine: `c[s] = #{ i : a[i], b[s-i] solid and different }`.
///
/// Passing the same slice twice computes the auto-convolution and reuses
/// spectra.
pub(crate) fn mismatch_conv(a: &[Symbol], b: &[Symbol], strategy: Option<ConvStrategy>) -> Vec<usize> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let same = std::ptr::eq(a, b);
    let occ_a = Occurrences::of(a);
    let occ_b_owned;
    let occ_b = if same {
        &occ_a
    } else {
        occ_b_owned = Occurrences::of(b);
        &occ_b_owned
    };
    let strategy = strategy.unwrap_or_else(|| {
        let shared = occ_a.symbols().filter(|s| occ_b.get(*s).is_some()).count();
        let sigma = occ_a.len() + occ_b.len() - shared;
        ConvStrategy::auto(a.len().max(b.len()), sigma)
    });
    let threshold = match strategy {
        ConvStrategy::Naive => return naive_mismatch_conv(a, b),
        ConvStrategy::PerCharacter => 0,
        ConvStrategy::FrequencySplit { threshold } => threshold,
    };
    spectral_mismatch_conv(a, b, same, &occ_a, occ_b, threshold)
        .unwrap_or_else(|| naive_mismatch_conv(a, b))
}

/// Positions of every solid symbol, grouped by symbol in ascending order.
struct Occurrences(Vec<(Symbol, Vec<usize>)>);

impl Occurrences {
    /// Alphabets up to this size are grouped by linear search.
    const SMALL: usize = 16;

    fn of(s: &[Symbol]) -> Self {
        let mut groups: Vec<(Symbol, Vec<usize>)> = Vec::new();
        let mut index: HashMap<Symbol, usize> = HashMap::new();
        for (i, &c) in s.iter().enumerate() {
            if c.is_wildcard() {
                continue;
            }
            let slot = if groups.len() <= Self::SMALL {
                groups.iter().position(|(k, _)| *k == c)
            } else {
                index.get(&c).copied()
            };
            match slot {
                Some(g) => groups[g].1.push(i),
                None => {
                    groups.push((c, vec![i]));
                    if groups.len() == Self::SMALL + 1 {
                        index.extend(groups.iter().enumerate().map(|(g, (k, _))| (*k, g)));
                    } else if groups.len() > Self::SMALL + 1 {
                        index.insert(c, groups.len() - 1);
                    }
                }
            }
        }
        groups.sort_unstable_by_key(|(k, _)| *k);
        Occurrences(groups)
    }

    fn len(&self) -> usize {
        self.0.len()
    }

    fn get(&self, sym: Symbol) -> Option<&[usize]> {
        self.0
            .binary_search_by_key(&sym, |(k, _)| *k)
            .ok()
            .map(|g| self.0[g].1.as_slice())
    }

    fn symbols(&self) -> impl Iterator<Item = Symbol> + '_ {
        self.0.iter().map(|(k, _)| *k)
    }

    fn iter(&self) -> impl Iterator<Item = (Symbol, &[usize])> + '_ {
        self.0.iter().map(|(k, p)| (*k, p.as_slice()))
    }

    fn total(&self) -> usize {
        self.0.iter().map(|(_, p)| p.len()).sum()
    }
}

pub(crate) fn naive_mismatch_conv(a: &[Symbol], b: &[Symbol]) -> Vec<usize> {
    let mut out = vec![0usize; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x.is_wildcard() {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            if y.is_solid() && x != y {
                out[i + j] += 1;
            }
        }
    }
    out
}

/// mismatches = (solid x solid pairs) - (equal solid pairs), with equal pairs
/// of frequent symbols from transforms and of rare symbols by enumeration.
/// The solid-indicator spectrum is the sum of the per-symbol spectra plus one
/// spectrum for all remaining positions. `None` if the rounding could not be
/// certified.
fn spectral_mismatch_conv(
    a: &[Symbol],
    b: &[Symbol],
    same: bool,
    occ_a: &Occurrences,
    occ_b: &Occurrences,
    threshold: usize,
) -> Option<Vec<usize>> {
    let out_len = a.len() + b.len() - 1;
    let mut plan = RealTransform::for_output(out_len);
    let mut norm_product = ((occ_a.total() * occ_b.total()) as f64).sqrt();

    let mut frequent = Vec::new();
    let mut rare = Vec::new();
    for (sym, pa) in occ_a.iter() {
        if let Some(pb) = occ_b.get(sym) {
            if pb.len() >= threshold {
                frequent.push((sym, pa, pb));
            } else {
                rare.push((pa, pb));
            }
        }
    }

    let zero = vec![Complex64::default(); plan.spectrum_len()];
    let mut equal = zero.clone();
    let mut solid_a = zero.clone();
    let mut solid_b = if same { Vec::new() } else { zero };
    for &(_, pa, pb) in &frequent {
        norm_product += ((pa.len() * pb.len()) as f64).sqrt();
        let fa = plan.indicator_spectrum(pa.iter().copied());
        solid_a.iter_mut().zip(&fa).for_each(|(z, x)| *z += x);
        if same {
            equal.iter_mut().zip(&fa).for_each(|(z, x)| *z += x * x);
        } else {
            let fb = plan.indicator_spectrum(pb.iter().copied());
            solid_b.iter_mut().zip(&fb).for_each(|(z, y)| *z += y);
            equal.iter_mut().zip(fa.iter().zip(&fb)).for_each(|(z, (x, y))| *z += x * y);
        }
    }
    let is_frequent = |s: Symbol| frequent.iter().any(|&(f, _, _)| f == s);
    let mut add_rest = |occ: &Occurrences, into: &mut Vec<Complex64>| {
        let rest: Vec<usize> = occ
            .iter()
            .filter(|&(s, _)| !is_frequent(s))
            .flat_map(|(_, p)| p.iter().copied())
            .collect();
        if !rest.is_empty() {
            let f = plan.indicator_spectrum(rest);
            into.iter_mut().zip(&f).for_each(|(z, x)| *z += x);
        }
    };
    add_rest(occ_a, &mut solid_a);
    if !same {
        add_rest(occ_b, &mut solid_b);
    }
    let solid_b = if same { &solid_a } else { &solid_b };
    let acc: Vec<Complex64> = solid_a
        .iter()
        .zip(solid_b)
        .zip(&equal)
        .map(|((x, y), e)| x * y - e)
        .collect();
    if plan.error_bound(norm_product) > 0.125 {
        return None;
    }
    let mut values = round_checked(&plan.invert(acc, out_len))?;
    for (pa, pb) in rare {
        for &i in pa {
            for &j in pb {
                values[i + j] -= 1;
            }
        }
    }
    values
        .into_iter()
        .map(|v| usize::try_from(v).ok())
        .collect()
}

fn check_lengths(t: &[Symbol], p: &[Symbol]) -> Result<()> {
    if p.is_empty() || t.len() < p.len() {
        return Err(Error::LengthMismatch {
            left: t.len(),
            right: p.len(),
        });
    }
    Ok(())
}

/// Counting convolution of text `t` and pattern `p` (`|t| >= |p| >= 1`).
pub fn cconv(t: &[Symbol], p: &[Symbol], strategy: ConvStrategy) -> Result<CountArray> {
    check_lengths(t, p)?;
    let rev: Vec<Symbol> = p.iter().rev().copied().collect();
    Ok(CountArray(mismatch_conv(t, &rev, Some(strategy))))
}

/// Counting convolution with the strategy picked from length and alphabet.
pub fn cconv_auto(t: &[Symbol], p: &[Symbol]) -> Result<CountArray> {
    check_lengths(t, p)?;
    let rev: Vec<Symbol> = p.iter().rev().copied().collect();
    Ok(CountArray(mismatch_conv(t, &rev, None)))
}

/// Matching convolution via the zero test `sum p t (p - t)^2` with wildcards
/// encoded as 0; independent of the counting engine.
pub fn mconv(t: &[Symbol], p: &[Symbol]) -> Result<MatchArray> {
    check_lengths(t, p)?;
    let mut codes: HashMap<Symbol, i64> = HashMap::new();
    let mut encode = |c: Symbol| -> i64 {
        if c.is_wildcard() {
            0
        } else {
            let next = codes.len() as i64 + 1;
            *codes.entry(c).or_insert(next)
        }
    };
    let tv: Vec<i64> = t.iter().map(|&c| encode(c)).collect();
    let pv: Vec<i64> = p.iter().rev().map(|&c| encode(c)).collect();
    let pow = |v: &[i64], e: u32| v.iter().map(|x| x.pow(e)).collect::<Vec<_>>();
    let t2 = pow(&tv, 2);
    let p2 = pow(&pv, 2);
    let a = conv_int(&tv, &pow(&pv, 3))?;
    let b = conv_int(&t2, &p2)?;
    let c = conv_int(&pow(&tv, 3), &pv)?;
    Ok(MatchArray(
        a.iter()
            .zip(&b)
            .zip(&c)
            .map(|((&x, &y), &z)| x - 2 * y + z == 0)
            .collect(),
    ))
}

/// `min(cconv(s, t), k + 1)` pointwise.
pub fn kconv_clamp(s: &[Symbol], t: &[Symbol], k: usize) -> Result<CountArray> {
    Ok(cconv_auto(s, t)?.clamp(k))
}

/// Reports, for every full alignment of `pattern` against `text`, the 1-based
/// pattern position of the `k`-th mismatch, or `None` if there are fewer.
pub trait MismatchOracle {
    fn kth_mismatch(&self, text: &[Symbol], pattern: &[Symbol], k: usize) -> Vec<Option<usize>>;
}

/// The k-convolution of two equal-length solid strings computed from a
/// `(k+1)`-th mismatch oracle by sentinel padding.
///
/// The text is padded with `n + k` sentinels and the pattern with `k + 1`
/// distinct padding symbols, so every alignment has at least `k + 1`
/// mismatches and the oracle always answers. Swapping the roles of `s` and
/// `t` yields the prefix half of the array.
pub fn kconv_via_pos(
    s: &[Symbol],
    t: &[Symbol],
    k: usize,
    oracle: &dyn MismatchOracle,
) -> Result<CountArray> {
    if s.iter().chain(t).any(|c| c.is_wildcard()) {
        return Err(Error::SolidOnly);
    }
    if s.len() != t.len() || s.is_empty() {
        return Err(Error::LengthMismatch {
            left: s.len(),
            right: t.len(),
        });
    }
    let n = s.len();
    let mut out = vec![0usize; 2 * n - 1];
    let mut half = |text: &[Symbol], pattern: &[Symbol], place: &dyn Fn(usize) -> usize| -> Result<()> {
        let mut padded_text = text.to_vec();
        padded_text.resize(2 * n + k, Symbol::SENTINEL);
        let mut padded_pattern = pattern.to_vec();
        padded_pattern.resize(n + k + 1, Symbol::PAD);
        let positions = oracle.kth_mismatch(&padded_text, &padded_pattern, k + 1);
        for shift in 1..=n {
            let j = positions
                .get(shift - 1)
                .copied()
                .flatten()
                .ok_or_else(|| Error::InternalInvariant(format!("oracle gave no position at alignment {shift}")))?;
            let inside = n - shift + 1;
            out[place(shift)] = if j <= inside { k + 1 } else { n + k + 2 - j - shift };
        }
        Ok(())
    };
    // text suffix S[i..] against pattern prefix: 0-based entry n + i - 2
    half(s, t, &|i| n + i - 2)?;
    // text T[i..] against S prefix: entry for the prefix of length n - i + 1
    half(t, s, &|i| n - i)?;
    Ok(CountArray(out))
}
