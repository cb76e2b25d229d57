//! Exact maximal palindromes from prefix self-convolutions followed by a
//! bounded naive extension.
//!
//! Phase 1 self-convolves the prefixes of the interleaved string ending at
//! every multiple of the block size `u`. A palindrome that reaches one of
//! those boundaries is seen as a palindromic suffix there, so afterwards every
//! center's lower bound is within `u` of its true radius. Phase 2 closes that
//! gap by direct comparison.

use std::collections::HashSet;

use rayon::prelude::*;

use crate::center::{deinterleave_radii, interleave, CenteredRadiusArray, Extent};
use crate::convolve::{cost_f, for_each_self_hit};
use crate::error::Result;
use crate::naive::naive_pal_extend;
use crate::wildcard::Symbol;

/// Block size and the prefix boundaries it induces on a string of length `N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockPlan {
    u: usize,
    boundaries: Vec<usize>,
}

impl BlockPlan {
    /// Boundaries `min(i u, N)` for `i = 1..=ceil(N / u)`; `u` is clamped to `[1, N]`.
    pub fn new(len: usize, u: usize) -> Self {
        let u = u.clamp(1, len.max(1));
        let boundaries = (1..=len.div_ceil(u)).map(|i| (i * u).min(len)).collect();
        BlockPlan { u, boundaries }
    }

    pub fn u(&self) -> usize {
        self.u
    }

    pub fn boundaries(&self) -> &[usize] {
        &self.boundaries
    }
}

/// Block size balancing the two phases on a string of length `len`.
pub fn default_block_size(len: usize, sigma: usize, k: usize) -> usize {
    let n = len.max(1) as f64;
    let mut balance = n * (n + 1.0).log2();
    if k > 0 {
        let relative = cost_f(len, sigma) as f64 / cost_f(len, 2) as f64;
        balance *= relative.max(1.0);
    }
    (balance.sqrt().floor() as usize).clamp(1, len.max(1))
}

/// Phase 1: per position of `s`, the longest palindrome (at most `k`
/// mismatching pairs) seen as a suffix of one of the plan's prefixes.
pub fn phase1_coarse(s: &[Symbol], plan: &BlockPlan, k: usize) -> Vec<Extent> {
    let merge = |mut acc: Vec<Extent>, other: Vec<Extent>| {
        for (a, b) in acc.iter_mut().zip(other) {
            if b.improves_on(*a) {
                *a = b;
            }
        }
        acc
    };
    plan.boundaries()
        .par_iter()
        .fold(
            || vec![Extent::default(); s.len()],
            |mut acc, &b| {
                for_each_self_hit(s, 0..b, k, |hit| {
                    let e = Extent::new(hit.radius, hit.mismatches);
                    if e.improves_on(acc[hit.center]) {
                        acc[hit.center] = e;
                    }
                });
                acc
            },
        )
        .reduce(|| vec![Extent::default(); s.len()], merge)
}

/// Counters from one run of the precise algorithm.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PreciseTrace {
    pub u: usize,
    pub interleaved_len: usize,
    /// Symbol pairs compared during phase 2.
    pub extension_work: usize,
}

fn distinct_symbols(s: &[Symbol]) -> usize {
    s.iter().filter(|c| c.is_user()).collect::<HashSet<_>>().len()
}

/// Exact maximal k-palindrome lengths at every center.
pub fn precise_all_maximal(s: &[Symbol], k: usize, u_override: Option<usize>) -> Result<CenteredRadiusArray> {
    precise_all_maximal_traced(s, k, u_override).map(|(r, _)| r)
}

pub fn precise_all_maximal_traced(
    s: &[Symbol],
    k: usize,
    u_override: Option<usize>,
) -> Result<(CenteredRadiusArray, PreciseTrace)> {
    let t = interleave(s);
    let len = t.len();
    let u = u_override.unwrap_or_else(|| default_block_size(len, distinct_symbols(s), k));
    let plan = BlockPlan::new(len, u);
    let coarse = phase1_coarse(&t, &plan, k);
    let (extents, work): (Vec<Extent>, Vec<usize>) = (1..len - 1)
        .into_par_iter()
        .map(|c| {
            let lower = coarse[c];
            let more = naive_pal_extend(&t, c, lower.radius, lower.used, k);
            (Extent::new(lower.radius + more.radius, more.used), more.radius + 1)
        })
        .unzip();
    let trace = PreciseTrace {
        u: plan.u(),
        interleaved_len: len,
        extension_work: work.iter().sum(),
    };
    Ok((deinterleave_radii(&extents)?, trace))
}
