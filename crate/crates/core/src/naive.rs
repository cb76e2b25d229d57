//! Character-by-character palindrome scans and brute-force oracles.
//!
//! Positions are 0-based indices into whatever slice is passed; the scans work
//! on any string, though the algorithms call them on the interleaved string.

use crate::center::{deinterleave_radii, interleave, CenteredRadiusArray, Extent};
use crate::convolve::MismatchOracle;
use crate::error::Result;
use crate::wildcard::{sym_match, Symbol};

/// Compares mirror pairs at distances `from + 1, from + 2, ...` around `c`,
/// starting with `used` mismatches, for at most `limit` successful steps.
/// Returns the number of steps taken and the final budget use.
fn scan(s: &[Symbol], c: usize, from: usize, used: usize, k: usize, limit: usize) -> (usize, usize) {
    let mut used = used;
    let mut d = from;
    let reach = c.min(s.len() - 1 - c);
    while d < reach && d - from < limit {
        let (a, b) = (s[c - d - 1], s[c + d + 1]);
        if !sym_match(a, b) {
            if used == k {
                break;
            }
            used += 1;
        }
        d += 1;
    }
    (d - from, used)
}

/// `min(u, r_c)` for the k-palindrome radius at `c`, with the mismatches used
/// to reach it. Only successful steps count toward `u`.
pub fn naive_pal_find(s: &[Symbol], c: usize, u: usize, k: usize) -> Extent {
    let (radius, used) = scan(s, c, 0, 0, k, u);
    Extent::new(radius, used)
}

/// Extends the k-palindrome of radius `r0` (with `used0` mismatches) at `c`
/// as far as the budget allows. Returns the added radius and final budget use.
pub fn naive_pal_extend(s: &[Symbol], c: usize, r0: usize, used0: usize, k: usize) -> Extent {
    let (added, used) = scan(s, c, r0, used0, k, usize::MAX);
    Extent::new(added, used)
}

/// Maximal k-palindrome lengths at every center by exhaustive scanning.
pub fn brute_all_maximal(s: &[Symbol], k: usize) -> Result<CenteredRadiusArray> {
    let t = interleave(s);
    let extents: Vec<Extent> = (1..t.len() - 1)
        .map(|c| naive_pal_find(&t, c, usize::MAX, k))
        .collect();
    deinterleave_radii(&extents)
}

/// For every alignment of `pattern` in `text`, the 1-based pattern position of
/// the `k`-th mismatch (`k >= 1`), or `None` if there are fewer.
pub fn brute_pos_k(text: &[Symbol], pattern: &[Symbol], k: usize) -> Vec<Option<usize>> {
    assert!(k >= 1, "mismatch rank is 1-based");
    if pattern.len() > text.len() {
        return Vec::new();
    }
    text.windows(pattern.len())
        .map(|w| {
            w.iter()
                .zip(pattern)
                .enumerate()
                .filter(|(_, (&a, &b))| !sym_match(a, b))
                .nth(k - 1)
                .map(|(j, _)| j + 1)
        })
        .collect()
}

/// Linear-scan mismatch oracle.
#[derive(Clone, Copy, Debug, Default)]
pub struct BrutePos;

impl MismatchOracle for BrutePos {
    fn kth_mismatch(&self, text: &[Symbol], pattern: &[Symbol], k: usize) -> Vec<Option<usize>> {
        brute_pos_k(text, pattern, k)
    }
}
