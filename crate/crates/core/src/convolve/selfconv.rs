//! Self-convolutions: a factor compared against its own reverse.
//!
//! Entry `s` of `cconv(W, rev W)` counts the mismatching pairs
//! `(W[x], W[s - x])`, which is the auto-convolution of `W`. Entries with even
//! `s` belong to odd-length prefixes and suffixes of `W`, all centered at
//! `s / 2`; only those are turned into palindrome hits. Pairs of an even
//! entry never mix the two position-parity classes of `W`, so they are
//! computed as two half-length auto-convolutions, and a class holding a single
//! solid symbol (the sentinel class of an interleaved string) costs nothing.

use std::ops::Range;

use super::mismatch_conv;
use crate::wildcard::Symbol;

/// An odd-length palindromic prefix or suffix found in a window.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PalHit {
    /// 0-based position in the string the window was taken from.
    pub center: usize,
    pub radius: usize,
    /// Mismatching mirror pairs within the radius.
    pub mismatches: usize,
}

/// `cconv(w, rev w)`, all `2|w| - 1` entries.
pub fn self_counts(w: &[Symbol]) -> Vec<usize> {
    mismatch_conv(w, w, None)
}

fn auto_counts(class: &[Symbol]) -> Option<Vec<usize>> {
    let mut solid = class.iter().filter(|c| c.is_solid());
    let first = solid.next()?;
    // a single solid symbol cannot mismatch with itself
    solid.any(|c| c != first).then(|| mismatch_conv(class, class, None))
}

/// The even entries of `cconv(w, rev w)`: entry `j` is the Hamming distance of
/// the longest odd-length factor of `w` centered at `j`.
pub fn odd_self_counts(w: &[Symbol]) -> Vec<usize> {
    let len = w.len();
    let even: Vec<Symbol> = w.iter().step_by(2).copied().collect();
    let odd: Vec<Symbol> = w.iter().skip(1).step_by(2).copied().collect();
    let mut out = vec![0usize; len];
    if let Some(e) = auto_counts(&even) {
        for (slot, v) in out.iter_mut().zip(e) {
            *slot += v;
        }
    }
    if let Some(o) = auto_counts(&odd) {
        for (slot, v) in out.iter_mut().skip(1).zip(o) {
            *slot += v;
        }
    }
    out
}

/// Calls `f` for every center of `s[window]` whose odd-length prefix or
/// suffix palindrome has at most `k` mismatching pairs (Hamming distance at
/// most `2k`).
pub fn for_each_self_hit(s: &[Symbol], window: Range<usize>, k: usize, mut f: impl FnMut(PalHit)) {
    let w = &s[window.clone()];
    if w.is_empty() {
        return;
    }
    let last = w.len() - 1;
    for (j, count) in odd_self_counts(w).into_iter().enumerate() {
        if count <= 2 * k {
            f(PalHit {
                center: window.start + j,
                radius: j.min(last - j),
                mismatches: count / 2,
            });
        }
    }
}

pub fn self_hits(s: &[Symbol], window: Range<usize>, k: usize) -> Vec<PalHit> {
    let mut hits = Vec::new();
    for_each_self_hit(s, window, k, |h| hits.push(h));
    hits
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::center::interleave;
    use crate::wildcard::{pal_mismatch_count, WildcardString};

    fn ws(s: &str) -> WildcardString {
        WildcardString::from_text(s.as_bytes(), b'?').unwrap()
    }

    #[test]
    fn window_b_wild_b() {
        let s = ws("b?baac?cec?cc");
        let hits = self_hits(&s, 0..3, 0);
        assert!(hits.contains(&PalHit { center: 1, radius: 1, mismatches: 0 }));
        assert!(hits.contains(&PalHit { center: 2, radius: 0, mismatches: 0 }));
        assert_eq!(hits.len(), 3);
    }

    #[test]
    fn single_symbol_window() {
        let s = ws("xyz");
        assert_eq!(self_hits(&s, 1..2, 0), vec![PalHit { center: 1, radius: 0, mismatches: 0 }]);
    }

    #[test]
    fn budgeted_hit() {
        let s = ws("abc");
        let hits = self_hits(&s, 0..3, 1);
        assert!(hits.contains(&PalHit { center: 1, radius: 1, mismatches: 1 }));
        assert!(!self_hits(&s, 0..3, 0).iter().any(|h| h.center == 1));
    }

    #[test]
    fn odd_entries_agree_with_full_self_convolution() {
        for text in ["abcab?ba", "aaaa", "?", "ab?c?ba", "zzzzzyzzzzz"] {
            let s = ws(text);
            let full = self_counts(&s);
            let odd = odd_self_counts(&s);
            for (j, &v) in odd.iter().enumerate() {
                assert_eq!(v, full[2 * j], "{text} at {j}");
            }
        }
    }

    #[test]
    fn hits_match_mismatch_count_of_factor() {
        let s = interleave(&ws("ab?bacca?cab"));
        for window in [0..s.len(), 3..20, 6..7, 1..12] {
            for hit in self_hits(&s, window.clone(), 2) {
                let factor = &s[hit.center - hit.radius..=hit.center + hit.radius];
                assert_eq!(pal_mismatch_count(factor), hit.mismatches);
                assert!(hit.center - hit.radius == window.start || hit.center + hit.radius == window.end - 1);
            }
        }
    }
}
