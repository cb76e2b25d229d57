//! The 2n-1 center domain, the interleaving transform and the per-center
//! output array.
//!
//! Every algorithm in this crate runs on the interleaved string
//! `S' = $ S[1] $ S[2] $ ... $ S[n] $` of length `N = 2n + 1`. Palindromes of
//! `S'` centered at the 0-based position `p` (1 <= p <= 2n - 1) correspond to
//! palindromes of `S` centered at the 1-based center index `t = p`, and the
//! radius in `S'` equals the length of the palindrome in `S`.

use crate::error::{Error, Result};
use crate::wildcard::{Symbol, WildcardString};

/// A center of a length-`n` string, `1 <= t <= 2n - 1`. Odd `t` is the
/// character `(t + 1) / 2`, even `t` the gap after character `t / 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CenterIndex(usize);

impl CenterIndex {
    pub fn new(t: usize, n: usize) -> Option<Self> {
        (t >= 1 && t < 2 * n).then_some(CenterIndex(t))
    }

    pub fn get(self) -> usize {
        self.0
    }

    pub fn is_character(self) -> bool {
        self.0 % 2 == 1
    }

    /// The 1-based character position of an odd center.
    pub fn character(self) -> Option<usize> {
        self.is_character().then_some((self.0 + 1) / 2)
    }

    /// 1-based inclusive `(start, end)` of the palindrome of `length` centered
    /// here. For `length == 0` this is the empty span `(t/2 + 1, t/2)`.
    pub fn span(self, length: usize) -> (usize, usize) {
        let start = (self.0 + 2 - length) / 2;
        (start, start + length - 1)
    }
}

/// Radius and consumed mismatch budget at one center of the interleaved string.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Extent {
    pub radius: usize,
    pub used: usize,
}

impl Extent {
    pub fn new(radius: usize, used: usize) -> Self {
        Extent { radius, used }
    }

    /// Larger radius wins; on equal radii the smaller budget.
    pub fn improves_on(self, other: Extent) -> bool {
        self.radius > other.radius || (self.radius == other.radius && self.used < other.used)
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct CenterEntry {
    pub length: usize,
    pub mismatches: usize,
}

/// Maximal (k-)palindrome length and mismatch count for every center.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CenteredRadiusArray {
    n: usize,
    entries: Vec<CenterEntry>,
}

impl CenteredRadiusArray {
    /// Length of the underlying string.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[CenterEntry] {
        &self.entries
    }

    /// Entry at the 1-based center index `t`.
    pub fn get(&self, t: usize) -> CenterEntry {
        self.entries[t - 1]
    }

    pub fn iter(&self) -> impl Iterator<Item = (CenterIndex, CenterEntry)> + '_ {
        self.entries
            .iter()
            .enumerate()
            .map(|(i, &e)| (CenterIndex(i + 1), e))
    }

    pub fn lengths(&self) -> Vec<usize> {
        self.entries.iter().map(|e| e.length).collect()
    }
}

/// `$ S[1] $ S[2] ... $ S[n] $`, length `2n + 1`.
pub fn interleave(s: &[Symbol]) -> WildcardString {
    let mut out = Vec::with_capacity(2 * s.len() + 1);
    out.push(Symbol::SENTINEL);
    for &c in s {
        out.push(c);
        out.push(Symbol::SENTINEL);
    }
    WildcardString::from_symbols(out)
}

/// Converts per-position extents of `S'` (positions `1..=2n-1`, boundary
/// sentinels excluded) into lengths over the original center domain.
pub fn deinterleave_radii(extents: &[Extent]) -> Result<CenteredRadiusArray> {
    if extents.len() % 2 == 0 {
        return Err(Error::InternalInvariant(format!(
            "expected 2n-1 extents, got {}",
            extents.len()
        )));
    }
    let n = extents.len().div_ceil(2);
    let entries = extents
        .iter()
        .enumerate()
        .map(|(i, e)| {
            let t = i + 1;
            let length = e.radius;
            if length % 2 != t % 2 || length > t || length > 2 * n - t {
                return Err(Error::InternalInvariant(format!(
                    "center {t}: length {length} invalid for n = {n}"
                )));
            }
            Ok(CenterEntry {
                length,
                mismatches: e.used,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CenteredRadiusArray { n, entries })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ws(s: &str) -> WildcardString {
        WildcardString::from_text(s.as_bytes(), b'?').unwrap()
    }

    #[test]
    fn interleave_layout() {
        let s = ws("ab");
        let t = interleave(&s);
        assert_eq!(
            t.symbols(),
            &[Symbol::SENTINEL, s[0], Symbol::SENTINEL, s[1], Symbol::SENTINEL]
        );
        assert_eq!(interleave(&ws("a")).len(), 3);
    }

    #[test]
    fn interleave_fragments() {
        let t = interleave(&ws("?b"));
        assert_eq!(t.fragments(), &[1..2]);
    }

    #[test]
    fn deinterleave_examples() {
        // "aba": S' = $a$b$a$, radius 3 at the middle (t = 3)
        let r = deinterleave_radii(&[
            Extent::new(1, 0),
            Extent::new(0, 0),
            Extent::new(3, 0),
            Extent::new(0, 0),
            Extent::new(1, 0),
        ])
        .unwrap();
        assert_eq!(r.n(), 3);
        assert_eq!(r.get(3).length, 3);
        // "aa": gap center t = 2 has length 2
        let r = deinterleave_radii(&[Extent::new(1, 0), Extent::new(2, 0), Extent::new(1, 0)])
            .unwrap();
        assert_eq!(r.get(2).length, 2);
        // "ab": no even palindrome
        let r = deinterleave_radii(&[Extent::new(1, 0), Extent::new(0, 0), Extent::new(1, 0)])
            .unwrap();
        assert_eq!(r.get(2).length, 0);
    }

    #[test]
    fn deinterleave_rejects_bad_parity_and_bounds() {
        assert!(matches!(
            deinterleave_radii(&[Extent::new(1, 0), Extent::new(1, 0), Extent::new(1, 0)]),
            Err(Error::InternalInvariant(_))
        ));
        assert!(matches!(
            deinterleave_radii(&[Extent::new(3, 0), Extent::new(0, 0), Extent::new(1, 0)]),
            Err(Error::InternalInvariant(_))
        ));
        assert!(deinterleave_radii(&[Extent::new(1, 0), Extent::new(0, 0)]).is_err());
    }

    #[test]
    fn spans() {
        let t = CenterIndex::new(7, 7).unwrap();
        assert_eq!(t.span(7), (1, 7));
        assert_eq!(t.character(), Some(4));
        let g = CenterIndex::new(2, 2).unwrap();
        assert_eq!(g.span(2), (1, 2));
        assert_eq!(g.span(0), (2, 1));
        assert!(CenterIndex::new(0, 3).is_none());
        assert!(CenterIndex::new(6, 3).is_none());
    }

    #[test]
    fn extent_ordering() {
        assert!(Extent::new(3, 2).improves_on(Extent::new(2, 0)));
        assert!(Extent::new(3, 1).improves_on(Extent::new(3, 2)));
        assert!(!Extent::new(3, 2).improves_on(Extent::new(3, 2)));
    }
}
