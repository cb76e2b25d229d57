//! Longest common extensions between a string and its reverse, with wildcard
//! fragments skipped by jumps and mismatches skipped by kangaroo steps.
//!
//! The index is built over `D = X # rev(X)` where `#` is a unique solid
//! separator. Wildcards get an ordinary code inside the suffix array, so a
//! plain LCE query extends through wildcard/wildcard pairs and stops at a
//! wildcard/solid pair, where the fragment jumper takes over.

mod suffix;

use rayon::prelude::*;

use crate::center::{deinterleave_radii, interleave, CenteredRadiusArray, Extent};
use crate::error::Result;
use crate::wildcard::Symbol;
use suffix::{inverse, kasai, suffix_array, SparseTable};

/// Constant-time LCE queries over `X # rev(X)`.
pub struct LceIndex {
    text: Vec<Symbol>,
    half: usize,
    rank: Vec<u32>,
    lcp: SparseTable,
}

impl LceIndex {
    pub fn build(x: &[Symbol]) -> Self {
        let mut text = Vec::with_capacity(2 * x.len() + 1);
        text.extend_from_slice(x);
        text.push(Symbol::SEPARATOR);
        text.extend(x.iter().rev());

        let mut alphabet = text.clone();
        alphabet.sort_unstable();
        alphabet.dedup();
        let codes: Vec<u32> = text
            .iter()
            .map(|c| alphabet.binary_search(c).unwrap() as u32)
            .collect();
        let sa = suffix_array(&codes, alphabet.len());
        let rank = inverse(&sa);
        let lcp = kasai(&codes, &sa, &rank);
        LceIndex {
            text,
            half: x.len(),
            rank,
            lcp: SparseTable::new(lcp),
        }
    }

    /// The indexed text `X # rev(X)`.
    pub fn text(&self) -> &[Symbol] {
        &self.text
    }

    /// Position in the index of `rev(X)[q]`.
    pub fn reverse_offset(&self, q: usize) -> usize {
        self.half + 1 + q
    }

    /// One past the last position of the half containing `i`.
    pub fn segment_end(&self, i: usize) -> usize {
        if i < self.half {
            self.half
        } else {
            self.text.len()
        }
    }

    /// Longest common prefix of the suffixes at `i` and `j`, with wildcards
    /// treated as an ordinary symbol.
    pub fn lce(&self, i: usize, j: usize) -> usize {
        if i == j {
            return self.text.len() - i;
        }
        let (a, b) = (self.rank[i] as usize, self.rank[j] as usize);
        let (lo, hi) = (a.min(b), a.max(b));
        self.lcp.min(lo + 1, hi) as usize
    }
}

/// Last position of the wildcard fragment covering each position.
pub struct FragmentJumper {
    last: Vec<u32>,
}

impl FragmentJumper {
    pub fn new(text: &[Symbol]) -> Self {
        let mut last = vec![0u32; text.len()];
        for i in (0..text.len()).rev() {
            last[i] = if text[i].is_wildcard() && i + 1 < text.len() && text[i + 1].is_wildcard() {
                last[i + 1]
            } else {
                i as u32
            };
        }
        FragmentJumper { last }
    }

    /// End of the fragment covering `i`, or `i` itself for a solid position.
    pub fn jump(&self, i: usize) -> usize {
        self.last[i] as usize
    }
}

/// Work done by one extension query.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct QueryStats {
    pub lce_queries: usize,
    pub jumps: usize,
}

/// Extension of `i` against `j` under wildcard matching, skipping up to `k`
/// solid mismatches. Returns the length and the mismatches used.
pub fn lce_k_counted(
    idx: &LceIndex,
    frag: &FragmentJumper,
    i: usize,
    j: usize,
    k: usize,
    stats: &mut QueryStats,
) -> Extent {
    let text = idx.text();
    let (end_i, end_j) = (idx.segment_end(i), idx.segment_end(j));
    let mut len = 0;
    let mut used = 0;
    loop {
        if i + len >= end_i || j + len >= end_j {
            return Extent::new(len, used);
        }
        stats.lce_queries += 1;
        len += idx.lce(i + len, j + len);
        let (a, b) = (i + len, j + len);
        if a >= end_i || b >= end_j {
            return Extent::new(len.min(end_i - i).min(end_j - j), used);
        }
        let (x, y) = (text[a], text[b]);
        if x.is_wildcard() || y.is_wildcard() {
            // one side sits in a fragment: everything up to its end matches
            let last = if x.is_wildcard() { frag.jump(a) - a } else { frag.jump(b) - b };
            stats.jumps += 1;
            len += (last + 1).min(end_i - a).min(end_j - b);
            continue;
        }
        if used == k {
            return Extent::new(len, used);
        }
        used += 1;
        len += 1;
    }
}

pub fn lce_k(idx: &LceIndex, frag: &FragmentJumper, i: usize, j: usize, k: usize) -> Extent {
    lce_k_counted(idx, frag, i, j, k, &mut QueryStats::default())
}

/// Wildcard-aware extension without mismatches.
pub fn lce_w(idx: &LceIndex, frag: &FragmentJumper, i: usize, j: usize) -> usize {
    lce_k(idx, frag, i, j, 0).radius
}

/// Maximal k-palindromes at every center by one extension query per center.
pub fn all_maximal_lce(s: &[Symbol], k: usize) -> Result<CenteredRadiusArray> {
    let t = interleave(s);
    let n = t.len();
    let idx = LceIndex::build(&t);
    let frag = FragmentJumper::new(idx.text());
    let extents: Vec<Extent> = (1..n - 1)
        .into_par_iter()
        .map(|c| lce_k(&idx, &frag, c + 1, idx.reverse_offset(n - c), k))
        .collect();
    deinterleave_radii(&extents)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::naive::brute_all_maximal;
    use crate::wildcard::{wildcard_runs, WildcardString};
    use proptest::prelude::*;

    fn ws(s: &str) -> WildcardString {
        WildcardString::from_text(s.as_bytes(), b'?').unwrap()
    }

    #[test]
    fn solid_queries() {
        let s = ws("abcdcbx");
        let idx = LceIndex::build(&s);
        assert_eq!(idx.lce(4, idx.reverse_offset(4)), 2);
        let s = ws("aa");
        let idx = LceIndex::build(&s);
        assert_eq!(idx.lce(0, idx.reverse_offset(0)), 2);
        assert_eq!(idx.lce(1, 1), idx.text().len() - 1);
    }

    #[test]
    fn wildcard_queries() {
        let s = ws("a?b");
        let idx = LceIndex::build(&s);
        let frag = FragmentJumper::new(idx.text());
        assert_eq!(lce_w(&idx, &frag, 0, idx.reverse_offset(0)), 0);
        assert_eq!(lce_w(&idx, &frag, 1, idx.reverse_offset(1)), 1);
        let s = ws("????");
        let idx = LceIndex::build(&s);
        let frag = FragmentJumper::new(idx.text());
        assert_eq!(lce_w(&idx, &frag, 1, idx.reverse_offset(0)), 3);
        let s = ws("a??c");
        let idx = LceIndex::build(&s);
        let frag = FragmentJumper::new(idx.text());
        assert_eq!(frag.jump(1), 2);
        assert_eq!(frag.jump(0), 0);
        assert_eq!(lce_w(&idx, &frag, 0, idx.reverse_offset(1)), 3);
    }

    #[test]
    fn mismatch_queries() {
        let s = ws("ab");
        let idx = LceIndex::build(&s);
        let frag = FragmentJumper::new(idx.text());
        assert_eq!(lce_k(&idx, &frag, 0, idx.reverse_offset(0), 1), Extent::new(1, 1));
        assert_eq!(lce_k(&idx, &frag, 0, idx.reverse_offset(0), 2), Extent::new(2, 2));
        let s = ws("abab");
        let idx = LceIndex::build(&s);
        let frag = FragmentJumper::new(idx.text());
        assert_eq!(lce_k(&idx, &frag, 0, 0, 3), Extent::new(4, 0));
    }

    #[test]
    fn whole_string_examples() {
        let r = all_maximal_lce(&ws("abcdcbx"), 1).unwrap();
        assert_eq!(r.get(7).length, 7);
        assert_eq!(r.get(7).mismatches, 1);
        let n = 9;
        let r = all_maximal_lce(&ws("aaaaaaaaa"), 0).unwrap();
        for t in 1..2 * n {
            assert_eq!(r.get(t).length, t.min(2 * n - t));
        }
        let s = ws("b?baac?cec?cc");
        assert_eq!(all_maximal_lce(&s, 0).unwrap(), brute_all_maximal(&s, 0).unwrap());
    }

    fn text(max: usize) -> impl Strategy<Value = String> {
        prop::collection::vec(prop::sample::select(vec!['a', 'b', 'c', '?', '?']), 1..max)
            .prop_map(|v| v.into_iter().collect())
    }

    proptest! {
        #[test]
        fn equals_brute_force(t in text(200), k in 0usize..5) {
            let s = ws(&t);
            prop_assert_eq!(all_maximal_lce(&s, k).unwrap(), brute_all_maximal(&s, k).unwrap());
        }

        #[test]
        fn queries_bounded_by_fragments_crossed(t in text(120), k in 0usize..3) {
            let s = interleave(&ws(&t));
            let idx = LceIndex::build(&s);
            let frag = FragmentJumper::new(idx.text());
            let runs = wildcard_runs(idx.text());
            let n = s.len();
            for c in 1..n - 1 {
                let (i, j) = (c + 1, idx.reverse_offset(n - c));
                let mut stats = QueryStats::default();
                let e = lce_k_counted(&idx, &frag, i, j, k, &mut stats);
                let crossed = runs
                    .iter()
                    .filter(|r| (r.start < i + e.radius && r.end > i) || (r.start < j + e.radius && r.end > j))
                    .count();
                prop_assert!(stats.jumps <= crossed);
                prop_assert!(stats.lce_queries <= 2 * stats.jumps + e.used + 1);
            }
        }
    }
}
