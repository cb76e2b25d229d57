//! (1+ε)-approximate maximal palindromes from self-convolutions of windows
//! around anchors.
//!
//! The window half-width `u` grows geometrically from `u0`; each time it
//! doubles, every second anchor is dropped, so one round costs `O(N log u)`.
//! All positions are 0-based indices into the interleaved string.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, One, ToPrimitive};
use rayon::prelude::*;

use crate::center::{deinterleave_radii, interleave, CenteredRadiusArray, Extent};
use crate::convolve::{self_hits, PalHit};
use crate::error::{Error, Result};
use crate::naive::naive_pal_find;
use crate::wildcard::Symbol;

/// Windows self-convolved in parallel before their hits are merged.
const ANCHOR_BATCH: usize = 256;

/// Accuracy parameter and the derived growth schedule.
#[derive(Clone, Debug, PartialEq)]
pub struct ApproxParams {
    epsilon: f64,
    delta: BigRational,
    u0: usize,
}

impl ApproxParams {
    pub fn new(epsilon: f64) -> Result<Self> {
        if !(epsilon > 0.0 && epsilon <= 0.5) {
            return Err(Error::BadEpsilon(epsilon));
        }
        let delta = BigRational::from_f64(epsilon).ok_or(Error::BadEpsilon(epsilon))?
            / BigRational::from_integer(BigInt::from(4));
        let inverse = (BigRational::one() / &delta).ceil().to_usize().ok_or(Error::BadEpsilon(epsilon))?;
        Ok(ApproxParams {
            epsilon,
            delta,
            u0: inverse.next_power_of_two(),
        })
    }

    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }

    /// Per-round growth rate, `epsilon / 4`.
    pub fn delta(&self) -> &BigRational {
        &self.delta
    }

    /// Initial window half-width: `1 / delta` rounded up to a power of two.
    pub fn u0(&self) -> usize {
        self.u0
    }
}

/// Sorted anchor positions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnchorSet(Vec<usize>);

impl AnchorSet {
    /// The 1-based positions `i u0 / 2` for `1 <= i <= 2N / u0`, stored 0-based.
    pub fn initial(len: usize, u0: usize) -> Self {
        let step = (u0 / 2).max(1);
        AnchorSet((1..=len / step).map(|i| i * step - 1).collect())
    }

    pub fn from_positions(mut positions: Vec<usize>) -> Self {
        positions.sort_unstable();
        AnchorSet(positions)
    }

    /// Keeps the 2nd, 4th, ... anchors.
    pub fn thin(&mut self) {
        self.0 = self.0.iter().skip(1).step_by(2).copied().collect();
    }

    pub fn positions(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Radius certified at `c` by the window of half-width `u` around `a`, on a
/// string of length `len`; negative if `c` lies outside the window.
pub fn rad(c: usize, a: usize, u: usize, len: usize) -> i64 {
    let lo = a.saturating_sub(u) as i64;
    let hi = (a + u).min(len - 1) as i64;
    let c = c as i64;
    (c - lo).min(hi - c)
}

/// The anchor maximizing [`rad`] among the nearest anchor on each side of
/// `c`; ties go to the smaller one.
pub fn anchor_of(c: usize, anchors: &AnchorSet, u: usize, len: usize) -> Option<usize> {
    let a = anchors.positions();
    let right = a.partition_point(|&x| x < c);
    let candidates = [right.checked_sub(1), (right < a.len()).then_some(right)];
    candidates
        .into_iter()
        .flatten()
        .map(|i| a[i])
        .fold(None, |best: Option<usize>, x| match best {
            Some(b) if rad(c, b, u, len) >= rad(c, x, u, len) => Some(b),
            _ => Some(x),
        })
}

/// Per-round record of the schedule.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ApproxTrace {
    pub u0: usize,
    pub interleaved_len: usize,
    /// Window half-width `ceil(u)` used in each round.
    pub widths: Vec<usize>,
    /// Anchors processed in each round.
    pub anchor_counts: Vec<usize>,
}

/// Lower bounds with `L <= L_true <= (1 + epsilon) L` per center.
pub fn approx_all_maximal(s: &[Symbol], epsilon: f64, k: usize) -> Result<CenteredRadiusArray> {
    approx_all_maximal_traced(s, epsilon, k).map(|(r, _)| r)
}

pub fn approx_all_maximal_traced(
    s: &[Symbol],
    epsilon: f64,
    k: usize,
) -> Result<(CenteredRadiusArray, ApproxTrace)> {
    let params = ApproxParams::new(epsilon)?;
    let t = interleave(s);
    let len = t.len();
    let u0 = params.u0();
    let mut best: Vec<Extent> = (0..len)
        .into_par_iter()
        .map(|c| naive_pal_find(&t, c, u0, k))
        .collect();

    let growth = BigRational::one() + params.delta();
    let mut u = BigRational::from_integer(BigInt::from(u0));
    let mut doubling = BigRational::from_integer(BigInt::from(2 * u0));
    let mut anchors = AnchorSet::initial(len, u0);
    let mut trace = ApproxTrace {
        u0,
        interleaved_len: len,
        ..ApproxTrace::default()
    };
    loop {
        let width = u.ceil().to_integer().to_usize().unwrap_or(usize::MAX);
        for batch in anchors.positions().chunks(ANCHOR_BATCH) {
            let hits: Vec<Vec<PalHit>> = batch
                .par_iter()
                .map(|&a| {
                    let window = a.saturating_sub(width)..a.saturating_add(width).min(len - 1) + 1;
                    self_hits(&t, window, k)
                })
                .collect();
            for hit in hits.into_iter().flatten() {
                let e = Extent::new(hit.radius, hit.mismatches);
                if e.improves_on(best[hit.center]) {
                    best[hit.center] = e;
                }
            }
        }
        trace.widths.push(width);
        trace.anchor_counts.push(anchors.len());
        if width >= len {
            break;
        }
        u *= &growth;
        if u >= doubling {
            doubling *= BigRational::from_integer(BigInt::from(2));
            anchors.thin();
        }
    }

    // A bound ending on a symbol pair can always take the sentinel pair
    // beyond it, which restores the center's length parity.
    let extents: Vec<Extent> = (1..len - 1)
        .map(|c| {
            let e = best[c];
            if e.radius % 2 == c % 2 {
                e
            } else {
                Extent::new(e.radius + 1, e.used)
            }
        })
        .collect();
    Ok((deinterleave_radii(&extents)?, trace))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::naive::brute_all_maximal;
    use crate::wildcard::{pal_mismatch_count, WildcardString};
    use proptest::prelude::*;

    fn ws(s: &str) -> WildcardString {
        WildcardString::from_text(s.as_bytes(), b'?').unwrap()
    }

    #[test]
    fn parameters() {
        assert_eq!(ApproxParams::new(0.5).unwrap().u0(), 8);
        assert_eq!(ApproxParams::new(0.25).unwrap().u0(), 16);
        assert_eq!(ApproxParams::new(0.05).unwrap().u0(), 128);
        for bad in [0.0, -0.1, 0.51, f64::NAN] {
            assert!(matches!(ApproxParams::new(bad), Err(Error::BadEpsilon(_))));
        }
    }

    #[test]
    fn radius_formula() {
        // 1-based geometry shifted down by one
        assert_eq!(rad(4, 3, 2, 16), 1);
        assert_eq!(rad(7, 7, 3, 16), 3);
        assert_eq!(rad(0, 4, 4, 16), 0);
        assert_eq!(rad(0, 2, 9, 16), 0);
    }

    #[test]
    fn anchors_on_the_sixteen_symbol_example() {
        let all = AnchorSet::from_positions(vec![3, 7, 11, 15]);
        assert_eq!(anchor_of(4, &all, 2, 16), Some(3));
        assert_eq!(anchor_of(4, &all, 3, 16), Some(3));
        assert_eq!(anchor_of(4, &all, 6, 16), Some(3));
        let two = AnchorSet::from_positions(vec![7, 15]);
        assert_eq!(anchor_of(4, &two, 8, 16), Some(7));
        let tie = AnchorSet::from_positions(vec![4, 8]);
        assert_eq!(anchor_of(6, &tie, 3, 16), Some(4));
    }

    #[test]
    fn thinning_keeps_even_ranks() {
        let mut a = AnchorSet::initial(16, 4);
        assert_eq!(a.positions(), &[1, 3, 5, 7, 9, 11, 13, 15]);
        a.thin();
        assert_eq!(a.positions(), &[3, 7, 11, 15]);
        a.thin();
        assert_eq!(a.positions(), &[7, 15]);
    }

    #[test]
    fn uniform_string() {
        let n = 64;
        let r = approx_all_maximal(&ws(&"a".repeat(n)), 0.5, 0).unwrap();
        for t in 1..2 * n {
            let truth = t.min(2 * n - t);
            let got = r.get(t).length;
            assert!(got <= truth && (truth as f64) <= 1.5 * got as f64, "t={t}: {got} vs {truth}");
        }
    }

    #[test]
    fn small_radii_are_exact() {
        let s = ws("b?baac?cec?ccab?");
        let truth = brute_all_maximal(&s, 0).unwrap();
        let r = approx_all_maximal(&s, 0.05, 0).unwrap();
        assert_eq!(r.get(9), truth.get(9));
    }

    #[test]
    fn schedule_shape() {
        let s = ws(&"ab?".repeat(200));
        let (_, trace) = approx_all_maximal_traced(&s, 0.25, 0).unwrap();
        let len = trace.interleaved_len;
        assert!(*trace.widths.last().unwrap() >= len);
        for (w, a) in trace.widths.iter().zip(&trace.anchor_counts) {
            assert!(*a <= 4 * len / w + 1);
        }
        let delta = 0.25 / 4.0;
        let bound = ((len as f64 / trace.u0 as f64).ln() / (1.0f64 + delta).ln()).ceil() as usize + 2;
        assert!(trace.widths.len() <= bound);
    }

    fn text() -> impl Strategy<Value = String> {
        prop::collection::vec(prop::sample::select(vec!['a', 'b', '?']), 1..200)
            .prop_map(|v| v.into_iter().collect())
    }

    proptest! {
        #[test]
        fn ratio_guarantee(t in text(), k in 0usize..3, e in prop::sample::select(vec![0.05, 0.25, 0.5])) {
            let s = ws(&t);
            let sp = interleave(&s);
            let truth = brute_all_maximal(&s, k).unwrap();
            let got = approx_all_maximal(&s, e, k).unwrap();
            let u0 = ApproxParams::new(e).unwrap().u0();
            for (c, entry) in got.iter() {
                let real = truth.get(c.get()).length;
                let (l, m) = (entry.length, entry.mismatches);
                let p = c.get();
                prop_assert_eq!(pal_mismatch_count(&sp[p - l..=p + l]), m);
                prop_assert!(m <= k);
                prop_assert!(l <= real);
                prop_assert!(real as f64 <= (1.0 + e) * l as f64);
                if real < u0 {
                    prop_assert_eq!(l, real);
                }
            }
        }
    }
}
