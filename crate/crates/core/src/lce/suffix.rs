//! Suffix array by prefix doubling, Kasai LCP and a sparse-table minimum.

/// Suffix array of `s`, whose values must lie in `0..sigma`.
pub(crate) fn suffix_array(s: &[u32], sigma: usize) -> Vec<u32> {
    let n = s.len();
    if n == 0 {
        return Vec::new();
    }
    let mut rank: Vec<u32> = s.iter().map(|&c| c + 1).collect();
    let mut sa: Vec<u32> = Vec::with_capacity(n);
    {
        let mut count = vec![0usize; sigma + 2];
        for &r in &rank {
            count[r as usize] += 1;
        }
        let mut start = 0;
        for c in count.iter_mut() {
            let here = *c;
            *c = start;
            start += here;
        }
        sa.resize(n, 0);
        for (i, &r) in rank.iter().enumerate() {
            sa[count[r as usize]] = i as u32;
            count[r as usize] += 1;
        }
    }
    let mut by_second = vec![0u32; n];
    let mut next_rank = vec![0u32; n];
    let mut count = vec![0usize; n.max(sigma) + 2];
    let mut h = 1;
    loop {
        // order by the rank h positions ahead; suffixes running off the end first
        let mut at = 0;
        for i in n - h.min(n)..n {
            by_second[at] = i as u32;
            at += 1;
        }
        for &j in &sa {
            if j as usize >= h {
                by_second[at] = j - h as u32;
                at += 1;
            }
        }
        // stable counting sort by the first rank
        let max_rank = *rank.iter().max().unwrap() as usize;
        count[..=max_rank + 1].iter_mut().for_each(|c| *c = 0);
        for &r in &rank {
            count[r as usize + 1] += 1;
        }
        for r in 1..=max_rank + 1 {
            count[r] += count[r - 1];
        }
        for &i in &by_second {
            let r = rank[i as usize] as usize;
            sa[count[r]] = i;
            count[r] += 1;
        }
        let key = |i: usize| (rank[i], if i + h < n { rank[i + h] } else { 0 });
        let mut r = 1;
        next_rank[sa[0] as usize] = 1;
        for w in 1..n {
            if key(sa[w] as usize) != key(sa[w - 1] as usize) {
                r += 1;
            }
            next_rank[sa[w] as usize] = r;
        }
        std::mem::swap(&mut rank, &mut next_rank);
        if r as usize == n {
            break;
        }
        h *= 2;
    }
    sa
}

/// Inverse permutation of `sa`.
pub(crate) fn inverse(sa: &[u32]) -> Vec<u32> {
    let mut rank = vec![0u32; sa.len()];
    for (r, &i) in sa.iter().enumerate() {
        rank[i as usize] = r as u32;
    }
    rank
}

/// `lcp[r]` is the common prefix length of suffixes `sa[r - 1]` and `sa[r]`;
/// `lcp[0] = 0`.
pub(crate) fn kasai(s: &[u32], sa: &[u32], rank: &[u32]) -> Vec<u32> {
    let n = s.len();
    let mut lcp = vec![0u32; n];
    let mut h = 0usize;
    for i in 0..n {
        let r = rank[i] as usize;
        if r == 0 {
            h = 0;
            continue;
        }
        let j = sa[r - 1] as usize;
        while i + h < n && j + h < n && s[i + h] == s[j + h] {
            h += 1;
        }
        lcp[r] = h as u32;
        h = h.saturating_sub(1);
    }
    lcp
}

/// Constant-time range minimum over a fixed array.
pub(crate) struct SparseTable {
    levels: Vec<Vec<u32>>,
}

impl SparseTable {
    pub(crate) fn new(values: Vec<u32>) -> Self {
        let mut levels = vec![values];
        let mut width = 1;
        while 2 * width <= levels[0].len() {
            let prev = levels.last().unwrap();
            let next = (0..prev.len() - width)
                .map(|i| prev[i].min(prev[i + width]))
                .collect();
            levels.push(next);
            width *= 2;
        }
        SparseTable { levels }
    }

    /// Minimum of `values[lo..=hi]`.
    pub(crate) fn min(&self, lo: usize, hi: usize) -> u32 {
        let level = (usize::BITS - 1 - (hi - lo + 1).leading_zeros()) as usize;
        let row = &self.levels[level];
        row[lo].min(row[hi + 1 - (1 << level)])
    }
}
