//! Symbols, wildcard strings and wildcard-aware comparison.

use std::collections::HashSet;
use std::fmt;
use std::ops::{Deref, Range};

use crate::error::{Error, Result};

/// An alphabet code. User symbols occupy `0..=Symbol::MAX_USER`; the top of
/// the `u32` range is reserved for the wildcard and internal solid markers.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Symbol(u32);

impl Symbol {
    /// Matches every symbol, itself and all reserved markers included.
    pub const WILDCARD: Symbol = Symbol(u32::MAX);
    /// Solid marker used for interleaving and padding. Never equal to a user symbol.
    pub const SENTINEL: Symbol = Symbol(u32::MAX - 1);
    /// Unique separator between a string and its reverse in the LCE index.
    pub(crate) const SEPARATOR: Symbol = Symbol(u32::MAX - 2);
    /// Second solid marker, distinct from `SENTINEL`, for mismatch padding.
    pub(crate) const PAD: Symbol = Symbol(u32::MAX - 3);
    pub const MAX_USER: u32 = u32::MAX - 4;

    /// A user symbol, or `None` if `code` is reserved.
    pub fn new(code: u32) -> Option<Symbol> {
        (code <= Self::MAX_USER).then_some(Symbol(code))
    }

    pub fn code(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn is_wildcard(self) -> bool {
        self == Self::WILDCARD
    }

    #[inline]
    pub fn is_solid(self) -> bool {
        self != Self::WILDCARD
    }

    pub fn is_user(self) -> bool {
        self.0 <= Self::MAX_USER
    }
}

impl fmt::Debug for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Self::WILDCARD => f.write_str("?"),
            Self::SENTINEL => f.write_str("$"),
            Self::SEPARATOR => f.write_str("#"),
            Self::PAD => f.write_str("%"),
            Symbol(c) => write!(f, "{c}"),
        }
    }
}

/// Wildcard-aware symbol equality.
#[inline]
pub fn sym_match(a: Symbol, b: Symbol) -> bool {
    a == b || a.is_wildcard() || b.is_wildcard()
}

/// Number of aligned positions holding two different solid symbols.
pub fn hamming_w(s: &[Symbol], t: &[Symbol]) -> Result<usize> {
    if s.len() != t.len() {
        return Err(Error::LengthMismatch {
            left: s.len(),
            right: t.len(),
        });
    }
    Ok(s.iter().zip(t).filter(|(&a, &b)| !sym_match(a, b)).count())
}

/// Half the Hamming distance between `s` and its reverse, i.e. the number of
/// mismatching mirror pairs.
pub fn pal_mismatch_count(s: &[Symbol]) -> usize {
    let n = s.len();
    (0..n / 2).filter(|&i| !sym_match(s[i], s[n - 1 - i])).count()
}

/// An immutable symbol sequence with its wildcard fragments precomputed.
#[derive(Clone, PartialEq, Eq)]
pub struct WildcardString {
    symbols: Vec<Symbol>,
    fragments: Vec<Range<usize>>,
    sigma: usize,
}

impl WildcardString {
    /// Encodes `text`, mapping `wildcard_char` to [`Symbol::WILDCARD`] and every
    /// other byte to a code assigned in order of first occurrence.
    pub fn from_text(text: &[u8], wildcard_char: u8) -> Result<Self> {
        Self::from_text_with(text, |b| b == wildcard_char)
    }

    /// Like [`from_text`](Self::from_text) with an arbitrary wildcard predicate.
    pub fn from_text_with(text: &[u8], is_wildcard: impl Fn(u8) -> bool) -> Result<Self> {
        if text.is_empty() {
            return Err(Error::EmptyInput);
        }
        let mut codes: [Option<u32>; 256] = [None; 256];
        let mut next = 0u32;
        let symbols = text
            .iter()
            .map(|&b| {
                if is_wildcard(b) {
                    return Symbol::WILDCARD;
                }
                let code = *codes[b as usize].get_or_insert_with(|| {
                    next += 1;
                    next - 1
                });
                Symbol(code)
            })
            .collect();
        Ok(Self::from_symbols(symbols))
    }

    pub fn from_symbols(symbols: Vec<Symbol>) -> Self {
        let fragments = wildcard_runs(&symbols);
        let sigma = symbols
            .iter()
            .filter(|s| s.is_user())
            .collect::<HashSet<_>>()
            .len();
        WildcardString {
            symbols,
            fragments,
            sigma,
        }
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    /// Maximal wildcard runs as half-open 0-based ranges, in order.
    pub fn fragments(&self) -> &[Range<usize>] {
        &self.fragments
    }

    /// The number of wildcard fragments (G).
    pub fn fragment_count(&self) -> usize {
        self.fragments.len()
    }

    /// Distinct user symbols present.
    pub fn sigma(&self) -> usize {
        self.sigma
    }

    pub fn is_solid(&self) -> bool {
        self.fragments.is_empty()
    }

    pub fn reversed(&self) -> Self {
        let mut symbols = self.symbols.clone();
        symbols.reverse();
        Self::from_symbols(symbols)
    }

    pub fn into_symbols(self) -> Vec<Symbol> {
        self.symbols
    }
}

impl Deref for WildcardString {
    type Target = [Symbol];

    fn deref(&self) -> &[Symbol] {
        &self.symbols
    }
}

impl fmt::Debug for WildcardString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.symbols).finish()
    }
}

/// Maximal runs of wildcards in `symbols`.
pub fn wildcard_runs(symbols: &[Symbol]) -> Vec<Range<usize>> {
    let mut runs = Vec::new();
    let mut i = 0;
    while i < symbols.len() {
        if symbols[i].is_wildcard() {
            let start = i;
            while i < symbols.len() && symbols[i].is_wildcard() {
                i += 1;
            }
            runs.push(start..i);
        } else {
            i += 1;
        }
    }
    runs
}
