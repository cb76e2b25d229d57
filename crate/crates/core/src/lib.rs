//! Maximal palindromes in strings with wildcards, optionally with mismatches.
//!
//! Every algorithm returns a [`CenteredRadiusArray`]: for each of the `2n - 1`
//! centers of the input, the length of the longest factor centered there with
//! at most `k` mismatching mirror pairs, a wildcard matching anything.

pub mod alloc;
pub mod approx;
pub mod center;
pub mod convolve;
pub mod error;
pub mod generate;
pub mod lce;
pub mod naive;
pub mod precise;
pub mod wildcard;

pub use approx::approx_all_maximal;
pub use center::{CenterEntry, CenterIndex, CenteredRadiusArray, Extent};
pub use error::{Error, Result};
pub use lce::all_maximal_lce;
pub use naive::brute_all_maximal;
pub use precise::precise_all_maximal;
pub use wildcard::{Symbol, WildcardString};
