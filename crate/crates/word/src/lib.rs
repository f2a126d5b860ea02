//! Exact calculus on binary orientation words.
//!
//! A [`Word`] of length `n` assigns one bit to each pseudocircle of an
//! arrangement: `0` for a clockwise orientation and `1` for a
//! counterclockwise one. Position 1 is the leftmost pseudocircle for the ring
//! and boot families and the topmost-right one for the flower family.
//!
//! Internally a word keeps position `i` (0-based) in bit `i` of its storage;
//! the ASCII form lists position 1 first, so `"00101"` has a `1` in
//! positions 3 and 5.

mod decomp;
mod error;
mod group;
mod perm;
mod word;

pub use decomp::{pi_image, RunDecomposition};
pub use error::WordError;
pub use group::{brute_orbits, orbit_count, GroupKind, OrbitPartition, WordGroup, DEFAULT_ORBIT_CAP};
pub use perm::SignedPermutation;
pub use word::Word;

/// Number of words of length `n` with exactly `r` runs.
pub fn words_with_rank(n: usize, r: usize) -> u128 {
    if n == 0 || r == 0 || r > n {
        return 0;
    }
    2 * binomial((n - 1) as u128, (r - 1) as u128)
}

/// Number of words of length `n` whose rank is strictly below `threshold`.
pub fn low_rank_count(n: usize, threshold: usize) -> u128 {
    (1..threshold.min(n + 1)).map(|r| words_with_rank(n, r)).sum()
}

fn binomial(n: u128, k: u128) -> u128 {
    let k = k.min(n - k);
    let mut acc = 1u128;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}
