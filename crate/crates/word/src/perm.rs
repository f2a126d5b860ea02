use std::fmt;

use crate::{Word, WordError};

/// A permutation of positions combined with per-position complement flags.
///
/// Convention: `apply(g, w)[map[i]] = w[i] XOR flip[i]`. The flag is read
/// at the source position, before the letter moves. With this convention
/// `apply(g.compose(h), w) = apply(g, apply(h, w))`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPermutation {
    map: Vec<usize>,
    flip: Vec<bool>,
}

impl SignedPermutation {
    pub fn new(map: Vec<usize>, flip: Vec<bool>) -> Result<Self, WordError> {
        let n = map.len();
        if flip.len() != n {
            return Err(WordError::DegreeMismatch { expected: n, found: flip.len() });
        }
        let mut seen = vec![false; n];
        for &m in &map {
            if m >= n || seen[m] {
                return Err(WordError::NotAPermutation(n));
            }
            seen[m] = true;
        }
        Ok(SignedPermutation { map, flip })
    }

    pub fn identity(n: usize) -> Self {
        SignedPermutation { map: (0..n).collect(), flip: vec![false; n] }
    }

    /// Complement every position.
    pub fn negation(n: usize) -> Self {
        SignedPermutation { map: (0..n).collect(), flip: vec![true; n] }
    }

    pub fn reversal(n: usize) -> Self {
        SignedPermutation { map: (0..n).rev().collect(), flip: vec![false; n] }
    }

    /// The element acting as `rotate(., 1)`: position `i` moves to `i - 1`.
    pub fn rotation(n: usize) -> Self {
        SignedPermutation { map: (0..n).map(|i| (i + n - 1) % n).collect(), flip: vec![false; n] }
    }

    /// `reverse ∘ negate`.
    pub fn ve(n: usize) -> Self {
        SignedPermutation::reversal(n).compose(&SignedPermutation::negation(n))
    }

    pub fn degree(&self) -> usize {
        self.map.len()
    }

    pub fn position_map(&self) -> &[usize] {
        &self.map
    }

    pub fn flips(&self) -> &[bool] {
        &self.flip
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &m)| i == m) && self.flip.iter().all(|f| !f)
    }

    /// `self ∘ other`: first `other`, then `self`.
    pub fn compose(&self, other: &SignedPermutation) -> SignedPermutation {
        assert_eq!(self.degree(), other.degree(), "composing permutations of different degree");
        let map = other.map.iter().map(|&j| self.map[j]).collect();
        let flip = (0..other.degree()).map(|i| other.flip[i] ^ self.flip[other.map[i]]).collect();
        SignedPermutation { map, flip }
    }

    pub fn inverse(&self) -> SignedPermutation {
        let n = self.degree();
        let mut map = vec![0; n];
        let mut flip = vec![false; n];
        for i in 0..n {
            map[self.map[i]] = i;
            flip[self.map[i]] = self.flip[i];
        }
        SignedPermutation { map, flip }
    }

    pub fn apply(&self, w: &Word) -> Result<Word, WordError> {
        if w.len() != self.degree() {
            return Err(WordError::DegreeMismatch { expected: self.degree(), found: w.len() });
        }
        let mut bits = vec![false; w.len()];
        for (i, b) in w.bits().enumerate() {
            bits[self.map[i]] = b ^ self.flip[i];
        }
        Word::from_bits(&bits)
    }

    /// Action on little-index-first masks (see [`Word::mask`]).
    pub fn apply_mask(&self, mask: u64) -> u64 {
        let mut out = 0u64;
        for i in 0..self.degree() {
            let b = (mask >> i & 1 == 1) ^ self.flip[i];
            out |= (b as u64) << self.map[i];
        }
        out
    }

    /// Number of words fixed by this element: a cycle whose flags have odd
    /// parity admits no fixed word, every other cycle contributes a factor 2.
    pub fn fixed_count(&self) -> u128 {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut cycles = 0u32;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut parity = false;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                parity ^= self.flip[i];
                i = self.map[i];
            }
            if parity {
                return 0;
            }
            cycles += 1;
        }
        1u128 << cycles
    }
}

impl fmt::Debug for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, (&m, &fl)) in self.map.iter().zip(&self.flip).enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}{}", if fl { "~" } else { "" }, m + 1)?;
        }
        f.write_str("]")
    }
}

/// Lightweight table-driven form of an element for fast mask action.
#[derive(Clone)]
pub(crate) struct MaskAction {
    tables: Vec<[u64; 256]>,
    xor: u64,
}

impl MaskAction {
    pub(crate) fn new(g: &SignedPermutation) -> Self {
        let n = g.degree();
        let chunks = n.div_ceil(8);
        let mut tables = vec![[0u64; 256]; chunks];
        for (c, table) in tables.iter_mut().enumerate() {
            for (byte, slot) in table.iter_mut().enumerate() {
                let mut out = 0u64;
                for k in 0..8 {
                    let i = c * 8 + k;
                    if i < n && byte >> k & 1 == 1 {
                        out |= 1u64 << g.map[i];
                    }
                }
                *slot = out;
            }
        }
        let flips: u64 = (0..n).filter(|&i| g.flip[i]).map(|i| 1u64 << g.map[i]).sum();
        MaskAction { tables, xor: flips }
    }

    #[inline]
    pub(crate) fn apply(&self, mask: u64) -> u64 {
        let mut out = self.xor;
        for (c, table) in self.tables.iter().enumerate() {
            out ^= table[(mask >> (8 * c) & 0xff) as usize];
        }
        out
    }
}
