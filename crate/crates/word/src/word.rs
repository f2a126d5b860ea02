use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use smallvec::SmallVec;

use crate::decomp::RunDecomposition;
use crate::WordError;

/// A binary word of positive length.
///
/// Lengths up to 64 live inline; longer words spill to the heap so the
/// algebra still works, while enumeration-heavy code should stick to the
/// 64-bit value helpers ([`Word::from_value`], [`Word::value`]).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Word {
    len: usize,
    limbs: SmallVec<[u64; 1]>,
}

fn limb_count(len: usize) -> usize {
    len.div_ceil(64)
}

impl Word {
    /// The all-zero word of length `len`.
    pub fn zeros(len: usize) -> Result<Self, WordError> {
        if len == 0 {
            return Err(WordError::Empty);
        }
        Ok(Word { len, limbs: SmallVec::from_elem(0, limb_count(len)) })
    }

    pub fn from_bits(bits: &[bool]) -> Result<Self, WordError> {
        let mut w = Word::zeros(bits.len())?;
        for (i, &b) in bits.iter().enumerate() {
            w.set(i, b);
        }
        Ok(w)
    }

    /// Builds the word whose ASCII form is the binary expansion of `value`
    /// padded to `len` digits, so that ascending values enumerate words in
    /// lexicographic order.
    pub fn from_value(value: u64, len: usize) -> Result<Self, WordError> {
        if len == 0 {
            return Err(WordError::Empty);
        }
        if len > 64 {
            return Err(WordError::TooLong(len));
        }
        let mask = value.reverse_bits() >> (64 - len);
        Ok(Word { len, limbs: SmallVec::from_elem(mask, 1) })
    }

    /// Inverse of [`Word::from_value`]; `None` for words longer than 64.
    pub fn value(&self) -> Option<u64> {
        (self.len <= 64).then(|| self.limbs[0].reverse_bits() >> (64 - self.len))
    }

    /// Little-index-first mask: bit `i` holds position `i`.
    pub fn mask(&self) -> Option<u64> {
        (self.len <= 64).then(|| self.limbs[0])
    }

    pub fn from_mask(mask: u64, len: usize) -> Result<Self, WordError> {
        if len == 0 {
            return Err(WordError::Empty);
        }
        if len > 64 {
            return Err(WordError::TooLong(len));
        }
        let keep = if len == 64 { u64::MAX } else { (1u64 << len) - 1 };
        Ok(Word { len, limbs: SmallVec::from_elem(mask & keep, 1) })
    }

    /// Every word of length `len` in ascending value order.
    pub fn all(len: usize) -> impl Iterator<Item = Word> {
        assert!((1..64).contains(&len), "enumeration needs 1 <= len < 64");
        (0..1u64 << len).map(move |v| Word::from_value(v, len).unwrap())
    }

    /// The word `0101...` of the given length.
    pub fn oscillating(len: usize, leading: bool) -> Result<Self, WordError> {
        let bits: Vec<bool> = (0..len).map(|i| (i % 2 == 1) ^ leading).collect();
        Word::from_bits(&bits)
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Letter at 0-based position `i`.
    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "position {i} out of range for length {}", self.len);
        self.limbs[i / 64] >> (i % 64) & 1 == 1
    }

    fn set(&mut self, i: usize, b: bool) {
        let bit = 1u64 << (i % 64);
        if b {
            self.limbs[i / 64] |= bit;
        } else {
            self.limbs[i / 64] &= !bit;
        }
    }

    pub fn bits(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len).map(|i| self.get(i))
    }

    pub fn count_ones(&self) -> usize {
        self.limbs.iter().map(|l| l.count_ones() as usize).sum()
    }

    /// Complement every letter.
    pub fn negate(&self) -> Word {
        let mut out = self.clone();
        for l in out.limbs.iter_mut() {
            *l = !*l;
        }
        let tail = self.len % 64;
        if tail != 0 {
            let last = out.limbs.len() - 1;
            out.limbs[last] &= (1u64 << tail) - 1;
        }
        out
    }

    pub fn reverse(&self) -> Word {
        let mut out = Word::zeros(self.len).unwrap();
        for i in 0..self.len {
            out.set(self.len - 1 - i, self.get(i));
        }
        out
    }

    /// Left cyclic shift: `rotate(a, 1) = a_2 ... a_n a_1`.
    pub fn rotate(&self, s: usize) -> Word {
        let s = s % self.len;
        let mut out = Word::zeros(self.len).unwrap();
        for i in 0..self.len {
            out.set(i, self.get((i + s) % self.len));
        }
        out
    }

    /// `reverse(negate(w))`.
    pub fn ve(&self) -> Word {
        self.negate().reverse()
    }

    /// Number of maximal constant runs, which is also the length of a
    /// longest oscillating subword.
    pub fn rank(&self) -> usize {
        1 + (1..self.len).filter(|&i| self.get(i) != self.get(i - 1)).count()
    }

    pub fn is_oscillating(&self) -> bool {
        self.rank() == self.len
    }

    pub fn canonical_decomposition(&self) -> RunDecomposition {
        let mut runs = Vec::new();
        let mut current = 1;
        for i in 1..self.len {
            if self.get(i) == self.get(i - 1) {
                current += 1;
            } else {
                runs.push(current);
                current = 1;
            }
        }
        runs.push(current);
        RunDecomposition::new(self.get(0), runs).expect("runs of a word are valid")
    }

    /// Letters at the given 0-based positions, in order.
    pub fn restrict(&self, positions: &[usize]) -> Result<Word, WordError> {
        let bits: Vec<bool> = positions.iter().map(|&p| self.get(p)).collect();
        Word::from_bits(&bits)
    }

    /// Concatenation `self · other`.
    pub fn concat(&self, other: &Word) -> Word {
        let bits: Vec<bool> = self.bits().chain(other.bits()).collect();
        Word::from_bits(&bits).unwrap()
    }

    /// Copy with position `i` complemented.
    pub fn flip(&self, i: usize) -> Word {
        let mut out = self.clone();
        out.set(i, !self.get(i));
        out
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self.bits().map(|b| if b { '1' } else { '0' }).collect();
        f.write_str(&s)
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

impl FromStr for Word {
    type Err = WordError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut bits = Vec::with_capacity(s.len());
        for (offset, c) in s.chars().enumerate() {
            match c {
                '0' => bits.push(false),
                '1' => bits.push(true),
                found => return Err(WordError::BadLetter { found, offset }),
            }
        }
        Word::from_bits(&bits)
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.len.cmp(&other.len).then_with(|| self.to_string().cmp(&other.to_string()))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn worked_examples() {
        assert_eq!(w("00101").negate(), w("11010"));
        assert_eq!(w("00101").reverse(), w("10100"));
        assert_eq!(w("0").negate(), w("1"));
        assert_eq!(w("010").reverse(), w("010"));
        assert_eq!(w("001101").rotate(1), w("011010"));
        assert_eq!(w("001101").ve(), w("010011"));
        assert_eq!(w("000100").rank(), 3);
        assert_eq!(w("00100010").rank(), 5);
        assert_eq!(w("0000000").rank(), 1);
        assert!(w("010101").is_oscillating());
        assert!(!w("0011").is_oscillating());
        assert!(w("1").is_oscillating());
        assert_eq!(w("010101").ve(), w("010101"));
    }

    #[test]
    fn parsing_rejects_bad_input() {
        assert_eq!("".parse::<Word>(), Err(WordError::Empty));
        assert_eq!("01a1".parse::<Word>(), Err(WordError::BadLetter { found: 'a', offset: 2 }));
    }

    #[test]
    fn value_round_trip_and_order() {
        let words: Vec<String> = Word::all(3).map(|w| w.to_string()).collect();
        assert_eq!(words, ["000", "001", "010", "011", "100", "101", "110", "111"]);
        assert_eq!(w("00101").value(), Some(5));
        assert_eq!(w("00101").mask(), Some(0b10100));
    }

    #[test]
    fn long_words_still_work() {
        let s: String = (0..150).map(|i| if i % 3 == 0 { '1' } else { '0' }).collect();
        let a = w(&s);
        assert_eq!(a.len(), 150);
        assert_eq!(a.to_string(), s);
        assert_eq!(a.negate().negate(), a);
        assert_eq!(a.reverse().reverse(), a);
        assert_eq!(a.rotate(150), a);
        assert_eq!(a.negate().count_ones(), 100);
        assert_eq!(a.value(), None);
    }

    #[test]
    fn serde_uses_ascii() {
        let a = w("0110");
        assert_eq!(serde_json::to_string(&a).unwrap(), "\"0110\"");
        let b: Word = serde_json::from_str("\"0110\"").unwrap();
        assert_eq!(a, b);
    }

    fn arb_word() -> impl Strategy<Value = Word> {
        prop::collection::vec(any::<bool>(), 1..100).prop_map(|b| Word::from_bits(&b).unwrap())
    }

    proptest! {
        #[test]
        fn involutions(a in arb_word()) {
            prop_assert_eq!(a.negate().negate(), a.clone());
            prop_assert_eq!(a.reverse().reverse(), a.clone());
            prop_assert_eq!(a.ve().ve(), a.clone());
            prop_assert_eq!(a.negate().reverse(), a.reverse().negate());
        }

        #[test]
        fn rotation_group_law(a in arb_word(), s in 0usize..200) {
            let n = a.len();
            prop_assert_eq!(a.rotate(s).rotate(n - s % n), a.clone());
            prop_assert_eq!(a.rotate(n), a.clone());
            prop_assert_eq!(a.rotate(0), a);
        }

        #[test]
        fn rank_is_invariant(a in arb_word()) {
            prop_assert_eq!(a.rank(), a.negate().rank());
            prop_assert_eq!(a.rank(), a.reverse().rank());
            prop_assert_eq!(a.rank(), a.canonical_decomposition().rank());
        }

        #[test]
        fn shift_is_cut_and_swap(a in arb_word(), cut in 0usize..100) {
            let cut = cut % a.len();
            if cut > 0 {
                let positions: Vec<usize> = (0..a.len()).collect();
                let d1 = a.restrict(&positions[..cut]).unwrap();
                let d2 = a.restrict(&positions[cut..]).unwrap();
                prop_assert_eq!(a.rotate(cut), d2.concat(&d1));
            }
        }
    }
}
