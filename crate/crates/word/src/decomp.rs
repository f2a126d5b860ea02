use serde::{Deserialize, Serialize};

use crate::{Word, WordError};

/// Factorisation of a word into maximal constant runs `A_1 ... A_r`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunDecomposition {
    leading: bool,
    runs: Vec<usize>,
}

impl RunDecomposition {
    pub fn new(leading: bool, runs: Vec<usize>) -> Result<Self, WordError> {
        if runs.is_empty() {
            return Err(WordError::BadDecomposition("no runs"));
        }
        if runs.contains(&0) {
            return Err(WordError::BadDecomposition("empty run"));
        }
        Ok(RunDecomposition { leading, runs })
    }

    /// Letter of the first run.
    pub fn leading_letter(&self) -> bool {
        self.leading
    }

    pub fn run_lengths(&self) -> &[usize] {
        &self.runs
    }

    pub fn rank(&self) -> usize {
        self.runs.len()
    }

    pub fn len(&self) -> usize {
        self.runs.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Letter of run `k` (0-based).
    pub fn letter(&self, k: usize) -> bool {
        self.leading ^ (k % 2 == 1)
    }

    pub fn to_word(&self) -> Word {
        let mut bits = Vec::with_capacity(self.len());
        for (k, &len) in self.runs.iter().enumerate() {
            bits.extend(std::iter::repeat_n(self.letter(k), len));
        }
        Word::from_bits(&bits).expect("decomposition has positive length")
    }
}

/// The word `b` whose run `pi[k]` has the length of run `k` of `decomp`,
/// starting with `target_leading`. `pi` is 0-based.
pub fn pi_image(decomp: &RunDecomposition, pi: &[usize], target_leading: bool) -> Result<Word, WordError> {
    let r = decomp.rank();
    if pi.len() != r {
        return Err(WordError::RankMismatch { expected: r, found: pi.len() });
    }
    let mut runs = vec![0; r];
    for (k, &target) in pi.iter().enumerate() {
        if target >= r || runs[target] != 0 {
            return Err(WordError::NotAPermutation(r));
        }
        runs[target] = decomp.run_lengths()[k];
    }
    Ok(RunDecomposition::new(target_leading, runs)?.to_word())
}
