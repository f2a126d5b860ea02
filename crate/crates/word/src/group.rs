use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::perm::MaskAction;
use crate::{SignedPermutation, Word, WordError};

/// Default length cap for explicit orbit enumeration.
pub const DEFAULT_ORBIT_CAP: usize = 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum GroupKind {
    /// `{id, neg, rev, rev∘neg}`.
    Ring4,
    /// The trivial group.
    Boot,
    /// `⟨ro, ve⟩`, dihedral of order `2n`.
    Flower2n,
    Ring4Neg,
    BootNeg,
    Flower2nNeg,
}

impl GroupKind {
    pub fn with_negation(self) -> GroupKind {
        match self {
            GroupKind::Ring4 | GroupKind::Ring4Neg => GroupKind::Ring4Neg,
            GroupKind::Boot | GroupKind::BootNeg => GroupKind::BootNeg,
            GroupKind::Flower2n | GroupKind::Flower2nNeg => GroupKind::Flower2nNeg,
        }
    }
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            GroupKind::Ring4 => "RING4",
            GroupKind::Boot => "BOOT",
            GroupKind::Flower2n => "FLOWER2N",
            GroupKind::Ring4Neg => "RING4_NEG",
            GroupKind::BootNeg => "BOOT_NEG",
            GroupKind::Flower2nNeg => "FLOWER2N_NEG",
        };
        f.write_str(s)
    }
}

/// A finite group of signed permutations acting on words of one length.
#[derive(Debug, Clone)]
pub struct WordGroup {
    kind: GroupKind,
    degree: usize,
    elements: Vec<SignedPermutation>,
}

impl WordGroup {
    pub fn new(kind: GroupKind, n: usize) -> WordGroup {
        assert!(n >= 1, "groups act on words of positive length");
        let gens = match kind {
            GroupKind::Ring4 => vec![SignedPermutation::negation(n), SignedPermutation::reversal(n)],
            GroupKind::Boot => vec![],
            GroupKind::Flower2n => vec![SignedPermutation::rotation(n), SignedPermutation::ve(n)],
            GroupKind::Ring4Neg | GroupKind::BootNeg | GroupKind::Flower2nNeg => {
                let base = match kind {
                    GroupKind::Ring4Neg => GroupKind::Ring4,
                    GroupKind::BootNeg => GroupKind::Boot,
                    _ => GroupKind::Flower2n,
                };
                let mut g = WordGroup::new(base, n).elements;
                g.push(SignedPermutation::negation(n));
                g
            }
        };
        WordGroup { kind, degree: n, elements: closure(n, &gens) }
    }

    pub fn ring4(n: usize) -> WordGroup {
        WordGroup::new(GroupKind::Ring4, n)
    }

    pub fn boot(n: usize) -> WordGroup {
        WordGroup::new(GroupKind::Boot, n)
    }

    pub fn flower(n: usize) -> WordGroup {
        WordGroup::new(GroupKind::Flower2n, n)
    }

    pub fn with_negation(&self) -> WordGroup {
        WordGroup::new(self.kind.with_negation(), self.degree)
    }

    pub fn kind(&self) -> GroupKind {
        self.kind
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn elements(&self) -> &[SignedPermutation] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, g: &SignedPermutation) -> bool {
        self.elements.binary_search(g).is_ok()
    }

    /// The orbit of `w`, sorted and without repetition.
    pub fn orbit(&self, w: &Word) -> Result<Vec<Word>, WordError> {
        let set: Result<BTreeSet<Word>, _> = self.elements.iter().map(|g| g.apply(w)).collect();
        Ok(set?.into_iter().collect())
    }

    /// Whether `a` and `b` lie in the same orbit.
    pub fn equivalent(&self, a: &Word, b: &Word) -> Result<bool, WordError> {
        for g in &self.elements {
            if &g.apply(a)? == b {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

/// Closure of the generators under composition, sorted.
fn closure(n: usize, gens: &[SignedPermutation]) -> Vec<SignedPermutation> {
    let mut set = BTreeSet::new();
    let id = SignedPermutation::identity(n);
    set.insert(id.clone());
    let mut frontier = vec![id];
    while let Some(x) = frontier.pop() {
        for g in gens {
            let y = g.compose(&x);
            if set.insert(y.clone()) {
                frontier.push(y);
            }
        }
    }
    set.into_iter().collect()
}

/// Number of orbits on words of length `n`, by Burnside's lemma.
pub fn orbit_count(group: &WordGroup, n: usize) -> Result<u128, WordError> {
    if group.degree() != n {
        return Err(WordError::DegreeMismatch { expected: group.degree(), found: n });
    }
    let total: u128 = group.elements().iter().map(|g| g.fixed_count()).sum();
    Ok(total / group.order() as u128)
}

/// Explicit partition of all words of one length into orbits.
#[derive(Debug, Clone)]
pub struct OrbitPartition {
    n: usize,
    cell_of: Vec<u32>,
    cells: Vec<Vec<u64>>,
}

impl OrbitPartition {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn cell_count(&self) -> usize {
        self.cells.len()
    }

    /// Cells as word values (see [`Word::value`]), each ascending; cells are
    /// ordered by their smallest member.
    pub fn cells(&self) -> &[Vec<u64>] {
        &self.cells
    }

    pub fn cell_of_value(&self, value: u64) -> usize {
        self.cell_of[value as usize] as usize
    }

    pub fn cell_of(&self, w: &Word) -> usize {
        self.cell_of_value(w.value().expect("partition words fit in 64 bits"))
    }

    pub fn cell_words(&self, k: usize) -> Vec<Word> {
        self.cells[k].iter().map(|&v| Word::from_value(v, self.n).unwrap()).collect()
    }
}

/// Enumerate the orbits of `group` on all words of length `n <= cap`.
pub fn brute_orbits(group: &WordGroup, n: usize, cap: usize) -> Result<OrbitPartition, WordError> {
    if group.degree() != n {
        return Err(WordError::DegreeMismatch { expected: group.degree(), found: n });
    }
    if n > cap || n >= 32 {
        return Err(WordError::CapExceeded { n, cap: cap.min(31) });
    }
    let actions: Vec<MaskAction> = group.elements().iter().map(MaskAction::new).collect();
    let size = 1usize << n;
    let mut cell_of = vec![u32::MAX; size];
    let mut cells = Vec::new();
    let to_value = |mask: u64| mask.reverse_bits() >> (64 - n);
    for v in 0..size as u64 {
        if cell_of[v as usize] != u32::MAX {
            continue;
        }
        let id = cells.len() as u32;
        let mask = Word::from_value(v, n).unwrap().mask().unwrap();
        let mut members: Vec<u64> = actions.iter().map(|a| to_value(a.apply(mask))).collect();
        members.sort_unstable();
        members.dedup();
        for &m in &members {
            cell_of[m as usize] = id;
        }
        cells.push(members);
    }
    Ok(OrbitPartition { n, cell_of, cells })
}
