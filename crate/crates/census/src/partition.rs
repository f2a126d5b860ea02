use std::collections::HashMap;

use pclink_invariant::{jones_with, Poly};
use pclink_shadow::{family_shadow, orient_positive, Family, Shadow};
use pclink_word::{brute_orbits, Word, WordGroup, DEFAULT_ORBIT_CAP};
use rayon::prelude::*;
use serde::Serialize;

use crate::report::{check_family, group_kind};
use crate::{CacheKey, CensusConfig, CensusError};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PartitionEntry {
    pub word: Word,
    pub orbit_id: usize,
    pub jones_cell_id: Option<usize>,
    pub jones: Option<Poly>,
}

/// All words of one length grouped by exact Jones polynomial, next to their
/// group orbits.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct JonesPartition {
    pub family: Family,
    pub n: usize,
    entries: Vec<PartitionEntry>,
    /// Entry indices of each Jones cell; cells are numbered by their
    /// smallest word.
    cells: Vec<Vec<usize>>,
    failures: Vec<(Word, String)>,
}

impl JonesPartition {
    pub fn entries(&self) -> &[PartitionEntry] {
        &self.entries
    }

    pub fn cell_count(&self) -> usize {
        self.cells.len()
    }

    pub fn cell_words(&self, k: usize) -> Vec<Word> {
        self.cells[k].iter().map(|&i| self.entries[i].word.clone()).collect()
    }

    pub fn cell_sizes(&self) -> Vec<usize> {
        self.cells.iter().map(Vec::len).collect()
    }

    fn entry(&self, w: &Word) -> Option<&PartitionEntry> {
        if w.len() != self.n {
            return None;
        }
        self.entries.get(w.value()? as usize)
    }

    pub fn cell_of(&self, w: &Word) -> Option<usize> {
        self.entry(w)?.jones_cell_id
    }

    /// Words sharing the Jones polynomial of `w`, `w` included.
    pub fn cell_containing(&self, w: &Word) -> Option<Vec<Word>> {
        self.cell_of(w).map(|k| self.cell_words(k))
    }

    pub fn jones(&self, w: &Word) -> Option<&Poly> {
        self.entry(w)?.jones.as_ref()
    }

    /// Words whose computation failed, with the error message.
    pub fn failures(&self) -> &[(Word, String)] {
        &self.failures
    }

    pub fn is_complete(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn orbit_count(&self) -> usize {
        self.entries.iter().map(|e| e.orbit_id + 1).max().unwrap_or(0)
    }

    /// Whether every group orbit lies inside a single Jones cell, as it must
    /// since orbit-mates are equivalent links.
    pub fn orbits_refine_cells(&self) -> bool {
        let mut cell_of_orbit: HashMap<usize, Option<usize>> = HashMap::new();
        self.entries.iter().filter(|e| e.jones_cell_id.is_some()).all(|e| {
            *cell_of_orbit.entry(e.orbit_id).or_insert(e.jones_cell_id) == e.jones_cell_id
        })
    }

    /// `word,orbit_id,jones_cell_id` lines with a header; failed words have
    /// an empty cell id.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("word,orbit_id,jones_cell_id\n");
        for e in &self.entries {
            let cell = e.jones_cell_id.map(|c| c.to_string()).unwrap_or_default();
            out.push_str(&format!("{},{},{}\n", e.word, e.orbit_id, cell));
        }
        out
    }

    /// One line per Jones cell: id, size, polynomial and members.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (k, cell) in self.cells.iter().enumerate() {
            let words: Vec<String> = cell.iter().map(|&i| self.entries[i].word.to_string()).collect();
            let poly = self.entries[cell[0]].jones.as_ref().expect("cells hold computed words");
            out.push_str(&format!("{k}\t{}\t{}\t{}\n", cell.len(), poly.to_t_string(), words.join(" ")));
        }
        for (w, e) in &self.failures {
            out.push_str(&format!("failed\t{w}\t{e}\n"));
        }
        out
    }
}

/// Jones polynomial of the family link on `word`, read from or stored in
/// the configured cache.
pub fn jones_for_word(family: Family, word: &Word, cfg: &CensusConfig) -> Result<Poly, CensusError> {
    let shadow = family_shadow(family, word.len(), cfg.allow_odd_flower)?;
    jones_on_shadow(&shadow, family, word, cfg)
}

fn jones_on_shadow(shadow: &Shadow, family: Family, word: &Word, cfg: &CensusConfig) -> Result<Poly, CensusError> {
    let key = CacheKey { family, n: word.len(), word: word.to_string() };
    if let Some(cache) = &cfg.cache {
        if let Some(p) = cache.get(&key) {
            return Ok(p);
        }
    }
    let d = orient_positive(shadow, word)?;
    let v = jones_with::<num_bigint::BigInt>(&d, &cfg.engine)?;
    if let Some(cache) = &cfg.cache {
        cache.insert(key, &v)?;
    }
    Ok(v)
}

pub(crate) fn with_workers<T: Send>(workers: usize, f: impl FnOnce() -> T + Send) -> Result<T, CensusError> {
    let pool =
        rayon::ThreadPoolBuilder::new().num_threads(workers).build().map_err(|e| CensusError::Workers(e.to_string()))?;
    Ok(pool.install(f))
}

/// Partition the `2^n` words of a family by exact Jones polynomial.
///
/// Words are processed in parallel but the result only depends on the
/// inputs. A word whose computation fails is reported in
/// [`JonesPartition::failures`] and left out of the cells.
pub fn jones_partition(family: Family, n: usize, cfg: &CensusConfig) -> Result<JonesPartition, CensusError> {
    check_family(family, n, cfg)?;
    let cap = cfg.jones_caps.cap(family);
    if n > cap {
        return Err(CensusError::JonesCap { family, n, cap });
    }
    let group = WordGroup::new(group_kind(family)?, n);
    let orbits = brute_orbits(&group, n, DEFAULT_ORBIT_CAP)?;
    let shadow = family_shadow(family, n, cfg.allow_odd_flower)?;
    let words: Vec<Word> = Word::all(n).collect();
    let results: Vec<Result<Poly, String>> = with_workers(cfg.workers, || {
        words.par_iter().map(|w| jones_on_shadow(&shadow, family, w, cfg).map_err(|e| e.to_string())).collect()
    })?;

    let mut ids: HashMap<String, usize> = HashMap::new();
    let mut cells: Vec<Vec<usize>> = Vec::new();
    let mut entries = Vec::with_capacity(words.len());
    let mut failures = Vec::new();
    for (i, (w, r)) in words.into_iter().zip(results).enumerate() {
        let orbit_id = orbits.cell_of(&w);
        match r {
            Ok(p) => {
                let key = p.to_json();
                let id = *ids.entry(key).or_insert_with(|| {
                    cells.push(Vec::new());
                    cells.len() - 1
                });
                cells[id].push(i);
                entries.push(PartitionEntry { word: w, orbit_id, jones_cell_id: Some(id), jones: Some(p) });
            }
            Err(e) => {
                failures.push((w.clone(), e));
                entries.push(PartitionEntry { word: w, orbit_id, jones_cell_id: None, jones: None });
            }
        }
    }
    Ok(JonesPartition { family, n, entries, cells, failures })
}

#[cfg(test)]
mod tests {
    use super::*;
    use pclink_invariant::EngineConfig;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn ring_three() {
        let p = jones_partition(Family::Ring, 3, &CensusConfig::default()).unwrap();
        assert!(p.is_complete());
        assert!(p.orbits_refine_cells());
        assert!(p.cell_count() <= p.orbit_count());
        assert_eq!(p.cell_sizes().iter().sum::<usize>(), 8);
        assert_eq!(p.cell_of(&w("000")), p.cell_of(&w("111")));
        let csv = p.to_csv();
        assert!(csv.starts_with("word,orbit_id,jones_cell_id\n000,0,0\n"));
        assert_eq!(csv.lines().count(), 9);
    }

    #[test]
    fn caps_and_failures() {
        let cfg = CensusConfig::default();
        assert!(matches!(jones_partition(Family::Ring, 6, &cfg), Err(CensusError::JonesCap { cap: 5, .. })));
        let tight = CensusConfig { engine: EngineConfig { max_width: 3, ..EngineConfig::default() }, ..cfg };
        let p = jones_partition(Family::Ring, 2, &tight).unwrap();
        assert_eq!(p.failures().len(), 4);
        assert_eq!(p.cell_count(), 0);
        assert!(p.to_csv().contains("01,"));
    }

    #[test]
    fn worker_count_does_not_matter() {
        let one = CensusConfig { workers: 1, ..CensusConfig::default() };
        let four = CensusConfig { workers: 4, ..CensusConfig::default() };
        assert_eq!(
            jones_partition(Family::Boot, 4, &one).unwrap(),
            jones_partition(Family::Boot, 4, &four).unwrap()
        );
    }
}
