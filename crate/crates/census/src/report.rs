use pclink_shadow::Family;
use pclink_word::{low_rank_count, orbit_count, GroupKind, WordGroup};
use serde::{Deserialize, Serialize};

use crate::{jones_partition, CensusConfig, CensusError};

/// Class-count bounds for all positive links on one arrangement.
///
/// `orbit_count` is an upper bound on the number of link classes (words in
/// one orbit give equivalent links), `jones_cell_count` a lower bound
/// (different Jones polynomials give different links).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CensusReport {
    pub family: Family,
    pub n: usize,
    pub unoriented: bool,
    pub group: GroupKind,
    pub total_words: u128,
    pub orbit_count: u128,
    pub jones_cell_count: Option<usize>,
    /// Whether both bounds are known and equal.
    pub confirmed: bool,
    pub ratio: f64,
    pub theoretical_ratio: f64,
    pub low_rank_threshold: usize,
    pub low_rank_word_count: u128,
    pub low_rank_fraction: f64,
    /// Words whose Jones polynomial could not be computed.
    pub jones_failures: usize,
}

pub(crate) fn group_kind(family: Family) -> Result<GroupKind, CensusError> {
    match family {
        Family::Ring => Ok(GroupKind::Ring4),
        Family::Boot => Ok(GroupKind::Boot),
        Family::Flower => Ok(GroupKind::Flower2n),
        Family::Custom => Err(CensusError::CustomFamily),
    }
}

/// Rank below which the distinctness results do not apply.
pub fn low_rank_threshold(family: Family) -> usize {
    match family {
        Family::Ring => 4,
        _ => 6,
    }
}

/// Limit of `orbit_count / 2^n`.
pub fn theoretical_ratio(family: Family, n: usize, unoriented: bool) -> f64 {
    let oriented = match family {
        Family::Ring => 0.25,
        Family::Boot | Family::Custom => 1.0,
        Family::Flower => 1.0 / (2.0 * n as f64),
    };
    match (family, unoriented) {
        // Negation already belongs to the ring group.
        (Family::Ring, _) | (_, false) => oriented,
        (_, true) => oriented / 2.0,
    }
}

pub(crate) fn check_family(family: Family, n: usize, cfg: &CensusConfig) -> Result<(), CensusError> {
    if !(1..=63).contains(&n) {
        return Err(CensusError::BadSize(n));
    }
    group_kind(family)?;
    if family == Family::Flower && n % 2 == 1 && n > 1 && !cfg.allow_odd_flower {
        return Err(pclink_shadow::ShadowError::OddFlower(n).into());
    }
    Ok(())
}

fn census(family: Family, n: usize, unoriented: bool, cfg: &CensusConfig) -> Result<CensusReport, CensusError> {
    check_family(family, n, cfg)?;
    let mut kind = group_kind(family)?;
    if unoriented {
        kind = kind.with_negation();
    }
    let group = WordGroup::new(kind, n);
    let orbits = orbit_count(&group, n)?;
    let total = 1u128 << n;
    let threshold = low_rank_threshold(family);
    let low = low_rank_count(n, threshold);
    let (cells, failures) = if cfg.with_jones {
        let p = jones_partition(family, n, cfg)?;
        (Some(p.cell_count()), p.failures().len())
    } else {
        (None, 0)
    };
    Ok(CensusReport {
        family,
        n,
        unoriented,
        group: kind,
        total_words: total,
        orbit_count: orbits,
        jones_cell_count: cells,
        confirmed: failures == 0 && cells.is_some_and(|c| c as u128 == orbits),
        ratio: orbits as f64 / total as f64,
        theoretical_ratio: theoretical_ratio(family, n, unoriented),
        low_rank_threshold: threshold,
        low_rank_word_count: low,
        low_rank_fraction: low as f64 / total as f64,
        jones_failures: failures,
    })
}

/// Census of the `2^n` oriented positive links on the family arrangement.
pub fn census_oriented(family: Family, n: usize, cfg: &CensusConfig) -> Result<CensusReport, CensusError> {
    census(family, n, false, cfg)
}

/// Census of unoriented links: a word and its negation give the same
/// unoriented link, so the group gains global negation. Jones cells are
/// unions of such pairs, so their count is unchanged.
pub fn census_unoriented(family: Family, n: usize, cfg: &CensusConfig) -> Result<CensusReport, CensusError> {
    census(family, n, true, cfg)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> CensusConfig {
        CensusConfig::default()
    }

    #[test]
    fn small_counts() {
        let r = census_oriented(Family::Ring, 4, &cfg()).unwrap();
        assert_eq!((r.total_words, r.orbit_count), (16, 6));
        assert_eq!(r.jones_cell_count, None);
        assert!(!r.confirmed);
        assert_eq!(census_oriented(Family::Boot, 12, &cfg()).unwrap().orbit_count, 4096);
        assert_eq!(census_unoriented(Family::Boot, 12, &cfg()).unwrap().orbit_count, 2048);
        let ring = census_oriented(Family::Ring, 12, &cfg()).unwrap();
        assert_eq!(census_unoriented(Family::Ring, 12, &cfg()).unwrap().orbit_count, ring.orbit_count);
    }

    #[test]
    fn errors() {
        assert!(matches!(census_oriented(Family::Custom, 4, &cfg()), Err(CensusError::CustomFamily)));
        assert!(matches!(census_oriented(Family::Ring, 0, &cfg()), Err(CensusError::BadSize(0))));
        assert!(census_oriented(Family::Flower, 5, &cfg()).is_err());
        let odd = CensusConfig { allow_odd_flower: true, ..cfg() };
        assert_eq!(census_oriented(Family::Flower, 5, &odd).unwrap().orbit_count, 4);
    }

    #[test]
    fn theoretical_ratios() {
        assert_eq!(theoretical_ratio(Family::Ring, 10, true), 0.25);
        assert_eq!(theoretical_ratio(Family::Boot, 10, true), 0.5);
        assert_eq!(theoretical_ratio(Family::Flower, 10, false), 0.05);
        assert_eq!(theoretical_ratio(Family::Flower, 10, true), 0.025);
    }
}
