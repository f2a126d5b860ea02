use std::sync::Arc;

use pclink_census::{
    census_oriented, census_unoriented, jones_for_word, jones_partition, theoretical_ratio, CensusConfig, ResultCache,
};
use pclink_shadow::Family;
use pclink_word::{brute_orbits, Word, WordGroup};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

const FAMILIES: [Family; 3] = [Family::Ring, Family::Boot, Family::Flower];

#[test]
fn cache_file_survives_reopening() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("jones.jsonl");
    let cache = Arc::new(ResultCache::open(&path).unwrap());
    let cfg = CensusConfig { cache: Some(cache.clone()), ..CensusConfig::default() };
    let fresh = jones_partition(Family::Ring, 4, &cfg).unwrap();
    assert_eq!(cache.len(), 16);
    let bytes = std::fs::read(&path).unwrap();

    let reopened = Arc::new(ResultCache::open(&path).unwrap());
    assert_eq!(reopened.len(), 16);
    let cfg = CensusConfig { cache: Some(reopened.clone()), ..CensusConfig::default() };
    assert_eq!(jones_partition(Family::Ring, 4, &cfg).unwrap(), fresh);
    assert_eq!(reopened.writes(), 0);
    assert_eq!(std::fs::read(&path).unwrap(), bytes);
}

#[test]
fn cached_and_uncached_values_agree() {
    let cache = Arc::new(ResultCache::in_memory());
    let cached = CensusConfig { cache: Some(cache), ..CensusConfig::default() };
    let plain = CensusConfig::default();
    let mut rng = StdRng::seed_from_u64(3);
    for _ in 0..20 {
        let family = FAMILIES[rng.gen_range(0..3)];
        let n = [2, 4][rng.gen_range(0..2)];
        let a = Word::from_value(rng.gen_range(0..1u64 << n), n).unwrap();
        let first = jones_for_word(family, &a, &cached).unwrap();
        assert_eq!(first, jones_for_word(family, &a, &cached).unwrap());
        assert_eq!(first, jones_for_word(family, &a, &plain).unwrap());
    }
}

#[test]
fn ratios_approach_their_limits() {
    let cfg = CensusConfig::default();
    for family in FAMILIES {
        let gap = |n: usize| {
            let r = census_oriented(family, n, &cfg).unwrap();
            (r.ratio - theoretical_ratio(family, n, false)).abs()
        };
        let gaps: Vec<f64> = (10..=40).step_by(6).map(gap).collect();
        assert!(gaps.windows(2).all(|w| w[1] <= w[0]), "{family}: {gaps:?}");
        assert!(gaps[gaps.len() - 1] < 1e-3);
    }
}

#[test]
fn partitions_respect_orbits() {
    let cfg = CensusConfig::default();
    for (family, n) in [(Family::Ring, 5), (Family::Boot, 5), (Family::Flower, 4), (Family::Flower, 6)] {
        let p = jones_partition(family, n, &cfg).unwrap();
        assert!(p.is_complete());
        assert!(p.orbits_refine_cells(), "{family} {n}");
        assert!(p.cell_count() <= p.orbit_count());
        // Negation-equivalent words form one unoriented link; both orientations
        // carry the same Jones polynomial in every family considered here.
        for a in Word::all(n) {
            assert_eq!(p.jones(&a), p.jones(&a.negate()), "{family} {a}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn census_counts_match_brute_force(f in 0usize..3, n in 1usize..=12, unoriented in any::<bool>()) {
        let family = FAMILIES[f];
        let cfg = CensusConfig { allow_odd_flower: true, ..CensusConfig::default() };
        let r = if unoriented { census_unoriented(family, n, &cfg) } else { census_oriented(family, n, &cfg) }.unwrap();
        let mut group = match family {
            Family::Ring => WordGroup::ring4(n),
            Family::Boot => WordGroup::boot(n),
            _ => WordGroup::flower(n),
        };
        if unoriented {
            group = group.with_negation();
        }
        prop_assert_eq!(r.orbit_count, brute_orbits(&group, n, 24).unwrap().cell_count() as u128);
        prop_assert_eq!(r.total_words, 1u128 << n);
        prop_assert!(r.low_rank_word_count <= r.total_words);
    }
}
