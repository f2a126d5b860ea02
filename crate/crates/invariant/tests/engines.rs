use num_bigint::BigInt;
use pclink_invariant::{
    bracket_naive, bracket_sweep, greedy_order, jones, jones_pd, jones_with, natural_order, Engine, EngineConfig,
    OrderStrategy, Poly, SmallPoly,
};
use pclink_shadow::{family_shadow, orient_positive, Family, PDCode, PositiveDiagram};
use pclink_word::Word;
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn p(terms: &[(i64, i64)]) -> Poly {
    Poly::from_terms(terms.iter().map(|&(e, c)| (e, BigInt::from(c))))
}

fn diagram(family: Family, word: &str) -> PositiveDiagram {
    let w: Word = word.parse().unwrap();
    orient_positive(&family_shadow(family, w.len(), true).unwrap(), &w).unwrap()
}

fn both_engines(d: &PositiveDiagram) {
    let pd = d.pd_code();
    let naive = bracket_naive::<BigInt>(&pd, 22).unwrap();
    let (natural, _) = bracket_sweep::<BigInt>(&pd, &natural_order(d), 28).unwrap();
    let (greedy, _) = bracket_sweep::<BigInt>(&pd, &greedy_order(&pd), 28).unwrap();
    let identity: Vec<usize> = (0..pd.crossings.len()).collect();
    let (plain, _) = bracket_sweep::<BigInt>(&pd, &identity, 28).unwrap();
    assert_eq!(naive, natural, "{:?} {}", d.shadow().family(), d.word());
    assert_eq!(naive, greedy);
    assert_eq!(naive, plain);
}

#[test]
fn trefoils_against_table_values() {
    // Right-handed trefoil, writhe 3: V = t + t^3 - t^4.
    let right = PDCode { components: 1, free_loops: 0, crossings: vec![[1, 5, 2, 4], [3, 1, 4, 6], [5, 3, 6, 2]] };
    assert_eq!(bracket_naive::<BigInt>(&right, 22).unwrap(), p(&[(-7, 1), (-3, -1), (5, -1)]));
    let cfg = EngineConfig::default();
    let v = jones_pd::<BigInt>(&right, 3, &cfg).unwrap();
    assert_eq!(v, p(&[(-4, 1), (-12, 1), (-16, -1)]));
    assert_eq!(v.to_t_string(), "t + t^3 - t^4");
    // Its mirror image, writhe -3: V = t^-1 + t^-3 - t^-4.
    let left = PDCode { components: 1, free_loops: 0, crossings: vec![[1, 4, 2, 5], [3, 6, 4, 1], [5, 2, 6, 3]] };
    assert_eq!(jones_pd::<BigInt>(&left, -3, &cfg).unwrap(), v.mirror());
}

#[test]
fn figure_eight_is_amphichiral() {
    // Table code of the figure-eight knot (writhe 0): t^-2 - t^-1 + 1 - t + t^2.
    let pd = PDCode {
        components: 1,
        free_loops: 0,
        crossings: vec![[4, 2, 5, 1], [8, 6, 1, 5], [6, 3, 7, 4], [2, 7, 3, 8]],
    };
    let v = jones_pd::<BigInt>(&pd, 0, &EngineConfig::default()).unwrap();
    assert_eq!(v, p(&[(-8, 1), (-4, -1), (0, 1), (4, -1), (8, 1)]));
    assert_eq!(v, v.mirror());
}

#[test]
fn unlinks_give_powers_of_delta() {
    let d = diagram(Family::Ring, "1");
    assert_eq!(jones(&d).unwrap(), Poly::one());
    let pd = PDCode { components: 3, free_loops: 3, crossings: vec![] };
    let v = jones_pd::<BigInt>(&pd, 0, &EngineConfig::default()).unwrap();
    assert_eq!(v, Poly::delta().pow(2));
}

#[test]
fn engines_agree_on_small_families() {
    for family in [Family::Ring, Family::Boot, Family::Flower] {
        for n in 1..=4 {
            for a in Word::all(n) {
                both_engines(&orient_positive(&family_shadow(family, n, true).unwrap(), &a).unwrap());
            }
        }
    }
}

#[test]
fn engines_agree_on_random_sublinks() {
    let mut rng = StdRng::seed_from_u64(7);
    let mut checked = 0;
    while checked < 100 {
        let family = [Family::Ring, Family::Boot, Family::Flower][rng.gen_range(0..3)];
        let n = if family == Family::Flower { 6 } else { rng.gen_range(5..=7) };
        let s = family_shadow(family, n, false).unwrap();
        let a = Word::from_value(rng.gen_range(0..1u64 << n), n).unwrap();
        let d = orient_positive(&s, &a).unwrap();
        let indices: Vec<usize> = (0..n).filter(|_| rng.gen_bool(0.6)).collect();
        if indices.is_empty() {
            continue;
        }
        let sub = d.sublink(&indices).unwrap();
        if sub.crossing_count() > 20 {
            continue;
        }
        both_engines(&sub);
        checked += 1;
    }
}

#[test]
fn both_mode_checks_agreement() {
    let cfg = EngineConfig { engine: Engine::Both, order: OrderStrategy::Greedy, ..EngineConfig::default() };
    let d = diagram(Family::Boot, "00101");
    assert_eq!(jones_with::<BigInt>(&d, &cfg).unwrap(), jones(&d).unwrap());
    let capped = EngineConfig { engine: Engine::Naive, max_crossings: 10, ..EngineConfig::default() };
    assert!(jones_with::<BigInt>(&d, &capped).is_err());
}

#[test]
fn six_component_sweeps_stay_narrow() {
    for family in [Family::Ring, Family::Boot, Family::Flower] {
        for a in Word::all(6) {
            let d = orient_positive(&family_shadow(family, 6, false).unwrap(), &a).unwrap();
            let (_, stats) = bracket_sweep::<BigInt>(&d.pd_code(), &natural_order(&d), 28).unwrap();
            assert!(stats.max_width <= 2 * 6 + 2, "{family} {a}: width {}", stats.max_width);
        }
    }
}

#[test]
fn machine_and_big_coefficients_agree() {
    let cfg = EngineConfig::default();
    for a in Word::all(5) {
        let d = orient_positive(&family_shadow(Family::Boot, 5, false).unwrap(), &a).unwrap();
        let small: SmallPoly = jones_with::<i128>(&d, &cfg).unwrap();
        assert_eq!(small.map::<BigInt>(|&c| BigInt::from(c)), jones(&d).unwrap());
    }
}

#[test]
fn unit_evaluation() {
    // V(1) = (-2)^(components - 1) for every link.
    for family in [Family::Ring, Family::Boot, Family::Flower] {
        for a in Word::all(4) {
            let d = orient_positive(&family_shadow(family, 4, false).unwrap(), &a).unwrap();
            assert_eq!(jones(&d).unwrap().eval_one(), BigInt::from(-8));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn reversing_every_component_keeps_jones(n in 1usize..=5, v in any::<u64>(), f in 0usize..3) {
        let family = [Family::Ring, Family::Boot, Family::Flower][f];
        let s = family_shadow(family, n, true).unwrap();
        let a = Word::from_value(v % (1 << n), n).unwrap();
        let d = orient_positive(&s, &a).unwrap();
        let e = orient_positive(&s, &a.negate()).unwrap();
        prop_assert_eq!(jones(&d).unwrap(), jones(&e).unwrap());
    }

    #[test]
    fn sublinks_match_smaller_diagrams(n in 2usize..=5, v in any::<u64>(), m in any::<u32>(), f in 0usize..3) {
        let family = [Family::Ring, Family::Boot, Family::Flower][f];
        let a = Word::from_value(v % (1 << n), n).unwrap();
        let mask = (m % ((1 << n) - 1)) + 1;
        let indices: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
        let d = orient_positive(&family_shadow(family, n, true).unwrap(), &a).unwrap();
        let k = indices.len();
        let small = orient_positive(&family_shadow(family, k, true).unwrap(), &a.restrict(&indices).unwrap()).unwrap();
        prop_assert_eq!(jones(&d.sublink(&indices).unwrap()).unwrap(), jones(&small).unwrap());
    }
}
