use pclink_shadow::{isomorphic, ring_shadow, Family, ShadowError};
use pclink_word::{brute_orbits, Word, WordGroup, DEFAULT_ORBIT_CAP};
use serde::Serialize;
use serde_json::{json, Value};

use crate::{jones_for_word, jones_partition, CensusConfig, CensusError, JonesPartition};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FactStatus {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FactCheck {
    pub name: String,
    pub status: FactStatus,
    pub detail: String,
    pub witness: Value,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FactReport {
    pub checks: Vec<FactCheck>,
}

impl FactReport {
    /// True when no check failed; skipped checks do not count against it.
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != FactStatus::Fail)
    }

    pub fn check(&self, name: &str) -> Option<&FactCheck> {
        self.checks.iter().find(|c| c.name == name)
    }
}

fn w(s: &str) -> Word {
    s.parse().expect("literal words are valid")
}

fn words(ws: &[Word]) -> Vec<String> {
    ws.iter().map(Word::to_string).collect()
}

fn check(name: &str, passed: bool, detail: String, witness: Value) -> FactCheck {
    let status = if passed { FactStatus::Pass } else { FactStatus::Fail };
    FactCheck { name: name.into(), status, detail, witness }
}

fn errored(name: &str, e: CensusError) -> FactCheck {
    check(name, false, format!("computation failed: {e}"), Value::Null)
}

fn cell_witness(p: &JonesPartition, a: &Word) -> Value {
    json!({
        "word": a.to_string(),
        "cell": p.cell_containing(a).map(|c| words(&c)),
        "jones": p.jones(a).map(|v| v.to_t_string()),
        "cell_count": p.cell_count(),
    })
}

/// The cell of `a` is exactly `expected`.
fn cell_is(p: &JonesPartition, a: &Word, expected: &[Word]) -> bool {
    let mut want = expected.to_vec();
    want.sort();
    p.cell_containing(a).is_some_and(|c| c == want)
}

fn ring4(cfg: &CensusConfig) -> FactCheck {
    let name = "ring4-jones-partition";
    match jones_partition(Family::Ring, 4, cfg) {
        Ok(p) => {
            let pair = [w("0101"), w("1010")];
            let ok = p.is_complete() && cell_is(&p, &pair[0], &pair);
            check(
                name,
                ok,
                "R(0101) and R(1010) share a Jones polynomial that no other length-4 ring word has".into(),
                cell_witness(&p, &pair[0]),
            )
        }
        Err(e) => errored(name, e),
    }
}

fn boot6(p: &Result<JonesPartition, String>) -> Vec<FactCheck> {
    let single = "boot6-singletons";
    let pair = "boot6-reversal-pair";
    let p = match p {
        Ok(p) => p,
        Err(e) => {
            return vec![
                check(single, false, format!("computation failed: {e}"), Value::Null),
                check(pair, false, format!("computation failed: {e}"), Value::Null),
            ]
        }
    };
    let (a, b) = (w("010101"), w("101010"));
    let singles = p.cell_containing(&a).is_some_and(|c| c.len() == 1) && p.cell_containing(&b).is_some_and(|c| c.len() == 1);
    vec![
        check(
            single,
            singles,
            "{010101} and {101010} as singleton Jones cells; impossible, since B(ā) is B(a) with every \
             component reversed and the Jones polynomial ignores a global reversal"
                .into(),
            cell_witness(p, &a),
        ),
        check(
            pair,
            p.is_complete() && cell_is(p, &a, &[a.clone(), b.clone()]),
            "B(010101) and B(101010) share a Jones polynomial that no other length-6 boot word has".into(),
            cell_witness(p, &a),
        ),
    ]
}

fn flower6(cfg: &CensusConfig) -> FactCheck {
    let name = "flower6-cell";
    match jones_partition(Family::Flower, 6, cfg) {
        Ok(p) => {
            let pair = [w("010101"), w("101010")];
            check(
                name,
                p.is_complete() && cell_is(&p, &pair[0], &pair),
                "F(010101) and F(101010) share a Jones cell containing no other length-6 flower word".into(),
                cell_witness(&p, &pair[0]),
            )
        }
        Err(e) => errored(name, e),
    }
}

fn flower_orbit_size() -> FactCheck {
    let n = 8;
    let name = "flower-orbit-size-≤2n";
    let group = WordGroup::flower(n);
    match brute_orbits(&group, n, DEFAULT_ORBIT_CAP) {
        Ok(orbits) => {
            let largest = orbits.cells().iter().map(Vec::len).max().unwrap_or(0);
            check(
                name,
                largest <= 2 * n && group.order() == 2 * n,
                format!("FLOWER2N orbits on length-{n} words have at most {} elements", 2 * n),
                json!({ "n": n, "largest_orbit": largest, "orbits": orbits.cell_count(), "group_order": group.order() }),
            )
        }
        Err(e) => errored(name, e.into()),
    }
}

/// The three-pseudocircle arrangement of the introductory figure: three
/// circles in a row, each pair crossing twice (R_3, which is also B_3).
/// The Venn diagram F_3 is the only other arrangement of size 3.
fn figure_arrangement() -> Result<pclink_shadow::Shadow, ShadowError> {
    ring_shadow(3)
}

/// Census of the three-pseudocircle arrangement, attached to the family
/// generator it matches (skipped if none does).
pub fn figure_three_circle(cfg: &CensusConfig) -> FactCheck {
    let name = "figure-3-circle-census";
    let shadow = match figure_arrangement() {
        Ok(s) => s,
        Err(e) => return errored(name, e.into()),
    };
    let matched = [Family::Ring, Family::Boot, Family::Flower].into_iter().find(|&f| {
        pclink_shadow::family_shadow(f, 3, true).is_ok_and(|g| isomorphic(&g, &shadow, true))
    });
    let Some(family) = matched else {
        return FactCheck {
            name: name.into(),
            status: FactStatus::Skipped,
            detail: "skipped: arrangement unmatched".into(),
            witness: Value::Null,
        };
    };
    let cfg = CensusConfig { allow_odd_flower: true, ..cfg.clone() };
    match jones_partition(family, 3, &cfg) {
        Ok(p) => {
            let mut sizes = p.cell_sizes();
            sizes.sort_unstable_by(|a, b| b.cmp(a));
            check(
                name,
                p.is_complete() && sizes == [6, 2],
                "the 8 positive links on three pairwise crossing circles fall into 2 Jones cells of sizes 6 and 2".into(),
                json!({
                    "family": family,
                    "links": p.entries().len(),
                    "cell_sizes": sizes,
                    "cells": (0..p.cell_count()).map(|k| words(&p.cell_words(k))).collect::<Vec<_>>(),
                }),
            )
        }
        Err(e) => errored(name, e),
    }
}

/// Ring words related by negation and reversal give the same Jones polynomial.
fn ring_word_maps(cfg: &CensusConfig) -> FactCheck {
    let name = "ring-word-maps";
    let n = 5;
    let mut checked = 0;
    for a in Word::all(n) {
        let images = [a.negate(), a.reverse(), a.reverse().negate()];
        let base = match jones_for_word(Family::Ring, &a, cfg) {
            Ok(v) => v,
            Err(e) => return errored(name, e),
        };
        for b in images {
            match jones_for_word(Family::Ring, &b, cfg) {
                Ok(v) if v == base => checked += 1,
                Ok(_) => {
                    return check(
                        name,
                        false,
                        "R(a), R(ā), R(←a), R(←ā) share a Jones polynomial".into(),
                        json!({ "word": a.to_string(), "image": b.to_string() }),
                    )
                }
                Err(e) => return errored(name, e),
            }
        }
    }
    check(
        name,
        true,
        "R(a), R(ā), R(←a), R(←ā) share a Jones polynomial".into(),
        json!({ "n": n, "comparisons": checked }),
    )
}

/// Flower words related by rotation and ve give the same Jones polynomial.
fn flower_word_maps(cfg: &CensusConfig) -> FactCheck {
    let name = "flower-rotation-ve";
    let n = 6;
    let p = match jones_partition(Family::Flower, n, cfg) {
        Ok(p) => p,
        Err(e) => return errored(name, e),
    };
    for a in Word::all(n) {
        for b in [a.rotate(1), a.ve()] {
            if p.jones(&a).is_none() || p.jones(&a) != p.jones(&b) {
                return check(
                    name,
                    false,
                    "F(ro(a)) and F(ve(a)) have the Jones polynomial of F(a)".into(),
                    json!({ "word": a.to_string(), "image": b.to_string() }),
                );
            }
        }
    }
    check(
        name,
        p.orbits_refine_cells(),
        "F(ro(a)) and F(ve(a)) have the Jones polynomial of F(a); every FLOWER2N orbit lies in one Jones cell".into(),
        json!({ "n": n, "orbits": p.orbit_count(), "cells": p.cell_count() }),
    )
}

/// Run every registered check.
pub fn verify_facts(cfg: &CensusConfig) -> FactReport {
    let mut checks = vec![ring4(cfg)];
    checks.extend(boot6(&jones_partition(Family::Boot, 6, cfg).map_err(|e| e.to_string())));
    checks.push(flower6(cfg));
    checks.push(flower_orbit_size());
    checks.push(figure_three_circle(cfg));
    checks.push(ring_word_maps(cfg));
    checks.push(flower_word_maps(cfg));
    FactReport { checks }
}
