use std::collections::BTreeMap;
use std::fmt::Write as _;

use pclink_word::Word;
use serde::{Deserialize, Serialize};

use crate::{End, Family, PositiveDiagram, Shadow, ShadowError};

/// Planar diagram code.
///
/// Arcs are numbered from 1 consecutively along each oriented component,
/// component 1 first. A component starts at its visit of its lowest-keyed
/// crossing: the arc leaving that crossing gets the component's first label.
/// Each tuple lists the four arcs at a crossing counterclockwise, starting
/// with the incoming under-strand. Tuples appear in crossing-key order.
/// Components without crossings are counted in `free_loops`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PDCode {
    pub components: usize,
    pub free_loops: usize,
    pub crossings: Vec<[usize; 4]>,
}

impl PDCode {
    pub fn from_diagram(d: &PositiveDiagram) -> PDCode {
        let s = d.shadow();
        let order = s.key_order();
        let mut rank = vec![0; order.len()];
        for (r, &x) in order.iter().enumerate() {
            rank[x] = r;
        }
        let n = s.n_components();
        let mut out_arc: Vec<Vec<usize>> = vec![Vec::new(); n];
        let mut in_arc: Vec<Vec<usize>> = vec![Vec::new(); n];
        let mut next = 1;
        let mut free_loops = 0;
        for c in 0..n {
            let seq = &s.components()[c];
            let m = seq.len();
            if m == 0 {
                free_loops += 1;
                continue;
            }
            let oriented: Vec<usize> = if d.forward(c) { (0..m).collect() } else { (0..m).rev().collect() };
            let t0 = (0..m).min_by_key(|&t| rank[seq[oriented[t]]]).unwrap();
            out_arc[c] = vec![0; m];
            in_arc[c] = vec![0; m];
            for t in 0..m {
                let here = oriented[(t0 + t) % m];
                let there = oriented[(t0 + t + 1) % m];
                out_arc[c][here] = next + t;
                in_arc[c][there] = next + t;
            }
            next += m;
        }
        let arc_at = |x: usize, e: End| {
            let cr = s.crossing(x);
            let v = cr.strands[e.strand];
            if e.out == d.forward(v.component) {
                out_arc[v.component][v.index]
            } else {
                in_arc[v.component][v.index]
            }
        };
        let crossings = order
            .iter()
            .map(|&x| {
                let cr = s.crossing(x);
                let u = 1 - d.over_strands()[x];
                let p = cr.position(End { strand: u, out: !d.forward(cr.component(u)) });
                let mut t = [0; 4];
                for (k, slot) in t.iter_mut().enumerate() {
                    *slot = arc_at(x, cr.rotation[(p + k) % 4]);
                }
                t
            })
            .collect();
        PDCode { components: n, free_loops, crossings }
    }

    pub fn arc_count(&self) -> usize {
        2 * self.crossings.len()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("PD code serialises")
    }

    pub fn from_json(text: &str) -> Result<PDCode, ShadowError> {
        let pd: PDCode = serde_json::from_str(text).map_err(|e| ShadowError::BadPd(e.to_string()))?;
        pd.check_labels()?;
        Ok(pd)
    }

    /// One `X(a,b,c,d)` line per crossing.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for t in &self.crossings {
            writeln!(out, "X({},{},{},{})", t[0], t[1], t[2], t[3]).unwrap();
        }
        out
    }

    /// Read `X(a,b,c,d)` lines; the component count is recovered from the arcs.
    pub fn parse_text(text: &str, free_loops: usize) -> Result<PDCode, ShadowError> {
        let mut crossings = Vec::new();
        for line in text.lines().map(str::trim).filter(|l| !l.is_empty()) {
            let inner = line
                .strip_prefix("X(")
                .and_then(|r| r.strip_suffix(')'))
                .ok_or_else(|| ShadowError::BadPd(format!("expected X(a,b,c,d), got {line:?}")))?;
            let nums: Result<Vec<usize>, _> = inner.split(',').map(|t| t.trim().parse::<usize>()).collect();
            let nums = nums.map_err(|e| ShadowError::BadPd(format!("{line:?}: {e}")))?;
            let t: [usize; 4] = nums
                .try_into()
                .map_err(|_| ShadowError::BadPd(format!("{line:?} does not have four labels")))?;
            crossings.push(t);
        }
        let mut pd = PDCode { components: 0, free_loops, crossings };
        pd.check_labels()?;
        pd.components = pd.trace()?.len() + free_loops;
        Ok(pd)
    }

    fn check_labels(&self) -> Result<(), ShadowError> {
        let mut count: BTreeMap<usize, usize> = BTreeMap::new();
        for t in &self.crossings {
            for &a in t {
                *count.entry(a).or_default() += 1;
            }
        }
        if let Some((a, k)) = count.iter().find(|(_, &k)| k != 2) {
            return Err(ShadowError::BadPd(format!("arc {a} appears {k} times")));
        }
        Ok(())
    }

    /// Oriented components as sequences of `(crossing, entry slot)`.
    fn trace(&self) -> Result<Vec<Vec<(usize, usize)>>, ShadowError> {
        let c = self.crossings.len();
        let mut occ: BTreeMap<usize, Vec<(usize, usize)>> = BTreeMap::new();
        for (x, t) in self.crossings.iter().enumerate() {
            for (p, &a) in t.iter().enumerate() {
                occ.entry(a).or_default().push((x, p));
            }
        }
        let other = |x: usize, p: usize| {
            let o = &occ[&self.crossings[x][p]];
            if o[0] == (x, p) {
                o[1]
            } else {
                o[0]
            }
        };
        let mut done = vec![[false; 2]; c];
        let mut comps = Vec::new();
        for x in 0..c {
            for strand in 0..2 {
                if done[x][strand] {
                    continue;
                }
                // Walk entering at slot `strand`, leaving at `strand + 2`.
                let mut cycle = Vec::new();
                let (mut y, mut q) = (x, strand);
                loop {
                    if done[y][q % 2] {
                        if (y, q % 2) == (x, strand) {
                            break;
                        }
                        return Err(ShadowError::BadPd("a strand is shared by two components".into()));
                    }
                    done[y][q % 2] = true;
                    cycle.push((y, q));
                    (y, q) = other(y, (q + 2) % 4);
                }
                comps.push(self.orient_cycle(cycle)?);
            }
        }
        Ok(comps)
    }

    fn orient_cycle(&self, cycle: Vec<(usize, usize)>) -> Result<Vec<(usize, usize)>, ShadowError> {
        let forward = cycle.iter().any(|&(_, q)| q == 0);
        let backward = cycle.iter().any(|&(_, q)| q == 2);
        let flip = |cyc: Vec<(usize, usize)>| -> Vec<(usize, usize)> {
            cyc.into_iter().rev().map(|(x, q)| (x, (q + 2) % 4)).collect()
        };
        match (forward, backward) {
            (true, true) => Err(ShadowError::BadPd("under-strands disagree on a component's orientation".into())),
            (true, false) => Ok(cycle),
            (false, true) => Ok(flip(cycle)),
            (false, false) => {
                // Only over-strands: follow increasing labels, preferring the
                // d -> b direction when both readings fit.
                let mut labels: Vec<usize> = cycle.iter().map(|&(x, q)| self.crossings[x][q]).collect();
                labels.sort_unstable();
                let succ = |a: usize| {
                    let i = labels.binary_search(&a).unwrap();
                    labels[(i + 1) % labels.len()]
                };
                let fits = |cyc: &[(usize, usize)]| {
                    cyc.iter().all(|&(x, q)| self.crossings[x][(q + 2) % 4] == succ(self.crossings[x][q]))
                };
                let flipped = flip(cycle.clone());
                let a = fits(&cycle);
                let b = fits(&flipped);
                let cycle_enters_d = cycle.first().is_some_and(|&(_, q)| q == 3);
                Ok(match (a, b) {
                    (true, false) => cycle,
                    (false, true) => flipped,
                    _ if cycle_enters_d => cycle,
                    _ => flipped,
                })
            }
        }
    }

    /// Rebuild a positive diagram (custom family, every component listed in
    /// its oriented direction so the word is all ones).
    pub fn to_diagram(&self) -> Result<PositiveDiagram, ShadowError> {
        self.check_labels()?;
        let mut comps = self.trace()?;
        let c = self.crossings.len();
        // Each component starts where its smallest label leaves.
        for comp in comps.iter_mut() {
            let k = (0..comp.len()).min_by_key(|&k| self.crossings[comp[k].0][(comp[k].1 + 2) % 4]).unwrap();
            comp.rotate_left(k);
        }
        comps.sort_by_key(|comp| self.crossings[comp[0].0][(comp[0].1 + 2) % 4]);
        let mut rotations = vec![[(0usize, false); 4]; c];
        let mut over = vec![0usize; c];
        let mut components: Vec<Vec<usize>> = Vec::new();
        for (ci, comp) in comps.iter().enumerate() {
            for &(x, q) in comp {
                rotations[x][q] = (ci, false);
                rotations[x][(q + 2) % 4] = (ci, true);
            }
            components.push(comp.iter().map(|&(x, _)| x).collect());
        }
        components.extend(std::iter::repeat_n(Vec::new(), self.free_loops));
        let shadow = Shadow::from_parts(Family::Custom, components, rotations)?;
        for (x, slot) in over.iter_mut().enumerate() {
            let cr = shadow.crossing(x);
            let over_comp = comps.iter().position(|comp| comp.iter().any(|&(y, q)| y == x && q % 2 == 1)).unwrap();
            *slot = if cr.component(0) == over_comp { 0 } else { 1 };
        }
        let word = Word::from_bits(&vec![true; shadow.n_components()])
            .map_err(|_| ShadowError::BadPd("a diagram needs at least one component".into()))?;
        PositiveDiagram::from_parts(shadow, word, over)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{isomorphic_labeled, orient_positive, ring_shadow};

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn hopf_code() {
        let d = orient_positive(&ring_shadow(2).unwrap(), &w("00")).unwrap();
        let pd = d.pd_code();
        assert_eq!(pd.components, 2);
        assert_eq!(pd.free_loops, 0);
        assert_eq!(pd.crossings.len(), 2);
        let mut labels: Vec<usize> = pd.crossings.iter().flatten().copied().collect();
        labels.sort_unstable();
        assert_eq!(labels, vec![1, 1, 2, 2, 3, 3, 4, 4]);
        assert!(pd.to_json().starts_with("{\"components\":2,\"free_loops\":0,\"crossings\":[["));
    }

    #[test]
    fn free_loop_header() {
        let d = orient_positive(&ring_shadow(1).unwrap(), &w("1")).unwrap();
        let pd = d.pd_code();
        assert_eq!(pd, PDCode { components: 1, free_loops: 1, crossings: vec![] });
        let back = pd.to_diagram().unwrap();
        assert_eq!(back.n_components(), 1);
        assert_eq!(back.crossing_count(), 0);
    }

    #[test]
    fn text_round_trip() {
        let d = orient_positive(&ring_shadow(3).unwrap(), &w("010")).unwrap();
        let pd = d.pd_code();
        let back = PDCode::parse_text(&pd.to_text(), 0).unwrap();
        assert_eq!(back, pd);
        assert_eq!(PDCode::from_json(&pd.to_json()).unwrap(), pd);
    }

    #[test]
    fn parse_errors() {
        assert!(PDCode::parse_text("X(1,2,3)", 0).is_err());
        assert!(PDCode::parse_text("Y(1,2,3,4)", 0).is_err());
        assert!(PDCode::parse_text("X(1,2,3,4)", 0).is_err());
        assert!(PDCode::from_json("{\"components\":1,\"free_loops\":0,\"crossings\":[[1,1,1,2]]}").is_err());
    }

    #[test]
    fn diagram_round_trip() {
        for n in 1..=4 {
            let s = ring_shadow(n).unwrap();
            for a in Word::all(n) {
                let d = orient_positive(&s, &a).unwrap();
                let back = d.pd_code().to_diagram().unwrap();
                assert_eq!(back.crossing_count(), d.crossing_count());
                assert_eq!(back.writhe(), d.writhe());
                assert!(back.shadow().validate().passed());
                if n > 1 {
                    assert!(isomorphic_labeled(back.shadow(), d.shadow(), false), "n={n} a={a}");
                }
                let again = back.pd_code().to_diagram().unwrap();
                assert_eq!(again.pd_code(), back.pd_code());
            }
        }
    }
}
