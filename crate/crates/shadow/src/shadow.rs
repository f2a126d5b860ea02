use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::ShadowError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Ring,
    Boot,
    Flower,
    Custom,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Ring => "ring",
            Family::Boot => "boot",
            Family::Flower => "flower",
            Family::Custom => "custom",
        })
    }
}

impl std::str::FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "ring" => Ok(Family::Ring),
            "boot" => Ok(Family::Boot),
            "flower" => Ok(Family::Flower),
            "custom" => Ok(Family::Custom),
            other => Err(format!("unknown family {other:?}")),
        }
    }
}

/// The `index`-th crossing met along `component` in listed order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Visit {
    pub component: usize,
    pub index: usize,
}

/// An arc-end at a crossing: strand 0 or 1 of the crossing, leaving the
/// crossing (`out`) or arriving at it, relative to the listed direction of the
/// strand's component.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct End {
    pub strand: usize,
    pub out: bool,
}

/// Stable crossing label: the two components and the position of this
/// crossing among the crossings of that pair along the lower component.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CrossingKey {
    pub low: usize,
    pub high: usize,
    pub ordinal: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Crossing {
    pub strands: [Visit; 2],
    /// The four arc-ends in counterclockwise order.
    pub rotation: [End; 4],
}

impl Crossing {
    pub fn position(&self, end: End) -> usize {
        self.rotation.iter().position(|&e| e == end).expect("end present in rotation")
    }

    pub fn component(&self, strand: usize) -> usize {
        self.strands[strand].component
    }
}

/// Combinatorial plane diagram of an arrangement of closed curves.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Shadow {
    family: Family,
    components: Vec<Vec<usize>>,
    crossings: Vec<Crossing>,
    keys: Vec<CrossingKey>,
}

#[derive(Serialize, Deserialize)]
struct ShadowJson {
    #[serde(default = "custom")]
    family: Family,
    components: Vec<Vec<usize>>,
    rotations: Vec<[[usize; 2]; 4]>,
}

fn custom() -> Family {
    Family::Custom
}

impl Shadow {
    /// Assemble a shadow from component crossing sequences and, per
    /// crossing, its counterclockwise arc-ends given as
    /// `(component, leaves_in_listed_direction)`.
    pub fn from_parts(
        family: Family,
        components: Vec<Vec<usize>>,
        rotations: Vec<[(usize, bool); 4]>,
    ) -> Result<Shadow, ShadowError> {
        let c = rotations.len();
        let mut visits: Vec<Vec<Visit>> = vec![Vec::new(); c];
        for (comp, seq) in components.iter().enumerate() {
            for (index, &x) in seq.iter().enumerate() {
                if x >= c {
                    return Err(ShadowError::Malformed(format!("crossing {x} out of range")));
                }
                visits[x].push(Visit { component: comp, index });
            }
        }
        let mut crossings = Vec::with_capacity(c);
        for (x, rot) in rotations.iter().enumerate() {
            let v = &visits[x];
            if v.len() != 2 {
                return Err(ShadowError::Malformed(format!("crossing {x} is visited {} times", v.len())));
            }
            if v[0].component == v[1].component {
                return Err(ShadowError::Malformed(format!("crossing {x} is a self-crossing")));
            }
            let mut rotation = [End { strand: 0, out: false }; 4];
            for (slot, &(comp, out)) in rotation.iter_mut().zip(rot) {
                let strand = v
                    .iter()
                    .position(|vv| vv.component == comp)
                    .ok_or_else(|| ShadowError::Malformed(format!("crossing {x} lists a foreign component {comp}")))?;
                *slot = End { strand, out };
            }
            crossings.push(Crossing { strands: [v[0], v[1]], rotation });
        }
        let keys = compute_keys(&components, &crossings);
        Ok(Shadow { family, components, crossings, keys })
    }

    pub fn from_json(text: &str) -> Result<Shadow, ShadowError> {
        let j: ShadowJson = serde_json::from_str(text).map_err(|e| ShadowError::Malformed(e.to_string()))?;
        let rotations = j
            .rotations
            .iter()
            .map(|r| {
                let mut out = [(0, false); 4];
                for (o, e) in out.iter_mut().zip(r) {
                    *o = (e[0], e[1] != 0);
                }
                out
            })
            .collect();
        Shadow::from_parts(j.family, j.components, rotations)
    }

    pub fn to_json(&self) -> String {
        let rotations = self
            .crossings
            .iter()
            .map(|x| {
                let mut r = [[0usize; 2]; 4];
                for (slot, e) in r.iter_mut().zip(&x.rotation) {
                    *slot = [x.component(e.strand), e.out as usize];
                }
                r
            })
            .collect();
        let j = ShadowJson { family: self.family, components: self.components.clone(), rotations };
        serde_json::to_string(&j).expect("shadow serialises")
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn with_family(mut self, family: Family) -> Shadow {
        self.family = family;
        self
    }

    pub fn n_components(&self) -> usize {
        self.components.len()
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn components(&self) -> &[Vec<usize>] {
        &self.components
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn crossing(&self, x: usize) -> &Crossing {
        &self.crossings[x]
    }

    pub fn key(&self, x: usize) -> CrossingKey {
        self.keys[x]
    }

    /// Crossing indices sorted by key.
    pub fn key_order(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.crossings.len()).collect();
        order.sort_by_key(|&x| self.keys[x]);
        order
    }

    /// The dart at the far side of the arc leaving crossing `x` through
    /// rotation slot `p`.
    pub fn alpha(&self, x: usize, p: usize) -> (usize, usize) {
        let cr = &self.crossings[x];
        let e = cr.rotation[p];
        let v = cr.strands[e.strand];
        let seq = &self.components[v.component];
        let m = seq.len();
        let (index, out) = if e.out { ((v.index + 1) % m, false) } else { ((v.index + m - 1) % m, true) };
        let y = seq[index];
        let ycr = &self.crossings[y];
        let strand = if ycr.strands[0].component == v.component { 0 } else { 1 };
        (y, ycr.position(End { strand, out }))
    }

    /// Shadow formed by the given components (0-based, strictly increasing),
    /// renumbered in order. Rotation at surviving crossings is unchanged.
    pub fn restrict(&self, indices: &[usize]) -> Result<Shadow, ShadowError> {
        check_selection(indices, self.n_components())?;
        let mut new_comp = vec![usize::MAX; self.n_components()];
        for (k, &i) in indices.iter().enumerate() {
            new_comp[i] = k;
        }
        let mut new_x = vec![usize::MAX; self.crossings.len()];
        let mut rotations = Vec::new();
        for (x, cr) in self.crossings.iter().enumerate() {
            let (a, b) = (cr.component(0), cr.component(1));
            if new_comp[a] != usize::MAX && new_comp[b] != usize::MAX {
                new_x[x] = rotations.len();
                let mut r = [(0, false); 4];
                for (slot, e) in r.iter_mut().zip(&cr.rotation) {
                    *slot = (new_comp[cr.component(e.strand)], e.out);
                }
                rotations.push(r);
            }
        }
        let components = indices
            .iter()
            .map(|&i| self.components[i].iter().map(|&x| new_x[x]).filter(|&x| x != usize::MAX).collect())
            .collect();
        Shadow::from_parts(self.family, components, rotations)
    }

    /// Same shadow with component labels permuted: old component `i`
    /// becomes `perm[i]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Shadow, ShadowError> {
        let n = self.n_components();
        let mut sorted = perm.to_vec();
        sorted.sort_unstable();
        if sorted != (0..n).collect::<Vec<_>>() {
            return Err(ShadowError::BadSelection("relabelling is not a permutation".into()));
        }
        let mut components = vec![Vec::new(); n];
        for (i, seq) in self.components.iter().enumerate() {
            components[perm[i]] = seq.clone();
        }
        let rotations = self
            .crossings
            .iter()
            .map(|cr| {
                let mut r = [(0, false); 4];
                for (slot, e) in r.iter_mut().zip(&cr.rotation) {
                    *slot = (perm[cr.component(e.strand)], e.out);
                }
                r
            })
            .collect();
        Shadow::from_parts(self.family, components, rotations)
    }

    /// Count faces of the embedding defined by the rotation system.
    pub fn face_count(&self) -> usize {
        let c = self.crossings.len();
        let mut seen = vec![[false; 4]; c];
        let mut faces = 0;
        for x in 0..c {
            for p in 0..4 {
                if seen[x][p] {
                    continue;
                }
                faces += 1;
                let (mut y, mut q) = (x, p);
                while !seen[y][q] {
                    seen[y][q] = true;
                    let (z, r) = self.alpha(y, q);
                    y = z;
                    q = (r + 1) % 4;
                }
            }
        }
        faces
    }

    pub fn validate(&self) -> ValidationReport {
        let n = self.n_components();
        let c = self.crossings.len();
        let mut checks = Vec::new();

        let mut bad = Vec::new();
        for (x, cr) in self.crossings.iter().enumerate() {
            let mut ends: Vec<End> = cr.rotation.to_vec();
            ends.sort();
            let full = ends
                == [
                    End { strand: 0, out: false },
                    End { strand: 0, out: true },
                    End { strand: 1, out: false },
                    End { strand: 1, out: true },
                ];
            let transversal = full && (0..4).all(|p| cr.rotation[p].strand == cr.rotation[(p + 2) % 4].strand);
            if !transversal {
                bad.push(x);
            }
        }
        checks.push(Check::new(
            "four-valent",
            bad.is_empty(),
            if bad.is_empty() {
                format!("{c} crossings, each with two transversal strands")
            } else {
                format!("crossings {bad:?} lack two transversal strands")
            },
        ));

        let mut pairs: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        for cr in &self.crossings {
            let (a, b) = (cr.component(0), cr.component(1));
            *pairs.entry((a.min(b), a.max(b))).or_default() += 1;
        }
        let mut wrong = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                let k = pairs.get(&(a, b)).copied().unwrap_or(0);
                if k != 2 {
                    wrong.push(format!("({},{})x{}", a + 1, b + 1, k));
                }
            }
        }
        checks.push(Check::new(
            "pairwise-twice",
            wrong.is_empty(),
            if wrong.is_empty() { "every pair crosses exactly twice".to_string() } else { wrong.join(" ") },
        ));

        let expected = n * n.saturating_sub(1);
        checks.push(Check::new("crossing-total", c == expected, format!("{c} crossings, expected {expected}")));

        let connected = self.is_connected();
        if c == 0 {
            checks.push(Check::new("euler", n <= 1, format!("no crossings, {n} free loops")));
        } else if checks[0].passed {
            let f = self.face_count();
            let chi = c as i64 - 2 * c as i64 + f as i64;
            checks.push(Check::new(
                "euler",
                chi == 2,
                format!("V={c} E={} F={f} V-E+F={chi}", 2 * c),
            ));
        } else {
            checks.push(Check::new("euler", false, "skipped: rotation system is not four-valent".into()));
        }
        checks.push(Check::new(
            "connected",
            connected,
            if connected { "the diagram is connected".into() } else { "the diagram is split".into() },
        ));
        ValidationReport { checks }
    }

    fn is_connected(&self) -> bool {
        let n = self.n_components();
        if n <= 1 {
            return true;
        }
        if self.components.iter().any(|s| s.is_empty()) {
            return false;
        }
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut i: usize) -> usize {
            while p[i] != i {
                p[i] = p[p[i]];
                i = p[i];
            }
            i
        }
        for cr in &self.crossings {
            let (a, b) = (find(&mut parent, cr.component(0)), find(&mut parent, cr.component(1)));
            parent[a] = b;
        }
        let root = find(&mut parent, 0);
        (0..n).all(|i| find(&mut parent, i) == root)
    }
}

pub(crate) fn check_selection(indices: &[usize], n: usize) -> Result<(), ShadowError> {
    if indices.is_empty() {
        return Err(ShadowError::BadSelection("no components selected".into()));
    }
    if indices.windows(2).any(|w| w[0] >= w[1]) {
        return Err(ShadowError::BadSelection("indices must be strictly increasing".into()));
    }
    if let Some(&last) = indices.last() {
        if last >= n {
            return Err(ShadowError::BadSelection(format!("component {} out of range 1..={n}", last + 1)));
        }
    }
    Ok(())
}

fn compute_keys(components: &[Vec<usize>], crossings: &[Crossing]) -> Vec<CrossingKey> {
    let mut keys = vec![CrossingKey { low: 0, high: 0, ordinal: 0 }; crossings.len()];
    for (low, seq) in components.iter().enumerate() {
        let mut seen: BTreeMap<usize, usize> = BTreeMap::new();
        for &x in seq {
            let cr = &crossings[x];
            let other = if cr.component(0) == low { cr.component(1) } else { cr.component(0) };
            if other > low {
                let ordinal = seen.entry(other).or_default();
                keys[x] = CrossingKey { low, high: other, ordinal: *ordinal };
                *ordinal += 1;
            }
        }
    }
    keys
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(name: &str, passed: bool, detail: String) -> Check {
        Check { name: name.to_string(), passed, detail }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub checks: Vec<Check>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}
