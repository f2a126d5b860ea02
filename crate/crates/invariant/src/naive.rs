use std::collections::BTreeMap;
use std::ops::Mul;

use pclink_shadow::PDCode;

use crate::{Coefficient, InvariantError, Laurent};

/// Default crossing cap of the exhaustive state sum.
pub const DEFAULT_MAX_CROSSINGS: usize = 22;

/// Arc labels renumbered to `0..arcs`.
pub(crate) fn dense_tuples(pd: &PDCode) -> (Vec<[usize; 4]>, usize) {
    let mut ids = BTreeMap::new();
    for t in &pd.crossings {
        for &a in t {
            let next = ids.len();
            ids.entry(a).or_insert(next);
        }
    }
    let tuples = pd.crossings.iter().map(|t| t.map(|a| ids[&a])).collect();
    (tuples, ids.len())
}

fn find(parent: &mut [usize], mut i: usize) -> usize {
    while parent[i] != i {
        parent[i] = parent[parent[i]];
        i = parent[i];
    }
    i
}

/// Kauffman bracket by summing over all `2^c` smoothings.
pub fn bracket_naive<C: Coefficient>(pd: &PDCode, max_crossings: usize) -> Result<Laurent<C>, InvariantError>
where
    for<'a> &'a C: Mul<&'a C, Output = C>,
{
    let c = pd.crossings.len();
    if c > max_crossings {
        return Err(InvariantError::TooManyCrossings { crossings: c, cap: max_crossings });
    }
    let (tuples, arcs) = dense_tuples(pd);
    // hist[b][loops]: number of states with `b` B-smoothings and `loops` loops.
    let mut hist = vec![vec![0u64; arcs + pd.free_loops + 2]; c + 1];
    let mut parent = vec![0; arcs];
    for state in 0u64..(1u64 << c) {
        for (i, p) in parent.iter_mut().enumerate() {
            *p = i;
        }
        let mut components = arcs;
        for (k, t) in tuples.iter().enumerate() {
            let pairs = if state >> k & 1 == 0 { [(t[0], t[1]), (t[2], t[3])] } else { [(t[0], t[3]), (t[1], t[2])] };
            for (a, b) in pairs {
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                if ra != rb {
                    parent[ra] = rb;
                    components -= 1;
                }
            }
        }
        hist[state.count_ones() as usize][components + pd.free_loops] += 1;
    }
    let delta = Laurent::<C>::delta();
    let mut delta_pows = vec![Laurent::<C>::one()];
    let mut out = Laurent::<C>::zero();
    for (b, row) in hist.iter().enumerate() {
        for (loops, &count) in row.iter().enumerate() {
            if count == 0 {
                continue;
            }
            while delta_pows.len() < loops {
                let next = delta_pows.last().unwrap() * &delta;
                delta_pows.push(next);
            }
            let weight = C::from_u64(count).expect("state counts fit the coefficient ring");
            out.add_shifted(&delta_pows[loops - 1].scale(&weight), c as i64 - 2 * b as i64);
        }
    }
    Ok(out)
}
