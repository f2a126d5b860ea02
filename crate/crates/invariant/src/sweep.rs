use std::collections::HashMap;
use std::ops::Mul;

use pclink_shadow::PDCode;

use crate::naive::dense_tuples;
use crate::{Coefficient, InvariantError, Laurent};

/// Default cap on the number of open arcs during a sweep.
pub const DEFAULT_MAX_WIDTH: usize = 28;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SweepStats {
    /// Largest number of open arcs seen.
    pub max_width: usize,
    /// Largest number of distinct connection states kept at once.
    pub max_states: usize,
}

/// Weighted connection states: `partner[i]` is the frontier position joined
/// to frontier position `i` through the processed crossings. The flag records
/// whether some loop has already closed; the first closed loop is not
/// weighted by `δ`, which accounts for the `δ^(loops - 1)` normalisation.
type States<C> = HashMap<(Vec<u8>, bool), Laurent<C>>;

#[derive(Clone, Copy, PartialEq, Eq)]
enum Link {
    /// Another slot of the same crossing.
    Slot(usize),
    /// An open arc that stays on the frontier (old frontier position).
    Keep(usize),
    /// An arc that opens here (index into the new arcs of this crossing).
    Open(usize),
}

fn check_order(order: &[usize], c: usize) -> Result<(), InvariantError> {
    let mut seen = vec![false; c];
    if order.len() != c {
        return Err(InvariantError::BadOrder(c));
    }
    for &x in order {
        if x >= c || seen[x] {
            return Err(InvariantError::BadOrder(c));
        }
        seen[x] = true;
    }
    Ok(())
}

/// Kauffman bracket by a frontier sweep, processing the PD tuples in `order`.
///
/// Only the connectivity of the open arcs is remembered between crossings,
/// so the cost grows with the frontier width rather than with `2^c`.
pub fn bracket_sweep<C: Coefficient>(
    pd: &PDCode,
    order: &[usize],
    max_width: usize,
) -> Result<(Laurent<C>, SweepStats), InvariantError>
where
    for<'a> &'a C: Mul<&'a C, Output = C>,
{
    let c = pd.crossings.len();
    check_order(order, c)?;
    let delta = Laurent::<C>::delta();
    let mut stats = SweepStats::default();
    if c == 0 {
        let loops = pd.free_loops.max(1) as u32;
        return Ok((delta.pow(loops - 1), stats));
    }
    let (tuples, arcs) = dense_tuples(pd);
    // Frontier position of each open arc.
    let mut frontier: Vec<usize> = Vec::new();
    let mut pos_of: Vec<Option<usize>> = vec![None; arcs];
    let mut states: States<C> = HashMap::new();
    states.insert((Vec::new(), false), Laurent::<C>::one());
    stats.max_states = 1;

    for &x in order {
        let t = tuples[x];
        // Classify the arcs at this crossing.
        let mut new_arcs: Vec<usize> = Vec::new();
        let mut base: [Option<Link>; 4] = [None; 4];
        for p in 0..4 {
            let a = t[p];
            if let Some(q) = (0..4).find(|&q| q != p && t[q] == a) {
                base[p] = Some(Link::Slot(q));
            } else if pos_of[a].is_none() {
                base[p] = Some(Link::Open(new_arcs.len()));
                new_arcs.push(a);
            }
        }
        let removed: Vec<usize> = (0..4).filter(|&p| base[p].is_none()).map(|p| pos_of[t[p]].unwrap()).collect();
        // Layout of the next frontier: surviving old arcs keep their relative
        // order, new arcs go at the end.
        let mut remap = vec![usize::MAX; frontier.len()];
        let mut next_frontier = Vec::with_capacity(frontier.len() + new_arcs.len());
        for (i, &a) in frontier.iter().enumerate() {
            if !removed.contains(&i) {
                remap[i] = next_frontier.len();
                next_frontier.push(a);
            }
        }
        let first_new = next_frontier.len();
        next_frontier.extend(new_arcs.iter().copied());
        let width = next_frontier.len();
        stats.max_width = stats.max_width.max(width);
        if width > max_width {
            return Err(InvariantError::FrontierTooWide { width, cap: max_width });
        }
        if width > u8::MAX as usize {
            return Err(InvariantError::FrontierTooWide { width, cap: u8::MAX as usize });
        }
        let slot_of_pos = |i: usize| (0..4).find(|&p| base[p].is_none() && pos_of[t[p]] == Some(i));

        let mut next: States<C> = HashMap::with_capacity(states.len() * 2);
        for ((partner, closed), weight) in states {
            // Links of each slot outside the smoothing.
            let mut links = [Link::Open(0); 4];
            for p in 0..4 {
                links[p] = match base[p] {
                    Some(l) => l,
                    None => {
                        let j = partner[pos_of[t[p]].unwrap()] as usize;
                        match slot_of_pos(j) {
                            Some(q) => Link::Slot(q),
                            None => Link::Keep(j),
                        }
                    }
                };
            }
            for smoothing in 0..2 {
                let mate = |p: usize| if smoothing == 0 { p ^ 1 } else { 3 - p };
                let mut visited = [false; 4];
                let mut new_partner = vec![0u8; width];
                for (i, &j) in partner.iter().enumerate() {
                    if remap[i] != usize::MAX && remap[j as usize] != usize::MAX {
                        new_partner[remap[i]] = remap[j as usize] as u8;
                    }
                }
                let end_pos = |l: Link| match l {
                    Link::Keep(j) => remap[j],
                    Link::Open(k) => first_new + k,
                    Link::Slot(_) => unreachable!(),
                };
                // Paths between frontier ends.
                for start in 0..4 {
                    if visited[start] || matches!(links[start], Link::Slot(_)) {
                        continue;
                    }
                    let mut p = start;
                    loop {
                        visited[p] = true;
                        let q = mate(p);
                        visited[q] = true;
                        match links[q] {
                            Link::Slot(r) => p = r,
                            end => {
                                let (u, v) = (end_pos(links[start]), end_pos(end));
                                new_partner[u] = v as u8;
                                new_partner[v] = u as u8;
                                break;
                            }
                        }
                    }
                }
                // What is left are closed loops.
                let mut loops = 0u32;
                for start in 0..4 {
                    if visited[start] {
                        continue;
                    }
                    loops += 1;
                    let mut p = start;
                    while !visited[p] {
                        visited[p] = true;
                        let q = mate(p);
                        visited[q] = true;
                        p = match links[q] {
                            Link::Slot(r) => r,
                            _ => unreachable!(),
                        };
                    }
                }
                let mut w = weight.shift(if smoothing == 0 { 1 } else { -1 });
                let mut now_closed = closed;
                if loops > 0 {
                    let extra = if closed { loops } else { loops - 1 };
                    now_closed = true;
                    if extra > 0 {
                        w = &w * &delta.pow(extra);
                    }
                }
                let slot = next.entry((new_partner, now_closed)).or_insert_with(Laurent::<C>::zero);
                *slot = &*slot + &w;
            }
        }
        next.retain(|_, v| !v.is_zero());
        states = next;
        stats.max_states = stats.max_states.max(states.len());

        for &i in &removed {
            pos_of[frontier[i]] = None;
        }
        for (i, &a) in next_frontier.iter().enumerate() {
            pos_of[a] = Some(i);
        }
        frontier = next_frontier;
    }
    debug_assert!(frontier.is_empty());
    let mut out = Laurent::<C>::zero();
    for ((_, closed), w) in states {
        debug_assert!(closed);
        out = &out + &w;
    }
    if pd.free_loops > 0 {
        out = &out * &delta.pow(pd.free_loops as u32);
    }
    Ok((out, stats))
}

/// Crossing order that greedily keeps the frontier small: at each step take
/// the crossing whose processing leaves the fewest open arcs, preferring
/// crossings that touch the current frontier, then the lowest index.
pub fn greedy_order(pd: &PDCode) -> Vec<usize> {
    let (tuples, arcs) = dense_tuples(pd);
    let c = tuples.len();
    let mut seen = vec![0u8; arcs];
    let mut width = 0usize;
    let mut done = vec![false; c];
    let mut order = Vec::with_capacity(c);
    for _ in 0..c {
        let mut best: Option<(usize, usize, usize)> = None;
        for x in (0..c).filter(|&x| !done[x]) {
            let mut touched = 0;
            let mut delta_w: isize = 0;
            let t = tuples[x];
            for (p, &a) in t.iter().enumerate() {
                if seen[a] == 1 {
                    touched += 1;
                    delta_w -= 1;
                } else if t.iter().enumerate().any(|(q, &b)| q != p && b == a) {
                    // Kink arc, never opens.
                } else {
                    delta_w += 1;
                }
            }
            let w = (width as isize + delta_w) as usize;
            let key = (w, 4 - touched, x);
            if best.is_none_or(|b| key < b) {
                best = Some(key);
            }
        }
        let (w, _, x) = best.unwrap();
        done[x] = true;
        for &a in &tuples[x] {
            seen[a] += 1;
        }
        width = w;
        order.push(x);
    }
    order
}
