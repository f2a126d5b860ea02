use crate::Shadow;

/// Code of the rooted map obtained by breadth-first numbering of darts from
/// `root`, following arcs and the rotation (reversed when `mirror`).
fn rooted_code(s: &Shadow, root: (usize, usize), mirror: bool, labeled: bool) -> Vec<usize> {
    let c = s.crossing_count();
    let mut number = vec![[usize::MAX; 4]; c];
    let mut order = Vec::with_capacity(4 * c);
    number[root.0][root.1] = 0;
    order.push(root);
    let mut head = 0;
    let mut code = Vec::with_capacity(12 * c);
    while head < order.len() {
        let (x, p) = order[head];
        head += 1;
        let step = if mirror { 3 } else { 1 };
        let rot = (x, (p + step) % 4);
        let alpha = s.alpha(x, p);
        for d in [rot, alpha] {
            if number[d.0][d.1] == usize::MAX {
                number[d.0][d.1] = order.len();
                order.push(d);
            }
            code.push(number[d.0][d.1]);
        }
        if labeled {
            let cr = s.crossing(x);
            code.push(cr.component(cr.rotation[p].strand));
        }
    }
    code
}

fn canonical(s: &Shadow, mirror_allowed: bool, labeled: bool) -> Vec<usize> {
    let mut best: Option<Vec<usize>> = None;
    for x in 0..s.crossing_count() {
        for p in 0..4 {
            for mirror in [false, true] {
                if mirror && !mirror_allowed {
                    continue;
                }
                let code = rooted_code(s, (x, p), mirror, labeled);
                if best.as_ref().is_none_or(|b| code < *b) {
                    best = Some(code);
                }
            }
        }
    }
    best.unwrap_or_default()
}

fn comparable(a: &Shadow, b: &Shadow) -> bool {
    let shape = |s: &Shadow| {
        let mut lens: Vec<usize> = s.components().iter().map(|c| c.len()).collect();
        lens.sort_unstable();
        lens
    };
    a.n_components() == b.n_components() && a.crossing_count() == b.crossing_count() && shape(a) == shape(b)
}

/// Whether the two shadows are isomorphic as sphere maps, ignoring component
/// labels and traversal directions. Both must be connected.
pub fn isomorphic(a: &Shadow, b: &Shadow, mirror_allowed: bool) -> bool {
    comparable(a, b) && canonical(a, mirror_allowed, false) == canonical(b, mirror_allowed, false)
}

/// Like [`isomorphic`] but the map must send component `i` to component `i`.
pub fn isomorphic_labeled(a: &Shadow, b: &Shadow, mirror_allowed: bool) -> bool {
    comparable(a, b) && canonical(a, mirror_allowed, true) == canonical(b, mirror_allowed, true)
}
