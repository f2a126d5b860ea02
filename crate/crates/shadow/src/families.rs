//! Generators for the three unavoidable arrangement families.
//!
//! Each arrangement is described as a cylindrical wiring: seen from a point
//! inside every pseudocircle, each curve is a radial graph over the angle,
//! and sweeping the angle counterclockwise the curves exchange radial
//! positions one adjacent pair at a time. A swap between radial positions
//! `l` (inner) and `l + 1` (outer) is a crossing where the inner curve moves
//! outward. Every pair swaps exactly twice and the final radial order equals
//! the initial one.

use crate::{Family, Shadow, ShadowError};

/// A sweep description of an arrangement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Wiring {
    /// Component labels (0-based) by radial position, innermost first, at the
    /// start of the sweep.
    pub start: Vec<usize>,
    /// The crossings in sweep order, as pairs of components that must be
    /// radially adjacent when they swap.
    pub swaps: Vec<(usize, usize)>,
}

impl Wiring {
    pub fn n(&self) -> usize {
        self.start.len()
    }

    /// Radial levels of the swaps (`l` exchanges positions `l` and `l+1`).
    pub fn levels(&self) -> Result<Vec<usize>, ShadowError> {
        let mut pos = self.start.clone();
        let mut out = Vec::with_capacity(self.swaps.len());
        for &(a, b) in &self.swaps {
            let pa = pos.iter().position(|&c| c == a).ok_or_else(|| unknown(a))?;
            let pb = pos.iter().position(|&c| c == b).ok_or_else(|| unknown(b))?;
            if pa.abs_diff(pb) != 1 {
                return Err(ShadowError::BadWiring(format!("components {} and {} are not adjacent", a + 1, b + 1)));
            }
            out.push(pa.min(pb));
            pos.swap(pa, pb);
        }
        if pos != self.start {
            return Err(ShadowError::BadWiring("the sweep does not return to the starting order".into()));
        }
        Ok(out)
    }

    /// Build the shadow; crossing `k` is the `k`-th swap and every component
    /// is listed counterclockwise.
    pub fn to_shadow(&self, family: Family) -> Result<Shadow, ShadowError> {
        let n = self.n();
        let levels = self.levels()?;
        let mut pos = self.start.clone();
        let mut components = vec![Vec::new(); n];
        let mut rotations = Vec::with_capacity(levels.len());
        for (x, &l) in levels.iter().enumerate() {
            let (inner, outer) = (pos[l], pos[l + 1]);
            components[inner].push(x);
            components[outer].push(x);
            // Inner curve heads out (tangent + radial), outer curve heads in;
            // counterclockwise around the crossing: inner-out, outer-out,
            // inner-in, outer-in.
            rotations.push([(inner, true), (outer, true), (inner, false), (outer, false)]);
            pos.swap(l, l + 1);
        }
        Shadow::from_parts(family, components, rotations)
    }
}

fn unknown(c: usize) -> ShadowError {
    ShadowError::BadWiring(format!("unknown component {}", c + 1))
}

fn check_n(n: usize) -> Result<(), ShadowError> {
    if n < 1 {
        Err(ShadowError::TooSmall(n))
    } else {
        Ok(())
    }
}

/// `n` congruent circles with centres on a line, labelled left to right.
///
/// With the sweep starting at the far left the radial order, outermost
/// first, is `1, ..., n`. Pair `(i, j)` meets at abscissa `(x_i + x_j)/2`, so
/// each half of the sweep meets the pairs by the sum `i + j`, increasing on
/// the way right and decreasing on the way back.
pub fn ring_wiring(n: usize) -> Wiring {
    let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    pairs.sort_by_key(|&(i, j)| (i + j, i));
    let mut swaps = pairs.clone();
    pairs.sort_by_key(|&(i, j)| (std::cmp::Reverse(i + j), i));
    swaps.extend(pairs);
    Wiring { start: (0..n).rev().collect(), swaps }
}

/// Nested curves, `1` outermost, where curve `j` carries a single spike that
/// pierces outward through curves `j-1, ..., 1` and returns. The spikes
/// appear around the sweep in label order.
pub fn boot_wiring(n: usize) -> Wiring {
    let mut swaps = Vec::with_capacity(n * n.saturating_sub(1));
    for j in 1..n {
        swaps.extend((0..j).rev().map(|i| (j, i)));
        swaps.extend((0..j).map(|i| (j, i)));
    }
    Wiring { start: (0..n).rev().collect(), swaps }
}

/// `n` congruent circles whose centres sit on a smaller concentric circle at
/// angles `π/2 - π/n - 2π(k-1)/n`, so label 1 is the topmost right circle and
/// labels increase clockwise. Seen from the common centre, circles `i` and
/// `j` are equidistant exactly at the bisecting angles
/// `(θ_i + θ_j)/2` and `(θ_i + θ_j)/2 + π`.
pub fn flower_wiring(n: usize) -> Wiring {
    // Angles in units of π/(2n): θ_k = n - 2 - 4k for 0-based k.
    let units = 4 * n as i64;
    let theta = |k: usize| n as i64 - 2 - 4 * k as i64;
    let norm = |a: i64| a.rem_euclid(units);
    let mut events = Vec::with_capacity(n * n.saturating_sub(1));
    for i in 0..n {
        for j in i + 1..n {
            let mid = (theta(i) + theta(j)) / 2;
            for off in [0, units / 2] {
                let a = norm(mid + off);
                // The sweep starts just after angle 0.
                let key = if a == 0 { units } else { a };
                events.push((key, i, j));
            }
        }
    }
    events.sort();
    let start_angle = 1e-3 * std::f64::consts::PI / (2.0 * n as f64);
    let radial = |k: usize| (start_angle - theta(k) as f64 * std::f64::consts::PI / (2.0 * n as f64)).cos();
    let mut start: Vec<usize> = (0..n).collect();
    start.sort_by(|&a, &b| radial(a).total_cmp(&radial(b)));
    Wiring { start, swaps: events.into_iter().map(|(_, i, j)| (i, j)).collect() }
}

pub fn ring_shadow(n: usize) -> Result<Shadow, ShadowError> {
    check_n(n)?;
    ring_wiring(n).to_shadow(Family::Ring)
}

pub fn boot_shadow(n: usize) -> Result<Shadow, ShadowError> {
    check_n(n)?;
    boot_wiring(n).to_shadow(Family::Boot)
}

/// Flower shadow for even `n` (and `n = 1`); odd sizes need
/// [`flower_shadow_experimental`].
pub fn flower_shadow(n: usize) -> Result<Shadow, ShadowError> {
    check_n(n)?;
    if n % 2 == 1 && n > 1 {
        return Err(ShadowError::OddFlower(n));
    }
    flower_wiring(n).to_shadow(Family::Flower)
}

/// Flower shadow of any size, odd sizes included.
pub fn flower_shadow_experimental(n: usize) -> Result<Shadow, ShadowError> {
    check_n(n)?;
    flower_wiring(n).to_shadow(Family::Flower)
}

/// Shadow of a built-in family; `allow_odd_flower` enables odd flowers.
pub fn family_shadow(family: Family, n: usize, allow_odd_flower: bool) -> Result<Shadow, ShadowError> {
    match family {
        Family::Ring => ring_shadow(n),
        Family::Boot => boot_shadow(n),
        Family::Flower if allow_odd_flower => flower_shadow_experimental(n),
        Family::Flower => flower_shadow(n),
        Family::Custom => Err(ShadowError::CustomNeedsInput),
    }
}
