use pclink_word::Word;

use crate::shadow::check_selection;
use crate::{End, PDCode, Shadow, ShadowError};

/// A shadow with orientations and, at every crossing, the strand that
/// passes over.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PositiveDiagram {
    shadow: Shadow,
    word: Word,
    over: Vec<usize>,
}

/// Orient component `i` counterclockwise (listed direction) when `w[i] = 1`
/// and clockwise otherwise, then choose over/under so that every crossing is
/// positive.
///
/// Sign convention: a crossing is positive when, turning counterclockwise
/// from the outgoing over-strand, the next arc-end is the outgoing
/// under-strand (over strand heading north-east, under strand heading
/// north-west).
pub fn orient_positive(s: &Shadow, w: &Word) -> Result<PositiveDiagram, ShadowError> {
    if w.len() != s.n_components() {
        return Err(ShadowError::LengthMismatch { expected: s.n_components(), found: w.len() });
    }
    let over = s
        .crossings()
        .iter()
        .map(|cr| {
            let out0 = cr.position(oriented_out(0, w.get(cr.component(0))));
            let out1 = cr.position(oriented_out(1, w.get(cr.component(1))));
            if (out0 + 1) % 4 == out1 {
                0
            } else {
                1
            }
        })
        .collect();
    Ok(PositiveDiagram { shadow: s.clone(), word: w.clone(), over })
}

fn oriented_out(strand: usize, forward: bool) -> End {
    End { strand, out: forward }
}

impl PositiveDiagram {
    /// Assemble a diagram from explicit over strands; used when reading
    /// diagrams back. Fails if any crossing is negative.
    pub fn from_parts(shadow: Shadow, word: Word, over: Vec<usize>) -> Result<PositiveDiagram, ShadowError> {
        if word.len() != shadow.n_components() {
            return Err(ShadowError::LengthMismatch { expected: shadow.n_components(), found: word.len() });
        }
        if over.len() != shadow.crossing_count() || over.iter().any(|&o| o > 1) {
            return Err(ShadowError::Malformed("one over strand (0 or 1) per crossing is required".into()));
        }
        let d = PositiveDiagram { shadow, word, over };
        if let Some(x) = (0..d.over.len()).find(|&x| d.sign(x) < 0) {
            return Err(ShadowError::Malformed(format!("crossing {x} is negative")));
        }
        Ok(d)
    }

    pub fn shadow(&self) -> &Shadow {
        &self.shadow
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn n_components(&self) -> usize {
        self.shadow.n_components()
    }

    pub fn crossing_count(&self) -> usize {
        self.shadow.crossing_count()
    }

    /// Over strand (0 or 1) at each crossing.
    pub fn over_strands(&self) -> &[usize] {
        &self.over
    }

    /// Component passing over at crossing `x`.
    pub fn over_component(&self, x: usize) -> usize {
        self.shadow.crossing(x).component(self.over[x])
    }

    /// Whether component `c` is traversed in its listed direction.
    pub fn forward(&self, c: usize) -> bool {
        self.word.get(c)
    }

    pub fn sign(&self, x: usize) -> i64 {
        let cr = self.shadow.crossing(x);
        let o = self.over[x];
        let u = 1 - o;
        let po = cr.position(oriented_out(o, self.forward(cr.component(o))));
        let pu = cr.position(oriented_out(u, self.forward(cr.component(u))));
        if (po + 1) % 4 == pu {
            1
        } else {
            -1
        }
    }

    pub fn writhe(&self) -> i64 {
        (0..self.crossing_count()).map(|x| self.sign(x)).sum()
    }

    /// Diagram of the selected components (0-based, strictly increasing).
    pub fn sublink(&self, indices: &[usize]) -> Result<PositiveDiagram, ShadowError> {
        check_selection(indices, self.n_components())?;
        let shadow = self.shadow.restrict(indices)?;
        let word = self.word.restrict(indices).expect("selection is nonempty");
        orient_positive(&shadow, &word)
    }

    pub fn pd_code(&self) -> PDCode {
        PDCode::from_diagram(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{boot_shadow, flower_shadow, ring_shadow};

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn hopf_is_positive() {
        let d = orient_positive(&ring_shadow(2).unwrap(), &w("00")).unwrap();
        assert_eq!(d.writhe(), 2);
        assert_eq!(d.crossing_count(), 2);
    }

    #[test]
    fn length_mismatch() {
        let err = orient_positive(&ring_shadow(3).unwrap(), &w("00")).unwrap_err();
        assert_eq!(err, ShadowError::LengthMismatch { expected: 3, found: 2 });
    }

    #[test]
    fn negation_keeps_over_strands() {
        for s in [ring_shadow(5).unwrap(), boot_shadow(5).unwrap(), flower_shadow(6).unwrap()] {
            let n = s.n_components();
            for a in pclink_word::Word::all(n) {
                let d = orient_positive(&s, &a).unwrap();
                let e = orient_positive(&s, &a.negate()).unwrap();
                assert_eq!(d.over_strands(), e.over_strands());
            }
        }
    }

    #[test]
    fn single_flip_swaps_incident_crossings() {
        let s = boot_shadow(5).unwrap();
        for a in Word::all(5) {
            let d = orient_positive(&s, &a).unwrap();
            for i in 0..5 {
                let e = orient_positive(&s, &a.flip(i)).unwrap();
                let changed: Vec<usize> =
                    (0..s.crossing_count()).filter(|&x| d.over_strands()[x] != e.over_strands()[x]).collect();
                let incident: Vec<usize> = (0..s.crossing_count())
                    .filter(|&x| s.crossing(x).component(0) == i || s.crossing(x).component(1) == i)
                    .collect();
                assert_eq!(changed, incident);
                assert_eq!(changed.len(), 2 * 4);
            }
        }
    }

    #[test]
    fn sublinks() {
        let s = ring_shadow(5).unwrap();
        let d = orient_positive(&s, &w("00101")).unwrap();
        assert_eq!(d.sublink(&[0, 1, 2, 3, 4]).unwrap(), d);
        let one = d.sublink(&[2]).unwrap();
        assert_eq!(one.crossing_count(), 0);
        assert_eq!(one.writhe(), 0);
        let three = d.sublink(&[0, 2, 4]).unwrap();
        assert_eq!(three.crossing_count(), 6);
        assert_eq!(three.writhe(), 6);
        assert_eq!(three.word(), &w("011"));
        assert!(d.sublink(&[]).is_err());
        assert!(d.sublink(&[2, 1]).is_err());
        assert!(d.sublink(&[5]).is_err());
    }

    #[test]
    fn negative_crossings_are_rejected() {
        let s = ring_shadow(2).unwrap();
        let d = orient_positive(&s, &w("01")).unwrap();
        let flipped: Vec<usize> = d.over_strands().iter().map(|o| 1 - o).collect();
        assert!(PositiveDiagram::from_parts(s.clone(), w("01"), flipped).is_err());
        assert!(PositiveDiagram::from_parts(s, w("01"), d.over_strands().to_vec()).is_ok());
    }
}
