//! The Birman–Ko–Lee (dual) structure on B_N.
//!
//! Atoms are the band generators a_{ts}, N ≥ t > s ≥ 1, and the Garside
//! element is δ = a_{N,N−1}⋯a_{21}, whose permutation is the cycle i ↦ i+1.
//! Simple elements correspond to noncrossing partitions of {1..N}; each is
//! stored as the permutation sending every element of a block to the next
//! larger element of the same block (and the largest back to the smallest).
//! Left and right divisibility both coincide with refinement of partitions.

use crate::error::{Error, Result};
use crate::garside::{GarsideStructure, StructureKind};
use crate::simple::{Simple, MAX_STRANDS};

#[derive(Debug, Clone)]
pub struct BklStructure {
    n: usize,
    delta: Simple,
    /// 0-based (t, s) pairs, ordered lexicographically.
    bands: Vec<(u8, u8)>,
}

const NONE: u8 = u8::MAX;

impl BklStructure {
    pub fn new(n: usize) -> Result<Self> {
        if !(2..=MAX_STRANDS).contains(&n) {
            return Err(Error::BadParameter(format!(
                "strand count must be in 2..={MAX_STRANDS}, got {n}"
            )));
        }
        let images: Vec<u8> = (0..n).map(|i| ((i + 1) % n) as u8).collect();
        let mut bands = Vec::with_capacity(n * (n - 1) / 2);
        for t in 1..n {
            for s in 0..t {
                bands.push((t as u8, s as u8));
            }
        }
        Ok(BklStructure { n, delta: Simple::from_images(&images), bands })
    }

    /// 0-based atom index of a_{ts} for 1-based `t > s`.
    pub fn band_index(&self, t: usize, s: usize) -> Option<usize> {
        if !(1 <= s && s < t && t <= self.n) {
            return None;
        }
        let (t0, s0) = (t - 1, s - 1);
        Some(t0 * (t0 - 1) / 2 + s0)
    }

    /// 1-based (t, s) of atom `i`.
    pub fn band(&self, i: usize) -> (usize, usize) {
        let (t, s) = self.bands[i];
        (t as usize + 1, s as usize + 1)
    }

    /// Block-minimum label of every point.
    pub fn labels(&self, s: &Simple) -> [u8; MAX_STRANDS] {
        let mut lab = [NONE; MAX_STRANDS];
        for start in 0..self.n {
            if lab[start] != NONE {
                continue;
            }
            let mut i = start;
            while lab[i] == NONE {
                lab[i] = start as u8;
                i = s.image(i);
            }
        }
        lab
    }

    /// Builds the simple whose blocks are given by `key` (points with equal
    /// keys share a block); keys must be below N.
    fn from_keys(&self, key: impl Fn(usize) -> usize) -> Simple {
        let mut first = [NONE; MAX_STRANDS];
        let mut last = [NONE; MAX_STRANDS];
        let mut out = Simple::identity(self.n);
        {
            let img = out.images_mut();
            for i in 0..self.n {
                let k = key(i);
                if last[k] == NONE {
                    first[k] = i as u8;
                } else {
                    img[last[k] as usize] = i as u8;
                }
                last[k] = i as u8;
            }
            for i in 0..self.n {
                let k = key(i);
                if first[k] as usize == i {
                    img[last[k] as usize] = first[k];
                }
            }
        }
        out
    }

    fn same_block(&self, s: &Simple, a: usize, b: usize) -> bool {
        let mut i = s.image(a);
        while i != a {
            if i == b {
                return true;
            }
            i = s.image(i);
        }
        a == b
    }
}

impl GarsideStructure for BklStructure {
    fn kind(&self) -> StructureKind {
        StructureKind::Bkl
    }

    fn strands(&self) -> usize {
        self.n
    }

    fn n_atoms(&self) -> usize {
        self.bands.len()
    }

    fn atom(&self, i: usize) -> Simple {
        let (t, s) = self.bands[i];
        let mut p = Simple::identity(self.n);
        p.images_mut().swap(t as usize, s as usize);
        p
    }

    fn delta(&self) -> Simple {
        self.delta
    }

    fn delta_atom_length(&self) -> usize {
        self.n - 1
    }

    fn tau_order(&self) -> usize {
        if self.n == 2 {
            1
        } else {
            self.n
        }
    }

    fn atom_length(&self, s: &Simple) -> usize {
        self.n - s.cycle_count()
    }

    fn is_simple(&self, p: &Simple) -> bool {
        if p.strands() != self.n {
            return false;
        }
        let lab = self.labels(p);
        // Each cycle must climb from its minimum and wrap once.
        for i in 0..self.n {
            let j = p.image(i);
            let is_max = j == lab[i] as usize;
            if !is_max && j <= i {
                return false;
            }
        }
        let mut last = [0u8; MAX_STRANDS];
        for i in 0..self.n {
            last[lab[i] as usize] = i as u8;
        }
        let mut stack: Vec<u8> = Vec::with_capacity(self.n);
        for i in 0..self.n {
            let b = lab[i];
            if b as usize == i {
                stack.push(b);
            } else if stack.last() != Some(&b) {
                return false;
            }
            if last[b as usize] as usize == i {
                stack.pop();
            }
        }
        true
    }

    fn left_divides(&self, s: &Simple, t: &Simple) -> bool {
        let lt = self.labels(t);
        (0..self.n).all(|i| lt[s.image(i)] == lt[i])
    }

    fn right_divides(&self, t: &Simple, s: &Simple) -> bool {
        self.left_divides(s, t)
    }

    fn atom_left_divides(&self, i: usize, s: &Simple) -> bool {
        let (t, u) = self.bands[i];
        self.same_block(s, t as usize, u as usize)
    }

    fn atom_right_divides(&self, i: usize, s: &Simple) -> bool {
        self.atom_left_divides(i, s)
    }

    fn left_meet(&self, s: &Simple, t: &Simple) -> Simple {
        let lt = self.labels(t);
        let mut min = [NONE; MAX_STRANDS];
        let mut out = Simple::identity(self.n);
        let img = out.images_mut();
        for i in 0..self.n {
            if min[i] == NONE {
                min[i] = i as u8;
            }
            // The next point of the meet block is the next point of the
            // s-block that also shares the t-block.
            img[i] = min[i];
            let mut j = s.image(i);
            while j > i {
                if lt[j] == lt[i] {
                    img[i] = j as u8;
                    min[j] = min[i];
                    break;
                }
                j = s.image(j);
            }
        }
        out
    }

    fn right_meet(&self, s: &Simple, t: &Simple) -> Simple {
        self.left_meet(s, t)
    }

    fn tau(&self, s: &Simple, k: i64) -> Simple {
        let n = self.n as i64;
        let k = k.rem_euclid(n) as usize;
        if k == 0 {
            return *s;
        }
        let mut out = *s;
        for (i, slot) in out.images_mut().iter_mut().enumerate() {
            let src = (i + self.n - k) % self.n;
            *slot = ((s.image(src) + k) % self.n) as u8;
        }
        out
    }

    fn encode_into(&self, s: &Simple, out: &mut Vec<u8>) {
        let lab = self.labels(s);
        out.extend_from_slice(&lab[..self.n]);
    }

    fn decode(&self, bytes: &[u8]) -> Option<Simple> {
        if bytes.len() != self.n {
            return None;
        }
        for (i, &b) in bytes.iter().enumerate() {
            if b as usize > i || bytes[b as usize] != b {
                return None;
            }
        }
        let s = self.from_keys(|i| bytes[i] as usize);
        self.is_simple(&s).then_some(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::garside::generic;

    #[test]
    fn delta_is_product_of_consecutive_bands() {
        let g = BklStructure::new(4).unwrap();
        // δ = a_{43} a_{32} a_{21}
        let a43 = g.atom(g.band_index(4, 3).unwrap());
        let a32 = g.atom(g.band_index(3, 2).unwrap());
        let a21 = g.atom(g.band_index(2, 1).unwrap());
        assert_eq!(a43.then(&a32).then(&a21), g.delta());
        assert!(g.is_simple(&g.delta()));
        assert_eq!(g.atom_length(&g.delta()), 3);
    }

    #[test]
    fn crossing_partition_is_not_simple() {
        let g = BklStructure::new(4).unwrap();
        // blocks {1,3} and {2,4}
        assert!(!g.is_simple(&Simple::from_images(&[2, 3, 0, 1])));
        // descending 3-cycle
        assert!(!g.is_simple(&Simple::from_images(&[2, 0, 1, 3])));
        assert!(g.is_simple(&Simple::from_images(&[1, 2, 0, 3])));
    }

    #[test]
    fn fast_meet_matches_generic() {
        let g = BklStructure::new(5).unwrap();
        let all = crate::braid::enumerate_simples(&g).unwrap();
        for s in &all {
            for t in &all {
                assert_eq!(g.left_meet(s, t), generic::left_meet(&g, s, t));
                assert_eq!(g.right_meet(s, t), generic::right_meet(&g, s, t));
            }
        }
    }

    #[test]
    fn encode_decode() {
        let g = BklStructure::new(6).unwrap();
        for s in crate::braid::enumerate_simples(&g).unwrap() {
            assert_eq!(g.decode(&g.encode(&s)), Some(s));
        }
        assert_eq!(g.decode(&[0, 1, 0, 1, 4, 5]), None);
    }

    #[test]
    fn band_indices_round_trip() {
        let g = BklStructure::new(5).unwrap();
        for i in 0..g.n_atoms() {
            let (t, s) = g.band(i);
            assert_eq!(g.band_index(t, s), Some(i));
        }
        assert_eq!(g.band_index(2, 2), None);
        assert_eq!(g.band_index(6, 1), None);
    }
}
