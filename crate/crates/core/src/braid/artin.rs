//! The classical Garside structure on B_N: atoms σ₁..σ_{N−1}, Δ the
//! half-twist. Simple elements are the positive permutation braids, one per
//! permutation of the strands.

use crate::error::{Error, Result};
use crate::garside::{GarsideStructure, StructureKind};
use crate::simple::{Simple, MAX_STRANDS};

#[derive(Debug, Clone)]
pub struct ArtinStructure {
    n: usize,
    delta: Simple,
}

impl ArtinStructure {
    pub fn new(n: usize) -> Result<Self> {
        if !(2..=MAX_STRANDS).contains(&n) {
            return Err(Error::BadParameter(format!(
                "strand count must be in 2..={MAX_STRANDS}, got {n}"
            )));
        }
        let images: Vec<u8> = (0..n).rev().map(|i| i as u8).collect();
        Ok(ArtinStructure { n, delta: Simple::from_images(&images) })
    }

    /// σ_{i+1} as a permutation (0-based `i`).
    fn sigma(&self, i: usize) -> Simple {
        let mut s = Simple::identity(self.n);
        s.images_mut().swap(i, i + 1);
        s
    }
}

impl GarsideStructure for ArtinStructure {
    fn kind(&self) -> StructureKind {
        StructureKind::Artin
    }

    fn strands(&self) -> usize {
        self.n
    }

    fn n_atoms(&self) -> usize {
        self.n - 1
    }

    fn atom(&self, i: usize) -> Simple {
        assert!(i < self.n - 1);
        self.sigma(i)
    }

    fn delta(&self) -> Simple {
        self.delta
    }

    fn delta_atom_length(&self) -> usize {
        self.n * (self.n - 1) / 2
    }

    fn tau_order(&self) -> usize {
        if self.n == 2 {
            1
        } else {
            2
        }
    }

    fn atom_length(&self, s: &Simple) -> usize {
        s.inversions()
    }

    fn is_simple(&self, p: &Simple) -> bool {
        p.strands() == self.n
    }

    // s ≼ t iff every crossing of s (indexed by starting positions) is a
    // crossing of t.
    fn left_divides(&self, s: &Simple, t: &Simple) -> bool {
        let (s, t) = (s.images(), t.images());
        for i in 0..s.len() {
            for j in i + 1..s.len() {
                if s[i] > s[j] && t[i] < t[j] {
                    return false;
                }
            }
        }
        true
    }

    // Reversing a positive permutation braid inverts its permutation.
    fn right_divides(&self, t: &Simple, s: &Simple) -> bool {
        self.left_divides(&s.inverse_perm(), &t.inverse_perm())
    }

    fn atom_left_divides(&self, i: usize, s: &Simple) -> bool {
        s.image(i) > s.image(i + 1)
    }

    fn atom_right_divides(&self, i: usize, s: &Simple) -> bool {
        let inv = s.inverse_perm();
        inv.image(i) > inv.image(i + 1)
    }

    fn simple_product_if_simple(&self, s: &Simple, t: &Simple) -> Option<Simple> {
        let p = s.then(t);
        (p.inversions() == s.inversions() + t.inversions()).then_some(p)
    }

    // Peel common first crossings off both remainders.
    fn left_meet(&self, s: &Simple, t: &Simple) -> Simple {
        let mut u = *s;
        let mut v = *t;
        // Inverse of the meet built so far.
        let mut minv = Simple::identity(self.n);
        let mut i = 0;
        while i + 1 < self.n {
            let (ui, vi) = (u.images(), v.images());
            if ui[i] > ui[i + 1] && vi[i] > vi[i + 1] {
                u.images_mut().swap(i, i + 1);
                v.images_mut().swap(i, i + 1);
                minv.images_mut().swap(i, i + 1);
                i = i.saturating_sub(1);
            } else {
                i += 1;
            }
        }
        minv.inverse_perm()
    }

    fn right_meet(&self, s: &Simple, t: &Simple) -> Simple {
        self.left_meet(&s.inverse_perm(), &t.inverse_perm()).inverse_perm()
    }

    fn tau(&self, s: &Simple, k: i64) -> Simple {
        if k.rem_euclid(2) == 0 {
            return *s;
        }
        let n = self.n;
        let mut out = *s;
        for (i, slot) in out.images_mut().iter_mut().enumerate() {
            *slot = (n - 1 - s.image(n - 1 - i)) as u8;
        }
        out
    }

    fn encode_into(&self, s: &Simple, out: &mut Vec<u8>) {
        out.extend_from_slice(s.images());
    }

    fn decode(&self, bytes: &[u8]) -> Option<Simple> {
        if bytes.len() != self.n {
            return None;
        }
        Simple::try_from_images(bytes)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::garside::generic;

    #[test]
    fn delta_is_the_half_twist() {
        let g = ArtinStructure::new(3).unwrap();
        let s1 = g.atom(0);
        let s2 = g.atom(1);
        assert_eq!(s1.then(&s2).then(&s1), g.delta());
        assert_eq!(s2.then(&s1).then(&s2), g.delta());
        assert_eq!(g.atom_length(&g.delta()), 3);
    }

    #[test]
    fn fast_meet_matches_generic() {
        let g = ArtinStructure::new(4).unwrap();
        let all = crate::braid::enumerate_simples(&g).unwrap();
        for s in &all {
            for t in &all {
                assert_eq!(g.left_meet(s, t), generic::left_meet(&g, s, t));
                assert_eq!(g.right_meet(s, t), generic::right_meet(&g, s, t));
            }
        }
    }

    #[test]
    fn tau_reverses_indices() {
        let g = ArtinStructure::new(4).unwrap();
        assert_eq!(g.tau(&g.atom(0), 1), g.atom(2));
        assert_eq!(g.tau(&g.atom(1), 1), g.atom(1));
    }

    #[test]
    fn rejects_bad_strand_counts() {
        assert!(ArtinStructure::new(1).is_err());
        assert!(ArtinStructure::new(MAX_STRANDS + 1).is_err());
    }
}
