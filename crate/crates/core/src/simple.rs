//! Simple elements of the braid Garside structures, stored as permutations.
//!
//! Both built-in structures realise their simple elements as permutation
//! braids: a simple element is uniquely determined by its underlying
//! permutation once the structure is fixed. The permutation is stored in
//! "image" form, `img[i]` being the final position of the strand that starts
//! at position `i` (0-based).
//!
//! The braid product `s·t` (first `s`, then `t`) corresponds to the
//! permutation `i ↦ t[s[i]]`. All helpers below follow that convention; they
//! are only meaningful on the braid level when the result is known to be a
//! simple element of the structure in use.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

/// Largest supported strand count.
pub const MAX_STRANDS: usize = 32;

#[derive(Clone, Copy)]
pub struct Simple {
    n: u8,
    img: [u8; MAX_STRANDS],
}

impl Simple {
    pub fn identity(n: usize) -> Self {
        assert!(n <= MAX_STRANDS, "at most {MAX_STRANDS} strands are supported");
        let mut img = [0u8; MAX_STRANDS];
        for (i, slot) in img.iter_mut().enumerate().take(n) {
            *slot = i as u8;
        }
        Simple { n: n as u8, img }
    }

    /// Builds a simple from its image sequence. Panics if `images` is not a
    /// permutation of `0..images.len()`.
    pub fn from_images(images: &[u8]) -> Self {
        Self::try_from_images(images).expect("not a permutation")
    }

    pub fn try_from_images(images: &[u8]) -> Option<Self> {
        let n = images.len();
        if n > MAX_STRANDS {
            return None;
        }
        let mut seen = [false; MAX_STRANDS];
        let mut img = [0u8; MAX_STRANDS];
        for (i, &v) in images.iter().enumerate() {
            let v_us = v as usize;
            if v_us >= n || seen[v_us] {
                return None;
            }
            seen[v_us] = true;
            img[i] = v;
        }
        Some(Simple { n: n as u8, img })
    }

    #[inline]
    pub fn strands(&self) -> usize {
        self.n as usize
    }

    #[inline]
    pub fn images(&self) -> &[u8] {
        &self.img[..self.n as usize]
    }

    #[inline]
    pub(crate) fn images_mut(&mut self) -> &mut [u8] {
        &mut self.img[..self.n as usize]
    }

    #[inline]
    pub fn image(&self, i: usize) -> usize {
        self.img[i] as usize
    }

    pub fn is_identity_perm(&self) -> bool {
        self.images().iter().enumerate().all(|(i, &v)| i == v as usize)
    }

    /// Permutation of the braid product `self·other`.
    #[inline]
    pub fn then(&self, other: &Simple) -> Simple {
        debug_assert_eq!(self.n, other.n);
        let mut out = *self;
        for i in 0..self.n as usize {
            out.img[i] = other.img[self.img[i] as usize];
        }
        out
    }

    #[inline]
    pub fn inverse_perm(&self) -> Simple {
        let mut out = *self;
        for i in 0..self.n as usize {
            out.img[self.img[i] as usize] = i as u8;
        }
        out
    }

    /// Permutation of `self⁻¹·t`.
    #[inline]
    pub fn left_quotient(&self, t: &Simple) -> Simple {
        debug_assert_eq!(self.n, t.n);
        let mut out = *self;
        for i in 0..self.n as usize {
            out.img[self.img[i] as usize] = t.img[i];
        }
        out
    }

    /// Permutation of `self·s⁻¹`.
    #[inline]
    pub fn right_quotient(&self, s: &Simple) -> Simple {
        debug_assert_eq!(self.n, s.n);
        let inv = s.inverse_perm();
        let mut out = *self;
        for i in 0..self.n as usize {
            out.img[i] = inv.img[self.img[i] as usize];
        }
        out
    }

    /// Conjugates the permutation by `c`: `i ↦ c[self[c⁻¹[i]]]`.
    #[inline]
    pub fn relabel(&self, c: &Simple) -> Simple {
        let inv = c.inverse_perm();
        let mut out = *self;
        for i in 0..self.n as usize {
            out.img[i] = c.img[self.img[inv.img[i] as usize] as usize];
        }
        out
    }

    pub fn inversions(&self) -> usize {
        let p = self.images();
        let mut count = 0;
        for i in 0..p.len() {
            for j in i + 1..p.len() {
                if p[i] > p[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Number of cycles, fixed points included.
    pub fn cycle_count(&self) -> usize {
        let n = self.n as usize;
        let mut seen = [false; MAX_STRANDS];
        let mut cycles = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.img[i] as usize;
            }
        }
        cycles
    }
}

impl PartialEq for Simple {
    fn eq(&self, other: &Self) -> bool {
        self.images() == other.images()
    }
}

impl Eq for Simple {}

impl Hash for Simple {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.images().hash(state);
    }
}

impl PartialOrd for Simple {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Simple {
    fn cmp(&self, other: &Self) -> Ordering {
        self.images().cmp(other.images())
    }
}

impl fmt::Debug for Simple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.images().iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}", v + 1)?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quotients_invert_products() {
        let s = Simple::from_images(&[2, 0, 1, 3]);
        let t = Simple::from_images(&[1, 3, 0, 2]);
        let st = s.then(&t);
        assert_eq!(s.left_quotient(&st), t);
        assert_eq!(st.right_quotient(&t), s);
        assert!(s.then(&s.inverse_perm()).is_identity_perm());
    }

    #[test]
    fn counts() {
        let s = Simple::from_images(&[3, 2, 1, 0]);
        assert_eq!(s.inversions(), 6);
        assert_eq!(s.cycle_count(), 2);
        assert_eq!(Simple::identity(5).cycle_count(), 5);
    }

    #[test]
    fn rejects_non_permutations() {
        assert!(Simple::try_from_images(&[0, 0, 1]).is_none());
        assert!(Simple::try_from_images(&[0, 3, 1]).is_none());
    }
}
