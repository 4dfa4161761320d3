#![allow(dead_code)]

use rand::Rng;
use scp_core::braid::sigma_atom;
use scp_core::{Element, GarsideStructure, Simple, StructureKind};

/// Reduced word in the free group on x_1..x_N (signed 1-based letters).
pub type FreeWord = Vec<i32>;

fn push_reduced(w: &mut FreeWord, l: i32) {
    if w.last() == Some(&-l) {
        w.pop();
    } else {
        w.push(l);
    }
}

fn invert(w: &[i32]) -> FreeWord {
    w.iter().rev().map(|l| -l).collect()
}

/// Action of a braid on the free group, by images of the generators.
/// Faithful, so equal images mean equal braids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeAction {
    images: Vec<FreeWord>,
}

impl FreeAction {
    pub fn identity(n: usize) -> Self {
        FreeAction { images: (1..=n as i32).map(|i| vec![i]).collect() }
    }

    /// Images of x_i, x_{i+1} under σ_i^{±1}.
    fn sigma_images(i: i32, positive: bool) -> (FreeWord, FreeWord) {
        if positive {
            (vec![i, i + 1, -i], vec![i])
        } else {
            (vec![i + 1], vec![-(i + 1), i, i + 1])
        }
    }

    /// Post-composes with σ_i^{±1} (1-based `i`).
    pub fn apply_sigma(&mut self, letter: i64) {
        let i = letter.unsigned_abs() as i32;
        let (xi, xj) = Self::sigma_images(i, letter > 0);
        for img in &mut self.images {
            let mut out = Vec::with_capacity(img.len() + 4);
            for &l in img.iter() {
                let sub: FreeWord = match l.abs() {
                    a if a == i => xi.clone(),
                    a if a == i + 1 => xj.clone(),
                    a => vec![a],
                };
                let sub = if l < 0 { invert(&sub) } else { sub };
                for s in sub {
                    push_reduced(&mut out, s);
                }
            }
            *img = out;
        }
    }

    pub fn of_sigma_word(n: usize, word: &[i64]) -> Self {
        let mut a = FreeAction::identity(n);
        for &l in word {
            a.apply_sigma(l);
        }
        a
    }

    pub fn total_length(&self) -> usize {
        self.images.iter().map(Vec::len).sum()
    }
}

/// σ-word of a band generator a_{ts}: σ_{t−1}⋯σ_{s+1}·σ_s·σ_{s+1}⁻¹⋯σ_{t−1}⁻¹.
pub fn band_sigma_word(t: usize, s: usize) -> Vec<i64> {
    let mut w: Vec<i64> = ((s + 1)..t).rev().map(|k| k as i64).collect();
    w.push(s as i64);
    w.extend(((s + 1)..t).map(|k| -(k as i64)));
    w
}

/// σ-word of a signed word in the structure's atoms.
pub fn atoms_to_sigma(g: &dyn GarsideStructure, word: &[i64]) -> Vec<i64> {
    let bands: Vec<(usize, usize)> = match g.kind() {
        StructureKind::Artin => return word.to_vec(),
        StructureKind::Bkl => {
            let n = g.strands();
            let mut v = vec![(0, 0); g.n_atoms()];
            for t in 2..=n {
                for s in 1..t {
                    let idx = (t - 1) * (t - 2) / 2 + (s - 1);
                    v[idx] = (t, s);
                }
            }
            v
        }
    };
    let mut out = Vec::new();
    for &l in word {
        let (t, s) = bands[l.unsigned_abs() as usize - 1];
        let w = band_sigma_word(t, s);
        if l > 0 {
            out.extend(w);
        } else {
            out.extend(w.iter().rev().map(|x| -x));
        }
    }
    out
}

/// Free-group action of an element, via its normal-form word.
pub fn action_of(g: &dyn GarsideStructure, e: &Element) -> FreeAction {
    FreeAction::of_sigma_word(g.strands(), &atoms_to_sigma(g, &e.to_word(g)))
}

/// Random signed σ-word.
pub fn random_sigma_word<R: Rng>(n: usize, len: usize, rng: &mut R) -> Vec<i64> {
    (0..len)
        .map(|_| {
            let i = rng.gen_range(1..n) as i64;
            if rng.gen_bool(0.5) {
                i
            } else {
                -i
            }
        })
        .collect()
}

/// Atom word of a σ-word in the given structure.
pub fn sigma_to_atoms(g: &dyn GarsideStructure, word: &[i64]) -> Vec<i64> {
    word.iter()
        .map(|&l| {
            let a = sigma_atom(g, l.unsigned_abs() as usize).unwrap() as i64 + 1;
            if l > 0 {
                a
            } else {
                -a
            }
        })
        .collect()
}

/// Atom length of a simple, independent of the structure's divisibility code:
/// inversions (Artin) or N − #cycles (BKL).
pub fn simple_length(g: &dyn GarsideStructure, s: &Simple) -> usize {
    let n = g.strands();
    let img = s.images();
    match g.kind() {
        StructureKind::Artin => {
            let mut c = 0;
            for i in 0..n {
                for j in i + 1..n {
                    if img[i] > img[j] {
                        c += 1;
                    }
                }
            }
            c
        }
        StructureKind::Bkl => {
            let mut seen = vec![false; n];
            let mut cycles = 0;
            for i in 0..n {
                if !seen[i] {
                    cycles += 1;
                    let mut j = i;
                    while !seen[j] {
                        seen[j] = true;
                        j = img[j] as usize;
                    }
                }
            }
            n - cycles
        }
    }
}

/// `s ≼ t` over an enumerated simple set: s⁻¹t is simple and lengths add.
pub fn brute_left_divides(g: &dyn GarsideStructure, all: &[Simple], s: &Simple, t: &Simple) -> bool {
    let q = s.left_quotient(t);
    all.contains(&q) && simple_length(g, s) + simple_length(g, &q) == simple_length(g, t)
}

/// `t ≽ s`: t·s⁻¹ is simple and lengths add.
pub fn brute_right_divides(g: &dyn GarsideStructure, all: &[Simple], t: &Simple, s: &Simple) -> bool {
    let q = t.right_quotient(s);
    all.contains(&q) && simple_length(g, &q) + simple_length(g, s) == simple_length(g, t)
}

/// The unique element of `cands` that every other one relates to via `le`.
pub fn extremum<F: Fn(&Simple, &Simple) -> bool>(cands: &[Simple], le: F) -> Simple {
    let top: Vec<&Simple> = cands.iter().filter(|c| cands.iter().all(|d| le(d, c))).collect();
    assert_eq!(top.len(), 1, "lattice extremum must be unique");
    *top[0]
}
