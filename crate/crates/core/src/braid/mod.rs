//! The two built-in Garside structures on the braid group B_N.

mod artin;
mod bkl;

use std::collections::{BTreeSet, VecDeque};
use std::sync::Arc;

pub use artin::ArtinStructure;
pub use bkl::BklStructure;

use crate::error::{Error, Result};
use crate::garside::{GarsideStructure, StructureKind};
use crate::simple::Simple;

/// Enumeration refuses to go past this many simples.
pub const ENUMERATION_LIMIT: u128 = 1_000_000;

pub fn artin_structure(n: usize) -> Result<Arc<dyn GarsideStructure>> {
    Ok(Arc::new(ArtinStructure::new(n)?))
}

pub fn bkl_structure(n: usize) -> Result<Arc<dyn GarsideStructure>> {
    Ok(Arc::new(BklStructure::new(n)?))
}

pub fn structure(kind: StructureKind, n: usize) -> Result<Arc<dyn GarsideStructure>> {
    match kind {
        StructureKind::Artin => artin_structure(n),
        StructureKind::Bkl => bkl_structure(n),
    }
}

/// |Div(Δ)|: N! for Artin, Catalan(N) for BKL. Saturates at `u128::MAX`.
pub fn predicted_simple_count(kind: StructureKind, n: usize) -> u128 {
    match kind {
        StructureKind::Artin => (1..=n as u128).try_fold(1u128, |acc, k| acc.checked_mul(k)).unwrap_or(u128::MAX),
        StructureKind::Bkl => {
            // C_{k+1} = C_k · 2(2k+1)/(k+2)
            let mut c: u128 = 1;
            for k in 0..n as u128 {
                c = match c.checked_mul(2 * (2 * k + 1)) {
                    Some(v) => v / (k + 2),
                    None => return u128::MAX,
                };
            }
            c
        }
    }
}

/// All simple elements, as the closure of the atoms under `\` and `∨`.
/// Intended as a test oracle for small N.
pub fn enumerate_simples<G: GarsideStructure + ?Sized>(g: &G) -> Result<Vec<Simple>> {
    let predicted = predicted_simple_count(g.kind(), g.strands());
    if predicted > ENUMERATION_LIMIT {
        return Err(Error::TooLarge(predicted));
    }
    let mut seen: BTreeSet<Simple> = BTreeSet::new();
    let mut order: Vec<Simple> = Vec::new();
    let mut queue: VecDeque<Simple> = VecDeque::new();
    fn push(s: Simple, seen: &mut BTreeSet<Simple>, order: &mut Vec<Simple>, queue: &mut VecDeque<Simple>) {
        if seen.insert(s) {
            order.push(s);
            queue.push_back(s);
        }
    }
    push(g.identity(), &mut seen, &mut order, &mut queue);
    for i in 0..g.n_atoms() {
        push(g.atom(i), &mut seen, &mut order, &mut queue);
    }
    while let Some(s) = queue.pop_front() {
        let known: Vec<Simple> = order.clone();
        for t in known {
            for u in [g.under(&s, &t), g.under(&t, &s), g.right_join(&s, &t)] {
                push(u, &mut seen, &mut order, &mut queue);
            }
        }
        if order.len() as u128 > ENUMERATION_LIMIT {
            return Err(Error::TooLarge(order.len() as u128));
        }
    }
    order.sort();
    Ok(order)
}

/// Atom index (0-based) of the Artin generator σ_i (1-based `i`) in the
/// given structure: σ_i itself for Artin, the band a_{i+1,i} for BKL.
pub fn sigma_atom(g: &dyn GarsideStructure, i: usize) -> Result<usize> {
    let n = g.strands();
    if i == 0 || i >= n {
        return Err(Error::IndexOutOfRange { index: i as i64, max: n - 1 });
    }
    Ok(match g.kind() {
        StructureKind::Artin => i - 1,
        StructureKind::Bkl => {
            let t0 = i;
            t0 * (t0 - 1) / 2 + (i - 1)
        }
    })
}

/// Signed word in the structure's atoms for a signed word in σ_i.
pub fn sigma_word(g: &dyn GarsideStructure, word: &[i64]) -> Result<Vec<i64>> {
    word.iter()
        .map(|&w| {
            let i = sigma_atom(g, w.unsigned_abs() as usize)? as i64 + 1;
            Ok(if w < 0 { -i } else { i })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_match_closed_forms() {
        for n in 2..=6 {
            let a = ArtinStructure::new(n).unwrap();
            let b = BklStructure::new(n).unwrap();
            assert_eq!(enumerate_simples(&a).unwrap().len() as u128, predicted_simple_count(StructureKind::Artin, n));
            assert_eq!(enumerate_simples(&b).unwrap().len() as u128, predicted_simple_count(StructureKind::Bkl, n));
        }
        assert_eq!(predicted_simple_count(StructureKind::Artin, 4), 24);
        assert_eq!(predicted_simple_count(StructureKind::Bkl, 4), 14);
    }

    #[test]
    fn refuses_large_enumeration() {
        let a = ArtinStructure::new(12).unwrap();
        assert!(matches!(enumerate_simples(&a), Err(Error::TooLarge(_))));
    }

    #[test]
    fn sigma_maps_to_consecutive_bands() {
        let g = bkl_structure(5).unwrap();
        for i in 1..5 {
            let idx = sigma_atom(g.as_ref(), i).unwrap();
            let mut expect = Simple::identity(5);
            expect.images_mut().swap(i - 1, i);
            assert_eq!(g.atom(idx), expect);
        }
        assert!(sigma_atom(g.as_ref(), 5).is_err());
    }
}
