//! Shared workloads for the criterion benches.

use scp_core::experiment::{random_conjugate_pair, random_element};
use scp_core::{Element, GarsideStructure, TupleElement};

/// Random element of default word length ⌈2N·log₂N⌉.
pub fn fixture_element(g: &dyn GarsideStructure, seed: u64) -> Element {
    random_element(g, seed)
}

pub fn fixture_tuple(g: &dyn GarsideStructure, r: usize, seed: u64) -> TupleElement {
    let entries = (0..r as u64).map(|i| random_element(g, seed.wrapping_mul(1000).wrapping_add(i))).collect();
    TupleElement::new(entries).expect("nonempty tuple")
}

/// A conjugate pair (a, c) as used by the set-size experiments.
pub fn fixture_pair(g: &dyn GarsideStructure, r: usize, seed: u64) -> (TupleElement, TupleElement) {
    let p = random_conjugate_pair(g, r, seed);
    (p.a, p.c)
}
