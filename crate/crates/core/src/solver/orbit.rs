use std::collections::VecDeque;

use indexmap::IndexMap;

use crate::braid::enumerate_simples;
use crate::element::Element;
use crate::error::{Error, Result};
use crate::garside::{GarsideStructure, Side};
use crate::simple::Simple;
use crate::tuple::{Interval, TupleElement};

use super::minimal::minimal_simple_set;

pub const DEFAULT_CAP: usize = 100_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OrbitOptions {
    /// Conjugate only by minimal simples instead of by every simple.
    pub use_minimal: bool,
    pub cap: usize,
    pub mod_tau: bool,
}

impl Default for OrbitOptions {
    fn default() -> Self {
        OrbitOptions { use_minimal: true, cap: DEFAULT_CAP, mod_tau: false }
    }
}

#[derive(Debug, Clone)]
struct Node {
    parent: Option<usize>,
    edge: Option<Simple>,
    /// Δ-power applied after the edge to reach the stored representative.
    shift: i64,
}

/// The conjugates of `base` inside an interval, keyed by canonical encoding,
/// each with a witness x such that `base^x` is the member.
#[derive(Debug, Clone)]
pub struct OrbitSet {
    pub base: TupleElement,
    pub interval: Interval,
    pub truncated: bool,
    pub mod_tau: bool,
    /// Conjugator taking `base` to the BFS root.
    root_witness: Element,
    members: IndexMap<Vec<u8>, Node>,
    /// Per-member witnesses, used instead of the BFS tree after reduction.
    explicit: Option<Vec<Element>>,
}

impl OrbitSet {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn member(&self, g: &dyn GarsideStructure, idx: usize) -> TupleElement {
        let (key, _) = self.members.get_index(idx).expect("member index in range");
        TupleElement::decode(g, key, self.base.r()).expect("stored keys decode")
    }

    pub fn members<'a>(&'a self, g: &'a dyn GarsideStructure) -> impl Iterator<Item = TupleElement> + 'a {
        (0..self.len()).map(move |i| self.member(g, i))
    }

    /// Canonical keys of the members, in discovery order.
    pub fn keys(&self) -> impl Iterator<Item = &[u8]> {
        self.members.keys().map(Vec::as_slice)
    }

    pub fn witness(&self, g: &dyn GarsideStructure, idx: usize) -> Element {
        if let Some(w) = &self.explicit {
            return w[idx].clone();
        }
        let mut path = Vec::new();
        let mut cur = Some(idx);
        while let Some(i) = cur {
            let node = &self.members[i];
            path.push(node);
            cur = node.parent;
        }
        let mut x = self.root_witness.clone();
        for node in path.iter().rev() {
            if let Some(s) = &node.edge {
                x.append_simple(g, s);
            }
            x = x.times_delta_power(g, node.shift);
        }
        x
    }

    /// Index of `t` (or of its τ-representative when reduced mod τ).
    pub fn index_of(&self, g: &dyn GarsideStructure, t: &TupleElement) -> Option<usize> {
        let key = if self.mod_tau { tau_representative(g, t).0 } else { t.encode(g) };
        self.members.get_index_of(&key)
    }

    /// A conjugator x with `base^x = t`, when `t` is a member (or τ-image of one).
    pub fn find_witness(&self, g: &dyn GarsideStructure, t: &TupleElement) -> Option<Element> {
        if !self.mod_tau {
            return self.index_of(g, t).map(|i| self.witness(g, i));
        }
        let (key, k) = tau_representative(g, t);
        let i = self.members.get_index_of(&key)?;
        // rep = t^{Δ^k}, so t = rep^{Δ^{−k}}
        Some(self.witness(g, i).times_delta_power(g, -k))
    }

    /// Sorted canonical keys; equal for equal member sets.
    pub fn sorted_keys(&self) -> Vec<Vec<u8>> {
        let mut keys: Vec<Vec<u8>> = self.members.keys().cloned().collect();
        keys.sort();
        keys
    }
}

/// The encode-minimal member of the τ-orbit of `t`, with the shift k such
/// that the representative is `τ^k(t) = t^{Δ^k}`.
pub fn tau_representative(g: &dyn GarsideStructure, t: &TupleElement) -> (Vec<u8>, i64) {
    let mut best = (t.encode(g), 0);
    for k in 1..g.tau_order() as i64 {
        let key = t.tau_power(g, k).encode(g);
        if key < best.0 {
            best = (key, k);
        }
    }
    best
}

/// Breadth-first closure of `{a}` under conjugation by simples, restricted
/// to `iv`.
pub fn orbit_in_interval(g: &dyn GarsideStructure, a: &TupleElement, iv: &Interval, opts: &OrbitOptions) -> Result<OrbitSet> {
    orbit_search(g, a, Element::identity(g), iv, opts, None).map(|(o, _)| o)
}

/// BFS that stops as soon as `target` (a canonical key) is inserted.
pub(crate) fn orbit_search(
    g: &dyn GarsideStructure,
    a: &TupleElement,
    root_witness: Element,
    iv: &Interval,
    opts: &OrbitOptions,
    target: Option<&[u8]>,
) -> Result<(OrbitSet, Option<usize>)> {
    iv.check_dim(a.r())?;
    a.check_structure(g)?;
    if !a.in_interval(iv)? {
        return Err(Error::NotInInterval);
    }
    if opts.cap == 0 {
        return Err(Error::BadParameter("cap must be at least 1".into()));
    }
    let all = if opts.use_minimal {
        Vec::new()
    } else {
        enumerate_simples(g)?.into_iter().filter(|s| !g.is_identity(s)).collect()
    };
    let mut set = OrbitSet {
        base: a.clone(),
        interval: iv.clone(),
        truncated: false,
        mod_tau: opts.mod_tau,
        root_witness,
        members: IndexMap::new(),
        explicit: None,
    };
    let canon = |t: &TupleElement| if opts.mod_tau { tau_representative(g, t) } else { (t.encode(g), 0) };
    let (root_key, shift) = canon(a);
    let root = if shift == 0 { a.clone() } else { a.tau_power(g, shift) };
    set.members.insert(root_key, Node { parent: None, edge: None, shift });
    if target.is_some_and(|t| set.members.contains_key(t)) {
        return Ok((set, Some(0)));
    }
    let mut queue: VecDeque<(usize, TupleElement)> = VecDeque::from([(0, root)]);
    while let Some((idx, v)) = queue.pop_front() {
        let simples = if opts.use_minimal { minimal_simple_set(g, &v, iv, Side::Right)? } else { all.clone() };
        for s in simples {
            let u = v.conj_simple(g, &s);
            if !opts.use_minimal && !u.in_interval(iv)? {
                continue;
            }
            let (key, shift) = canon(&u);
            if set.members.contains_key(&key) {
                continue;
            }
            if set.members.len() >= opts.cap {
                set.truncated = true;
                return Ok((set, None));
            }
            let found = target.is_some_and(|t| t == key.as_slice());
            let (new_idx, _) = set.members.insert_full(key, Node { parent: Some(idx), edge: Some(s), shift });
            if found {
                return Ok((set, Some(new_idx)));
            }
            let u = if shift == 0 { u } else { u.tau_power(g, shift) };
            queue.push_back((new_idx, u));
        }
    }
    Ok((set, None))
}

/// Keeps one representative (the encode-minimal one) per τ-orbit.
pub fn mod_tau_reduce(g: &dyn GarsideStructure, set: &OrbitSet) -> OrbitSet {
    if set.mod_tau {
        return set.clone();
    }
    let mut out = OrbitSet {
        base: set.base.clone(),
        interval: set.interval.clone(),
        truncated: set.truncated,
        mod_tau: true,
        root_witness: Element::identity(g),
        members: IndexMap::new(),
        explicit: None,
    };
    let mut reps: Vec<(Vec<u8>, usize, i64)> = Vec::new();
    for i in 0..set.len() {
        let (key, k) = tau_representative(g, &set.member(g, i));
        reps.push((key, i, k));
    }
    // Parent pointers are replaced by explicit witnesses: each entry roots at
    // its own source member.
    let mut witnesses: Vec<Element> = Vec::new();
    for (key, i, k) in reps {
        if out.members.contains_key(&key) {
            continue;
        }
        witnesses.push(set.witness(g, i).times_delta_power(g, k));
        out.members.insert(key, Node { parent: None, edge: None, shift: 0 });
    }
    out.explicit = Some(witnesses);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::{artin_structure, bkl_structure};
    use crate::element::make_element;

    fn full() -> OrbitOptions {
        OrbitOptions { use_minimal: false, ..OrbitOptions::default() }
    }

    #[test]
    fn examples() {
        let g = artin_structure(3).unwrap();
        let g = g.as_ref();
        let d = TupleElement::from_words(g, &[vec![1, 2, 1]]).unwrap();
        let set = orbit_in_interval(g, &d, &Interval::finite(vec![1], vec![1]).unwrap(), &OrbitOptions::default()).unwrap();
        assert_eq!(set.len(), 1);

        let s1 = TupleElement::from_words(g, &[vec![1]]).unwrap();
        let s2 = TupleElement::from_words(g, &[vec![2]]).unwrap();
        let iv = Interval::finite(vec![0], vec![1]).unwrap();
        let set = orbit_in_interval(g, &s1, &iv, &OrbitOptions::default()).unwrap();
        assert_eq!(set.sorted_keys(), {
            let mut k = vec![s1.encode(g), s2.encode(g)];
            k.sort();
            k
        });
        let reduced = mod_tau_reduce(g, &set);
        assert_eq!(reduced.len(), 1);

        let pair = TupleElement::from_words(g, &[vec![1], vec![2]]).unwrap();
        let iv = pair.own_interval();
        let a = orbit_in_interval(g, &pair, &iv, &OrbitOptions::default()).unwrap();
        let b = orbit_in_interval(g, &pair, &iv, &full()).unwrap();
        assert_eq!(a.sorted_keys(), b.sorted_keys());

        assert!(matches!(
            orbit_in_interval(g, &s1, &Interval::finite(vec![1], vec![1]).unwrap(), &OrbitOptions::default()),
            Err(Error::NotInInterval)
        ));
    }

    #[test]
    fn witnesses_and_tau_expansion() {
        for g in [artin_structure(4).unwrap(), bkl_structure(4).unwrap()] {
            let g = g.as_ref();
            let a = TupleElement::from_words(g, &[vec![1, -2, 3, 3], vec![2, 1]]).unwrap();
            let iv = a.own_interval();
            let set = orbit_in_interval(g, &a, &iv, &OrbitOptions::default()).unwrap();
            assert!(!set.truncated);
            for i in 0..set.len() {
                assert_eq!(a.conjugate(g, &set.witness(g, i)).unwrap(), set.member(g, i));
            }
            let reduced = mod_tau_reduce(g, &set);
            let direct = orbit_in_interval(g, &a, &iv, &OrbitOptions { mod_tau: true, ..OrbitOptions::default() }).unwrap();
            assert_eq!(reduced.sorted_keys(), direct.sorted_keys());
            assert!(reduced.len() * g.tau_order() >= set.len());
            let mut expanded: Vec<Vec<u8>> = Vec::new();
            for i in 0..reduced.len() {
                let m = reduced.member(g, i);
                assert_eq!(a.conjugate(g, &reduced.witness(g, i)).unwrap(), m);
                assert_eq!(a.conjugate(g, &direct.find_witness(g, &m).unwrap()).unwrap(), m);
                for k in 0..g.tau_order() as i64 {
                    expanded.push(m.tau_power(g, k).encode(g));
                }
            }
            expanded.sort();
            expanded.dedup();
            assert_eq!(expanded, set.sorted_keys());
        }
    }

    #[test]
    fn cap_truncates() {
        let g = artin_structure(4).unwrap();
        let g = g.as_ref();
        let a = TupleElement::new(vec![make_element(g, &[1, -2, 3, 3, 2, -1]).unwrap()]).unwrap();
        let iv = Interval::lower(a.infs());
        let set = orbit_in_interval(g, &a, &iv, &OrbitOptions { cap: 2, ..OrbitOptions::default() }).unwrap();
        assert!(set.truncated);
        assert_eq!(set.len(), 2);
    }
}
