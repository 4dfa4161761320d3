use std::collections::HashSet;

use crate::element::Element;
use crate::error::Result;
use crate::garside::GarsideStructure;
use crate::simple::Simple;
use crate::tuple::{Interval, TupleElement};

#[derive(Debug, Clone)]
pub struct ConjResult {
    /// Positive y with `a^{y⁻¹}` the final tuple.
    pub y: Element,
    /// The simples h applied, in order; each step was `c ↦ h·c·h⁻¹`.
    pub steps: Vec<Simple>,
    pub conjugated: TupleElement,
    pub success: bool,
}

impl ConjResult {
    /// Applies the recorded steps to another tuple (e.g. the full tuple
    /// when only a prefix was driven into the interval).
    pub fn apply(&self, g: &dyn GarsideStructure, t: &TupleElement) -> TupleElement {
        self.steps.iter().fold(t.clone(), |acc, h| acc.conj_simple_inv(g, h))
    }
}

/// Repeated simultaneous cycling and decycling towards `iv`, at most
/// `max_iter` steps (`None` for no limit). Stops early when a state repeats.
pub fn conj_to_interval(
    g: &dyn GarsideStructure,
    a: &TupleElement,
    iv: &Interval,
    max_iter: Option<usize>,
) -> Result<ConjResult> {
    iv.check_dim(a.r())?;
    a.check_structure(g)?;
    let mut c = a.clone();
    let mut y = Element::identity(g);
    let mut steps = Vec::new();
    let mut seen: HashSet<Vec<u8>> = HashSet::new();
    loop {
        if c.in_interval(iv)? {
            return Ok(ConjResult { y, steps, conjugated: c, success: true });
        }
        if max_iter.is_some_and(|m| steps.len() >= m) || !seen.insert(c.encode(g)) {
            return Ok(ConjResult { y, steps, conjugated: c, success: false });
        }
        let mut h = g.identity();
        for (k, e) in c.entries().iter().enumerate() {
            if e.inf() < iv.lo[k] {
                let term = match e.first_factor() {
                    Some(s) => g.tau(&g.partial_inv(s), -e.inf()),
                    None => g.delta(),
                };
                h = g.left_join(&h, &term);
            }
            if iv.hi[k].is_some_and(|q| q < e.sup()) {
                if let Some(s) = e.last_factor() {
                    h = g.left_join(&h, s);
                }
            }
        }
        y.prepend_simple(g, &h);
        c = c.conj_simple_inv(g, &h);
        steps.push(h);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::artin_structure;
    use crate::element::make_element;

    #[test]
    fn already_inside() {
        let g = artin_structure(3).unwrap();
        let g = g.as_ref();
        let a = TupleElement::from_words(g, &[vec![1, 1]]).unwrap();
        let res = conj_to_interval(g, &a, &a.own_interval(), Some(0)).unwrap();
        assert!(res.success && res.y.is_identity() && res.steps.is_empty());
    }

    #[test]
    fn square_of_generator_cannot_reach_inf_one() {
        let g = artin_structure(3).unwrap();
        let g = g.as_ref();
        let a = TupleElement::from_words(g, &[vec![1, 1]]).unwrap();
        let iv = Interval::lower(vec![1]);
        let res = conj_to_interval(g, &a, &iv, Some(2)).unwrap();
        assert!(!res.success);
    }

    #[test]
    fn undoes_a_conjugation() {
        let g = artin_structure(3).unwrap();
        let g = g.as_ref();
        let b = TupleElement::from_words(g, &[vec![1, 2, 1, 1]]).unwrap();
        let x = make_element(g, &[2, -1, -1, 2]).unwrap();
        let a = b.conjugate(g, &x).unwrap();
        assert!(a.get(0).inf() < 1);
        let res = conj_to_interval(g, &a, &b.own_interval(), None).unwrap();
        assert!(res.success);
        let back = a.conjugate(g, &res.y.inverse(g)).unwrap();
        assert_eq!(back, res.conjugated);
        assert_eq!(res.apply(g, &a), res.conjugated);
        assert!(back.in_interval(&b.own_interval()).unwrap());
    }
}
