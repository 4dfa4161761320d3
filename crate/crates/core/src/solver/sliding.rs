use crate::error::{Error, Result};
use crate::garside::GarsideStructure;
use crate::simple::Simple;
use crate::tuple::{Bound, TupleElement};

/// A one-step target inside the tuple's own interval: each lower bound is
/// raised by 0 or 1 and each finite upper bound lowered by 0 or 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SlidingTarget {
    pub lo: Vec<i64>,
    pub hi: Vec<Bound>,
}

/// The simultaneous sliding element x₀. Conjugating `a ↦ x₀·a·x₀⁻¹` moves
/// the tuple towards the target.
pub fn sliding_element(g: &dyn GarsideStructure, a: &TupleElement, target: &SlidingTarget) -> Result<Simple> {
    let r = a.r();
    if target.lo.len() != r || target.hi.len() != r {
        return Err(Error::DimensionMismatch { expected: r, got: target.lo.len() });
    }
    a.check_structure(g)?;
    let mut x = g.identity();
    for (j, e) in a.entries().iter().enumerate() {
        let raise = target.lo[j] - e.inf();
        let lower = match target.hi[j] {
            Some(q) => e.sup() - q,
            None => 0,
        };
        if !(0..=1).contains(&raise) || !(0..=1).contains(&lower) {
            return Err(Error::BadTarget);
        }
        if raise == 1 {
            let term = match e.first_factor() {
                Some(s) => g.tau(&g.partial_inv(s), -e.inf()),
                None => g.delta(),
            };
            x = g.left_join(&x, &term);
        }
        if lower == 1 {
            let s = e.last_factor().ok_or(Error::ZeroLengthFactor(j))?;
            x = g.left_join(&x, s);
        }
    }
    Ok(x)
}
