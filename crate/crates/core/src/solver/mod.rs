//! Conjugacy search in intervals: sliding, interval minimization, minimal
//! simple elements, orbit enumeration and the simultaneous conjugacy
//! decision and search procedures.

mod conj;
mod invariant;
mod lmi;
mod minimal;
mod orbit;
mod scp;
mod sliding;

pub use conj::{conj_to_interval, ConjResult};
pub use invariant::{invariant_set, InvariantKind, InvariantSet};
pub use lmi::{lex_minimal_interval, LmiVariant, MinimalIntervalResult};
pub use minimal::{min_simple, minimal_simple_set};
pub use orbit::{mod_tau_reduce, orbit_in_interval, OrbitOptions, OrbitSet, DEFAULT_CAP};
pub use scp::{scp_decide, scp_search, Decision, ScpOptions, SearchOutcome};
pub use sliding::{sliding_element, SlidingTarget};

use crate::element::Element;
use crate::garside::GarsideStructure;
use crate::simple::Simple;

/// `w\t` for a positive element `w` and a simple `t`.
fn under_positive(g: &dyn GarsideStructure, w: &Element, t: &Simple) -> Simple {
    debug_assert!(w.inf() >= 0);
    if w.inf() >= 1 {
        return g.identity();
    }
    let mut x = *t;
    for f in w.factors() {
        if g.is_identity(&x) {
            break;
        }
        x = g.under(f, &x);
    }
    x
}

/// `t/w` for a positive element `w` and a simple `t`.
fn over_positive(g: &dyn GarsideStructure, t: &Simple, w: &Element) -> Simple {
    debug_assert!(w.inf() >= 0);
    if w.inf() >= 1 {
        return g.identity();
    }
    let mut x = *t;
    for f in w.factors().iter().rev() {
        if g.is_identity(&x) {
            break;
        }
        x = g.over(&x, f);
    }
    x
}
