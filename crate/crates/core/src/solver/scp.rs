use crate::element::Element;
use crate::error::{Error, Result};
use crate::garside::GarsideStructure;
use crate::tuple::TupleElement;

use super::lmi::{lex_minimal_interval, LmiVariant};
use super::orbit::{orbit_search, tau_representative, OrbitOptions};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ScpOptions {
    pub variant: LmiVariant,
    pub orbit: OrbitOptions,
}

impl Default for ScpOptions {
    fn default() -> Self {
        ScpOptions { variant: LmiVariant::Lex, orbit: OrbitOptions::default() }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Decision {
    Conjugate,
    NotConjugate,
    /// The orbit cap was hit before an answer was reached.
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    /// x with `a^x = c`.
    Found(Element),
    NotConjugate,
    Unknown,
}

impl SearchOutcome {
    pub fn decision(&self) -> Decision {
        match self {
            SearchOutcome::Found(_) => Decision::Conjugate,
            SearchOutcome::NotConjugate => Decision::NotConjugate,
            SearchOutcome::Unknown => Decision::Unknown,
        }
    }

    pub fn witness(self) -> Option<Element> {
        match self {
            SearchOutcome::Found(x) => Some(x),
            _ => None,
        }
    }
}

pub fn scp_decide(g: &dyn GarsideStructure, a: &TupleElement, c: &TupleElement, opts: &ScpOptions) -> Result<Decision> {
    scp_search(g, a, c, opts).map(|o| o.decision())
}

/// Finds x with `a^x = c` or shows that none exists.
pub fn scp_search(g: &dyn GarsideStructure, a: &TupleElement, c: &TupleElement, opts: &ScpOptions) -> Result<SearchOutcome> {
    a.check_structure(g)?;
    c.check_structure(g)?;
    if a.r() != c.r() {
        return Err(Error::DimensionMismatch { expected: a.r(), got: c.r() });
    }
    if a.exponent_sums(g) != c.exponent_sums(g) {
        return Ok(SearchOutcome::NotConjugate);
    }
    let ma = lex_minimal_interval(g, a, opts.variant)?;
    let mc = lex_minimal_interval(g, c, opts.variant)?;
    if ma.interval != mc.interval {
        return Ok(SearchOutcome::NotConjugate);
    }
    let (target, shift) = if opts.orbit.mod_tau {
        tau_representative(g, &mc.conjugated)
    } else {
        (mc.conjugated.encode(g), 0)
    };
    let (set, found) = orbit_search(g, &ma.conjugated, ma.conjugator.clone(), &ma.interval, &opts.orbit, Some(&target))?;
    match found {
        Some(i) => {
            // a^w = τ^shift(c'), c' = c^{x_c}
            let w = set.witness(g, i).times_delta_power(g, -shift);
            let x = w.multiply(g, &mc.conjugator.inverse(g))?;
            Ok(SearchOutcome::Found(x))
        }
        None if set.truncated => Ok(SearchOutcome::Unknown),
        None => Ok(SearchOutcome::NotConjugate),
    }
}
