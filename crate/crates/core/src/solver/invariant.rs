use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::garside::GarsideStructure;
use crate::tuple::{Interval, TupleElement};

use super::lmi::{lex_minimal_interval, LmiVariant, MinimalIntervalResult};
use super::orbit::{orbit_search, OrbitOptions, OrbitSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum InvariantKind {
    /// Conjugates above the lex′ lower bounds, suprema unbounded.
    Lss,
    /// Conjugates in the lexicographically minimal interval.
    Lsss,
    /// Conjugates in the lexicographically′ minimal interval.
    LsssPrime,
}

impl InvariantKind {
    pub fn variant(self) -> LmiVariant {
        match self {
            InvariantKind::Lsss => LmiVariant::Lex,
            InvariantKind::Lss | InvariantKind::LsssPrime => LmiVariant::LexPrime,
        }
    }

    pub fn token(self) -> &'static str {
        match self {
            InvariantKind::Lss => "lss",
            InvariantKind::Lsss => "lsss",
            InvariantKind::LsssPrime => "lsssp",
        }
    }
}

impl FromStr for InvariantKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "lss" => Ok(InvariantKind::Lss),
            "lsss" => Ok(InvariantKind::Lsss),
            "lsssp" | "lsss_prime" | "lsss'" => Ok(InvariantKind::LsssPrime),
            other => Err(Error::Parse(format!("unknown invariant kind {other:?}"))),
        }
    }
}

impl fmt::Display for InvariantKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

#[derive(Debug, Clone)]
pub struct InvariantSet {
    pub kind: InvariantKind,
    pub minimal: MinimalIntervalResult,
    pub set: OrbitSet,
}

/// The interval an invariant of this kind uses, given the minimal interval.
pub(crate) fn kind_interval(kind: InvariantKind, minimal: &Interval) -> Interval {
    match kind {
        InvariantKind::Lss => Interval::lower(minimal.lo.clone()),
        InvariantKind::Lsss | InvariantKind::LsssPrime => minimal.clone(),
    }
}

/// Conjugacy invariant of `a`: minimal interval, then the orbit of a
/// conjugate inside it. Witnesses are relative to `a`.
pub fn invariant_set(g: &dyn GarsideStructure, a: &TupleElement, kind: InvariantKind, opts: &OrbitOptions) -> Result<InvariantSet> {
    let minimal = lex_minimal_interval(g, a, kind.variant())?;
    let iv = kind_interval(kind, &minimal.interval);
    let (mut set, _) = orbit_search(g, &minimal.conjugated, minimal.conjugator.clone(), &iv, opts, None)?;
    set.base = a.clone();
    Ok(InvariantSet { kind, minimal, set })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::artin_structure;

    #[test]
    fn examples() {
        let g = artin_structure(3).unwrap();
        let g = g.as_ref();
        let d = TupleElement::from_words(g, &[vec![1, 2, 1]]).unwrap();
        let inv = invariant_set(g, &d, InvariantKind::Lsss, &OrbitOptions::default()).unwrap();
        assert_eq!(inv.set.len(), 1);

        let sq = TupleElement::from_words(g, &[vec![1, 1]]).unwrap();
        let inv = invariant_set(g, &sq, InvariantKind::Lsss, &OrbitOptions::default()).unwrap();
        let mut got: Vec<TupleElement> = inv.set.members(g).collect();
        got.sort_by_key(|t| t.encode(g));
        let mut want = vec![sq.clone(), TupleElement::from_words(g, &[vec![2, 2]]).unwrap()];
        want.sort_by_key(|t| t.encode(g));
        assert_eq!(got, want);
        for i in 0..inv.set.len() {
            assert_eq!(sq.conjugate(g, &inv.set.witness(g, i)).unwrap(), inv.set.member(g, i));
        }
    }

    #[test]
    fn kind_tokens() {
        for k in [InvariantKind::Lss, InvariantKind::Lsss, InvariantKind::LsssPrime] {
            assert_eq!(k.token().parse::<InvariantKind>().unwrap(), k);
        }
        assert!("sss".parse::<InvariantKind>().is_err());
    }
}
