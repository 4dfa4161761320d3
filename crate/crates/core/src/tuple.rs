//! Tuples of elements and the intervals that bound them coordinatewise.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::element::Element;
use crate::error::{Error, Result};
use crate::garside::GarsideStructure;
use crate::simple::Simple;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct TupleElement {
    entries: Vec<Element>,
}

impl TupleElement {
    pub fn new(entries: Vec<Element>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::BadParameter("tuple must have at least one entry".into()));
        }
        let (k, n) = (entries[0].kind(), entries[0].strands());
        if entries.iter().any(|e| e.kind() != k || e.strands() != n) {
            return Err(Error::StructureMismatch);
        }
        Ok(TupleElement { entries })
    }

    pub fn from_words(g: &dyn GarsideStructure, words: &[Vec<i64>]) -> Result<Self> {
        let entries = words.iter().map(|w| Element::from_word(g, w)).collect::<Result<Vec<_>>>()?;
        TupleElement::new(entries)
    }

    pub fn entries(&self) -> &[Element] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<Element> {
        self.entries
    }

    pub fn r(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, i: usize) -> &Element {
        &self.entries[i]
    }

    /// First `i` coordinates.
    pub fn prefix(&self, i: usize) -> TupleElement {
        assert!(i >= 1 && i <= self.r());
        TupleElement { entries: self.entries[..i].to_vec() }
    }

    pub fn check_structure(&self, g: &dyn GarsideStructure) -> Result<()> {
        self.entries[0].check_structure(g)
    }

    pub fn infs(&self) -> Vec<i64> {
        self.entries.iter().map(Element::inf).collect()
    }

    pub fn sups(&self) -> Vec<i64> {
        self.entries.iter().map(Element::sup).collect()
    }

    /// The tightest interval containing the tuple.
    pub fn own_interval(&self) -> Interval {
        Interval { lo: self.infs(), hi: self.sups().into_iter().map(Some).collect() }
    }

    pub fn conjugate(&self, g: &dyn GarsideStructure, x: &Element) -> Result<TupleElement> {
        self.check_structure(g)?;
        x.check_structure(g)?;
        let xi = x.inverse(g);
        let entries = self
            .entries
            .iter()
            .map(|e| xi.multiply(g, e)?.multiply(g, x))
            .collect::<Result<Vec<_>>>()?;
        Ok(TupleElement { entries })
    }

    /// s⁻¹·v·s entrywise.
    pub fn conj_simple(&self, g: &dyn GarsideStructure, s: &Simple) -> TupleElement {
        TupleElement { entries: self.entries.iter().map(|e| e.conj_simple(g, s)).collect() }
    }

    /// s·v·s⁻¹ entrywise.
    pub fn conj_simple_inv(&self, g: &dyn GarsideStructure, s: &Simple) -> TupleElement {
        TupleElement { entries: self.entries.iter().map(|e| e.conj_simple_inv(g, s)).collect() }
    }

    pub fn tau_power(&self, g: &dyn GarsideStructure, k: i64) -> TupleElement {
        TupleElement { entries: self.entries.iter().map(|e| e.tau_power(g, k)).collect() }
    }

    pub fn in_interval(&self, iv: &Interval) -> Result<bool> {
        iv.check_dim(self.r())?;
        Ok(self.entries.iter().enumerate().all(|(i, e)| iv.contains(i, e)))
    }

    pub fn exponent_sums(&self, g: &dyn GarsideStructure) -> Vec<i64> {
        self.entries.iter().map(|e| e.exponent_sum(g)).collect()
    }

    /// Concatenated canonical encodings of the coordinates.
    pub fn encode(&self, g: &dyn GarsideStructure) -> Vec<u8> {
        let mut out = Vec::new();
        for e in &self.entries {
            e.encode_into(g, &mut out);
        }
        out
    }

    pub fn decode(g: &dyn GarsideStructure, bytes: &[u8], r: usize) -> Option<TupleElement> {
        let mut pos = 0;
        let mut entries = Vec::with_capacity(r);
        for _ in 0..r {
            entries.push(Element::decode(g, bytes, &mut pos)?);
        }
        (pos == bytes.len()).then_some(TupleElement { entries })
    }
}

/// Upper bound of an interval coordinate; `None` is +∞.
pub type Bound = Option<i64>;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Interval {
    pub lo: Vec<i64>,
    pub hi: Vec<Bound>,
}

impl Interval {
    pub fn new(lo: Vec<i64>, hi: Vec<Bound>) -> Result<Self> {
        if lo.len() != hi.len() {
            return Err(Error::DimensionMismatch { expected: lo.len(), got: hi.len() });
        }
        if lo.is_empty() {
            return Err(Error::BadParameter("interval must have at least one coordinate".into()));
        }
        if lo.iter().zip(&hi).any(|(p, q)| q.is_some_and(|q| *p > q)) {
            return Err(Error::BadParameter("interval has lo > hi".into()));
        }
        Ok(Interval { lo, hi })
    }

    pub fn finite(lo: Vec<i64>, hi: Vec<i64>) -> Result<Self> {
        Interval::new(lo, hi.into_iter().map(Some).collect())
    }

    /// [lo, +∞] in every coordinate.
    pub fn lower(lo: Vec<i64>) -> Self {
        let hi = vec![None; lo.len()];
        Interval { lo, hi }
    }

    pub fn r(&self) -> usize {
        self.lo.len()
    }

    pub fn check_dim(&self, r: usize) -> Result<()> {
        if self.r() != r {
            return Err(Error::DimensionMismatch { expected: self.r(), got: r });
        }
        Ok(())
    }

    pub fn contains(&self, i: usize, e: &Element) -> bool {
        self.lo[i] <= e.inf() && self.hi[i].is_none_or(|q| e.sup() <= q)
    }

    pub fn prefix(&self, i: usize) -> Interval {
        Interval { lo: self.lo[..i].to_vec(), hi: self.hi[..i].to_vec() }
    }

    pub fn is_subinterval_of(&self, other: &Interval) -> bool {
        self.r() == other.r()
            && self.lo.iter().zip(&other.lo).all(|(a, b)| a >= b)
            && self.hi.iter().zip(&other.hi).all(|(a, b)| match (a, b) {
                (_, None) => true,
                (None, Some(_)) => false,
                (Some(a), Some(b)) => a <= b,
            })
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let hi: Vec<String> = self.hi.iter().map(|q| q.map_or("inf".to_string(), |q| q.to_string())).collect();
        write!(f, "[{:?}, [{}]]", self.lo, hi.join(", "))
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum BoundRepr {
    Int(i64),
    Str(String),
}

#[derive(Serialize, Deserialize)]
struct IntervalRepr {
    lo: Vec<i64>,
    hi: Vec<BoundRepr>,
}

impl Serialize for Interval {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        let hi = self
            .hi
            .iter()
            .map(|q| q.map_or(BoundRepr::Str("inf".into()), BoundRepr::Int))
            .collect();
        IntervalRepr { lo: self.lo.clone(), hi }.serialize(ser)
    }
}

impl<'de> Deserialize<'de> for Interval {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let repr = IntervalRepr::deserialize(de)?;
        let hi = repr
            .hi
            .into_iter()
            .map(|b| match b {
                BoundRepr::Int(q) => Ok(Some(q)),
                BoundRepr::Str(s) if s == "inf" => Ok(None),
                BoundRepr::Str(s) => Err(serde::de::Error::custom(format!("bad bound {s:?}"))),
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Interval::new(repr.lo, hi).map_err(serde::de::Error::custom)
    }
}
