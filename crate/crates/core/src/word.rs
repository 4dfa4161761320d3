//! Text and JSON forms of words and elements.
//!
//! Artin words are whitespace-separated signed integers (`i` for σ_i).
//! BKL words are `(t,s)` tokens for the band a_{ts}, optionally prefixed
//! with `-` for the inverse.

use std::sync::OnceLock;

use regex::Regex;
use serde::{Deserialize, Serialize};

use crate::braid::BklStructure;
use crate::element::Element;
use crate::error::{Error, Result};
use crate::garside::{GarsideStructure, StructureKind};

fn band_token() -> &'static Regex {
    static RE: OnceLock<Regex> = OnceLock::new();
    RE.get_or_init(|| Regex::new(r"^(-?)\(\s*(\d+)\s*,\s*(\d+)\s*\)$").unwrap())
}

fn band_split() -> &'static Regex {
    static RE: OnceLock<Regex> = OnceLock::new();
    RE.get_or_init(|| Regex::new(r"-?\(\s*\d+\s*,\s*\d+\s*\)|\S+").unwrap())
}

/// Parses a word into signed 1-based atom indices of the structure.
pub fn parse_word(g: &dyn GarsideStructure, text: &str) -> Result<Vec<i64>> {
    match g.kind() {
        StructureKind::Artin => text
            .split_whitespace()
            .map(|tok| {
                let i: i64 = tok.parse().map_err(|_| Error::Parse(format!("bad generator {tok:?}")))?;
                if i == 0 || i.unsigned_abs() as usize > g.n_atoms() {
                    return Err(Error::IndexOutOfRange { index: i, max: g.n_atoms() });
                }
                Ok(i)
            })
            .collect(),
        StructureKind::Bkl => {
            let bkl = BklStructure::new(g.strands())?;
            band_split()
                .find_iter(text)
                .map(|m| {
                    let caps = band_token()
                        .captures(m.as_str())
                        .ok_or_else(|| Error::Parse(format!("bad band token {:?}", m.as_str())))?;
                    let t: usize = caps[2].parse().map_err(|_| Error::Parse(m.as_str().into()))?;
                    let s: usize = caps[3].parse().map_err(|_| Error::Parse(m.as_str().into()))?;
                    let idx = bkl
                        .band_index(t, s)
                        .ok_or_else(|| Error::Parse(format!("no band generator a_({t},{s}) on {} strands", g.strands())))?;
                    let i = idx as i64 + 1;
                    Ok(if caps[1].is_empty() { i } else { -i })
                })
                .collect()
        }
    }
}

pub fn format_word(g: &dyn GarsideStructure, word: &[i64]) -> String {
    match g.kind() {
        StructureKind::Artin => word.iter().map(i64::to_string).collect::<Vec<_>>().join(" "),
        StructureKind::Bkl => {
            let bkl = BklStructure::new(g.strands()).expect("valid strand count");
            word.iter()
                .map(|&w| {
                    let (t, s) = bkl.band(w.unsigned_abs() as usize - 1);
                    format!("{}({t},{s})", if w < 0 { "-" } else { "" })
                })
                .collect::<Vec<_>>()
                .join(" ")
        }
    }
}

pub fn parse_element(g: &dyn GarsideStructure, text: &str) -> Result<Element> {
    Element::from_word(g, &parse_word(g, text)?)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementJson {
    pub inf: i64,
    pub factors: Vec<Vec<u8>>,
}

impl ElementJson {
    pub fn from_element(g: &dyn GarsideStructure, e: &Element) -> Self {
        ElementJson { inf: e.inf(), factors: e.factors().iter().map(|s| g.encode(s)).collect() }
    }

    pub fn to_element(&self, g: &dyn GarsideStructure) -> Result<Element> {
        let factors = self
            .factors
            .iter()
            .map(|b| g.decode(b).ok_or_else(|| Error::Parse(format!("bad simple encoding {b:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Element::from_normal_form(g, self.inf, factors)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::{artin_structure, bkl_structure};

    #[test]
    fn artin_round_trip() {
        let g = artin_structure(4).unwrap();
        let w = parse_word(g.as_ref(), " 1 -3  2 ").unwrap();
        assert_eq!(w, vec![1, -3, 2]);
        assert_eq!(format_word(g.as_ref(), &w), "1 -3 2");
        assert!(parse_word(g.as_ref(), "4").is_err());
        assert!(parse_word(g.as_ref(), "x").is_err());
    }

    #[test]
    fn bkl_round_trip() {
        let g = bkl_structure(4).unwrap();
        let w = parse_word(g.as_ref(), "(2,1) -(4, 1)(3,2)").unwrap();
        assert_eq!(w, vec![1, -4, 3]);
        assert_eq!(format_word(g.as_ref(), &w), "(2,1) -(4,1) (3,2)");
        assert!(parse_word(g.as_ref(), "(1,2)").is_err());
        assert!(parse_word(g.as_ref(), "(5,1)").is_err());
    }

    #[test]
    fn element_json_round_trip() {
        let g = bkl_structure(5).unwrap();
        let e = parse_element(g.as_ref(), "(3,1) -(5,2) (4,3) (4,3)").unwrap();
        let j = ElementJson::from_element(g.as_ref(), &e);
        let text = serde_json::to_string(&j).unwrap();
        let back: ElementJson = serde_json::from_str(&text).unwrap();
        assert_eq!(back.to_element(g.as_ref()).unwrap(), e);
    }
}
