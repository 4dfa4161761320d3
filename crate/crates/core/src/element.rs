//! Group elements in left normal form Δ^p·s₁⋯s_l.

use std::fmt;

use crate::error::{Error, Result};
use crate::garside::{GarsideStructure, StructureKind};
use crate::simple::Simple;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Element {
    kind: StructureKind,
    n: u8,
    inf: i64,
    factors: Vec<Simple>,
}

fn add_inf(a: i64, b: i64) -> i64 {
    a.checked_add(b).unwrap_or_else(|| panic!("infimum overflow: {a} + {b}"))
}

impl Element {
    pub fn identity(g: &dyn GarsideStructure) -> Self {
        Element { kind: g.kind(), n: g.strands() as u8, inf: 0, factors: Vec::new() }
    }

    pub fn delta_power(g: &dyn GarsideStructure, k: i64) -> Self {
        Element { inf: k, ..Element::identity(g) }
    }

    pub fn from_simple(g: &dyn GarsideStructure, s: &Simple) -> Self {
        let mut e = Element::identity(g);
        e.append_simple(g, s);
        e
    }

    /// Builds an element from already left-weighted factors, none of which
    /// may be the identity or Δ.
    pub fn from_normal_form(g: &dyn GarsideStructure, inf: i64, factors: Vec<Simple>) -> Result<Self> {
        let e = Element { kind: g.kind(), n: g.strands() as u8, inf, factors };
        if e.factors.iter().any(|s| s.strands() != g.strands() || !g.is_simple(s)) {
            return Err(Error::StructureMismatch);
        }
        if !e.is_normal_form(g) {
            return Err(Error::BadParameter("factors are not in left normal form".into()));
        }
        Ok(e)
    }

    /// Product of a signed word of 1-based atom indices.
    pub fn from_word(g: &dyn GarsideStructure, word: &[i64]) -> Result<Self> {
        let mut e = Element::identity(g);
        for &w in word {
            let i = w.unsigned_abs() as usize;
            if i == 0 || i > g.n_atoms() {
                return Err(Error::IndexOutOfRange { index: w, max: g.n_atoms() });
            }
            let a = g.atom(i - 1);
            if w > 0 {
                e.append_simple(g, &a);
            } else {
                // x·a⁻¹ = x·∂(a)·Δ⁻¹
                e.append_simple(g, &g.partial(&a));
                e = e.times_delta_power(g, -1);
            }
        }
        Ok(e)
    }

    pub fn kind(&self) -> StructureKind {
        self.kind
    }

    pub fn strands(&self) -> usize {
        self.n as usize
    }

    pub fn inf(&self) -> i64 {
        self.inf
    }

    pub fn sup(&self) -> i64 {
        add_inf(self.inf, self.factors.len() as i64)
    }

    pub fn canonical_length(&self) -> usize {
        self.factors.len()
    }

    pub fn factors(&self) -> &[Simple] {
        &self.factors
    }

    pub fn first_factor(&self) -> Option<&Simple> {
        self.factors.first()
    }

    pub fn last_factor(&self) -> Option<&Simple> {
        self.factors.last()
    }

    pub fn is_identity(&self) -> bool {
        self.inf == 0 && self.factors.is_empty()
    }

    pub fn check_structure(&self, g: &dyn GarsideStructure) -> Result<()> {
        if self.kind != g.kind() || self.strands() != g.strands() {
            return Err(Error::StructureMismatch);
        }
        Ok(())
    }

    /// Exponent sum in the atoms; invariant under conjugation.
    pub fn exponent_sum(&self, g: &dyn GarsideStructure) -> i64 {
        let pos: usize = self.factors.iter().map(|s| g.atom_length(s)).sum();
        self.inf * g.delta_atom_length() as i64 + pos as i64
    }

    /// Does every adjacent pair satisfy ∂(s) ∧ t = 1, with no identity or Δ
    /// factor present?
    pub fn is_normal_form(&self, g: &dyn GarsideStructure) -> bool {
        if self.factors.iter().any(|s| g.is_identity(s) || g.is_delta(s)) {
            return false;
        }
        self.factors.windows(2).all(|w| g.is_identity(&g.left_meet(&g.partial(&w[0]), &w[1])))
    }

    /// Right-multiplies by a simple.
    pub fn append_simple(&mut self, g: &dyn GarsideStructure, s: &Simple) {
        if g.is_identity(s) {
            return;
        }
        self.factors.push(*s);
        let mut j = self.factors.len() - 1;
        while j > 0 {
            let (a, b) = (self.factors[j - 1], self.factors[j]);
            let m = g.left_meet(&g.partial(&a), &b);
            if g.is_identity(&m) {
                break;
            }
            self.factors[j - 1] = a.then(&m);
            self.factors[j] = m.left_quotient(&b);
            j -= 1;
        }
        self.cleanup(g);
    }

    /// Left-multiplies by a simple.
    pub fn prepend_simple(&mut self, g: &dyn GarsideStructure, t: &Simple) {
        if g.is_identity(t) {
            return;
        }
        // t·Δ^p = Δ^p·τ^p(t)
        let t = g.tau(t, self.inf);
        self.factors.insert(0, t);
        for j in 0..self.factors.len() - 1 {
            let (a, b) = (self.factors[j], self.factors[j + 1]);
            let m = g.left_meet(&g.partial(&a), &b);
            if g.is_identity(&m) {
                break;
            }
            self.factors[j] = a.then(&m);
            self.factors[j + 1] = m.left_quotient(&b);
        }
        self.cleanup(g);
    }

    fn cleanup(&mut self, g: &dyn GarsideStructure) {
        let leading = self.factors.iter().take_while(|s| g.is_delta(s)).count();
        if leading > 0 {
            self.factors.drain(..leading);
            self.inf = add_inf(self.inf, leading as i64);
        }
        while self.factors.last().is_some_and(|s| g.is_identity(s)) {
            self.factors.pop();
        }
    }

    /// self·Δ^k.
    pub fn times_delta_power(&self, g: &dyn GarsideStructure, k: i64) -> Element {
        Element {
            kind: self.kind,
            n: self.n,
            inf: add_inf(self.inf, k),
            factors: self.factors.iter().map(|s| g.tau(s, k)).collect(),
        }
    }

    /// τ^k(self); inf and sup are unchanged.
    pub fn tau_power(&self, g: &dyn GarsideStructure, k: i64) -> Element {
        if k.rem_euclid(g.tau_order() as i64) == 0 {
            return self.clone();
        }
        Element { factors: self.factors.iter().map(|s| g.tau(s, k)).collect(), ..self.clone() }
    }

    pub fn multiply(&self, g: &dyn GarsideStructure, other: &Element) -> Result<Element> {
        self.check_structure(g)?;
        other.check_structure(g)?;
        // Δ^p A · Δ^q B = Δ^{p+q} · τ^q(A) · B
        let inf = add_inf(self.inf, other.inf);
        let a: Vec<Simple> = self.factors.iter().map(|s| g.tau(s, other.inf)).collect();
        let mut out;
        if a.len() <= other.factors.len() {
            out = Element { inf: 0, ..other.clone() };
            for s in a.iter().rev() {
                out.prepend_simple(g, s);
            }
        } else {
            out = Element { inf: 0, factors: a, ..self.clone() };
            for s in &other.factors {
                out.append_simple(g, s);
            }
        }
        out.inf = add_inf(out.inf, inf);
        Ok(out)
    }

    pub fn inverse(&self, g: &dyn GarsideStructure) -> Element {
        // (Δ^p s₁⋯s_l)⁻¹ = Δ^{−p−l} ∏_k τ^{−(l−k)−p}(∂̃ s_{l+1−k})
        let l = self.factors.len() as i64;
        let factors: Vec<Simple> = (1..=l)
            .map(|k| {
                let s = &self.factors[(l - k) as usize];
                g.tau(&g.partial_inv(s), -(l - k) - self.inf)
            })
            .collect();
        let neg = self.inf.checked_neg().unwrap_or_else(|| panic!("infimum overflow: -({})", self.inf));
        let inf = add_inf(neg, -l);
        let out = Element { kind: self.kind, n: self.n, inf, factors };
        debug_assert!(out.is_normal_form(g));
        out
    }

    /// x⁻¹·self·x.
    pub fn conjugate(&self, g: &dyn GarsideStructure, x: &Element) -> Result<Element> {
        x.inverse(g).multiply(g, self)?.multiply(g, x)
    }

    /// s⁻¹·self·s for a simple s.
    pub fn conj_simple(&self, g: &dyn GarsideStructure, s: &Simple) -> Element {
        let mut out = self.clone();
        out.append_simple(g, s);
        // s⁻¹ = Δ⁻¹·∂̃(s)
        out.prepend_simple(g, &g.partial_inv(s));
        out.inf = add_inf(out.inf, -1);
        out
    }

    /// s·self·s⁻¹ for a simple s.
    pub fn conj_simple_inv(&self, g: &dyn GarsideStructure, s: &Simple) -> Element {
        // s = Δ·∂(s)⁻¹, so s·e·s⁻¹ = τ⁻¹(∂(s)⁻¹·e·∂(s))
        self.conj_simple(g, &g.partial(s)).tau_power(g, -1)
    }

    /// Signed word in 1-based atom indices.
    pub fn to_word(&self, g: &dyn GarsideStructure) -> Vec<i64> {
        let mut word = Vec::new();
        let delta_word = simple_to_word(g, &g.delta());
        if self.inf >= 0 {
            for _ in 0..self.inf {
                word.extend(&delta_word);
            }
        } else {
            let inv: Vec<i64> = delta_word.iter().rev().map(|&i| -i).collect();
            for _ in 0..-self.inf {
                word.extend(&inv);
            }
        }
        for s in &self.factors {
            word.extend(simple_to_word(g, s));
        }
        word
    }

    /// Permutation induced on the strands, as images.
    pub fn permutation(&self, g: &dyn GarsideStructure) -> Simple {
        let d = g.delta();
        let mut p = g.identity();
        let step = if self.inf >= 0 { d } else { d.inverse_perm() };
        for _ in 0..self.inf.unsigned_abs() {
            p = p.then(&step);
        }
        for s in &self.factors {
            p = p.then(s);
        }
        p
    }

    /// Canonical injective encoding; byte order matches (inf, l, factors).
    pub fn encode_into(&self, g: &dyn GarsideStructure, out: &mut Vec<u8>) {
        out.extend_from_slice(&((self.inf as u64) ^ (1 << 63)).to_be_bytes());
        out.extend_from_slice(&(self.factors.len() as u32).to_be_bytes());
        for s in &self.factors {
            g.encode_into(s, out);
        }
    }

    pub fn encode(&self, g: &dyn GarsideStructure) -> Vec<u8> {
        let mut out = Vec::new();
        self.encode_into(g, &mut out);
        out
    }

    /// Inverse of [`Element::encode_into`]; advances `pos`.
    pub fn decode(g: &dyn GarsideStructure, bytes: &[u8], pos: &mut usize) -> Option<Element> {
        let n = g.strands();
        let inf_bytes: [u8; 8] = bytes.get(*pos..*pos + 8)?.try_into().ok()?;
        let len_bytes: [u8; 4] = bytes.get(*pos + 8..*pos + 12)?.try_into().ok()?;
        *pos += 12;
        let inf = (u64::from_be_bytes(inf_bytes) ^ (1 << 63)) as i64;
        let l = u32::from_be_bytes(len_bytes) as usize;
        let mut factors = Vec::with_capacity(l);
        for _ in 0..l {
            factors.push(g.decode(bytes.get(*pos..*pos + n)?)?);
            *pos += n;
        }
        Some(Element { kind: g.kind(), n: n as u8, inf, factors })
    }
}

/// Atom word (1-based indices) of a simple, peeling left atoms greedily.
pub fn simple_to_word(g: &dyn GarsideStructure, s: &Simple) -> Vec<i64> {
    let mut rest = *s;
    let mut word = Vec::with_capacity(g.atom_length(s));
    while !g.is_identity(&rest) {
        let i = (0..g.n_atoms())
            .find(|&i| g.atom_left_divides(i, &rest))
            .expect("non-identity simple has a left atom");
        rest = g.atom(i).left_quotient(&rest);
        word.push(i as i64 + 1);
    }
    word
}

/// Left normal form of a signed atom word.
pub fn make_element(g: &dyn GarsideStructure, word: &[i64]) -> Result<Element> {
    Element::from_word(g, word)
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Δ^{}", self.inf)?;
        for s in &self.factors {
            write!(f, "·{s:?}")?;
        }
        Ok(())
    }
}
