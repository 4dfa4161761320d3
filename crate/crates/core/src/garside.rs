//! The Garside structure capability interface and the simple-element
//! lattice built on top of it.
//!
//! A structure only has to supply the primitive operations (atoms, Δ,
//! divisibility tests, τ, encoding). Meets have a generic greedy
//! implementation in [`generic`]; joins and complements are derived from
//! meets through the complement bijection ∂.

use std::fmt;

use crate::error::{Error, Result};
use crate::simple::Simple;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StructureKind {
    Artin,
    Bkl,
}

impl StructureKind {
    pub fn token(self) -> &'static str {
        match self {
            StructureKind::Artin => "artin",
            StructureKind::Bkl => "bkl",
        }
    }
}

impl std::str::FromStr for StructureKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "artin" => Ok(StructureKind::Artin),
            "bkl" => Ok(StructureKind::Bkl),
            other => Err(Error::Parse(format!("unknown structure {other:?}"))),
        }
    }
}

impl fmt::Display for StructureKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

/// Lattice operations on simple elements.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LatticeOp {
    /// Greatest common left divisor `s ∧ t`.
    MeetLeft,
    /// Greatest common right divisor `s ∧̃ t`.
    MeetRight,
    /// Least common left multiple `s ∨̃ t`.
    JoinLeft,
    /// Least common right multiple `s ∨ t`.
    JoinRight,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Right,
    Left,
}

/// A concrete Garside structure on a group whose simple elements are
/// permutation-like [`Simple`] values.
///
/// `s ≼ t` is left divisibility (`t = s·u`), `t ≽ s` is right divisibility
/// (`t = u·s`).
pub trait GarsideStructure: Send + Sync + fmt::Debug {
    fn kind(&self) -> StructureKind;
    fn strands(&self) -> usize;
    fn n_atoms(&self) -> usize;
    /// Atom with 0-based index `i`.
    fn atom(&self, i: usize) -> Simple;
    fn delta(&self) -> Simple;
    /// ∥Δ∥, the number of atoms in any expression of Δ.
    fn delta_atom_length(&self) -> usize;
    /// Order of τ on the simple elements.
    fn tau_order(&self) -> usize;
    /// Number of atoms in any expression of `s` (both monoids are homogeneous).
    fn atom_length(&self, s: &Simple) -> usize;
    /// Membership of a permutation in Div(Δ).
    fn is_simple(&self, p: &Simple) -> bool;
    fn left_divides(&self, s: &Simple, t: &Simple) -> bool;
    /// `t ≽ s`.
    fn right_divides(&self, t: &Simple, s: &Simple) -> bool;
    /// Canonical byte encoding; injective on simples.
    fn encode_into(&self, s: &Simple, out: &mut Vec<u8>);
    fn decode(&self, bytes: &[u8]) -> Option<Simple>;

    fn name(&self) -> String {
        format!("{}({})", self.kind(), self.strands())
    }

    fn encode(&self, s: &Simple) -> Vec<u8> {
        let mut out = Vec::with_capacity(self.strands());
        self.encode_into(s, &mut out);
        out
    }

    /// Does atom `i` left-divide `s`?
    fn atom_left_divides(&self, i: usize, s: &Simple) -> bool {
        self.left_divides(&self.atom(i), s)
    }

    /// Does atom `i` right-divide `s`?
    fn atom_right_divides(&self, i: usize, s: &Simple) -> bool {
        self.right_divides(s, &self.atom(i))
    }

    fn left_meet(&self, s: &Simple, t: &Simple) -> Simple {
        generic::left_meet(self, s, t)
    }

    fn right_meet(&self, s: &Simple, t: &Simple) -> Simple {
        generic::right_meet(self, s, t)
    }

    fn identity(&self) -> Simple {
        Simple::identity(self.strands())
    }

    fn is_identity(&self, s: &Simple) -> bool {
        s.is_identity_perm()
    }

    fn is_delta(&self, s: &Simple) -> bool {
        *s == self.delta()
    }

    /// The product `s·t` when it is again simple.
    fn simple_product_if_simple(&self, s: &Simple, t: &Simple) -> Option<Simple> {
        let p = s.then(t);
        (self.is_simple(&p) && self.atom_length(&p) == self.atom_length(s) + self.atom_length(t))
            .then_some(p)
    }

    /// τ^k(s) with τ(s) = Δ⁻¹sΔ.
    fn tau(&self, s: &Simple, k: i64) -> Simple {
        let order = self.tau_order() as i64;
        let k = k.rem_euclid(order);
        if k == 0 {
            return *s;
        }
        let delta = self.delta();
        let mut conj = delta;
        for _ in 1..k {
            conj = conj.then(&delta);
        }
        s.relabel(&conj)
    }

    /// ∂(s) = s⁻¹Δ.
    fn partial(&self, s: &Simple) -> Simple {
        s.left_quotient(&self.delta())
    }

    /// ∂̃(s) = Δs⁻¹, the inverse of ∂ on simples.
    fn partial_inv(&self, s: &Simple) -> Simple {
        self.delta().right_quotient(s)
    }

    /// s ∨ t, computed as ∂̃(∂s ∧̃ ∂t).
    fn right_join(&self, s: &Simple, t: &Simple) -> Simple {
        self.partial_inv(&self.right_meet(&self.partial(s), &self.partial(t)))
    }

    /// s ∨̃ t, computed as ∂(∂̃s ∧ ∂̃t).
    fn left_join(&self, s: &Simple, t: &Simple) -> Simple {
        self.partial(&self.left_meet(&self.partial_inv(s), &self.partial_inv(t)))
    }

    /// Right complement `s\t`: `s·(s\t) = s ∨ t`.
    fn under(&self, s: &Simple, t: &Simple) -> Simple {
        s.left_quotient(&self.right_join(s, t))
    }

    /// Left complement `t/s`: `(t/s)·s = t ∨̃ s`.
    fn over(&self, t: &Simple, s: &Simple) -> Simple {
        self.left_join(t, s).right_quotient(s)
    }
}

/// Lattice operation dispatcher.
pub fn lattice(g: &dyn GarsideStructure, s: &Simple, t: &Simple, op: LatticeOp) -> Result<Simple> {
    check_pair(g, s, t)?;
    Ok(match op {
        LatticeOp::MeetLeft => g.left_meet(s, t),
        LatticeOp::MeetRight => g.right_meet(s, t),
        LatticeOp::JoinLeft => g.left_join(s, t),
        LatticeOp::JoinRight => g.right_join(s, t),
    })
}

/// `s\t` for [`Side::Right`], `t/s` for [`Side::Left`].
pub fn complement(g: &dyn GarsideStructure, s: &Simple, t: &Simple, side: Side) -> Result<Simple> {
    check_pair(g, s, t)?;
    Ok(match side {
        Side::Right => g.under(s, t),
        Side::Left => g.over(t, s),
    })
}

/// ∂^k(s); negative powers use ∂̃.
pub fn partial(g: &dyn GarsideStructure, s: &Simple, k: i64) -> Simple {
    // ∂² = τ, so reduce to at most one application of ∂ or ∂̃.
    let tau_part = k.div_euclid(2);
    let t = g.tau(s, tau_part);
    if k.rem_euclid(2) == 1 {
        g.partial(&t)
    } else {
        t
    }
}

fn check_pair(g: &dyn GarsideStructure, s: &Simple, t: &Simple) -> Result<()> {
    if s.strands() != g.strands() || t.strands() != g.strands() || !g.is_simple(s) || !g.is_simple(t) {
        return Err(Error::StructureMismatch);
    }
    Ok(())
}

/// Structure-independent implementations from the primitive operations only.
/// The built-in structures override these with fast paths; the generic path
/// stays available as a reference.
pub mod generic {
    use super::GarsideStructure;
    use crate::simple::Simple;

    /// Greedy gcd: extend by atoms while the result stays a common left divisor.
    pub fn left_meet<G: GarsideStructure + ?Sized>(g: &G, s: &Simple, t: &Simple) -> Simple {
        let mut m = g.identity();
        'grow: loop {
            for i in 0..g.n_atoms() {
                if let Some(next) = g.simple_product_if_simple(&m, &g.atom(i)) {
                    if g.left_divides(&next, s) && g.left_divides(&next, t) {
                        m = next;
                        continue 'grow;
                    }
                }
            }
            return m;
        }
    }

    pub fn right_meet<G: GarsideStructure + ?Sized>(g: &G, s: &Simple, t: &Simple) -> Simple {
        let mut m = g.identity();
        'grow: loop {
            for i in 0..g.n_atoms() {
                if let Some(next) = g.simple_product_if_simple(&g.atom(i), &m) {
                    if g.right_divides(s, &next) && g.right_divides(t, &next) {
                        m = next;
                        continue 'grow;
                    }
                }
            }
            return m;
        }
    }

    pub fn right_join<G: GarsideStructure + ?Sized>(g: &G, s: &Simple, t: &Simple) -> Simple {
        g.partial_inv(&right_meet(g, &g.partial(s), &g.partial(t)))
    }

    pub fn left_join<G: GarsideStructure + ?Sized>(g: &G, s: &Simple, t: &Simple) -> Simple {
        g.partial(&left_meet(g, &g.partial_inv(s), &g.partial_inv(t)))
    }
}
