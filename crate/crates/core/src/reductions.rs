//! Protocol problems built on commuting subgroups, and their reductions to
//! the search version of simultaneous conjugacy.

use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicUsize, Ordering};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::braid::sigma_word;
use crate::element::Element;
use crate::error::{Error, Result};
use crate::experiment::{default_word_length, random_element_with};
use crate::garside::GarsideStructure;
use crate::solver::{scp_search, ScpOptions};
use crate::tuple::TupleElement;

/// A finitely generated subgroup, given by its generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubgroupSpec {
    generators: Vec<Element>,
}

impl SubgroupSpec {
    pub fn new(generators: Vec<Element>) -> Result<Self> {
        // TupleElement::new enforces the same invariants.
        Ok(SubgroupSpec { generators: TupleElement::new(generators)?.into_entries() })
    }

    pub fn generators(&self) -> &[Element] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn tuple(&self) -> TupleElement {
        TupleElement::new(self.generators.clone()).expect("nonempty by construction")
    }

    /// Product of `len` generators or their inverses, chosen uniformly.
    pub fn random_member<R: Rng + ?Sized>(&self, g: &dyn GarsideStructure, len: usize, rng: &mut R) -> Element {
        let mut x = Element::identity(g);
        for _ in 0..len {
            let h = &self.generators[rng.gen_range(0..self.generators.len())];
            let h = if rng.gen_bool(0.5) { h.clone() } else { h.inverse(g) };
            x = x.multiply(g, &h).expect("same structure");
        }
        x
    }

    /// Whether every generator commutes with every generator of `other`.
    pub fn commutes_with(&self, g: &dyn GarsideStructure, other: &SubgroupSpec) -> Result<bool> {
        for x in &self.generators {
            for y in &other.generators {
                if !commute(g, x, y)? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Whether `x` commutes with every generator.
    pub fn centralizes(&self, g: &dyn GarsideStructure, x: &Element) -> Result<bool> {
        for y in &self.generators {
            if !commute(g, x, y)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

fn commute(g: &dyn GarsideStructure, x: &Element, y: &Element) -> Result<bool> {
    Ok(x.multiply(g, y)? == y.multiply(g, x)?)
}

fn product(g: &dyn GarsideStructure, xs: &[&Element]) -> Result<Element> {
    xs.iter().try_fold(Element::identity(g), |acc, x| acc.multiply(g, x))
}

/// Solver for the search problem: some x with `a^x = c`, or none.
pub trait SearchScpOracle: Sync {
    fn search(&self, g: &dyn GarsideStructure, a: &TupleElement, c: &TupleElement) -> Result<Option<Element>>;
}

/// Oracle backed by [`scp_search`].
#[derive(Debug, Default)]
pub struct SolverOracle {
    pub opts: ScpOptions,
    calls: AtomicUsize,
}

impl SolverOracle {
    pub fn new(opts: ScpOptions) -> Self {
        SolverOracle { opts, calls: AtomicUsize::new(0) }
    }

    pub fn calls(&self) -> usize {
        self.calls.load(Ordering::Relaxed)
    }
}

impl SearchScpOracle for SolverOracle {
    fn search(&self, g: &dyn GarsideStructure, a: &TupleElement, c: &TupleElement) -> Result<Option<Element>> {
        self.calls.fetch_add(1, Ordering::Relaxed);
        Ok(scp_search(g, a, c, &self.opts)?.witness())
    }
}

/// Answers with the first candidate that conjugates `a` to `c`.
#[derive(Debug, Clone)]
pub struct KnownConjugatorsOracle {
    pub candidates: Vec<Element>,
}

impl SearchScpOracle for KnownConjugatorsOracle {
    fn search(&self, g: &dyn GarsideStructure, a: &TupleElement, c: &TupleElement) -> Result<Option<Element>> {
        for x in &self.candidates {
            if a.conjugate(g, x)? == *c {
                return Ok(Some(x.clone()));
            }
        }
        Ok(None)
    }
}

/// Multiplies every answer of `inner` by the central element Δ^{k·ord τ}.
#[derive(Debug)]
pub struct CentralPerturbation<O> {
    pub inner: O,
    pub k: i64,
}

impl<O: SearchScpOracle> SearchScpOracle for CentralPerturbation<O> {
    fn search(&self, g: &dyn GarsideStructure, a: &TupleElement, c: &TupleElement) -> Result<Option<Element>> {
        let shift = self.k * g.tau_order() as i64;
        Ok(self.inner.search(g, a, c)?.map(|x| x.times_delta_power(g, shift)))
    }
}

fn ask(g: &dyn GarsideStructure, oracle: &dyn SearchScpOracle, a: &TupleElement, c: &TupleElement) -> Result<Element> {
    let x = oracle.search(g, a, c)?.ok_or(Error::OracleFailed)?;
    if a.conjugate(g, &x)? != *c {
        return Err(Error::OracleFailed);
    }
    Ok(x)
}

fn tuple_of(entries: Vec<Element>) -> Result<TupleElement> {
    TupleElement::new(entries)
}

/// `base^{ab}` from `base^a` and `base^b`, where `a` commutes with `b_spec`
/// and `b` lies in it.
pub fn dh_recover(
    g: &dyn GarsideStructure,
    base: &Element,
    b_spec: &SubgroupSpec,
    g_a: &Element,
    g_b: &Element,
    oracle: &dyn SearchScpOracle,
) -> Result<Element> {
    let mut src = vec![base.clone()];
    src.extend_from_slice(b_spec.generators());
    let mut dst = vec![g_a.clone()];
    dst.extend_from_slice(b_spec.generators());
    let a = ask(g, oracle, &tuple_of(src)?, &tuple_of(dst)?)?;
    g_b.conjugate(g, &a)
}

/// `ã₁·v·ã₂` for the oracle's ã₂ with `(b₁ⱼ^g, b₂ⱼ)^{ã₂} = (b₁ⱼ^u, b₂ⱼ)`.
fn two_sided_recover(
    g: &dyn GarsideStructure,
    base: &Element,
    left: &SubgroupSpec,
    right: &SubgroupSpec,
    u: &Element,
    v: &Element,
    oracle: &dyn SearchScpOracle,
) -> Result<Element> {
    let mut src = Vec::with_capacity(left.len() + right.len());
    let mut dst = Vec::with_capacity(left.len() + right.len());
    for h in left.generators() {
        src.push(h.conjugate(g, base)?);
        dst.push(h.conjugate(g, u)?);
    }
    src.extend_from_slice(right.generators());
    dst.extend_from_slice(right.generators());
    let a2 = ask(g, oracle, &tuple_of(src)?, &tuple_of(dst)?)?;
    let a1 = u.multiply(g, &base.multiply(g, &a2)?.inverse(g))?;
    product(g, &[&a1, v, &a2])
}

/// `a₁b₁ga₂b₂` from `u = a₁ga₂` and `v = b₁gb₂`, with `[A₁,B₁] = [A₂,B₂] = 1`.
pub fn double_coset_recover(
    g: &dyn GarsideStructure,
    base: &Element,
    b1: &SubgroupSpec,
    b2: &SubgroupSpec,
    u: &Element,
    v: &Element,
    oracle: &dyn SearchScpOracle,
) -> Result<Element> {
    two_sided_recover(g, base, b1, b2, u, v, oracle)
}

/// `[a,b] = a⁻¹b⁻¹ab` from the generators of A conjugated by b and the
/// generators of B conjugated by a. `ca`, `cb` generate the centralizers
/// of A and B.
#[allow(clippy::too_many_arguments)]
pub fn commutator_recover(
    g: &dyn GarsideStructure,
    a_spec: &SubgroupSpec,
    b_spec: &SubgroupSpec,
    ca: &SubgroupSpec,
    cb: &SubgroupSpec,
    conj_a: &TupleElement,
    conj_b: &TupleElement,
    oracle: &dyn SearchScpOracle,
) -> Result<Element> {
    if conj_a.r() != a_spec.len() {
        return Err(Error::DimensionMismatch { expected: a_spec.len(), got: conj_a.r() });
    }
    if conj_b.r() != b_spec.len() {
        return Err(Error::DimensionMismatch { expected: b_spec.len(), got: conj_b.r() });
    }
    if !ca.commutes_with(g, a_spec)? || !cb.commutes_with(g, b_spec)? {
        return Err(Error::BadParameter("centralizer generators do not commute with the subgroup".into()));
    }
    let side = |gens: &SubgroupSpec, conj: &TupleElement, cent: &SubgroupSpec| -> Result<Element> {
        let mut src = gens.generators().to_vec();
        src.extend_from_slice(cent.generators());
        let mut dst = conj.entries().to_vec();
        dst.extend_from_slice(cent.generators());
        ask(g, oracle, &tuple_of(src)?, &tuple_of(dst)?)
    };
    let a = side(b_spec, conj_b, ca)?;
    let b = side(a_spec, conj_a, cb)?;
    product(g, &[&a.inverse(g), &b.inverse(g), &a, &b])
}

/// `a₁b₁ga₂b₂` from `u = a₁ga₂` and `v = b₁gb₂`, where `C` centralizes a₁
/// and contains b₁, a₂ lies in D, and b₂ lies in the group of `d_cent`,
/// which centralizes D.
pub fn centralizer_protocol_recover(
    g: &dyn GarsideStructure,
    base: &Element,
    c: &SubgroupSpec,
    d_cent: &SubgroupSpec,
    u: &Element,
    v: &Element,
    oracle: &dyn SearchScpOracle,
) -> Result<Element> {
    two_sided_recover(g, base, c, d_cent, u, v, oracle)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ProblemKind {
    Dh,
    DoubleCoset,
    Commutator,
    Centralizer,
}

impl ProblemKind {
    pub const ALL: [ProblemKind; 4] = [ProblemKind::Dh, ProblemKind::DoubleCoset, ProblemKind::Commutator, ProblemKind::Centralizer];

    pub fn token(self) -> &'static str {
        match self {
            ProblemKind::Dh => "dh",
            ProblemKind::DoubleCoset => "dcp",
            ProblemKind::Commutator => "commutator",
            ProblemKind::Centralizer => "centralizer",
        }
    }
}

impl FromStr for ProblemKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "dh" => Ok(ProblemKind::Dh),
            "dcp" | "double_coset" => Ok(ProblemKind::DoubleCoset),
            "commutator" => Ok(ProblemKind::Commutator),
            "centralizer" => Ok(ProblemKind::Centralizer),
            other => Err(Error::Parse(format!("unknown problem {other:?}"))),
        }
    }
}

impl fmt::Display for ProblemKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

/// Public inputs of a protocol instance.
#[derive(Debug, Clone)]
pub enum Instance {
    Dh { base: Element, b: SubgroupSpec, g_a: Element, g_b: Element },
    DoubleCoset { base: Element, b1: SubgroupSpec, b2: SubgroupSpec, u: Element, v: Element },
    Commutator { a: SubgroupSpec, b: SubgroupSpec, ca: SubgroupSpec, cb: SubgroupSpec, conj_a: TupleElement, conj_b: TupleElement },
    Centralizer { base: Element, c: SubgroupSpec, d_cent: SubgroupSpec, u: Element, v: Element },
}

impl Instance {
    pub fn problem(&self) -> ProblemKind {
        match self {
            Instance::Dh { .. } => ProblemKind::Dh,
            Instance::DoubleCoset { .. } => ProblemKind::DoubleCoset,
            Instance::Commutator { .. } => ProblemKind::Commutator,
            Instance::Centralizer { .. } => ProblemKind::Centralizer,
        }
    }
}

/// Private data of a generated instance.
#[derive(Debug, Clone)]
pub struct GroundTruth {
    /// The shared value the protocol computes.
    pub shared: Element,
    /// Conjugators that answer the reduction's oracle queries.
    pub conjugators: Vec<Element>,
}

impl GroundTruth {
    pub fn oracle(&self) -> KnownConjugatorsOracle {
        KnownConjugatorsOracle { candidates: self.conjugators.clone() }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceParams {
    /// Atom length of the public base element.
    pub public_length: usize,
    /// Number of generator factors in each private element.
    pub private_length: usize,
    /// Generator count of generic subgroups.
    pub generators: usize,
    /// Atom length of generic generators; ⌈2N·log₂N⌉ when unset.
    pub generator_length: Option<usize>,
}

impl Default for InstanceParams {
    fn default() -> Self {
        InstanceParams { public_length: 12, private_length: 6, generators: 2, generator_length: None }
    }
}

/// σ₁..σ_{m−1} and σ_{m+1}..σ_{N−1} with m = ⌊N/2⌋: braids on disjoint
/// strand ranges.
pub fn split_subgroups(g: &dyn GarsideStructure) -> Result<(SubgroupSpec, SubgroupSpec)> {
    let n = g.strands();
    if n < 4 {
        return Err(Error::BadParameter(format!("split subgroups need at least 4 strands, got {n}")));
    }
    let m = n / 2;
    let gens = |range: std::ops::Range<usize>| -> Result<SubgroupSpec> {
        let gens = range
            .map(|i| Element::from_word(g, &sigma_word(g, &[i as i64])?))
            .collect::<Result<Vec<_>>>()?;
        SubgroupSpec::new(gens)
    };
    let left = gens(1..m)?;
    let right = gens(m + 1..n)?;
    if !left.commutes_with(g, &right)? {
        return Err(Error::BadParameter("split subgroups do not commute".into()));
    }
    Ok((left, right))
}

/// Generator of the centre: Δ^{ord τ}.
pub fn central_element(g: &dyn GarsideStructure) -> Element {
    Element::delta_power(g, g.tau_order() as i64)
}

fn require(cond: bool, what: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::BadParameter(format!("generated instance violates: {what}")))
    }
}

/// Random instance of `problem`, deterministic in `seed`.
pub fn gen_instance(g: &dyn GarsideStructure, problem: ProblemKind, params: &InstanceParams, seed: u64) -> Result<(Instance, GroundTruth)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let len = params.private_length;
    match problem {
        ProblemKind::Dh => {
            let (left, right) = split_subgroups(g)?;
            let base = random_element_with(g, params.public_length, &mut rng);
            let a = left.random_member(g, len, &mut rng);
            let b = right.random_member(g, len, &mut rng);
            require(right.centralizes(g, &a)?, "a commutes with B")?;
            let shared = base.conjugate(g, &a.multiply(g, &b)?)?;
            let inst = Instance::Dh { g_a: base.conjugate(g, &a)?, g_b: base.conjugate(g, &b)?, base, b: right };
            Ok((inst, GroundTruth { shared, conjugators: vec![a] }))
        }
        ProblemKind::DoubleCoset => {
            // A₁ = B₂ = left, B₁ = A₂ = right.
            let (left, right) = split_subgroups(g)?;
            let base = random_element_with(g, params.public_length, &mut rng);
            let a1 = left.random_member(g, len, &mut rng);
            let a2 = right.random_member(g, len, &mut rng);
            let b1 = right.random_member(g, len, &mut rng);
            let b2 = left.random_member(g, len, &mut rng);
            require(commute(g, &a1, &b1)? && commute(g, &a2, &b2)?, "[A₁,B₁] = [A₂,B₂] = 1")?;
            let u = product(g, &[&a1, &base, &a2])?;
            let v = product(g, &[&b1, &base, &b2])?;
            let shared = product(g, &[&a1, &b1, &base, &a2, &b2])?;
            let inst = Instance::DoubleCoset { base, b1: right, b2: left, u, v };
            Ok((inst, GroundTruth { shared, conjugators: vec![a2] }))
        }
        ProblemKind::Commutator => {
            if params.generators == 0 {
                return Err(Error::BadParameter("generator count must be positive".into()));
            }
            let glen = params.generator_length.unwrap_or_else(|| default_word_length(g.strands()));
            let generic = |rng: &mut ChaCha8Rng| {
                SubgroupSpec::new((0..params.generators).map(|_| random_element_with(g, glen, rng)).collect())
            };
            let a_spec = generic(&mut rng)?;
            let b_spec = generic(&mut rng)?;
            let cent = SubgroupSpec::new(vec![central_element(g)])?;
            let a = a_spec.random_member(g, len, &mut rng);
            let b = b_spec.random_member(g, len, &mut rng);
            let shared = product(g, &[&a.inverse(g), &b.inverse(g), &a, &b])?;
            let inst = Instance::Commutator {
                conj_a: a_spec.tuple().conjugate(g, &b)?,
                conj_b: b_spec.tuple().conjugate(g, &a)?,
                a: a_spec,
                b: b_spec,
                ca: cent.clone(),
                cb: cent,
            };
            Ok((inst, GroundTruth { shared, conjugators: vec![a, b] }))
        }
        ProblemKind::Centralizer => {
            // a₁, a₂ on the left strands; C = right strands; b₂ in ⟨right, centre⟩.
            let (left, right) = split_subgroups(g)?;
            let mut d_gens = right.generators().to_vec();
            d_gens.push(central_element(g));
            let d_cent = SubgroupSpec::new(d_gens)?;
            require(d_cent.commutes_with(g, &left)?, "D_cent centralizes D")?;
            let base = random_element_with(g, params.public_length, &mut rng);
            let a1 = left.random_member(g, len, &mut rng);
            let a2 = left.random_member(g, len, &mut rng);
            let b1 = right.random_member(g, len, &mut rng);
            let b2 = d_cent.random_member(g, len, &mut rng);
            require(right.centralizes(g, &a1)?, "C centralizes a₁")?;
            let u = product(g, &[&a1, &base, &a2])?;
            let v = product(g, &[&b1, &base, &b2])?;
            let shared = product(g, &[&a1, &b1, &base, &a2, &b2])?;
            let inst = Instance::Centralizer { base, c: right, d_cent, u, v };
            Ok((inst, GroundTruth { shared, conjugators: vec![a2] }))
        }
    }
}

/// Runs the reduction matching the instance.
pub fn recover(g: &dyn GarsideStructure, inst: &Instance, oracle: &dyn SearchScpOracle) -> Result<Element> {
    match inst {
        Instance::Dh { base, b, g_a, g_b } => dh_recover(g, base, b, g_a, g_b, oracle),
        Instance::DoubleCoset { base, b1, b2, u, v } => double_coset_recover(g, base, b1, b2, u, v, oracle),
        Instance::Commutator { a, b, ca, cb, conj_a, conj_b } => commutator_recover(g, a, b, ca, cb, conj_a, conj_b, oracle),
        Instance::Centralizer { base, c, d_cent, u, v } => centralizer_protocol_recover(g, base, c, d_cent, u, v, oracle),
    }
}
