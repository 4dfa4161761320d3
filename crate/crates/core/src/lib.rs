//! Simultaneous conjugacy in Garside groups, with braid groups under the
//! Artin and Birman–Ko–Lee structures as the concrete instances.
//!
//! Conjugation follows `g^x = x⁻¹·g·x` throughout.

pub mod braid;
pub mod element;
pub mod error;
pub mod experiment;
pub mod reductions;
pub mod garside;
pub mod simple;
pub mod solver;
pub mod tuple;
pub mod word;

pub use braid::{artin_structure, bkl_structure, enumerate_simples, structure, ArtinStructure, BklStructure};
pub use element::{make_element, Element};
pub use error::{Error, Result};
pub use garside::{complement, lattice, partial, GarsideStructure, LatticeOp, Side, StructureKind};
pub use simple::Simple;
pub use tuple::{Bound, Interval, TupleElement};
pub use reductions::{gen_instance, recover, InstanceParams, ProblemKind, SearchScpOracle, SolverOracle, SubgroupSpec};
pub use solver::{invariant_set, lex_minimal_interval, scp_decide, scp_search, Decision, InvariantKind, OrbitOptions, ScpOptions, SearchOutcome};
