//! Seeded random instances and the set-size experiments.

use std::fmt;
use std::io::Write;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::braid::structure;
use crate::element::Element;
use crate::error::{Error, Result};
use crate::garside::{GarsideStructure, StructureKind};
use crate::solver::{invariant_set, orbit_in_interval, InvariantKind, OrbitOptions, OrbitSet, DEFAULT_CAP};
use crate::tuple::{Interval, TupleElement};

/// Environment variable overriding the number of worker threads.
pub const WORKERS_ENV: &str = "SCP_WORKERS";

/// ⌈2N·log₂N⌉.
pub fn default_word_length(n: usize) -> usize {
    (2.0 * n as f64 * (n as f64).log2()).ceil() as usize
}

/// Signed word of uniformly chosen atoms, each inverted with probability 1/2.
pub fn random_word<R: Rng + ?Sized>(g: &dyn GarsideStructure, len: usize, rng: &mut R) -> Vec<i64> {
    (0..len)
        .map(|_| {
            let i = rng.gen_range(1..=g.n_atoms()) as i64;
            if rng.gen_bool(0.5) {
                -i
            } else {
                i
            }
        })
        .collect()
}

pub fn random_element_with<R: Rng + ?Sized>(g: &dyn GarsideStructure, len: usize, rng: &mut R) -> Element {
    Element::from_word(g, &random_word(g, len, rng)).expect("random words use valid atoms")
}

pub fn random_element(g: &dyn GarsideStructure, seed: u64) -> Element {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_element_with(g, default_word_length(g.strands()), &mut rng)
}

/// `a = b^x`, `c = b^y`; so `a^{x⁻¹y} = c`.
#[derive(Debug, Clone)]
pub struct ConjugatePair {
    pub b: TupleElement,
    pub x: Element,
    pub y: Element,
    pub a: TupleElement,
    pub c: TupleElement,
}

impl ConjugatePair {
    pub fn witness(&self, g: &dyn GarsideStructure) -> Element {
        self.x.inverse(g).multiply(g, &self.y).expect("same structure")
    }
}

pub fn random_conjugate_pair_with<R: Rng + ?Sized>(g: &dyn GarsideStructure, r: usize, len: usize, rng: &mut R) -> ConjugatePair {
    let b = TupleElement::new((0..r).map(|_| random_element_with(g, len, rng)).collect()).expect("r ≥ 1");
    let x = random_element_with(g, len, rng);
    let y = random_element_with(g, len, rng);
    let a = b.conjugate(g, &x).expect("same structure");
    let c = b.conjugate(g, &y).expect("same structure");
    ConjugatePair { b, x, y, a, c }
}

pub fn random_conjugate_pair(g: &dyn GarsideStructure, r: usize, seed: u64) -> ConjugatePair {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_conjugate_pair_with(g, r, default_word_length(g.strands()), &mut rng)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ExperimentKind {
    /// a^G ∩ [inf c, ∞]
    #[serde(rename = "LL_interval")]
    LlInterval,
    /// a^G ∩ [inf c, sup c]
    #[serde(rename = "inf_sup")]
    InfSup,
    #[serde(rename = "LSS")]
    Lss,
    #[serde(rename = "LSSS")]
    Lsss,
}

impl ExperimentKind {
    pub const ALL: [ExperimentKind; 4] = [ExperimentKind::LlInterval, ExperimentKind::InfSup, ExperimentKind::Lss, ExperimentKind::Lsss];

    pub fn token(self) -> &'static str {
        match self {
            ExperimentKind::LlInterval => "LL_interval",
            ExperimentKind::InfSup => "inf_sup",
            ExperimentKind::Lss => "LSS",
            ExperimentKind::Lsss => "LSSS",
        }
    }
}

impl FromStr for ExperimentKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ExperimentKind::ALL
            .into_iter()
            .find(|k| k.token().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parse(format!("unknown experiment kind {s:?}")))
    }
}

impl fmt::Display for ExperimentKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

/// A set size, or ∞ when the cap was exceeded.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SetSize {
    Finite(usize),
    Infinite,
}

impl SetSize {
    pub fn of(set: &OrbitSet) -> SetSize {
        if set.truncated {
            SetSize::Infinite
        } else {
            SetSize::Finite(set.len())
        }
    }

    pub fn finite(self) -> Option<usize> {
        match self {
            SetSize::Finite(n) => Some(n),
            SetSize::Infinite => None,
        }
    }
}

impl fmt::Display for SetSize {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SetSize::Finite(n) => write!(f, "{n}"),
            SetSize::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for SetSize {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            SetSize::Finite(n) => ser.serialize_u64(*n as u64),
            SetSize::Infinite => ser.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for SetSize {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            N(usize),
            S(String),
        }
        match Repr::deserialize(de)? {
            Repr::N(n) => Ok(SetSize::Finite(n)),
            Repr::S(s) if s == "inf" => Ok(SetSize::Infinite),
            Repr::S(s) => Err(serde::de::Error::custom(format!("bad size {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentConfig {
    pub structure: StructureKind,
    #[serde(rename = "N")]
    pub n: usize,
    pub r: usize,
    pub trials: usize,
    #[serde(default = "default_cap")]
    pub cap: usize,
    #[serde(default = "default_true")]
    pub mod_tau: bool,
    #[serde(default = "all_kinds")]
    pub kinds: Vec<ExperimentKind>,
    #[serde(default)]
    pub seed: u64,
    /// Overrides ⌈2N·log₂N⌉.
    #[serde(default)]
    pub word_length: Option<usize>,
    #[serde(default)]
    pub output: Option<String>,
}

fn default_cap() -> usize {
    DEFAULT_CAP
}

fn default_true() -> bool {
    true
}

fn all_kinds() -> Vec<ExperimentKind> {
    ExperimentKind::ALL.to_vec()
}

impl ExperimentConfig {
    pub fn new(structure: StructureKind, n: usize, r: usize, trials: usize, seed: u64) -> Self {
        ExperimentConfig {
            structure,
            n,
            r,
            trials,
            cap: DEFAULT_CAP,
            mod_tau: true,
            kinds: all_kinds(),
            seed,
            word_length: None,
            output: None,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.trials == 0 || self.cap == 0 || self.r == 0 || self.kinds.is_empty() {
            return Err(Error::BadParameter("trials, cap, r and kinds must be positive".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StatRow {
    pub kind: ExperimentKind,
    pub structure: StructureKind,
    #[serde(rename = "N")]
    pub n: usize,
    pub r: usize,
    pub min: SetSize,
    pub median: SetSize,
    pub max: SetSize,
    pub failure_pct: f64,
    pub trials: usize,
}

/// Sizes of every requested kind for one trial, in `cfg.kinds` order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrialResult {
    pub sizes: Vec<SetSize>,
}

/// Runs one trial; its instance depends only on `cfg.seed` and `trial`.
pub fn run_trial(g: &dyn GarsideStructure, cfg: &ExperimentConfig, trial: u64) -> Result<TrialResult> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    rng.set_stream(trial);
    let len = cfg.word_length.unwrap_or_else(|| default_word_length(cfg.n));
    let pair = random_conjugate_pair_with(g, cfg.r, len, &mut rng);
    let opts = OrbitOptions { use_minimal: true, cap: cfg.cap, mod_tau: cfg.mod_tau };
    let sizes = cfg
        .kinds
        .iter()
        .map(|kind| {
            let set = match kind {
                ExperimentKind::LlInterval => orbit_in_interval(g, &pair.c, &Interval::lower(pair.c.infs()), &opts)?,
                ExperimentKind::InfSup => orbit_in_interval(g, &pair.c, &pair.c.own_interval(), &opts)?,
                ExperimentKind::Lss => invariant_set(g, &pair.a, InvariantKind::Lss, &opts)?.set,
                ExperimentKind::Lsss => invariant_set(g, &pair.a, InvariantKind::LsssPrime, &opts)?.set,
            };
            Ok(SetSize::of(&set))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(TrialResult { sizes })
}

/// Element at index ⌊(n−1)/2⌋ of the sorted sizes.
pub fn lower_median(sorted: &[SetSize]) -> SetSize {
    sorted[(sorted.len() - 1) / 2]
}

pub fn aggregate(cfg: &ExperimentConfig, results: &[TrialResult]) -> Vec<StatRow> {
    cfg.kinds
        .iter()
        .enumerate()
        .map(|(k, kind)| {
            let mut sizes: Vec<SetSize> = results.iter().map(|t| t.sizes[k]).collect();
            sizes.sort();
            let failures = sizes.iter().filter(|s| **s == SetSize::Infinite).count();
            StatRow {
                kind: *kind,
                structure: cfg.structure,
                n: cfg.n,
                r: cfg.r,
                min: sizes[0],
                median: lower_median(&sizes),
                max: sizes[sizes.len() - 1],
                failure_pct: 100.0 * failures as f64 / sizes.len() as f64,
                trials: sizes.len(),
            }
        })
        .collect()
}

fn worker_pool() -> Result<rayon::ThreadPool> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Ok(v) = std::env::var(WORKERS_ENV) {
        let n: usize = v.parse().map_err(|_| Error::BadParameter(format!("{WORKERS_ENV}={v:?} is not a count")))?;
        builder = builder.num_threads(n);
    }
    builder.build().map_err(|e| Error::BadParameter(e.to_string()))
}

pub fn run_trials(cfg: &ExperimentConfig) -> Result<Vec<TrialResult>> {
    cfg.validate()?;
    let g = structure(cfg.structure, cfg.n)?;
    let pool = worker_pool()?;
    pool.install(|| (0..cfg.trials as u64).into_par_iter().map(|t| run_trial(g.as_ref(), cfg, t)).collect())
}

pub fn run_experiment(cfg: &ExperimentConfig) -> Result<Vec<StatRow>> {
    let results = run_trials(cfg)?;
    Ok(aggregate(cfg, &results))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Csv,
    Json,
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            other => Err(Error::Parse(format!("unknown format {other:?}"))),
        }
    }
}

pub const CSV_HEADER: [&str; 9] = ["kind", "structure", "N", "r", "min", "median", "max", "failure_pct", "trials"];

pub fn write_rows<W: Write>(rows: &[StatRow], format: OutputFormat, out: W) -> Result<()> {
    match format {
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(out);
            let io = |e: csv::Error| Error::Io(e.to_string());
            w.write_record(CSV_HEADER).map_err(io)?;
            for row in rows {
                w.write_record([
                    row.kind.token().to_string(),
                    row.structure.token().to_string(),
                    row.n.to_string(),
                    row.r.to_string(),
                    row.min.to_string(),
                    row.median.to_string(),
                    row.max.to_string(),
                    row.failure_pct.to_string(),
                    row.trials.to_string(),
                ])
                .map_err(io)?;
            }
            w.flush()?;
        }
        OutputFormat::Json => {
            let mut out = out;
            serde_json::to_writer_pretty(&mut out, rows).map_err(|e| Error::Io(e.to_string()))?;
            writeln!(out)?;
        }
    }
    Ok(())
}

pub fn emit(rows: &[StatRow], format: OutputFormat, path: &std::path::Path) -> Result<()> {
    let file = std::fs::File::create(path)?;
    write_rows(rows, format, std::io::BufWriter::new(file))
}
