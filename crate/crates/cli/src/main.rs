mod args;

use std::io::Write;
use std::sync::Arc;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::Parser;
use serde_json::{json, Value};

use args::{output_format, Bench, Cli, Command, Common, Pair, Sweep};
use scp_core::experiment::{run_experiment, write_rows, ExperimentConfig, ExperimentKind, OutputFormat, StatRow, WORKERS_ENV};
use scp_core::solver::{invariant_set, scp_search, Decision, InvariantKind, OrbitOptions, ScpOptions, SearchOutcome};
use scp_core::word::{format_word, parse_word};
use scp_core::{gen_instance, recover, structure, GarsideStructure, InstanceParams, SolverOracle, StructureKind, TupleElement};

fn main() {
    let cli = Cli::parse();
    if let Err(e) = run(cli) {
        eprintln!("error: {e:#}");
        std::process::exit(2);
    }
}

fn run(cli: Cli) -> Result<()> {
    let c = &cli.common;
    if c.deterministic {
        std::env::set_var(WORKERS_ENV, "1");
    }
    match &cli.command {
        Command::Decide(pair) | Command::Search(pair) => {
            let search = matches!(cli.command, Command::Search(_));
            emit_value(c, scp(c, pair, search)?)
        }
        Command::Invariant { a, kind, members } => emit_value(c, invariant(c, a, *kind, *members)?),
        Command::Attack { problem, seed, public_length, private_length } => {
            let g = group(c, StructureKind::Artin)?;
            let mut params = InstanceParams::default();
            params.public_length = public_length.unwrap_or(params.public_length);
            params.private_length = private_length.unwrap_or(params.private_length);
            let (inst, truth) = gen_instance(g.as_ref(), *problem, &params, *seed)?;
            let oracle = SolverOracle::new(scp_options(c, false));
            let start = Instant::now();
            let got = recover(g.as_ref(), &inst, &oracle);
            let wall = start.elapsed().as_millis() as u64;
            let success = matches!(&got, Ok(k) if *k == truth.shared);
            emit_value(
                c,
                json!({
                    "problem": problem.token(),
                    "params": {
                        "structure": g.kind().token(), "n": g.strands(), "seed": seed,
                        "public_length": params.public_length, "private_length": params.private_length,
                        "generators": params.generators, "generator_length": params.generator_length,
                    },
                    "success": success,
                    "error": got.err().map(|e| e.to_string()),
                    "oracle_calls": oracle.calls(),
                    "wall_time_ms": wall,
                }),
            )
        }
        Command::Bench { which } => bench(c, which),
    }
}

fn group(c: &Common, default: StructureKind) -> Result<Arc<dyn GarsideStructure>> {
    Ok(structure(c.structure.unwrap_or(default), c.n)?)
}

fn orbit_options(c: &Common, mod_tau_default: bool) -> OrbitOptions {
    OrbitOptions { use_minimal: c.minimal_simples, cap: c.cap, mod_tau: c.mod_tau.unwrap_or(mod_tau_default) }
}

fn scp_options(c: &Common, mod_tau_default: bool) -> ScpOptions {
    ScpOptions { orbit: orbit_options(c, mod_tau_default), ..ScpOptions::default() }
}

fn parse_tuple(g: &dyn GarsideStructure, text: &str) -> Result<TupleElement> {
    let words = text
        .split(';')
        .map(|w| parse_word(g, w).with_context(|| format!("in word {:?}", w.trim())))
        .collect::<Result<Vec<_>>>()?;
    Ok(TupleElement::from_words(g, &words)?)
}

fn decision_token(d: Decision) -> &'static str {
    match d {
        Decision::Conjugate => "conjugate",
        Decision::NotConjugate => "not_conjugate",
        Decision::Unknown => "unknown",
    }
}

fn scp(c: &Common, pair: &Pair, search: bool) -> Result<Value> {
    let g = group(c, StructureKind::Artin)?;
    let g = g.as_ref();
    let a = parse_tuple(g, &pair.a)?;
    let b = parse_tuple(g, &pair.c)?;
    if a.r() != b.r() {
        bail!("tuples have {} and {} entries", a.r(), b.r());
    }
    let outcome = scp_search(g, &a, &b, &scp_options(c, true))?;
    let mut v = json!({ "structure": g.kind().token(), "n": g.strands(), "r": a.r(), "decision": decision_token(outcome.decision()) });
    if search {
        if let SearchOutcome::Found(x) = &outcome {
            v["witness"] = json!(format_word(g, &x.to_word(g)));
            v["verified"] = json!(a.conjugate(g, x)? == b);
        } else {
            v["witness"] = Value::Null;
        }
    }
    Ok(v)
}

fn invariant(c: &Common, a: &str, kind: InvariantKind, members: bool) -> Result<Value> {
    let g = group(c, StructureKind::Artin)?;
    let g = g.as_ref();
    let a = parse_tuple(g, a)?;
    let inv = invariant_set(g, &a, kind, &orbit_options(c, false))?;
    let mut v = json!({
        "structure": g.kind().token(),
        "n": g.strands(),
        "r": a.r(),
        "variant": kind.token(),
        "interval": inv.set.interval,
        "size": inv.set.len(),
        "truncated": inv.set.truncated,
        "mod_tau": inv.set.mod_tau,
        "witness": format_word(g, &inv.minimal.conjugator.to_word(g)),
    });
    if members {
        let list: Vec<Vec<String>> =
            inv.set.members(g).map(|t| t.entries().iter().map(|e| format_word(g, &e.to_word(g))).collect()).collect();
        v["members"] = json!(list);
    }
    Ok(v)
}

fn sweep_configs(c: &Common, s: &Sweep, structures: &[StructureKind], ranks: &[usize], kinds: &[ExperimentKind]) -> Result<Vec<ExperimentConfig>> {
    let kinds = match &s.kinds {
        Some(list) => list.iter().map(|k| k.parse()).collect::<scp_core::Result<Vec<ExperimentKind>>>()?,
        None => kinds.to_vec(),
    };
    let ranks = s.r.clone().unwrap_or_else(|| ranks.to_vec());
    let mut out = Vec::new();
    for &st in structures {
        for &r in &ranks {
            let mut cfg = ExperimentConfig::new(st, c.n, r, s.trials.unwrap_or(100), s.seed);
            cfg.cap = c.cap;
            cfg.mod_tau = c.mod_tau.unwrap_or(true);
            cfg.kinds = kinds.clone();
            cfg.word_length = s.word_length;
            out.push(cfg);
        }
    }
    Ok(out)
}

fn bench(c: &Common, which: &Bench) -> Result<()> {
    let configs = match which {
        Bench::Table1(s) => {
            let structures = c.structure.map_or(vec![StructureKind::Artin, StructureKind::Bkl], |k| vec![k]);
            sweep_configs(c, s, &structures, &[8], &ExperimentKind::ALL)?
        }
        Bench::Table2(s) => {
            let structures = [c.structure.unwrap_or(StructureKind::Bkl)];
            sweep_configs(c, s, &structures, &[4, 8, 16, 32, 64], &[ExperimentKind::Lss, ExperimentKind::Lsss])?
        }
        Bench::Run { config } => {
            let text = std::fs::read_to_string(config).with_context(|| format!("reading {}", config.display()))?;
            let cfg: ExperimentConfig = serde_json::from_str(&text).context("parsing experiment config")?;
            vec![cfg]
        }
    };
    let mut rows: Vec<StatRow> = Vec::new();
    for cfg in &configs {
        rows.extend(run_experiment(cfg)?);
    }
    let format = output_format(c.format.as_deref(), OutputFormat::Csv)?;
    let path = c.out.clone().or_else(|| configs.iter().find_map(|cfg| cfg.output.clone()).map(Into::into));
    match path {
        Some(p) => scp_core::experiment::emit(&rows, format, &p)?,
        None => write_rows(&rows, format, std::io::stdout().lock())?,
    }
    Ok(())
}

fn emit_value(c: &Common, v: Value) -> Result<()> {
    let text = match c.format.as_deref().unwrap_or("json") {
        "json" => serde_json::to_string_pretty(&v)?,
        "text" => v
            .as_object()
            .map(|m| m.iter().map(|(k, x)| format!("{k}: {}", x.as_str().map_or_else(|| x.to_string(), str::to_owned))).collect::<Vec<_>>().join("\n"))
            .unwrap_or_default(),
        other => bail!("unknown format {other:?}; use json or text"),
    };
    match &c.out {
        Some(p) => std::fs::write(p, text + "\n").with_context(|| format!("writing {}", p.display()))?,
        None => writeln!(std::io::stdout().lock(), "{text}")?,
    }
    Ok(())
}
