//! The `hyperprod` command line.
//!
//! Every verb reads JSON documents (a path, or `-` for standard input) and
//! writes one JSON document to standard output or to `--output`.
//! Diagnostics go to standard error. Exit codes: 0 success, 1 domain
//! error, 2 usage error.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use hyperprod_core::directed::{directed_cartesian, directed_square};
use hyperprod_core::factor::{factor_cartesian, factor_oracle, FactorizationResult, Method, OracleOptions, DEFAULT_PIPELINE_CAP};
use hyperprod_core::invariant::{self, Budget, HamiltonMode};
use hyperprod_core::iso::{automorphism_count, isomorphism, l2_isomorphism};
use hyperprod_core::product::{product_with, ProductKind, ProductOptions, DEFAULT_CATEGORIAL_CAP};
use hyperprod_core::section::{l2_inverse, l2_section, two_section};
use hyperprod_core::Hypergraph;
use serde_json::{json, Map, Value};
use thiserror::Error;

use crate::harness::{self, GenParams, Outcome};
use crate::json::{
    directed_doc, ext_nat_value, hypergraph_value, parse_directed, parse_hypergraph, parse_section,
    rational_value, section_doc, to_pretty, JsonError, Label,
};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error(transparent)]
    Json(#[from] JsonError),
    #[error(transparent)]
    Core(#[from] hyperprod_core::Error),
    #[error(transparent)]
    Harness(#[from] harness::HarnessError),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            _ => 1,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "hyperprod", version, about = "Hypergraph products, sections, factorization and invariants")]
pub struct Cli {
    /// Write the JSON result here instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Product of two hypergraphs (or two directed hypergraphs for the directed kinds).
    Product {
        #[arg(long)]
        kind: String,
        /// Size cap for the categorial product (cells per edge pair).
        #[arg(long, default_value_t = DEFAULT_CATEGORIAL_CAP)]
        cap: usize,
        first: String,
        second: String,
    },
    /// 2-section, or L2-section with `--l2`.
    Section {
        #[arg(long)]
        l2: bool,
        input: String,
    },
    /// Hypergraph recovered from an L2-section.
    InvertSection { input: String },
    /// Prime factor decomposition.
    Factor {
        #[arg(long, default_value = "cartesian")]
        kind: String,
        /// Vertex cap (defaults to 64 for the pipeline, 12 for the oracle).
        #[arg(long)]
        cap: Option<usize>,
        /// Force the exhaustive oracle even for the Cartesian product.
        #[arg(long)]
        oracle: bool,
        input: String,
    },
    /// One exact invariant, or all of them.
    Invariant {
        name: InvariantName,
        input: String,
        /// Vertex cap for the exponential searches.
        #[arg(long, default_value_t = 40)]
        cap: usize,
        /// Number of colours for `discrepancy`.
        #[arg(long, default_value_t = 2)]
        colors: usize,
    },
    /// Isomorphism test between two hypergraphs (or L2-sections with `--l2`).
    Iso {
        #[arg(long)]
        l2: bool,
        first: String,
        second: String,
    },
    /// Run registered theorem checks.
    Check {
        /// `all`, a group name or a single check id.
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 50)]
        trials: usize,
        /// Vertex cap for the exponential searches.
        #[arg(long, default_value_t = 40)]
        cap: usize,
        /// List the registered checks instead of running them.
        #[arg(long)]
        list: bool,
    },
    /// Random hypergraph.
    Gen {
        /// Vertex count or range `a..b`.
        #[arg(long, default_value = "1..5", value_parser = parse_range)]
        vertices: RangeInclusive<usize>,
        #[arg(long, default_value = "0..5", value_parser = parse_range)]
        edges: RangeInclusive<usize>,
        #[arg(long, default_value = "1..3", value_parser = parse_range)]
        edge_size: RangeInclusive<usize>,
        #[arg(long)]
        simple: bool,
        #[arg(long)]
        connected: bool,
        #[arg(long)]
        loop_free: bool,
        #[arg(long)]
        no_isolated: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Dual hypergraph (vertices are edge indices of the input).
    Dual { input: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InvariantName {
    Beta,
    Tau,
    TauStar,
    Nu,
    Rho,
    Chi,
    ChiStrong,
    ChiIndex,
    Discrepancy,
    Helly,
    Conformal,
    PathPartition,
    HamPath,
    HamCycle,
    Aut,
    All,
}

fn parse_range(text: &str) -> Result<RangeInclusive<usize>, String> {
    let bad = || format!("expected N or A..B, got `{text}`");
    match text.split_once("..") {
        Some((a, b)) => {
            let a = a.trim().parse().map_err(|_| bad())?;
            let b = b.trim().trim_start_matches('=').parse().map_err(|_| bad())?;
            Ok(a..=b)
        }
        None => {
            let n = text.trim().parse().map_err(|_| bad())?;
            Ok(n..=n)
        }
    }
}

fn read_input(path: &str) -> Result<String, CliError> {
    let mut text = String::new();
    let result = if path == "-" {
        std::io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(Path::new(path)).map(|t| text = t)
    };
    result.map_err(|source| CliError::Io { path: path.to_string(), source })?;
    Ok(text)
}

fn kind_of(tag: &str) -> Result<ProductKind, CliError> {
    Ok(tag.parse::<ProductKind>()?)
}

fn labels(h: &Hypergraph<Label>, set: &[usize]) -> Vec<Label> {
    set.iter().map(|&i| h.vertex(i).clone()).collect()
}

fn factorization_value(h: &Hypergraph<Label>, result: &FactorizationResult) -> Value {
    let factors: Vec<Value> = result.factors.iter().map(hypergraph_value).collect();
    let table: Vec<Value> = h
        .vertices()
        .iter()
        .zip(&result.coordinates)
        .map(|(v, c)| json!({ "vertex": v, "coordinates": c }))
        .collect();
    json!({
        "kind": result.kind.tag(),
        "method": match result.method { Method::Pipeline => "pipeline", Method::Oracle => "oracle" },
        "factors": factors,
        "coordinates": table,
        "distinct_factorizations": result.distinct_factorizations,
    })
}

fn exact(value: Value, witness: Value) -> Value {
    json!({ "value": value, "witness": witness, "exact": true })
}

fn invariant_value(name: InvariantName, h: &Hypergraph<Label>, budget: &Budget, colors: usize) -> Result<Value, CliError> {
    use InvariantName::*;
    let vertex_set = |set: &[usize]| json!(labels(h, set));
    let edge_set = |set: &[usize]| Value::Array(set.iter().map(|&e| json!(labels(h, &h.edges()[e]))).collect());
    let hamilton = |mode| -> Result<Value, CliError> {
        let walk = invariant::hamiltonian(h, mode, budget)?;
        Ok(exact(json!(walk.is_some()), walk.map_or(Value::Null, |w| vertex_set(&w.vertices))))
    };
    Ok(match name {
        Beta => {
            let w = invariant::independence_number(h, budget)?;
            exact(json!(w.value), vertex_set(&w.witness))
        }
        Tau => {
            let w = invariant::covering_number(h, budget)?;
            exact(json!(w.value), vertex_set(&w.witness))
        }
        Nu => {
            let w = invariant::matching_number(h, budget)?;
            exact(json!(w.value), edge_set(&w.witness))
        }
        TauStar => {
            let f = invariant::fractional_covering_number(h, budget)?;
            let weights: Map<String, Value> = h
                .vertices()
                .iter()
                .zip(&f.weights)
                .map(|(v, w)| (serde_json::to_string(v).expect("labels serialize"), rational_value(w)))
                .collect();
            exact(rational_value(&f.value), Value::Object(weights))
        }
        Rho => exact(ext_nat_value(invariant::partition_number(h, budget)?), Value::Null),
        Chi => exact(json!(invariant::chromatic_number(h, budget)?), Value::Null),
        ChiStrong => exact(json!(invariant::strong_chromatic_number(h, budget)?), Value::Null),
        ChiIndex => {
            let c = invariant::chromatic_index(h, budget)?;
            exact(
                json!(c.q),
                json!({ "max_degree": c.max_degree, "colored_hyperedge_property": c.colored_hyperedge_property }),
            )
        }
        Discrepancy => exact(rational_value(&invariant::discrepancy(h, colors, budget)?), json!({ "colors": colors })),
        Helly => exact(json!(invariant::has_helly_property(h, budget)?), Value::Null),
        Conformal => exact(json!(invariant::is_conformal(h, budget)?), Value::Null),
        PathPartition => exact(json!(invariant::path_partition_number(h, budget)?), Value::Null),
        HamPath => hamilton(HamiltonMode::Path)?,
        HamCycle => hamilton(HamiltonMode::Cycle)?,
        Aut => exact(json!(automorphism_count(h, budget.max_vertices)?), Value::Null),
        All => {
            let mut all = Map::new();
            for n in InvariantName::value_variants().iter().filter(|&&n| n != All) {
                let name = n.to_possible_value().expect("named").get_name().to_string();
                let v = match invariant_value(*n, h, budget, colors) {
                    Ok(v) => v,
                    Err(e) => json!({ "error": e.to_string() }),
                };
                all.insert(name, v);
            }
            Value::Object(all)
        }
    })
}

fn execute(command: Command, stderr: &mut dyn Write) -> Result<(Value, bool), CliError> {
    let value = match command {
        Command::Product { kind, cap, first, second } => {
            let kind = kind_of(&kind)?;
            if kind.is_directed() {
                let (d1, d2) = (parse_directed(&read_input(&first)?)?, parse_directed(&read_input(&second)?)?);
                let d = if kind == ProductKind::DirectedCartesian { directed_cartesian(&d1, &d2) } else { directed_square(&d1, &d2) };
                serde_json::to_value(directed_doc(&d)).expect("documents serialize")
            } else {
                let (h1, h2) = (parse_hypergraph(&read_input(&first)?)?, parse_hypergraph(&read_input(&second)?)?);
                let p = product_with(kind, &h1, &h2, &ProductOptions { categorial_cap: cap })?;
                hypergraph_value(&p.hypergraph)
            }
        }
        Command::Section { l2, input } => {
            let h = parse_hypergraph(&read_input(&input)?)?;
            if l2 {
                serde_json::to_value(section_doc(&l2_section(&h)?)).expect("documents serialize")
            } else {
                hypergraph_value(&two_section(&h)?)
            }
        }
        Command::InvertSection { input } => hypergraph_value(&l2_inverse(&parse_section(&read_input(&input)?)?)?),
        Command::Factor { kind, cap, oracle, input } => {
            let kind = kind_of(&kind)?;
            let h = parse_hypergraph(&read_input(&input)?)?;
            let result = if kind == ProductKind::Cartesian && !oracle {
                factor_cartesian(&h, cap.unwrap_or(DEFAULT_PIPELINE_CAP))?
            } else {
                let defaults = OracleOptions::default();
                factor_oracle(&h, kind, &OracleOptions { cap: cap.unwrap_or(defaults.cap), ..defaults })?
            };
            factorization_value(&h, &result)
        }
        Command::Invariant { name, input, cap, colors } => {
            let h = parse_hypergraph(&read_input(&input)?)?;
            let budget = Budget { max_vertices: cap, ..Budget::default() };
            invariant_value(name, &h, &budget, colors)?
        }
        Command::Iso { l2, first, second } => {
            let (a, b) = (read_input(&first)?, read_input(&second)?);
            let (map, left, right) = if l2 {
                let (g1, g2) = (parse_section(&a)?, parse_section(&b)?);
                (l2_isomorphism(&g1, &g2), g1.graph().vertices().to_vec(), g2.graph().vertices().to_vec())
            } else {
                let (h1, h2) = (parse_hypergraph(&a)?, parse_hypergraph(&b)?);
                (isomorphism(&h1, &h2), h1.vertices().to_vec(), h2.vertices().to_vec())
            };
            let mapping = map.map(|m| m.iter().enumerate().map(|(i, &j)| json!([left[i], right[j]])).collect::<Vec<_>>());
            json!({ "isomorphic": mapping.is_some(), "mapping": mapping })
        }
        Command::Check { suite, seed, trials, cap, list } => {
            if list {
                let checks: Vec<Value> = harness::registry()
                    .iter()
                    .map(|c| json!({ "id": c.id, "group": c.group, "statement": c.statement }))
                    .collect();
                return Ok((json!(checks), true));
            }
            let budget = Budget { max_vertices: cap, ..Budget::default() };
            let reports = harness::run_suite(&suite, trials, seed, &budget)?;
            let _ = write!(stderr, "{}", harness::render_table(&reports));
            let ok = reports.iter().all(|r| r.outcome != Outcome::Fail);
            let value = json!({ "suite": suite, "seed": seed, "trials": trials, "reports": reports });
            return Ok((value, ok));
        }
        Command::Gen { vertices, edges, edge_size, simple, connected, loop_free, no_isolated, seed } => {
            let params = GenParams { vertices, edges, edge_size, simple, connected, loop_free: loop_free || simple, no_isolated, seed, ..GenParams::default() };
            hypergraph_value(&harness::generate(&params)?)
        }
        Command::Dual { input } => hypergraph_value(&parse_hypergraph(&read_input(&input)?)?.dual()?),
    };
    Ok((value, true))
}

fn emit(value: &Value, output: Option<&Path>, stdout: &mut dyn Write) -> Result<(), CliError> {
    let text = to_pretty(value);
    match output {
        Some(path) => std::fs::write(path, text).map_err(|source| CliError::Io { path: path.display().to_string(), source }),
        None => stdout
            .write_all(text.as_bytes())
            .map_err(|source| CliError::Io { path: "<stdout>".into(), source }),
    }
}

/// Parses `args` (program name first), runs the verb and returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render();
            let _ = if code == 0 { write!(stdout, "{text}") } else { write!(stderr, "{}", text.ansi()) };
            return code;
        }
    };
    let output = cli.output.clone();
    let result = execute(cli.command, stderr).and_then(|(value, ok)| {
        emit(&value, output.as_deref(), stdout)?;
        Ok(ok)
    });
    match result {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}
