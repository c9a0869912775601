//! Command-line front end.
//!
//! Every command prints one JSON [`Report`] on stdout (or a plain-text view
//! with `--pretty`). Exit codes: 0 success, 1 rejected input, 2 unparsable
//! input, 3 search cap exceeded.

use std::ffi::OsString;
use std::fs;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use zagreb_core::moves::{local_search_with, Neighborhood};
use zagreb_core::search::DEFAULT_CAP;
use zagreb_core::{
    bicyclic_max, construct_gm_star, ConditionReport, DegreeSequence, MajorizationOrder, SearchError, SimpleGraph,
};

use crate::format::{
    edges_one_based, parse_edge_list, parse_sequence, serialize_edge_list, to_dot, SequenceParseError,
};
use crate::oracle::{parallel_oracle, thread_pool};
use crate::report::Report;
use crate::sweep::{sweep, SweepError, SweepOptions};

pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_CAP: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "zagreb", version, about = "Extremal second Zagreb index graphs for degree sequences")]
pub struct Cli {
    /// Leave wall-clock fields out so output is byte-identical across runs.
    #[arg(long, global = true)]
    pub no_timing: bool,
    /// Print a plain-text view instead of JSON.
    #[arg(long, global = true)]
    pub pretty: bool,
    /// Worker threads for the oracle and sweep.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GraphFormat {
    Edges,
    Dot,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Graphicness, class and construction hypotheses of a sequence.
    Validate { sequence: String },
    /// Build the layered extremal graph for a sequence.
    Construct {
        sequence: String,
        #[arg(long, value_enum, default_value = "json")]
        format: GraphFormat,
    },
    /// Second Zagreb index of a graph file.
    M2 { file: PathBuf },
    /// Exact maximum over bicyclic realizations.
    BicyclicMax { sequence: String },
    /// Exhaustive maximum over all connected realizations.
    Oracle {
        sequence: String,
        #[arg(long, env = "ZAGREB_ORACLE_CAP", default_value_t = DEFAULT_CAP)]
        cap: usize,
    },
    /// Hill-climb a graph file with degree-preserving edge swaps.
    Improve {
        file: PathBuf,
        /// Write the improved graph here as an edge list.
        #[arg(long)]
        output: Option<PathBuf>,
        /// Only single swaps; no two-swap steps through a disconnected graph.
        #[arg(long)]
        single: bool,
    },
    /// Majorization order between two sequences.
    Majorize {
        a: String,
        b: String,
        /// Also list the unit-transfer chain from the lower to the upper one.
        #[arg(long)]
        chain: bool,
    },
    /// Maxima for every sequence of order `n` and excess `c`.
    Sweep {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_negative_numbers = true)]
        excess: i64,
        #[arg(long)]
        verify_monotone: bool,
        /// Run the oracle on closed-form rows too.
        #[arg(long)]
        cross_check: bool,
        #[arg(long, env = "ZAGREB_ORACLE_CAP", default_value_t = DEFAULT_CAP)]
        cap: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn domain(e: impl std::fmt::Display) -> Self {
        Failure { code: EXIT_DOMAIN, message: e.to_string() }
    }

    fn parse(e: impl std::fmt::Display) -> Self {
        Failure { code: EXIT_PARSE, message: e.to_string() }
    }
}

impl From<SequenceParseError> for Failure {
    fn from(e: SequenceParseError) -> Self {
        match e {
            SequenceParseError::Syntax(_) => Failure::parse(e),
            SequenceParseError::Invalid(_) => Failure::domain(e),
        }
    }
}

impl From<SearchError> for Failure {
    fn from(e: SearchError) -> Self {
        match e {
            SearchError::CapExceeded { .. } => Failure { code: EXIT_CAP, message: e.to_string() },
            _ => Failure::domain(e),
        }
    }
}

impl From<SweepError> for Failure {
    fn from(e: SweepError) -> Self {
        match e {
            SweepError::Search(s) => s.into(),
            other => Failure::domain(other),
        }
    }
}

/// What a command produced: a report, or raw text for the graph formats.
enum Emitted {
    Report(Report),
    Text { body: String, warnings: Vec<String> },
}

fn sequence_arg(text: &str) -> Result<(DegreeSequence, Vec<String>), Failure> {
    let seq = parse_sequence(text)?;
    let warnings = if seq.was_reordered() {
        vec![format!("sequence reordered to non-increasing order: {seq}")]
    } else {
        Vec::new()
    };
    Ok((seq, warnings))
}

fn read_graph(path: &PathBuf) -> Result<SimpleGraph, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::parse(format!("{}: {e}", path.display())))?;
    parse_edge_list(&text).map_err(|e| Failure::parse(format!("{}: {e}", path.display())))
}

fn conditions_json(c: &ConditionReport) -> Value {
    json!({
        "i": c.sum_condition,
        "ii": c.top_two_condition,
        "iii": c.plateau_condition,
        "iv": c.leaf_condition,
        "all": c.verdict(),
    })
}

fn one_based(xs: &[usize]) -> Vec<usize> {
    xs.iter().map(|x| x + 1).collect()
}

fn validate(text: &str) -> Result<Emitted, Failure> {
    let (seq, warnings) = sequence_arg(text)?;
    let class = seq.classify().ok().map(|c| {
        json!({
            "excess": c.excess,
            "kind": c.kind.name(),
            "leaf_count": c.leaf_count,
            "degree2_count": c.degree2_count,
        })
    });
    let result = json!({
        "sequence": seq.to_string(),
        "graphic": seq.is_graphic(),
        "connected_realizable": seq.is_connected_realizable(),
        "class": class,
        "conditions": class.is_some().then(|| conditions_json(&seq.check_conditions())),
    });
    let report = Report::new("validate", json!({ "sequence": text }), result).with_warnings(warnings);
    Ok(Emitted::Report(report))
}

fn construct(text: &str, format: GraphFormat) -> Result<Emitted, Failure> {
    let (seq, mut warnings) = sequence_arg(text)?;
    let trace = construct_gm_star(&seq).map_err(Failure::domain)?;
    warnings.extend(trace.warnings.iter().cloned());
    let g = &trace.graph;
    Ok(match format {
        GraphFormat::Edges => Emitted::Text { body: serialize_edge_list(g), warnings },
        GraphFormat::Dot => Emitted::Text { body: to_dot(g), warnings },
        GraphFormat::Json => {
            let triangles: Vec<Vec<usize>> = trace.triangles.iter().map(|t| one_based(t)).collect();
            let result = json!({
                "sequence": seq.to_string(),
                "m2": trace.m2().get(),
                "n": g.order(),
                "m": g.size(),
                "edges": edges_one_based(g),
                "ordering": one_based(&trace.ordering),
                "layers": trace.layers,
                "triangles": triangles,
                "conditions": conditions_json(&trace.conditions),
                "optimality_guaranteed": trace.optimality_guaranteed(),
            });
            let inputs = json!({ "sequence": text, "format": "json" });
            Emitted::Report(Report::new("construct", inputs, result).with_warnings(warnings))
        }
    })
}

fn m2(path: &PathBuf) -> Result<Emitted, Failure> {
    let g = read_graph(path)?;
    let result = json!({
        "n": g.order(),
        "m": g.size(),
        "m2": g.second_zagreb().get(),
        "connected": g.is_connected(),
        "degree_sequence": g.degree_sequence().ok().map(|s| s.to_string()),
    });
    Ok(Emitted::Report(Report::new("m2", json!({ "file": path.display().to_string() }), result)))
}

fn bicyclic(text: &str) -> Result<Emitted, Failure> {
    let (seq, warnings) = sequence_arg(text)?;
    let best = bicyclic_max(&seq).map_err(Failure::domain)?;
    let w = &best.witness;
    let result = json!({
        "sequence": seq.to_string(),
        "case": best.case.id(),
        "value": best.value.get(),
        "family": w.family.to_string(),
        "family_kind": w.family.kind(),
        "family_params": w.family.params(),
        "witness_m2": w.graph.second_zagreb().get(),
        "witness_edges": edges_one_based(&w.graph),
    });
    Ok(Emitted::Report(Report::new("bicyclic-max", json!({ "sequence": text }), result).with_warnings(warnings)))
}

fn oracle(text: &str, cap: usize, jobs: Option<usize>, timing: bool) -> Result<Emitted, Failure> {
    let (seq, warnings) = sequence_arg(text)?;
    let run = parallel_oracle(&seq, cap, jobs)?;
    let r = &run.result;
    let mut result = json!({
        "sequence": seq.to_string(),
        "max_m2": r.max_m2.get(),
        "witness_edges": edges_one_based(&r.witness),
        "realizations": r.realizations,
        "labelled_realizations": r.labelled_realizations.and_then(|x| u64::try_from(x).ok()),
    });
    if timing {
        result["elapsed_ms"] = json!(run.elapsed_ms as u64);
        result["workers"] = json!(run.workers);
    }
    let inputs = json!({ "sequence": text, "cap": cap });
    Ok(Emitted::Report(Report::new("oracle", inputs, result).with_warnings(warnings)))
}

fn improve(path: &PathBuf, output: Option<&PathBuf>, single: bool) -> Result<Emitted, Failure> {
    let g = read_graph(path)?;
    if !g.is_connected() {
        return Err(Failure::domain("graph is not connected"));
    }
    let hood = if single { Neighborhood::Single } else { Neighborhood::Compound };
    let out = local_search_with(&g, hood);
    let moves: Vec<Value> = out
        .moves
        .iter()
        .map(|m| {
            let pair = |(a, b): (usize, usize)| [a + 1, b + 1];
            json!({
                "remove": m.swap.removed().map(pair),
                "add": m.swap.added().map(pair),
                "m2_after": m.m2_after.get(),
                "step_complete": m.step_complete,
            })
        })
        .collect();
    if let Some(dest) = output {
        fs::write(dest, serialize_edge_list(&out.graph))
            .map_err(|e| Failure::domain(format!("{}: {e}", dest.display())))?;
    }
    let result = json!({
        "initial_m2": out.initial.get(),
        "final_m2": out.m2().get(),
        "swaps": out.moves.len(),
        "moves": moves,
        "edges": edges_one_based(&out.graph),
    });
    let inputs = json!({
        "file": path.display().to_string(),
        "neighborhood": if single { "single" } else { "compound" },
    });
    Ok(Emitted::Report(Report::new("improve", inputs, result)))
}

fn majorize(a: &str, b: &str, want_chain: bool) -> Result<Emitted, Failure> {
    let (sa, mut warnings) = sequence_arg(a)?;
    let (sb, wb) = sequence_arg(b)?;
    warnings.extend(wb);
    let order = sa.majorization_cmp(&sb);
    let mut result = json!({ "a": sa.to_string(), "b": sb.to_string(), "order": order.name() });
    if want_chain {
        let chain = match order {
            MajorizationOrder::Equal | MajorizationOrder::ALessB => sa.majorization_chain(&sb).ok(),
            MajorizationOrder::BLessA => sb.majorization_chain(&sa).ok(),
            MajorizationOrder::Incomparable => {
                warnings.push("sequences are incomparable; no chain".into());
                None
            }
        };
        if let Some(chain) = chain {
            let steps: Vec<String> = chain.steps().iter().map(|s| s.to_string()).collect();
            let transfers: Vec<[usize; 2]> = chain.transfers().iter().map(|&(p, q)| [p + 1, q + 1]).collect();
            result["chain"] = json!(steps);
            result["chain_length"] = json!(chain.len());
            result["transfers"] = json!(transfers);
        } else {
            result["chain"] = Value::Null;
        }
    }
    let inputs = json!({ "a": a, "b": b, "chain": want_chain });
    Ok(Emitted::Report(Report::new("majorize", inputs, result).with_warnings(warnings)))
}

fn sweep_cmd(n: usize, excess: i64, opts: SweepOptions, jobs: Option<usize>, timing: bool) -> Result<Emitted, Failure> {
    let outcome = thread_pool(jobs).install(|| sweep(n, excess, opts))?;
    let mut result = serde_json::to_value(&outcome).expect("sweep serializes");
    if timing {
        result["elapsed_ms"] = json!(outcome.elapsed_ms as u64);
    }
    let mut warnings = Vec::new();
    if outcome.rows.is_empty() {
        warnings.push(format!("no connected-realizable sequences with n = {n} and excess {excess}"));
    }
    if let Some(v) = &outcome.violations {
        if !v.is_empty() {
            warnings.push(format!("{} monotonicity violations", v.len()));
        }
    }
    if !outcome.oracle_mismatches.is_empty() {
        warnings.push(format!("{} closed-form values disagree with the oracle", outcome.oracle_mismatches.len()));
    }
    let inputs = json!({
        "n": n,
        "excess": excess,
        "verify_monotone": opts.verify_monotone,
        "cross_check": opts.cross_check,
        "cap": opts.cap,
    });
    Ok(Emitted::Report(Report::new("sweep", inputs, result).with_warnings(warnings)))
}

fn dispatch(cli: &Cli) -> Result<Emitted, Failure> {
    let timing = !cli.no_timing;
    match &cli.command {
        Command::Validate { sequence } => validate(sequence),
        Command::Construct { sequence, format } => construct(sequence, *format),
        Command::M2 { file } => m2(file),
        Command::BicyclicMax { sequence } => bicyclic(sequence),
        Command::Oracle { sequence, cap } => oracle(sequence, *cap, cli.jobs, timing),
        Command::Improve { file, output, single } => improve(file, output.as_ref(), *single),
        Command::Majorize { a, b, chain } => majorize(a, b, *chain),
        Command::Sweep { n, excess, verify_monotone, cross_check, cap } => {
            let opts = SweepOptions { cap: *cap, verify_monotone: *verify_monotone, cross_check: *cross_check };
            sweep_cmd(*n, *excess, opts, cli.jobs, timing)
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Output { code, stdout: text, stderr: String::new() }
            } else {
                Output { code, stdout: String::new(), stderr: text }
            };
        }
    };
    match dispatch(&cli) {
        Ok(Emitted::Report(report)) => {
            let stdout = if cli.pretty { report.to_text() } else { report.to_json() };
            Output { code: 0, stdout, stderr: String::new() }
        }
        Ok(Emitted::Text { body, warnings }) => {
            let stderr = warnings.iter().map(|w| format!("warning: {w}\n")).collect();
            Output { code: 0, stdout: body, stderr }
        }
        Err(f) => Output { code: f.code, stdout: String::new(), stderr: format!("error: {}\n", f.message) },
    }
}
