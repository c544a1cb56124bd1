//! Command-line interface: argument declarations and a testable executor.
//!
//! [`execute`] does all the work and returns the output plus an exit code,
//! so the whole surface is exercisable from unit tests without spawning a
//! process.  Exit codes: 0 success, 1 a refutation of the conjecture was
//! found, 2 bad input, 3 a search or resource budget was exhausted.

use std::collections::BTreeSet;
use std::io::Read as _;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use crate::construct::{solve_auto, solve_with, SolveMethod, SolveOutcome};
use crate::enumerate::{enumerate_connected_cubic, ENUMERATION_VERTEX_BOUND};
use crate::error::{Error, Result};
use crate::generators;
use crate::graph::{CubicGraph, GeneralGraph};
use crate::io::{emit_dot, parse_edge_list, parse_graph6};
use crate::oracle::{
    brute_force_ban_linial_bounded, lemma_sweep_signs, OracleReport, ORACLE_VERTEX_BOUND,
};
use crate::report::{
    FlowSearchEntry, GraphInfo, Report, ReportBody, SurveyEntry, SCHEMA_VERSION,
};
use crate::search::{
    find_3_edge_colouring, find_bipartite_complement_tree, find_nowhere_zero_flow,
    find_tree_cycle_decomposition, SearchOutcome, DEFAULT_SEARCH_BUDGET,
};
use crate::split::{evaluate_split, verify_ban_linial, Side, Split, SplitReport};
use crate::tree_split::{Sign, EXHAUSTIVE_TREE_BOUND};

pub const EXIT_OK: i32 = 0;
pub const EXIT_REFUTED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

const GRAPH_SPEC_HELP: &str = "Graph source: k4, k33, petersen, mk, prism:M, random:N, \
                               g6:LINE, a file path, or - for standard input";

#[derive(Debug, Parser)]
#[command(
    name = "extsplit",
    version,
    about = "External splits of cubic graphs: verified solvers, certificate searches, \
             and a brute-force referee",
    after_help = "Exit codes: 0 success, 1 refutation found, 2 input error, 3 budget exhausted."
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InputFormat {
    /// One graph6 line.
    Graph6,
    /// One `u v` pair per line; `#` comments and blank lines are skipped.
    Edgelist,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputMode {
    /// Human-readable summary.
    Text,
    /// Versioned JSON report (schema 1).
    Json,
    /// Graphviz DOT drawing of the graph and split, where available.
    Dot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodChoice {
    /// Try edge-colouring, tree-cycle, bipartite-tree, then the oracle.
    Auto,
    EdgeColouring,
    TreeCycle,
    BipartiteTree,
    Oracle,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate a given split against a graph.
    ///
    /// Check never fails a graph: it reports what the split is (its
    /// discrepancy, imbalance, offenders, whether it is external) and
    /// exits 0 for any well-formed input.
    Check {
        #[arg(help = GRAPH_SPEC_HELP)]
        graph: String,
        /// Comma-separated X-side vertices; every other vertex goes to Y.
        #[arg(long)]
        x: String,
        #[arg(long, value_enum, default_value_t = InputFormat::Graph6)]
        format: InputFormat,
        #[arg(long, value_enum, default_value_t = OutputMode::Text)]
        out: OutputMode,
        /// Seed used by random:N graph sources.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Find and verify an external split with |imbalance| at most 2.
    ///
    /// Never emits an unverified split: every witness is re-checked from
    /// the definition before it is printed.
    Solve {
        #[arg(help = GRAPH_SPEC_HELP)]
        graph: String,
        #[arg(long, value_enum, default_value_t = MethodChoice::Auto)]
        method: MethodChoice,
        /// Step budget for each certificate search.
        #[arg(long, default_value_t = DEFAULT_SEARCH_BUDGET)]
        budget: u64,
        #[arg(long, value_enum, default_value_t = InputFormat::Graph6)]
        format: InputFormat,
        #[arg(long, value_enum, default_value_t = OutputMode::Text)]
        out: OutputMode,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Run the certificate searches: tree+cycle partition, cubic tree with
    /// bipartite complement, 3-edge-colouring, and nowhere-zero k-flows
    /// for k = 3, 4, 5.
    Decompose {
        #[arg(help = GRAPH_SPEC_HELP)]
        graph: String,
        /// Step budget for each search.
        #[arg(long, default_value_t = DEFAULT_SEARCH_BUDGET)]
        budget: u64,
        #[arg(long, value_enum, default_value_t = InputFormat::Graph6)]
        format: InputFormat,
        #[arg(long, value_enum, default_value_t = OutputMode::Text)]
        out: OutputMode,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Brute-force census of all splits of a graph (up to X/Y swap).
    Oracle {
        #[arg(help = GRAPH_SPEC_HELP)]
        graph: String,
        /// Largest vertex count the oracle will accept.
        #[arg(long = "max-n", default_value_t = ORACLE_VERTEX_BOUND)]
        max_n: usize,
        #[arg(long, value_enum, default_value_t = InputFormat::Graph6)]
        format: InputFormat,
        #[arg(long, value_enum, default_value_t = OutputMode::Text)]
        out: OutputMode,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Replay the tree-splitting lemmas over every cubic tree, leaf split,
    /// target sign, and root, cross-checked against exhaustive search.
    Sweep {
        /// Largest tree order for the unrooted lemma.
        #[arg(long = "unrooted-max", default_value_t = 10)]
        unrooted_max: usize,
        /// Largest tree order for the rooted lemma.
        #[arg(long = "rooted-max", default_value_t = 8)]
        rooted_max: usize,
        /// Restrict the sweep to one target sign (+1 or -1).
        #[arg(long, allow_hyphen_values = true, value_parser = Sign::from_str_arg)]
        epsilon: Option<Sign>,
        #[arg(long, value_enum, default_value_t = OutputMode::Text)]
        out: OutputMode,
    },
    /// Read a graph6 stream and report each graph's conjecture status and
    /// which solver path succeeded.  Graphs are processed in parallel but
    /// output order always matches input order.
    Survey {
        /// Input file, or - for standard input.
        #[arg(default_value = "-")]
        input: String,
        /// Step budget for each certificate search.
        #[arg(long, default_value_t = DEFAULT_SEARCH_BUDGET)]
        budget: u64,
        #[arg(long, value_enum, default_value_t = OutputMode::Text)]
        out: OutputMode,
    },
    /// Emit every connected cubic graph up to a given order, one graph6
    /// line each (suitable for piping into survey).
    Generate {
        #[arg(long = "max-n", default_value_t = 10)]
        max_n: usize,
    },
}

/// Exit code for an error surfaced while handling a command: resource
/// bounds map to the budget code, everything else is an input error.
pub fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::GraphAboveBound { .. } | Error::TreeAboveBound { .. } => EXIT_BUDGET,
        _ => EXIT_INPUT,
    }
}

fn fail(e: Error) -> (String, i32) {
    (format!("error: {e}"), exit_code_for(&e))
}

/// Resolve a graph argument: a generator name, `prism:M`, `random:N`,
/// an inline `g6:` line, a file path, or `-` for standard input.
pub fn load_graph(spec: &str, format: InputFormat, seed: u64) -> Result<GeneralGraph> {
    match spec {
        "k4" => return Ok(generators::k4().into_general()),
        "k33" => return Ok(generators::k33().into_general()),
        "petersen" => return Ok(generators::petersen().into_general()),
        "mk" | "moebius-kantor" | "moebius_kantor" => {
            return Ok(generators::moebius_kantor().into_general())
        }
        _ => {}
    }
    if let Some(m) = spec.strip_prefix("prism:") {
        let m = m
            .parse()
            .map_err(|_| Error::Input(format!("bad prism size {m:?}")))?;
        return Ok(generators::prism(m)?.into_general());
    }
    if let Some(n) = spec.strip_prefix("random:") {
        let n = n
            .parse()
            .map_err(|_| Error::Input(format!("bad random graph order {n:?}")))?;
        return Ok(generators::random_cubic(n, seed)?.into_general());
    }
    if let Some(line) = spec.strip_prefix("g6:") {
        return parse_graph6(line);
    }
    let text = if spec == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Error::Input(format!("reading standard input: {e}")))?;
        buf
    } else {
        std::fs::read_to_string(spec).map_err(|e| Error::Input(format!("reading {spec}: {e}")))?
    };
    match format {
        InputFormat::Graph6 => {
            let line = text
                .lines()
                .find(|l| !l.trim().is_empty())
                .ok_or(Error::Graph6("empty line"))?;
            parse_graph6(line)
        }
        InputFormat::Edgelist => parse_edge_list(&text),
    }
}

fn load_cubic(spec: &str, format: InputFormat, seed: u64) -> Result<CubicGraph> {
    CubicGraph::try_from(load_graph(spec, format, seed)?)
}

/// Parse the `--x` vertex list into a total split of an n-vertex graph.
pub fn parse_x_list(x: &str, n: usize) -> Result<Split> {
    let mut xs = BTreeSet::new();
    for token in x.split(',') {
        let token = token.trim();
        if token.is_empty() {
            continue;
        }
        let v: usize = token
            .parse()
            .map_err(|_| Error::Input(format!("bad vertex in --x: {token:?}")))?;
        xs.insert(v);
    }
    Split::from_x_set(n, xs)
}

fn ms(started: Instant) -> u64 {
    started.elapsed().as_millis() as u64
}

fn method_name(m: SolveMethod) -> &'static str {
    match m {
        SolveMethod::EdgeColouring => "edge-colouring",
        SolveMethod::TreeCycle => "tree-cycle",
        SolveMethod::BipartiteTree => "bipartite-tree",
        SolveMethod::Oracle => "oracle",
    }
}

fn describe_sides(s: &Split) -> String {
    let fmt = |side| {
        let vs: Vec<String> = s
            .side_vertices(side)
            .iter()
            .map(|v| v.to_string())
            .collect();
        vs.join(", ")
    };
    format!("X = {{{}}}  Y = {{{}}}", fmt(Side::X), fmt(Side::Y))
}

fn describe_report(r: &SplitReport) -> String {
    format!(
        "discrepancy {}  imbalance {}  cut {}  external {}  nearly-external {}  \
         offenders {:?}  largest mono component {}",
        r.disc,
        r.imbalance,
        r.cut_size,
        r.is_external,
        r.is_nearly_external,
        r.offenders,
        r.max_mono_component
    )
}

fn describe_outcome(outcome: &SolveOutcome) -> String {
    match outcome {
        SolveOutcome::Solved(r) => format!(
            "solved via {}\n{}\n{}",
            method_name(r.method),
            describe_sides(&r.split),
            describe_report(&r.report)
        ),
        SolveOutcome::Refuted { oracle } => format!(
            "REFUTED: no external split with |imbalance| <= 2 exists \
             ({} splits enumerated)",
            oracle.enumerated
        ),
        SolveOutcome::Unresolved { reason } => format!("unresolved: {reason}"),
    }
}

fn describe_oracle(oracle: &OracleReport) -> String {
    let mut out = format!(
        "splits enumerated: {} (up to X/Y swap)\nexternal splits by imbalance:",
        oracle.enumerated
    );
    if oracle.external_by_imbalance.is_empty() {
        out.push_str("\n  (none)");
    }
    for (imb, count) in &oracle.external_by_imbalance {
        out.push_str(&format!("\n  {imb}: {count}"));
    }
    out.push_str(&format!(
        "\nexternal bisections: {}\nlargest mono component over external splits: {}",
        oracle.external_bisections,
        oracle
            .max_mono_component
            .map_or("n/a".to_string(), |m| m.to_string())
    ));
    match &oracle.witness {
        Some(w) => out.push_str(&format!("\nwitness: {}", describe_sides(w))),
        None => out.push_str("\nwitness: none"),
    }
    out.push_str(&format!("\nconjecture holds: {}", oracle.conjecture_holds));
    out
}

fn describe_search<T>(outcome: &SearchOutcome<T>, found: impl Fn(&T) -> String) -> String {
    match outcome {
        SearchOutcome::Found(cert) => format!("found ({})", found(cert)),
        SearchOutcome::NotFound => "not found (search space exhausted)".to_string(),
        SearchOutcome::BudgetExhausted => "budget exhausted".to_string(),
    }
}

/// Run one parsed command; returns `(stdout, exit_code)` on success and
/// `(stderr, exit_code)` on failure.
pub fn execute(cli: &Cli) -> std::result::Result<(String, i32), (String, i32)> {
    match &cli.command {
        Command::Check {
            graph,
            x,
            format,
            out,
            seed,
        } => run_check(graph, x, *format, *out, *seed),
        Command::Solve {
            graph,
            method,
            budget,
            format,
            out,
            seed,
        } => run_solve(graph, *method, *budget, *format, *out, *seed),
        Command::Decompose {
            graph,
            budget,
            format,
            out,
            seed,
        } => run_decompose(graph, *budget, *format, *out, *seed),
        Command::Oracle {
            graph,
            max_n,
            format,
            out,
            seed,
        } => run_oracle(graph, *max_n, *format, *out, *seed),
        Command::Sweep {
            unrooted_max,
            rooted_max,
            epsilon,
            out,
        } => run_sweep(*unrooted_max, *rooted_max, *epsilon, *out),
        Command::Survey { input, budget, out } => run_survey(input, *budget, *out),
        Command::Generate { max_n } => run_generate(*max_n),
    }
}

fn run_check(
    spec: &str,
    x: &str,
    format: InputFormat,
    out: OutputMode,
    seed: u64,
) -> std::result::Result<(String, i32), (String, i32)> {
    let started = Instant::now();
    let g = load_graph(spec, format, seed).map_err(fail)?;
    let split = parse_x_list(x, g.n()).map_err(fail)?;
    let split_report = evaluate_split(&g, &split).map_err(fail)?;
    let conjecture_witness = match CubicGraph::try_from(g.clone()) {
        Ok(cubic) => Some(verify_ban_linial(&cubic, &split).map_err(fail)?),
        Err(_) => None,
    };
    let text = match out {
        OutputMode::Json => Report::new(
            Some(GraphInfo::of(&g)),
            ms(started),
            ReportBody::Check {
                split_report,
                conjecture_witness,
            },
        )
        .to_json(),
        OutputMode::Dot => emit_dot(&g, Some(&split)),
        OutputMode::Text => {
            let witness_line = match conjecture_witness {
                Some(w) => format!("\nconjecture witness: {w}"),
                None => "\nconjecture witness: n/a (graph is not cubic)".to_string(),
            };
            format!(
                "{}\n{}{}",
                describe_sides(&split),
                describe_report(&split_report),
                witness_line
            )
        }
    };
    Ok((text, EXIT_OK))
}

fn run_solve(
    spec: &str,
    method: MethodChoice,
    budget: u64,
    format: InputFormat,
    out: OutputMode,
    seed: u64,
) -> std::result::Result<(String, i32), (String, i32)> {
    let started = Instant::now();
    let g = load_cubic(spec, format, seed).map_err(fail)?;
    let outcome = match method {
        MethodChoice::Auto => solve_auto(&g, budget),
        MethodChoice::EdgeColouring => solve_with(&g, SolveMethod::EdgeColouring, budget),
        MethodChoice::TreeCycle => solve_with(&g, SolveMethod::TreeCycle, budget),
        MethodChoice::BipartiteTree => solve_with(&g, SolveMethod::BipartiteTree, budget),
        MethodChoice::Oracle => solve_with(&g, SolveMethod::Oracle, budget),
    }
    .map_err(fail)?;
    let code = match &outcome {
        SolveOutcome::Solved(_) => EXIT_OK,
        SolveOutcome::Refuted { .. } => EXIT_REFUTED,
        SolveOutcome::Unresolved { .. } => EXIT_BUDGET,
    };
    let text = match out {
        OutputMode::Json => Report::new(
            Some(GraphInfo::of(g.general())),
            ms(started),
            ReportBody::Solve {
                outcome: outcome.clone(),
            },
        )
        .to_json(),
        OutputMode::Dot => match &outcome {
            SolveOutcome::Solved(r) => emit_dot(g.general(), Some(&r.split)),
            other => describe_outcome(other),
        },
        OutputMode::Text => describe_outcome(&outcome),
    };
    Ok((text, code))
}

fn run_decompose(
    spec: &str,
    budget: u64,
    format: InputFormat,
    out: OutputMode,
    seed: u64,
) -> std::result::Result<(String, i32), (String, i32)> {
    let started = Instant::now();
    let g = load_cubic(spec, format, seed).map_err(fail)?;
    let tree_cycle = find_tree_cycle_decomposition(&g, budget);
    let bipartite = find_bipartite_complement_tree(&g, budget);
    let colouring = find_3_edge_colouring(&g, budget);
    let mut flows = Vec::new();
    for k in 3..=5 {
        flows.push(FlowSearchEntry {
            k,
            outcome: find_nowhere_zero_flow(&g, k, budget).map_err(fail)?,
        });
    }
    let searches = [
        !matches!(tree_cycle, SearchOutcome::BudgetExhausted),
        !matches!(bipartite, SearchOutcome::BudgetExhausted),
        !matches!(colouring, SearchOutcome::BudgetExhausted),
    ];
    let any_found = tree_cycle.is_found() || bipartite.is_found() || colouring.is_found();
    let code = if any_found || searches.iter().all(|done| *done) {
        EXIT_OK
    } else {
        EXIT_BUDGET
    };
    let text = match out {
        OutputMode::Json => Report::new(
            Some(GraphInfo::of(g.general())),
            ms(started),
            ReportBody::Decompose {
                tree_cycle: tree_cycle.clone(),
                bipartite_complement_tree: bipartite.clone(),
                edge_colouring: colouring.clone(),
                flows: flows.clone(),
            },
        )
        .to_json(),
        _ => {
            let mut lines = vec![
                format!(
                    "tree + cycle partition: {}",
                    describe_search(&tree_cycle, |d| format!("cycle length {}", d.cycle.len()))
                ),
                format!(
                    "cubic tree with bipartite complement: {}",
                    describe_search(&bipartite, |t| format!("{} tree vertices", t.len()))
                ),
                format!(
                    "proper 3-edge-colouring: {}",
                    describe_search(&colouring, |_| "proper".to_string())
                ),
            ];
            for entry in &flows {
                lines.push(format!(
                    "nowhere-zero {}-flow: {}",
                    entry.k,
                    describe_search(&entry.outcome, |_| "valid".to_string())
                ));
            }
            lines.join("\n")
        }
    };
    Ok((text, code))
}

fn run_oracle(
    spec: &str,
    max_n: usize,
    format: InputFormat,
    out: OutputMode,
    seed: u64,
) -> std::result::Result<(String, i32), (String, i32)> {
    let started = Instant::now();
    let g = load_cubic(spec, format, seed).map_err(fail)?;
    let oracle = brute_force_ban_linial_bounded(&g, max_n).map_err(fail)?;
    let code = if oracle.conjecture_holds {
        EXIT_OK
    } else {
        EXIT_REFUTED
    };
    let text = match out {
        OutputMode::Json => Report::new(
            Some(GraphInfo::of(g.general())),
            ms(started),
            ReportBody::Oracle {
                oracle: oracle.clone(),
            },
        )
        .to_json(),
        OutputMode::Dot => match &oracle.witness {
            Some(w) => emit_dot(g.general(), Some(w)),
            None => describe_oracle(&oracle),
        },
        OutputMode::Text => describe_oracle(&oracle),
    };
    Ok((text, code))
}

fn run_sweep(
    unrooted_max: usize,
    rooted_max: usize,
    epsilon: Option<Sign>,
    out: OutputMode,
) -> std::result::Result<(String, i32), (String, i32)> {
    let started = Instant::now();
    for max in [unrooted_max, rooted_max] {
        if max > EXHAUSTIVE_TREE_BOUND {
            return Err(fail(Error::TreeAboveBound {
                got: max,
                bound: EXHAUSTIVE_TREE_BOUND,
            }));
        }
    }
    let signs = match epsilon {
        None => vec![Sign::Plus, Sign::Minus],
        Some(s) => vec![s],
    };
    let sweep = lemma_sweep_signs(unrooted_max, rooted_max, &signs);
    let code = if sweep.failures == 0 {
        EXIT_OK
    } else {
        EXIT_REFUTED
    };
    let text = match out {
        OutputMode::Json => {
            Report::new(None, ms(started), ReportBody::Sweep { sweep }).to_json()
        }
        _ => format!(
            "trees: {}\nunrooted cases: {}\nrooted cases: {}\nexhaustive replays: {}\nfailures: {}",
            sweep.trees,
            sweep.unrooted_cases,
            sweep.rooted_cases,
            sweep.exhaustive_cases,
            sweep.failures
        ),
    };
    Ok((text, code))
}

/// Parse and solve every graph6 line of a stream.  Lines are validated
/// sequentially (the first bad line aborts with its line number), then
/// solved in parallel; the reorder buffer in `collect` keeps output order
/// equal to input order.
pub fn survey_stream(text: &str, budget: u64) -> Result<Vec<SurveyEntry>> {
    let mut parsed = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let g = parse_graph6(line)
            .and_then(CubicGraph::try_from)
            .map_err(|e| Error::Input(format!("line {}: {e}", idx + 1)))?;
        let canonical = line.strip_prefix(crate::io::graph6::HEADER).unwrap_or(line);
        parsed.push((idx + 1, canonical.to_string(), g));
    }
    Ok(parsed
        .par_iter()
        .map(|(index, line, g)| {
            let outcome = solve_auto(g, budget).unwrap_or_else(|e| SolveOutcome::Unresolved {
                reason: format!("solver error: {e}"),
            });
            SurveyEntry {
                index: *index,
                graph6: line.clone(),
                outcome,
            }
        })
        .collect())
}

fn run_survey(
    input: &str,
    budget: u64,
    out: OutputMode,
) -> std::result::Result<(String, i32), (String, i32)> {
    let started = Instant::now();
    let text_in = if input == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| fail(Error::Input(format!("reading standard input: {e}"))))?;
        buf
    } else {
        std::fs::read_to_string(input)
            .map_err(|e| fail(Error::Input(format!("reading {input}: {e}"))))?
    };
    let entries = survey_stream(&text_in, budget).map_err(fail)?;
    let solved = entries
        .iter()
        .filter(|e| matches!(e.outcome, SolveOutcome::Solved(_)))
        .count();
    let refuted = entries
        .iter()
        .filter(|e| matches!(e.outcome, SolveOutcome::Refuted { .. }))
        .count();
    let unresolved = entries.len() - solved - refuted;
    let code = if refuted > 0 {
        EXIT_REFUTED
    } else if unresolved > 0 {
        EXIT_BUDGET
    } else {
        EXIT_OK
    };
    let text = match out {
        OutputMode::Json => Report::new(
            None,
            ms(started),
            ReportBody::Survey {
                graphs: entries.len(),
                solved,
                refuted,
                unresolved,
                entries,
            },
        )
        .to_json(),
        _ => {
            let mut lines: Vec<String> = entries
                .iter()
                .map(|e| {
                    let status = match &e.outcome {
                        SolveOutcome::Solved(r) => format!(
                            "solved {} imbalance {}",
                            method_name(r.method),
                            r.report.imbalance
                        ),
                        SolveOutcome::Refuted { .. } => "REFUTED".to_string(),
                        SolveOutcome::Unresolved { reason } => {
                            format!("unresolved: {reason}")
                        }
                    };
                    format!("{} {} {}", e.index, e.graph6, status)
                })
                .collect();
            lines.push(format!(
                "{} graphs: {} solved, {} refuted, {} unresolved",
                entries.len(),
                solved,
                refuted,
                unresolved
            ));
            lines.join("\n")
        }
    };
    Ok((text, code))
}

fn run_generate(max_n: usize) -> std::result::Result<(String, i32), (String, i32)> {
    if max_n < 4 || max_n % 2 != 0 {
        return Err(fail(Error::Input(
            "generate needs an even --max-n of at least 4".to_string(),
        )));
    }
    if max_n > ENUMERATION_VERTEX_BOUND {
        return Err(fail(Error::GraphAboveBound {
            got: max_n,
            bound: ENUMERATION_VERTEX_BOUND,
        }));
    }
    let mut lines = Vec::new();
    for graphs in enumerate_connected_cubic(max_n).values() {
        for g in graphs {
            lines.push(crate::io::emit_graph6(g.general()));
        }
    }
    Ok((lines.join("\n"), EXIT_OK))
}

/// Schema version stamped into JSON reports; re-exported for the binary's
/// `--version`-adjacent diagnostics and for tests.
pub const JSON_SCHEMA_VERSION: u32 = SCHEMA_VERSION;

impl Sign {
    /// Adapter for clap's `value_parser`, which wants a plain function.
    pub fn from_str_arg(s: &str) -> std::result::Result<Sign, String> {
        s.parse()
    }
}
