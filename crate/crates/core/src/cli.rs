//! Command-line front end. `run` takes its output streams as arguments so the
//! commands can be exercised in-process.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::error::{Error, Result};
use crate::graph::{
    generate, parse_edge_list, parse_graph6, to_dot, to_edge_list, to_graph6, Family, Graph,
    VertexSet,
};
use crate::ops::{self, parse_oriented_edge, HajosSpec};
use crate::solver::{self, DominationKind};
use crate::verify::{self, ConjectureScope, Operation, ScanConfig};

/// Exit code for a violated proven bound.
pub const EXIT_VIOLATION: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "coeven", version, about = "Co-even domination of graph operations")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    G6,
    Edgelist,
    Dot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OpKind {
    Join,
    Corona,
    Ncorona,
    Hajos,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ComputeKind {
    Gamma,
    Coeven,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ScanMode {
    Exhaustive,
    Generators,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print a graph from a named family.
    Gen {
        /// path, cycle, complete, complete_bipartite, star, wheel or empty
        family: String,
        params: Vec<String>,
        #[arg(long, value_enum, default_value = "g6")]
        format: Format,
    },
    /// Build join, corona, neighbourhood corona or Hajós sum of two graphs.
    Op {
        kind: OpKind,
        /// First operand (graph6, or @file)
        #[arg(long)]
        g: String,
        /// Second operand (graph6, or @file)
        #[arg(long)]
        h: String,
        /// Hajós edge of G as x,y (x is identified)
        #[arg(long)]
        e1: Option<String>,
        /// Hajós edge of H as x,y (x is identified)
        #[arg(long)]
        e2: Option<String>,
        #[arg(long, value_enum, default_value = "g6")]
        format: Format,
        /// Emit JSON with the product and its index map
        #[arg(long)]
        map: bool,
    },
    /// Exact domination or co-even domination number.
    Compute {
        /// graph6 string, or @file with one graph6 per line (or an edge list)
        #[arg(long)]
        graph: String,
        #[arg(long, value_enum, default_value = "coeven")]
        kind: ComputeKind,
        #[arg(long)]
        witness: bool,
    },
    /// Compare closed forms with the oracle over a family of instances.
    Check {
        #[arg(long)]
        op: String,
        #[arg(long, default_value_t = 4)]
        max_n: usize,
        /// Comma-separated: generators, exhaustive
        #[arg(long, default_value = "exhaustive")]
        families: String,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Search Hajós sums for values below γ1 + γ2 − 2.
    ScanConjecture {
        #[arg(long, default_value_t = 4)]
        max_n: usize,
        /// Wall-clock budget in seconds
        #[arg(long, default_value_t = 600.0)]
        budget: f64,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "exhaustive")]
        mode: ScanMode,
        /// Restrict to one factor pair (needs --h too)
        #[arg(long, requires = "h")]
        g: Option<String>,
        #[arg(long, requires = "g")]
        h: Option<String>,
    },
}

/// Parses and runs one command; returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return code;
        }
    };
    match execute(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

fn io(e: std::io::Error) -> Error {
    Error::Invalid(format!("i/o: {e}"))
}

/// Reads an inline graph6 string or `@path`. Returns one graph per line.
/// A bare `@` is the graph6 code of K1; no longer graph6 string starts with `@`.
fn read_graphs(arg: &str) -> Result<Vec<Graph>> {
    let path = match arg.strip_prefix('@') {
        Some(path) if !path.is_empty() => path,
        _ => return Ok(vec![parse_graph6(arg)?]),
    };
    let text = fs::read_to_string(path).map_err(|e| Error::Invalid(format!("{path}: {e}")))?;
    let first = text.lines().map(str::trim).find(|l| !l.is_empty() && !l.starts_with('#'));
    if first.is_some_and(|l| l.split_whitespace().count() == 2 && l.split_whitespace().all(|t| t.parse::<usize>().is_ok())) {
        return Ok(vec![parse_edge_list(&text)?]);
    }
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| {
            parse_graph6(l).map_err(|e| match e {
                Error::Graph6 { position, reason } => Error::Graph6 {
                    position,
                    reason: format!("{path} line {}: {reason}", i + 1),
                },
                other => other,
            })
        })
        .collect()
}

fn read_one(arg: &str) -> Result<Graph> {
    let mut gs = read_graphs(arg)?;
    if gs.len() != 1 {
        return Err(Error::Invalid(format!("{arg}: expected exactly one graph, found {}", gs.len())));
    }
    Ok(gs.remove(0))
}

fn render(g: &Graph, format: Format) -> String {
    match format {
        Format::G6 => format!("{}\n", to_graph6(g)),
        Format::Edgelist => to_edge_list(g),
        Format::Dot => to_dot(g, &VertexSet::empty(g.order())),
    }
}

fn execute(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Gen { family, params, format } => {
            let g = generate(Family::from_args(&family, &params)?)?;
            write!(out, "{}", render(&g, format)).map_err(io)?;
            Ok(0)
        }
        Command::Op { kind, g, h, e1, e2, format, map } => {
            let (g, h) = (read_one(&g)?, read_one(&h)?);
            let (product, index_map) = match kind {
                OpKind::Join => ops::join(&g, &h)?,
                OpKind::Corona => ops::corona(&g, &h)?,
                OpKind::Ncorona => ops::neighbourhood_corona(&g, &h)?,
                OpKind::Hajos => {
                    let (Some(e1), Some(e2)) = (e1, e2) else {
                        return Err(Error::Invalid("hajos needs --e1 and --e2".into()));
                    };
                    let spec = HajosSpec::new(parse_oriented_edge(&e1)?, parse_oriented_edge(&e2)?);
                    ops::hajos_sum(&g, &h, spec)?
                }
            };
            if map {
                let v = json!({"graph": render(&product, format).trim_end(), "index_map": index_map});
                writeln!(out, "{v}").map_err(io)?;
            } else {
                write!(out, "{}", render(&product, format)).map_err(io)?;
            }
            Ok(0)
        }
        Command::Compute { graph, kind, witness } => {
            let kind = match kind {
                ComputeKind::Gamma => DominationKind::Plain,
                ComputeKind::Coeven => DominationKind::Coeven,
            };
            for g in read_graphs(&graph)? {
                let r = solver::solve(&g, kind, None).expect("no deadline");
                let v = if witness {
                    json!({"value": r.value, "witness": r.witness})
                } else {
                    json!({"value": r.value})
                };
                writeln!(out, "{v}").map_err(io)?;
            }
            Ok(0)
        }
        Command::Check { op, max_n, families, out: path, csv } => {
            let op: Operation = op.parse()?;
            let mut config = ScanConfig {
                ops: vec![op],
                ..ScanConfig::default()
            };
            for fam in families.split(',').map(str::trim).filter(|s| !s.is_empty()) {
                match fam {
                    "generators" => config.generator_sizes = Some((2, max_n)),
                    "exhaustive" => config.exhaustive_max_n = Some(max_n),
                    other => return Err(Error::Invalid(format!("unknown family set {other:?}"))),
                }
            }
            let report = verify::run_family_scan(&config)?;
            if let Some(path) = path {
                report
                    .write_json(&path)
                    .map_err(|e| Error::Invalid(format!("{}: {e}", path.display())))?;
            }
            if let Some(path) = csv {
                report
                    .write_csv(&path)
                    .map_err(|e| Error::Invalid(format!("{}: {e}", path.display())))?;
            }
            writeln!(out, "{}", report.summary_line()).map_err(io)?;
            if report.summary.discrepancy > 0 {
                writeln!(
                    err,
                    "{} discrepancies with exact-value or unproven claims (see report)",
                    report.summary.discrepancy - report.summary.proven_violations
                )
                .map_err(io)?;
            }
            if report.summary.proven_violations > 0 {
                writeln!(err, "{} proven-bound violations", report.summary.proven_violations).map_err(io)?;
                return Ok(EXIT_VIOLATION);
            }
            Ok(0)
        }
        Command::ScanConjecture { max_n, budget, out: path, mode, g, h } => {
            if !(budget.is_finite() && budget >= 0.0) {
                return Err(Error::Invalid(format!("budget must be a non-negative number of seconds, got {budget}")));
            }
            let scope = match (g, h) {
                (Some(g), Some(h)) => ConjectureScope::Pairs(vec![(read_one(&g)?, read_one(&h)?)]),
                _ => match mode {
                    ScanMode::Exhaustive => ConjectureScope::Exhaustive { max_n },
                    ScanMode::Generators => ConjectureScope::Generators { max: max_n },
                },
            };
            let report = verify::conjecture_scan(&scope, Duration::from_secs_f64(budget))?;
            if let Some(path) = path {
                report
                    .write_json(&path)
                    .map_err(|e| Error::Invalid(format!("{}: {e}", path.display())))?;
            }
            let c = report.conjecture.clone().unwrap_or_default();
            writeln!(out, "{}", report.summary_line()).map_err(io)?;
            match (c.min_slack, &c.min_slack_instance) {
                (Some(s), Some(id)) => writeln!(out, "min_slack={s} at {id}"),
                _ => writeln!(out, "min_slack=none"),
            }
            .map_err(io)?;
            writeln!(out, "counterexamples={}", c.counterexamples.len()).map_err(io)?;
            for id in &c.counterexamples {
                writeln!(out, "counterexample {id}").map_err(io)?;
            }
            if !report.complete {
                writeln!(err, "budget exhausted: report is incomplete").map_err(io)?;
            }
            if !c.upper_bound_violations.is_empty() {
                writeln!(err, "{} Hajós upper-bound violations", c.upper_bound_violations.len()).map_err(io)?;
                return Ok(EXIT_VIOLATION);
            }
            Ok(0)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("coeven").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn gen_formats() {
        assert_eq!(run_str(&["gen", "cycle", "5", "--format", "g6"]), (0, "Dhc\n".into(), String::new()));
        let (code, _, err) = run_str(&["gen", "wheel", "3"]);
        assert_ne!(code, 0);
        assert!(err.contains("wheel"));
        let (code, out, _) = run_str(&["gen", "path", "4", "--format", "dot"]);
        assert_eq!(code, 0);
        assert!(out.starts_with("graph G {"));
        let (code, out, _) = run_str(&["gen", "complete_bipartite", "2", "3", "--format", "edgelist"]);
        assert_eq!(code, 0);
        assert!(out.starts_with("5 6\n"));
        assert_ne!(run_str(&["gen", "hypercube", "3"]).0, 0);
    }

    #[test]
    fn op_commands() {
        let (code, out, _) = run_str(&["op", "corona", "--g", "A_", "--h", "@"]);
        assert_eq!(code, 0);
        assert_eq!(parse_graph6(out.trim()).unwrap().order(), 4);
        let (code, _, err) = run_str(&["op", "hajos", "--g", "C~", "--h", "C~"]);
        assert_ne!(code, 0);
        assert!(err.contains("--e1"));
        let (code, out, _) = run_str(&["op", "ncorona", "--g", "Ch", "--h", "Bg"]);
        assert_eq!(code, 0);
        let g = parse_graph6(out.trim()).unwrap();
        assert_eq!((g.order(), g.size()), (16, 29));
        let (code, out, _) = run_str(&["op", "hajos", "--g", "C~", "--h", "C~", "--e1", "0,1", "--e2", "1,0", "--map"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["index_map"][0], "M0=1");
        assert_ne!(run_str(&["op", "hajos", "--g", "Ch", "--h", "C~", "--e1", "0,2", "--e2", "0,1"]).0, 0);
    }

    #[test]
    fn compute_command() {
        assert_eq!(run_str(&["compute", "--graph", "C~", "--kind", "coeven"]).1, "{\"value\":4}\n");
        assert_eq!(run_str(&["compute", "--graph", "Cl"]).1, "{\"value\":2}\n");
        let (_, out, _) = run_str(&["compute", "--graph", "Cl", "--kind", "gamma", "--witness"]);
        assert_eq!(out, "{\"value\":2,\"witness\":[0,1]}\n");
        let (code, _, err) = run_str(&["compute", "--graph", "D? {"]);
        assert_eq!(code, 1);
        assert!(err.contains("byte 2"), "{err}");
    }

    #[test]
    fn ncorona_check_on_k1_is_not_applicable() {
        let (code, out, _) = run_str(&["check", "--op", "ncorona", "--max-n", "1"]);
        assert_eq!(code, 0);
        assert!(out.contains("entries=1 ") && out.contains("not_applicable=1"), "{out}");
    }

    #[test]
    fn scan_conjecture_k4_pair() {
        let (code, out, _) = run_str(&["scan-conjecture", "--g", "C~", "--h", "C~", "--budget", "60"]);
        assert_eq!(code, 0);
        assert!(out.contains("min_slack=0"), "{out}");
        assert!(out.contains("counterexamples=0"));
    }

    #[test]
    fn scan_conjecture_zero_budget() {
        let (code, out, err) = run_str(&["scan-conjecture", "--max-n", "3", "--budget", "0"]);
        assert_eq!(code, 0);
        assert!(out.contains("(incomplete)"));
        assert!(err.contains("incomplete"));
    }
}
