use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use super::{check_instance, CheckOptions, ConjectureSummary, Instance, Operation, Report, Verdict};
use crate::error::{Error, Result};
use crate::graph::{enumerate_connected, generate, to_graph6, Family, Graph};
use crate::ops::{oriented_edges, BinaryOp, HajosSpec};

/// Exhaustive pair scans stop at five vertices per factor.
pub const MAX_EXHAUSTIVE_N: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScanConfig {
    pub ops: Vec<Operation>,
    /// Inclusive factor-order range for the named families.
    pub generator_sizes: Option<(usize, usize)>,
    /// All labeled connected graphs with `1..=n` vertices.
    pub exhaustive_max_n: Option<usize>,
    pub instance_budget_ms: u64,
}

impl Default for ScanConfig {
    fn default() -> Self {
        ScanConfig {
            ops: Vec::new(),
            generator_sizes: None,
            exhaustive_max_n: None,
            instance_budget_ms: super::DEFAULT_INSTANCE_BUDGET.as_millis() as u64,
        }
    }
}

/// Paths, cycles, stars, complete and complete bipartite graphs with order in
/// `min..=max`.
pub fn generator_graphs(min: usize, max: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    for n in min.max(1)..=max {
        let mut families = vec![Family::Path(n), Family::Complete(n)];
        if n >= 3 {
            families.push(Family::Cycle(n));
            families.push(Family::Star(n));
        }
        families.extend((2..=n / 2).map(|a| Family::CompleteBipartite(a, n - a)));
        out.extend(families.into_iter().map(|f| generate(f).expect("family parameters are in range")));
    }
    out
}

fn dedup(graphs: impl IntoIterator<Item = Graph>) -> Vec<Graph> {
    let mut seen = BTreeMap::new();
    for g in graphs {
        seen.entry(to_graph6(&g)).or_insert(g);
    }
    seen.into_values().collect()
}

/// Every distinct factor graph selected by `config`, ordered by graph6.
pub fn scope_graphs(config: &ScanConfig) -> Result<Vec<Graph>> {
    let mut graphs = Vec::new();
    if let Some((min, max)) = config.generator_sizes {
        graphs.extend(generator_graphs(min, max));
    }
    if let Some(n) = config.exhaustive_max_n {
        if n > MAX_EXHAUSTIVE_N {
            return Err(Error::Invalid(format!(
                "exhaustive scans support at most {MAX_EXHAUSTIVE_N} vertices per factor, got {n}"
            )));
        }
        for k in 1..=n {
            graphs.extend(enumerate_connected(k)?);
        }
    }
    Ok(dedup(graphs))
}

fn hajos_instances(
    graphs: &[Graph],
    make: fn(Graph, Graph, HajosSpec) -> Instance,
) -> impl Iterator<Item = Instance> + '_ {
    graphs.iter().flat_map(move |g1| {
        graphs.iter().flat_map(move |g2| {
            let e2s = oriented_edges(g2);
            oriented_edges(g1).into_iter().flat_map(move |e1| {
                let e2s = e2s.clone();
                e2s.into_iter()
                    .map(move |e2| make(g1.clone(), g2.clone(), HajosSpec::new(e1, e2)))
            })
        })
    })
}

fn instances_for(op: Operation, graphs: &[Graph]) -> Vec<Instance> {
    let pairs = |bop: BinaryOp| -> Vec<Instance> {
        graphs
            .iter()
            .flat_map(|g| graphs.iter().map(move |h| Instance::binary(bop, g.clone(), h.clone())))
            .collect()
    };
    match op {
        Operation::Join => pairs(BinaryOp::Join),
        Operation::Corona => pairs(BinaryOp::Corona),
        Operation::Ncorona => pairs(BinaryOp::NeighbourhoodCorona),
        Operation::Hajos => hajos_instances(graphs, Instance::hajos).collect(),
        Operation::Regular => graphs.iter().map(|g| Instance::Regular { g: g.clone() }).collect(),
    }
}

fn evaluate(instances: Vec<Instance>, opts: &CheckOptions) -> Result<Vec<super::ReportEntry>> {
    let mut by_id = BTreeMap::new();
    for inst in instances {
        by_id.entry(inst.id()).or_insert(inst);
    }
    let unique: Vec<Instance> = by_id.into_values().collect();
    unique.par_iter().map(|inst| check_instance(inst, opts)).collect()
}

/// Checks every instance in scope for every configured operation.
pub fn run_family_scan(config: &ScanConfig) -> Result<Report> {
    let graphs = scope_graphs(config)?;
    let instances = config
        .ops
        .iter()
        .flat_map(|&op| instances_for(op, &graphs))
        .collect();
    let opts = CheckOptions {
        instance_budget: Duration::from_millis(config.instance_budget_ms),
        deadline: None,
    };
    let entries = evaluate(instances, &opts)?;
    Ok(Report::new(
        serde_json::to_value(config).expect("config serializes"),
        entries,
    ))
}

#[derive(Debug, Clone)]
pub enum ConjectureScope {
    /// All labeled connected factors with `2..=max_n` vertices.
    Exhaustive { max_n: usize },
    /// Named families with order `2..=max`.
    Generators { max: usize },
    /// Explicit ordered factor pairs.
    Pairs(Vec<(Graph, Graph)>),
}

impl ConjectureScope {
    fn describe(&self) -> serde_json::Value {
        match self {
            ConjectureScope::Exhaustive { max_n } => json!({"mode": "exhaustive", "max_n": max_n}),
            ConjectureScope::Generators { max } => json!({"mode": "generators", "max": max}),
            ConjectureScope::Pairs(pairs) => json!({
                "mode": "pairs",
                "pairs": pairs.iter().map(|(a, b)| [to_graph6(a), to_graph6(b)]).collect::<Vec<_>>(),
            }),
        }
    }
}

/// Hunts for Hajós sums below `γ1 + γ2 - 2` over every ordered factor pair
/// and every pair of oriented edges. Instances not reached before `budget`
/// runs out are recorded as skipped and the report is marked incomplete.
pub fn conjecture_scan(scope: &ConjectureScope, budget: Duration) -> Result<Report> {
    let start = Instant::now();
    let instances: Vec<Instance> = match scope {
        ConjectureScope::Exhaustive { max_n } => {
            if *max_n > MAX_EXHAUSTIVE_N {
                return Err(Error::Invalid(format!(
                    "exhaustive conjecture scans support at most {MAX_EXHAUSTIVE_N} vertices, got {max_n}"
                )));
            }
            let mut graphs = Vec::new();
            for k in 2..=*max_n {
                graphs.extend(enumerate_connected(k)?);
            }
            hajos_instances(&dedup(graphs), Instance::conjecture).collect()
        }
        ConjectureScope::Generators { max } => {
            hajos_instances(&dedup(generator_graphs(2, *max)), Instance::conjecture).collect()
        }
        ConjectureScope::Pairs(pairs) => pairs
            .iter()
            .flat_map(|(g1, g2)| hajos_instances_pair(g1, g2))
            .collect(),
    };
    let opts = CheckOptions {
        instance_budget: super::DEFAULT_INSTANCE_BUDGET,
        deadline: Some(start + budget),
    };
    let entries = evaluate(instances, &opts)?;
    let config = json!({
        "scope": scope.describe(),
        "budget_ms": budget.as_millis() as u64,
    });
    let mut report = Report::new(config, entries);
    report.conjecture = Some(conjecture_summary(&report));
    Ok(report)
}

fn hajos_instances_pair(g1: &Graph, g2: &Graph) -> Vec<Instance> {
    let mut out = Vec::new();
    for e1 in oriented_edges(g1) {
        for e2 in oriented_edges(g2) {
            out.push(Instance::conjecture(g1.clone(), g2.clone(), HajosSpec::new(e1, e2)));
        }
    }
    out
}

fn conjecture_summary(report: &Report) -> ConjectureSummary {
    let mut s = ConjectureSummary::default();
    for e in &report.entries {
        if let Some(slack) = e.slack {
            if s.min_slack.map_or(true, |m| slack < m) {
                s.min_slack = Some(slack);
                s.min_slack_instance = Some(e.instance_id.clone());
            }
        }
        if e.verdict == Verdict::Discrepancy {
            s.counterexamples.push(e.instance_id.clone());
        }
        if let (Some([g1, g2]), Some(o)) = (e.factor_values, &e.oracle) {
            if o.value > g1 + g2 + 1 {
                s.upper_bound_violations.push(e.instance_id.clone());
            }
        }
    }
    s
}
