//! Claim-versus-oracle harness.
//!
//! Every instance is built, evaluated with the matching closed-form claim and
//! solved exactly; the two are compared into a [`Verdict`]. A mismatch with
//! an exact-value claim is reported as a discrepancy, it is not an error.

mod fixtures;
mod report;
mod scan;

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::formulas::{self, Branch, Claim, EvalResult};
use crate::graph::{to_graph6, Graph, VertexSet};
use crate::ops::{self, BinaryOp, HajosSpec, IndexMap};
use crate::solver::{self, DominationKind};

pub use fixtures::{named_fixtures, Expectation, Fixture, FixtureCheck, FixtureOutcome, Recipe};
pub use report::{ConjectureSummary, Report, Summary};
pub use scan::{
    conjecture_scan, generator_graphs, run_family_scan, scope_graphs, ConjectureScope, ScanConfig,
};

pub const DEFAULT_INSTANCE_BUDGET: Duration = Duration::from_secs(10);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Operation {
    Join,
    Corona,
    Ncorona,
    Hajos,
    Regular,
}

impl Operation {
    pub const ALL: [Operation; 5] = [
        Operation::Join,
        Operation::Corona,
        Operation::Ncorona,
        Operation::Hajos,
        Operation::Regular,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Operation::Join => "join",
            Operation::Corona => "corona",
            Operation::Ncorona => "ncorona",
            Operation::Hajos => "hajos",
            Operation::Regular => "regular",
        }
    }
}

impl fmt::Display for Operation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Operation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Operation::ALL
            .into_iter()
            .find(|op| op.as_str() == s)
            .ok_or_else(|| Error::Invalid(format!("unknown operation {s:?}")))
    }
}

/// Which Hajós claim an instance is checked against.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HajosClaim {
    Upper,
    ConjecturedLower,
}

#[derive(Debug, Clone)]
pub enum Instance {
    Binary { op: BinaryOp, g: Graph, h: Graph },
    Hajos {
        g1: Graph,
        g2: Graph,
        spec: HajosSpec,
        claim: HajosClaim,
    },
    Regular { g: Graph },
}

impl Instance {
    pub fn binary(op: BinaryOp, g: Graph, h: Graph) -> Self {
        Instance::Binary { op, g, h }
    }

    pub fn hajos(g1: Graph, g2: Graph, spec: HajosSpec) -> Self {
        Instance::Hajos {
            g1,
            g2,
            spec,
            claim: HajosClaim::Upper,
        }
    }

    pub fn conjecture(g1: Graph, g2: Graph, spec: HajosSpec) -> Self {
        Instance::Hajos {
            g1,
            g2,
            spec,
            claim: HajosClaim::ConjecturedLower,
        }
    }

    pub fn operation(&self) -> Operation {
        match self {
            Instance::Binary { op: BinaryOp::Join, .. } => Operation::Join,
            Instance::Binary { op: BinaryOp::Corona, .. } => Operation::Corona,
            Instance::Binary {
                op: BinaryOp::NeighbourhoodCorona,
                ..
            } => Operation::Ncorona,
            Instance::Hajos { .. } => Operation::Hajos,
            Instance::Regular { .. } => Operation::Regular,
        }
    }

    pub fn factors(&self) -> Vec<String> {
        match self {
            Instance::Binary { g, h, .. } => vec![to_graph6(g), to_graph6(h)],
            Instance::Hajos { g1, g2, .. } => vec![to_graph6(g1), to_graph6(g2)],
            Instance::Regular { g } => vec![to_graph6(g)],
        }
    }

    /// Stable key. graph6 never contains `:`, so the parts cannot collide.
    pub fn id(&self) -> String {
        let mut parts = vec![match self {
            Instance::Hajos {
                claim: HajosClaim::ConjecturedLower,
                ..
            } => "conjecture".to_string(),
            _ => self.operation().to_string(),
        }];
        parts.extend(self.factors());
        if let Instance::Hajos { spec, .. } = self {
            parts.push(spec.to_string());
        }
        parts.join(":")
    }

    pub fn build(&self) -> Result<(Graph, Option<IndexMap>)> {
        match self {
            Instance::Binary { op, g, h } => op.apply(g, h).map(|(p, m)| (p, Some(m))),
            Instance::Hajos { g1, g2, spec, .. } => {
                ops::hajos_sum(g1, g2, *spec).map(|(p, m)| (p, Some(m)))
            }
            Instance::Regular { g } => Ok((g.clone(), None)),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Match,
    BoundHolds,
    BoundTight,
    Discrepancy,
    NotApplicable,
    Skipped,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Match => "match",
            Verdict::BoundHolds => "bound_holds",
            Verdict::BoundTight => "bound_tight",
            Verdict::Discrepancy => "discrepancy",
            Verdict::NotApplicable => "not_applicable",
            Verdict::Skipped => "skipped",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleOutcome {
    /// Co-even domination number of the product.
    pub value: usize,
    pub witness: VertexSet,
    /// Plain domination number of the product.
    pub gamma: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct ReportEntry {
    pub instance_id: String,
    pub operation: Operation,
    pub factors: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub edges: Option<String>,
    pub product: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub index_map: Option<IndexMap>,
    pub branch: Option<Branch>,
    pub formula: EvalResult,
    pub oracle: Option<OracleOutcome>,
    /// Co-even domination numbers of the two Hajós factors.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub factor_values: Option<[usize; 2]>,
    /// Oracle minus the claimed lower bound, for lower-bound claims.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub slack: Option<i64>,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    pub runtime_ms: u64,
}

impl ReportEntry {
    /// A discrepancy against a bound that has a complete proof.
    pub fn is_proven_violation(&self) -> bool {
        self.verdict == Verdict::Discrepancy && self.branch.is_some_and(Branch::is_proven_bound)
    }
}

#[derive(Debug, Clone, Copy)]
pub struct CheckOptions {
    pub instance_budget: Duration,
    /// Hard stop shared by a whole scan.
    pub deadline: Option<Instant>,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions {
            instance_budget: DEFAULT_INSTANCE_BUDGET,
            deadline: None,
        }
    }
}

impl CheckOptions {
    fn deadline_from(&self, start: Instant) -> Instant {
        let own = start + self.instance_budget;
        self.deadline.map_or(own, |d| d.min(own))
    }
}

/// Classifies an oracle value against a claim.
pub fn classify(claim: &Claim, value: usize) -> (Verdict, Option<String>) {
    let tight = |side: &str| (Verdict::BoundTight, Some(side.to_string()));
    let broken = || (Verdict::Discrepancy, Some(format!("claimed {claim}, oracle = {value}")));
    match *claim {
        Claim::NotApplicable(ref why) => (Verdict::NotApplicable, Some(why.clone())),
        Claim::Exact(v) if v == value => (Verdict::Match, None),
        Claim::Exact(_) => broken(),
        Claim::UpperBound(hi) if value == hi => tight("upper"),
        Claim::LowerBound(lo) if value == lo => tight("lower"),
        Claim::Range { lo, .. } if value == lo => tight("lower"),
        Claim::Range { hi, .. } if value == hi => tight("upper"),
        _ if claim.admits(value) == Some(true) => (Verdict::BoundHolds, None),
        _ => broken(),
    }
}

fn oracle(g: &Graph, deadline: Instant) -> std::result::Result<OracleOutcome, solver::Timeout> {
    let coe = solver::solve(g, DominationKind::Coeven, Some(deadline))?;
    let plain = solver::solve(g, DominationKind::Plain, Some(deadline))?;
    Ok(OracleOutcome {
        value: coe.value,
        witness: coe.witness,
        gamma: plain.value,
    })
}

/// Builds the instance, evaluates its claim and the exact oracle, and
/// classifies the outcome. Deterministic apart from `runtime_ms` and
/// deadline-driven skips.
pub fn check_instance(instance: &Instance, opts: &CheckOptions) -> Result<ReportEntry> {
    let start = Instant::now();
    let deadline = opts.deadline_from(start);
    let (product, index_map) = instance.build()?;

    let mut entry = ReportEntry {
        instance_id: instance.id(),
        operation: instance.operation(),
        factors: instance.factors(),
        edges: match instance {
            Instance::Hajos { spec, .. } => Some(spec.to_string()),
            _ => None,
        },
        product: to_graph6(&product),
        index_map,
        branch: None,
        formula: EvalResult {
            claim: Claim::NotApplicable("not evaluated".into()),
            branch: None,
        },
        oracle: None,
        factor_values: None,
        slack: None,
        verdict: Verdict::Skipped,
        note: None,
        runtime_ms: 0,
    };

    let skip = |mut entry: ReportEntry, what: &str| {
        entry.verdict = Verdict::Skipped;
        entry.note = Some(format!("oracle budget exhausted on {what}"));
        entry.runtime_ms = start.elapsed().as_millis() as u64;
        entry
    };

    let formula = match instance {
        Instance::Binary { op, g, h } => match op {
            BinaryOp::Join => formulas::coeven_join(g, h),
            BinaryOp::Corona => formulas::coeven_corona(g, h),
            BinaryOp::NeighbourhoodCorona => formulas::coeven_ncorona_bounds(g, h),
        },
        Instance::Regular { g } => formulas::coeven_regular(g),
        Instance::Hajos { g1, g2, claim, .. } => {
            let mut values = [0; 2];
            for (slot, g) in values.iter_mut().zip([g1, g2]) {
                match solver::solve(g, DominationKind::Coeven, Some(deadline)) {
                    Ok(r) => *slot = r.value,
                    Err(_) => return Ok(skip(entry, "a factor")),
                }
            }
            entry.factor_values = Some(values);
            if !g1.is_connected() || !g2.is_connected() {
                EvalResult {
                    claim: Claim::NotApplicable("Hajós claims need two connected graphs".into()),
                    branch: None,
                }
            } else {
                match claim {
                    HajosClaim::Upper => formulas::coeven_hajos_upper(values[0], values[1]),
                    HajosClaim::ConjecturedLower => {
                        formulas::coeven_hajos_conjectured_lower(values[0], values[1])
                    }
                }
            }
        }
    };
    entry.branch = formula.branch;
    entry.formula = formula;

    let outcome = match oracle(&product, deadline) {
        Ok(o) => o,
        Err(_) => return Ok(skip(entry, "the product")),
    };
    let (verdict, note) = classify(&entry.formula.claim, outcome.value);
    if let Claim::LowerBound(lo) = entry.formula.claim {
        entry.slack = Some(outcome.value as i64 - lo as i64);
    }
    entry.verdict = verdict;
    entry.note = note;
    entry.oracle = Some(outcome);
    entry.runtime_ms = start.elapsed().as_millis() as u64;
    Ok(entry)
}
