//! Exact minimum dominating and co-even dominating sets.
//!
//! A co-even dominating set must contain every vertex of odd or zero degree
//! (the forced set), so the search only decides which even-degree vertices to
//! add. Both problems run the same search: iterative deepening on the number
//! of extra vertices `k`, branching on the undominated vertex with the fewest
//! candidate dominators, and pruning when `k` times the best single-vertex
//! coverage cannot reach every undominated vertex.

use std::fmt;
use std::time::Instant;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{full_mask, Graph, Members, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DominationKind {
    Plain,
    Coeven,
}

impl fmt::Display for DominationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DominationKind::Plain => "plain",
            DominationKind::Coeven => "coeven",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DominationResult {
    pub value: usize,
    /// Lexicographically smallest minimum set.
    pub witness: VertexSet,
    pub kind: DominationKind,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("search deadline reached after {nodes} nodes")]
pub struct Timeout {
    pub nodes: u64,
}

/// Vertices of odd or zero degree.
pub fn forced_set(g: &Graph) -> VertexSet {
    let mask = g
        .vertices()
        .filter(|&v| {
            let d = g.deg(v);
            d % 2 == 1 || d == 0
        })
        .fold(0u64, |m, v| m | 1 << v);
    VertexSet::from_mask(g.order(), mask)
}

fn dominated_by(g: &Graph, d: u64) -> u64 {
    Members(d).fold(d, |acc, v| acc | g.neighbor_mask(v))
}

pub fn is_dominating(g: &Graph, d: &VertexSet) -> bool {
    dominated_by(g, d.mask()) == full_mask(g.order())
}

pub fn is_coeven_dominating(g: &Graph, d: &VertexSet) -> bool {
    is_dominating(g, d) && d.complement().iter().all(|v| g.deg(v) % 2 == 0)
}

pub fn domination_number(g: &Graph) -> DominationResult {
    solve(g, DominationKind::Plain, None).expect("no deadline")
}

pub fn coeven_domination_number(g: &Graph) -> DominationResult {
    solve(g, DominationKind::Coeven, None).expect("no deadline")
}

/// Exact solve with an optional wall-clock deadline.
pub fn solve(
    g: &Graph,
    kind: DominationKind,
    deadline: Option<Instant>,
) -> Result<DominationResult, Timeout> {
    let n = g.order();
    let (fixed, candidates) = match kind {
        DominationKind::Plain => (0, full_mask(n)),
        DominationKind::Coeven => {
            let forced = forced_set(g).mask();
            (forced, full_mask(n) & !forced)
        }
    };
    let mut search = Search::new(g, deadline);
    let dominated = dominated_by(g, fixed);

    // `candidates` always completes to a dominating set, so this terminates.
    let mut k = 0;
    while search.extend(dominated, candidates, k)?.is_none() {
        k += 1;
    }

    // Greedy in ascending vertex order: keep a vertex whenever some minimum
    // solution still contains the choices made so far plus that vertex.
    let mut chosen = 0u64;
    let mut dom = dominated;
    let mut left = k;
    for v in Members(candidates) {
        if left == 0 {
            break;
        }
        let later = candidates & !full_mask(v + 1);
        let with_v = dom | g.closed_mask(v);
        if search.extend(with_v, later, left - 1)?.is_some() {
            chosen |= 1 << v;
            dom = with_v;
            left -= 1;
        }
    }
    debug_assert_eq!(left, 0);
    debug_assert_eq!(dom, full_mask(n));

    let witness = VertexSet::from_mask(n, fixed | chosen);
    Ok(DominationResult {
        value: witness.len(),
        witness,
        kind,
    })
}

struct Search<'a> {
    g: &'a Graph,
    all: u64,
    deadline: Option<Instant>,
    nodes: u64,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph, deadline: Option<Instant>) -> Self {
        Search {
            g,
            all: full_mask(g.order()),
            deadline,
            nodes: 0,
        }
    }

    fn tick(&mut self) -> Result<(), Timeout> {
        self.nodes += 1;
        if self.nodes % 1024 == 1 {
            if let Some(d) = self.deadline {
                if Instant::now() >= d {
                    return Err(Timeout { nodes: self.nodes });
                }
            }
        }
        Ok(())
    }

    /// Some set of at most `budget` vertices from `candidates` that, together
    /// with the already `dominated` vertices, dominates the whole graph.
    fn extend(&mut self, dominated: u64, candidates: u64, budget: usize) -> Result<Option<u64>, Timeout> {
        self.tick()?;
        let undominated = self.all & !dominated;
        if undominated == 0 {
            return Ok(Some(0));
        }
        if budget == 0 {
            return Ok(None);
        }

        let mut best_cover = 0;
        for c in Members(candidates) {
            best_cover = best_cover.max((self.g.closed_mask(c) & undominated).count_ones());
        }
        if (budget as u64) * (best_cover as u64) < undominated.count_ones() as u64 {
            return Ok(None);
        }

        // Undominated vertex with the fewest candidate dominators.
        let mut pick = None;
        let mut fewest = u32::MAX;
        for u in Members(undominated) {
            let k = (self.g.closed_mask(u) & candidates).count_ones();
            if k < fewest {
                fewest = k;
                pick = Some(u);
                if k <= 1 {
                    break;
                }
            }
        }
        let Some(u) = pick else { return Ok(None) };
        if fewest == 0 {
            return Ok(None);
        }

        let mut remaining = candidates;
        for c in Members(self.g.closed_mask(u) & candidates) {
            remaining &= !(1 << c);
            let next = dominated | self.g.closed_mask(c);
            if let Some(rest) = self.extend(next, remaining, budget - 1)? {
                return Ok(Some(rest | 1 << c));
            }
        }
        Ok(None)
    }
}
