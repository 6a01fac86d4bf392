//! Simple undirected graphs on at most [`MAX_VERTICES`] vertices.
//!
//! Vertices are the dense labels `0..n` and adjacency is stored as one `u64`
//! neighbour mask per vertex, so every vertex subset fits in a single word.

mod enumerate;
mod formats;
mod generators;
mod graph6;
mod vertex_set;

use std::fmt;

use crate::error::{Error, Result};

pub use enumerate::{enumerate_connected, ConnectedGraphs};
pub use formats::{parse_edge_list, to_dot, to_edge_list};
pub use generators::{generate, Family};
pub use graph6::{parse_graph6, to_graph6};
pub use vertex_set::{Members, VertexSet};

/// Largest vertex count supported (the graph6 short form limit).
pub const MAX_VERTICES: usize = 62;

pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

#[derive(Clone)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
    name: Option<String>,
}

impl Graph {
    /// Builds a graph from an edge list. Repeated edges collapse.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        let mut adj = vec![0u64; n];
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::VertexOutOfRange {
                    vertex: u.max(v),
                    n,
                });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Ok(Graph { n, adj, name: None })
    }

    /// Graph from already symmetric, loop-free neighbour masks.
    pub(crate) fn from_masks(adj: Vec<u64>) -> Self {
        debug_assert!(adj.len() <= MAX_VERTICES);
        debug_assert!(adj.iter().enumerate().all(|(v, &m)| m >> v & 1 == 0
            && m & !full_mask(adj.len()) == 0
            && VertexSet::from_mask(adj.len(), m).iter().all(|u| adj[u] >> v & 1 == 1)));
        Graph {
            n: adj.len(),
            adj,
            name: None,
        }
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    pub fn all(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.adj[v].count_ones() as usize)
    }

    /// Degree without the range check; panics on a bad index.
    pub(crate) fn deg(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.vertices().map(|v| self.deg(v)).collect()
    }

    pub fn neighbors(&self, v: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        Ok(VertexSet::from_mask(self.n, self.adj[v]))
    }

    pub(crate) fn neighbor_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    /// `N[v]` as a mask.
    pub(crate) fn closed_mask(&self, v: usize) -> u64 {
        self.adj[v] | 1 << v
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    /// Edges `(u, v)` with `u < v`, ordered by `v` then `u` (graph6 bit order).
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (1..self.n).flat_map(move |v| {
            VertexSet::from_mask(self.n, self.adj[v] & full_mask(v))
                .iter()
                .map(move |u| (u, v))
        })
    }

    /// `Some(r)` if every vertex has degree `r`. The empty graph is not regular.
    pub fn regularity(&self) -> Option<usize> {
        let first = self.adj.first()?.count_ones();
        self.adj
            .iter()
            .all(|m| m.count_ones() == first)
            .then_some(first as usize)
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return false;
        }
        let all = full_mask(self.n);
        let mut seen = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let mut next = 0;
            for v in Members(frontier) {
                next |= self.adj[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen == all
    }

    pub fn parity_profile(&self) -> ParityProfile {
        let mut odd = VertexSet::empty(self.n);
        let mut even = VertexSet::empty(self.n);
        let mut zero = VertexSet::empty(self.n);
        for v in self.vertices() {
            let d = self.deg(v);
            if d % 2 == 1 {
                odd.insert(v);
            } else {
                even.insert(v);
                if d == 0 {
                    zero.insert(v);
                }
            }
        }
        ParityProfile { odd, even, zero }
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
        }
        Ok(())
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.adj == other.adj
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut d = f.debug_struct("Graph");
        if let Some(name) = &self.name {
            d.field("name", name);
        }
        d.field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Vertices split by degree parity. Isolated vertices sit in both `even` and `zero`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParityProfile {
    pub odd: VertexSet,
    pub even: VertexSet,
    pub zero: VertexSet,
}
