use super::{full_mask, Graph, Members};
use crate::error::{Error, Result};

/// Labeled connected graphs on `n` vertices in ascending edge-mask order.
///
/// Bit `k` of the mask is the `k`-th vertex pair in graph6 order
/// (`(0,1), (0,2), (1,2), (0,3), ...`).
pub struct ConnectedGraphs {
    n: usize,
    pairs: Vec<(usize, usize)>,
    next: u64,
    end: u64,
}

pub fn enumerate_connected(n: usize) -> Result<ConnectedGraphs> {
    if !(1..=7).contains(&n) {
        return Err(Error::EnumerationRange(n));
    }
    let pairs: Vec<_> = (1..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
    Ok(ConnectedGraphs {
        n,
        end: 1 << pairs.len(),
        pairs,
        next: 0,
    })
}

impl ConnectedGraphs {
    fn adjacency(&self, mask: u64) -> Vec<u64> {
        let mut adj = vec![0u64; self.n];
        for k in Members(mask) {
            let (u, v) = self.pairs[k];
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        adj
    }
}

fn connected(adj: &[u64]) -> bool {
    let mut seen = 1u64;
    let mut frontier = 1u64;
    while frontier != 0 {
        let next = Members(frontier).fold(0, |acc, v| acc | adj[v]);
        frontier = next & !seen;
        seen |= next;
    }
    seen == full_mask(adj.len())
}

impl Iterator for ConnectedGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        while self.next < self.end {
            let mask = self.next;
            self.next += 1;
            // A connected graph needs at least n - 1 edges.
            if (mask.count_ones() as usize) + 1 < self.n {
                continue;
            }
            let adj = self.adjacency(mask);
            if connected(&adj) {
                return Some(Graph::from_masks(adj));
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn range_checked() {
        assert!(enumerate_connected(0).is_err());
        assert!(enumerate_connected(8).is_err());
    }

    #[test]
    fn small_counts() {
        let counts: Vec<usize> = (1..=4).map(|n| enumerate_connected(n).unwrap().count()).collect();
        assert_eq!(counts, vec![1, 1, 4, 38]);
    }

    #[test]
    fn n3_contents() {
        let gs: Vec<Graph> = enumerate_connected(3).unwrap().collect();
        assert_eq!(gs.iter().filter(|g| g.size() == 2).count(), 3);
        assert_eq!(gs.last().unwrap().size(), 3);
    }
}
