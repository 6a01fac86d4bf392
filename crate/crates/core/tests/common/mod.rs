//! Test-only oracles, written independently of the library's search code.
#![allow(dead_code)]

use coeven::graph::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Adjacency as plain nested vectors, read through the public API only.
pub fn adjacency(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.order();
    (0..n).map(|u| (0..n).map(|v| g.has_edge(u, v)).collect()).collect()
}

fn dominates(adj: &[Vec<bool>], set: &[bool]) -> bool {
    (0..adj.len()).all(|v| set[v] || (0..adj.len()).any(|u| set[u] && adj[u][v]))
}

fn degree(adj: &[Vec<bool>], v: usize) -> usize {
    adj[v].iter().filter(|&&b| b).count()
}

/// Minimum (co-even) dominating set by trying all `2^n` subsets. Among
/// minimum sets, returns the one whose sorted member list is smallest.
pub fn naive(g: &Graph, coeven: bool) -> (usize, Vec<usize>) {
    let adj = adjacency(g);
    let n = adj.len();
    let mut best: Option<Vec<usize>> = None;
    for mask in 0u64..(1 << n) {
        let set: Vec<bool> = (0..n).map(|v| mask >> v & 1 == 1).collect();
        if !dominates(&adj, &set) {
            continue;
        }
        if coeven && (0..n).any(|v| !set[v] && degree(&adj, v) % 2 == 1) {
            continue;
        }
        let members: Vec<usize> = (0..n).filter(|&v| set[v]).collect();
        let better = match &best {
            None => true,
            Some(b) => members.len() < b.len() || (members.len() == b.len() && members < *b),
        };
        if better {
            best = Some(members);
        }
    }
    let w = best.expect("the full vertex set always qualifies");
    (w.len(), w)
}

/// Union-find connectivity over an explicit edge list.
pub fn connected_uf(n: usize, edges: &[(usize, usize)]) -> bool {
    if n == 0 {
        return false;
    }
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut c = x;
        while p[c] != r {
            let next = p[c];
            p[c] = r;
            c = next;
        }
        r
    }
    for &(u, v) in edges {
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        parent[a] = b;
    }
    let root = find(&mut parent, 0);
    (0..n).all(|v| find(&mut parent, v) == root)
}

/// Vertex pairs in graph6 column order.
pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for v in 1..n {
        for u in 0..v {
            out.push((u, v));
        }
    }
    out
}

/// Connected labeled graphs on `n` vertices by filtering every edge mask.
pub fn connected_by_filter(n: usize) -> Vec<Vec<(usize, usize)>> {
    let ps = pairs(n);
    (0u64..1 << ps.len())
        .map(|mask| ps.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &e)| e).collect::<Vec<_>>())
        .filter(|edges| connected_uf(n, edges))
        .collect()
}

/// Reference graph6 encoder: builds the bit string as text, then packs it.
pub fn reference_graph6(n: usize, edges: &[(usize, usize)]) -> String {
    let mut bits = String::new();
    for (u, v) in pairs(n) {
        let hit = edges.iter().any(|&(a, b)| (a, b) == (u, v) || (b, a) == (u, v));
        bits.push(if hit { '1' } else { '0' });
    }
    while bits.len() % 6 != 0 {
        bits.push('0');
    }
    let mut out = String::new();
    out.push(char::from(63 + n as u8));
    for chunk in bits.as_bytes().chunks(6) {
        let val = u8::from_str_radix(std::str::from_utf8(chunk).unwrap(), 2).unwrap();
        out.push(char::from(63 + val));
    }
    out
}

/// `count` Erdős–Rényi graphs with `n` vertices and edge probability `p`,
/// from a fixed seed.
pub fn seeded_graphs(seed: u64, n: usize, p: f64, count: usize) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let edges: Vec<_> = pairs(n).into_iter().filter(|_| rng.gen_bool(p)).collect();
            Graph::new(n, edges).unwrap()
        })
        .collect()
}
