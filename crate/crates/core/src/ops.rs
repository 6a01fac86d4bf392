//! The four binary operations, each returning the product graph together with
//! an [`IndexMap`] that traces every output vertex back to its factor.
//!
//! Index conventions:
//! - join `G + H`: `G` keeps `0..n_g`, `H` vertex `u` becomes `n_g + u`.
//! - corona `G ∘ H` and neighbourhood corona `G ⋆ H`: `G` keeps `0..n_g`,
//!   vertex `u` of copy `i` becomes `n_g + i * n_h + u`.
//! - Hajós sum: the merged vertex is 0, then the remaining `G1` vertices in
//!   order, then the remaining `G2` vertices in order.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet, MAX_VERTICES};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BinaryOp {
    Join,
    Corona,
    NeighbourhoodCorona,
}

impl BinaryOp {
    pub fn apply(self, g: &Graph, h: &Graph) -> Result<(Graph, IndexMap)> {
        match self {
            BinaryOp::Join => join(g, h),
            BinaryOp::Corona => corona(g, h),
            BinaryOp::NeighbourhoodCorona => neighbourhood_corona(g, h),
        }
    }
}

/// Where an output vertex came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Origin {
    /// Vertex of the first operand (`G` or `G1`).
    Left(usize),
    /// Vertex of the second operand; `copy` is set for corona-type products.
    Right { copy: Option<usize>, vertex: usize },
    /// The Hajós vertex obtained by identifying `x1` of `G1` with `x2` of `G2`.
    Merged { left: usize, right: usize },
}

impl fmt::Display for Origin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Origin::Left(v) => write!(f, "L{v}"),
            Origin::Right { copy: None, vertex } => write!(f, "R{vertex}"),
            Origin::Right {
                copy: Some(i),
                vertex,
            } => write!(f, "R{vertex}@{i}"),
            Origin::Merged { left, right } => write!(f, "M{left}={right}"),
        }
    }
}

/// Output vertex `i` came from `origins[i]`. Serialized as compact strings:
/// `L3` (left vertex 3), `R2` (right vertex 2), `R2@1` (vertex 2 of copy 1),
/// `M0=1` (merged vertex from left 0 and right 1).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexMap {
    origins: Vec<Origin>,
}

impl IndexMap {
    pub fn len(&self) -> usize {
        self.origins.len()
    }

    pub fn is_empty(&self) -> bool {
        self.origins.is_empty()
    }

    pub fn origin(&self, v: usize) -> Option<Origin> {
        self.origins.get(v).copied()
    }

    pub fn position(&self, origin: Origin) -> Option<usize> {
        self.origins.iter().position(|&o| o == origin)
    }

    pub fn origins(&self) -> &[Origin] {
        &self.origins
    }
}

impl Serialize for IndexMap {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.origins.iter().map(Origin::to_string))
    }
}

fn check_order(n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices(n));
    }
    Ok(())
}

/// Pushes the edges of `h`, shifted by `offset`, into `edges`.
fn shifted_edges(h: &Graph, offset: usize, edges: &mut Vec<(usize, usize)>) {
    edges.extend(h.edges().map(|(u, v)| (u + offset, v + offset)));
}

pub fn join(g: &Graph, h: &Graph) -> Result<(Graph, IndexMap)> {
    let (ng, nh) = (g.order(), h.order());
    check_order(ng + nh)?;
    let mut edges: Vec<_> = g.edges().collect();
    shifted_edges(h, ng, &mut edges);
    edges.extend((0..ng).flat_map(|u| (0..nh).map(move |w| (u, ng + w))));
    let origins = (0..ng)
        .map(Origin::Left)
        .chain((0..nh).map(|vertex| Origin::Right { copy: None, vertex }))
        .collect();
    Ok((Graph::new(ng + nh, edges)?, IndexMap { origins }))
}

fn copies_index_map(ng: usize, nh: usize) -> IndexMap {
    let origins = (0..ng)
        .map(Origin::Left)
        .chain((0..ng).flat_map(|i| {
            (0..nh).map(move |vertex| Origin::Right {
                copy: Some(i),
                vertex,
            })
        }))
        .collect();
    IndexMap { origins }
}

/// `G ∘ H`: vertex `i` of `G` is joined to every vertex of the `i`-th copy of `H`.
pub fn corona(g: &Graph, h: &Graph) -> Result<(Graph, IndexMap)> {
    let (ng, nh) = (g.order(), h.order());
    if ng == 0 {
        return Err(Error::Invalid("corona needs a non-empty first operand".into()));
    }
    let n = ng * (1 + nh);
    check_order(n)?;
    let mut edges: Vec<_> = g.edges().collect();
    for i in 0..ng {
        let base = ng + i * nh;
        shifted_edges(h, base, &mut edges);
        edges.extend((0..nh).map(|u| (i, base + u)));
    }
    Ok((Graph::new(n, edges)?, copies_index_map(ng, nh)))
}

/// `G ⋆ H`: every neighbour of vertex `i` of `G` is joined to every vertex of
/// the `i`-th copy of `H`.
pub fn neighbourhood_corona(g: &Graph, h: &Graph) -> Result<(Graph, IndexMap)> {
    let (ng, nh) = (g.order(), h.order());
    if ng == 0 {
        return Err(Error::Invalid(
            "neighbourhood corona needs a non-empty first operand".into(),
        ));
    }
    let n = ng * (1 + nh);
    check_order(n)?;
    let mut edges: Vec<_> = g.edges().collect();
    for i in 0..ng {
        let base = ng + i * nh;
        shifted_edges(h, base, &mut edges);
        let nbrs = g.neighbors(i)?;
        edges.extend(nbrs.iter().flat_map(|w| (0..nh).map(move |u| (w, base + u))));
    }
    Ok((Graph::new(n, edges)?, copies_index_map(ng, nh)))
}

/// Oriented edges for a Hajós sum: the first endpoint of each pair is the
/// vertex that gets identified (`x`), the second keeps its role (`y`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HajosSpec {
    pub e1: (usize, usize),
    pub e2: (usize, usize),
}

impl HajosSpec {
    pub fn new(e1: (usize, usize), e2: (usize, usize)) -> Self {
        HajosSpec { e1, e2 }
    }
}

impl fmt::Display for HajosSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}/{}-{}", self.e1.0, self.e1.1, self.e2.0, self.e2.1)
    }
}

/// Parses `u,v` (also accepts `u-v`).
pub fn parse_oriented_edge(s: &str) -> Result<(usize, usize)> {
    let (a, b) = s
        .split_once([',', '-'])
        .ok_or_else(|| Error::Invalid(format!("edge {s:?} is not of the form u,v")))?;
    let parse = |t: &str| {
        usize::from_str(t.trim()).map_err(|_| Error::Invalid(format!("bad vertex {t:?} in edge {s:?}")))
    };
    Ok((parse(a)?, parse(b)?))
}

/// `G1(x1y1) +_H G2(x2y2)`: delete `x1y1` and `x2y2`, identify `x1` with `x2`,
/// add `y1y2`.
pub fn hajos_sum(g1: &Graph, g2: &Graph, spec: HajosSpec) -> Result<(Graph, IndexMap)> {
    let (x1, y1) = spec.e1;
    let (x2, y2) = spec.e2;
    if !g1.has_edge(x1, y1) {
        return Err(Error::MissingEdge { u: x1, v: y1 });
    }
    if !g2.has_edge(x2, y2) {
        return Err(Error::MissingEdge { u: x2, v: y2 });
    }
    let (n1, n2) = (g1.order(), g2.order());
    let n = n1 + n2 - 1;
    check_order(n)?;

    let mut origins = vec![Origin::Merged {
        left: x1,
        right: x2,
    }];
    let mut map1 = vec![0; n1];
    for v in (0..n1).filter(|&v| v != x1) {
        map1[v] = origins.len();
        origins.push(Origin::Left(v));
    }
    let mut map2 = vec![0; n2];
    for v in (0..n2).filter(|&v| v != x2) {
        map2[v] = origins.len();
        origins.push(Origin::Right {
            copy: None,
            vertex: v,
        });
    }

    let is_removed = |(u, v): (usize, usize), (x, y): (usize, usize)| {
        (u, v) == (x, y) || (v, u) == (x, y)
    };
    let mut edges: Vec<_> = g1
        .edges()
        .filter(|&e| !is_removed(e, spec.e1))
        .map(|(u, v)| (map1[u], map1[v]))
        .collect();
    edges.extend(
        g2.edges()
            .filter(|&e| !is_removed(e, spec.e2))
            .map(|(u, v)| (map2[u], map2[v])),
    );
    edges.push((map1[y1], map2[y2]));
    Ok((Graph::new(n, edges)?, IndexMap { origins }))
}

/// Oriented edges `(x, y)` of `g`, both orientations, in graph6 edge order.
pub fn oriented_edges(g: &Graph) -> Vec<(usize, usize)> {
    g.edges().flat_map(|(u, v)| [(u, v), (v, u)]).collect()
}

/// Attaches a new pendant vertex `n` to vertex `at`.
pub fn add_pendant(g: &Graph, at: usize) -> Result<Graph> {
    let n = g.order();
    if at >= n {
        return Err(Error::VertexOutOfRange { vertex: at, n });
    }
    Graph::new(n + 1, g.edges().chain([(at, n)]))
}

/// Set of output vertices whose origin satisfies `pred`.
pub fn select(map: &IndexMap, pred: impl Fn(Origin) -> bool) -> VertexSet {
    VertexSet::from_vertices(
        map.len(),
        map.origins().iter().enumerate().filter(|(_, &o)| pred(o)).map(|(i, _)| i),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, Family};

    fn fam(f: Family) -> Graph {
        generate(f).unwrap()
    }

    #[test]
    fn join_examples() {
        let k1 = fam(Family::Complete(1));
        let (g, _) = join(&k1, &k1).unwrap();
        assert_eq!(g, fam(Family::Complete(2)));

        let p2 = fam(Family::Path(2));
        let (g, _) = join(&p2, &p2).unwrap();
        assert_eq!(g, fam(Family::Complete(4)));

        let (g, map) = join(&fam(Family::Path(3)), &fam(Family::Cycle(4))).unwrap();
        assert_eq!(g.degrees(), vec![5, 6, 5, 5, 5, 5, 5]);
        assert_eq!(map.origin(3), Some(Origin::Right { copy: None, vertex: 0 }));
    }

    #[test]
    fn join_allows_empty_operands() {
        let e0 = fam(Family::Empty(0));
        let p3 = fam(Family::Path(3));
        assert_eq!(join(&e0, &p3).unwrap().0, p3);
    }

    #[test]
    fn corona_examples() {
        let (g, _) = corona(&fam(Family::Path(2)), &fam(Family::Complete(1))).unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 2), (1, 3)]);

        let (g, _) = corona(&fam(Family::Cycle(3)), &fam(Family::Complete(1))).unwrap();
        assert_eq!((g.order(), g.size()), (6, 6));
        assert_eq!(g.degrees(), vec![3, 3, 3, 1, 1, 1]);

        let (g, map) = corona(&fam(Family::Path(2)), &fam(Family::Path(2))).unwrap();
        assert_eq!((g.order(), g.size()), (6, 7));
        assert_eq!(map.origin(4), Some(Origin::Right { copy: Some(1), vertex: 0 }));
        assert!(corona(&fam(Family::Empty(0)), &fam(Family::Path(2))).is_err());
    }

    #[test]
    fn neighbourhood_corona_examples() {
        let (g, _) = neighbourhood_corona(&fam(Family::Path(4)), &fam(Family::Path(3))).unwrap();
        assert_eq!((g.order(), g.size()), (16, 29));

        let (g, _) = neighbourhood_corona(&fam(Family::Path(2)), &fam(Family::Complete(4))).unwrap();
        assert_eq!(g.order(), 10);
        assert_eq!(&g.degrees()[..2], &[5, 5]);
        assert!(g.degrees()[2..].iter().all(|&d| d == 4));

        let p3 = fam(Family::Path(3));
        let (g, _) = neighbourhood_corona(&fam(Family::Complete(1)), &p3).unwrap();
        assert_eq!(g.degree(0).unwrap(), 0);
        assert!(!g.is_connected());
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(1, 2), (2, 3)]);
    }

    #[test]
    fn hajos_examples() {
        let k4 = fam(Family::Complete(4));
        let c4 = fam(Family::Cycle(4));
        let (g, map) = hajos_sum(&k4, &c4, HajosSpec::new((0, 1), (0, 1))).unwrap();
        assert_eq!((g.order(), g.size()), (7, 9));
        assert_eq!(g.degree(0).unwrap(), 3);
        assert_eq!(map.origin(0), Some(Origin::Merged { left: 0, right: 0 }));

        let c3 = fam(Family::Cycle(3));
        let (g, _) = hajos_sum(&c3, &c3, HajosSpec::new((0, 1), (0, 1))).unwrap();
        assert_eq!((g.order(), g.size()), (5, 5));
        assert_eq!(g.regularity(), Some(2));
        assert!(g.is_connected());

        let (g, _) = hajos_sum(&k4, &k4, HajosSpec::new((2, 3), (1, 0))).unwrap();
        assert_eq!(g.degree(0).unwrap(), 4);
    }

    #[test]
    fn hajos_orientation_matters() {
        let p3 = fam(Family::Path(3));
        let k3 = fam(Family::Cycle(3));
        let (a, _) = hajos_sum(&p3, &k3, HajosSpec::new((0, 1), (0, 1))).unwrap();
        let (b, _) = hajos_sum(&p3, &k3, HajosSpec::new((1, 0), (0, 1))).unwrap();
        assert_ne!(a.degrees(), b.degrees());
    }

    #[test]
    fn hajos_rejects_missing_edges() {
        let p3 = fam(Family::Path(3));
        assert_eq!(
            hajos_sum(&p3, &p3, HajosSpec::new((0, 2), (0, 1))).unwrap_err(),
            Error::MissingEdge { u: 0, v: 2 }
        );
        assert!(hajos_sum(&p3, &p3, HajosSpec::new((0, 1), (5, 1))).is_err());
    }

    #[test]
    fn output_limit() {
        let k8 = fam(Family::Complete(8));
        assert_eq!(corona(&k8, &k8).unwrap_err(), Error::TooManyVertices(72));
        let e40 = fam(Family::Empty(40));
        assert!(join(&e40, &e40).is_err());
    }

    #[test]
    fn edge_parsing() {
        assert_eq!(parse_oriented_edge("3,1").unwrap(), (3, 1));
        assert_eq!(parse_oriented_edge("0-2").unwrap(), (0, 2));
        assert!(parse_oriented_edge("3").is_err());
        assert!(parse_oriented_edge("a,b").is_err());
    }

    #[test]
    fn pendant() {
        let g = add_pendant(&fam(Family::Cycle(6)), 0).unwrap();
        assert_eq!(g.degrees(), vec![3, 2, 2, 2, 2, 2, 1]);
    }
}
