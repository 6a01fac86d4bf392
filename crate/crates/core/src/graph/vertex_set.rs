use std::fmt;

use serde::{Serialize, Serializer};

/// A subset of the vertices `0..n` of some graph, stored as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct VertexSet {
    n: usize,
    bits: u64,
}

impl VertexSet {
    pub fn empty(n: usize) -> Self {
        debug_assert!(n <= super::MAX_VERTICES);
        VertexSet { n, bits: 0 }
    }

    pub fn full(n: usize) -> Self {
        VertexSet {
            n,
            bits: super::full_mask(n),
        }
    }

    /// Builds a set from a raw mask; bits at positions `>= n` are dropped.
    pub fn from_mask(n: usize, bits: u64) -> Self {
        VertexSet {
            n,
            bits: bits & super::full_mask(n),
        }
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(n: usize, vertices: I) -> Self {
        let mut s = VertexSet::empty(n);
        for v in vertices {
            s.insert(v);
        }
        s
    }

    /// Size of the ground set.
    pub fn universe(&self) -> usize {
        self.n
    }

    pub fn mask(&self) -> u64 {
        self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.n && self.bits >> v & 1 == 1
    }

    /// Panics if `v` is outside the ground set.
    pub fn insert(&mut self, v: usize) {
        assert!(v < self.n, "vertex {v} outside 0..{}", self.n);
        self.bits |= 1 << v;
    }

    pub fn remove(&mut self, v: usize) {
        if v < self.n {
            self.bits &= !(1 << v);
        }
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        VertexSet::from_mask(self.n, self.bits | other.bits)
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        VertexSet::from_mask(self.n, self.bits & other.bits)
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        VertexSet::from_mask(self.n, self.bits & !other.bits)
    }

    pub fn complement(&self) -> VertexSet {
        VertexSet::from_mask(self.n, !self.bits)
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.bits & !other.bits == 0
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.bits & other.bits == 0
    }

    /// Members in ascending order.
    pub fn iter(&self) -> Members {
        Members(self.bits)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

/// Ascending iterator over the set bits of a mask.
#[derive(Clone)]
pub struct Members(pub(crate) u64);

impl Iterator for Members {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for Members {}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = usize;
    type IntoIter = Members;

    fn into_iter(self) -> Members {
        self.iter()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}
