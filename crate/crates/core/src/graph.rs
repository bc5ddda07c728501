//! Undirected simple graphs stored as a string of edge bits.
//!
//! Vertices are 0-based. The C(n,2) possible edges are numbered in
//! lexicographic order of their (u, v) pairs with u < v, and a graph is
//! exactly the bit string indexed that way; see [`edge_index`].

use crate::bits::BitVec;
use crate::error::{Error, Result};

/// n*(n-1)/2, the number of vertex pairs.
pub fn binom2(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Position of edge {u, v} in the canonical lexicographic edge order.
///
/// The pair is sorted internally, so the index is symmetric in (u, v).
pub fn edge_index(u: usize, v: usize, n: usize) -> Result<usize> {
    if u == v {
        return Err(Error::Domain(format!(
            "edge endpoints must differ, got ({u}, {v})"
        )));
    }
    if u >= n || v >= n {
        return Err(Error::Domain(format!(
            "vertex out of range for n={n}: ({u}, {v})"
        )));
    }
    let (u, v) = if u < v { (u, v) } else { (v, u) };
    Ok(u * n - u * (u + 1) / 2 + (v - u - 1))
}

/// Inverse of [`edge_index`]: the pair (u, v) with u < v at position `i`.
pub fn edge_from_index(i: usize, n: usize) -> Result<(usize, usize)> {
    if i >= binom2(n) {
        return Err(Error::Domain(format!(
            "edge index {i} out of range for n={n} ({} edges)",
            binom2(n)
        )));
    }
    let mut rem = i;
    let mut u = 0;
    // Row u holds the n-1-u pairs (u, u+1)..(u, n-1).
    while rem >= n - 1 - u {
        rem -= n - 1 - u;
        u += 1;
    }
    Ok((u, u + 1 + rem))
}

/// An n-vertex graph as C(n,2) edge bits in canonical edge order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    bits: BitVec,
}

impl Graph {
    /// Graph with no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            bits: BitVec::zeros(binom2(n)),
        }
    }

    /// Complete graph K_n.
    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        g.bits.flip_all();
        g
    }

    /// Wraps an edge bit string; its length must be exactly C(n,2).
    pub fn from_bits(n: usize, bits: BitVec) -> Result<Self> {
        if bits.len() != binom2(n) {
            return Err(Error::Domain(format!(
                "edge string has {} bits, expected C({n},2) = {}",
                bits.len(),
                binom2(n)
            )));
        }
        Ok(Graph { n, bits })
    }

    /// The cycle C_n for n >= 3 (C5 is the canonical 3-Ramsey graph).
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least 3 vertices, got {n}");
        let mut g = Graph::empty(n);
        for i in 0..n {
            g.set_edge(i, (i + 1) % n, true);
        }
        g
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_bits(&self) -> &BitVec {
        &self.bits
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        if u == v {
            return false;
        }
        self.bits
            .get(edge_index(u, v, self.n).expect("vertices in range"))
    }

    pub fn set_edge(&mut self, u: usize, v: usize, present: bool) {
        let i = edge_index(u, v, self.n).expect("vertices in range");
        self.bits.set(i, present);
    }

    pub fn edge_count(&self) -> usize {
        self.bits.count_ones()
    }

    /// Edges as (u, v) pairs with u < v, ascending by edge index.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.bits.len()).filter_map(move |i| {
            if self.bits.get(i) {
                Some(edge_from_index(i, self.n).expect("index in range"))
            } else {
                None
            }
        })
    }

    /// Neighbor bitsets, one row of ceil(n/64) words per vertex.
    /// Row-major scratch for the clique search.
    pub fn adjacency_rows(&self) -> Vec<Vec<u64>> {
        let words = self.n.div_ceil(64).max(1);
        let mut rows = vec![vec![0u64; words]; self.n];
        for (u, v) in self.edges() {
            rows[u][v / 64] |= 1 << (v % 64);
            rows[v][u / 64] |= 1 << (u % 64);
        }
        rows
    }
}
