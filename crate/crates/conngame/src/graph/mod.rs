//! Immutable simple undirected graphs on at most 128 vertices.
//!
//! Vertices are `0..n`. Adjacency is stored twice: as sorted neighbor
//! lists for iteration and as `u128` bit rows for the solvers, which key
//! their search on played-set bitmasks.

mod bounds;
mod enumerate;
mod io;
mod ktree;

pub use bounds::{chromatic_number, coloring_number, is_bipartite};
pub use enumerate::{canonical_key, connected_graphs};
pub use io::{graph_fingerprint, parse_graph, serialize_graph};
pub use ktree::{fan_triangle_graph, ktree_ordering, random_ktree, ConstructionOrdering, FanLayout};

use crate::error::{Error, Result};

/// Hard limit imposed by the `u128` adjacency rows.
pub const MAX_VERTICES: usize = 128;

#[inline]
pub(crate) fn bit(v: usize) -> u128 {
    1u128 << v
}

/// All-vertices mask for a graph on `n` vertices.
#[inline]
pub(crate) fn full_mask(n: usize) -> u128 {
    if n == 128 {
        u128::MAX
    } else {
        (1u128 << n) - 1
    }
}

/// An immutable simple undirected graph.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
    rows: Vec<u128>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges are silently
    /// deduplicated; self-loops and out-of-range endpoints are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::InvalidGraph(format!(
                "{n} vertices exceeds the supported maximum of {MAX_VERTICES}"
            )));
        }
        let mut rows = vec![0u128; n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge ({u}, {v}) has an endpoint outside 0..{n}"
                )));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop at vertex {u}")));
            }
            rows[u] |= bit(v);
            rows[v] |= bit(u);
        }
        Ok(Self::from_rows(rows))
    }

    pub(crate) fn from_rows(rows: Vec<u128>) -> Self {
        let n = rows.len();
        let mut adj = Vec::with_capacity(n);
        let mut twice_edges = 0usize;
        for row in &rows {
            let mut nbrs = Vec::with_capacity(row.count_ones() as usize);
            let mut m = *row;
            while m != 0 {
                let v = m.trailing_zeros() as usize;
                nbrs.push(v);
                m &= m - 1;
            }
            twice_edges += nbrs.len();
            adj.push(nbrs);
        }
        Graph {
            n,
            adj,
            rows,
            edge_count: twice_edges / 2,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// Sorted neighbors of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    /// Adjacency bit row of `v`.
    #[inline]
    pub fn row(&self, v: usize) -> u128 {
        self.rows[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u] & bit(v) != 0
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Edges as `(u, v)` pairs with `u < v`, lexicographically sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count);
        for u in 0..self.n {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Number of neighbors of `v` inside `mask`.
    #[inline]
    pub fn neighbors_in(&self, v: usize, mask: u128) -> u32 {
        (self.rows[v] & mask).count_ones()
    }

    /// Vertices reachable from `start` while staying inside `within`.
    pub(crate) fn component_of(&self, start: usize, within: u128) -> u128 {
        debug_assert!(within & bit(start) != 0);
        let mut seen = bit(start);
        let mut frontier = bit(start);
        while frontier != 0 {
            let mut next = 0u128;
            let mut m = frontier;
            while m != 0 {
                let v = m.trailing_zeros() as usize;
                next |= self.rows[v] & within & !seen;
                m &= m - 1;
            }
            seen |= next;
            frontier = next;
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        match self.n {
            0 => true,
            n => self.component_of(0, full_mask(n)) == full_mask(n),
        }
    }

    /// Does `mask` induce a connected subgraph? The empty set counts as connected.
    pub fn is_connected_subset(&self, mask: u128) -> bool {
        if mask == 0 {
            return true;
        }
        let start = mask.trailing_zeros() as usize;
        self.component_of(start, mask) == mask
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, m={}, edges={:?})", self.n, self.edge_count, self.edges())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builds_k2() {
        let g = Graph::from_edges(2, &[(0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.neighbors(0), &[1]);
        assert_eq!(g.neighbors(1), &[0]);
    }

    #[test]
    fn duplicate_edges_dedup() {
        let g = Graph::from_edges(3, &[(0, 1), (0, 1), (1, 0)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn diamond_degree_sequence() {
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        let mut degs: Vec<usize> = (0..4).map(|v| g.degree(v)).collect();
        degs.sort_unstable_by(|a, b| b.cmp(a));
        assert_eq!(degs, vec![3, 3, 2, 2]);
    }

    #[test]
    fn rejects_self_loop_and_out_of_range() {
        assert!(Graph::from_edges(2, &[(0, 0)]).is_err());
        assert!(Graph::from_edges(2, &[(0, 2)]).is_err());
    }

    #[test]
    fn connectivity() {
        let path = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(path.is_connected());
        let two = Graph::from_edges(2, &[]).unwrap();
        assert!(!two.is_connected());
        assert!(path.is_connected_subset(bit(0) | bit(1)));
        assert!(!path.is_connected_subset(bit(0) | bit(2)));
    }
}
