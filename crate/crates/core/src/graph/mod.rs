//! Simple undirected graphs on vertices `0..n`, stored as adjacency bitmasks.

mod atlas;
mod format;
mod induced;

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::IntMatrix;

pub use atlas::{
    atlas, Atlas, AtlasEntry, ATLAS_NAMES, FORBIDDEN_FAMILY, LAMBDA1_FAMILY, LAMBDA1_REAL_FAMILY,
    PROPOSITION_DIAMETER_TWO,
};
pub use format::{emit_graph6, parse_edge_lists, parse_graph6, parse_graph_file, to_edge_list};
pub use induced::{
    contains_induced, contains_induced_bruteforce, find_odd_hole, is_induced_cycle, isomorphic,
};

/// Largest supported vertex count (one `u64` adjacency word per vertex).
pub const MAX_VERTICES: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Result<Graph> {
        if n == 0 {
            return Err(Error::InvalidGraph("a graph needs at least one vertex".into()));
        }
        if n > MAX_VERTICES {
            return Err(Error::InvalidGraph(format!(
                "{n} vertices exceed the limit of {MAX_VERTICES}"
            )));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    /// Builds a graph from an edge list, rejecting loops, duplicates and
    /// out-of-range endpoints.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop at vertex {u}")));
            }
            if g.has_edge(u, v) {
                return Err(Error::InvalidGraph(format!("duplicate edge {u}-{v}")));
            }
            g.add_edge_unchecked(u, v);
        }
        Ok(g)
    }

    pub(crate) fn add_edge_unchecked(&mut self, u: usize, v: usize) {
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).expect("path")
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycles need at least 3 vertices");
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).expect("cycle")
    }

    pub fn complete(n: usize) -> Graph {
        let mut g = Graph::empty(n).expect("complete graph size");
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge_unchecked(u, v);
            }
        }
        g
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let mut g = Graph::empty(a + b).expect("complete bipartite size");
        for u in 0..a {
            for v in a..a + b {
                g.add_edge_unchecked(u, v);
            }
        }
        g
    }

    pub fn star(leaves: usize) -> Graph {
        Graph::complete_bipartite(1, leaves)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|w| w.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    /// Neighborhood of `v` as a bitmask.
    pub fn neighbor_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        bits(self.adj[v])
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in bits(self.adj[u] >> (u + 1)) {
                out.push((u, u + 1 + v));
            }
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.bfs(0).iter().all(|d| d.is_some())
    }

    fn bfs(&self, source: usize) -> Vec<Option<u32>> {
        let mut dist = vec![None; self.n];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for v in self.neighbors(u) {
                if dist[v].is_none() {
                    dist[v] = Some(du + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// All-pairs shortest-path lengths as plain integers.
    pub fn distances(&self) -> Result<Vec<Vec<u32>>> {
        (0..self.n)
            .map(|s| {
                self.bfs(s)
                    .into_iter()
                    .map(|d| d.ok_or(Error::Disconnected))
                    .collect()
            })
            .collect()
    }

    /// The distance matrix `D(G)`.
    pub fn distance_matrix(&self) -> Result<IntMatrix> {
        let d = self.distances()?;
        Ok(IntMatrix::from_fn(self.n, self.n, |i, j| (d[i][j] as i64).into()))
    }

    pub fn diameter(&self) -> Result<u32> {
        Ok(self
            .distances()?
            .iter()
            .flat_map(|row| row.iter().copied())
            .max()
            .unwrap_or(0))
    }

    /// Subgraph induced by `subset`; vertices are relabeled `0..|subset|` in
    /// the sorted order of `subset`.
    pub fn induced_subgraph(&self, subset: &[usize]) -> Result<Graph> {
        let mut s = subset.to_vec();
        s.sort_unstable();
        s.dedup();
        if let Some(&bad) = s.iter().find(|&&v| v >= self.n) {
            return Err(Error::VertexOutOfRange { vertex: bad, n: self.n });
        }
        let mut g = Graph::empty(s.len())?;
        for (a, &u) in s.iter().enumerate() {
            for (b, &v) in s.iter().enumerate().skip(a + 1) {
                if self.has_edge(u, v) {
                    g.add_edge_unchecked(a, b);
                }
            }
        }
        Ok(g)
    }

    /// Same as [`Graph::induced_subgraph`] for a vertex bitmask.
    pub fn induced_by_mask(&self, mask: u64) -> Graph {
        let s: Vec<usize> = bits(mask).collect();
        self.induced_subgraph(&s).expect("mask within range")
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut g = Graph::empty(self.n).unwrap();
        for (u, v) in self.edges() {
            g.add_edge_unchecked(perm[u], perm[v]);
        }
        g
    }

    /// Graph with one extra vertex adjacent to the vertices in `mask`.
    pub fn with_new_vertex(&self, mask: u64) -> Result<Graph> {
        let mut g = Graph::empty(self.n + 1)?;
        g.adj[..self.n].copy_from_slice(&self.adj);
        for v in bits(mask) {
            g.add_edge_unchecked(v, self.n);
        }
        Ok(g)
    }

    pub fn all_vertices_mask(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    /// Whether the subgraph induced by `mask` is connected.
    pub fn mask_connected(&self, mask: u64) -> bool {
        if mask == 0 {
            return false;
        }
        let mut seen = 1u64 << mask.trailing_zeros();
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in bits(frontier) {
                next |= self.adj[v];
            }
            next &= mask & !seen;
            seen |= next;
            frontier = next;
        }
        seen == mask
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Iterates the set bit positions of `mask` in increasing order.
pub fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let b = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(b)
        }
    })
}
