//! Simple connected undirected graphs on at most 62 vertices.
//!
//! Adjacency is stored as one `u64` bitmask per vertex. The all-pairs
//! distance matrix is computed by BFS when the graph is built, so every
//! `Graph` value is known to be connected.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};
use crate::symmetry::Permutation;

/// Largest vertex count any graph may have (the short graph6 form).
pub const MAX_VERTICES: usize = 62;

/// A simple, undirected, connected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<u64>,
    /// Row-major `n * n` hop counts.
    dist: Vec<u8>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges are merged.
    ///
    /// ```
    /// use chromlab::Graph;
    /// let p3 = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
    /// assert_eq!(p3.dist(0, 2), 2);
    /// assert!(Graph::new(3, [(0, 1)]).is_err()); // vertex 2 is isolated
    /// ```
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        check_order(n)?;
        let mut adj = vec![0u64; n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Self::from_adjacency(adj)
    }

    /// Builds a graph from per-vertex neighbor bitmasks.
    pub fn from_adjacency(adj: Vec<u64>) -> Result<Self> {
        let n = adj.len();
        check_order(n)?;
        let all = full_mask(n);
        for (v, &row) in adj.iter().enumerate() {
            if row & !all != 0 {
                let vertex = (row & !all).trailing_zeros() as usize;
                return Err(Error::VertexOutOfRange { vertex, n });
            }
            if row >> v & 1 == 1 {
                return Err(Error::SelfLoop(v));
            }
            let mut rest = row;
            while rest != 0 {
                let u = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                if adj[u] >> v & 1 == 0 {
                    return Err(Error::EdgeList(format!(
                        "adjacency is not symmetric at ({v}, {u})"
                    )));
                }
            }
        }
        let dist = all_pairs_bfs(&adj).ok_or(Error::Disconnected)?;
        Ok(Graph { adj, dist })
    }

    /// Number of vertices.
    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n() {
            for v in self.neighbors(u).filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    #[inline]
    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    /// Neighbor set of `v` as a bitmask.
    #[inline]
    pub fn neighbor_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> {
        bits(self.adj[v])
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Shortest-path length between `u` and `v`.
    #[inline]
    pub fn dist(&self, u: usize, v: usize) -> usize {
        self.dist[u * self.n() + v] as usize
    }

    /// The full distance matrix.
    pub fn distances(&self) -> Vec<Vec<usize>> {
        self.dist
            .chunks(self.n())
            .map(|row| row.iter().map(|&d| d as usize).collect())
            .collect()
    }

    pub fn diameter(&self) -> usize {
        self.dist.iter().copied().max().unwrap_or(0) as usize
    }

    /// Mask with one bit per vertex.
    #[inline]
    pub fn vertex_mask(&self) -> u64 {
        full_mask(self.n())
    }

    pub fn is_tree(&self) -> bool {
        self.edge_count() + 1 == self.n()
    }

    pub fn is_bipartite(&self) -> bool {
        // In a connected graph, an edge inside a BFS layer means an odd cycle.
        self.edges()
            .iter()
            .all(|&(u, v)| self.dist(0, u) != self.dist(0, v))
    }

    /// The graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &Permutation) -> Graph {
        let n = self.n();
        assert_eq!(perm.len(), n, "permutation size mismatch");
        let mut adj = vec![0u64; n];
        let mut dist = vec![0u8; n * n];
        for u in 0..n {
            let pu = perm[u];
            for v in 0..n {
                let pv = perm[v];
                if self.is_adjacent(u, v) {
                    adj[pu] |= 1 << pv;
                }
                dist[pu * n + pv] = self.dist[u * n + v];
            }
        }
        Graph { adj, dist }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges())
            .finish()
    }
}

fn check_order(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::Empty);
    }
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices {
            n,
            max: MAX_VERTICES,
        });
    }
    Ok(())
}

#[inline]
pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterates the set bits of `mask` in ascending order.
pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

/// BFS from every vertex; `None` if some pair is unreachable.
fn all_pairs_bfs(adj: &[u64]) -> Option<Vec<u8>> {
    let n = adj.len();
    let mut dist = vec![u8::MAX; n * n];
    let mut queue = VecDeque::with_capacity(n);
    for s in 0..n {
        let row = &mut dist[s * n..(s + 1) * n];
        row[s] = 0;
        queue.clear();
        queue.push_back(s);
        let mut seen = 1usize;
        while let Some(u) = queue.pop_front() {
            for v in bits(adj[u]) {
                if row[v] == u8::MAX {
                    row[v] = row[u] + 1;
                    seen += 1;
                    queue.push_back(v);
                }
            }
        }
        if seen != n {
            return None;
        }
    }
    Some(dist)
}
