//! Brute-force reference implementations. Nothing here calls the library
//! beyond reading a graph's order and edge list.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};

use chromlab::Graph;
use proptest::prelude::*;

pub const INF: usize = usize::MAX / 4;

/// Adjacency matrix, edge list and distances of one graph.
pub struct Oracle {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    pub adj: Vec<Vec<bool>>,
    pub dist: Vec<Vec<usize>>,
}

impl Oracle {
    pub fn new(g: &Graph) -> Self {
        Oracle::from_edges(g.n(), &g.edges())
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut adj = vec![vec![false; n]; n];
        for &(u, v) in edges {
            adj[u][v] = true;
            adj[v][u] = true;
        }
        let dist = floyd_warshall(&adj);
        Oracle {
            n,
            edges: edges.to_vec(),
            adj,
            dist,
        }
    }

    pub fn connected(&self) -> bool {
        self.dist[0].iter().all(|&d| d < INF)
    }

    pub fn diameter(&self) -> usize {
        self.dist.iter().flatten().copied().max().unwrap_or(0)
    }

    /// Every permutation that maps edges onto edges.
    pub fn automorphisms(&self) -> Vec<Vec<usize>> {
        permutations(self.n)
            .into_iter()
            .filter(|p| self.edges.iter().all(|&(u, v)| self.adj[p[u]][p[v]]))
            .collect()
    }

    pub fn proper(&self, colors: &[usize]) -> bool {
        self.edges.iter().all(|&(u, v)| colors[u] != colors[v])
    }

    /// Distance from each vertex to each color class; colors are `0..k`.
    pub fn codes(&self, colors: &[usize], k: usize) -> Vec<Vec<usize>> {
        (0..self.n)
            .map(|v| {
                (0..k)
                    .map(|c| {
                        (0..self.n)
                            .filter(|&u| colors[u] == c)
                            .map(|u| self.dist[v][u])
                            .min()
                            .unwrap_or(INF)
                    })
                    .collect()
            })
            .collect()
    }

    pub fn locating(&self, colors: &[usize], k: usize) -> bool {
        let codes = self.codes(colors, k);
        let distinct: HashSet<&Vec<usize>> = codes.iter().collect();
        self.proper(colors) && distinct.len() == self.n
    }

    pub fn distinguishing(&self, colors: &[usize], auts: &[Vec<usize>]) -> bool {
        self.proper(colors)
            && auts.iter().all(|p| {
                p.iter().enumerate().all(|(v, &w)| v == w)
                    || (0..self.n).any(|v| colors[p[v]] != colors[v])
            })
    }

    /// Least `k` with a surjective `k`-coloring satisfying `accept`, trying
    /// all `k^n` assignments.
    pub fn min_colors(&self, mut accept: impl FnMut(&[usize], usize) -> bool) -> usize {
        for k in 1..=self.n {
            if all_colorings(self.n, k).any(|c| accept(&c, k)) {
                return k;
            }
        }
        unreachable!("n distinct colors always work")
    }

    pub fn chi(&self) -> usize {
        self.min_colors(|c, _| self.proper(c))
    }

    pub fn chi_l(&self) -> usize {
        self.min_colors(|c, k| self.locating(c, k))
    }

    pub fn chi_d(&self) -> usize {
        let auts = self.automorphisms();
        self.min_colors(|c, _| self.distinguishing(c, &auts))
    }

    pub fn metric_dimension(&self) -> usize {
        if self.n == 1 {
            return 0;
        }
        (1..self.n)
            .find(|&size| {
                subsets(self.n, size).any(|w| {
                    let reps: HashSet<Vec<usize>> = (0..self.n)
                        .map(|v| w.iter().map(|&x| self.dist[v][x]).collect())
                        .collect();
                    reps.len() == self.n
                })
            })
            .unwrap()
    }

    /// Non-adjacency (with every vertex related to itself) is transitive.
    pub fn complete_multipartite(&self) -> bool {
        let related = |u: usize, v: usize| u == v || !self.adj[u][v];
        (0..self.n).all(|a| {
            (0..self.n)
                .all(|b| (0..self.n).all(|c| !(related(a, b) && related(b, c)) || related(a, c)))
        })
    }

    /// Smallest adjacency bitstring over all relabelings.
    pub fn brute_canonical(&self) -> Vec<bool> {
        permutations(self.n)
            .into_iter()
            .map(|p| {
                let mut inv = vec![0; self.n];
                for (v, &w) in p.iter().enumerate() {
                    inv[w] = v;
                }
                let mut bits = Vec::new();
                for j in 1..self.n {
                    for i in 0..j {
                        bits.push(self.adj[inv[i]][inv[j]]);
                    }
                }
                bits
            })
            .min()
            .unwrap()
    }
}

pub fn floyd_warshall(adj: &[Vec<bool>]) -> Vec<Vec<usize>> {
    let n = adj.len();
    let mut d = vec![vec![INF; n]; n];
    for u in 0..n {
        d[u][u] = 0;
        for v in 0..n {
            if adj[u][v] {
                d[u][v] = 1;
            }
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if d[i][k] + d[k][j] < d[i][j] {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    d
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                go(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Every surjective map `0..n -> 0..k`.
pub fn all_colorings(n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = (k as u64).pow(n as u32);
    (0..total).filter_map(move |mut code| {
        let mut c = vec![0; n];
        for slot in c.iter_mut() {
            *slot = (code % k as u64) as usize;
            code /= k as u64;
        }
        let used: BTreeSet<usize> = c.iter().copied().collect();
        (used.len() == k).then_some(c)
    })
}

/// Every set partition of `0..n`, as restricted-growth strings.
pub fn set_partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(c: &mut Vec<usize>, max: usize, n: usize, out: &mut Vec<Vec<usize>>) {
        if c.len() == n {
            out.push(c.clone());
            return;
        }
        for color in 0..=max + 1 {
            c.push(color);
            go(c, max.max(color), n, out);
            c.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        go(&mut vec![0], 0, n, &mut out);
    }
    out
}

/// `k`-subsets of `0..n`.
pub fn subsets(n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u32..1 << n)
        .filter(move |m| m.count_ones() as usize == k)
        .map(move |m| (0..n).filter(|&v| m >> v & 1 == 1).collect())
}

/// All labeled connected graphs on `n` vertices, by edge mask.
pub fn labeled_connected(n: usize) -> impl Iterator<Item = Oracle> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    (0u64..1 << pairs.len()).filter_map(move |mask| {
        let edges: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let o = Oracle::from_edges(n, &edges);
        o.connected().then_some(o)
    })
}

/// Decodes a Prüfer sequence into tree edges.
pub fn prufer_tree(seq: &[usize]) -> Vec<(usize, usize)> {
    let n = seq.len() + 2;
    let mut degree = vec![1; n];
    for &v in seq {
        degree[v] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &v in seq {
        let leaf = (0..n).find(|&u| degree[u] == 1).unwrap();
        edges.push((leaf.min(v), leaf.max(v)));
        degree[leaf] -= 1;
        degree[v] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&u| degree[u] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges
}

/// AHU encoding of a free tree, rooted at its center(s).
pub fn tree_code(n: usize, edges: &[(usize, usize)]) -> String {
    let mut nbrs = vec![Vec::new(); n];
    for &(u, v) in edges {
        nbrs[u].push(v);
        nbrs[v].push(u);
    }
    fn encode(v: usize, parent: usize, nbrs: &[Vec<usize>]) -> String {
        let mut kids: Vec<String> = nbrs[v]
            .iter()
            .filter(|&&w| w != parent)
            .map(|&w| encode(w, v, nbrs))
            .collect();
        kids.sort();
        format!("({})", kids.concat())
    }
    // Peel leaves to find the center.
    let mut degree: Vec<usize> = nbrs.iter().map(Vec::len).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] <= 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &leaf in &layer {
            for &w in &nbrs[leaf] {
                degree[w] -= 1;
                if degree[w] == 1 {
                    next.push(w);
                }
            }
        }
        layer = next;
    }
    layer
        .iter()
        .map(|&c| encode(c, usize::MAX, &nbrs))
        .min()
        .unwrap()
}

/// Number of non-isomorphic trees on `n` vertices via all Prüfer sequences.
pub fn tree_count(n: usize) -> usize {
    if n <= 2 {
        return 1;
    }
    let len = n - 2;
    let total = n.pow(len as u32);
    let mut seen = HashSet::new();
    let mut seq = vec![0; len];
    for mut code in 0..total {
        for slot in seq.iter_mut() {
            *slot = code % n;
            code /= n;
        }
        seen.insert(tree_code(n, &prufer_tree(&seq)));
    }
    seen.len()
}

/// Random connected graphs: a random spanning tree plus random extra edges.
pub fn connected_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n)
        .prop_flat_map(|n| {
            let parents: Vec<BoxedStrategy<usize>> = (1..n).map(|v| (0..v).boxed()).collect();
            (
                Just(n),
                parents,
                proptest::collection::vec(any::<bool>(), n * (n - 1) / 2),
            )
        })
        .prop_map(|(n, parents, extra)| {
            let mut edges: BTreeSet<(usize, usize)> = parents
                .iter()
                .enumerate()
                .map(|(i, &p)| (p, i + 1))
                .collect();
            let pairs = (0..n).flat_map(|j| (0..j).map(move |i| (i, j)));
            for ((i, j), keep) in pairs.zip(extra) {
                if keep {
                    edges.insert((i, j));
                }
            }
            Graph::new(n, edges.into_iter().collect::<Vec<_>>()).unwrap()
        })
}
