//! Exhaustive isomorph-free enumeration of small connected graphs and trees.
//!
//! Both enumerators grow graphs one vertex at a time and deduplicate by
//! canonical form. Every connected graph on `n` vertices arises from one on
//! `n - 1` vertices by adding a vertex joined to a non-empty subset (delete a
//! leaf of a spanning tree to see this), and every tree arises from a
//! smaller tree by adding a leaf.
//!
//! Output graphs are canonically labeled and sorted by canonical key, so
//! `write_graph6(g)` of each output is its key.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::symmetry::canon::canonical_graph;

/// Largest order accepted by [`connected_graphs`].
pub const MAX_GRAPH_ORDER: usize = 7;
/// Largest order accepted by [`trees`].
pub const MAX_TREE_ORDER: usize = 10;

/// One representative per isomorphism class of connected graphs on `n`
/// vertices, `1 <= n <= 7`.
///
/// ```
/// assert_eq!(chromlab::enumerate::connected_graphs(4).unwrap().len(), 6);
/// ```
pub fn connected_graphs(n: usize) -> Result<Vec<Graph>> {
    check(n, MAX_GRAPH_ORDER, "connected graph enumeration")?;
    let mut level = vec![Graph::new(1, [])?];
    for order in 2..=n {
        let prev = order - 1;
        let mut next = BTreeMap::new();
        for h in &level {
            for subset in 1u64..1 << prev {
                let mut adj: Vec<u64> = (0..prev)
                    .map(|v| h.neighbor_mask(v) | (subset >> v & 1) << prev)
                    .collect();
                adj.push(subset);
                insert(&mut next, Graph::from_adjacency(adj)?)?;
            }
        }
        level = next.into_values().collect();
    }
    Ok(level)
}

/// One representative per isomorphism class of trees on `n` vertices,
/// `1 <= n <= 10`.
pub fn trees(n: usize) -> Result<Vec<Graph>> {
    check(n, MAX_TREE_ORDER, "tree enumeration")?;
    let mut level = vec![Graph::new(1, [])?];
    for order in 2..=n {
        let mut next = BTreeMap::new();
        for t in &level {
            for v in 0..order - 1 {
                let edges = t.edges().into_iter().chain([(v, order - 1)]);
                insert(&mut next, Graph::new(order, edges.collect::<Vec<_>>())?)?;
            }
        }
        level = next.into_values().collect();
    }
    Ok(level)
}

/// All connected graphs with `1 <= n <= nmax`, smallest first.
pub fn connected_graphs_up_to(nmax: usize) -> Result<Vec<Graph>> {
    collect_up_to(nmax, connected_graphs)
}

/// All trees with `1 <= n <= nmax`, smallest first.
pub fn trees_up_to(nmax: usize) -> Result<Vec<Graph>> {
    collect_up_to(nmax, trees)
}

fn collect_up_to(nmax: usize, level: fn(usize) -> Result<Vec<Graph>>) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for n in 1..=nmax {
        out.extend(level(n)?);
    }
    Ok(out)
}

fn insert(seen: &mut BTreeMap<String, Graph>, g: Graph) -> Result<()> {
    let (key, canon) = canonical_graph(&g)?;
    seen.entry(key).or_insert(canon);
    Ok(())
}

fn check(n: usize, cap: usize, what: &'static str) -> Result<()> {
    if n == 0 {
        return Err(Error::Empty);
    }
    if n > cap {
        return Err(Error::CapExceeded { what, n, cap });
    }
    Ok(())
}
