use std::collections::HashSet;

use serde::Serialize;

use crate::error::Result;
use crate::graph::Graph;

use super::Solver;

/// An ordered vertex list `W = (w_1, ..., w_k)`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
#[serde(transparent)]
pub struct ResolvingSet(pub Vec<usize>);

/// `r_W(v) = (d(v, w_1), ..., d(v, w_k))`.
pub fn metric_representation(g: &Graph, w: &ResolvingSet, v: usize) -> Vec<usize> {
    w.0.iter().map(|&x| g.dist(v, x)).collect()
}

/// Whether all vertices have distinct representations with respect to `w`.
pub fn is_resolving(g: &Graph, w: &ResolvingSet) -> bool {
    let mut seen = HashSet::with_capacity(g.n());
    (0..g.n()).all(|v| seen.insert(metric_representation(g, w, v)))
}

/// `dim(g)` and the lexicographically first smallest resolving set.
pub fn metric_dimension(g: &Graph) -> Result<(usize, ResolvingSet)> {
    Solver::default().metric_dimension(g)
}

impl Solver {
    /// Searches subsets by increasing size, in lexicographic order. Twins
    /// (`N(u) - v = N(v) - u`) are only separated by themselves, so a
    /// resolving set holds all but at most one vertex of each twin class;
    /// that gives both the starting size and a filter on candidates.
    pub fn metric_dimension(&self, g: &Graph) -> Result<(usize, ResolvingSet)> {
        self.check(g, "metric dimension")?;
        let n = g.n();
        if n == 1 {
            return Ok((0, ResolvingSet(Vec::new())));
        }
        let twin_classes = twin_classes(g);
        let lower = twin_classes
            .iter()
            .map(|&m| m.count_ones() as usize - 1)
            .sum::<usize>()
            .max(1);
        for size in lower..n {
            let mut combo: Vec<usize> = (0..size).collect();
            loop {
                let chosen = combo.iter().fold(0u64, |m, &v| m | 1 << v);
                let twins_ok = twin_classes
                    .iter()
                    .all(|&class| (class & !chosen).count_ones() <= 1);
                if twins_ok {
                    let w = ResolvingSet(combo.clone());
                    if is_resolving(g, &w) {
                        return Ok((size, w));
                    }
                }
                if !next_combination(&mut combo, n) {
                    break;
                }
            }
        }
        unreachable!("any n-1 vertices resolve a connected graph")
    }
}

/// Twin classes with at least two members, as bitmasks.
fn twin_classes(g: &Graph) -> Vec<u64> {
    let n = g.n();
    let mut assigned = 0u64;
    let mut classes = Vec::new();
    for u in 0..n {
        if assigned >> u & 1 == 1 {
            continue;
        }
        let mut class = 1u64 << u;
        for v in u + 1..n {
            let nu = g.neighbor_mask(u) & !(1 << v);
            let nv = g.neighbor_mask(v) & !(1 << u);
            if nu == nv {
                class |= 1 << v;
            }
        }
        assigned |= class;
        if class.count_ones() > 1 {
            classes.push(class);
        }
    }
    classes
}

/// Advances `combo` to the next `k`-subset of `0..n` in lexicographic order.
fn next_combination(combo: &mut [usize], n: usize) -> bool {
    let k = combo.len();
    for i in (0..k).rev() {
        if combo[i] < n - k + i {
            combo[i] += 1;
            for j in i + 1..k {
                combo[j] = combo[j - 1] + 1;
            }
            return true;
        }
    }
    false
}
