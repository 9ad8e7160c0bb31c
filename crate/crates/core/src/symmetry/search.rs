//! Backtracking search for (colored) automorphisms.
//!
//! Vertices are first split into classes by a signature: own color plus, for
//! every distance `d` and color `c`, the number of vertices at distance `d`
//! with color `c`. An automorphism can only map a vertex into its own class.
//! Unassigned vertices are then matched in BFS order from the already-fixed
//! ones, so every candidate image is a neighbor of its parent's image, and a
//! candidate is kept only if it preserves distances to everything matched
//! so far. A distance-preserving bijection is an automorphism.

use std::ops::ControlFlow;

use crate::graph::{bits, Graph};

const UNSET: usize = usize::MAX;

pub(crate) struct Matcher<'g> {
    g: &'g Graph,
    class: Vec<u32>,
}

impl<'g> Matcher<'g> {
    /// `labels[v]` is an arbitrary color label; only equality matters.
    pub(crate) fn new(g: &'g Graph, labels: &[u32]) -> Self {
        let n = g.n();
        debug_assert_eq!(labels.len(), n);
        let mut palette = labels.to_vec();
        palette.sort_unstable();
        palette.dedup();
        let dense: Vec<usize> = labels
            .iter()
            .map(|l| palette.binary_search(l).unwrap())
            .collect();
        let colors = palette.len();
        let width = 1 + (g.diameter() + 1) * colors;
        let signatures: Vec<Vec<u32>> = (0..n)
            .map(|v| {
                let mut sig = vec![0u32; width];
                sig[0] = dense[v] as u32;
                for u in 0..n {
                    sig[1 + g.dist(v, u) * colors + dense[u]] += 1;
                }
                sig
            })
            .collect();
        let mut distinct = signatures.clone();
        distinct.sort_unstable();
        distinct.dedup();
        let class = signatures
            .iter()
            .map(|s| distinct.binary_search(s).unwrap() as u32)
            .collect();
        Matcher { g, class }
    }

    pub(crate) fn class(&self, v: usize) -> u32 {
        self.class[v]
    }

    /// True when every vertex is alone in its class, so only the identity
    /// can survive.
    pub(crate) fn is_discrete(&self) -> bool {
        let mut seen = self.class.clone();
        seen.sort_unstable();
        seen.windows(2).all(|w| w[0] != w[1])
    }

    pub(crate) fn first_extension(&self, fixed: &[(usize, usize)]) -> Option<Vec<usize>> {
        let mut found = None;
        let _ = self.for_each_extension(fixed, &mut |image: &[usize]| {
            found = Some(image.to_vec());
            ControlFlow::Break(())
        });
        found
    }

    /// Visits every automorphism extending the partial map `fixed`.
    pub(crate) fn for_each_extension(
        &self,
        fixed: &[(usize, usize)],
        visit: &mut dyn FnMut(&[usize]) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        let g = self.g;
        let n = g.n();
        let mut image = vec![UNSET; n];
        let mut used = 0u64;
        let mut assigned = Vec::with_capacity(n);
        for &(u, t) in fixed {
            if image[u] == t {
                continue;
            }
            if image[u] != UNSET || used >> t & 1 == 1 || self.class[u] != self.class[t] {
                return ControlFlow::Continue(());
            }
            if !assigned
                .iter()
                .all(|&w: &usize| g.dist(u, w) == g.dist(t, image[w]))
            {
                return ControlFlow::Continue(());
            }
            image[u] = t;
            used |= 1 << t;
            assigned.push(u);
        }

        // BFS order over the rest, each vertex paired with an earlier neighbor.
        let mut order: Vec<(usize, Option<usize>)> = Vec::with_capacity(n - assigned.len());
        let mut seen: u64 = assigned.iter().fold(0, |m, &u| m | 1 << u);
        let mut frontier: Vec<usize> = assigned.clone();
        if frontier.is_empty() {
            frontier.push(0);
            order.push((0, None));
            seen |= 1;
        }
        let mut head = 0;
        while head < frontier.len() {
            let u = frontier[head];
            head += 1;
            for v in bits(g.neighbor_mask(u) & !seen) {
                seen |= 1 << v;
                order.push((v, Some(u)));
                frontier.push(v);
            }
        }
        debug_assert_eq!(order.len() + assigned.len(), n);

        let mut state = State {
            image,
            used,
            assigned,
        };
        self.descend(&order, &mut state, visit)
    }

    fn descend(
        &self,
        order: &[(usize, Option<usize>)],
        st: &mut State,
        visit: &mut dyn FnMut(&[usize]) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        let Some((&(u, parent), rest)) = order.split_first() else {
            return visit(&st.image);
        };
        let g = self.g;
        let pool = match parent {
            Some(p) => g.neighbor_mask(st.image[p]),
            None => g.vertex_mask(),
        } & !st.used;
        for t in bits(pool) {
            if self.class[t] != self.class[u] {
                continue;
            }
            if !st
                .assigned
                .iter()
                .all(|&w| g.dist(u, w) == g.dist(t, st.image[w]))
            {
                continue;
            }
            st.image[u] = t;
            st.used |= 1 << t;
            st.assigned.push(u);
            let flow = self.descend(rest, st, visit);
            st.assigned.pop();
            st.used &= !(1 << t);
            st.image[u] = UNSET;
            flow?;
        }
        ControlFlow::Continue(())
    }

    /// Some non-identity automorphism, or `None` if the class structure
    /// admits only the identity. The first moved vertex is minimal and its
    /// image is the least possible.
    pub(crate) fn nontrivial(&self) -> Option<Vec<usize>> {
        if self.is_discrete() {
            return None;
        }
        let n = self.g.n();
        let mut fixed: Vec<(usize, usize)> = Vec::with_capacity(n);
        for i in 0..n {
            for t in i + 1..n {
                if self.class[t] != self.class[i] {
                    continue;
                }
                fixed.push((i, t));
                let found = self.first_extension(&fixed);
                fixed.pop();
                if found.is_some() {
                    return found;
                }
            }
            fixed.push((i, i));
        }
        None
    }
}

struct State {
    image: Vec<usize>,
    used: u64,
    assigned: Vec<usize>,
}
