//! One backtracking engine for the three coloring minima.
//!
//! Vertices are colored in index order. A vertex may only take a color
//! already in use or the next unused one, so each partition is generated
//! exactly once and the first hit is the lexicographically least coloring.
//! Properness is enforced inline; a [`Rule`] layers a partial-assignment
//! prune and a final acceptance test on top.

use std::ops::ControlFlow;

use crate::error::{Error, Result};
use crate::graph::{bits, Graph};
use crate::symmetry::find_label_preserving;

use super::{codes_distinct, dist_to_mask, ColorPartition};

/// Default vertex cap for the exact solvers.
pub const DEFAULT_SOLVER_CAP: usize = 16;

/// Exact solvers with a configurable vertex cap.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Solver {
    pub cap: usize,
}

impl Default for Solver {
    fn default() -> Self {
        Solver {
            cap: DEFAULT_SOLVER_CAP,
        }
    }
}

impl Solver {
    pub fn with_cap(cap: usize) -> Self {
        Solver { cap }
    }

    pub(crate) fn check(&self, g: &Graph, what: &'static str) -> Result<()> {
        if g.n() > self.cap {
            return Err(Error::CapExceeded {
                what,
                n: g.n(),
                cap: self.cap,
            });
        }
        Ok(())
    }

    /// `χ(g)` and the least proper coloring achieving it.
    pub fn chromatic_number(&self, g: &Graph) -> Result<(usize, ColorPartition)> {
        self.check(g, "chromatic number")?;
        Ok(minimize(g, clique_lower_bound(g), &mut ProperRule))
    }

    /// `χ_L(g)` and the least locating coloring achieving it.
    pub fn locating_chromatic_number(&self, g: &Graph) -> Result<(usize, ColorPartition)> {
        self.check(g, "locating chromatic number")?;
        let (chi, _) = self.chromatic_number(g)?;
        Ok(minimize(g, chi, &mut LocatingRule::new(g)))
    }

    /// `χ_D(g)` and the least distinguishing coloring achieving it.
    pub fn distinguishing_chromatic_number(&self, g: &Graph) -> Result<(usize, ColorPartition)> {
        self.check(g, "distinguishing chromatic number")?;
        let (chi, _) = self.chromatic_number(g)?;
        Ok(minimize(g, chi, &mut DistinguishingRule))
    }
}

pub fn chromatic_number(g: &Graph) -> Result<(usize, ColorPartition)> {
    Solver::default().chromatic_number(g)
}

/// ```
/// use chromlab::{chromatics::locating_chromatic_number, family::{generate, FamilySpec}};
/// let c4 = generate(&FamilySpec::Cycle(4)).unwrap();
/// assert_eq!(locating_chromatic_number(&c4).unwrap().0, 4);
/// ```
pub fn locating_chromatic_number(g: &Graph) -> Result<(usize, ColorPartition)> {
    Solver::default().locating_chromatic_number(g)
}

pub fn distinguishing_chromatic_number(g: &Graph) -> Result<(usize, ColorPartition)> {
    Solver::default().distinguishing_chromatic_number(g)
}

/// Visits every proper coloring of `g` with exactly `k` colors, once per
/// partition, in lexicographic order of the first-use normalized colorings.
pub fn for_each_proper_partition<F>(g: &Graph, k: usize, mut visit: F) -> ControlFlow<()>
where
    F: FnMut(&ColorPartition) -> ControlFlow<()>,
{
    run(g, k, &mut ProperRule, &mut visit)
}

pub(crate) trait Rule {
    /// Called after vertex `depth - 1` received a color. `false` prunes.
    fn partial(&mut self, _g: &Graph, _st: &State) -> bool {
        true
    }
    fn accept(&mut self, g: &Graph, c: &ColorPartition) -> bool;
}

pub(crate) struct State {
    colors: Vec<u8>,
    /// `masks[c - 1]` holds the vertices colored `c` so far.
    masks: Vec<u64>,
    depth: usize,
}

impl State {
    fn assigned(&self) -> u64 {
        (1u64 << self.depth) - 1
    }
}

fn minimize(g: &Graph, start: usize, rule: &mut dyn Rule) -> (usize, ColorPartition) {
    for k in start.max(1)..=g.n() {
        let mut found = None;
        let _ = run(g, k, rule, &mut |c| {
            found = Some(c.clone());
            ControlFlow::Break(())
        });
        if let Some(c) = found {
            return (k, c);
        }
    }
    unreachable!("the all-singleton coloring satisfies every rule")
}

fn run(
    g: &Graph,
    k: usize,
    rule: &mut dyn Rule,
    visit: &mut dyn FnMut(&ColorPartition) -> ControlFlow<()>,
) -> ControlFlow<()> {
    let n = g.n();
    if k == 0 || k > n {
        return ControlFlow::Continue(());
    }
    let mut st = State {
        colors: vec![0; n],
        masks: vec![0; k],
        depth: 0,
    };
    descend(g, k, 0, &mut st, rule, visit)
}

fn descend(
    g: &Graph,
    k: usize,
    used: usize,
    st: &mut State,
    rule: &mut dyn Rule,
    visit: &mut dyn FnMut(&ColorPartition) -> ControlFlow<()>,
) -> ControlFlow<()> {
    let n = g.n();
    let v = st.depth;
    if v == n {
        let c = ColorPartition::from_raw(st.colors.clone(), k as u8);
        return if rule.accept(g, &c) {
            visit(&c)
        } else {
            ControlFlow::Continue(())
        };
    }
    let remaining_after = n - v - 1;
    for color in 1..=(used + 1).min(k) {
        let now_used = used.max(color);
        if k - now_used > remaining_after {
            continue;
        }
        if st.masks[color - 1] & g.neighbor_mask(v) != 0 {
            continue;
        }
        st.colors[v] = color as u8;
        st.masks[color - 1] |= 1 << v;
        st.depth += 1;
        let flow = if rule.partial(g, st) {
            descend(g, k, now_used, st, rule, visit)
        } else {
            ControlFlow::Continue(())
        };
        st.depth -= 1;
        st.masks[color - 1] &= !(1 << v);
        st.colors[v] = 0;
        flow?;
    }
    ControlFlow::Continue(())
}

/// Size of a greedily grown clique; a lower bound on `χ`.
fn clique_lower_bound(g: &Graph) -> usize {
    let mut best = 1;
    for v in 0..g.n() {
        let mut clique = 1u64 << v;
        let mut candidates = g.neighbor_mask(v);
        while candidates != 0 {
            let u = bits(candidates)
                .max_by_key(|&u| {
                    (
                        (g.neighbor_mask(u) & candidates).count_ones(),
                        std::cmp::Reverse(u),
                    )
                })
                .unwrap();
            clique |= 1 << u;
            candidates &= g.neighbor_mask(u);
        }
        best = best.max(clique.count_ones() as usize);
    }
    best
}

struct ProperRule;

impl Rule for ProperRule {
    fn accept(&mut self, _g: &Graph, _c: &ColorPartition) -> bool {
        true
    }
}

/// Prunes a branch once two same-colored vertices are certain to end with
/// equal codes: every vertex that is at different distances from the two is
/// already colored, and their codes agree on the classes built so far.
/// Any vertex colored later is equidistant from both, so it lowers both
/// entries of its class equally.
struct LocatingRule {
    n: usize,
    /// `separators[u * n + w]`: vertices at different distances from `u`, `w`.
    separators: Vec<u64>,
}

impl LocatingRule {
    fn new(g: &Graph) -> Self {
        let n = g.n();
        let mut separators = vec![0u64; n * n];
        for u in 0..n {
            for w in 0..n {
                separators[u * n + w] = (0..n)
                    .filter(|&x| g.dist(u, x) != g.dist(w, x))
                    .fold(0, |m, x| m | 1 << x);
            }
        }
        LocatingRule { n, separators }
    }
}

impl Rule for LocatingRule {
    fn partial(&mut self, g: &Graph, st: &State) -> bool {
        let assigned = st.assigned();
        for u in 0..st.depth {
            for w in u + 1..st.depth {
                if st.colors[u] != st.colors[w] || self.separators[u * self.n + w] & !assigned != 0
                {
                    continue;
                }
                let same = st
                    .masks
                    .iter()
                    .all(|&m| dist_to_mask(g, u, m) == dist_to_mask(g, w, m));
                if same {
                    return false;
                }
            }
        }
        true
    }

    fn accept(&mut self, g: &Graph, c: &ColorPartition) -> bool {
        codes_distinct(g, c)
    }
}

/// Prunes a branch once some non-identity automorphism moves only colored
/// vertices and preserves their colors: no completion can break it.
struct DistinguishingRule;

impl Rule for DistinguishingRule {
    fn partial(&mut self, g: &Graph, st: &State) -> bool {
        if st.depth < 2 || st.depth == g.n() {
            return true;
        }
        // Uncolored vertices get private labels, so they must stay fixed.
        let offset = st.masks.len() as u32 + 1;
        let labels: Vec<u32> = st
            .colors
            .iter()
            .enumerate()
            .map(|(v, &c)| {
                if c == 0 {
                    offset + v as u32
                } else {
                    u32::from(c)
                }
            })
            .collect();
        find_label_preserving(g, &labels).is_none()
    }

    fn accept(&mut self, g: &Graph, c: &ColorPartition) -> bool {
        let labels: Vec<u32> = c.colors().iter().map(|&x| u32::from(x)).collect();
        find_label_preserving(g, &labels).is_none()
    }
}
