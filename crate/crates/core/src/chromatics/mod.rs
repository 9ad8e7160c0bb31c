//! Color codes, the proper / locating / distinguishing predicates, and exact
//! solvers for the chromatic, locating chromatic, and distinguishing
//! chromatic numbers and for the metric dimension.
//!
//! Colors are 1-based: a [`ColorPartition`] with `k` colors uses every color
//! in `1..=k` and its classes are `V_1, ..., V_k`. Vertices are 0-based.

mod metric;
mod report;
mod search;

use std::collections::HashSet;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{bits, Graph};
use crate::symmetry::find_color_preserving_automorphism;

pub use metric::{is_resolving, metric_dimension, metric_representation, ResolvingSet};
pub use report::{InvariantReport, Witnesses};
pub use search::{
    chromatic_number, distinguishing_chromatic_number, for_each_proper_partition,
    locating_chromatic_number, Solver, DEFAULT_SOLVER_CAP,
};

/// A surjective assignment of colors `1..=k` to the vertices.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct ColorPartition {
    colors: Vec<u8>,
    k: u8,
}

impl ColorPartition {
    /// `colors[v]` is the color of vertex `v`. Every color from 1 to the
    /// largest one used must appear.
    pub fn new(colors: Vec<u8>) -> Result<Self> {
        if colors.is_empty() {
            return Err(Error::InvalidPartition("no vertices".into()));
        }
        if colors.contains(&0) {
            return Err(Error::InvalidPartition("colors start at 1".into()));
        }
        let k = *colors.iter().max().unwrap();
        let mut used = vec![false; k as usize + 1];
        for &c in &colors {
            used[c as usize] = true;
        }
        if let Some(missing) = (1..=k as usize).find(|&c| !used[c]) {
            return Err(Error::InvalidPartition(format!(
                "color {missing} is unused (colors must be 1..={k})"
            )));
        }
        Ok(ColorPartition { colors, k })
    }

    /// Builds a partition from explicit classes: `classes[i]` gets color `i + 1`.
    pub fn from_classes(n: usize, classes: &[Vec<usize>]) -> Result<Self> {
        let mut colors = vec![0u8; n];
        for (i, class) in classes.iter().enumerate() {
            for &v in class {
                if v >= n || colors[v] != 0 {
                    return Err(Error::InvalidPartition(format!(
                        "vertex {v} is out of range or listed twice"
                    )));
                }
                colors[v] = u8::try_from(i + 1)
                    .map_err(|_| Error::InvalidPartition("too many classes".into()))?;
            }
        }
        if let Some(v) = colors.iter().position(|&c| c == 0) {
            return Err(Error::InvalidPartition(format!("vertex {v} has no class")));
        }
        ColorPartition::new(colors)
    }

    pub(crate) fn from_raw(colors: Vec<u8>, k: u8) -> Self {
        debug_assert_eq!(colors.iter().max(), Some(&k));
        ColorPartition { colors, k }
    }

    /// Number of colors.
    pub fn k(&self) -> usize {
        self.k as usize
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.colors.len()
    }

    pub fn color(&self, v: usize) -> u8 {
        self.colors[v]
    }

    pub fn colors(&self) -> &[u8] {
        &self.colors
    }

    /// `V_1, ..., V_k` as sorted vertex lists.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        self.class_masks()
            .into_iter()
            .map(|m| bits(m).collect())
            .collect()
    }

    /// `V_1, ..., V_k` as bitmasks.
    pub fn class_masks(&self) -> Vec<u64> {
        let mut masks = vec![0u64; self.k()];
        for (v, &c) in self.colors.iter().enumerate() {
            masks[c as usize - 1] |= 1 << v;
        }
        masks
    }

    /// Sizes of the classes in color order.
    pub fn class_sizes(&self) -> Vec<usize> {
        self.class_masks()
            .iter()
            .map(|m| m.count_ones() as usize)
            .collect()
    }

    /// The same partition with colors renumbered by first appearance.
    pub fn normalized(&self) -> ColorPartition {
        let mut map = vec![0u8; self.k() + 1];
        let mut next = 0u8;
        let colors = self
            .colors
            .iter()
            .map(|&c| {
                if map[c as usize] == 0 {
                    next += 1;
                    map[c as usize] = next;
                }
                map[c as usize]
            })
            .collect();
        ColorPartition { colors, k: self.k }
    }
}

impl fmt::Display for ColorPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.colors.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl Serialize for ColorPartition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.colors.serialize(s)
    }
}

/// `(d(v, V_1), ..., d(v, V_k))` for one vertex.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize)]
#[serde(transparent)]
pub struct ColorCode(pub Vec<usize>);

impl fmt::Display for ColorCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|d| d.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Distance from `v` to the nearest vertex of `mask`; `usize::MAX` if empty.
#[inline]
pub(crate) fn dist_to_mask(g: &Graph, v: usize, mask: u64) -> usize {
    bits(mask).map(|u| g.dist(v, u)).min().unwrap_or(usize::MAX)
}

/// The color code of `v` under `c`.
///
/// ```
/// use chromlab::{chromatics::{color_code, ColorPartition}, family::{generate, FamilySpec}};
/// let p7 = generate(&FamilySpec::Path(7)).unwrap();
/// let c = ColorPartition::new(vec![1, 2, 3, 2, 1, 2, 3]).unwrap();
/// assert_eq!(color_code(&p7, &c, 1).to_string(), "(1,0,1)");
/// ```
pub fn color_code(g: &Graph, c: &ColorPartition, v: usize) -> ColorCode {
    check_sizes(g, c);
    ColorCode(
        c.class_masks()
            .into_iter()
            .map(|m| dist_to_mask(g, v, m))
            .collect(),
    )
}

/// Color codes of all vertices.
pub fn color_codes(g: &Graph, c: &ColorPartition) -> Vec<ColorCode> {
    check_sizes(g, c);
    let masks = c.class_masks();
    (0..g.n())
        .map(|v| ColorCode(masks.iter().map(|&m| dist_to_mask(g, v, m)).collect()))
        .collect()
}

/// No edge joins two vertices of the same color.
pub fn is_proper(g: &Graph, c: &ColorPartition) -> bool {
    check_sizes(g, c);
    g.edges().iter().all(|&(u, v)| c.color(u) != c.color(v))
}

/// Proper, and all color codes pairwise distinct.
pub fn is_locating(g: &Graph, c: &ColorPartition) -> bool {
    is_proper(g, c) && codes_distinct(g, c)
}

pub(crate) fn codes_distinct(g: &Graph, c: &ColorPartition) -> bool {
    let mut seen = HashSet::with_capacity(g.n());
    color_codes(g, c).into_iter().all(|code| seen.insert(code))
}

/// Proper, and preserved by no automorphism other than the identity.
pub fn is_distinguishing(g: &Graph, c: &ColorPartition) -> bool {
    is_proper(g, c) && find_color_preserving_automorphism(g, c).is_none()
}

fn check_sizes(g: &Graph, c: &ColorPartition) {
    assert_eq!(g.n(), c.n(), "partition and graph sizes differ");
}
