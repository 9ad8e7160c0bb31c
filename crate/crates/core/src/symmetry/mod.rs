//! Graph automorphisms, color-preserving automorphism search, and canonical
//! forms.

pub(crate) mod canon;
mod search;

use std::fmt;
use std::ops::{ControlFlow, Index};

use serde::{Serialize, Serializer};

use crate::chromatics::ColorPartition;
use crate::error::{Error, Result};
use crate::graph::Graph;

pub use canon::{canonical_form, canonical_labeling};
pub(crate) use search::Matcher;

/// Default vertex cap for group computations.
pub const DEFAULT_CAP: usize = 16;

/// Groups up to this order are listed element by element.
pub const LISTING_CAP: u128 = 100_000;

/// A bijection on `0..n`; `perm[v]` is the image of `v`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(image: Vec<usize>) -> Result<Self> {
        let n = image.len();
        let mut seen = vec![false; n];
        for &v in &image {
            if v >= n || std::mem::replace(&mut seen[v], true) {
                return Err(Error::InvalidPermutation(format!(
                    "{image:?} is not a bijection"
                )));
            }
        }
        Ok(Permutation(image))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &v)| i == v)
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    /// `self` after `other`: `v -> self[other[v]]`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation(other.0.iter().map(|&v| self.0[v]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.len()];
        for (v, &image) in self.0.iter().enumerate() {
            inv[image] = v;
        }
        Permutation(inv)
    }

    /// Whether the permutation maps edges to edges and non-edges to non-edges.
    pub fn is_automorphism_of(&self, g: &Graph) -> bool {
        self.len() == g.n()
            && g.edges()
                .iter()
                .all(|&(u, v)| g.is_adjacent(self.0[u], self.0[v]))
    }

    /// Whether `color(perm[v]) == color(v)` for every vertex.
    pub fn preserves(&self, c: &ColorPartition) -> bool {
        self.0
            .iter()
            .enumerate()
            .all(|(v, &image)| c.color(image) == c.color(v))
    }
}

impl Index<usize> for Permutation {
    type Output = usize;

    fn index(&self, v: usize) -> &usize {
        &self.0[v]
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

/// The automorphism group of a graph.
///
/// Small groups are listed in full (lexicographic order of image arrays).
/// Larger ones keep only a strong generating set: for each vertex `i`, one
/// automorphism fixing `0..i` and sending `i` to each other point of its
/// orbit under that stabilizer.
#[derive(Clone, Debug)]
pub struct AutGroup {
    order: u128,
    generators: Vec<Permutation>,
    elements: Option<Vec<Permutation>>,
}

impl AutGroup {
    pub fn order(&self) -> u128 {
        self.order
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// All elements, when the order is at most [`LISTING_CAP`].
    pub fn elements(&self) -> Option<&[Permutation]> {
        self.elements.as_deref()
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }
}

/// Computes `Aut(g)` for graphs of at most [`DEFAULT_CAP`] vertices.
///
/// ```
/// use chromlab::{family::{generate, FamilySpec}, symmetry::automorphisms};
/// let c5 = generate(&FamilySpec::Cycle(5)).unwrap();
/// assert_eq!(automorphisms(&c5).unwrap().order(), 10);
/// ```
pub fn automorphisms(g: &Graph) -> Result<AutGroup> {
    automorphisms_with_cap(g, DEFAULT_CAP)
}

pub fn automorphisms_with_cap(g: &Graph, cap: usize) -> Result<AutGroup> {
    let n = g.n();
    if n > cap {
        return Err(Error::CapExceeded {
            what: "automorphism search",
            n,
            cap,
        });
    }
    let matcher = Matcher::new(g, &vec![0; n]);
    let mut order: u128 = 1;
    let mut generators = Vec::new();
    let mut prefix: Vec<(usize, usize)> = Vec::with_capacity(n);
    for i in 0..n {
        let mut orbit = 1u128;
        for t in i + 1..n {
            if matcher.class(t) != matcher.class(i) {
                continue;
            }
            prefix.push((i, t));
            if let Some(image) = matcher.first_extension(&prefix) {
                orbit += 1;
                generators.push(Permutation(image));
            }
            prefix.pop();
        }
        order = order.checked_mul(orbit).ok_or(Error::OrderOverflow)?;
        prefix.push((i, i));
    }
    let elements = (order <= LISTING_CAP).then(|| {
        let mut all = Vec::with_capacity(order as usize);
        let _ = matcher.for_each_extension(&[], &mut |image: &[usize]| {
            all.push(Permutation(image.to_vec()));
            ControlFlow::Continue(())
        });
        all.sort_unstable();
        debug_assert_eq!(all.len() as u128, order);
        all
    });
    Ok(AutGroup {
        order,
        generators,
        elements,
    })
}

/// A non-identity automorphism preserving every color class of `c`, or
/// `None` when only the identity does. `c` need not be proper.
///
/// The search never materializes the group: it looks for the first vertex
/// moved, in ascending order, and tries each admissible image.
pub fn find_color_preserving_automorphism(g: &Graph, c: &ColorPartition) -> Option<Permutation> {
    assert_eq!(g.n(), c.n(), "partition and graph sizes differ");
    let labels: Vec<u32> = c.colors().iter().map(|&x| u32::from(x)).collect();
    find_label_preserving(g, &labels)
}

pub(crate) fn find_label_preserving(g: &Graph, labels: &[u32]) -> Option<Permutation> {
    Matcher::new(g, labels).nontrivial().map(Permutation)
}
