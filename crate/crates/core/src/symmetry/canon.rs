//! Canonical forms by individualization with orbit pruning.
//!
//! A canonical ordering places vertices one at a time. At each step the
//! candidates are the unplaced vertices with the smallest key
//! `(class, distances to the already placed vertices)`, which is invariant
//! under relabeling. Candidates in the same orbit of the pointwise
//! stabilizer of the placed prefix lead to identical subtrees, so only one
//! per orbit is explored. The form is the smallest graph6 string over all
//! leaves of this tree.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::io::{encode_graph6, parse_graph6};

use super::{Matcher, Permutation, DEFAULT_CAP};

/// A label-invariant key: two graphs get the same key exactly when they are
/// isomorphic. The key is itself the graph6 string of a canonical relabeling.
///
/// ```
/// use chromlab::{Graph, symmetry::canonical_form};
/// let a = Graph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
/// let b = Graph::new(4, [(2, 0), (0, 3), (3, 1)]).unwrap();
/// assert_eq!(canonical_form(&a).unwrap(), canonical_form(&b).unwrap());
/// ```
pub fn canonical_form(g: &Graph) -> Result<String> {
    let (_, key) = search(g)?;
    Ok(key)
}

/// The relabeling that sends `g` to its canonical form: applying it with
/// [`Graph::relabel`] yields the graph whose graph6 string is
/// [`canonical_form`].
pub fn canonical_labeling(g: &Graph) -> Result<Permutation> {
    let (order, _) = search(g)?;
    let mut perm = vec![0; g.n()];
    for (label, &v) in order.iter().enumerate() {
        perm[v] = label;
    }
    Ok(Permutation(perm))
}

/// The canonically relabeled copy of `g`.
pub(crate) fn canonical_graph(g: &Graph) -> Result<(String, Graph)> {
    let (_, key) = search(g)?;
    let canon = parse_graph6(&key)?;
    Ok((key, canon))
}

fn search(g: &Graph) -> Result<(Vec<usize>, String)> {
    let n = g.n();
    if n > DEFAULT_CAP {
        return Err(Error::CapExceeded {
            what: "canonical form",
            n,
            cap: DEFAULT_CAP,
        });
    }
    let mut walk = Walk {
        g,
        matcher: Matcher::new(g, &vec![0; n]),
        best: None,
        prefix: Vec::with_capacity(n),
    };
    walk.descend();
    let (bits, order) = walk.best.expect("search visits at least one leaf");
    let key = encode_graph6(n, |i, j| bits[pair_index(i, j)]);
    Ok((order, key))
}

/// Position of the pair `(i, j)`, `i < j`, in graph6 bit order.
#[inline]
fn pair_index(i: usize, j: usize) -> usize {
    j * (j - 1) / 2 + i
}

struct Walk<'g> {
    g: &'g Graph,
    matcher: Matcher<'g>,
    /// Adjacency bits of the best ordering found so far, and that ordering.
    best: Option<(Vec<bool>, Vec<usize>)>,
    prefix: Vec<usize>,
}

impl Walk<'_> {
    fn descend(&mut self) {
        let n = self.g.n();
        let depth = self.prefix.len();
        if depth == n {
            let bits = self.bits(n);
            if self.best.as_ref().map_or(true, |(b, _)| bits < *b) {
                self.best = Some((bits, self.prefix.clone()));
            }
            return;
        }
        // Columns 0..depth are settled; abandon branches already worse.
        if let Some((best, _)) = &self.best {
            let settled = depth * depth.saturating_sub(1) / 2;
            if self.bits(depth)[..settled] > best[..settled] {
                return;
            }
        }

        let placed: u64 = self.prefix.iter().fold(0, |m, &v| m | 1 << v);
        let key = |w: usize| -> Vec<usize> {
            std::iter::once(self.matcher.class(w) as usize)
                .chain(self.prefix.iter().map(|&p| self.g.dist(w, p)))
                .collect()
        };
        let mut cell: Vec<usize> = Vec::new();
        let mut cell_key: Option<Vec<usize>> = None;
        for w in (0..n).filter(|&w| placed >> w & 1 == 0) {
            let k = key(w);
            match &cell_key {
                Some(ck) if k > *ck => {}
                Some(ck) if k == *ck => cell.push(w),
                _ => {
                    cell = vec![w];
                    cell_key = Some(k);
                }
            }
        }

        let fixed: Vec<(usize, usize)> = self.prefix.iter().map(|&v| (v, v)).collect();
        let mut reps: Vec<usize> = Vec::new();
        for &w in &cell {
            let equivalent = reps.iter().any(|&r| {
                let mut f = fixed.clone();
                f.push((r, w));
                self.matcher.first_extension(&f).is_some()
            });
            if !equivalent {
                reps.push(w);
            }
        }

        for r in reps {
            self.prefix.push(r);
            self.descend();
            self.prefix.pop();
        }
    }

    /// Adjacency bits among the first `len` placed vertices, graph6 order.
    fn bits(&self, len: usize) -> Vec<bool> {
        let mut out = vec![false; len * len.saturating_sub(1) / 2];
        for j in 1..len {
            for i in 0..j {
                out[pair_index(i, j)] = self.g.is_adjacent(self.prefix[i], self.prefix[j]);
            }
        }
        out
    }
}
