//! Named graph families.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A parameterized graph family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    /// Path on `n` vertices.
    Path(usize),
    /// Cycle on `n >= 3` vertices.
    Cycle(usize),
    /// `K_{1,n}`: a center joined to `n` leaves.
    Star(usize),
    /// Complete multipartite graph with the given part sizes.
    CompleteMultipartite(Vec<usize>),
    /// Center with `(n-1)^2` pendant paths of length 2 plus `m - n` pendant
    /// leaves. Realizes distinguishing chromatic number `n` and locating
    /// chromatic number `m`.
    Spider { n: usize, m: usize },
}

impl FamilySpec {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidFamily(msg));
        match *self {
            FamilySpec::Path(n) | FamilySpec::Star(n) if n == 0 => {
                bad("n must be at least 1".into())
            }
            FamilySpec::Cycle(n) if n < 3 => bad(format!("cycle needs n >= 3, got {n}")),
            FamilySpec::CompleteMultipartite(ref parts) if parts.is_empty() => {
                bad("at least one part is required".into())
            }
            FamilySpec::CompleteMultipartite(ref parts) if parts.contains(&0) => {
                bad("part sizes must be at least 1".into())
            }
            FamilySpec::CompleteMultipartite(ref parts) if parts.len() == 1 && parts[0] > 1 => {
                bad("a single part of size > 1 is disconnected".into())
            }
            FamilySpec::Spider { n, m } if n < 2 || m < n || m > 2 * n - 1 => bad(format!(
                "spider needs 2 <= n <= m <= 2n-1, got n={n}, m={m}"
            )),
            _ => Ok(()),
        }
    }

    /// Vertex count of the generated graph.
    pub fn order(&self) -> usize {
        match *self {
            FamilySpec::Path(n) | FamilySpec::Cycle(n) => n,
            FamilySpec::Star(n) => n + 1,
            FamilySpec::CompleteMultipartite(ref parts) => parts.iter().sum(),
            FamilySpec::Spider { n, m } => 1 + 2 * (n - 1) * (n - 1) + (m - n),
        }
    }

    /// Parses a family name and a comma-separated parameter list.
    pub fn from_parts(name: &str, params: &str) -> Result<Self> {
        let values = params
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(|s| {
                s.parse::<usize>().map_err(|_| {
                    Error::InvalidFamily(format!("parameter {s:?} is not a non-negative integer"))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let one = |values: &[usize]| match values {
            [n] => Ok(*n),
            _ => Err(Error::InvalidFamily(format!(
                "{name} takes exactly one parameter"
            ))),
        };
        let spec = match name {
            "path" => FamilySpec::Path(one(&values)?),
            "cycle" => FamilySpec::Cycle(one(&values)?),
            "star" => FamilySpec::Star(one(&values)?),
            "complete_multipartite" | "multipartite" => FamilySpec::CompleteMultipartite(values),
            "spider" => match values[..] {
                [n, m] => FamilySpec::Spider { n, m },
                _ => return Err(Error::InvalidFamily("spider takes n,m".into())),
            },
            other => return Err(Error::InvalidFamily(format!("unknown family {other:?}"))),
        };
        spec.validate()?;
        Ok(spec)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Path(n) => write!(f, "path({n})"),
            FamilySpec::Cycle(n) => write!(f, "cycle({n})"),
            FamilySpec::Star(n) => write!(f, "star({n})"),
            FamilySpec::CompleteMultipartite(parts) => {
                let parts: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
                write!(f, "complete_multipartite({})", parts.join(","))
            }
            FamilySpec::Spider { n, m } => write!(f, "spider({n},{m})"),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    /// Accepts `name(p1,p2,...)` or `name:p1,p2`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some((name, rest)) = s.split_once('(') {
            let params = rest
                .strip_suffix(')')
                .ok_or_else(|| Error::InvalidFamily(format!("unbalanced parentheses in {s:?}")))?;
            FamilySpec::from_parts(name.trim(), params)
        } else if let Some((name, params)) = s.split_once(':') {
            FamilySpec::from_parts(name.trim(), params)
        } else {
            Err(Error::InvalidFamily(format!("cannot parse {s:?}")))
        }
    }
}

/// Builds the graph for a family. Vertex numbering is deterministic: for
/// stars and spiders the center is 0; spider legs follow as consecutive
/// `(inner, outer)` pairs, then the extra pendants.
pub fn generate(spec: &FamilySpec) -> Result<Graph> {
    spec.validate()?;
    let order = spec.order();
    let edges: Vec<(usize, usize)> = match *spec {
        FamilySpec::Path(n) => (1..n).map(|v| (v - 1, v)).collect(),
        FamilySpec::Cycle(n) => (0..n).map(|v| (v, (v + 1) % n)).collect(),
        FamilySpec::Star(n) => (1..=n).map(|v| (0, v)).collect(),
        FamilySpec::CompleteMultipartite(ref parts) => {
            let mut part_of = Vec::with_capacity(order);
            for (i, &size) in parts.iter().enumerate() {
                part_of.extend(std::iter::repeat(i).take(size));
            }
            let mut edges = Vec::new();
            for u in 0..order {
                for v in u + 1..order {
                    if part_of[u] != part_of[v] {
                        edges.push((u, v));
                    }
                }
            }
            edges
        }
        FamilySpec::Spider { n, .. } => {
            let legs = (n - 1) * (n - 1);
            let mut edges = Vec::with_capacity(order - 1);
            for leg in 0..legs {
                let inner = 1 + 2 * leg;
                edges.push((0, inner));
                edges.push((inner, inner + 1));
            }
            edges.extend((1 + 2 * legs..order).map(|p| (0, p)));
            edges
        }
    };
    Graph::new(order, edges)
}
