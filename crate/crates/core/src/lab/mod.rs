//! Mechanical verification of the comparison theorems between locating and
//! distinguishing colorings.
//!
//! Each check consumes an [`InvariantReport`] (one exponential solve per
//! graph) and emits [`Verdict`] records. A verdict that claims a violation
//! carries evidence that [`Verdict::revalidate`] can re-check from scratch
//! against the graph encoded in its `graph_key`.

mod checks;
mod sweep;

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::chromatics::{
    color_code, is_distinguishing, is_locating, is_proper, ColorCode, ColorPartition, Solver,
};
use crate::io::parse_graph6;
use crate::symmetry::Permutation;

pub use checks::{
    check_color_ordering, check_diameter_bound, check_dimension_bound,
    check_locating_implies_distinguishing, check_multipartite_theorems, check_near_complete_1,
    check_near_complete_2, check_tree_chi3, is_complete_multipartite, reproduce_p7_example,
    verify_spider, PartitionMode, PARTITION_ENUMERATION_CAP,
};
pub use sweep::{
    audit_graph, census_chi3, render_records, report_all, sort_verdicts, status_matrix,
    survey_chi3, sweep, sweep_connected, GraphAudit, LabConfig, SurveyFlags, SurveyRecord,
    TreeSurvey,
};

/// The statements under test.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TheoremId {
    /// `χ_L = n` iff complete multipartite (`n >= 3`).
    T2_1,
    /// `χ_D = n` iff complete multipartite.
    T2_2,
    /// Every locating coloring is distinguishing.
    T2_3,
    /// `χ_D <= χ_L`.
    C2_5,
    /// `χ_D, χ_L <= χ + dim`.
    CBoundDim,
    /// `χ_D <= n - diam + 2` when `n >= 3`, `diam >= 2`.
    CBoundDiam,
    /// Spider realizing `χ_D = n`, `χ_L = m`.
    TF1,
    /// `χ_D = n - 1` makes every distinguishing coloring locating.
    TNearly1,
    /// `χ_D = n - 2` plus a class-shape condition makes the coloring locating.
    TNearly2,
    /// Trees with `χ_L = 3`: `χ_D = 3` exactly when `|Aut| >= 2`.
    TTrees3,
    /// The 7-vertex path coloring that distinguishes without locating.
    ExP7,
}

impl TheoremId {
    pub const ALL: [TheoremId; 11] = [
        TheoremId::T2_1,
        TheoremId::T2_2,
        TheoremId::T2_3,
        TheoremId::C2_5,
        TheoremId::CBoundDim,
        TheoremId::CBoundDiam,
        TheoremId::TF1,
        TheoremId::TNearly1,
        TheoremId::TNearly2,
        TheoremId::TTrees3,
        TheoremId::ExP7,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::T2_1 => "T2.1",
            TheoremId::T2_2 => "T2.2",
            TheoremId::T2_3 => "T2.3",
            TheoremId::C2_5 => "C2.5",
            TheoremId::CBoundDim => "C-bound-dim",
            TheoremId::CBoundDiam => "C-bound-diam",
            TheoremId::TF1 => "T-f1",
            TheoremId::TNearly1 => "T-nearly-1",
            TheoremId::TNearly2 => "T-nearly-2",
            TheoremId::TTrees3 => "T-trees-3",
            TheoremId::ExP7 => "Ex-P7",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        TheoremId::ALL
            .into_iter()
            .find(|id| id.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| {
                let known: Vec<&str> = TheoremId::ALL.iter().map(|id| id.as_str()).collect();
                format!(
                    "unknown theorem id {s:?} (expected one of {})",
                    known.join(", ")
                )
            })
    }
}

impl Serialize for TheoremId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Holds,
    Violated,
    Inapplicable,
}

/// Marks a verdict that records a known problem with the statement itself
/// rather than a failure of this crate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Flag {
    OpenQuestion,
}

/// Whatever a verdict needs to be checked independently. All fields are
/// optional; [`Verdict::revalidate`] re-checks each one that is present.
#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct Evidence {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub partition: Option<ColorPartition>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub proper: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub locating: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub distinguishing: Option<bool>,
    /// Two vertices claimed to share a color code under `partition`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub collision: Option<(usize, usize)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub code: Option<ColorCode>,
    /// A non-identity automorphism of the graph.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub automorphism: Option<Permutation>,
    /// Whether `automorphism` preserves every class of `partition`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub preserves_partition: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub complete_multipartite: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chi: Option<usize>,
    #[serde(rename = "chi_L", skip_serializing_if = "Option::is_none")]
    pub chi_l: Option<usize>,
    #[serde(rename = "chi_D", skip_serializing_if = "Option::is_none")]
    pub chi_d: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dim: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub diam: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub aut_order: Option<u128>,
    /// Number of colorings examined.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub checked: Option<usize>,
    /// Colorings outside the statement's hypothesis, reported but not asserted.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub unasserted: Vec<ColorPartition>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Evidence {
    /// A coloring together with its three predicate values.
    pub(crate) fn coloring(g: &crate::Graph, c: &ColorPartition) -> Self {
        Evidence {
            partition: Some(c.clone()),
            proper: Some(is_proper(g, c)),
            locating: Some(is_locating(g, c)),
            distinguishing: Some(is_distinguishing(g, c)),
            ..Evidence::default()
        }
    }
}

/// One theorem checked against one graph.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Verdict {
    pub theorem_id: TheoremId,
    /// graph6 of the graph checked; evidence refers to this labeling.
    pub graph_key: String,
    pub status: Status,
    pub evidence: Evidence,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub flag: Option<Flag>,
}

impl Verdict {
    pub fn new(
        theorem_id: TheoremId,
        graph_key: String,
        status: Status,
        evidence: Evidence,
    ) -> Self {
        Verdict {
            theorem_id,
            graph_key,
            status,
            evidence,
            flag: None,
        }
    }

    /// A violation not attributed to a known problem in the statement.
    pub fn is_failure(&self) -> bool {
        self.status == Status::Violated && self.flag.is_none()
    }

    /// Re-derives every claim in the evidence from the graph alone.
    pub fn revalidate(&self) -> std::result::Result<(), String> {
        let g = parse_graph6(&self.graph_key).map_err(|e| e.to_string())?;
        let ev = &self.evidence;
        let mismatch = |what: &str| {
            Err(format!(
                "{} on {}: {what} does not re-validate",
                self.theorem_id, self.graph_key
            ))
        };

        if let Some(c) = &ev.partition {
            if c.n() != g.n() {
                return mismatch("partition size");
            }
            let claims = [
                (ev.proper, is_proper(&g, c), "proper"),
                (ev.locating, is_locating(&g, c), "locating"),
                (
                    ev.distinguishing,
                    is_distinguishing(&g, c),
                    "distinguishing",
                ),
            ];
            for (claimed, actual, what) in claims {
                if claimed.is_some_and(|x| x != actual) {
                    return mismatch(what);
                }
            }
            if let Some((a, b)) = ev.collision {
                let (ca, cb) = (color_code(&g, c, a), color_code(&g, c, b));
                if ca != cb || ev.code.as_ref().is_some_and(|code| *code != ca) {
                    return mismatch("code collision");
                }
            }
        }
        if let Some(f) = &ev.automorphism {
            if f.is_identity() || !f.is_automorphism_of(&g) {
                return mismatch("automorphism");
            }
            if let (Some(c), Some(claimed)) = (&ev.partition, ev.preserves_partition) {
                if f.preserves(c) != claimed {
                    return mismatch("automorphism/partition relation");
                }
            }
        }
        if let Some(claimed) = ev.complete_multipartite {
            if claimed != is_complete_multipartite(&g) {
                return mismatch("complete multipartite");
            }
        }
        for c in &ev.unasserted {
            if !is_distinguishing(&g, c) {
                return mismatch("unasserted coloring");
            }
        }
        let has_values = [ev.chi, ev.chi_l, ev.chi_d, ev.dim, ev.diam]
            .iter()
            .any(Option::is_some)
            || ev.aut_order.is_some();
        if has_values {
            let r = Solver::with_cap(g.n().max(crate::chromatics::DEFAULT_SOLVER_CAP))
                .report(&g)
                .map_err(|e| e.to_string())?;
            let pairs = [
                (ev.n, r.n, "n"),
                (ev.chi, r.chi, "chi"),
                (ev.chi_l, r.chi_l, "chi_L"),
                (ev.chi_d, r.chi_d, "chi_D"),
                (ev.dim, r.dim, "dim"),
                (ev.diam, r.diam, "diam"),
            ];
            for (claimed, actual, what) in pairs {
                if claimed.is_some_and(|x| x != actual) {
                    return mismatch(what);
                }
            }
            if ev.aut_order.is_some_and(|x| x != r.aut_order) {
                return mismatch("aut_order");
            }
        }
        Ok(())
    }
}

pub(crate) fn key_of(g: &crate::Graph) -> String {
    crate::io::write_graph6(g)
}
