use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::chromatics::{ColorPartition, InvariantReport, Solver};
use crate::enumerate::{connected_graphs_up_to, trees_up_to};
use crate::error::Result;
use crate::graph::Graph;
use crate::symmetry::canonical_form;

use super::checks::{self, PartitionMode};
use super::{TheoremId, Verdict};

/// Knobs for corpus runs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LabConfig {
    pub solver: Solver,
    /// Worker threads; output does not depend on this.
    pub workers: usize,
    /// Up to this order the locating-implies-distinguishing check covers
    /// every locating coloring, above it only the minimum one.
    pub all_partitions_max_n: usize,
}

impl Default for LabConfig {
    fn default() -> Self {
        LabConfig {
            solver: Solver::default(),
            workers: 1,
            all_partitions_max_n: 5,
        }
    }
}

impl LabConfig {
    fn pool(&self) -> rayon::ThreadPool {
        rayon::ThreadPoolBuilder::new()
            .num_threads(self.workers.max(1))
            .build()
            .expect("thread pool")
    }

    /// Runs `f` over `items` on the configured pool, keeping input order.
    fn map<T, U, F>(&self, items: &[T], f: F) -> Result<Vec<U>>
    where
        T: Sync,
        U: Send,
        F: Fn(&T) -> Result<U> + Sync + Send,
    {
        if self.workers <= 1 {
            return items.iter().map(f).collect();
        }
        self.pool().install(|| items.par_iter().map(f).collect())
    }
}

/// One graph's report and every verdict that applies to it.
#[derive(Clone, Debug, Serialize)]
pub struct GraphAudit {
    pub report: InvariantReport,
    pub verdicts: Vec<Verdict>,
}

/// Solves `g` once and runs every single-graph check on the result.
pub fn audit_graph(g: &Graph, cfg: &LabConfig) -> Result<GraphAudit> {
    let r = cfg.solver.report(g)?;
    let mode = if g.n() <= cfg.all_partitions_max_n {
        PartitionMode::All { max_colors: g.n() }
    } else {
        PartitionMode::MinimumOnly
    };
    let mut verdicts = Vec::with_capacity(10);
    verdicts.extend(checks::check_multipartite_theorems(g, &r));
    verdicts.push(checks::check_locating_implies_distinguishing(g, &r, mode)?);
    verdicts.push(checks::check_color_ordering(g, &r));
    verdicts.push(checks::check_dimension_bound(g, &r));
    verdicts.push(checks::check_diameter_bound(g, &r));
    verdicts.push(checks::check_near_complete_1(g, &r)?);
    verdicts.push(checks::check_near_complete_2(g, &r)?);
    if g.is_tree() {
        verdicts.push(checks::check_tree_chi3(g, &r)?);
    }
    if g.n() == 7 && g.is_tree() && g.diameter() == 6 {
        let c = ColorPartition::new(p7_labels(g))?;
        verdicts.push(checks::p7_verdict(g, &c, &r));
    }
    Ok(GraphAudit {
        report: r,
        verdicts,
    })
}

/// Colors the path `g` walking from its lower-numbered end:
/// `a1 .. a7` get `1, 2, 3, 2, 1, 2, 3`.
fn p7_labels(g: &Graph) -> Vec<u8> {
    const PATTERN: [u8; 7] = [1, 2, 3, 2, 1, 2, 3];
    let start = (0..g.n())
        .find(|&v| g.degree(v) == 1)
        .expect("a path has ends");
    let mut labels = vec![0; g.n()];
    for v in 0..g.n() {
        labels[v] = PATTERN[g.dist(start, v)];
    }
    labels
}

/// Solves each graph in order.
pub fn report_all(graphs: &[Graph], cfg: &LabConfig) -> Result<Vec<InvariantReport>> {
    cfg.map(graphs, |g| cfg.solver.report(g))
}

/// Audits each graph in order.
pub fn sweep(graphs: &[Graph], cfg: &LabConfig) -> Result<Vec<GraphAudit>> {
    cfg.map(graphs, |g| audit_graph(g, cfg))
}

/// Audits every connected graph with at most `nmax` vertices.
pub fn sweep_connected(nmax: usize, cfg: &LabConfig) -> Result<Vec<GraphAudit>> {
    sweep(&connected_graphs_up_to(nmax)?, cfg)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SurveyFlags {
    pub complete_multipartite: bool,
    pub bipartite: bool,
    pub tree: bool,
    /// `χ_D = χ_L = 3`.
    pub chi3: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct SurveyRecord {
    /// Canonical graph6 key.
    pub key: String,
    pub report: InvariantReport,
    pub flags: SurveyFlags,
}

impl SurveyRecord {
    pub fn new(g: &Graph, report: InvariantReport) -> Result<Self> {
        let flags = SurveyFlags {
            complete_multipartite: checks::is_complete_multipartite(g),
            bipartite: g.is_bipartite(),
            tree: g.is_tree(),
            chi3: report.chi_d == 3 && report.chi_l == 3,
        };
        Ok(SurveyRecord {
            key: canonical_form(g)?,
            report,
            flags,
        })
    }
}

/// The tree side of the `χ_D = χ_L = 3` survey.
#[derive(Clone, Debug, Serialize)]
pub struct TreeSurvey {
    pub records: Vec<SurveyRecord>,
    /// Keys of trees with `χ_L = 3` and `|Aut| >= 2`.
    pub claimed: Vec<String>,
    /// Keys of trees with `χ_D = χ_L = 3`.
    pub observed: Vec<String>,
    pub verdicts: Vec<Verdict>,
}

impl TreeSurvey {
    /// Trees in exactly one of the two sets.
    pub fn mismatches(&self) -> Vec<&str> {
        let only_claimed = self.claimed.iter().filter(|k| !self.observed.contains(k));
        let only_observed = self.observed.iter().filter(|k| !self.claimed.contains(k));
        only_claimed
            .chain(only_observed)
            .map(String::as_str)
            .collect()
    }
}

/// Solves every tree with at most `nmax` vertices and compares the set with
/// `χ_D = χ_L = 3` against the set with `χ_L = 3` and a nontrivial
/// automorphism.
pub fn survey_chi3(nmax: usize, cfg: &LabConfig) -> Result<TreeSurvey> {
    let trees = trees_up_to(nmax)?;
    let rows = cfg.map(&trees, |t| {
        let r = cfg.solver.report(t)?;
        let verdict = checks::check_tree_chi3(t, &r)?;
        Ok((SurveyRecord::new(t, r)?, verdict))
    })?;
    let (records, verdicts): (Vec<_>, Vec<_>) = rows.into_iter().unzip();
    let claimed = records
        .iter()
        .filter(|s| s.report.chi_l == 3 && s.report.aut_order >= 2)
        .map(|s| s.key.clone())
        .collect();
    let observed = records
        .iter()
        .filter(|s| s.flags.chi3)
        .map(|s| s.key.clone())
        .collect();
    Ok(TreeSurvey {
        records,
        claimed,
        observed,
        verdicts,
    })
}

/// Every connected graph with at most `nmax` vertices and `χ_D = χ_L = 3`.
pub fn census_chi3(nmax: usize, cfg: &LabConfig) -> Result<Vec<SurveyRecord>> {
    let graphs = connected_graphs_up_to(nmax)?;
    let records = cfg.map(&graphs, |g| SurveyRecord::new(g, cfg.solver.report(g)?))?;
    Ok(records.into_iter().filter(|s| s.flags.chi3).collect())
}

/// Sorts by theorem, then by graph order and key, then by status.
pub fn sort_verdicts(verdicts: &mut [Verdict]) {
    verdicts.sort_by(|a, b| {
        (a.theorem_id, a.graph_key.len(), &a.graph_key, a.status).cmp(&(
            b.theorem_id,
            b.graph_key.len(),
            &b.graph_key,
            b.status,
        ))
    });
}

/// One JSON object per line.
pub fn render_records<T: Serialize>(items: &[T]) -> String {
    let mut out = String::new();
    for item in items {
        out.push_str(&serde_json::to_string(item).expect("records serialize"));
        out.push('\n');
    }
    out
}

/// Holds, violated and inapplicable counts per theorem.
pub fn status_matrix(verdicts: &[Verdict]) -> BTreeMap<TheoremId, [usize; 3]> {
    let mut matrix = BTreeMap::new();
    for v in verdicts {
        let row: &mut [usize; 3] = matrix.entry(v.theorem_id).or_default();
        row[v.status as usize] += 1;
    }
    matrix
}
