use serde::Serialize;

use crate::error::Result;
use crate::graph::Graph;
use crate::io::write_graph6;
use crate::symmetry::automorphisms_with_cap;

use super::{
    is_distinguishing, is_locating, is_proper, is_resolving, ColorPartition, ResolvingSet, Solver,
};

/// Every invariant the toolkit computes for one graph, with witnesses.
#[derive(Clone, Debug, Serialize)]
pub struct InvariantReport {
    /// graph6 of the graph the witnesses refer to.
    pub graph6: String,
    pub n: usize,
    pub edges: usize,
    pub chi: usize,
    #[serde(rename = "chi_L")]
    pub chi_l: usize,
    #[serde(rename = "chi_D")]
    pub chi_d: usize,
    pub dim: usize,
    pub diam: usize,
    pub aut_order: u128,
    pub witnesses: Witnesses,
}

#[derive(Clone, Debug, Serialize)]
pub struct Witnesses {
    pub chi: ColorPartition,
    #[serde(rename = "chi_L")]
    pub chi_l: ColorPartition,
    #[serde(rename = "chi_D")]
    pub chi_d: ColorPartition,
    pub dim: ResolvingSet,
}

impl Solver {
    /// Solves every invariant of `g`.
    ///
    /// ```
    /// use chromlab::{chromatics::Solver, family::{generate, FamilySpec}};
    /// let r = Solver::default().report(&generate(&FamilySpec::Path(7)).unwrap()).unwrap();
    /// assert_eq!((r.chi, r.chi_l, r.chi_d, r.dim, r.diam, r.aut_order), (2, 3, 3, 1, 6, 2));
    /// ```
    pub fn report(&self, g: &Graph) -> Result<InvariantReport> {
        self.check(g, "invariant report")?;
        let (chi, w_chi) = self.chromatic_number(g)?;
        let (chi_l, w_l) = self.locating_chromatic_number(g)?;
        let (chi_d, w_d) = self.distinguishing_chromatic_number(g)?;
        let (dim, w_dim) = self.metric_dimension(g)?;
        let aut = automorphisms_with_cap(g, self.cap)?;
        Ok(InvariantReport {
            graph6: write_graph6(g),
            n: g.n(),
            edges: g.edge_count(),
            chi,
            chi_l,
            chi_d,
            dim,
            diam: g.diameter(),
            aut_order: aut.order(),
            witnesses: Witnesses {
                chi: w_chi,
                chi_l: w_l,
                chi_d: w_d,
                dim: w_dim,
            },
        })
    }
}

impl InvariantReport {
    /// Checks the ordering `χ ≤ χ_D ≤ χ_L ≤ n`, `dim ≤ n - 1`, and that every
    /// witness satisfies its predicate with the reported number of colors.
    pub fn validate(&self, g: &Graph) -> std::result::Result<(), String> {
        let w = &self.witnesses;
        let checks = [
            (self.chi <= self.chi_d, "chi <= chi_D"),
            (self.chi_d <= self.chi_l, "chi_D <= chi_L"),
            (self.chi_l <= self.n, "chi_L <= n"),
            (self.dim < self.n, "dim <= n - 1"),
            (w.chi.k() == self.chi && is_proper(g, &w.chi), "chi witness"),
            (
                w.chi_l.k() == self.chi_l && is_locating(g, &w.chi_l),
                "chi_L witness",
            ),
            (
                w.chi_d.k() == self.chi_d && is_distinguishing(g, &w.chi_d),
                "chi_D witness",
            ),
            (
                w.dim.0.len() == self.dim && is_resolving(g, &w.dim),
                "dim witness",
            ),
            (self.graph6 == write_graph6(g), "graph6 matches"),
        ];
        match checks.iter().find(|(ok, _)| !ok) {
            Some((_, what)) => Err(format!("{what} fails for {}", self.graph6)),
            None => Ok(()),
        }
    }
}
