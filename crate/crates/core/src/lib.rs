//! Locating, distinguishing and metric-dimension computations on small
//! connected graphs, plus a lab that checks the known comparison theorems
//! between them over exhaustive corpora.
//!
//! ```
//! use chromlab::{chromatics::Solver, io::parse_graph6};
//!
//! let k3 = parse_graph6("Bw").unwrap();
//! let r = Solver::default().report(&k3).unwrap();
//! assert_eq!((r.chi, r.chi_l, r.chi_d, r.dim), (3, 3, 3, 2));
//! ```

pub mod chromatics;
pub mod enumerate;
pub mod error;
pub mod family;
pub mod graph;
pub mod io;
pub mod lab;
pub mod symmetry;

pub use error::{Error, Result};
pub use graph::Graph;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/graphs.md")]
    struct Graphs;
    #[doc = include_str!("../../../book/src/symmetry.md")]
    struct Symmetry;
    #[doc = include_str!("../../../book/src/colorings.md")]
    struct Colorings;
    #[doc = include_str!("../../../book/src/metric.md")]
    struct Metric;
    #[doc = include_str!("../../../book/src/lab.md")]
    struct Lab;
    #[doc = include_str!("../../../book/src/cli.md")]
    struct Cli;
    #[doc = include_str!("../../../README.md")]
    struct Readme;
}
