use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use chromlab::chromatics::{InvariantReport, Solver, DEFAULT_SOLVER_CAP};
use chromlab::enumerate::{connected_graphs_up_to, trees_up_to};
use chromlab::family::{generate, FamilySpec};
use chromlab::io::{parse_edge_list, parse_graph6, write_edge_list, write_graph6};
use chromlab::lab::{
    census_chi3, render_records, report_all, sort_verdicts, status_matrix, survey_chi3, sweep,
    verify_spider, Flag, LabConfig, Status, TheoremId, Verdict,
};
use chromlab::{Error, Graph};

/// Exact locating, distinguishing and metric-dimension invariants of small
/// graphs, and checks of the theorems relating them.
#[derive(Parser, Debug)]
#[command(name = "chromlab", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Solve every invariant for each input graph.
    Compute {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        run: RunOpts,
    },
    /// Check theorems on input graphs or on an exhaustive corpus.
    Verify {
        #[command(flatten)]
        source: Source,
        /// Audit every connected graph with at most N vertices (N <= 7).
        #[arg(long, value_name = "N", conflicts_with_all = ["input", "family"])]
        sweep: Option<usize>,
        /// With --sweep, survey trees (N <= 10) instead of all connected graphs.
        #[arg(long, requires = "sweep")]
        trees: bool,
        /// With --sweep, list every connected graph with chi_D = chi_L = 3.
        #[arg(long, requires = "sweep", conflicts_with = "trees")]
        census: bool,
        /// Only report this theorem.
        #[arg(long, value_name = "ID")]
        theorem: Option<TheoremId>,
        #[command(flatten)]
        run: RunOpts,
    },
    /// List one graph per isomorphism class in graph6.
    Enumerate {
        /// Largest order.
        #[arg(long, alias = "max-n", value_name = "N")]
        sweep: usize,
        /// Trees only.
        #[arg(long)]
        trees: bool,
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// Build a graph from a named family.
    Construct {
        #[arg(long, value_name = "NAME")]
        family: String,
        #[arg(long, value_name = "CSV", default_value = "")]
        params: String,
        #[arg(long, value_enum, default_value_t = Format::G6)]
        format: Format,
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
}

#[derive(Args, Debug)]
struct Source {
    /// Read graphs from a file (graph6 one per line, or one edge list).
    #[arg(long, value_name = "PATH", conflicts_with = "family")]
    input: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::G6)]
    format: Format,
    /// Use a family graph: path, cycle, star, complete_multipartite, spider.
    #[arg(long, value_name = "NAME", requires = "params")]
    family: Option<String>,
    #[arg(long, value_name = "CSV")]
    params: Option<String>,
}

#[derive(Args, Debug)]
struct RunOpts {
    /// Largest order the exact solvers accept.
    #[arg(long, env = "CHROMLAB_CAP", default_value_t = DEFAULT_SOLVER_CAP)]
    cap: usize,
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
    workers: u16,
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Output::Human)]
    output: Output,
}

impl RunOpts {
    fn lab(&self) -> LabConfig {
        LabConfig {
            solver: Solver::with_cap(self.cap),
            workers: self.workers as usize,
            ..LabConfig::default()
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    G6,
    Edges,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Output {
    Human,
    Records,
}

/// A failed run: exit code and message.
struct Failure(u8, String);

impl Failure {
    const VIOLATION: u8 = 1;
    const INPUT: u8 = 2;
    const CAP: u8 = 3;

    fn from_error(e: Error, context: &str) -> Self {
        let code = if e.is_cap_exceeded() {
            Failure::CAP
        } else {
            Failure::INPUT
        };
        Failure(code, format!("{context}: {e}"))
    }
}

/// A graph plus the name used for it in messages.
struct Named {
    name: String,
    graph: Graph,
    family: Option<FamilySpec>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure(code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Compute { source, run } => compute(&source, &run),
        Command::Verify {
            source,
            sweep,
            trees,
            census,
            theorem,
            run,
        } => match sweep {
            Some(n) if trees => verify_trees(n, theorem, &run),
            Some(n) if census => emit_census(n, &run),
            Some(n) => {
                let graphs = connected_graphs_up_to(n)
                    .map_err(|e| Failure::from_error(e, "sweep"))?
                    .into_iter()
                    .map(|graph| Named {
                        name: write_graph6(&graph),
                        graph,
                        family: None,
                    })
                    .collect();
                verify(graphs, theorem, &run)
            }
            None => verify(load(&source)?, theorem, &run),
        },
        Command::Enumerate { sweep, trees, out } => {
            let graphs = if trees {
                trees_up_to(sweep)
            } else {
                connected_graphs_up_to(sweep)
            }
            .map_err(|e| Failure::from_error(e, "enumerate"))?;
            let text: String = graphs.iter().map(|g| write_graph6(g) + "\n").collect();
            emit(out.as_ref(), &text)
        }
        Command::Construct {
            family,
            params,
            format,
            out,
        } => {
            let spec = FamilySpec::from_parts(&family, &params)
                .map_err(|e| Failure(Failure::INPUT, e.to_string()))?;
            let g = generate(&spec).map_err(|e| Failure::from_error(e, &spec.to_string()))?;
            let text = match format {
                Format::G6 => write_graph6(&g) + "\n",
                Format::Edges => write_edge_list(&g),
            };
            emit(out.as_ref(), &text)
        }
    }
}

fn load(source: &Source) -> Result<Vec<Named>, Failure> {
    if let Some(name) = &source.family {
        let params = source.params.as_deref().unwrap_or("");
        let spec = FamilySpec::from_parts(name, params)
            .map_err(|e| Failure(Failure::INPUT, e.to_string()))?;
        let graph = generate(&spec).map_err(|e| Failure::from_error(e, &spec.to_string()))?;
        return Ok(vec![Named {
            name: spec.to_string(),
            graph,
            family: Some(spec),
        }]);
    }
    let Some(path) = &source.input else {
        return Err(Failure(
            Failure::INPUT,
            "no input: pass --input, --family or --sweep".into(),
        ));
    };
    let text = fs::read_to_string(path)
        .map_err(|e| Failure(Failure::INPUT, format!("{}: {e}", path.display())))?;
    let file = path.display();
    match source.format {
        Format::G6 => {
            let mut out = Vec::new();
            for (i, line) in text.lines().enumerate() {
                let line = line.trim();
                if line.is_empty() {
                    continue;
                }
                let graph = parse_graph6(line)
                    .map_err(|e| Failure(Failure::INPUT, format!("{file}: line {}: {e}", i + 1)))?;
                out.push(Named {
                    name: format!("{file}:{} ({line})", i + 1),
                    graph,
                    family: None,
                });
            }
            Ok(out)
        }
        Format::Edges if text.trim().is_empty() => Ok(Vec::new()),
        Format::Edges => {
            let graph = parse_edge_list(&text)
                .map_err(|e| Failure(Failure::INPUT, format!("{file}: {e}")))?;
            Ok(vec![Named {
                name: file.to_string(),
                graph,
                family: None,
            }])
        }
    }
}

/// Refuses up front if any graph is over the cap, naming the first one.
fn check_cap(graphs: &[Named], cap: usize) -> Result<(), Failure> {
    match graphs.iter().find(|g| g.graph.n() > cap) {
        Some(g) => Err(Failure(
            Failure::CAP,
            format!(
                "graph {} has {} vertices, over the solver cap of {cap} (raise --cap or CHROMLAB_CAP)",
                g.name,
                g.graph.n()
            ),
        )),
        None => Ok(()),
    }
}

fn compute(source: &Source, opts: &RunOpts) -> Result<(), Failure> {
    let graphs = load(source)?;
    check_cap(&graphs, opts.cap)?;
    let plain: Vec<Graph> = graphs.iter().map(|g| g.graph.clone()).collect();
    let reports = report_all(&plain, &opts.lab()).map_err(|e| Failure::from_error(e, "compute"))?;
    let text = match opts.output {
        Output::Records => render_records(&reports),
        Output::Human => report_table(&graphs, &reports),
    };
    emit(opts.out.as_ref(), &text)
}

fn report_table(graphs: &[Named], reports: &[InvariantReport]) -> String {
    let mut out = String::new();
    if reports.is_empty() {
        return out;
    }
    let _ = writeln!(
        out,
        "{:<24} {:>3} {:>3} {:>4} {:>6} {:>6} {:>4} {:>5} {:>10}",
        "graph", "n", "m", "chi", "chi_L", "chi_D", "dim", "diam", "|Aut|"
    );
    for (g, r) in graphs.iter().zip(reports) {
        let _ = writeln!(
            out,
            "{:<24} {:>3} {:>3} {:>4} {:>6} {:>6} {:>4} {:>5} {:>10}",
            g.name, r.n, r.edges, r.chi, r.chi_l, r.chi_d, r.dim, r.diam, r.aut_order
        );
    }
    out
}

fn verify(graphs: Vec<Named>, theorem: Option<TheoremId>, opts: &RunOpts) -> Result<(), Failure> {
    check_cap(&graphs, opts.cap)?;
    let cfg = opts.lab();
    let mut verdicts = Vec::new();
    for g in &graphs {
        if let Some(FamilySpec::Spider { n, m }) = g.family {
            if theorem.is_none() || theorem == Some(TheoremId::TF1) {
                verdicts.push(
                    verify_spider(n, m, &cfg.solver)
                        .map_err(|e| Failure::from_error(e, &g.name))?,
                );
            }
        }
    }
    let wants_audit = theorem != Some(TheoremId::TF1);
    if wants_audit {
        let plain: Vec<Graph> = graphs.iter().map(|g| g.graph.clone()).collect();
        let audits = sweep(&plain, &cfg).map_err(|e| Failure::from_error(e, "verify"))?;
        for (g, audit) in graphs.iter().zip(audits) {
            let before = verdicts.len();
            verdicts.extend(
                audit
                    .verdicts
                    .into_iter()
                    .filter(|v| theorem.is_none() || theorem == Some(v.theorem_id)),
            );
            if let Some(t) = theorem {
                if verdicts.len() == before {
                    verdicts.push(Verdict::new(
                        t,
                        write_graph6(&g.graph),
                        Status::Inapplicable,
                        Default::default(),
                    ));
                }
            }
        }
    }
    finish(verdicts, opts)
}

fn verify_trees(nmax: usize, theorem: Option<TheoremId>, opts: &RunOpts) -> Result<(), Failure> {
    if theorem.is_some_and(|t| t != TheoremId::TTrees3) {
        return Err(Failure(
            Failure::INPUT,
            "--trees only checks T-trees-3".into(),
        ));
    }
    let survey =
        survey_chi3(nmax, &opts.lab()).map_err(|e| Failure::from_error(e, "tree survey"))?;
    if opts.output == Output::Human {
        eprintln!(
            "trees: {}; chi_L = 3 with |Aut| >= 2: {}; chi_D = chi_L = 3: {}; mismatches: {}",
            survey.records.len(),
            survey.claimed.len(),
            survey.observed.len(),
            survey.mismatches().len()
        );
    }
    finish(survey.verdicts, opts)
}

fn emit_census(nmax: usize, opts: &RunOpts) -> Result<(), Failure> {
    let records = census_chi3(nmax, &opts.lab()).map_err(|e| Failure::from_error(e, "census"))?;
    let text = match opts.output {
        Output::Records => render_records(&records),
        Output::Human => records.iter().map(|r| r.key.clone() + "\n").collect(),
    };
    emit(opts.out.as_ref(), &text)
}

/// Sorts, writes, warns about flagged verdicts and picks the exit code.
fn finish(mut verdicts: Vec<Verdict>, opts: &RunOpts) -> Result<(), Failure> {
    sort_verdicts(&mut verdicts);
    let text = match opts.output {
        Output::Records => render_records(&verdicts),
        Output::Human => verdict_table(&verdicts),
    };
    emit(opts.out.as_ref(), &text)?;
    for v in verdicts.iter().filter(|v| v.flag.is_some()) {
        let flag = match v.flag {
            Some(Flag::OpenQuestion) => "open-question",
            None => unreachable!(),
        };
        eprintln!(
            "warning: {} on {}: {:?} ({flag})",
            v.theorem_id, v.graph_key, v.status
        );
    }
    let failures = verdicts.iter().filter(|v| v.is_failure()).count();
    if failures > 0 {
        return Err(Failure(
            Failure::VIOLATION,
            format!("{failures} verdict(s) violated"),
        ));
    }
    Ok(())
}

fn verdict_table(verdicts: &[Verdict]) -> String {
    let mut out = String::new();
    if verdicts.is_empty() {
        return out;
    }
    let _ = writeln!(
        out,
        "{:<14} {:>6} {:>9} {:>13}",
        "theorem", "holds", "violated", "inapplicable"
    );
    for (id, [holds, violated, inapplicable]) in status_matrix(verdicts) {
        let _ = writeln!(
            out,
            "{:<14} {holds:>6} {violated:>9} {inapplicable:>13}",
            id.as_str()
        );
    }
    for v in verdicts.iter().filter(|v| v.status == Status::Violated) {
        let _ = writeln!(out, "violated: {} on {}", v.theorem_id, v.graph_key);
    }
    out
}

fn emit(out: Option<&PathBuf>, text: &str) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, text)
            .map_err(|e| Failure(Failure::INPUT, format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}
