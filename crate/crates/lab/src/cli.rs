//! The `turan-lab` command line.
//!
//! Exit codes: 0 success, 1 property violated (pattern found, certificate
//! rejected), 2 precondition violated (bad input graph or parameters),
//! 64 usage, 66 file I/O.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::json;
use turan_core::bounds::{
    main_curve, trivial_triangle_upper, trivial_triangle_upper_for_order, zarankiewicz_bound,
    BoundKind,
};
use turan_core::constructions::{ConstructionSpec, SetSource};
use turan_core::freeness::{is_k1st_free, k1st_witness, PatternWitness};
use turan_core::graph::{ordered_delta, triangle_count};
use turan_core::search::BRUTE_FORCE_LIMIT;
use turan_core::{Graph, PatternParams};

use crate::document::{certificate_from_json, certificate_to_json, DocumentError, VerificationDoc};
use crate::input::{self, InputError};
use crate::table::{table_row, TableOptions, CSV_HEADER};
use crate::{graph6, parallel};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATED: i32 = 1;
pub const EXIT_PRECONDITION: i32 = 2;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_IO: i32 = 66;

#[derive(Debug, Parser)]
#[command(
    name = "turan-lab",
    version,
    about = "Triangles in K_{1,s,t}-free graphs"
)]
struct Cli {
    /// Worker threads (0 = one per core).
    #[arg(long, global = true, env = "TURAN_LAB_THREADS")]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args, Clone, Copy)]
struct Pattern {
    #[arg(long)]
    s: usize,
    #[arg(long)]
    t: usize,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Triangle and ordered-triangle counts.
    Count { graph: PathBuf },
    /// Checks K_{1,s,t}-freeness; exit 1 with a witness if a copy exists.
    Free {
        graph: PathBuf,
        #[command(flatten)]
        pattern: Pattern,
    },
    /// Writes a construction as graph6.
    #[command(subcommand)]
    Construct(Construct),
    /// Evaluates a closed-form bound.
    #[command(subcommand)]
    Bound(Bound),
    /// Builds and verifies a certificate for a free graph.
    Certify {
        graph: PathBuf,
        #[command(flatten)]
        pattern: Pattern,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Re-checks a certificate against a graph.
    Verify {
        graph: PathBuf,
        certificate: PathBuf,
    },
    /// Computes ex(n, K_3, K_{1,s,t}) or a lower bound for it.
    Search {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        pattern: Pattern,
        /// Node budget for the exact search.
        #[arg(long)]
        budget: Option<u64>,
        /// Exhaust all labelled graphs (n <= 7).
        #[arg(long, conflicts_with_all = ["budget", "heuristic"])]
        oracle: bool,
        /// Hill climbing instead of exact search.
        #[arg(long, requires = "seed")]
        heuristic: bool,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value_t = 100_000)]
        iters: u64,
    },
    /// One row per n, as JSON lines or CSV.
    Table {
        #[command(flatten)]
        pattern: Pattern,
        #[arg(long)]
        n_from: usize,
        #[arg(long)]
        n_to: usize,
        #[arg(long)]
        csv: bool,
        /// Fill the exact column.
        #[arg(long)]
        oracle: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 20_000)]
        iters: u64,
        /// Node budget for exact search above n = 7.
        #[arg(long, default_value_t = 100_000_000)]
        budget: u64,
    },
}

#[derive(Debug, Subcommand)]
enum Construct {
    /// Complete bipartite graph plus a matching in one part.
    BipartiteMatching {
        #[arg(long)]
        n: usize,
    },
    /// Tripartite graph on 6N vertices over a progression-free set.
    Rs {
        #[arg(long = "N")]
        big_n: usize,
        /// `behrend`, `greedy`, or a file of integers.
        #[arg(long, default_value = "behrend")]
        set: String,
    },
}

#[derive(Debug, Subcommand)]
enum Bound {
    /// Upper bound on z(m, n; s, t).
    Zarankiewicz {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        pattern: Pattern,
    },
    /// n^{3-1/s} (ln n)^{-1+1/s}.
    Curve {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        s: usize,
    },
    /// Per-vertex neighbourhood bound, for a graph or for order n.
    Trivial {
        #[arg(required_unless_present = "n", conflicts_with = "n")]
        graph: Option<PathBuf>,
        #[arg(long)]
        n: Option<usize>,
        #[command(flatten)]
        pattern: Pattern,
    },
}

#[derive(Debug)]
enum Failure {
    Violated,
    Precondition(String),
    Io(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Violated => EXIT_VIOLATED,
            Failure::Precondition(_) => EXIT_PRECONDITION,
            Failure::Io(_) => EXIT_IO,
        }
    }
}

impl From<InputError> for Failure {
    fn from(e: InputError) -> Self {
        match e {
            InputError::Io { .. } => Failure::Io(e.to_string()),
            _ => Failure::Precondition(e.to_string()),
        }
    }
}

impl From<turan_core::Error> for Failure {
    fn from(e: turan_core::Error) -> Self {
        Failure::Precondition(e.to_string())
    }
}

impl From<DocumentError> for Failure {
    fn from(e: DocumentError) -> Self {
        Failure::Precondition(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{text}")
            } else {
                write!(out, "{text}")
            };
            return code;
        }
    };
    let pool = match rayon::ThreadPoolBuilder::new()
        .num_threads(cli.threads.unwrap_or(0))
        .build()
    {
        Ok(pool) => pool,
        Err(e) => {
            let _ = writeln!(err, "error: cannot start worker threads: {e}");
            return EXIT_PRECONDITION;
        }
    };
    match dispatch(cli.command, &pool, out) {
        Ok(()) => EXIT_OK,
        Err(failure) => {
            match &failure {
                Failure::Violated => {}
                Failure::Precondition(msg) | Failure::Io(msg) => {
                    let _ = writeln!(err, "error: {msg}");
                }
            }
            failure.code()
        }
    }
}

fn params(p: Pattern) -> Result<PatternParams, Failure> {
    Ok(PatternParams::new(p.s, p.t)?)
}

fn emit(out: &mut dyn Write, value: &impl Serialize) -> Outcome {
    let line = serde_json::to_string(value).expect("output serialises");
    writeln!(out, "{line}").map_err(|e| Failure::Io(format!("cannot write output: {e}")))
}

fn witness_json(w: &PatternWitness) -> serde_json::Value {
    json!({ "apex": w.apex, "side_s": w.side_s.to_vec(), "side_t": w.side_t.to_vec() })
}

fn dispatch(command: Command, pool: &rayon::ThreadPool, out: &mut dyn Write) -> Outcome {
    match command {
        Command::Count { graph } => {
            let g = input::read_graph(&graph)?;
            let all = g.vertices();
            emit(
                out,
                &json!({
                    "n": g.n(),
                    "edges": g.edge_count(),
                    "triangles": triangle_count(&g),
                    "ordered_triangles": ordered_delta(&g, &all, &all, &all),
                }),
            )
        }
        Command::Free { graph, pattern } => {
            let p = params(pattern)?;
            let g = input::read_graph(&graph)?;
            match k1st_witness(&g, p) {
                None => emit(out, &json!({ "free": true, "s": p.s(), "t": p.t() })),
                Some(w) => {
                    emit(
                        out,
                        &json!({ "free": false, "s": p.s(), "t": p.t(), "witness": witness_json(&w) }),
                    )?;
                    Err(Failure::Violated)
                }
            }
        }
        Command::Construct(c) => {
            let spec = match c {
                Construct::BipartiteMatching { n } => ConstructionSpec::BipartiteMatching { n },
                Construct::Rs { big_n, set } => {
                    let source = match set.as_str() {
                        "behrend" => SetSource::Behrend,
                        "greedy" => SetSource::Greedy,
                        path => SetSource::Explicit(read_set(Path::new(path))?),
                    };
                    ConstructionSpec::RuzsaSzemeredi {
                        n: big_n,
                        set: source,
                    }
                }
            };
            let g = spec.build()?;
            writeln!(out, "{}", graph6::encode(&g)).map_err(|e| Failure::Io(e.to_string()))
        }
        Command::Bound(b) => bound(b, out),
        Command::Certify {
            graph,
            pattern,
            out: path,
        } => {
            let p = params(pattern)?;
            let g = input::read_graph(&graph)?;
            if let Some(w) = k1st_witness(&g, p) {
                return Err(Failure::Precondition(format!(
                    "input is not K_(1,{},{})-free: {}",
                    p.s(),
                    p.t(),
                    witness_json(&w)
                )));
            }
            let (cert, report) = pool.install(|| -> Result<_, turan_core::Error> {
                let cert = parallel::certify(&g, p)?;
                let report = parallel::verify(&g, &cert)?;
                Ok((cert, report))
            })?;
            if let Some(path) = path {
                std::fs::write(&path, certificate_to_json(&cert) + "\n")
                    .map_err(|e| Failure::Io(format!("cannot write {}: {e}", path.display())))?;
            }
            emit(
                out,
                &json!({
                    "n": cert.n,
                    "s": p.s(),
                    "t": p.t(),
                    "blocks": cert.parts.len(),
                    "bound": cert.final_bound,
                    "actual": cert.actual,
                    "valid": report.is_valid(),
                }),
            )?;
            if report.is_valid() {
                Ok(())
            } else {
                emit(out, &VerificationDoc::from(&report))?;
                Err(Failure::Violated)
            }
        }
        Command::Verify { graph, certificate } => {
            let g = input::read_graph(&graph)?;
            let text = input::read_text(&certificate)?;
            let cert = certificate_from_json(&text)?;
            let report = pool.install(|| parallel::verify(&g, &cert))?;
            emit(out, &VerificationDoc::from(&report))?;
            if report.is_valid() {
                Ok(())
            } else {
                Err(Failure::Violated)
            }
        }
        Command::Search {
            n,
            pattern,
            budget,
            oracle,
            heuristic,
            seed,
            iters,
        } => {
            let p = params(pattern)?;
            let result = if oracle {
                if n > BRUTE_FORCE_LIMIT {
                    return Err(Failure::Precondition(format!(
                        "--oracle enumerates all labelled graphs and needs n <= {BRUTE_FORCE_LIMIT}"
                    )));
                }
                parallel::timed_brute_force(n, p)?
            } else if heuristic {
                parallel::timed_heuristic(n, p, seed.expect("clap enforces --seed"), iters, None)?
            } else {
                pool.install(|| parallel::timed_exact(n, p, budget))?
            };
            emit(out, &result)
        }
        Command::Table {
            pattern,
            n_from,
            n_to,
            csv,
            oracle,
            seed,
            iters,
            budget,
        } => {
            let p = params(pattern)?;
            if n_from > n_to {
                return Err(Failure::Precondition(format!(
                    "empty range {n_from}..={n_to}"
                )));
            }
            let opts = TableOptions {
                seed,
                iters,
                oracle,
                budget: Some(budget),
            };
            if csv {
                writeln!(out, "{CSV_HEADER}").map_err(|e| Failure::Io(e.to_string()))?;
            }
            for n in n_from..=n_to {
                let row = pool.install(|| table_row(n, p, &opts))?;
                if csv {
                    writeln!(out, "{}", row.to_csv()).map_err(|e| Failure::Io(e.to_string()))?;
                } else {
                    emit(out, &row)?;
                }
            }
            Ok(())
        }
    }
}

fn bound(b: Bound, out: &mut dyn Write) -> Outcome {
    match b {
        Bound::Zarankiewicz { m, n, pattern } => {
            let v = zarankiewicz_bound(m, n, params(pattern)?);
            emit(
                out,
                &json!({ "bound": "zarankiewicz", "m": m, "n": n, "s": pattern.s, "t": pattern.t, "value": v.value }),
            )
        }
        Bound::Curve { n, s } => {
            let v = main_curve(n, s)?;
            emit(
                out,
                &json!({ "bound": "curve", "n": n, "s": s, "value": v.value }),
            )
        }
        Bound::Trivial { graph, n, pattern } => {
            let p = params(pattern)?;
            let v = match (graph, n) {
                (Some(path), _) => {
                    let g: Graph = input::read_graph(&path)?;
                    if !is_k1st_free(&g, p) {
                        return Err(Failure::Precondition(
                            "the trivial bound needs a K_(1,s,t)-free graph".into(),
                        ));
                    }
                    trivial_triangle_upper(&g, p)
                }
                (None, Some(n)) => trivial_triangle_upper_for_order(n, p),
                (None, None) => unreachable!("clap requires a graph or --n"),
            };
            let order = match v.kind {
                BoundKind::TrivialTriangle { n, .. } => n,
                _ => unreachable!("trivial bounds carry their order"),
            };
            emit(
                out,
                &json!({ "bound": "trivial", "n": order, "s": p.s(), "t": p.t(), "value": v.value }),
            )
        }
    }
}

/// Integers separated by whitespace or commas; `#` starts a comment.
fn read_set(path: &Path) -> Result<Vec<usize>, Failure> {
    let text = input::read_text(path)?;
    let mut members = Vec::new();
    for (index, line) in text.lines().enumerate() {
        let body = line.split('#').next().unwrap_or("");
        for token in body
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|s| !s.is_empty())
        {
            let value = token.parse().map_err(|_| {
                Failure::Precondition(format!(
                    "{} line {}: bad integer {token:?}",
                    path.display(),
                    index + 1
                ))
            })?;
            members.push(value);
        }
    }
    Ok(members)
}
