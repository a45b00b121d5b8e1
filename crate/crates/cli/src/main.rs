//! `halin`: command-line front end for halin-core.
//!
//! Exit codes: 0 success or a true verdict, 1 a false verdict, 2 usage or
//! input error, 3 search timeout.

mod formats;

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use halin_core::absorb::{absorb, absorb_greedy, AbsorbInstance};
use halin_core::ladder::make_ladder;
use halin_core::ladder_finder::{find_spanning_ladders, Bipartition, Class, LadderRequest};
use halin_core::search::{find_spanning_halin, dirac_experiment, ExperimentConfig, SearchBudget, SearchOutcome};
use halin_core::templates::{admissible_attachments, build_template, parse_descriptor, TemplateKind};
use halin_core::verify::{check_halin_properties, verify_halin, Mode};
use halin_core::{Error, Graph, VertexSet};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use formats::{parse_document, parse_edge, parse_edge_pair, parse_ids, Document};

const EXIT_FALSE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_TIMEOUT: u8 = 3;

/// Overrides the default search node budget.
const BUDGET_ENV: &str = "HALIN_BUDGET";

#[derive(Parser)]
#[command(name = "halin", version, about = "Spanning Halin subgraphs, ladders and templates")]
struct Cli {
    /// Write the primary output here (atomically) instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the ladder L_N as an edge list plus its ladder certificate.
    GenLadder { n: usize },
    /// Print a template H1..H5 on L_N with its Halin certificate and marks.
    GenTemplate {
        /// H1 to H5.
        kind: String,
        n: usize,
        /// Attachment of z as "a,3" or "b,2"; defaults to the first admissible one.
        #[arg(long)]
        z: Option<String>,
    },
    /// Check the certificates in --cert (or in the graph file) against the graph.
    Verify {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        cert: Option<PathBuf>,
        /// Require the graph to be exactly tree plus cycle.
        #[arg(long)]
        exact: bool,
    },
    /// Swallow the target vertices into one ladder.
    Absorb {
        #[arg(long)]
        graph: PathBuf,
        /// Target vertex ids, space or comma separated.
        #[arg(long = "targets", visible_alias = "R")]
        targets: String,
        /// Skip the degree preconditions and try the greedy construction anyway.
        #[arg(long)]
        greedy: bool,
    },
    /// Spanning ladders with prescribed end rungs.
    FindLadder {
        #[arg(long)]
        graph: PathBuf,
        /// First rung "u v".
        #[arg(long)]
        first: String,
        /// Last rung "u v".
        #[arg(long)]
        last: String,
        /// Interior pair "a b / c d": one ladder ends with ab, the next starts with cd.
        #[arg(long)]
        force: Vec<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Exact search for a spanning Halin subgraph.
    FindHalin {
        #[arg(long)]
        graph: PathBuf,
        /// Backtracking node budget (default from HALIN_BUDGET, else built in).
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long, default_value_t = SearchBudget::default().max_vertices)]
        max_vertices: usize,
        /// Skip the 3-connectivity and triangle shortcuts.
        #[arg(long)]
        exhaustive: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Search every sampled graph with minimum degree at least (n+1)/2.
    Experiment {
        /// Orders as "5..10", "5..=10" or "7".
        #[arg(long, default_value = "5..10")]
        n: String,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        budget: Option<u64>,
        /// Also run K_{n/2,n/2}, which is expected to fail.
        #[arg(long)]
        probes: bool,
    },
    /// Brute-force hamiltonicity and cycle spectrum of a certified Halin graph.
    Properties {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        cert: Option<PathBuf>,
    },
}

/// A run that ends with a diagnostic on stderr.
struct Failure {
    code: u8,
    msg: String,
}

impl Failure {
    fn usage(msg: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            msg: msg.into(),
        }
    }
}

/// Stdout text plus exit code.
struct Report {
    text: String,
    code: u8,
}

impl Report {
    fn ok(text: String) -> Self {
        Report { text, code: 0 }
    }
}

type Run = Result<Report, Failure>;

fn read_doc(path: &Path) -> Result<Document, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
    parse_document(&text).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn read_graph(path: &Path) -> Result<(Graph, Document), Failure> {
    let mut doc = read_doc(path)?;
    let g = doc
        .graph
        .take()
        .ok_or_else(|| Failure::usage(format!("{}: no edge list", path.display())))?;
    Ok((g, doc))
}

/// Certificates come from `--cert` when given, else from the graph file.
fn cert_doc(graph_doc: Document, cert: Option<&Path>) -> Result<Document, Failure> {
    match cert {
        Some(p) => read_doc(p),
        None => Ok(graph_doc),
    }
}

fn input_error(e: Error) -> Failure {
    Failure::usage(e.to_string())
}

fn search_budget(flag: Option<u64>) -> Result<SearchBudget, Failure> {
    let env = match std::env::var(BUDGET_ENV) {
        Ok(s) => Some(
            s.trim()
                .parse::<u64>()
                .map_err(|_| Failure::usage(format!("{BUDGET_ENV} must be a node count, found {s:?}")))?,
        ),
        Err(_) => None,
    };
    let budget = SearchBudget::default();
    Ok(match flag.or(env) {
        Some(nodes) => budget.with_max_nodes(nodes),
        None => budget,
    })
}

fn gen_ladder(n: usize) -> Run {
    let (g, l) = make_ladder(n).map_err(input_error)?;
    let mut out = format!("# ladder L_{n}\n");
    formats::write_graph(&mut out, &g);
    formats::write_ladder(&mut out, &l);
    Ok(Report::ok(out))
}

fn gen_template(kind: &str, n: usize, z: Option<&str>) -> Run {
    let kind: TemplateKind = kind.parse().map_err(input_error)?;
    let at = match z {
        Some(z) => {
            let (_, _, at) = parse_descriptor(&format!("{kind} n={n} z={z}")).map_err(input_error)?;
            at
        }
        None => admissible_attachments(kind, n).first().copied(),
    };
    let t = build_template(kind, n, at).map_err(input_error)?;
    let mut out = String::new();
    formats::write_template(&mut out, kind, n, t.z_attach);
    formats::write_graph(&mut out, &t.host);
    formats::write_halin(&mut out, &t.certificate);
    formats::write_marks(&mut out, &t.marks);
    Ok(Report::ok(out))
}

fn verify(graph: &Path, cert: Option<&Path>, exact: bool) -> Run {
    let (g, doc) = read_graph(graph)?;
    let doc = cert_doc(doc, cert)?;
    if doc.halin.is_none() && doc.ladders.is_empty() {
        return Err(Failure::usage("no certificate to verify"));
    }
    let mode = if exact { Mode::Exact } else { Mode::Subgraph };
    let mut out = String::new();
    let mut ok = true;
    if let Some(c) = &doc.halin {
        match verify_halin(&g, c, mode) {
            Ok(()) => out.push_str("HALIN\n"),
            Err(f) => {
                ok = false;
                writeln!(out, "NOT-HALIN {f}").unwrap();
            }
        }
    }
    for (i, l) in doc.ladders.iter().enumerate() {
        if l.validate_in(&g) {
            writeln!(out, "LADDER {}", l.len()).unwrap();
        } else {
            ok = false;
            writeln!(out, "NOT-LADDER certificate {i} is not a ladder subgraph").unwrap();
        }
    }
    Ok(Report {
        text: out,
        code: if ok { 0 } else { EXIT_FALSE },
    })
}

fn run_absorb(graph: &Path, targets: &str, greedy: bool) -> Run {
    let (g, _) = read_graph(graph)?;
    let ids = parse_ids(targets).map_err(|e| Failure::usage(e.to_string()))?;
    let targets = VertexSet::within(&g, ids).map_err(input_error)?;
    let inst = AbsorbInstance::with_targets(g, targets).map_err(input_error)?;
    let result = if greedy { absorb_greedy(&inst) } else { absorb(&inst) };
    match result {
        Ok(a) => {
            let mut out = format!("# helpers used: {}\n", a.helpers_used());
            formats::write_ladder(&mut out, &a.ladder);
            Ok(Report::ok(out))
        }
        Err(Error::AbsorbPrecondition(v)) => Err(Failure {
            code: EXIT_FALSE,
            msg: format!("PRECONDITION {v}"),
        }),
        Err(Error::AbsorbExhausted) => Err(Failure {
            code: EXIT_FALSE,
            msg: "EXHAUSTED greedy choice found no free helper".into(),
        }),
        Err(e) => Err(input_error(e)),
    }
}

fn find_ladder(graph: &Path, first: &str, last: &str, force: &[String], seed: u64) -> Run {
    let (g, _) = read_graph(graph)?;
    let usage = |e: formats::ParseError| Failure::usage(e.to_string());
    let first = parse_edge(first).map_err(usage)?;
    let last = parse_edge(last).map_err(usage)?;
    let forced = force
        .iter()
        .map(|s| parse_edge_pair(s))
        .collect::<Result<Vec<_>, _>>()
        .map_err(usage)?;
    let parts = match Bipartition::from_coloring(&g) {
        Some(p) => p,
        None => {
            // Pin each named rung across the cut, first endpoint in U.
            let mut pins = Vec::new();
            for &(u, v) in [first, last].iter().chain(forced.iter().flat_map(|(c, o)| [c, o])) {
                pins.extend([(u, Class::U), (v, Class::V)]);
            }
            Bipartition::balanced_random(g.n(), &pins, &mut ChaCha8Rng::seed_from_u64(seed)).map_err(input_error)?
        }
    };
    let req = LadderRequest {
        base: g,
        parts,
        first_rung: first,
        last_rung: last,
        forced,
        seed,
    };
    match find_spanning_ladders(&req) {
        Ok(ls) => {
            let mut out = String::new();
            for l in &ls {
                formats::write_ladder(&mut out, l);
            }
            Ok(Report::ok(out))
        }
        Err(Error::NoPerfectMatching { deficient, neighbours }) => Err(Failure {
            code: EXIT_FALSE,
            msg: format!("NO-MATCHING vertices {deficient:?} have only {neighbours:?} as free neighbours"),
        }),
        Err(Error::NoHamiltonianPath) => Err(Failure {
            code: EXIT_FALSE,
            msg: "NO-LADDER auxiliary graph has no hamiltonian path between the end rungs".into(),
        }),
        Err(e) => Err(input_error(e)),
    }
}

fn find_halin(graph: &Path, budget: Option<u64>, max_vertices: usize, exhaustive: bool, seed: u64) -> Run {
    let (g, _) = read_graph(graph)?;
    let mut b = search_budget(budget)?.with_max_vertices(max_vertices);
    b.seed = seed;
    if exhaustive {
        b = b.exhaustive();
    }
    match find_spanning_halin(&g, &b).map_err(input_error)? {
        SearchOutcome::Found(c) => {
            let mut out = String::from("HALIN\n");
            formats::write_halin(&mut out, &c);
            Ok(Report::ok(out))
        }
        SearchOutcome::NoneExists => Ok(Report {
            text: "NONE\n".into(),
            code: EXIT_FALSE,
        }),
        SearchOutcome::Timeout => Ok(Report {
            text: format!("TIMEOUT after {} nodes\n", b.max_nodes),
            code: EXIT_TIMEOUT,
        }),
    }
}

fn parse_orders(s: &str) -> Result<std::ops::RangeInclusive<usize>, Failure> {
    let bad = || Failure::usage(format!("expected orders like 5..10, found {s:?}"));
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| bad());
    let range = match s.split_once("..") {
        Some((lo, hi)) => num(lo)?..=num(hi.strip_prefix('=').unwrap_or(hi))?,
        None => num(s)?..=num(s)?,
    };
    if range.is_empty() {
        return Err(bad());
    }
    Ok(range)
}

fn experiment(n: &str, samples: usize, seed: u64, budget: Option<u64>, probes: bool) -> Run {
    let mut b = search_budget(budget)?;
    b.seed = seed;
    let config = ExperimentConfig {
        orders: parse_orders(n)?,
        samples_per_n: samples,
        include_probes: probes,
        budget: b,
        ..ExperimentConfig::default()
    };
    let report = dirac_experiment(&config).map_err(input_error)?;
    let mut out = format!("# {:>3} {:>8} {:>8} {:>8} {:>8}\n", "n", "sampled", "ok", "fail", "timeout");
    for r in &report.rows {
        writeln!(
            out,
            "{:>5} {:>8} {:>8} {:>8} {:>8}",
            r.n, r.sampled, r.succeeded, r.failed, r.timed_out
        )
        .unwrap();
    }
    for w in &report.witnesses {
        writeln!(out, "# witness without a spanning Halin subgraph").unwrap();
        for line in graph_lines(w).lines() {
            writeln!(out, "# {line}").unwrap();
        }
    }
    Ok(Report::ok(out))
}

fn graph_lines(g: &Graph) -> String {
    let mut s = String::new();
    formats::write_graph(&mut s, g);
    s
}

fn properties(graph: &Path, cert: Option<&Path>) -> Run {
    let (g, doc) = read_graph(graph)?;
    let doc = cert_doc(doc, cert)?;
    let c = doc.halin.ok_or_else(|| Failure::usage("properties need a Halin certificate"))?;
    let r = match check_halin_properties(&g, &c) {
        Ok(r) => r,
        Err(Error::AssemblyFailed(msg)) => {
            return Err(Failure {
                code: EXIT_FALSE,
                msg,
            })
        }
        Err(e) => return Err(input_error(e)),
    };
    let mut out = String::new();
    writeln!(out, "hamiltonian {}", r.hamiltonian).unwrap();
    writeln!(out, "hamiltonian-connected {}", r.hamiltonian_connected).unwrap();
    writeln!(out, "almost-pancyclic {}", r.almost_pancyclic).unwrap();
    writeln!(out, "pancyclic {}", r.pancyclic).unwrap();
    writeln!(out, "tree-degree-3 {}", r.tree_has_degree3_vertex).unwrap();
    let missing: Vec<String> = r.missing_lengths.iter().map(|l| l.to_string()).collect();
    let missing = if missing.is_empty() { "none".to_string() } else { missing.join(" ") };
    writeln!(out, "missing-lengths {missing}").unwrap();
    let holds = r.hamiltonian && r.hamiltonian_connected && r.almost_pancyclic;
    Ok(Report {
        text: out,
        code: if holds { 0 } else { EXIT_FALSE },
    })
}

/// Writes via a temporary file in the target directory, then renames.
fn write_atomically(path: &Path, text: &str) -> std::io::Result<()> {
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(text.as_bytes())?;
    tmp.as_file().sync_all()?;
    tmp.persist(path).map_err(|e| e.error)?;
    Ok(())
}

fn dispatch(command: Command) -> Run {
    match command {
        Command::GenLadder { n } => gen_ladder(n),
        Command::GenTemplate { kind, n, z } => gen_template(&kind, n, z.as_deref()),
        Command::Verify { graph, cert, exact } => verify(&graph, cert.as_deref(), exact),
        Command::Absorb { graph, targets, greedy } => run_absorb(&graph, &targets, greedy),
        Command::FindLadder {
            graph,
            first,
            last,
            force,
            seed,
        } => find_ladder(&graph, &first, &last, &force, seed),
        Command::FindHalin {
            graph,
            budget,
            max_vertices,
            exhaustive,
            seed,
        } => find_halin(&graph, budget, max_vertices, exhaustive, seed),
        Command::Experiment {
            n,
            samples,
            seed,
            budget,
            probes,
        } => experiment(&n, samples, seed, budget, probes),
        Command::Properties { graph, cert } => properties(&graph, cert.as_deref()),
    }
}

fn main() -> ExitCode {
    // Clap exits with 2 on usage errors and 0 on --help.
    let cli = Cli::parse();
    match dispatch(cli.command) {
        Ok(report) => {
            let written = match &cli.out {
                Some(path) => write_atomically(path, &report.text),
                None => std::io::stdout().write_all(report.text.as_bytes()),
            };
            if let Err(e) = written {
                eprintln!("error: {e}");
                return ExitCode::from(EXIT_USAGE);
            }
            ExitCode::from(report.code)
        }
        Err(f) => {
            eprintln!("{}", f.msg);
            ExitCode::from(f.code)
        }
    }
}
