use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use distideal::error::{Error, Result};
use distideal::graph::{
    emit_graph6, parse_graph_file, Atlas, Graph, ATLAS_NAMES, LAMBDA1_FAMILY, LAMBDA1_REAL_FAMILY,
};
use distideal::harness::{Harness, LemmaReport, Outcome};
use distideal::ideals::{phi_over_rationals, phi_trivial_count, verdict_record, Decision, IdealOptions};
use distideal::linalg::snf;
use distideal::scan::{enumerate_connected_graphs, scan_family, scan_report, ScanStatus};

/// Exit status for completed runs with at least one failed check.
const EXIT_FAILED: u8 = 1;
/// Exit status for invalid input (clap uses the same code for bad usage).
const EXIT_INPUT: u8 = 2;
/// Exit status when nothing failed but some result stayed inconclusive.
const EXIT_INCONCLUSIVE: u8 = 3;

#[derive(Parser)]
#[command(name = "distideal")]
#[command(about = "Distance ideals of graphs: Smith normal forms, trivial ideal counts and forbidden subgraphs")]
#[command(version)]
struct Cli {
    /// Worker threads (defaults to the number of cores)
    #[arg(long, global = true)]
    jobs: Option<usize>,

    /// Also write the full report as JSON to this path
    #[arg(long, global = true)]
    json: Option<PathBuf>,

    /// Seed for the random evaluation points of the triviality test
    #[arg(long, global = true)]
    seed: Option<u64>,

    #[command(subcommand)]
    command: Commands,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    /// The sixteen forbidden graphs (with the trivial-ideal ladder)
    #[value(name = "F")]
    Forbidden,
    /// P4, paw, diamond
    #[value(name = "lambda1")]
    Lambda1,
    /// P4, paw, diamond, C4
    #[value(name = "lambda1R")]
    Lambda1Real,
}

#[derive(Subcommand)]
enum Commands {
    /// Smith normal form of the distance matrix of each graph
    Snf { file: PathBuf },
    /// Number of trivial distance ideals of each graph
    Phi {
        file: PathBuf,
        /// Work over the rationals instead of the integers
        #[arg(long)]
        rational: bool,
    },
    /// Triviality verdict for the i-th distance ideal of each graph
    Ideal {
        file: PathBuf,
        #[arg(long = "i")]
        i: usize,
    },
    /// Induced forbidden subgraphs and odd holes of each graph
    Scan {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "F")]
        family: Family,
    },
    /// All connected graphs on n vertices, one graph6 line each
    Enumerate {
        #[arg(long)]
        n: usize,
    },
    /// Re-run the verification routines of the classification
    VerifyPaper {
        /// Run a single routine (diameter2, bull, G65, 5pan, G67, G69, cotwinhouse, G612, G615, odd-holes)
        #[arg(long)]
        lemma: Option<String>,
        /// Pair-reduction budget for each Gröbner completion
        #[arg(long)]
        budget: Option<u64>,
    },
    /// The graph catalogue
    Atlas {
        /// Print graph6 lines only
        #[arg(long)]
        emit_graph6: bool,
    },
}

/// `println!` that ends the process quietly when stdout is closed early
/// (for example when piped into `head`).
macro_rules! out {
    ($($arg:tt)*) => {{
        use std::io::Write;
        if let Err(e) = writeln!(std::io::stdout().lock(), $($arg)*) {
            if e.kind() == std::io::ErrorKind::BrokenPipe {
                std::process::exit(0);
            }
            return Err(Error::Io(e.to_string()));
        }
    }};
}

fn read_graphs(path: &Path) -> Result<Vec<Graph>> {
    let text = fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_graph_file(&text)
}

fn write_json(path: Option<&PathBuf>, value: &impl Serialize) -> Result<()> {
    if let Some(path) = path {
        let text = serde_json::to_string_pretty(value).map_err(|e| Error::Io(e.to_string()))?;
        fs::write(path, text + "\n").map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    }
    Ok(())
}

fn factors(g: &Graph) -> Result<Vec<String>> {
    let d = g.distance_matrix()?;
    let mut diag: Vec<String> = snf(&d, false).invariant_factors.iter().map(|f| f.to_string()).collect();
    diag.resize(g.n(), "0".into());
    Ok(diag)
}

/// Runs `f` on every graph, printing errors and collecting JSON entries.
/// Returns the entries and whether any graph was rejected.
fn per_graph(graphs: &[Graph], mut f: impl FnMut(&Graph, &str) -> Result<Value>) -> Result<(Vec<Value>, bool)> {
    let mut out = Vec::new();
    let mut rejected = false;
    for g in graphs {
        let id = emit_graph6(g)?;
        match f(g, &id) {
            Ok(v) => out.push(v),
            Err(e) => {
                eprintln!("{id}: {e}");
                out.push(json!({ "graph": id, "error": e.to_string() }));
                rejected = true;
            }
        }
    }
    Ok((out, rejected))
}

fn print_lemma(r: &LemmaReport) -> Result<()> {
    let status = if r.passed { "PASS" } else if r.failures().next().is_some() { "FAIL" } else { "INCONCLUSIVE" };
    out!("{status:<12} {:<12} {} checks, {:.0} ms", r.lemma, r.checks.len(), r.elapsed_ms);
    for c in r.checks.iter().filter(|c| c.outcome != Outcome::Pass) {
        out!("    {:?}: {}\n        expected {}\n        computed {}", c.outcome, c.description, c.expected, c.computed);
    }
    Ok(())
}

fn run(cli: Cli) -> Result<u8> {
    let mut opts = IdealOptions::default();
    if let Some(seed) = cli.seed {
        opts.seed = seed;
    }
    let json_path = cli.json.as_ref();
    match cli.command {
        Commands::Snf { file } => {
            let graphs = read_graphs(&file)?;
            let (entries, rejected) = per_graph(&graphs, |g, id| {
                let diag = factors(g)?;
                let phi = diag.iter().filter(|f| *f == "1").count();
                out!("{id}\t[{}]\tφ={phi}", diag.join(", "));
                Ok(json!({ "graph": id, "invariant_factors": diag, "phi_snf": phi }))
            })?;
            write_json(json_path, &entries)?;
            Ok(if rejected { EXIT_INPUT } else { 0 })
        }
        Commands::Phi { file, rational } => {
            let graphs = read_graphs(&file)?;
            let mut inconclusive = false;
            let (entries, rejected) = per_graph(&graphs, |g, id| {
                let r = if rational { phi_over_rationals(g, &opts)? } else { phi_trivial_count(g, &opts)? };
                inconclusive |= !r.complete;
                let shown = r.value().map_or(format!("≥ {}", r.phi_ideals), |v| v.to_string());
                out!("{id}\tΦ={shown}\tφ={}\t{}", r.phi_snf, r.status());
                let mut v = serde_json::to_value(&r).map_err(|e| Error::Io(e.to_string()))?;
                v["graph"] = json!(id);
                Ok(v)
            })?;
            write_json(json_path, &entries)?;
            Ok(if rejected { EXIT_INPUT } else if inconclusive { EXIT_INCONCLUSIVE } else { 0 })
        }
        Commands::Ideal { file, i } => {
            let graphs = read_graphs(&file)?;
            let mut inconclusive = false;
            let (entries, rejected) = per_graph(&graphs, |g, id| {
                let rec = verdict_record(g, i, &opts)?;
                inconclusive |= rec.decision == Decision::Inconclusive;
                out!("{id}\tI_{i}\t{:?}\t{}\t{}", rec.decision, rec.certificate_kind, rec.certificate_data);
                serde_json::to_value(&rec).map_err(|e| Error::Io(e.to_string()))
            })?;
            write_json(json_path, &entries)?;
            Ok(if rejected { EXIT_INPUT } else if inconclusive { EXIT_INCONCLUSIVE } else { 0 })
        }
        Commands::Scan { file, family } => {
            let graphs = read_graphs(&file)?;
            let atlas = Atlas::standard();
            let mut reports = Vec::new();
            let mut rejected = false;
            for g in &graphs {
                let report = match family {
                    Family::Forbidden => scan_report(g, &atlas, &opts),
                    Family::Lambda1 => scan_family(g, &atlas, &LAMBDA1_FAMILY),
                    Family::Lambda1Real => scan_family(g, &atlas, &LAMBDA1_REAL_FAMILY),
                };
                match report {
                    Ok(r) => {
                        out!("{}", serde_json::to_string(&r).map_err(|e| Error::Io(e.to_string()))?);
                        reports.push(r);
                    }
                    Err(e) => {
                        eprintln!("{}: {e}", emit_graph6(g)?);
                        rejected = true;
                    }
                }
            }
            let inconsistent: Vec<&str> =
                reports.iter().filter(|r| !r.is_consistent()).map(|r| r.graph.as_str()).collect();
            let inconclusive: Vec<&str> =
                reports.iter().filter(|r| r.status == ScanStatus::Inconclusive).map(|r| r.graph.as_str()).collect();
            let summary = json!({
                "graphs": reports.len(),
                "obstructed": reports.iter().filter(|r| r.has_obstruction()).count(),
                "inconsistent": inconsistent,
                "inconclusive": inconclusive,
            });
            out!("{summary}");
            write_json(json_path, &json!({ "reports": reports, "summary": summary }))?;
            Ok(if rejected {
                EXIT_INPUT
            } else if !inconsistent.is_empty() {
                EXIT_FAILED
            } else if !inconclusive.is_empty() {
                EXIT_INCONCLUSIVE
            } else {
                0
            })
        }
        Commands::Enumerate { n } => {
            let graphs = enumerate_connected_graphs(n)?;
            let ids = graphs.iter().map(emit_graph6).collect::<Result<Vec<_>>>()?;
            for id in &ids {
                out!("{id}");
            }
            write_json(json_path, &json!({ "n": n, "count": ids.len(), "graphs": ids }))?;
            Ok(0)
        }
        Commands::VerifyPaper { lemma, budget } => {
            let mut h = Harness { opts, ..Harness::default() };
            if let Some(b) = budget {
                h.opts.budget = b;
            }
            if let Some(id) = lemma {
                let r = h.lemma(&id)?;
                print_lemma(&r)?;
                write_json(json_path, &r)?;
                return Ok(if r.passed {
                    0
                } else if r.failures().next().is_some() {
                    EXIT_FAILED
                } else {
                    EXIT_INCONCLUSIVE
                });
            }
            let report = h.run_all()?;
            for r in &report.lemmas {
                print_lemma(r)?;
            }
            let s = &report.theorem.summary;
            out!(
                "theorem      {} graphs (n ≤ {} plus {}), {} obstructed, {} violations, {} inconclusive",
                s.graphs,
                report.theorem.order,
                report.theorem.extra_graphs.join(" "),
                s.obstructed,
                s.violations.len(),
                s.inconclusive.len()
            );
            out!(
                "{}: {} failed checks, {} inconclusive checks",
                if report.passed { "PASS" } else { "FAIL" },
                report.failed_checks,
                report.inconclusive_checks
            );
            write_json(json_path, &report)?;
            Ok(if report.has_failures() {
                EXIT_FAILED
            } else if !report.passed {
                EXIT_INCONCLUSIVE
            } else {
                0
            })
        }
        Commands::Atlas { emit_graph6: only_graph6 } => {
            let atlas = Atlas::standard();
            let mut entries = Vec::new();
            for name in ATLAS_NAMES {
                let g = atlas.get(name)?;
                let id = emit_graph6(g)?;
                if only_graph6 {
                    out!("{id}");
                } else {
                    out!("{name:<14} n={} m={:<3} {id}", g.n(), g.edge_count());
                }
                entries.push(json!({ "name": name, "n": g.n(), "edges": g.edges(), "graph6": id }));
            }
            write_json(json_path, &entries)?;
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_INPUT);
        }
    }
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}
