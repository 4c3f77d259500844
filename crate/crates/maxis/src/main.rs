//! Command-line surface: construct, count, classify, transform, verify,
//! table. Graphs travel as one graph6 line each on stdin/stdout; logs and
//! diagnostics go to stderr.

use std::fs::File;
use std::io::{self, BufRead, BufReader, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use maxis::constructions::{constructor, ConstructRequest};
use maxis::counting::{count_mis, count_mis_per_vertex, enumerate_mis};
use maxis::error::{Error, Result};
use maxis::graph::Graph;
use maxis::iso::classify_extremal;
use maxis::transform::transform;
use maxis::verify::{
    check, clean_graph6_line, reports_csv, table_csv, table_json, table_rows, CheckOutcome,
    CheckRequest,
};

#[derive(Parser)]
#[command(
    name = "maxis",
    version,
    about = "Exact maximum-independent-set counts, extremal constructions, and exhaustive verification on small graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Emit an extremal construction as graph6 lines
    Construct {
        /// Construction kind: G, F, family, or clique-star
        #[arg(long)]
        kind: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        alpha: Option<usize>,
        /// Clique orders for clique-star, e.g. --sizes 3,2,2
        #[arg(long, value_delimiter = ',')]
        sizes: Option<Vec<usize>>,
    },
    /// Count maximum independent sets of each input graph
    Count {
        /// Also print per-vertex membership counts
        #[arg(long)]
        per_vertex: bool,
        /// Also list every maximum independent set
        #[arg(long)]
        enumerate: bool,
        /// Read graph6 lines from a file instead of stdin
        #[arg(long)]
        input: Option<PathBuf>,
        /// Skip malformed lines instead of aborting
        #[arg(long)]
        skip_malformed: bool,
    },
    /// Match each input graph against the extremal constructions for (n, alpha)
    Classify {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        alpha: usize,
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long)]
        skip_malformed: bool,
    },
    /// Apply a registered transformation to each input graph
    Transform {
        /// Transformation name: twin-saturate or reduce-edges
        name: String,
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long)]
        skip_malformed: bool,
    },
    /// Run a registered verification check; exit 0 iff it passes
    Verify {
        /// Check name: theorem1, theorem2, or lemma3
        name: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        alpha: Option<usize>,
        /// graph6 catalog replacing the internal generator
        #[arg(long)]
        input: Option<PathBuf>,
        /// Worker count (default: MAXIS_JOBS or all cores)
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
        format: OutputFormat,
        #[arg(long)]
        skip_malformed: bool,
    },
    /// Closed-form table of g(n,alpha), f(n,alpha), and family sizes
    Table {
        #[arg(long)]
        max_n: usize,
        #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
        format: OutputFormat,
    },
}

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::Graph6Empty
        | Error::Graph6Length { .. }
        | Error::Graph6Byte { .. }
        | Error::Graph6Order(_)
        | Error::Ingest { .. }
        | Error::WrongOrder { .. } => 3,
        Error::MissingFlag { .. } | Error::ConflictingFlag { .. } | Error::UnknownName { .. } => 5,
        Error::Io(_) => 6,
        _ => 4,
    }
}

fn input_reader(input: &Option<PathBuf>) -> Result<Box<dyn BufRead>> {
    Ok(match input {
        Some(path) => Box::new(BufReader::new(File::open(path)?)),
        None => Box::new(BufReader::new(io::stdin())),
    })
}

/// Stream graph6 lines from stdin or a file, line by line.
fn for_each_input_graph(
    input: &Option<PathBuf>,
    skip_malformed: bool,
    mut f: impl FnMut(usize, Graph) -> Result<()>,
) -> Result<()> {
    let reader = input_reader(input)?;
    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let Some(clean) = clean_graph6_line(&line) else {
            continue;
        };
        match Graph::from_graph6(clean) {
            Ok(g) => f(idx + 1, g)?,
            Err(e) if skip_malformed => eprintln!("maxis: skipping line {}: {e}", idx + 1),
            Err(e) => {
                return Err(Error::Ingest {
                    line: idx + 1,
                    source: Box::new(e),
                })
            }
        }
    }
    Ok(())
}

fn default_jobs(flag: Option<usize>) -> Option<usize> {
    flag.or_else(|| {
        std::env::var("MAXIS_JOBS")
            .ok()
            .and_then(|v| v.parse().ok())
    })
}

fn run(cli: Cli) -> Result<u8> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match cli.command {
        Command::Construct {
            kind,
            n,
            alpha,
            sizes,
        } => {
            let req = ConstructRequest { n, alpha, sizes };
            for g in constructor(&kind)?.build(&req)? {
                writeln!(out, "{}", g.to_graph6())?;
            }
            Ok(0)
        }
        Command::Count {
            per_vertex,
            enumerate,
            input,
            skip_malformed,
        } => {
            for_each_input_graph(&input, skip_malformed, |_, g| {
                let r = if per_vertex {
                    count_mis_per_vertex(&g)
                } else {
                    count_mis(&g)
                };
                write!(out, "{} {} {}", g.order(), r.alpha, r.num_mis)?;
                if let Some(pv) = &r.per_vertex {
                    for c in pv {
                        write!(out, " {c}")?;
                    }
                }
                writeln!(out)?;
                if enumerate {
                    for set in enumerate_mis(&g)? {
                        let items: Vec<String> = set.iter().map(|v| v.to_string()).collect();
                        writeln!(out, "  {}", items.join(" "))?;
                    }
                }
                Ok(())
            })?;
            Ok(0)
        }
        Command::Classify {
            n,
            alpha,
            input,
            skip_malformed,
        } => {
            for_each_input_graph(&input, skip_malformed, |lineno, g| {
                match classify_extremal(&g, n, alpha) {
                    Ok(d) => {
                        let cuts = if d.special_cutvertices.is_empty() {
                            "-".to_string()
                        } else {
                            d.special_cutvertices
                                .iter()
                                .map(|v| v.to_string())
                                .collect::<Vec<_>>()
                                .join(",")
                        };
                        writeln!(out, "{}\t{}", d.kind, cuts)?;
                        Ok(())
                    }
                    Err(e @ (Error::AlphaMismatch { .. } | Error::OrderMismatch { .. })) => {
                        Err(Error::Ingest {
                            line: lineno,
                            source: Box::new(e),
                        })
                    }
                    Err(e) => Err(e),
                }
            })?;
            Ok(0)
        }
        Command::Transform {
            name,
            input,
            skip_malformed,
        } => {
            let t = transform(&name)?;
            for_each_input_graph(&input, skip_malformed, |lineno, g| {
                let run = t.apply(&g)?;
                for (i, (step_graph, log)) in run.steps.iter().enumerate() {
                    eprintln!("graph {lineno} step {}\t{log}", i + 1);
                    writeln!(out, "{}", step_graph.to_graph6())?;
                }
                if run.steps.is_empty() {
                    writeln!(out, "{}", run.final_graph.to_graph6())?;
                }
                Ok(())
            })?;
            Ok(0)
        }
        Command::Verify {
            name,
            n,
            alpha,
            input,
            jobs,
            format,
            skip_malformed,
        } => {
            let req = CheckRequest {
                n,
                alpha,
                input,
                jobs: default_jobs(jobs),
                skip_malformed,
            };
            let checker = check(&name)?;
            let outcome = checker.run(&req)?;
            match &outcome {
                CheckOutcome::Strata(reports, diagnostics) => {
                    match format {
                        OutputFormat::Json => writeln!(out, "{}", outcome.to_json())?,
                        OutputFormat::Csv => write!(out, "{}", reports_csv(reports)?)?,
                    }
                    for line in &diagnostics.skipped_lines {
                        eprintln!("maxis: skipped malformed line {line}");
                    }
                    if let Some(r) = reports.first() {
                        let examined: u64 = reports.iter().map(|r| r.graphs_examined).sum();
                        eprintln!(
                            "maxis: {name} n={n}: {examined} graphs in strata, {:.3}s",
                            r.elapsed.as_secs_f64()
                        );
                    }
                }
                CheckOutcome::Lemma(report) => {
                    if format == OutputFormat::Csv {
                        return Err(Error::ConflictingFlag {
                            flag: "--format csv",
                            context: "verify lemma3 (JSON only)",
                        });
                    }
                    writeln!(out, "{}", outcome.to_json())?;
                    eprintln!(
                        "maxis: {name} n={n}: {} graphs, {:.3}s",
                        report.graphs_examined,
                        report.elapsed.as_secs_f64()
                    );
                }
            }
            Ok(if outcome.pass() { 0 } else { 1 })
        }
        Command::Table { max_n, format } => {
            let rows = table_rows(max_n)?;
            match format {
                OutputFormat::Csv => write!(out, "{}", table_csv(&rows))?,
                OutputFormat::Json => writeln!(out, "{}", table_json(&rows))?,
            }
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("maxis: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}
