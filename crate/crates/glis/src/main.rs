//! Command-line front end. Decision subcommands print `YES`/`NO` on the
//! first line followed by labeled witness blocks; exit codes are 0 for
//! yes/success, 1 for a no answer, 2 for usage or parse errors, and 3 when
//! an instance exceeds the exact-mode cap.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use glis::error::Error;
use glis::fileio;
use glis::generate;
use glis::graph::{ColoredGraph, Layout};
use glis::interval;
use glis::layout::{self, CvsResult};
use glis::oracle;

const EXIT_OK: u8 = 0;
const EXIT_NO: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_TOO_LARGE: u8 = 3;

#[derive(Parser)]
#[command(
    name = "glis",
    version,
    about = "Exact graph layout and interval sandwich solvers with checkable certificates"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Minimum vertex separation, a witness layout, and derived metrics
    Vs { graph: PathBuf },
    /// Does the graph admit a colored layout?
    Cvs { graph: PathBuf },
    /// Can the graph be extended to a properly colored interval graph?
    Icg {
        graph: PathBuf,
        /// Also write the certificate's interval model to this file
        #[arg(short, long, value_name = "MODEL")]
        output: Option<PathBuf>,
    },
    /// Interval model of a colored layout
    ToIntervals { graph: PathBuf, layout: PathBuf },
    /// Layout read off an interval model by increasing left endpoint
    ToLayout { model: PathBuf },
    /// Check an interval model as a certificate for a graph
    Verify { graph: PathBuf, model: PathBuf },
    /// Path decomposition induced by a layout
    Pathdecomp { graph: PathBuf, layout: PathBuf },
    /// Generate a guaranteed yes-instance (graph to stdout)
    GenYes {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
        /// Probability that each interval-graph edge is kept
        #[arg(long, default_value_t = 1.0)]
        keep_prob: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Generate a uniform random instance (graph to stdout)
    GenRand {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
        /// Edge probability
        #[arg(long, default_value_t = 0.5)]
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Force pairwise distinct colors (raises k to n if needed)
        #[arg(long)]
        distinct_colors: bool,
    },
    /// Brute-force reference answers (small instances only)
    Oracle {
        #[command(subcommand)]
        which: OracleCommand,
    },
}

#[derive(Subcommand)]
enum OracleCommand {
    /// Minimum vertex separation by layout enumeration
    Vs { graph: PathBuf },
    /// First colored layout in lexicographic order, if any
    Cvs { graph: PathBuf },
    /// Sandwich answer by trying every addable edge subset
    Icg { graph: PathBuf },
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::TooLarge { .. } => ExitCode::from(EXIT_TOO_LARGE),
                _ => ExitCode::from(EXIT_USAGE),
            }
        }
    }
}

fn read_file(path: &Path) -> Result<String, Error> {
    std::fs::read_to_string(path).map_err(|e| Error::Parse {
        line: 0,
        message: format!("{}: {e}", path.display()),
    })
}

fn load_graph(path: &Path) -> Result<ColoredGraph, Error> {
    fileio::parse_graph(&read_file(path)?)
}

fn load_layout(path: &Path) -> Result<Layout, Error> {
    fileio::parse_layout(&read_file(path)?)
}

fn layout_line(l: &Layout) -> String {
    let ids: Vec<String> = l.order().iter().map(|v| v.to_string()).collect();
    if ids.is_empty() { "layout".into() } else { format!("layout {}", ids.join(" ")) }
}

fn run(cli: Cli) -> Result<u8, Error> {
    match cli.command {
        Command::Vs { graph } => {
            let g = load_graph(&graph)?;
            let (vs, witness) = layout::exact_vs(&g)?;
            let m = layout::derived_metrics(vs);
            println!("vs {vs}");
            println!("{}", layout_line(&witness));
            println!("pathwidth {}", m.pathwidth);
            println!("node-search-number {}", m.node_search_number);
            println!("gate-matrix-cost {}", m.gate_matrix_cost);
            Ok(EXIT_OK)
        }
        Command::Cvs { graph } => {
            let g = load_graph(&graph)?;
            match layout::solve_cvs(&g)? {
                CvsResult::Yes { witness } => {
                    println!("YES");
                    println!("{}", layout_line(&witness));
                    Ok(EXIT_OK)
                }
                CvsResult::No { reason } => {
                    println!("NO");
                    println!("reason {}", reason.as_str());
                    Ok(EXIT_NO)
                }
            }
        }
        Command::Icg { graph, output } => {
            let g = load_graph(&graph)?;
            match interval::solve_icg(&g)? {
                Some(cert) => {
                    println!("YES");
                    println!("added-edges {}", cert.added_edges.len());
                    for (u, v) in &cert.added_edges {
                        println!("a {u} {v}");
                    }
                    let model_text = fileio::serialize_model(&cert.model);
                    print!("{model_text}");
                    if let Some(path) = output {
                        std::fs::write(&path, model_text).map_err(|e| Error::Parse {
                            line: 0,
                            message: format!("{}: {e}", path.display()),
                        })?;
                    }
                    Ok(EXIT_OK)
                }
                None => {
                    println!("NO");
                    Ok(EXIT_NO)
                }
            }
        }
        Command::ToIntervals { graph, layout } => {
            let g = load_graph(&graph)?;
            let l = load_layout(&layout)?;
            let model = interval::layout_to_intervals(&g, &l)?;
            print!("{}", fileio::serialize_model(&model));
            Ok(EXIT_OK)
        }
        Command::ToLayout { model } => {
            let m = fileio::parse_model(&read_file(&model)?)?;
            print!("{}", fileio::serialize_layout(&interval::intervals_to_layout(&m)));
            Ok(EXIT_OK)
        }
        Command::Verify { graph, model } => {
            let g = load_graph(&graph)?;
            let m = fileio::parse_model(&read_file(&model)?)?;
            let input_edges: std::collections::BTreeSet<(u32, u32)> =
                g.edges().into_iter().collect();
            let added_edges: Vec<(u32, u32)> = interval::model_to_graph(&m)
                .into_iter()
                .filter(|e| !input_edges.contains(e))
                .collect();
            let cert = interval::IcgCertificate { added_edges, model: m };
            let report = interval::verify_certificate(&g, &cert)?;
            let pf = |b: bool| if b { "PASS" } else { "FAIL" };
            println!("check edge-coverage {}", pf(report.covers_input_edges));
            println!("check overlap-equals-union {}", pf(report.overlap_matches_union));
            println!("check proper-coloring {}", pf(report.properly_colored));
            println!("check model-invariants {}", pf(report.model_invariants));
            if report.valid() {
                println!("VALID");
                Ok(EXIT_OK)
            } else {
                println!("INVALID");
                Ok(EXIT_NO)
            }
        }
        Command::Pathdecomp { graph, layout } => {
            let g = load_graph(&graph)?;
            let l = load_layout(&layout)?;
            let pd = layout::layout_to_path_decomposition(&g, &l)?;
            println!("bags {}", pd.bags().len());
            for bag in pd.bags() {
                let ids: Vec<String> = bag.iter().map(|v| v.to_string()).collect();
                if ids.is_empty() {
                    println!("b");
                } else {
                    println!("b {}", ids.join(" "));
                }
            }
            println!("width {}", pd.width());
            Ok(EXIT_OK)
        }
        Command::GenYes { n, k, keep_prob, seed } => {
            let out = generate::gen_yes_instance(n, k, keep_prob, seed);
            for w in &out.warnings {
                eprintln!("warning: {w}");
            }
            print!("{}", fileio::serialize_graph(&out.graph));
            Ok(EXIT_OK)
        }
        Command::GenRand { n, k, p, seed, distinct_colors } => {
            let out = generate::gen_random(n, k, p, seed, distinct_colors);
            for w in &out.warnings {
                eprintln!("warning: {w}");
            }
            print!("{}", fileio::serialize_graph(&out.graph));
            Ok(EXIT_OK)
        }
        Command::Oracle { which } => match which {
            OracleCommand::Vs { graph } => {
                let g = load_graph(&graph)?;
                println!("vs {}", oracle::brute_vs(&g)?);
                Ok(EXIT_OK)
            }
            OracleCommand::Cvs { graph } => {
                let g = load_graph(&graph)?;
                match oracle::brute_cvs(&g)? {
                    Some(l) => {
                        println!("YES");
                        println!("{}", layout_line(&l));
                        Ok(EXIT_OK)
                    }
                    None => {
                        println!("NO");
                        Ok(EXIT_NO)
                    }
                }
            }
            OracleCommand::Icg { graph } => {
                let g = load_graph(&graph)?;
                if oracle::brute_icg(&g)? {
                    println!("YES");
                    Ok(EXIT_OK)
                } else {
                    println!("NO");
                    Ok(EXIT_NO)
                }
            }
        },
    }
}
