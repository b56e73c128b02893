//! `wpolar` command-line front end.
//!
//! Exit codes: 0 on success, 1 when methods disagree or a check fails, 2 on
//! invalid input.

mod bench;
mod report;
mod structure;
mod verify;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;

use report::{Method, RunReport};
use structure::StructureArg;

#[derive(Debug, Parser)]
#[command(
    name = "wpolar",
    version,
    about = "Wiener polarity index of benzenoid systems and nanotubes"
)]
struct Cli {
    /// Emit JSON instead of plain text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build a structure and print its graph JSON and stats JSON, one per line.
    Generate {
        #[command(subcommand)]
        structure: StructureArg,
    },
    /// Print the stats record of a structure.
    Stats {
        #[command(subcommand)]
        structure: StructureArg,
    },
    /// Compute the Wiener polarity index.
    Wp {
        #[arg(long, value_enum, default_value_t = Method::All)]
        method: Method,
        /// Closed benzenoid formula from H, H1, H2, H3 alone.
        #[arg(long, num_args = 4, value_names = ["H", "H1", "H2", "H3"], allow_negative_numbers = true)]
        benzenoid_params: Option<Vec<i64>>,
        #[command(subcommand)]
        structure: Option<StructureArg>,
    },
    /// Cross-check all methods and structural identities on a seeded corpus.
    Verify {
        #[arg(long, default_value_t = 200)]
        count: i64,
        #[arg(long, default_value_t = 30)]
        max_h: i64,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        /// Check a single graph JSON instead (`-` reads standard input).
        #[arg(long, value_name = "PATH")]
        graph: Option<PathBuf>,
    },
    /// Time brute force, cut method and closed formula on random systems.
    Bench {
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 5)]
        instances: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

#[derive(Debug)]
pub struct CliError {
    kind: &'static str,
    message: String,
}

impl CliError {
    fn new(kind: &'static str, message: impl Into<String>) -> Self {
        Self {
            kind,
            message: message.into(),
        }
    }

    pub fn io(path: &Path, e: std::io::Error) -> Self {
        Self::new("Io", format!("{}: {e}", path.display()))
    }
}

impl From<wpolar::Error> for CliError {
    fn from(e: wpolar::Error) -> Self {
        Self::new(e.kind(), e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        Self::new("Io", e.to_string())
    }
}

fn print_json(v: &impl serde::Serialize) {
    println!("{}", serde_json::to_string(v).expect("serialisable"));
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    match cli.command {
        Command::Generate { structure } => {
            let s = structure::load(&structure)?;
            let stats = s.stats()?;
            println!("{}", wpolar::io::graph_to_json(s.graph()));
            print_json(&stats);
            Ok(ExitCode::SUCCESS)
        }
        Command::Stats { structure } => {
            let s = structure::load(&structure)?;
            print_json(&s.stats()?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Wp {
            method,
            benzenoid_params,
            structure,
        } => {
            let report = match (benzenoid_params, structure) {
                (Some(p), None) => report::run_params([p[0], p[1], p[2], p[3]], method)?,
                (None, Some(arg)) => {
                    let s = structure::load(&arg)?;
                    let results = report::run_structure(&s, method)?;
                    RunReport::new(structure::describe(&arg), results, s.stats()?)
                }
                (Some(_), Some(_)) => {
                    return Err(CliError::new(
                        "Usage",
                        "--benzenoid-params cannot be combined with a structure",
                    ))
                }
                (None, None) => {
                    return Err(CliError::new(
                        "Usage",
                        "give a structure or --benzenoid-params",
                    ))
                }
            };
            if cli.json {
                print_json(&report);
            } else {
                print!("{}", report.render_text());
            }
            Ok(if report.agreement {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Verify {
            count,
            max_h,
            seed,
            graph,
        } => {
            let report = match graph {
                Some(path) => {
                    let text = structure::read_input(&path)?;
                    let g = wpolar::io::graph_from_json(&text)?;
                    verify::verify_graph(path.display().to_string(), &g)
                }
                None => {
                    let count =
                        usize::try_from(count)
                            .ok()
                            .filter(|&c| c >= 1)
                            .ok_or_else(|| {
                                CliError::new("ParamOutOfRange", "--count must be at least 1")
                            })?;
                    let max_h =
                        usize::try_from(max_h)
                            .ok()
                            .filter(|&h| h >= 1)
                            .ok_or_else(|| {
                                CliError::new("ParamOutOfRange", "--max-h must be at least 1")
                            })?;
                    verify::verify_corpus(count, max_h, seed)
                }
            };
            if cli.json {
                print_json(&report);
            } else {
                print!("{}", report.render_text());
            }
            Ok(if report.ok() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Bench {
            sizes,
            instances,
            seed,
        } => {
            if sizes.is_empty() || sizes.contains(&0) || instances == 0 {
                return Err(CliError::new(
                    "ParamOutOfRange",
                    "--sizes needs positive hexagon counts and --instances must be positive",
                ));
            }
            let table = bench::run_bench(&sizes, instances, seed).map_err(|e| match e {
                wpolar::Error::Validation(_) => CliError::new("Disagreement", e.to_string()),
                e => e.into(),
            });
            let table = match table {
                Ok(t) => t,
                Err(e) if e.kind == "Disagreement" => {
                    print_json(&json!({"error": e.kind, "message": e.message}));
                    return Ok(ExitCode::from(1));
                }
                Err(e) => return Err(e),
            };
            if cli.json {
                print_json(&table);
            } else {
                print!("{}", table.render_text());
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            print_json(&json!({"error": e.kind, "message": e.message}));
            ExitCode::from(2)
        }
    }
}
