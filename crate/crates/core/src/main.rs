use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use loopspec::analysis::{analyze, LiftSummary};
use loopspec::edgelist::{read_edge_list_file, write_edge_list, write_edge_list_file};
use loopspec::oracle::{random_graph, Constraint, GeneratorConfig};
use loopspec::spectral::{verify_all, Tolerances};
use loopspec::sweep::{run_sweep, SweepConfig, SweepMode, SweepResult};
use loopspec::{lift, Error};

const EXIT_CHECK_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Parser)]
#[command(
    name = "loopspec",
    version,
    about = "Spectra of graph Laplacians with self-loops"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Random,
    Exhaustive,
}

#[derive(Clone, Copy, ValueEnum)]
enum Require {
    None,
    Connected,
    PseudoConnected,
}

#[derive(Subcommand)]
enum Command {
    /// Laplacian, spectrum and bounds of an edge-list graph.
    Analyze {
        path: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Write the lifted graph and print a JSON summary.
    Lift {
        path: PathBuf,
        out: PathBuf,
        /// Also write the summary to this file.
        #[arg(long)]
        summary: Option<PathBuf>,
    },
    /// Run every applicable check; exit 1 if any fails.
    Verify { path: PathBuf },
    /// Write a seeded random graph as an edge list.
    Generate {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0.4)]
        p_edge: f64,
        #[arg(long, default_value_t = 0.3)]
        p_loop: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value = "none")]
        require: Require,
        /// Output file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Verify a campaign of random or enumerated graphs.
    Sweep {
        #[arg(long, default_value_t = 12)]
        n_max: usize,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value = "random")]
        mode: Mode,
        #[arg(long, default_value_t = 0.4)]
        p_edge: f64,
        #[arg(long, default_value_t = 0.3)]
        p_loop: f64,
        /// Run on one thread.
        #[arg(long)]
        serial: bool,
    },
}

#[derive(Serialize)]
struct SweepOutput<'a> {
    mode: SweepMode,
    seed: u64,
    n_max: usize,
    #[serde(flatten)]
    result: &'a SweepResult,
}

#[derive(Serialize)]
struct GenerateFailure<'a> {
    error: String,
    seed: u64,
    config: &'a GeneratorConfig,
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("report serializes")
}

fn run(cli: Cli) -> Result<u8, Error> {
    let tol = Tolerances::from_env()?;
    match cli.command {
        Command::Analyze { path, format } => {
            let g = read_edge_list_file(&path)?;
            let report = analyze(&g, &tol)?;
            match format {
                Format::Text => print!("{}", report.to_text()),
                Format::Json => println!("{}", to_json(&report)),
            }
            Ok(0)
        }
        Command::Lift { path, out, summary } => {
            let g = read_edge_list_file(&path)?;
            let lg = lift(&g);
            write_edge_list_file(&out, lg.lifted())?;
            let text = to_json(&LiftSummary::of(&lg));
            if let Some(p) = summary {
                std::fs::write(&p, format!("{text}\n")).map_err(|source| Error::Io {
                    path: p.clone(),
                    source,
                })?;
            }
            println!("{text}");
            Ok(0)
        }
        Command::Verify { path } => {
            let g = read_edge_list_file(&path)?;
            let report = verify_all(&g, &tol)?;
            println!("{}", to_json(&report));
            Ok(if report.passed() {
                0
            } else {
                EXIT_CHECK_FAILED
            })
        }
        Command::Generate {
            n,
            p_edge,
            p_loop,
            seed,
            require,
            out,
        } => {
            let require = match require {
                Require::None => Constraint::None,
                Require::Connected => Constraint::Connected,
                Require::PseudoConnected => Constraint::PseudoConnected,
            };
            let cfg = GeneratorConfig::new(n, p_edge, p_loop, seed).requiring(require);
            let g = match random_graph(&cfg) {
                Ok(g) => g,
                Err(e) => {
                    let report = GenerateFailure {
                        error: e.to_string(),
                        seed,
                        config: &cfg,
                    };
                    eprintln!("{}", serde_json::to_string(&report).expect("serializes"));
                    return Ok(EXIT_USAGE);
                }
            };
            match out {
                Some(p) => write_edge_list_file(p, &g)?,
                None => print!("{}", write_edge_list(&g)),
            }
            Ok(0)
        }
        Command::Sweep {
            n_max,
            samples,
            seed,
            mode,
            p_edge,
            p_loop,
            serial,
        } => {
            let mut cfg = match mode {
                Mode::Random => SweepConfig::random(n_max, samples, seed),
                Mode::Exhaustive => SweepConfig::exhaustive(n_max),
            };
            cfg.p_edge = p_edge;
            cfg.p_loop = p_loop;
            cfg.tolerances = tol;
            cfg.parallel = !serial;
            let result = run_sweep(&cfg)?;
            println!(
                "{}",
                to_json(&SweepOutput {
                    mode: cfg.mode,
                    seed: cfg.seed,
                    n_max: cfg.n_max,
                    result: &result,
                })
            );
            Ok(if result.all_passed() {
                0
            } else {
                EXIT_CHECK_FAILED
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}
