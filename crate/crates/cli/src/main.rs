use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use hopfion::check::{self, Suite};
use hopfion::entropy::EntropyJob;
use hopfion::report::AnalysisReport;
use hopfion::states::StateJson;
use hopfion::{Error, PureState, Tolerances};
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

const EXIT_INVARIANT: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_INVALID_STATE: u8 = 3;

#[derive(Parser)]
#[command(name = "hopfion", version, about = "Qubit states, Hopf fibrations and light rays")]
struct Cli {
    /// Overrides every tolerance rung with one value.
    #[arg(long, global = true, env = "HOPFION_TOL")]
    tol: Option<f64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Runs every analysis valid for a state file (or entropy job) and prints a JSON report.
    Analyze {
        path: PathBuf,
        /// Pretty-print the report.
        #[arg(long)]
        pretty: bool,
    },
    /// Prints random states as JSON lines.
    Random {
        #[arg(short = 'n', long, value_parser = clap::value_parser!(u8).range(1..=4))]
        qubits: u8,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        count: usize,
        /// Emit tensor products of single-qubit states.
        #[arg(long)]
        separable: bool,
    },
    /// Runs randomized invariant suites and prints the worst case per invariant.
    Check {
        /// algebra, hopf, spacetime, spin, fields, entropy or all.
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 1000, value_parser = clap::value_parser!(u64).range(1..))]
        trials: u64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Print the report as JSON instead of text.
        #[arg(long)]
        json: bool,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Self { code, message: message.into() }
    }
}

fn state_error(e: Error) -> Failure {
    let code = match e {
        Error::Json(_) => EXIT_USAGE,
        Error::InvalidRegion(_) | Error::InvalidQubitIndex { .. } => EXIT_USAGE,
        _ => EXIT_INVALID_STATE,
    };
    Failure::new(code, e.to_string())
}

fn analyze(path: &PathBuf, pretty: bool, tol: &Tolerances) -> Result<String, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::new(EXIT_USAGE, format!("cannot read {}: {e}", path.display())))?;
    let value: serde_json::Value = serde_json::from_str(&text)
        .map_err(|e| Failure::new(EXIT_USAGE, format!("malformed JSON in {}: {e}", path.display())))?;
    let malformed = |e: serde_json::Error| Failure::new(EXIT_USAGE, format!("malformed input: {e}"));

    let report = if value.get("region").is_some() {
        let job: EntropyJob = serde_json::from_value(value).map_err(malformed)?;
        let graph = job.graph(tol).map_err(state_error)?;
        AnalysisReport::analyze_graph(&graph, tol)
    } else {
        let json: StateJson = serde_json::from_value(value).map_err(malformed)?;
        let state = PureState::from_json(&json, tol).map_err(state_error)?;
        AnalysisReport::analyze(&state, tol)
    }
    .map_err(state_error)?;

    if !report.all_finite() {
        return Err(Failure::new(EXIT_INVARIANT, "report contains non-finite values"));
    }
    let out = if pretty { serde_json::to_string_pretty(&report) } else { serde_json::to_string(&report) };
    out.map_err(|e| Failure::new(EXIT_INVARIANT, e.to_string()))
}

fn random(qubits: usize, seed: u64, count: usize, separable: bool) -> Result<String, Failure> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = String::new();
    for _ in 0..count {
        let s = if separable {
            PureState::random_product(qubits, &mut rng)
        } else {
            PureState::random(qubits, &mut rng)
        }
        .map_err(|e| Failure::new(EXIT_USAGE, e.to_string()))?;
        let line = serde_json::to_string(&s.to_json()).map_err(|e| Failure::new(EXIT_USAGE, e.to_string()))?;
        out.push_str(&line);
        out.push('\n');
    }
    Ok(out)
}

fn run(cli: Cli) -> Result<(String, u8), Failure> {
    let tol = match cli.tol {
        Some(t) if t.is_finite() && t >= 0.0 => Tolerances::uniform(t),
        Some(t) => return Err(Failure::new(EXIT_USAGE, format!("invalid tolerance {t}"))),
        None => Tolerances::default(),
    };
    match cli.command {
        Command::Analyze { path, pretty } => analyze(&path, pretty, &tol).map(|s| (s + "\n", 0)),
        Command::Random { qubits, seed, count, separable } => {
            random(qubits as usize, seed, count, separable).map(|s| (s, 0))
        }
        Command::Check { suite, trials, seed, json } => {
            let suites = Suite::parse(&suite).ok_or_else(|| {
                Failure::new(
                    EXIT_USAGE,
                    format!("unknown suite '{suite}' (expected algebra, hopf, spacetime, spin, fields, entropy or all)"),
                )
            })?;
            let report = check::run(&suites, trials as usize, seed, &tol);
            let code = if report.passed() { 0 } else { EXIT_INVARIANT };
            let text = if json {
                serde_json::to_string_pretty(&report).map_err(|e| Failure::new(EXIT_INVARIANT, e.to_string()))?
            } else {
                report.to_string()
            };
            Ok((text + "\n", code))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((out, code)) => {
            let mut stdout = io::stdout().lock();
            // a closed pipe is not an error worth reporting
            let _ = stdout.write_all(out.as_bytes()).and_then(|_| stdout.flush());
            ExitCode::from(code)
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
