//! `kolkata`: CSV front door for the restaurant and stadium coordination
//! games.
//!
//! Subcommands reproduce the headline numbers of the library — cumulative
//! gate-safety probabilities, occupied-fraction curves, Monte Carlo runs,
//! the entangled-state strategy guarantees, and the two-diner equilibrium
//! report — as deterministic CSV artifacts. When writing to a file, a JSON
//! manifest sidecar records the command line, seed, version, checksums, and
//! wall-clock duration.
//!
//! Exit codes: 0 success, 2 usage error, 3 domain error, 4 capacity error,
//! 1 anything else (I/O, integrity).

mod commands;
mod manifest;

use clap::{Parser, Subcommand, ValueEnum};
use kolkata_sim::{Error as SimError, Seed};
use manifest::{OutputRecord, RunManifest};
use std::fmt;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

#[derive(Parser)]
#[command(
    name = "kolkata",
    version,
    about = "Coordination games on a shared entangled state: simulators, equilibria, diagnostics"
)]
struct Cli {
    /// Master seed; every random stream of a run is derived from it.
    #[arg(long, global = true, default_value_t = 42)]
    seed: u64,

    /// Output CSV path; standard output when omitted. File output also gets
    /// a `.manifest.json` sidecar.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Monte Carlo trials for `krp` and `ksp` (defaults 100 and 10000).
    #[arg(long, global = true)]
    trials: Option<u32>,

    /// Worker threads for parallel trials; 0 keeps the library default.
    /// Thread count changes wall time only, never results.
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    /// Agents choose independently at random; Monte Carlo over trials.
    Classical,
    /// One joint measurement of the shared entangled state.
    Quantum,
}

#[derive(Subcommand)]
enum Command {
    /// Cumulative probability that a gate stays within capacity, for the
    /// sixteen headline (alpha, N, K) configurations.
    Table1,
    /// Occupied-fraction trajectory of the restaurant game: recurrence,
    /// continuum closed form, relative gap, and mean-field columns.
    Fig1 {
        /// Trajectory length in days.
        #[arg(long, default_value_t = 25)]
        days: u32,
    },
    /// Restaurant game: classical learning trajectory or one quantum round.
    Krp {
        /// Number of agents, equal to the number of restaurants.
        #[arg(long, default_value_t = 10_000)]
        n: u64,
        /// Days of learning dynamics (classical mode only).
        #[arg(long, default_value_t = 1)]
        days: u32,
        #[arg(long, value_enum, default_value_t = Mode::Classical)]
        mode: Mode,
    },
    /// Stadium game: classical Monte Carlo summary or one quantum round.
    Ksp {
        /// Agents per gate.
        #[arg(long, default_value_t = 100)]
        n: u64,
        /// Number of gates.
        #[arg(long, default_value_t = 10)]
        k: u64,
        /// Capacity factor: each gate admits floor(alpha * n) agents.
        #[arg(long, default_value_t = 1.0)]
        alpha: f64,
        #[arg(long, value_enum, default_value_t = Mode::Classical)]
        mode: Mode,
    },
    /// Equilibria of the two-diner entangled game: both pure profiles and
    /// the interior stationary point, with validity flags.
    Nash {
        /// Payoff of the preferred restaurant.
        #[arg(long, default_value_t = 2.0)]
        u1: f64,
        /// Payoff of the other restaurant.
        #[arg(long, default_value_t = 1.0)]
        u2: f64,
        /// Weight |a|^2 of the first branch of the shared state.
        #[arg(long, default_value_t = 0.5)]
        a_sq: f64,
        /// Grid resolution for the best-response check, and the number of
        /// sweep points with --sweep.
        #[arg(long, default_value_t = 101)]
        grid: usize,
        /// Sweep the entanglement weight over the grid instead of using
        /// --a-sq.
        #[arg(long)]
        sweep: bool,
    },
    /// Measurement-model diagnostics: monomial expansion, sampler
    /// uniformity, determinant cross-check.
    QuantumVerify {
        /// Particle count for the brute-force expansion (2..=8).
        #[arg(long, default_value_t = 6)]
        n_e: u64,
        /// Sampler draws for the uniformity chi-square.
        #[arg(long, default_value_t = 100_000)]
        samples: u64,
    },
}

#[derive(Debug)]
enum CliError {
    Sim(SimError),
    Io(std::io::Error),
    Threads(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Sim(SimError::Domain(_)) => 3,
            CliError::Sim(SimError::Capacity(_)) => 4,
            _ => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Sim(e) => write!(f, "{e}"),
            CliError::Io(e) => write!(f, "{e}"),
            CliError::Threads(msg) => write!(f, "thread pool: {msg}"),
        }
    }
}

impl From<SimError> for CliError {
    fn from(e: SimError) -> Self {
        CliError::Sim(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code())
        }
    }
}

fn run(cli: &Cli) -> Result<(), CliError> {
    let started = Instant::now();
    let csv = if cli.threads > 0 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(cli.threads)
            .build()
            .map_err(|e| CliError::Threads(e.to_string()))?;
        pool.install(|| build_csv(cli))?
    } else {
        build_csv(cli)?
    };
    write_output(cli, &csv, started)
}

fn build_csv(cli: &Cli) -> Result<String, SimError> {
    let seed = Seed::new(cli.seed);
    match &cli.command {
        Command::Table1 => Ok(commands::table1()),
        Command::Fig1 { days } => commands::fig1(*days),
        Command::Krp { n, days, mode } => match mode {
            Mode::Classical => {
                commands::krp_classical(*n, *days, cli.trials.unwrap_or(100), seed)
            }
            Mode::Quantum => commands::krp_quantum(*n, seed),
        },
        Command::Ksp { n, k, alpha, mode } => match mode {
            Mode::Classical => {
                commands::ksp_classical(*n, *k, *alpha, cli.trials.unwrap_or(10_000), seed)
            }
            Mode::Quantum => commands::ksp_quantum(*n, *k, *alpha, seed),
        },
        Command::Nash {
            u1,
            u2,
            a_sq,
            grid,
            sweep,
        } => commands::nash(*u1, *u2, *a_sq, *grid, *sweep),
        Command::QuantumVerify { n_e, samples } => {
            commands::quantum_verify(*n_e, *samples, seed)
        }
    }
}

fn write_output(cli: &Cli, csv: &str, started: Instant) -> Result<(), CliError> {
    match &cli.out {
        None => {
            use std::io::Write as _;
            std::io::stdout().write_all(csv.as_bytes())?;
            Ok(())
        }
        Some(path) => {
            std::fs::write(path, csv)?;
            let record = RunManifest {
                command: std::env::args().collect::<Vec<_>>().join(" "),
                seed: cli.seed,
                version: env!("CARGO_PKG_VERSION").to_string(),
                outputs: vec![OutputRecord::new(path, csv.as_bytes())],
                duration_ms: started.elapsed().as_millis() as u64,
            };
            let mut json =
                serde_json::to_string_pretty(&record).expect("manifest always serializes");
            json.push('\n');
            std::fs::write(manifest::sidecar_path(path), json)?;
            Ok(())
        }
    }
}
