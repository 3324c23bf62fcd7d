use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use qgrover::{cmd_probe, cmd_run, cmd_search, cmd_table, CliConfig, CliError};

#[derive(Parser)]
#[command(
    name = "qgrover",
    version,
    about = "Deterministic state-vector Grover search, with a small quantum-language runner"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct CommonOpts {
    /// Seed for the machine's random stream; identical seeds replay
    /// identical runs byte for byte
    #[arg(long, default_value_t = 0)]
    seed: u64,

    /// Qubit budget of the machine (at most 30)
    #[arg(long, default_value_t = 30)]
    max_qubits: usize,

    /// Rounds allowed in repeat-until loops before giving up
    #[arg(long, default_value_t = 1000)]
    max_rounds: usize,
}

impl CommonOpts {
    fn config(&self, json: bool) -> CliConfig {
        CliConfig {
            seed: self.seed,
            max_qubits: self.max_qubits,
            max_rounds: self.max_rounds,
            json,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Execute a program file against a fresh machine
    Run {
        file: PathBuf,

        #[command(flatten)]
        common: CommonOpts,

        /// Integers fed to the program's `input` statements, in order
        #[arg(long, value_delimiter = ',')]
        input: Vec<i64>,

        /// Entry procedure; defaults to `main`, else the last
        /// zero-parameter procedure in the file
        #[arg(long)]
        entry: Option<String>,
    },
    /// Search for one target value and report the run
    Search {
        target: u64,

        #[command(flatten)]
        common: CommonOpts,

        /// Emit the report as a single JSON object
        #[arg(long)]
        json: bool,
    },
    /// Reproduce the results table for a comma-separated list of targets
    Table {
        #[arg(value_delimiter = ',')]
        inputs: Vec<u64>,

        #[command(flatten)]
        common: CommonOpts,

        #[arg(long)]
        json: bool,
    },
    /// Compare the simulated success probability after k iterations
    /// against the analytic value
    Probe {
        /// Register width in qubits
        n: usize,
        /// Marked value to track
        target: u64,
        /// Number of iterations to apply
        k: usize,

        #[command(flatten)]
        common: CommonOpts,

        #[arg(long)]
        json: bool,
    },
}

fn report(result: Result<String, CliError>) -> ExitCode {
    match result {
        Ok(output) => {
            print!("{output}");
            ExitCode::SUCCESS
        }
        Err(err) => {
            eprintln!("qgrover: {}", err.message);
            ExitCode::from(err.code as u8)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Run {
            file,
            common,
            input,
            entry,
        } => report(cmd_run(
            &file,
            &common.config(false),
            &input,
            entry.as_deref(),
        )),
        Command::Search {
            target,
            common,
            json,
        } => report(cmd_search(target, &common.config(json))),
        Command::Table {
            inputs,
            common,
            json,
        } => {
            let (output, error) = cmd_table(&inputs, &common.config(json));
            print!("{output}");
            match error {
                None => ExitCode::SUCCESS,
                Some(err) => {
                    eprintln!("qgrover: {}", err.message);
                    ExitCode::from(err.code as u8)
                }
            }
        }
        Command::Probe {
            n,
            target,
            k,
            common,
            json,
        } => report(cmd_probe(n, target, k, &common.config(json))),
    }
}
