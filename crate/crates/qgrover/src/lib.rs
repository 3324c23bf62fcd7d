//! Command implementations behind the `qgrover` binary, split out so
//! integration tests can call them directly.

pub mod reference;

use std::path::Path;

use grover_engine::{grover_search, probe, SearchError, SearchParams, SearchReport};
use qcl_frontend::{parse_source, FrontendError, RuntimeError};
use serde::Serialize;
use statevec_core::MachineState;

/// Fixed exit-code map: 0 ok, 2 lex/parse, 3 runtime, 4 capacity,
/// 5 domain, 6 round limit.
pub mod exit_code {
    pub const OK: i32 = 0;
    pub const PARSE: i32 = 2;
    pub const RUNTIME: i32 = 3;
    pub const CAPACITY: i32 = 4;
    pub const DOMAIN: i32 = 5;
    pub const ROUND_LIMIT: i32 = 6;
}

/// Options shared by every subcommand.
#[derive(Debug, Clone)]
pub struct CliConfig {
    pub seed: u64,
    pub max_qubits: usize,
    pub max_rounds: usize,
    pub json: bool,
}

impl Default for CliConfig {
    fn default() -> Self {
        Self {
            seed: 0,
            max_qubits: 30,
            max_rounds: 1000,
            json: false,
        }
    }
}

/// A failure with its exit code; the message goes to standard error.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.message)
    }
}

fn from_search_error(err: SearchError) -> CliError {
    let code = match &err {
        SearchError::Domain(_) => exit_code::DOMAIN,
        SearchError::RoundLimit(_) => exit_code::ROUND_LIMIT,
        SearchError::Ancilla => exit_code::RUNTIME,
        SearchError::State(statevec_core::Error::Capacity(_)) => exit_code::CAPACITY,
        SearchError::State(_) => exit_code::RUNTIME,
    };
    CliError {
        code,
        message: err.to_string(),
    }
}

fn from_frontend_error(err: FrontendError) -> CliError {
    let code = match &err {
        FrontendError::Lex(_) | FrontendError::Parse(_) => exit_code::PARSE,
        FrontendError::Runtime(RuntimeError::Machine(statevec_core::Error::Capacity(_))) => {
            exit_code::CAPACITY
        }
        FrontendError::Runtime(RuntimeError::RoundLimit(_)) => exit_code::ROUND_LIMIT,
        FrontendError::Runtime(_) => exit_code::RUNTIME,
    };
    CliError {
        code,
        message: err.to_string(),
    }
}

/// `qgrover run <file>`: execute a program, echoing its output verbatim.
pub fn cmd_run(
    path: &Path,
    config: &CliConfig,
    input_feed: &[i64],
    entry: Option<&str>,
) -> Result<String, CliError> {
    let source = std::fs::read_to_string(path).map_err(|e| CliError {
        code: exit_code::RUNTIME,
        message: format!("cannot read {}: {e}", path.display()),
    })?;
    let program = parse_source(&source).map_err(from_frontend_error)?;
    let entry = match entry {
        Some(name) => name.to_string(),
        None => program
            .default_entry()
            .ok_or_else(|| CliError {
                code: exit_code::RUNTIME,
                message: "program has no zero-parameter procedure to run".into(),
            })?
            .to_string(),
    };
    let mut machine = MachineState::new(config.max_qubits, config.seed).map_err(|e| CliError {
        code: exit_code::CAPACITY,
        message: e.to_string(),
    })?;
    let result = qcl_frontend::Interpreter::new(&program, &mut machine)
        .with_input_feed(input_feed.iter().copied())
        .with_round_limit(config.max_rounds)
        .run(&entry)
        .map_err(|e| from_frontend_error(FrontendError::Runtime(e)))?;
    let mut out = result.output.join("\n");
    if !result.output.is_empty() {
        out.push('\n');
    }
    Ok(out)
}

fn run_search(target: u64, config: &CliConfig) -> Result<SearchReport, CliError> {
    let params = SearchParams::new(target, config.seed)
        .map_err(from_search_error)?
        .with_max_rounds(config.max_rounds);
    let mut machine = MachineState::new(config.max_qubits, config.seed).map_err(|e| CliError {
        code: exit_code::CAPACITY,
        message: e.to_string(),
    })?;
    grover_search(&params, &mut machine).map_err(from_search_error)
}

fn render_measured(values: &[u64]) -> String {
    values
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" - ")
}

/// `qgrover search <target>`: one search, as text or JSON.
pub fn cmd_search(target: u64, config: &CliConfig) -> Result<String, CliError> {
    let report = run_search(target, config)?;
    if config.json {
        let mut line = serde_json::to_string(&report).expect("report serializes");
        line.push('\n');
        return Ok(line);
    }
    Ok(format!(
        "input: {}\nqubits: {}\niterations: {}\nmeasured: {}\nrounds: {}\ntotal iterations: {}\n",
        report.input,
        report.qubits,
        report.iterations_per_round,
        render_measured(&report.measured_values),
        report.rounds,
        report.total_iterations,
    ))
}

const TABLE_HEADERS: [&str; 5] = [
    "Input",
    "Qubits",
    "Iterations",
    "List of Measured Number",
    "Total Iterations",
];

#[derive(Serialize)]
#[serde(untagged)]
enum JsonRow<'a> {
    Ok(&'a SearchReport),
    Err {
        input: u64,
        error: String,
        code: i32,
    },
}

/// `qgrover table <i1,i2,...>`: one row per input. Failed rows are
/// reported and the remaining rows still produced; the returned error (if
/// any) is the first row failure, for the exit code.
pub fn cmd_table(inputs: &[u64], config: &CliConfig) -> (String, Option<CliError>) {
    let mut rows: Vec<Result<SearchReport, (u64, CliError)>> = Vec::new();
    let mut first_error: Option<CliError> = None;
    for &input in inputs {
        match run_search(input, config) {
            Ok(report) => rows.push(Ok(report)),
            Err(err) => {
                if first_error.is_none() {
                    first_error = Some(err.clone());
                }
                rows.push(Err((input, err)));
            }
        }
    }

    let notes: Vec<String> = rows
        .iter()
        .filter_map(|row| row.as_ref().ok())
        .filter_map(|report| {
            reference::reference_row(report.input).and_then(|reference| {
                if reference.iterations != report.iterations_per_round {
                    Some(format!(
                        "input {}: the sizing formula ceil(pi/8*sqrt(2^{})) gives {} iterations; \
                         the reference table lists {}",
                        report.input,
                        report.qubits,
                        report.iterations_per_round,
                        reference.iterations
                    ))
                } else {
                    None
                }
            })
        })
        .collect();

    if config.json {
        #[derive(Serialize)]
        struct JsonTable<'a> {
            rows: Vec<JsonRow<'a>>,
            notes: &'a [String],
        }
        let json_rows: Vec<JsonRow> = rows
            .iter()
            .map(|row| match row {
                Ok(report) => JsonRow::Ok(report),
                Err((input, err)) => JsonRow::Err {
                    input: *input,
                    error: err.message.clone(),
                    code: err.code,
                },
            })
            .collect();
        let mut out = serde_json::to_string(&JsonTable {
            rows: json_rows,
            notes: &notes,
        })
        .expect("table serializes");
        out.push('\n');
        return (out, first_error);
    }

    // Text rendering: five left-aligned columns sized to their content.
    let cells: Vec<[String; 5]> = rows
        .iter()
        .map(|row| match row {
            Ok(r) => [
                r.input.to_string(),
                r.qubits.to_string(),
                r.iterations_per_round.to_string(),
                render_measured(&r.measured_values),
                r.total_iterations.to_string(),
            ],
            Err((input, err)) => [
                input.to_string(),
                "-".into(),
                "-".into(),
                format!("error: {}", err.message),
                "-".into(),
            ],
        })
        .collect();
    let mut widths: [usize; 5] = TABLE_HEADERS.map(str::len);
    for row in &cells {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let render_row = |row: &[String; 5]| -> String {
        let mut line = String::new();
        for (i, (cell, width)) in row.iter().zip(widths).enumerate() {
            if i > 0 {
                line.push_str("  ");
            }
            line.push_str(cell);
            if i + 1 < row.len() {
                line.extend(std::iter::repeat_n(' ', width - cell.len()));
            }
        }
        line.trim_end().to_string()
    };

    let mut out = String::new();
    out.push_str(&render_row(&TABLE_HEADERS.map(String::from)));
    out.push('\n');
    for row in &cells {
        out.push_str(&render_row(row));
        out.push('\n');
    }
    for note in &notes {
        out.push_str(&format!("note: {note}\n"));
    }
    (out, first_error)
}

/// `qgrover probe <n> <target> <k>`: analytic vs simulated probability.
pub fn cmd_probe(n: usize, target: u64, k: usize, config: &CliConfig) -> Result<String, CliError> {
    let mut machine = MachineState::new(config.max_qubits, config.seed).map_err(|e| CliError {
        code: exit_code::CAPACITY,
        message: e.to_string(),
    })?;
    let result = probe(n, target, k, &mut machine).map_err(from_search_error)?;
    let delta = (result.analytic_p - result.simulated_p).abs();
    if config.json {
        #[derive(Serialize)]
        struct JsonProbe {
            n: usize,
            target: u64,
            k: usize,
            analytic_p: f64,
            simulated_p: f64,
            delta: f64,
        }
        let mut out = serde_json::to_string(&JsonProbe {
            n,
            target,
            k,
            analytic_p: result.analytic_p,
            simulated_p: result.simulated_p,
            delta,
        })
        .expect("probe serializes");
        out.push('\n');
        return Ok(out);
    }
    // Probabilities print at full shortest-roundtrip precision.
    Ok(format!(
        "n: {n}\ntarget: {target}\nk: {k}\nanalytic_p: {}\nsimulated_p: {}\ndelta: {:e}\n",
        result.analytic_p, result.simulated_p, delta,
    ))
}
