//! `qft-sim` — build, simulate, verify, transform, and count.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or parse errors.
//! Stdout carries data; stderr carries diagnostics.

mod verify;

use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex;

use qft_sim::circuit::{apply_circuit, Circuit, StateVector};
use qft_sim::fft::{dft_direct, fft_recursive, CoeffVector, OpCounter};
use qft_sim::io::{
    export_qasm, parse_circuit, parse_state_doc, serialize_circuit, serialize_coeffs,
    serialize_state, StateDocument,
};
use qft_sim::qft::{build_mqft, build_qft, gate_report};

#[derive(Parser)]
#[command(name = "qft-sim", version, about = "Recursive QFT construction and simulation")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a QFT or mQFT circuit in the native format or as OpenQASM 2.0
    Build {
        /// Number of qubits
        #[arg(short, long, value_parser = clap::value_parser!(u32).range(0..=64))]
        n: u32,
        #[arg(long, value_enum, default_value_t = Variant::Qft)]
        variant: Variant,
        #[arg(long, value_enum, default_value_t = Format::Native)]
        format: Format,
    },
    /// Run a circuit file on an input state and print the resulting state
    Simulate {
        /// Circuit file path, or `-` for standard input
        circuit: String,
        /// Input state: `basis:<j>` or `file:<path>`
        #[arg(long)]
        input: String,
    },
    /// Check circuits, FFT, and gate counts against the DFT oracle
    Verify {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=12))]
        n_max: u32,
        #[arg(long, default_value_t = 20)]
        trials: u32,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 1e-10)]
        tolerance: f64,
        /// Check one circuit file against the DFT instead of the full sweep
        #[arg(long)]
        against: Option<String>,
        /// Emit a machine-readable JSON report
        #[arg(long)]
        json: bool,
    },
    /// Fourier-transform a coefficient document
    Fft {
        /// Coefficient document path, or `-` for standard input
        input: String,
        #[arg(long, value_enum, default_value_t = Mode::Recursive)]
        mode: Mode,
        /// Report measured operation counts (recursive mode only) on stderr
        #[arg(long)]
        report_ops: bool,
    },
    /// Print gate counts of the order-n QFT next to the closed formulas
    Count {
        #[arg(short, long, value_parser = clap::value_parser!(u32).range(0..=64))]
        n: u32,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Variant {
    Mqft,
    Qft,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Native,
    Qasm,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Direct,
    Recursive,
}

struct CliError {
    message: String,
    code: u8,
}

impl CliError {
    fn usage(message: impl Into<String>) -> Self {
        Self { message: message.into(), code: 2 }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {}", err.message);
            ExitCode::from(err.code)
        }
    }
}

fn run(command: Command) -> Result<ExitCode, CliError> {
    match command {
        Command::Build { n, variant, format } => {
            let circuit = match variant {
                Variant::Mqft => build_mqft(n as usize),
                Variant::Qft => build_qft(n as usize),
            };
            let text = match format {
                Format::Native => serialize_circuit(&circuit),
                Format::Qasm => export_qasm(&circuit),
            };
            print!("{text}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Simulate { circuit, input } => cmd_simulate(&circuit, &input),
        Command::Verify { n_max, trials, seed, tolerance, against, json } => {
            cmd_verify(n_max, trials, seed, tolerance, against.as_deref(), json)
        }
        Command::Fft { input, mode, report_ops } => cmd_fft(&input, mode, report_ops),
        Command::Count { n, json } => cmd_count(n, json),
    }
}

fn read_input(path: &str) -> Result<String, CliError> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| CliError::usage(format!("reading standard input: {e}")))?;
        Ok(buf)
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| CliError::usage(format!("reading {path}: {e}")))
    }
}

fn load_circuit(path: &str) -> Result<Circuit, CliError> {
    let text = read_input(path)?;
    parse_circuit(&text).map_err(|e| CliError::usage(format!("parsing circuit: {e}")))
}

/// Norm slack accepted for state files; inputs are renormalized exactly
/// before simulation.
const INPUT_NORM_TOL: f64 = 1e-8;

fn cmd_simulate(circuit_path: &str, input: &str) -> Result<ExitCode, CliError> {
    let circuit = load_circuit(circuit_path)?;
    let n = circuit.n() as u32;

    let state = if let Some(j) = input.strip_prefix("basis:") {
        let j: usize = j
            .parse()
            .map_err(|_| CliError::usage(format!("invalid basis index `{j}`")))?;
        StateVector::basis(n, j).map_err(|e| CliError::usage(e.to_string()))?
    } else if let Some(path) = input.strip_prefix("file:") {
        let doc = parse_state_doc(&read_input(path)?)
            .map_err(|e| CliError::usage(format!("parsing state document: {e}")))?;
        if doc.n != n {
            return Err(CliError::usage(format!(
                "state has {} qubits but circuit expects {n}",
                doc.n
            )));
        }
        let mut amps = doc.to_amps();
        let norm = amps.iter().map(Complex::norm_sqr).sum::<f64>().sqrt();
        if (norm - 1.0).abs() > INPUT_NORM_TOL {
            return Err(CliError::usage(format!(
                "input state norm is {norm:.12}, expected 1 within {INPUT_NORM_TOL:.0e}"
            )));
        }
        for a in &mut amps {
            *a /= norm;
        }
        StateVector::new(amps).map_err(|e| CliError::usage(e.to_string()))?
    } else {
        return Err(CliError::usage(format!(
            "invalid input spec `{input}`: expected basis:<j> or file:<path>"
        )));
    };

    let out = apply_circuit(&state, &circuit).map_err(|e| CliError::usage(e.to_string()))?;
    print!("{}", serialize_state(&out));
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(
    n_max: u32,
    trials: u32,
    seed: u64,
    tolerance: f64,
    against: Option<&str>,
    json: bool,
) -> Result<ExitCode, CliError> {
    let checks = match against {
        Some(path) => {
            let circuit = load_circuit(path)?;
            if circuit.n() > 12 {
                return Err(CliError::usage(format!(
                    "--against circuit has {} qubits, limit is 12",
                    circuit.n()
                )));
            }
            vec![verify::run_against(&circuit, tolerance)]
        }
        None => verify::run_sweep(n_max, trials, seed, tolerance),
    };

    let all_passed = checks.iter().all(|c| c.passed);
    if json {
        let report = serde_json::json!({
            "tolerance": tolerance,
            "seed": seed,
            "trials": trials,
            "checks": checks,
            "all_passed": all_passed,
        });
        println!("{report}");
    } else {
        for check in &checks {
            println!("{}", check.render());
        }
        println!("{}", if all_passed { "all checks passed" } else { "verification FAILED" });
    }
    Ok(if all_passed { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn cmd_fft(input: &str, mode: Mode, report_ops: bool) -> Result<ExitCode, CliError> {
    let doc: StateDocument = parse_state_doc(&read_input(input)?)
        .map_err(|e| CliError::usage(format!("parsing coefficient document: {e}")))?;
    let coeffs = CoeffVector::new(doc.to_amps())
        .map_err(|e| CliError::usage(e.to_string()))?;

    let out = match mode {
        Mode::Direct => {
            if report_ops {
                return Err(CliError::usage("--report-ops requires --mode recursive"));
            }
            dft_direct(&coeffs)
        }
        Mode::Recursive => {
            let mut counter = OpCounter::new();
            let out = fft_recursive(&coeffs, &mut counter);
            if report_ops {
                let n = coeffs.n();
                eprintln!("complex_mults: {}", counter.complex_mults);
                eprintln!("complex_adds: {}", counter.complex_adds);
                eprintln!("scalar_mults: {}", counter.scalar_mults);
                eprintln!(
                    "predicted complex_mults (n*2^(n-1)): {}",
                    OpCounter::predicted_mults(n)
                );
            }
            out
        }
    };
    print!("{}", serialize_coeffs(&out));
    Ok(ExitCode::SUCCESS)
}

fn cmd_count(n: u32, json: bool) -> Result<ExitCode, CliError> {
    let n = n as usize;
    let report = gate_report(n);
    if json {
        let doc = serde_json::json!({
            "report": report,
            "formula": {
                "hadamard": n,
                "cr": n * n.saturating_sub(1) / 2,
                "swap": n / 2,
                "mqft_total": n * (n + 1) / 2,
            },
        });
        println!("{doc}");
    } else {
        println!("n: {n}");
        println!("hadamard_count: {} (formula n = {n})", report.hadamard_count);
        println!(
            "cr_count: {} (formula n(n-1)/2 = {})",
            report.cr_count,
            n * n.saturating_sub(1) / 2
        );
        println!("swap_count: {} (formula floor(n/2) = {})", report.swap_count, n / 2);
        println!(
            "mqft_gates: {} (formula n(n+1)/2 = {})",
            report.hadamard_count + report.cr_count,
            n * (n + 1) / 2
        );
        println!("gate_count_total: {}", report.gate_count_total);
    }
    Ok(ExitCode::SUCCESS)
}
