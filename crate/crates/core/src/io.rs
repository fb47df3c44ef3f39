//! Serialization: the native circuit text format, JSON state documents,
//! and OpenQASM 2.0 export.
//!
//! The native format is deliberately tiny and strict — one header line
//! `qubits <n>`, then one gate per line (`H t`, `CR d c t`, `CR- d c t`
//! for the conjugate rotation, `SWAP a b`), decimal integers separated by
//! single spaces, every line newline-terminated, no comments or blank
//! lines. Serialization is canonical: a circuit has exactly one byte
//! representation, so golden files stay stable. QASM is export-only; it
//! cannot carry the `d`-parameterization losslessly and is never parsed
//! back.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::circuit::{Circuit, Gate, Sign, StateVector};
use crate::fft::CoeffVector;
use crate::Complex64;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("malformed header, line 1")]
    MalformedHeader,
    #[error("unknown mnemonic `{mnemonic}`, line {line}")]
    UnknownMnemonic { mnemonic: String, line: usize },
    #[error("malformed gate arguments, line {line}")]
    MalformedGate { line: usize },
    #[error("qubit index out of range, line {line}")]
    QubitOutOfRange { line: usize },
    #[error("qubit indices must differ, line {line}")]
    DuplicateQubit { line: usize },
    #[error("phase order out of range, line {line}")]
    PhaseOrderOutOfRange { line: usize },
    #[error("missing final newline")]
    MissingNewline,
    #[error("state document is not valid JSON: {0}")]
    BadStateJson(String),
    #[error("state document length {len} does not match n = {n}")]
    StateLengthMismatch { len: usize, n: u32 },
    #[error("state document contains a non-finite component")]
    NonFinite,
}

pub fn serialize_circuit(c: &Circuit) -> String {
    let mut out = String::new();
    writeln!(out, "qubits {}", c.n()).unwrap();
    for gate in c.gates() {
        match *gate {
            Gate::H { target } => writeln!(out, "H {target}").unwrap(),
            Gate::CR { d, control, target, sign } => {
                let mnemonic = match sign {
                    Sign::Plus => "CR",
                    Sign::Minus => "CR-",
                };
                writeln!(out, "{mnemonic} {d} {control} {target}").unwrap();
            }
            Gate::Swap { a, b } => writeln!(out, "SWAP {a} {b}").unwrap(),
        }
    }
    out
}

/// Strict inverse of [`serialize_circuit`]. Every violation is reported
/// with its 1-based line number.
pub fn parse_circuit(text: &str) -> Result<Circuit, ParseError> {
    if !text.ends_with('\n') {
        return Err(ParseError::MissingNewline);
    }
    let mut lines = text.split_inclusive('\n');
    let header = lines.next().ok_or(ParseError::MalformedHeader)?;
    let n = parse_header(header)?;

    let mut circuit = Circuit::new(n);
    for (idx, raw) in lines.enumerate() {
        let line = idx + 2;
        let body = raw.strip_suffix('\n').ok_or(ParseError::MissingNewline)?;
        let gate = parse_gate_line(body, line)?;
        circuit.push(gate).map_err(|e| match e {
            crate::circuit::CircuitError::QubitOutOfRange { .. } => {
                ParseError::QubitOutOfRange { line }
            }
            crate::circuit::CircuitError::DuplicateQubit(_) => ParseError::DuplicateQubit { line },
            crate::circuit::CircuitError::PhaseOrderOutOfRange { .. } => {
                ParseError::PhaseOrderOutOfRange { line }
            }
            _ => ParseError::MalformedGate { line },
        })?;
    }
    Ok(circuit)
}

fn parse_header(line: &str) -> Result<usize, ParseError> {
    let body = line.strip_suffix('\n').ok_or(ParseError::MissingNewline)?;
    let rest = body.strip_prefix("qubits ").ok_or(ParseError::MalformedHeader)?;
    parse_decimal(rest).ok_or(ParseError::MalformedHeader)
}

// Strict decimal: digits only, no sign, no leading zeros except "0" itself.
fn parse_decimal(token: &str) -> Option<usize> {
    if token.is_empty() || !token.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    if token.len() > 1 && token.starts_with('0') {
        return None;
    }
    token.parse().ok()
}

fn parse_gate_line(body: &str, line: usize) -> Result<Gate, ParseError> {
    let mut parts = body.split(' ');
    let mnemonic = parts.next().unwrap_or("");
    let args: Vec<&str> = parts.collect();
    let arg = |i: usize| -> Result<usize, ParseError> {
        args.get(i)
            .and_then(|t| parse_decimal(t))
            .ok_or(ParseError::MalformedGate { line })
    };
    let exact = |count: usize| -> Result<(), ParseError> {
        if args.len() == count && args.iter().all(|a| !a.is_empty()) {
            Ok(())
        } else {
            Err(ParseError::MalformedGate { line })
        }
    };
    match mnemonic {
        "H" => {
            exact(1)?;
            Ok(Gate::h(arg(0)?))
        }
        "CR" => {
            exact(3)?;
            Ok(Gate::cr(arg(0)? as u32, arg(1)?, arg(2)?))
        }
        "CR-" => {
            exact(3)?;
            Ok(Gate::cr_conj(arg(0)? as u32, arg(1)?, arg(2)?))
        }
        "SWAP" => {
            exact(2)?;
            Ok(Gate::swap(arg(0)?, arg(1)?))
        }
        other => Err(ParseError::UnknownMnemonic { mnemonic: other.to_string(), line }),
    }
}

/// JSON state/coefficient document: `{"n":..,"amplitudes":[[re,im],..]}`.
/// Reals are rendered as shortest round-trip decimals, so parsing returns
/// bit-identical doubles.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StateDocument {
    pub n: u32,
    pub amplitudes: Vec<[f64; 2]>,
}

impl StateDocument {
    pub fn from_parts(n: u32, amps: &[Complex64]) -> Self {
        Self { n, amplitudes: amps.iter().map(|a| [a.re, a.im]).collect() }
    }

    pub fn to_amps(&self) -> Vec<Complex64> {
        self.amplitudes.iter().map(|&[re, im]| Complex64::new(re, im)).collect()
    }
}

pub fn serialize_state(s: &StateVector<f64>) -> String {
    render_state_doc(&StateDocument::from_parts(s.n(), s.amps()))
}

pub fn serialize_coeffs(a: &CoeffVector<f64>) -> String {
    render_state_doc(&StateDocument::from_parts(a.n(), a.values()))
}

fn render_state_doc(doc: &StateDocument) -> String {
    let mut out = serde_json::to_string(doc).expect("state document serialization");
    out.push('\n');
    out
}

pub fn parse_state_doc(text: &str) -> Result<StateDocument, ParseError> {
    let doc: StateDocument =
        serde_json::from_str(text).map_err(|e| ParseError::BadStateJson(e.to_string()))?;
    let expected = 1usize
        .checked_shl(doc.n)
        .ok_or(ParseError::StateLengthMismatch { len: doc.amplitudes.len(), n: doc.n })?;
    if doc.amplitudes.len() != expected {
        return Err(ParseError::StateLengthMismatch { len: doc.amplitudes.len(), n: doc.n });
    }
    if doc.amplitudes.iter().any(|p| !p[0].is_finite() || !p[1].is_finite()) {
        return Err(ParseError::NonFinite);
    }
    Ok(doc)
}

/// OpenQASM 2.0 export. `CR(d)` becomes `cp(2*pi/2^d)` with the angle as a
/// shortest round-trip decimal literal; qubit `i` maps to `q[i-1]`.
pub fn export_qasm(c: &Circuit) -> String {
    let mut out = String::new();
    out.push_str("OPENQASM 2.0;\n");
    out.push_str("include \"qelib1.inc\";\n");
    out.push_str("// qubit 1 is the most significant bit; qubit i maps to q[i-1]\n");
    if c.n() > 0 {
        writeln!(out, "qreg q[{}];", c.n()).unwrap();
    }
    for gate in c.gates() {
        match *gate {
            Gate::H { target } => writeln!(out, "h q[{}];", target - 1).unwrap(),
            Gate::CR { d, control, target, sign } => {
                let angle = sign.as_f64() * 2.0 * std::f64::consts::PI / f64::powi(2.0, d as i32);
                writeln!(out, "cp({angle}) q[{}],q[{}];", control - 1, target - 1).unwrap();
            }
            Gate::Swap { a, b } => writeln!(out, "swap q[{}],q[{}];", a - 1, b - 1).unwrap(),
        }
    }
    out
}
