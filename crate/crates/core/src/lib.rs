//! Recursive construction of the quantum Fourier transform, a dense
//! state-vector simulator to run it, and the classical radix-2 FFT whose
//! divide-and-conquer structure the circuit mirrors.
//!
//! The library is organized around four modules:
//!
//! - [`fft`] — the classical side: a brute-force DFT used as the oracle
//!   everywhere, the recursive even/odd-split FFT, and operation counters
//!   that measure the butterfly cost.
//! - [`circuit`] — gates (`H`, controlled phase rotations, `SWAP`), circuits,
//!   state-vector simulation, circuit inversion, and dense unitary
//!   extraction for desk-scale checks.
//! - [`qft`] — the recursive builders for the modified QFT (output bits
//!   reversed) and the swap-restored standard QFT, plus gate-count reports.
//! - [`io`] — a canonical line-oriented circuit text format, a JSON state
//!   document, and OpenQASM 2.0 export.
//!
//! Index convention: qubit 1 is the most significant bit, so the amplitude
//! at array index `j` belongs to the basis state `|j_1>...|j_n>` with
//! `j = j_1*2^(n-1) + ... + j_n`. All bit arithmetic in the simulator
//! derives from this single statement.

pub mod circuit;
pub mod fft;
pub mod io;
pub mod qft;

use num_complex::Complex;
use num_traits::{Float, FloatConst, FromPrimitive};

/// Scalar bound for the core math. Anything float-like works; the crate
/// ships concrete aliases for `f64` below.
pub trait Real: Float + FloatConst + FromPrimitive + std::fmt::Debug + 'static {}
impl<T> Real for T where T: Float + FloatConst + FromPrimitive + std::fmt::Debug + 'static {}

pub type Complex64 = Complex<f64>;
pub type CoeffVector64 = fft::CoeffVector<f64>;
pub type StateVector64 = circuit::StateVector<f64>;
pub type DenseMatrix64 = circuit::DenseMatrix<f64>;
