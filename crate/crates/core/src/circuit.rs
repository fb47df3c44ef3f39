//! Gate and circuit data model plus dense state-vector simulation.
//!
//! Qubits are numbered 1..=n with qubit 1 the most significant bit of the
//! amplitude index, so qubit `q` owns bit position `n - q` of the index.

use num_complex::Complex;
use rand::Rng;
use rand_distr::StandardNormal;
use thiserror::Error;

use crate::fft::root_of_unity;
use crate::{Complex64, Real};

#[derive(Debug, Error, PartialEq)]
pub enum CircuitError {
    #[error("qubit index {index} out of range 1..={n}")]
    QubitOutOfRange { index: usize, n: usize },
    #[error("gate acts twice on qubit {0}")]
    DuplicateQubit(usize),
    #[error("phase order {d} out of range 2..={n}")]
    PhaseOrderOutOfRange { d: u32, n: usize },
    #[error("state has {state_n} qubits but circuit expects {circuit_n}")]
    DimensionMismatch { state_n: u32, circuit_n: u32 },
    #[error("state vector length {0} is not a power of two")]
    NotPowerOfTwo(usize),
    #[error("state norm is {norm:.6e}, expected 1 within {tol:.0e}")]
    NotNormalized { norm: f64, tol: f64 },
    #[error("state vector contains a non-finite component")]
    NonFinite,
    #[error("basis index {index} out of range for {n} qubits")]
    BasisOutOfRange { index: usize, n: u32 },
    #[error("dense unitary extraction is limited to n <= {max}, got n = {n}")]
    UnitaryTooLarge { n: u32, max: u32 },
}

/// Orientation of the phase in a controlled rotation: `+1` for
/// `e^{2 i pi / 2^d}`, `-1` for its conjugate. Inverted circuits carry the
/// negative sign so the gate list stays one line per gate when serialized.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Self {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn as_f64(self) -> f64 {
        match self {
            Sign::Plus => 1.0,
            Sign::Minus => -1.0,
        }
    }
}

/// One gate of the paper's set: Hadamard, controlled phase rotation
/// `R_d = diag(1, e^{sign * 2 i pi / 2^d})`, or swap.
///
/// The controlled rotation is the symmetric two-qubit diagonal: the phase
/// applies exactly when both bits are 1, so control and target are
/// interchangeable as unitaries even though the builder names them.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Gate {
    H { target: usize },
    CR { d: u32, control: usize, target: usize, sign: Sign },
    Swap { a: usize, b: usize },
}

impl Gate {
    pub fn h(target: usize) -> Self {
        Gate::H { target }
    }

    pub fn cr(d: u32, control: usize, target: usize) -> Self {
        Gate::CR { d, control, target, sign: Sign::Plus }
    }

    pub fn cr_conj(d: u32, control: usize, target: usize) -> Self {
        Gate::CR { d, control, target, sign: Sign::Minus }
    }

    pub fn swap(a: usize, b: usize) -> Self {
        Gate::Swap { a, b }
    }

    /// The adjoint gate. H and SWAP are self-adjoint; CR conjugates.
    pub fn adjoint(self) -> Self {
        match self {
            Gate::CR { d, control, target, sign } => {
                Gate::CR { d, control, target, sign: sign.flip() }
            }
            other => other,
        }
    }

    /// Qubits the gate touches.
    pub fn qubits(&self) -> Vec<usize> {
        match *self {
            Gate::H { target } => vec![target],
            Gate::CR { control, target, .. } => vec![control, target],
            Gate::Swap { a, b } => vec![a, b],
        }
    }

    pub fn validate(&self, n: usize) -> Result<(), CircuitError> {
        let check = |index: usize| {
            if index >= 1 && index <= n {
                Ok(())
            } else {
                Err(CircuitError::QubitOutOfRange { index, n })
            }
        };
        match *self {
            Gate::H { target } => check(target),
            Gate::CR { d, control, target, .. } => {
                check(control)?;
                check(target)?;
                if control == target {
                    return Err(CircuitError::DuplicateQubit(control));
                }
                if d < 2 || d as usize > n {
                    return Err(CircuitError::PhaseOrderOutOfRange { d, n });
                }
                Ok(())
            }
            Gate::Swap { a, b } => {
                check(a)?;
                check(b)?;
                if a == b {
                    return Err(CircuitError::DuplicateQubit(a));
                }
                Ok(())
            }
        }
    }
}

/// An ordered gate list over `n` qubits; the first element is applied first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Circuit {
    n: usize,
    gates: Vec<Gate>,
}

impl Circuit {
    pub fn new(n: usize) -> Self {
        Self { n, gates: Vec::new() }
    }

    pub fn with_gates(n: usize, gates: Vec<Gate>) -> Result<Self, CircuitError> {
        for gate in &gates {
            gate.validate(n)?;
        }
        Ok(Self { n, gates })
    }

    pub fn push(&mut self, gate: Gate) -> Result<(), CircuitError> {
        gate.validate(self.n)?;
        self.gates.push(gate);
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    pub fn len(&self) -> usize {
        self.gates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gates.is_empty()
    }

    /// The adjoint circuit: gate order reversed, each gate replaced by its
    /// adjoint. Applying a circuit and then its inverse is the identity.
    pub fn invert(&self) -> Circuit {
        Circuit {
            n: self.n,
            gates: self.gates.iter().rev().map(|g| g.adjoint()).collect(),
        }
    }
}

/// A unit-norm complex vector of length `2^n`; `amps[j]` is the amplitude
/// of the basis state `|j_1>...|j_n>` with qubit 1 most significant.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector<T> {
    n: u32,
    amps: Vec<Complex<T>>,
}

/// Norm slack accepted when constructing a state from raw amplitudes.
const NORM_TOL: f64 = 1e-10;

impl<T: Real> StateVector<T> {
    /// Builds a state from raw amplitudes, checking length, finiteness and
    /// unit norm (within 1e-10).
    pub fn new(amps: Vec<Complex<T>>) -> Result<Self, CircuitError> {
        let len = amps.len();
        if len == 0 || !len.is_power_of_two() {
            return Err(CircuitError::NotPowerOfTwo(len));
        }
        if amps.iter().any(|a| !a.re.is_finite() || !a.im.is_finite()) {
            return Err(CircuitError::NonFinite);
        }
        let norm = amps
            .iter()
            .fold(T::zero(), |acc, a| acc + a.norm_sqr())
            .sqrt();
        let tol = T::from_f64(NORM_TOL).unwrap();
        if (norm - T::one()).abs() > tol {
            return Err(CircuitError::NotNormalized {
                norm: norm.to_f64().unwrap_or(f64::NAN),
                tol: NORM_TOL,
            });
        }
        Ok(Self { n: len.trailing_zeros(), amps })
    }

    /// The computational basis state `|j>` on `n` qubits.
    pub fn basis(n: u32, j: usize) -> Result<Self, CircuitError> {
        let len = 1usize << n;
        if j >= len {
            return Err(CircuitError::BasisOutOfRange { index: j, n });
        }
        let mut amps = vec![Complex::new(T::zero(), T::zero()); len];
        amps[j] = Complex::new(T::one(), T::zero());
        Ok(Self { n, amps })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn amps(&self) -> &[Complex<T>] {
        &self.amps
    }

    pub fn into_amps(self) -> Vec<Complex<T>> {
        self.amps
    }

    pub fn norm(&self) -> T {
        self.amps
            .iter()
            .fold(T::zero(), |acc, a| acc + a.norm_sqr())
            .sqrt()
    }

    pub fn max_abs_diff(&self, other: &Self) -> T {
        assert_eq!(self.n, other.n);
        self.amps
            .iter()
            .zip(&other.amps)
            .fold(T::zero(), |acc, (a, b)| acc.max((a - b).norm()))
    }
}

/// A state drawn uniformly from the unit sphere: `2^(n+1)` independent
/// standard normal reals paired into complex amplitudes, then normalized.
pub fn random_state<R: Rng>(n: u32, rng: &mut R) -> StateVector<f64> {
    let len = 1usize << n;
    let mut amps: Vec<Complex64> = (0..len)
        .map(|_| Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal)))
        .collect();
    let norm = amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
    for a in &mut amps {
        *a /= norm;
    }
    StateVector { n, amps }
}

fn bit_mask(n: u32, qubit: usize) -> usize {
    1usize << (n as usize - qubit)
}

fn apply_gate_in_place<T: Real>(amps: &mut [Complex<T>], n: u32, gate: &Gate) {
    match *gate {
        Gate::H { target } => {
            let mask = bit_mask(n, target);
            let inv_sqrt2 = T::FRAC_1_SQRT_2();
            for i in 0..amps.len() {
                if i & mask == 0 {
                    let x = amps[i];
                    let y = amps[i | mask];
                    amps[i] = (x + y).scale(inv_sqrt2);
                    amps[i | mask] = (x - y).scale(inv_sqrt2);
                }
            }
        }
        Gate::CR { d, control, target, sign } => {
            let phase: Complex<T> = match sign {
                Sign::Plus => root_of_unity(d, 1),
                Sign::Minus => root_of_unity(d, -1),
            };
            let both = bit_mask(n, control) | bit_mask(n, target);
            for (i, amp) in amps.iter_mut().enumerate() {
                if i & both == both {
                    *amp = *amp * phase;
                }
            }
        }
        Gate::Swap { a, b } => {
            let mask_a = bit_mask(n, a);
            let mask_b = bit_mask(n, b);
            for i in 0..amps.len() {
                if i & mask_a != 0 && i & mask_b == 0 {
                    amps.swap(i, i ^ mask_a ^ mask_b);
                }
            }
        }
    }
}

/// Applies one gate, returning the new state. The gate is validated against
/// the state's qubit count before anything is touched.
pub fn apply_gate<T: Real>(s: &StateVector<T>, gate: &Gate) -> Result<StateVector<T>, CircuitError> {
    gate.validate(s.n as usize)?;
    let mut amps = s.amps.clone();
    apply_gate_in_place(&mut amps, s.n, gate);
    Ok(StateVector { n: s.n, amps })
}

/// Applies a whole circuit, first gate first.
pub fn apply_circuit<T: Real>(
    s: &StateVector<T>,
    c: &Circuit,
) -> Result<StateVector<T>, CircuitError> {
    if s.n as usize != c.n {
        return Err(CircuitError::DimensionMismatch { state_n: s.n, circuit_n: c.n as u32 });
    }
    let mut amps = s.amps.clone();
    for gate in &c.gates {
        apply_gate_in_place(&mut amps, s.n, gate);
    }
    Ok(StateVector { n: s.n, amps })
}

/// Row-major dense complex matrix, used for desk-scale unitary checks.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseMatrix<T> {
    dim: usize,
    data: Vec<Complex<T>>,
}

impl<T: Real> DenseMatrix<T> {
    pub fn identity(dim: usize) -> Self {
        let mut data = vec![Complex::new(T::zero(), T::zero()); dim * dim];
        for i in 0..dim {
            data[i * dim + i] = Complex::new(T::one(), T::zero());
        }
        Self { dim, data }
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> Complex<T>) -> Self {
        let mut data = Vec::with_capacity(dim * dim);
        for row in 0..dim {
            for col in 0..dim {
                data.push(f(row, col));
            }
        }
        Self { dim, data }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> Complex<T> {
        self.data[row * self.dim + col]
    }

    pub fn conj_transpose(&self) -> Self {
        Self::from_fn(self.dim, |r, c| self.get(c, r).conj())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim);
        Self::from_fn(self.dim, |r, c| {
            (0..self.dim).fold(Complex::new(T::zero(), T::zero()), |acc, k| {
                acc + self.get(r, k) * other.get(k, c)
            })
        })
    }

    pub fn max_abs_diff(&self, other: &Self) -> T {
        assert_eq!(self.dim, other.dim);
        self.data
            .iter()
            .zip(&other.data)
            .fold(T::zero(), |acc, (a, b)| acc.max((a - b).norm()))
    }

    /// Componentwise distance of `U^dagger U` from the identity.
    pub fn unitarity_defect(&self) -> T {
        self.conj_transpose().mul(self).max_abs_diff(&Self::identity(self.dim))
    }
}

/// Qubit-count bound for dense unitary extraction (16M complex entries).
pub const UNITARY_MAX_QUBITS: u32 = 10;

/// The full `2^n x 2^n` matrix of a circuit; column `k` is the circuit
/// applied to basis state `e_k`. Refused above [`UNITARY_MAX_QUBITS`].
pub fn unitary_of<T: Real>(c: &Circuit) -> Result<DenseMatrix<T>, CircuitError> {
    let n = c.n as u32;
    if n > UNITARY_MAX_QUBITS {
        return Err(CircuitError::UnitaryTooLarge { n, max: UNITARY_MAX_QUBITS });
    }
    let dim = 1usize << n;
    let mut data = vec![Complex::new(T::zero(), T::zero()); dim * dim];
    for col in 0..dim {
        let out = apply_circuit(&StateVector::basis(n, col)?, c)?;
        for (row, amp) in out.amps.iter().enumerate() {
            data[row * dim + col] = *amp;
        }
    }
    Ok(DenseMatrix { dim, data })
}
