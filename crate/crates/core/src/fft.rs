//! Classical discrete Fourier transform: a literal double-loop oracle,
//! the recursive even/odd-split FFT, and butterfly operation counting.
//!
//! Both transforms use the normalized kernel `b_k = 2^{-n/2} sum_j z^{jk} a_j`
//! with `z = e^{2 i pi / 2^n}`, so they are norm preserving and agree with
//! the quantum circuit in [`crate::qft`].

use num_complex::Complex;
use thiserror::Error;

use crate::Real;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FftError {
    #[error("coefficient vector length {0} is not a power of two")]
    NotPowerOfTwo(usize),
    #[error("coefficient vector contains a non-finite component")]
    NonFinite,
    #[error("cannot split a vector of order 0")]
    SplitOfOrderZero,
}

/// A complex vector of length `2^n`, indexed so that entry `j` is the
/// coefficient `a_j` with `j_1` the most significant bit. No norm constraint.
#[derive(Debug, Clone, PartialEq)]
pub struct CoeffVector<T> {
    n: u32,
    values: Vec<Complex<T>>,
}

impl<T: Real> CoeffVector<T> {
    /// Builds a vector from its coefficients. The length must be a power of
    /// two and every component finite.
    pub fn new(values: Vec<Complex<T>>) -> Result<Self, FftError> {
        let len = values.len();
        if len == 0 || !len.is_power_of_two() {
            return Err(FftError::NotPowerOfTwo(len));
        }
        if values.iter().any(|v| !v.re.is_finite() || !v.im.is_finite()) {
            return Err(FftError::NonFinite);
        }
        Ok(Self { n: len.trailing_zeros(), values })
    }

    /// Basis vector `e_j` of order `n`.
    pub fn basis(n: u32, j: usize) -> Self {
        let len = 1usize << n;
        assert!(j < len, "basis index {j} out of range for order {n}");
        let mut values = vec![Complex::new(T::zero(), T::zero()); len];
        values[j] = Complex::new(T::one(), T::zero());
        Self { n, values }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        false // length is always >= 1
    }

    pub fn values(&self) -> &[Complex<T>] {
        &self.values
    }

    pub fn into_values(self) -> Vec<Complex<T>> {
        self.values
    }

    /// Euclidean norm.
    pub fn norm(&self) -> T {
        self.values
            .iter()
            .fold(T::zero(), |acc, v| acc + v.norm_sqr())
            .sqrt()
    }

    /// Largest componentwise distance to `other`.
    pub fn max_abs_diff(&self, other: &Self) -> T {
        assert_eq!(self.n, other.n);
        self.values
            .iter()
            .zip(&other.values)
            .fold(T::zero(), |acc, (a, b)| acc.max((a - b).norm()))
    }
}

/// Tally of scalar complex operations performed by [`fft_recursive`].
///
/// `complex_mults` counts twiddle products only (one per butterfly);
/// `complex_adds` counts the two additions per butterfly. The per-level
/// `1/sqrt(2)` normalization passes are real-scalar scalings and are kept
/// in `scalar_mults` so the butterfly counts solve their recurrences
/// exactly: `complex_mults == n * 2^(n-1)` for an order-`n` transform.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct OpCounter {
    pub complex_mults: u64,
    pub complex_adds: u64,
    pub scalar_mults: u64,
}

impl OpCounter {
    pub fn new() -> Self {
        Self::default()
    }

    /// Closed form for the twiddle-product count at order `n`:
    /// `M(n) = 2 M(n-1) + 2^(n-1)`, `M(0) = 0`, solved by `n * 2^(n-1)`.
    pub fn predicted_mults(n: u32) -> u64 {
        if n == 0 {
            0
        } else {
            u64::from(n) << (n - 1)
        }
    }
}

/// `e^{2 i pi power / 2^n}`, the `power`-th power of the primitive
/// `2^n`-th root of unity. `power` is reduced mod `2^n` before the
/// trigonometric evaluation.
pub fn root_of_unity<T: Real>(n: u32, power: i64) -> Complex<T> {
    let modulus = 1i64 << n;
    let reduced = power.rem_euclid(modulus);
    let angle = T::from_i64(reduced).unwrap() / T::from_i64(modulus).unwrap()
        * (T::PI() + T::PI());
    Complex::new(angle.cos(), angle.sin())
}

/// The brute-force DFT: `b_k = 2^{-n/2} sum_j z^{jk} a_j` evaluated by the
/// literal double loop. O(4^n) scalar work; this is the oracle every faster
/// path is checked against.
pub fn dft_direct<T: Real>(a: &CoeffVector<T>) -> CoeffVector<T> {
    let n = a.n;
    let len = a.len();
    let scale = T::FRAC_1_SQRT_2().powi(n as i32);
    let mut out = Vec::with_capacity(len);
    for k in 0..len {
        let mut acc = Complex::new(T::zero(), T::zero());
        for (j, &coeff) in a.values.iter().enumerate() {
            acc = acc + root_of_unity::<T>(n, (j * k) as i64) * coeff;
        }
        out.push(acc.scale(scale));
    }
    CoeffVector { n, values: out }
}

/// Splits `a` into its even-index and odd-index halves, each of order `n-1`.
pub fn split_even_odd<T: Real>(
    a: &CoeffVector<T>,
) -> Result<(CoeffVector<T>, CoeffVector<T>), FftError> {
    if a.n == 0 {
        return Err(FftError::SplitOfOrderZero);
    }
    let half = a.len() / 2;
    let mut even = Vec::with_capacity(half);
    let mut odd = Vec::with_capacity(half);
    for pair in a.values.chunks_exact(2) {
        even.push(pair[0]);
        odd.push(pair[1]);
    }
    let m = a.n - 1;
    Ok((
        CoeffVector { n: m, values: even },
        CoeffVector { n: m, values: odd },
    ))
}

/// The recursive radix-2 FFT. Agrees with [`dft_direct`] componentwise; the
/// counter records the butterflies actually executed.
///
/// Each merge level evaluates `P(z^k) = P_even(z'^k) + z^k P_odd(z'^k)`
/// once per output pair: the twiddle product `z^k * odd[k]` is shared
/// between outputs `k` and `k + 2^(n-1)`, which differ only by the sign of
/// the odd term. One `1/sqrt(2)` scaling pass per level supplies the
/// `2^{-n/2}` normalization.
pub fn fft_recursive<T: Real>(a: &CoeffVector<T>, counter: &mut OpCounter) -> CoeffVector<T> {
    let values = fft_rec(a.values.clone(), a.n, counter);
    CoeffVector { n: a.n, values }
}

fn fft_rec<T: Real>(values: Vec<Complex<T>>, n: u32, counter: &mut OpCounter) -> Vec<Complex<T>> {
    if n == 0 {
        return values;
    }
    let half = values.len() / 2;
    let mut even = Vec::with_capacity(half);
    let mut odd = Vec::with_capacity(half);
    for pair in values.chunks_exact(2) {
        even.push(pair[0]);
        odd.push(pair[1]);
    }
    let even = fft_rec(even, n - 1, counter);
    let odd = fft_rec(odd, n - 1, counter);

    let inv_sqrt2 = T::FRAC_1_SQRT_2();
    let mut out = vec![Complex::new(T::zero(), T::zero()); values.len()];
    for k in 0..half {
        let twiddle = root_of_unity::<T>(n, k as i64) * odd[k];
        out[k] = (even[k] + twiddle).scale(inv_sqrt2);
        out[k + half] = (even[k] - twiddle).scale(inv_sqrt2);
    }
    counter.complex_mults += half as u64;
    counter.complex_adds += 2 * half as u64;
    counter.scalar_mults += 2 * half as u64;
    out
}
