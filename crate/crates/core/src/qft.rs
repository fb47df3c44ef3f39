//! Recursive construction of the quantum Fourier transform.
//!
//! `build_mqft(n)` produces the modified QFT whose output qubits carry the
//! transform in reversed bit order: on input `sum a_j |j_1...j_n>` it yields
//! `sum b_k |k_n...k_1>`. This is what makes the recursion clean — the
//! order-`n` circuit is the order-`n-1` circuit on qubits 1..n-1 followed by
//! one final stage on qubit n. `build_qft(n)` restores standard order with
//! `floor(n/2)` swaps.

use serde::Serialize;

use crate::circuit::{Circuit, Gate};

/// Gate tallies for the builders, next to the closed-form claims they
/// should match: `n` Hadamards, `n(n-1)/2` controlled rotations (so the
/// mQFT totals `n(n+1)/2` gates) and `floor(n/2)` swaps.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct QftBuildReport {
    pub n: usize,
    pub gate_count_total: usize,
    pub hadamard_count: usize,
    pub cr_count: usize,
    pub swap_count: usize,
}

/// The modified QFT circuit of order `n`.
///
/// Unrolled iteratively: stage `m` appends `CR(d, control = m+1-d,
/// target = m)` for `d = m` down to `2`, then `H(m)`, so the first
/// `(n-1)n/2` gates are exactly `build_mqft(n-1)`. The control wiring
/// `m+1-d` accounts for the embedded transform having reversed its output
/// bits: wire `m+1-d` holds bit `k_d` of the output index. Rotations are
/// emitted in descending `d`; they are diagonal and commute, the order is
/// fixed only so serialization is byte-reproducible.
pub fn build_mqft(n: usize) -> Circuit {
    let mut c = Circuit::new(n);
    for m in 1..=n {
        for d in (2..=m).rev() {
            c.push(Gate::cr(d as u32, m + 1 - d, m)).expect("builder gate is valid");
        }
        c.push(Gate::h(m)).expect("builder gate is valid");
    }
    c
}

/// The standard-order QFT: `build_mqft(n)` followed by the swaps
/// `(i, n+1-i)` for `i = 1..=floor(n/2)` that undo the bit reversal.
pub fn build_qft(n: usize) -> Circuit {
    let mut c = build_mqft(n);
    for i in 1..=n / 2 {
        c.push(Gate::swap(i, n + 1 - i)).expect("builder gate is valid");
    }
    c
}

/// Gate tallies of `build_qft(n)`, counted from the actual gate list.
pub fn gate_report(n: usize) -> QftBuildReport {
    let circuit = build_qft(n);
    let mut report = QftBuildReport {
        n,
        gate_count_total: circuit.len(),
        hadamard_count: 0,
        cr_count: 0,
        swap_count: 0,
    };
    for gate in circuit.gates() {
        match gate {
            Gate::H { .. } => report.hadamard_count += 1,
            Gate::CR { .. } => report.cr_count += 1,
            Gate::Swap { .. } => report.swap_count += 1,
        }
    }
    report
}

/// Reverses the low `n` base-2 digits of `j`.
pub fn bit_reverse(j: usize, n: u32) -> usize {
    assert!(
        n == 0 && j == 0 || n > 0 && j < (1usize << n),
        "index {j} out of range for {n} bits"
    );
    let mut out = 0usize;
    for bit in 0..n {
        if j & (1 << bit) != 0 {
            out |= 1 << (n - 1 - bit);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_zero_is_empty() {
        assert!(build_mqft(0).is_empty());
        assert!(build_qft(0).is_empty());
    }

    #[test]
    fn order_one_is_single_hadamard() {
        assert_eq!(build_mqft(1).gates(), &[Gate::h(1)]);
        assert_eq!(build_qft(1).gates(), &[Gate::h(1)]); // floor(1/2) = 0 swaps
    }

    #[test]
    fn order_three_gate_list() {
        let expected = [
            Gate::h(1),
            Gate::cr(2, 1, 2),
            Gate::h(2),
            Gate::cr(3, 1, 3),
            Gate::cr(2, 2, 3),
            Gate::h(3),
        ];
        assert_eq!(build_mqft(3).gates(), &expected);
    }

    #[test]
    fn qft_appends_swaps() {
        let c = build_qft(2);
        assert_eq!(c.gates().last(), Some(&Gate::swap(1, 2)));
        let c = build_qft(5);
        let swaps: Vec<_> = c.gates()[build_mqft(5).len()..].to_vec();
        assert_eq!(swaps, vec![Gate::swap(1, 5), Gate::swap(2, 4)]);
    }

    #[test]
    fn gate_counts_match_formulas() {
        for n in 0..=64 {
            let report = gate_report(n);
            assert_eq!(report.hadamard_count, n);
            assert_eq!(report.cr_count, n * n.saturating_sub(1) / 2);
            assert_eq!(report.swap_count, n / 2);
            assert_eq!(report.hadamard_count + report.cr_count, n * (n + 1) / 2);
            assert_eq!(
                report.gate_count_total,
                report.hadamard_count + report.cr_count + report.swap_count
            );
        }
        assert_eq!(gate_report(3).gate_count_total, 7);
        assert_eq!(gate_report(10).hadamard_count + gate_report(10).cr_count, 55);
    }

    #[test]
    fn bit_reverse_examples() {
        assert_eq!(bit_reverse(1, 3), 4); // 001 -> 100
        for n in 0..8 {
            assert_eq!(bit_reverse(0, n), 0);
        }
        for j in 0..64 {
            assert_eq!(bit_reverse(bit_reverse(j, 6), 6), j);
        }
    }

    #[test]
    #[should_panic(expected = "out of range")]
    fn bit_reverse_rejects_out_of_range() {
        bit_reverse(8, 3);
    }
}
