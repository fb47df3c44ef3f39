//! End-to-end tests of the `qft-sim` binary: byte-deterministic output and
//! the documented exit-code contract (0 success, 1 verification failure,
//! 2 usage/parse errors).

use std::io::Write;
use std::process::{Command, Output, Stdio};

use qft_sim::io::{parse_state_doc, serialize_circuit, serialize_state};
use qft_sim::qft::build_qft;
use qft_sim::{Complex64, StateVector64};

fn qft_sim(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qft-sim"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).unwrap()
}

fn exit_code(output: &Output) -> i32 {
    output.status.code().expect("no signal")
}

#[test]
fn build_mqft_native() {
    let out = qft_sim(&["build", "-n", "1", "--variant", "mqft"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout_of(&out), "qubits 1\nH 1\n");

    let out = qft_sim(&["build", "-n", "2", "--variant", "mqft"]);
    assert_eq!(stdout_of(&out), include_str!("golden/mqft_2.txt"));
}

#[test]
fn build_qasm() {
    let out = qft_sim(&["build", "-n", "2", "--variant", "qft", "--format", "qasm"]);
    let text = stdout_of(&out);
    assert!(text.starts_with("OPENQASM 2.0;\n"));
    assert!(text.contains("h q[0];"));
    assert!(text.contains("cp(1.5707963267948966) q[0],q[1];"));
    assert!(text.contains("swap q[0],q[1];"));
}

#[test]
fn build_rejects_bad_n() {
    assert_eq!(exit_code(&qft_sim(&["build", "-n", "-1"])), 2);
    assert_eq!(exit_code(&qft_sim(&["build", "-n", "65"])), 2);
}

#[test]
fn simulate_basis_states() {
    let dir = tempfile::tempdir().unwrap();
    let circuit_path = dir.path().join("qft2.txt");
    std::fs::write(&circuit_path, serialize_circuit(&build_qft(2))).unwrap();

    // QFT on |1> is (1/2)(1, i, -1, -i).
    let out = qft_sim(&["simulate", circuit_path.to_str().unwrap(), "--input", "basis:1"]);
    assert_eq!(exit_code(&out), 0);
    let doc = parse_state_doc(&stdout_of(&out)).unwrap();
    let expected = [
        Complex64::new(0.5, 0.0),
        Complex64::new(0.0, 0.5),
        Complex64::new(-0.5, 0.0),
        Complex64::new(0.0, -0.5),
    ];
    for (a, b) in doc.to_amps().iter().zip(&expected) {
        assert!((a - b).norm() < 1e-12);
    }
}

#[test]
fn simulate_reads_circuit_from_stdin() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_qft-sim"))
        .args(["simulate", "-", "--input", "basis:0"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(serialize_circuit(&build_qft(1)).as_bytes())
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    let doc = parse_state_doc(&String::from_utf8(out.stdout).unwrap()).unwrap();
    let s = std::f64::consts::FRAC_1_SQRT_2;
    assert!((doc.to_amps()[0].re - s).abs() < 1e-12);
    assert!((doc.to_amps()[1].re - s).abs() < 1e-12);
}

#[test]
fn simulate_rejects_unnormalized_input() {
    let dir = tempfile::tempdir().unwrap();
    let circuit_path = dir.path().join("qft1.txt");
    std::fs::write(&circuit_path, serialize_circuit(&build_qft(1))).unwrap();
    let state_path = dir.path().join("state.json");
    std::fs::write(&state_path, "{\"n\":1,\"amplitudes\":[[2.0,0.0],[0.0,0.0]]}\n").unwrap();

    let out = qft_sim(&[
        "simulate",
        circuit_path.to_str().unwrap(),
        "--input",
        &format!("file:{}", state_path.display()),
    ]);
    assert_eq!(exit_code(&out), 2);
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(stderr.contains("norm is 2"), "stderr: {stderr}");
}

#[test]
fn simulate_rejects_malformed_circuit() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.txt");
    std::fs::write(&path, "qubits 2\nH 3\n").unwrap();
    let out = qft_sim(&["simulate", path.to_str().unwrap(), "--input", "basis:0"]);
    assert_eq!(exit_code(&out), 2);
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(stderr.contains("qubit index out of range, line 2"), "stderr: {stderr}");
}

#[test]
fn verify_sweep_passes_and_is_deterministic() {
    let args = ["verify", "--n-max", "4", "--trials", "5", "--seed", "42", "--tolerance", "1e-10"];
    let first = qft_sim(&args);
    assert_eq!(exit_code(&first), 0);
    let text = stdout_of(&first);
    assert!(text.contains("n=4 qft-vs-dft: PASS"));
    assert!(text.contains("all checks passed"));

    let second = qft_sim(&args);
    assert_eq!(first.stdout, second.stdout, "verify output is not byte-deterministic");
}

#[test]
fn verify_json_report() {
    let out = qft_sim(&["verify", "--n-max", "2", "--trials", "3", "--json"]);
    assert_eq!(exit_code(&out), 0);
    let report: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(report["all_passed"], serde_json::Value::Bool(true));
    assert!(report["checks"].as_array().unwrap().len() >= 8);
}

#[test]
fn verify_rejects_out_of_range_n_max() {
    assert_eq!(exit_code(&qft_sim(&["verify", "--n-max", "0"])), 2);
    assert_eq!(exit_code(&qft_sim(&["verify", "--n-max", "13"])), 2);
}

#[test]
fn verify_against_detects_a_wrong_circuit() {
    let dir = tempfile::tempdir().unwrap();

    // The real thing passes.
    let good = dir.path().join("good.txt");
    std::fs::write(&good, serialize_circuit(&build_qft(3))).unwrap();
    let out = qft_sim(&["verify", "--n-max", "3", "--against", good.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 0);

    // Same circuit with one rotation order perturbed (CR 3 1 3 -> CR 2 1 3):
    // a wrong phase angle, caught against the oracle.
    let bad = dir.path().join("bad.txt");
    let perturbed = serialize_circuit(&build_qft(3)).replace("CR 3 1 3", "CR 2 1 3");
    std::fs::write(&bad, perturbed).unwrap();
    let out = qft_sim(&["verify", "--n-max", "3", "--against", bad.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 1);
    assert!(stdout_of(&out).contains("FAIL"));
}

#[test]
fn fft_direct_and_recursive_agree() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("coeffs.json");
    std::fs::write(&input, "{\"n\":2,\"amplitudes\":[[0.0,0.0],[1.0,0.0],[0.0,0.0],[0.0,0.0]]}\n")
        .unwrap();

    let direct = qft_sim(&["fft", input.to_str().unwrap(), "--mode", "direct"]);
    assert_eq!(exit_code(&direct), 0);
    let doc = parse_state_doc(&stdout_of(&direct)).unwrap();
    let expected = [[0.5, 0.0], [0.0, 0.5], [-0.5, 0.0], [0.0, -0.5]];
    for (a, b) in doc.amplitudes.iter().zip(&expected) {
        assert!((a[0] - b[0]).abs() < 1e-12 && (a[1] - b[1]).abs() < 1e-12);
    }

    let recursive = qft_sim(&["fft", input.to_str().unwrap(), "--mode", "recursive"]);
    let rec_doc = parse_state_doc(&stdout_of(&recursive)).unwrap();
    for (a, b) in rec_doc.amplitudes.iter().zip(&doc.amplitudes) {
        assert!((a[0] - b[0]).abs() < 1e-10 && (a[1] - b[1]).abs() < 1e-10);
    }
}

#[test]
fn fft_reports_operation_counts() {
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(99);
    let state = qft_sim::circuit::random_state(10, &mut rng);

    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("coeffs.json");
    std::fs::write(&input, serialize_state(&state)).unwrap();

    let out = qft_sim(&["fft", input.to_str().unwrap(), "--mode", "recursive", "--report-ops"]);
    assert_eq!(exit_code(&out), 0);
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(stderr.contains("complex_mults: 5120"), "stderr: {stderr}");
    assert!(stderr.contains("predicted complex_mults (n*2^(n-1)): 5120"), "stderr: {stderr}");

    // The counter only exists on the recursive path.
    let out = qft_sim(&["fft", input.to_str().unwrap(), "--mode", "direct", "--report-ops"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn count_reports_formulas() {
    let out = qft_sim(&["count", "-n", "3"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout_of(&out);
    assert!(text.contains("mqft_gates: 6 (formula n(n+1)/2 = 6)"));
    assert!(text.contains("swap_count: 1 (formula floor(n/2) = 1)"));
    assert!(text.contains("gate_count_total: 7"));

    let out = qft_sim(&["count", "-n", "0"]);
    assert!(stdout_of(&out).contains("gate_count_total: 0"));

    let out = qft_sim(&["count", "-n", "10", "--json"]);
    let doc: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(doc["formula"]["mqft_total"], serde_json::json!(55));
    assert_eq!(doc["report"]["cr_count"], serde_json::json!(45));
}

#[test]
fn simulate_round_trips_through_the_inverse_circuit() {
    // Pipe a state through QFT then its inverse via files; the composition
    // is the identity.
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
    let state = qft_sim::circuit::random_state(4, &mut rng);

    let dir = tempfile::tempdir().unwrap();
    let forward = dir.path().join("qft4.txt");
    let backward = dir.path().join("iqft4.txt");
    std::fs::write(&forward, serialize_circuit(&build_qft(4))).unwrap();
    std::fs::write(&backward, serialize_circuit(&build_qft(4).invert())).unwrap();
    let state_path = dir.path().join("in.json");
    std::fs::write(&state_path, serialize_state(&state)).unwrap();

    let mid = qft_sim(&[
        "simulate",
        forward.to_str().unwrap(),
        "--input",
        &format!("file:{}", state_path.display()),
    ]);
    let mid_path = dir.path().join("mid.json");
    std::fs::write(&mid_path, stdout_of(&mid)).unwrap();

    let out = qft_sim(&[
        "simulate",
        backward.to_str().unwrap(),
        "--input",
        &format!("file:{}", mid_path.display()),
    ]);
    let doc = parse_state_doc(&stdout_of(&out)).unwrap();
    let round_trip = StateVector64::new(doc.to_amps()).unwrap();
    assert!(round_trip.max_abs_diff(&state) < 1e-10);
}
