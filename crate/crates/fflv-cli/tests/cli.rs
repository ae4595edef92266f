//! Drives the binary end to end: the documented invocations, the JSON
//! schema, table/JSON agreement, exit codes, and budget handling.

use std::process::{Command, Output};

use serde_json::Value;

fn run_env(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_fflv"));
    cmd.args(args);
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().expect("binary runs")
}

fn run(args: &[&str]) -> Output {
    run_env(args, &[])
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

fn stdout_ok(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "command {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf-8 output")
}

fn json_ok(args: &[&str]) -> Value {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    serde_json::from_str(&stdout_ok(&full)).expect("valid JSON")
}

#[test]
fn vertices_counts_agree_between_formats() {
    let table = stdout_ok(&["vertices", "--type", "A", "--weight", "1,1"]);
    assert!(table.contains("count: 7"), "table output:\n{table}");

    let report = json_ok(&["vertices", "--type", "A", "--weight", "1,1"]);
    assert_eq!(report["count"], 7);
    assert_eq!(report["vertices"].as_array().unwrap().len(), 7);
    assert_eq!(report["n"], 3);
    assert_eq!(report["type"], "A");

    let simplex = json_ok(&["vertices", "--type", "A", "--weight", "1,0"]);
    assert_eq!(simplex["count"], 3);

    let c1 = json_ok(&["vertices", "--type", "C", "--weight", "1"]);
    assert_eq!(c1["count"], 2);
}

#[test]
fn perm_lists_the_rank_three_table() {
    let report = json_ok(&["perm", "--type", "A", "--weight", "1,1"]);
    assert_eq!(report["count"], 6);
    let entries = report["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 6);

    let identity = &entries[0];
    assert_eq!(identity["family"], serde_json::json!([]));
    assert_eq!(identity["perm"], serde_json::json!([1, 2, 3]));
    assert_eq!(identity["mu"], serde_json::json!(["2", "1", "0"]));
    assert_eq!(identity["b"], "0");

    let cycle = entries
        .iter()
        .find(|e| e["perm"] == serde_json::json!([2, 3, 1]))
        .expect("w = [2,3,1] is listed");
    assert_eq!(cycle["family"], serde_json::json!(["1-2", "1-3"]));
    assert_eq!(cycle["point"]["1,2"], "1");
    assert_eq!(cycle["point"]["1,3"], "1");
    assert_eq!(cycle["point"]["2,3"], "0");
    assert_eq!(cycle["b"], "2");
}

#[test]
fn perm_type_c_reports_signed_permutations() {
    let report = json_ok(&["perm", "--type", "C", "--weight", "1,1"]);
    assert_eq!(report["count"], 8);
    for entry in report["entries"].as_array().unwrap() {
        let sigma = entry["signed_perm"]["sigma"].as_array().unwrap();
        let signs = entry["signed_perm"]["signs"].as_array().unwrap();
        assert_eq!(sigma.len(), 2);
        assert_eq!(signs.len(), 2);
    }
}

#[test]
fn simple_counts_match_schroder_numbers() {
    let rank4 = json_ok(&["simple", "--type", "A", "--weight", "1,1,1"]);
    assert_eq!(rank4["count"], 22);
    assert_eq!(rank4["schroder"], "22");
    assert_eq!(rank4["schroder_match"], true);
    for entry in rank4["entries"].as_array().unwrap() {
        assert_eq!(entry["oracle_simple"], true);
    }

    // the count depends only on the rank
    let spread = json_ok(&["simple", "--type", "A", "--weight", "2,3"]);
    assert_eq!(spread["count"], 6);
    assert_eq!(spread["schroder_match"], true);

    let c2 = json_ok(&["simple", "--type", "C", "--weight", "1,1"]);
    assert_eq!(c2["count"], 8);
}

#[test]
fn simple_rejects_singular_weights() {
    let out = run(&["simple", "--type", "A", "--weight", "1,0"]);
    assert_eq!(code(&out), 2);
    let stderr = String::from_utf8_lossy(&out.stderr).to_string();
    assert!(stderr.contains("regular"), "stderr: {stderr}");
}

#[test]
fn psi_and_its_inverse_round_trip() {
    assert_eq!(
        stdout_ok(&["psi", "--segments", "1-2,1-3", "--n", "3"]),
        "2,3,1\n"
    );
    assert_eq!(
        stdout_ok(&["psi-inv", "--perm", "3,1,4,2"]),
        "2-3,1-3,2-4\n"
    );
    assert_eq!(
        stdout_ok(&["psi", "--segments", "2-3,1-3,2-4", "--n", "4"]),
        "3,1,4,2\n"
    );

    let report = json_ok(&["psi-inv", "--perm", "3,4,1,2"]);
    assert_eq!(
        report["family"],
        serde_json::json!(["2-3", "1-3", "2-4", "1-4"])
    );

    let empty = json_ok(&["psi", "--segments", "", "--n", "3"]);
    assert_eq!(empty["perm"], serde_json::json!([1, 2, 3]));
}

#[test]
fn psi_rejects_bad_families() {
    // not intersection-closed: [1,3] and [2,4] overlap in [2,3]
    let out = run(&["psi", "--segments", "1-3,2-4", "--n", "4"]);
    assert_eq!(code(&out), 2);

    let out = run(&["psi", "--segments", "1-5", "--n", "3"]);
    assert_eq!(code(&out), 2);

    let out = run(&["psi-inv", "--perm", "1,1,2"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn char_prints_the_degree_polynomial() {
    assert_eq!(stdout_ok(&["char", "--weight", "1,1"]), "1 + 2q + 3q^2\n");
    assert_eq!(
        stdout_ok(&["char", "--weight", "2,3"]),
        "1 + q^2 + q^3 + 3q^5\n"
    );
    assert_eq!(stdout_ok(&["char", "--weight", "0"]), "2\n");

    let report = json_ok(&["char", "--weight", "1,1"]);
    assert_eq!(
        report["terms"],
        serde_json::json!([
            {"coeff": "1", "exponent": "0"},
            {"coeff": "2", "exponent": "1"},
            {"coeff": "3", "exponent": "2"},
        ])
    );

    let out = run(&["char", "--type", "C", "--weight", "1,1"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn verify_passes_at_small_ranks() {
    let report = json_ok(&["verify", "--type", "A", "--n", "3", "--weights-upto", "2"]);
    assert_eq!(report["pass"], true);
    let checks = report["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 5);
    for check in checks {
        assert_eq!(check["pass"], true, "check {check}");
    }

    let c = json_ok(&["verify", "--type", "C", "--n", "2", "--weights-upto", "2"]);
    assert_eq!(c["pass"], true);
}

#[test]
fn rank_caps_exit_with_the_budget_code() {
    let out = run(&["verify", "--type", "A", "--n", "8"]);
    assert_eq!(code(&out), 3);

    let out = run(&["vertices", "--type", "C", "--weight", "1,1,1,1,1"]);
    assert_eq!(code(&out), 3);

    // --max-rank lifts the cap
    assert_eq!(
        stdout_ok(&["psi", "--segments", "1-2", "--n", "7", "--max-rank", "7"]),
        "2,1,3,4,5,6,7\n"
    );
    let out = run(&["psi", "--segments", "1-2", "--n", "7"]);
    assert_eq!(code(&out), 3);
}

#[test]
fn lattice_count_agrees_with_the_dimension() {
    let report = json_ok(&["lattice-count", "--type", "A", "--weight", "1,1"]);
    assert_eq!(report["count"], "8");
    assert_eq!(report["oracle_count"], "8");
    assert_eq!(report["weyl_dim"], "8");
    assert_eq!(report["match"], true);

    let c = json_ok(&["lattice-count", "--type", "C", "--weight", "1,0"]);
    assert_eq!(c["count"], "4");
    assert_eq!(c["match"], true);
}

#[test]
fn budgets_cap_lattice_enumeration() {
    let out = run(&["lattice-count", "--type", "A", "--weight", "1,1", "--budget", "5"]);
    assert_eq!(code(&out), 3);

    let out = run_env(
        &["lattice-count", "--type", "A", "--weight", "1,1"],
        &[("FFLV_BUDGET", "5")],
    );
    assert_eq!(code(&out), 3);

    // the flag wins over the environment
    let out = run_env(
        &[
            "lattice-count",
            "--type",
            "A",
            "--weight",
            "1,1",
            "--budget",
            "1000000",
        ],
        &[("FFLV_BUDGET", "5")],
    );
    assert_eq!(code(&out), 0);

    let out = run_env(
        &["lattice-count", "--type", "A", "--weight", "1,1"],
        &[("FFLV_BUDGET", "many")],
    );
    assert_eq!(code(&out), 2);
}

#[test]
fn malformed_input_exits_with_the_input_code() {
    let out = run(&["vertices", "--type", "A", "--weight", "1,x"]);
    assert_eq!(code(&out), 2);

    let out = run(&["vertices", "--type", "A", "--weight=-1,1"]);
    assert_eq!(code(&out), 2);

    let out = run(&["vertices", "--type", "B", "--weight", "1,1"]);
    assert_eq!(code(&out), 2);

    let out = run(&["bogus"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn json_reports_reserialize_byte_identically() {
    for args in [
        &["vertices", "--type", "A", "--weight", "1,1"][..],
        &["perm", "--type", "C", "--weight", "1,1"][..],
        &["simple", "--type", "A", "--weight", "1,1,1"][..],
        &["char", "--weight", "2,3"][..],
        &["lattice-count", "--type", "C", "--weight", "1,1"][..],
    ] {
        let mut full = args.to_vec();
        full.extend(["--format", "json"]);
        let text = stdout_ok(&full);
        let parsed: Value = serde_json::from_str(&text).expect("valid JSON");
        let mut again = serde_json::to_string_pretty(&parsed).expect("serializes");
        again.push('\n');
        assert_eq!(text, again, "round trip changed bytes for {args:?}");
    }
}
