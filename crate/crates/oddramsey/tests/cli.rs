//! End-to-end tests of the command-line binary: subcommands, exit codes,
//! and file round trips through both serialization formats.

use std::path::Path;
use std::process::{Command, Output};

use oddramsey::colorings::Coloring;
use oddramsey::gf2::LinearCode;
use oddramsey::verify::Report;

fn oddramsey(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_oddramsey"))
        .args(args)
        .env_remove("ODDRAMSEY_BUDGET_SECS")
        .output()
        .expect("binary runs")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn ell_emits_result_json() {
    let out = oddramsey(&["ell", "--n", "7", "--S", "3,4,7"]);
    assert_eq!(out.status.code(), Some(0));
    let json = stdout_of(&out);
    let value: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(value["n"], 7);
    assert_eq!(value["value"], 2);
    assert_eq!(value["exhaustive"], true);
    let witness: LinearCode = serde_json::from_value(value["witness"].clone()).unwrap();
    assert_eq!(witness.dim(), 2);
}

#[test]
fn ell_flags_budget_exhaustion_via_exit_code() {
    let out = oddramsey(&["ell", "--n", "12", "--S", "6,12", "--budget-nodes", "100"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn rodd_prints_plain_value_by_default() {
    let out = oddramsey(&["rodd", "--n", "7", "--T", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_of(&out).trim(), "3");

    let out = oddramsey(&["rodd", "--n", "7", "--T", "1", "--format", "json"]);
    let value: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(value["value"]["value"], 3);
}

#[test]
fn oracle_matches_known_value() {
    let out = oddramsey(&["oracle", "--n", "4", "--T", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_of(&out).trim(), "3");
}

#[test]
fn color_then_verify_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("coloring.json");
    let out = oddramsey(&[
        "color",
        "--kind",
        "hampath",
        "--n",
        "7",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let coloring: Coloring =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(coloring.num_colors(), 7);

    let out = oddramsey(&["verify", path.to_str().unwrap(), "--spanning", "--T", "1,2,3"]);
    assert_eq!(out.status.code(), Some(0));
    let report: Report = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert!(report.pass && report.exhaustive);
}

#[test]
fn verify_reads_edge_lists_and_fails_with_witness() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("mono.edges");
    let mono = Coloring::monochromatic(4, 1).unwrap();
    std::fs::write(&path, mono.to_edge_list()).unwrap();
    let out = oddramsey(&["verify", path.to_str().unwrap(), "--spanning", "--T", "2"]);
    assert_eq!(out.status.code(), Some(1));
    let report: Report = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert!(!report.pass);
    assert!(report.witness.is_some());
}

#[test]
fn verify_unique_modes() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("unique.json");
    let out = oddramsey(&[
        "color",
        "--kind",
        "unique-spanning",
        "--n",
        "6",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let out = oddramsey(&["verify", path.to_str().unwrap(), "--unique-spanning"]);
    assert_eq!(out.status.code(), Some(0));

    let path = dir.path().join("cliques.json");
    let out = oddramsey(&[
        "color",
        "--kind",
        "clique-unique",
        "--n",
        "6",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let out = oddramsey(&["verify", path.to_str().unwrap(), "--unique-cliques"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn even_witness_mode_reports_null_for_tight_coloring() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("ham6.json");
    oddramsey(&[
        "color",
        "--kind",
        "hampath",
        "--n",
        "6",
        "--out",
        path.to_str().unwrap(),
    ]);
    let out = oddramsey(&["verify", path.to_str().unwrap(), "--even-witness"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_of(&out).trim(), "null");
}

#[test]
fn bch_output_reloads_and_reverifies() {
    let out = oddramsey(&["bch", "--s", "4", "--d", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let code: LinearCode = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!((code.length(), code.dim()), (15, 7));
    assert!(code.min_nonzero_weight().unwrap().unwrap() >= 5);
}

#[test]
fn construct_command_avoids_weights() {
    let out = oddramsey(&["construct", "--n", "20", "--T", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let code: LinearCode = serde_json::from_str(&stdout_of(&out)).unwrap();
    let dist = code.weight_distribution().unwrap();
    assert!(!dist.contains_key(&2) && !dist.contains_key(&18) && !dist.contains_key(&20));
}

#[test]
fn from_code_coloring_via_file() {
    let dir = tempfile::tempdir().unwrap();
    let code_path = dir.path().join("code.json");
    let out = oddramsey(&["ell", "--n", "5", "--S", "1,4,5"]);
    let result: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    std::fs::write(
        &code_path,
        serde_json::to_string(&result["witness"]).unwrap(),
    )
    .unwrap();
    let coloring_path = dir.path().join("derived.json");
    let out = oddramsey(&[
        "color",
        "--kind",
        "from-code",
        "--n",
        "5",
        "--T",
        "1",
        "--code",
        code_path.to_str().unwrap(),
        "--out",
        coloring_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let out = oddramsey(&["verify", coloring_path.to_str().unwrap(), "--spanning", "--T", "1"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn table_reproduces_known_rows() {
    let out = oddramsey(&["table", "thm33c", "--tmax", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "n,set,predicted,computed,method,exhaustive,runtime_ms"
    );
    let rows: Vec<Vec<&str>> = lines.map(|l| l.split(',').collect()).collect();
    // Runtime column varies; everything before it is golden.
    assert!(rows[0].starts_with(&["4", "\"{2", "4}\"", "1", "1", "ell_exact", "true"]));
    assert!(rows[1].starts_with(&["8", "\"{4", "8}\"", "3", "3", "ell_exact", "true"]));
}

#[test]
fn table_thm33b_and_cor13a() {
    let out = oddramsey(&["table", "thm33b"]);
    assert_eq!(out.status.code(), Some(0));
    let out = oddramsey(&["table", "cor13a", "--tmax", "3", "--budget-nodes", "20000000"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn malformed_json_is_an_input_error_with_location() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("broken.json");
    std::fs::write(&path, "{\"n\": 4, \"r\": }").unwrap();
    let out = oddramsey(&["verify", path.to_str().unwrap(), "--spanning", "--T", "2"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("1:"), "diagnostic should carry line/column: {err}");
}

#[test]
fn out_of_range_arguments_exit_with_input_error() {
    assert_eq!(oddramsey(&["ell", "--n", "4", "--S", "9"]).status.code(), Some(2));
    assert_eq!(oddramsey(&["oracle", "--n", "9", "--T", "1"]).status.code(), Some(2));
    assert_eq!(oddramsey(&["bch", "--s", "2", "--d", "1"]).status.code(), Some(2));
}

#[test]
fn seeded_random_coloring_is_reproducible() {
    let a = oddramsey(&["color", "--kind", "random", "--n", "8", "--r", "3", "--seed", "7"]);
    let b = oddramsey(&["color", "--kind", "random", "--n", "8", "--r", "3", "--seed", "7"]);
    assert_eq!(stdout_of(&a), stdout_of(&b));
    let c = oddramsey(&["color", "--kind", "random", "--n", "8", "--r", "3", "--seed", "8"]);
    assert_ne!(stdout_of(&a), stdout_of(&c));
}

#[test]
fn output_is_byte_identical_across_thread_settings() {
    let a = oddramsey(&["rodd", "--n", "9", "--T", "1,3", "--threads", "1"]);
    let b = oddramsey(&["rodd", "--n", "9", "--T", "1,3", "--threads", "4"]);
    assert_eq!(a.status.code(), b.status.code());
    assert_eq!(stdout_of(&a), stdout_of(&b));
}

#[test]
fn budget_secs_env_is_honoured() {
    // A near-zero wall clock budget must abort the big search.
    let out = Command::new(env!("CARGO_BIN_EXE_oddramsey"))
        .args(["ell", "--n", "12", "--S", "6,12"])
        .env("ODDRAMSEY_BUDGET_SECS", "0.05")
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn written_artifacts_reload() {
    let dir = tempfile::tempdir().unwrap();
    let path: &Path = &dir.path().join("ell.json");
    let out = oddramsey(&[
        "ell",
        "--n",
        "9",
        "--S",
        "3,6,9",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let reloaded: oddramsey::codes::EllResult =
        serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    assert_eq!(reloaded.value, 4);
    assert!(reloaded.weights.admits(&reloaded.witness).unwrap());
}
