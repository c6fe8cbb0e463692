//! End-to-end tests of the binary: exact bytes, exit codes, and the
//! JSON-lines round trip.

use std::process::{Command, Output};

use markov_cluster::{c_matrix, ExtendedMatrix, FareyTriple, MatrixJson};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_markov-cluster"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).expect("utf-8 output")
}

#[test]
fn mutate_prints_the_canonical_triple() {
    assert_eq!(stdout(&["mutate", "0/1,-1/1,inf", "-1"]), "0/1,1/1,1/0\n");
    // Letters apply left to right.
    assert_eq!(stdout(&["mutate", "0/1,-1/1,inf", "-1,0"]), "2/1,1/1,1/0\n");
    // Input order does not matter; slots are recovered from parity.
    assert_eq!(stdout(&["mutate", "inf,-1/1,0/1", "-1"]), "0/1,1/1,1/0\n");
}

#[test]
fn path_prints_the_descent_word() {
    assert_eq!(stdout(&["path", "2/1,1/1,inf"]), "0,-1\n");
    assert_eq!(stdout(&["path", "0/1,-1/1,inf"]), "\n");
    assert_eq!(stdout(&["path", "0/1,-1/1,-1/2"]), "inf\n");
}

#[test]
fn enumerate_counts_the_tree() {
    assert_eq!(stdout(&["enumerate", "--depth", "0", "--count-only"]), "1\n");
    assert_eq!(stdout(&["enumerate", "--depth", "2", "--count-only"]), "10\n");
}

#[test]
fn enumerate_depth_zero_is_the_root_record() {
    let out = stdout(&["enumerate", "--depth", "0"]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 1);
    let record: serde_json::Value = serde_json::from_str(lines[0]).unwrap();
    assert_eq!(record["triple"][0], "0/1");
    assert_eq!(record["triple"][1], "-1/1");
    assert_eq!(record["triple"][2], "1/0");
    assert_eq!(record["depth"], 0);
    assert_eq!(record["word"].as_array().unwrap().len(), 0);
}

#[test]
fn enumerated_records_round_trip_losslessly_to_depth_8() {
    let out = stdout(&["enumerate", "--depth", "8"]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 1 + 3 * ((1 << 8) - 1));
    for line in lines {
        let record: serde_json::Value = serde_json::from_str(line).unwrap();

        // The triple parses back to a triple that renders identically.
        let joined = record["triple"]
            .as_array()
            .unwrap()
            .iter()
            .map(|v| v.as_str().unwrap())
            .collect::<Vec<_>>()
            .join(",");
        let triple: FareyTriple = joined.parse().unwrap();
        assert_eq!(triple.to_string(), joined);

        // The matrices parse back to the same extended matrix.
        let parts: MatrixJson = serde_json::from_value(serde_json::json!({
            "principal": record["principal"],
            "complementary": record["complementary"],
            "columns": ["0", "-1", "inf"],
        }))
        .unwrap();
        let matrix = ExtendedMatrix::try_from(&parts).unwrap();
        assert_eq!(matrix, c_matrix(&triple).unwrap());

        let depth = record["depth"].as_u64().unwrap() as usize;
        assert_eq!(depth, record["word"].as_array().unwrap().len());
        assert_eq!(depth, triple.path_to_initial().unwrap().len());
    }
}

#[test]
fn gmatrix_matches_matrix_g_only() {
    let a = stdout(&["gmatrix", "0/1,1/1,inf"]);
    let b = stdout(&["matrix", "0/1,1/1,inf", "--g-only"]);
    assert_eq!(a, b);
    assert_eq!(a, " 1  2  0\n 0 -1  0\n 0  0  1\n");
}

#[test]
fn matrix_accepts_a_word_instead_of_a_triple() {
    let by_triple = stdout(&["matrix", "0/1,1/1,inf", "--format", "json"]);
    let by_word = stdout(&["matrix", "--word", "-1", "--format", "json"]);
    assert_eq!(by_triple, by_word);
}

#[test]
fn oracle_flag_self_checks() {
    let out = run(&["matrix", "7/3,2/1,5/2", "--oracle"]);
    assert!(out.status.success());
}

#[test]
fn verify_smoke_mode_passes_quickly() {
    let out = run(&["verify", "--depth", "3", "--symbolic-depth", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("PASS  oracle_equality"));
    assert!(text.trim_end().ends_with("verification passed"));
}

#[test]
fn verify_reports_json_when_asked() {
    let out = stdout(&["verify", "--depth", "2", "--symbolic-depth", "1", "--format", "json"]);
    let report: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
    let checks = report["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 11);
    assert!(checks.iter().all(|c| c["passed"] == true));
}

#[test]
fn injected_fault_fails_naming_the_triple() {
    let out = run(&["verify", "--depth", "4", "--symbolic-depth", "1", "--inject-fault"]);
    assert_eq!(out.status.code(), Some(1));
    let all = format!(
        "{}{}",
        String::from_utf8_lossy(&out.stdout),
        String::from_utf8_lossy(&out.stderr)
    );
    assert!(all.contains("FAIL  oracle_equality"));
    assert!(all.contains("-2/1,-1/1,-3/2"), "no counterexample triple in: {all}");
}

#[test]
fn usage_errors_exit_2_and_name_the_violated_invariant() {
    let cases: &[(&[&str], &str)] = &[
        (&["matrix", "0/1,1/3,inf"], "not Farey neighbors"),
        (&["matrix", "0/1,2/1,inf"], "parity class"),
        (&["path", "x,1/1,inf"], "cannot parse"),
        (&["mutate", "0/1,-1/1,inf", "3"], "as a mutation letter"),
        (&["enumerate", "--depth", "21", "--count-only"], "exceeds the cap"),
        (&["verify", "--symbolic-depth", "11"], "exceeds the cap"),
        (&["plot-gvectors", "--depth", "15"], "exceeds the plot cap"),
    ];
    for (args, needle) in cases {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "args: {args:?}");
        let err = String::from_utf8_lossy(&out.stderr);
        assert!(err.contains(needle), "args {args:?}: stderr {err:?}");
    }
}
