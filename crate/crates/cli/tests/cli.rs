//! End-to-end tests of the divgraph binary: output shapes against the
//! shipped schema, determinism under --seed, exit codes, and the
//! --n/--type equivalence.

use std::process::{Command, Output};

fn divgraph(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_divgraph"))
        .args(args)
        .env_remove("DIVGRAPH_MAX_VERTICES")
        .output()
        .expect("binary runs")
}

fn divgraph_env(args: &[&str], key: &str, value: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_divgraph"))
        .args(args)
        .env(key, value)
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> serde_json::Value {
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

// ---- tiny structural validator for the shipped schema ----

fn schema() -> serde_json::Value {
    let text = std::fs::read_to_string(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/../../docs/report.schema.json"
    ))
    .expect("schema shipped in docs/");
    serde_json::from_str(&text).expect("schema is JSON")
}

fn resolve<'a>(root: &'a serde_json::Value, node: &'a serde_json::Value) -> &'a serde_json::Value {
    match node.get("$ref").and_then(|r| r.as_str()) {
        Some(path) => {
            let mut cur = root;
            for part in path.trim_start_matches("#/").split('/') {
                cur = &cur[part];
            }
            cur
        }
        None => node,
    }
}

fn validate(root: &serde_json::Value, node: &serde_json::Value, value: &serde_json::Value) {
    let node = resolve(root, node);
    if let Some(variants) = node.get("oneOf").and_then(|v| v.as_array()) {
        let ok = variants.iter().any(|var| {
            std::panic::catch_unwind(std::panic::AssertUnwindSafe(|| validate(root, var, value)))
                .is_ok()
        });
        assert!(ok, "value {value} matches no oneOf branch");
        return;
    }
    if let Some(allowed) = node.get("enum").and_then(|v| v.as_array()) {
        assert!(
            allowed.contains(value),
            "value {value} not in enum {allowed:?}"
        );
    }
    match node.get("type").and_then(|t| t.as_str()) {
        Some("object") => {
            let obj = value
                .as_object()
                .unwrap_or_else(|| panic!("{value} is not an object"));
            if let Some(required) = node.get("required").and_then(|r| r.as_array()) {
                for key in required {
                    let key = key.as_str().unwrap();
                    assert!(
                        obj.contains_key(key),
                        "missing required key {key} in {value}"
                    );
                }
            }
            if let Some(props) = node.get("properties").and_then(|p| p.as_object()) {
                for (key, sub) in props {
                    if let Some(v) = obj.get(key) {
                        validate(root, sub, v);
                    }
                }
            }
            if let Some(extra) = node.get("additionalProperties") {
                if extra.is_object() {
                    let known: Vec<&String> = node
                        .get("properties")
                        .and_then(|p| p.as_object())
                        .map(|p| p.keys().collect())
                        .unwrap_or_default();
                    for (key, v) in obj {
                        if !known.contains(&key) {
                            validate(root, extra, v);
                        }
                    }
                }
            }
        }
        Some("array") => {
            let arr = value
                .as_array()
                .unwrap_or_else(|| panic!("{value} is not an array"));
            if let Some(items) = node.get("items") {
                for v in arr {
                    validate(root, items, v);
                }
            }
        }
        Some("string") => {
            let s = value
                .as_str()
                .unwrap_or_else(|| panic!("{value} is not a string"));
            if node.get("pattern").and_then(|p| p.as_str()) == Some("^-?[0-9]+$") {
                let digits = s.strip_prefix('-').unwrap_or(s);
                assert!(
                    !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit()),
                    "{s} is not a decimal integer"
                );
            }
        }
        Some("integer") => {
            assert!(
                value.is_i64() || value.is_u64(),
                "{value} is not an integer"
            );
        }
        Some("boolean") => assert!(value.is_boolean(), "{value} is not a boolean"),
        Some("null") => assert!(value.is_null(), "{value} is not null"),
        _ => {}
    }
}

fn validate_against(def: &str, value: &serde_json::Value) {
    let root = schema();
    let node = root["$defs"][def].clone();
    validate(&root, &node, value);
}

// ---- tests ----

#[test]
fn info_36_matches_expected_invariants() {
    let out = divgraph(&["info", "--n", "36"]);
    let json = stdout_json(&out);
    validate_against("info", &json);
    assert_eq!(json["v"], 9);
    assert_eq!(json["e"], 27);
    assert_eq!(json["clique"], 5);
    assert_eq!(json["planar"], false);
    assert_eq!(json["independence"], 3);
    assert_eq!(json["diameter"], 2);
}

#[test]
fn n_and_type_routes_are_identical() {
    let by_n = divgraph(&["info", "--n", "36"]);
    let by_type = divgraph(&["info", "--type", "2,2"]);
    assert!(by_n.status.success() && by_type.status.success());
    assert_eq!(by_n.stdout, by_type.stdout);

    let by_n = divgraph(&["charpoly", "--n", "30"]);
    let by_type = divgraph(&["charpoly", "--type", "1,1,1"]);
    assert_eq!(by_n.stdout, by_type.stdout);
}

#[test]
fn charpoly_pq() {
    let json = stdout_json(&divgraph(&["charpoly", "--type", "1,1"]));
    validate_against("charpoly", &json);
    assert_eq!(
        json["charpoly"],
        serde_json::json!(["0", "-4", "-5", "0", "1"])
    );
    assert_eq!(json["display"], "λ^4 - 5·λ^2 - 4·λ");
}

#[test]
fn spectrum_is_deterministic_for_fixed_seed() {
    let args = ["spectrum", "--type", "1,1,1,1,1,1,1", "--seed", "11"];
    let first = divgraph(&args);
    let second = divgraph(&args);
    assert!(first.status.success());
    assert_eq!(
        first.stdout, second.stdout,
        "fixed seed must be byte-identical"
    );

    let json = stdout_json(&first);
    validate_against("spectrum", &json);
    assert_eq!(json["multiplicities"]["-2"], 42);
    assert_eq!(json["multiplicities"]["-1"], 35);
    assert_eq!(json["multiplicities"]["1"], 14);
    assert_eq!(json["multiplicities"]["0"], 0);

    // a different seed draws different primes but certifies the same counts
    let other = stdout_json(&divgraph(&[
        "spectrum",
        "--type",
        "1,1,1,1,1,1,1",
        "--seed",
        "99",
    ]));
    assert_eq!(json["multiplicities"], other["multiplicities"]);
    assert_eq!(json["det"], other["det"]);
}

#[test]
fn verify_thm_main_prints_quotient() {
    let out = divgraph(&["verify", "thm-main", "--type", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let json = stdout_json(&out);
    validate_against("verify", &json);
    assert_eq!(json["ok"], true);
    assert_eq!(json["quotient"].as_array().unwrap().len(), 10); // degree 9
}

#[test]
fn verify_checks_run() {
    for args in [
        vec!["verify", "thm-main2", "--type", "1,1"],
        vec!["verify", "mobius", "--n", "30"],
        vec!["verify", "minus-one", "--type", "2,2"],
        vec!["verify", "det-period", "--a-max", "11"],
        vec!["verify", "mod6", "--a-max", "8"],
        vec!["verify", "kernel-pq", "--type", "7,7"],
        vec!["verify", "oeis", "--omega-max", "6"],
    ] {
        let out = divgraph(&args);
        assert_eq!(
            out.status.code(),
            Some(0),
            "{args:?} stderr: {}",
            String::from_utf8_lossy(&out.stderr)
        );
        let json = stdout_json(&out);
        assert_eq!(json["ok"], true, "{args:?}");
    }
}

#[test]
fn table_csv_matches_expected_values() {
    let out = divgraph(&[
        "table",
        "--lambda",
        "0",
        "--omega-max",
        "6",
        "--format",
        "csv",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text, "omega,m_0\n2,1\n3,0\n4,2\n5,0\n6,5\n");
}

#[test]
fn table_json_validates() {
    let json = stdout_json(&divgraph(&["table", "--omega-max", "4"]));
    validate_against("table", &json);
    assert_eq!(json["rows"].as_array().unwrap().len(), 12); // 3 omegas × 4 lambdas
}

#[test]
fn export_dot() {
    let out = divgraph(&["export", "--n", "6"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("graph divisibility {"));
    assert!(text.contains("label=\"6\""));

    let out = divgraph(&["export", "--n", "36", "--labels", "subfields"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("F_{2^36}"));
}

#[test]
fn usage_errors_exit_2() {
    // neither --n nor --type
    assert_eq!(divgraph(&["info"]).status.code(), Some(2));
    // both at once
    assert_eq!(
        divgraph(&["info", "--n", "6", "--type", "1,1"])
            .status
            .code(),
        Some(2)
    );
    // unknown subcommand
    assert_eq!(divgraph(&["frobnicate"]).status.code(), Some(2));
    // precondition violations map to usage errors
    assert_eq!(
        divgraph(&["verify", "kernel-pq", "--type", "2,2"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        divgraph(&["verify", "thm-main2", "--type", "2"])
            .status
            .code(),
        Some(2)
    );
    // unsupported format
    assert_eq!(
        divgraph(&["info", "--n", "6", "--format", "csv"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn jobs_flag_is_accepted() {
    let out = divgraph(&["table", "--omega-max", "4", "--jobs", "1"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn guard_refusals_exit_3() {
    let out = divgraph_env(&["info", "--n", "36"], "DIVGRAPH_MAX_VERTICES", "4");
    assert_eq!(out.status.code(), Some(3));
    let out = divgraph_env(
        &["spectrum", "--type", "1,1,1,1,1,1,1,1,1,1,1,1,1,1"],
        "DIVGRAPH_MAX_VERTICES",
        "8192",
    );
    assert_eq!(out.status.code(), Some(3)); // 2^14 vertices over the default guard
}

#[test]
fn selftest_passes_and_respects_guards() {
    let out = divgraph(&["selftest", "--seed", "3"]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "stdout: {}stderr: {}",
        String::from_utf8_lossy(&out.stdout),
        String::from_utf8_lossy(&out.stderr)
    );
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().filter(|l| l.contains("PASS")).count(), 11);

    // a different seed reaches the same verdicts
    let out2 = divgraph(&["selftest", "--seed", "77"]);
    assert_eq!(out2.status.code(), Some(0));

    // with a tiny vertex guard the oversized checks refuse gracefully
    let refused = divgraph_env(&["selftest"], "DIVGRAPH_MAX_VERTICES", "8");
    assert_eq!(refused.status.code(), Some(3));
    let text = String::from_utf8(refused.stdout).unwrap();
    assert!(text.contains("REFUSED"));
    assert!(!text.contains("FAIL"));
}
