use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mckay-lab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut all = args.to_vec();
    all.push("--json");
    let out = run(&all);
    let value: Value = serde_json::from_slice(&out.stdout).expect("stdout is JSON");
    (out.status.code().unwrap(), value)
}

fn envelope_ok(v: &Value, command: &str) {
    assert_eq!(v["command"], command);
    assert_eq!(v["version"], env!("CARGO_PKG_VERSION"));
    assert!(v["diagnostics"].is_array());
}

#[test]
fn j_series_envelope() {
    let (code, v) = json(&["series", "j", "--order", "4"]);
    assert_eq!(code, 0);
    envelope_ok(&v, "series j");
    assert_eq!(v["result"]["valuation"], -1);
    let coeffs: Vec<&str> = v["result"]["coeffs"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c.as_str().unwrap())
        .collect();
    assert_eq!(
        coeffs,
        ["1", "744", "196884", "21493760", "864299970", "20245856256"]
    );
}

#[test]
fn negative_order_is_a_usage_error() {
    let out = run(&["series", "j", "--order", "-5"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
    assert_eq!(run(&["series", "j", "--bogus"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        run(&["chartab", "--name", "monster"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["series", "eisenstein", "--weight", "5"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn other_series() {
    let (_, e4) = json(&["series", "eisenstein", "--weight", "4", "--order", "2"]);
    assert_eq!(
        e4["result"]["coeffs"],
        serde_json::json!(["1", "240", "2160"])
    );
    let (_, delta) = json(&["series", "delta", "--order", "3"]);
    assert_eq!(
        delta["result"]["coeffs"],
        serde_json::json!(["1", "-24", "252"])
    );
    let (_, root) = json(&["series", "cube-root", "--order", "2"]);
    assert_eq!(
        root["result"]["coeffs"],
        serde_json::json!(["1", "248", "4124"])
    );
}

#[test]
fn conjecture_example() {
    let out = run(&["conjecture", "--name", "binary-icosahedral", "--p", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("4 = 4"));
    let (code, v) = json(&["conjecture", "--name", "binary-icosahedral", "--p", "2"]);
    assert_eq!(code, 0);
    let r = &v["result"];
    assert_eq!(r["sylow_size"], 8);
    assert_eq!(r["normalizer_size"], 24);
    assert_eq!(r["sylow_is_quaternion8"], true);
    assert_eq!(
        (r["count_g"].as_u64(), r["count_n"].as_u64()),
        (Some(4), Some(4))
    );
    assert_eq!(
        run(&["conjecture", "--name", "cyclic-6", "--p", "4"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn conjecture_batch() {
    let (code, v) = json(&["conjecture", "--all-builders"]);
    assert_eq!(code, 0);
    let reports = v["result"].as_array().unwrap();
    assert_eq!(reports.len(), 39);
    assert!(reports.iter().all(|r| r["holds"] == true));
}

#[test]
fn group_and_table() {
    let (_, info) = json(&["group", "info", "--name", "binary-icosahedral"]);
    envelope_ok(&info, "group info");
    assert_eq!(info["result"]["order"], 120);
    assert_eq!(info["result"]["class_count"], 9);
    let sizes: u64 = info["result"]["class_sizes"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_u64().unwrap())
        .sum();
    assert_eq!(sizes, 120);
    let (_, table) = json(&["chartab", "--name", "binary-icosahedral"]);
    let mut degrees: Vec<u64> = table["result"]["degrees"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_u64().unwrap())
        .collect();
    degrees.sort_unstable();
    assert_eq!(degrees, [1, 2, 2, 3, 3, 4, 4, 5, 6]);
    // smallest prime 1 mod 60 whose square exceeds 480
    assert_eq!(table["result"]["prime"], 61);
    let entries = table["result"]["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 9);
    // each entry is an exact cyclotomic rendering that parses back
    for row in entries {
        for cell in row.as_array().unwrap() {
            cell.as_str()
                .unwrap()
                .parse::<mckay_core::Cyclotomic>()
                .unwrap();
        }
    }
}

#[test]
fn quiver_and_dot() {
    let dir = tempfile::tempdir().unwrap();
    let dot = dir.path().join("e8.dot");
    let (code, v) = json(&[
        "quiver",
        "--name",
        "binary-icosahedral",
        "--dot",
        dot.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["type"], "affine E8");
    assert_eq!(v["result"]["checks"]["passed"], true);
    let text = std::fs::read_to_string(&dot).unwrap();
    assert!(text.starts_with("graph"));
    assert_eq!(text.matches("doublecircle").count(), 1);
    assert_eq!(text.matches(" -- ").count(), 8);
    let (code, v) = json(&["quiver", "--name", "sl2-3"]);
    assert_eq!(code, 1);
    assert!(v["result"].is_null());
    assert_eq!(v["diagnostics"].as_array().unwrap().len(), 1);
}

#[test]
fn moonshine_commands() {
    let (code, v) = json(&[
        "moonshine",
        "decompose",
        "--coeff-index",
        "4",
        "--max-irreps",
        "6",
        "--max-mult",
        "3",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["target"], "20245856256");
    let rendered: Vec<&str> = v["result"]["decompositions"]
        .as_array()
        .unwrap()
        .iter()
        .map(|d| d["rendered"].as_str().unwrap())
        .collect();
    assert_eq!(
        rendered,
        ["2r1 + 3r2 + 2r3 + r4 + r6", "3r1 + 3r2 + r3 + 2r4 + r5"]
    );
    let (_, tau) = json(&["moonshine", "meaning-of-life", "--source", "tau"]);
    assert_eq!(tau["result"]["residue"], 42);
    let (_, j) = json(&[
        "moonshine",
        "meaning-of-life",
        "--source",
        "j",
        "--start",
        "-1",
    ]);
    assert_eq!(j["result"]["residue"], 53);
    let (code, order) = json(&["moonshine", "order-check"]);
    assert_eq!(code, 0);
    assert_eq!(
        order["result"]["order"],
        "808017424794512875886459904961710757005754368000000000"
    );
    assert_eq!(
        run(&[
            "moonshine",
            "decompose",
            "--coeff-index",
            "4",
            "--max-mult",
            "11"
        ])
        .status
        .code(),
        Some(2)
    );
}

#[test]
fn custom_dims_file() {
    let dir = tempfile::tempdir().unwrap();
    let good = dir.path().join("dims.txt");
    std::fs::write(&good, mckay_core::moonshine::BUNDLED_MONSTER_DIMS).unwrap();
    let (code, _) = json(&[
        "moonshine",
        "--monster-dims",
        good.to_str().unwrap(),
        "order-check",
    ]);
    assert_eq!(code, 0);
    let bad = dir.path().join("bad.txt");
    std::fs::write(&bad, "1\n196884\n").unwrap();
    let out = run(&[
        "moonshine",
        "decompose",
        "--coeff-index",
        "1",
        "--monster-dims",
        bad.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
}

#[test]
fn selfcheck_passes() {
    let (code, v) = json(&["selfcheck"]);
    let results = v["result"].as_array().unwrap();
    assert_eq!(results.len(), 10);
    for r in results {
        assert_eq!(r["passed"], true, "{r}");
    }
    assert_eq!(code, 0);
}
