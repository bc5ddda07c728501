//! End-to-end checks of the `ramsey` binary: output contracts, exit
//! codes, and byte-level determinism across worker counts.

use std::path::Path;
use std::process::{Command, Output};

fn ramsey(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ramsey"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_str(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 stdout")
}

fn stdout_json(out: &Output) -> serde_json::Value {
    serde_json::from_str(&stdout_str(out)).expect("stdout is one JSON document")
}

fn write(path: &Path, text: &str) {
    std::fs::write(path, text).unwrap();
}

const C5_FILE: &str = "ramsey-graph v1 n=5 form=edges\n0 1\n0 4\n1 2\n2 3\n3 4\n";
const K6_FILE: &str = "ramsey-graph v1 n=6 form=bits\nFFFE\n";

#[test]
fn params_reports_union_bound() {
    let out = ramsey(&["params", "--n", "32", "--k", "10"]);
    assert!(out.status.success());
    let doc = stdout_json(&out);
    let ub = doc["union_bound_log2"].as_f64().unwrap();
    assert!((ub - -12.79).abs() <= 0.05, "{ub}");
    assert_eq!(doc["sampler"]["q"], 9);
    assert_eq!(doc["sampler"]["t"], 45);
    assert_eq!(doc["gh_threshold"], 17);
    assert_eq!(doc["lll_check_uniform"], false);
    assert!(doc["product_params"].as_array().unwrap().len() >= 4);
}

#[test]
fn check_rejects_k6_with_witness() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("k6.txt");
    write(&path, K6_FILE);
    let out = ramsey(&["check", "--k", "3", "--graph", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let doc = stdout_json(&out);
    assert_eq!(doc["is_ramsey"], false);
    assert_eq!(doc["witness_kind"], "clique");
    assert_eq!(doc["witness"].as_array().unwrap().len(), 3);
}

#[test]
fn five_cycle_checks_and_products() {
    let dir = tempfile::tempdir().unwrap();
    let c5 = dir.path().join("c5.txt");
    write(&c5, C5_FILE);

    let out = ramsey(&["check", "--k", "3", "--graph", c5.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_json(&out)["is_ramsey"], true);

    let prod = dir.path().join("c25.txt");
    let out = ramsey(&[
        "product",
        "--graphs",
        c5.to_str().unwrap(),
        c5.to_str().unwrap(),
        "--out",
        prod.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let out = ramsey(&["check", "--k", "9", "--graph", prod.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "C5 x C5 must verify 9-Ramsey");
}

#[test]
fn sample_graph_roundtrips_through_check_and_oracle() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.txt");
    let out = ramsey(&[
        "sample-graph",
        "--n",
        "16",
        "--k",
        "8",
        "--seed",
        "5",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let stderr = String::from_utf8(out.stderr).unwrap();
    let index_hex = stderr
        .lines()
        .find_map(|l| l.strip_prefix("index_hex: "))
        .expect("index reported on stderr")
        .trim()
        .to_string();

    // the oracle answer for (0, 1) matches the materialized file
    let graph_text = std::fs::read_to_string(&path).unwrap();
    let g = ramsey_core::parse_graph(&graph_text).unwrap();
    let out = ramsey(&[
        "oracle", "--n", "16", "--k", "8", "--index", &index_hex, "--u", "0", "--v", "1",
    ]);
    assert!(out.status.success());
    let bit = stdout_json(&out)["bit"].as_u64().unwrap();
    assert_eq!(bit == 1, g.has_edge(0, 1));

    // symmetric query
    let out2 = ramsey(&[
        "oracle", "--n", "16", "--k", "8", "--index", &index_hex, "--u", "1", "--v", "0",
    ]);
    assert_eq!(stdout_json(&out2)["bit"], bit);

    // regenerating from the reported index gives the identical file
    let path2 = dir.path().join("g2.txt");
    let out = ramsey(&[
        "sample-graph",
        "--n",
        "16",
        "--k",
        "8",
        "--index",
        &index_hex,
        "--out",
        path2.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert_eq!(graph_text, std::fs::read_to_string(&path2).unwrap());
}

#[test]
fn build_list_report_contract() {
    let out = ramsey(&[
        "build-list",
        "--n",
        "8",
        "--k",
        "4",
        "--mode",
        "poly-sampled",
        "--count",
        "5",
        "--seed",
        "1",
    ]);
    assert!(out.status.success());
    let text = stdout_str(&out);
    // field names are part of the contract
    for field in [
        "\"n\":",
        "\"k\":",
        "\"mode\":",
        "\"seed\":",
        "\"total\":",
        "\"ramsey_count\":",
        "\"fraction\":",
        "\"elapsed_sec\":",
        "\"items\":",
    ] {
        assert!(text.contains(field), "missing {field} in {text}");
    }
    let doc: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(doc["total"], 5);
    assert_eq!(doc["mode"], "poly-sampled");
    let items = doc["items"].as_array().unwrap();
    assert_eq!(items.len(), 5);
    for item in items {
        assert!(item["index_hex"].is_string());
        assert!(item["is_ramsey"].is_boolean());
        assert!(item["witness_kind"].is_string());
        assert!(item["witness"].is_array());
    }

    let out = ramsey(&[
        "build-list",
        "--n",
        "8",
        "--k",
        "4",
        "--mode",
        "poly-sampled",
        "--count",
        "5",
        "--seed",
        "1",
        "--summary",
    ]);
    let text = stdout_str(&out);
    assert!(text.contains("\"items_omitted\":true"));
    assert!(!text.contains("\"items\":["));
}

#[test]
fn vdw_color_output_verifies() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("col.txt");
    let out = ramsey(&["vdw", "color", "--k", "10", "--seed", "0"]);
    assert!(out.status.success());
    write(&path, &stdout_str(&out));
    let out = ramsey(&[
        "vdw",
        "verify",
        "--k",
        "10",
        "--file",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_json(&out)["valid"], true);

    // an all-zero coloring of the same length fails
    let bad = path.with_file_name("bad.txt");
    write(&bad, "vdw-coloring v1 n=17 k=10\n00000000000000000\n");
    let out = ramsey(&[
        "vdw",
        "verify",
        "--k",
        "10",
        "--file",
        bad.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));
    let doc = stdout_json(&out);
    assert_eq!(doc["valid"], false);
    assert_eq!(doc["violating_ap"]["step"], 1);
}

#[test]
fn vdw_sweep_reports_first_seed() {
    let out = ramsey(&["vdw", "sweep", "--k", "8", "--max-seeds", "16"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = stdout_json(&out);
    assert_eq!(doc["found"], true);
    assert_eq!(doc["seed"], 0);
    assert_eq!(doc["n"], 4);
    assert_eq!(doc["coloring"].as_str().unwrap().len(), 4);
}

#[test]
fn exit_codes_for_guards_and_usage() {
    // exhaustive space too large: resource guard, exit 3
    let out = ramsey(&[
        "build-list",
        "--n",
        "32",
        "--k",
        "10",
        "--mode",
        "poly-exhaustive",
        "--count",
        "1",
        "--seed",
        "0",
    ]);
    assert_eq!(out.status.code(), Some(3));

    // unknown mode: usage error, exit 2
    let out = ramsey(&[
        "build-list",
        "--n",
        "8",
        "--k",
        "4",
        "--mode",
        "bogus",
        "--count",
        "1",
        "--seed",
        "0",
    ]);
    assert_eq!(out.status.code(), Some(2));

    // missing required flag: clap usage error, exit 2
    let out = ramsey(&["check", "--k", "3"]);
    assert_eq!(out.status.code(), Some(2));

    // malformed graph file: parse error, exit 2
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("junk.txt");
    write(&path, "not a graph\n");
    let out = ramsey(&["check", "--k", "3", "--graph", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn fixed_seed_output_is_byte_identical_across_jobs() {
    let run_list = |jobs: &str| {
        let out = ramsey(&[
            "build-list",
            "--n",
            "12",
            "--k",
            "5",
            "--mode",
            "poly-sampled",
            "--count",
            "40",
            "--seed",
            "11",
            "--jobs",
            jobs,
        ]);
        assert!(out.status.success());
        let mut doc = stdout_json(&out);
        // elapsed_sec is wall-clock; everything else must match exactly
        doc["elapsed_sec"] = serde_json::json!(0);
        serde_json::to_string(&doc).unwrap()
    };
    assert_eq!(run_list("1"), run_list("8"));
    assert_eq!(run_list("1"), run_list("1"));

    let color = |jobs: &str| {
        let out = ramsey(&["vdw", "color", "--k", "10", "--seed", "3", "--jobs", jobs]);
        assert!(out.status.success());
        out.stdout
    };
    assert_eq!(color("1"), color("8"));
}
