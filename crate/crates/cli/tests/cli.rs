use std::process::Command;

use proptest::prelude::*;
use reciprocity_cli::commands::{
    cmd_chromatic, cmd_examples, cmd_gamma, cmd_matrix, cmd_poset, cmd_verify, MatrixName,
    MethodArg, RunConfig,
};
use reciprocity_cli::spec::{parse_edge_set, parse_rational, AllowedSpec, GroupSpec};
use reciprocity_cli::Format;
use reciprocity_core::Limits;
use serde_json::Value;

fn bin(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_reciprocity"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn coloring(v: usize, group: &str, allowed: &str) -> RunConfig {
    RunConfig::new(v).with_allowed(group, allowed).unwrap()
}

fn values(json: &Value) -> Vec<String> {
    json["values"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["value"].as_str().unwrap().to_string())
        .collect()
}

#[test]
fn poset_row_counts() {
    for (v, rows) in [(2, 1), (3, 2), (4, 15)] {
        let out = cmd_poset(&RunConfig::new(v)).unwrap();
        assert_eq!(out.json["count"], rows);
        assert_eq!(out.tables[0].rows.len(), rows);
    }
    let out = cmd_poset(&RunConfig::new(4)).unwrap();
    let first = &out.json["members"][0];
    assert_eq!(first["girth"], "inf");
    assert_eq!(first["c"], 4);
    assert_eq!(first["class"], "empty");
    let last = &out.json["members"][14];
    assert_eq!(last["mask"], 0b111111);
    assert_eq!(last["class"], "K4");
}

#[test]
fn poset_over_cap() {
    let err = cmd_poset(&RunConfig::new(9)).unwrap_err();
    assert_eq!(err.exit_code(), 2);
}

#[test]
fn matrix_v3_paper_order() {
    let cfg = RunConfig {
        paper_order: true,
        ..RunConfig::new(3)
    };
    let out = cmd_matrix(&cfg, MatrixName::M, None, false, false).unwrap();
    assert_eq!(
        out.json["rows"],
        serde_json::json!([["-1", "1 - 3r + 3r^2"], ["0", "1"]])
    );
    assert_eq!(out.json["order"], "reversed");
}

#[test]
fn matrix_v4_cells_and_errata() {
    let out = cmd_matrix(&RunConfig::new(4), MatrixName::M, None, true, true).unwrap();
    let block = |row: &str, col: &str| {
        out.json["blocks"]
            .as_array()
            .unwrap()
            .iter()
            .find(|b| b["row_class"] == row && b["col_class"] == col)
            .map(|b| b["entry"].as_str().unwrap().to_string())
    };
    assert_eq!(block("C4", "empty").unwrap(), "1 - 4r + 6r^2 - 4r^3");
    assert_eq!(block("K4", "K3").unwrap(), "-1 + 3r");
    assert_eq!(block("C4", "K3"), None);
    let errata = out.json["errata"].as_array().unwrap();
    assert_eq!(errata.len(), 2);
    assert!(errata.iter().all(|e| e["status"] == "erratum"));
    assert_eq!(errata[1]["computed"], "1 - 5r + 10r^2 - 8r^3");
    assert_eq!(errata[1]["printed"], "1 - 5r + 10r^2 - 3r^3");
    assert_eq!(out.exit_code, 0);
}

#[test]
fn matrix_evaluated() {
    let r = parse_rational("1/2").unwrap();
    let out = cmd_matrix(&RunConfig::new(3), MatrixName::M, Some(&r), false, false).unwrap();
    // 1 - 3/2 + 3/4
    assert_eq!(
        out.json["rows"],
        serde_json::json!([["1", "0"], ["1/4", "-1"]])
    );
    let out = cmd_matrix(&RunConfig::new(3), MatrixName::Mobius, None, false, false).unwrap();
    assert_eq!(out.json["rows"][1][0], "-1");
    let out = cmd_matrix(&RunConfig::new(3), MatrixName::Jinv, Some(&r), false, false).unwrap();
    assert_eq!(out.json["rows"][1][0], "-1/8");
}

#[test]
fn gamma_examples() {
    let out = cmd_gamma(&coloring(3, "Z7", "nonzero")).unwrap();
    assert_eq!(values(&out.json), ["1", "30/49"]);
    assert_eq!(out.json["alpha"], "6/7");
    // f(f-1)(f-2) / f^3 = 210/343 for the chromatic count on K3
    assert_eq!(
        parse_rational("30/49").unwrap(),
        parse_rational("210/343").unwrap()
    );

    let out = cmd_gamma(&coloring(3, "Z2^3", "hamming:1")).unwrap();
    assert_eq!(values(&out.json), ["1", "3/32"]);

    let out = cmd_gamma(&coloring(3, "Z5", "interval:1")).unwrap();
    assert_eq!(values(&out.json), ["1", "0"]);

    let brute = RunConfig {
        method: MethodArg::Brute,
        ..coloring(4, "Z5", "interval:1")
    };
    let cycle = RunConfig {
        method: MethodArg::Cycle,
        ..coloring(4, "Z5", "interval:1")
    };
    assert_eq!(
        values(&cmd_gamma(&brute).unwrap().json),
        values(&cmd_gamma(&cycle).unwrap().json)
    );
}

#[test]
fn gamma_fourier_and_timing() {
    let cfg = RunConfig {
        method: MethodArg::Fourier,
        timing: true,
        ..coloring(3, "Z3", "set:{1,2}")
    };
    let out = cmd_gamma(&cfg).unwrap();
    let rec = &out.json["values"][1];
    assert_eq!(rec["method"], "fourier");
    // proper 3-colorings of a triangle: 3! of 27
    assert!((rec["value"].as_f64().unwrap() - 2.0 / 9.0).abs() < 1e-9);
    assert!(rec["micros"].is_u64());
    let plain = cmd_gamma(&coloring(3, "Z3", "set:{1,2}")).unwrap();
    assert!(plain.json["values"][1].get("micros").is_none());
    assert_eq!(plain.json["values"][1]["value"], "2/9");
}

#[test]
fn verify_cases_pass() {
    for (v, group, allowed) in [
        (4, "Z7", "interval:1"),
        (3, "Z5", "interval:1"),
        (4, "Z2^3", "hamming:1"),
    ] {
        let out = cmd_verify(&coloring(v, group, allowed)).unwrap();
        assert_eq!(out.json["passed"], true, "{group} {allowed}");
        assert_eq!(out.json["agreeing"], out.json["total"]);
        assert_eq!(out.exit_code, 0);
        let n = if v == 4 { 15 } else { 2 };
        assert_eq!(out.tables[0].notes, [format!("PASS {n}/{n}")]);
    }
}

#[test]
fn verify_rejects_fourier() {
    let cfg = RunConfig {
        method: MethodArg::Fourier,
        ..coloring(3, "Z5", "interval:1")
    };
    assert_eq!(cmd_verify(&cfg).unwrap_err().exit_code(), 2);
}

#[test]
fn chromatic_table_and_single_graph() {
    let out = cmd_chromatic(&RunConfig::new(4), None).unwrap();
    assert_eq!(out.json["passed"], true);
    let graphs = out.json["graphs"].as_array().unwrap();
    assert_eq!(graphs.len(), 15);
    assert_eq!(graphs[14]["via_m"], "-6f + 11f^2 - 6f^3 + f^4");

    let path = parse_edge_set("v=4;edges=01,12").unwrap();
    let out = cmd_chromatic(&RunConfig::new(4), Some(&path)).unwrap();
    assert_eq!(out.json["graphs"][0]["via_m"], Value::Null);
    assert_eq!(out.json["graphs"][0]["oracle"], "f^2 - 2f^3 + f^4");
}

#[test]
fn examples_report_errata_only() {
    let limits = Limits::default();
    let one = cmd_examples(1, &limits).unwrap();
    assert_eq!(one.json["passed"], true);
    assert_eq!(one.json["errata"], 5);
    let m = one.json["M_v4"].as_array().unwrap();
    assert_eq!(m.iter().filter(|c| c["status"] == "erratum").count(), 2);
    assert!(one.json["M_v3"]
        .as_array()
        .unwrap()
        .iter()
        .all(|c| c["status"] == "match"));

    let two = cmd_examples(2, &limits).unwrap();
    assert_eq!(two.json["passed"], true);
    assert_eq!(two.json["errata"], 0);
    let rows = two.json["triangle"].as_array().unwrap();
    let spot = rows
        .iter()
        .find(|r| r["f"] == "5" && r["k"] == "1")
        .unwrap();
    assert_eq!(spot["gamma_bar"], "7/25");

    let three = cmd_examples(3, &limits).unwrap();
    assert_eq!(three.json["passed"], true);
    assert_eq!(three.json["errata"], 10);

    assert_eq!(cmd_examples(4, &limits).unwrap_err().exit_code(), 2);
}

#[test]
fn binary_exit_codes() {
    let (code, out, _) = bin(&["poset", "--v", "3"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("index\tmask\tedges\te\tc\tgirth\tclass\n"));
    assert_eq!(out.lines().count(), 3);

    let (code, out, _) = bin(&[
        "verify",
        "--v",
        "3",
        "--group",
        "Z5",
        "--allowed",
        "interval:1",
        "--format",
        "json",
    ]);
    assert_eq!(code, 0);
    let json: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(json["passed"], true);

    let (code, _, err) = bin(&[
        "gamma",
        "--v",
        "4",
        "--group",
        "Z5",
        "--allowed",
        "interval:1",
        "--budget",
        "10",
    ]);
    assert_eq!(code, 3);
    assert!(err.contains("budget"));

    let (code, _, _) = bin(&["gamma", "--group", "Z5^x", "--allowed", "nonzero"]);
    assert_eq!(code, 2);
    let (code, _, _) = bin(&["gamma", "--group", "Z5", "--allowed", "set:{1,2}"]);
    assert_eq!(code, 2);
    let (code, _, _) = bin(&["matrix", "Q", "--v", "3"]);
    assert_eq!(code, 2);
    let (code, _, _) = bin(&["matrix", "M", "--r", "1/0"]);
    assert_eq!(code, 2);
}

#[test]
fn output_is_deterministic() {
    let cfg = coloring(4, "Z2^3", "hamming:1");
    let a = cmd_verify(&cfg).unwrap().render(Format::Json);
    let b = cmd_verify(&cfg).unwrap().render(Format::Json);
    assert_eq!(a, b);
    let (_, x, _) = bin(&["examples", "2"]);
    let (_, y, _) = bin(&["examples", "2"]);
    assert_eq!(x, y);
}

fn canonical_group() -> impl Strategy<Value = GroupSpec> {
    prop::collection::vec((2u32..12, 1usize..4), 1..4).prop_map(|runs| {
        let mut orders = Vec::new();
        let mut last = 0;
        for (n, k) in runs {
            // adjacent runs must differ or they merge into one power
            let n = if n == last { n + 1 } else { n };
            orders.extend(std::iter::repeat_n(n, k));
            last = n;
        }
        GroupSpec { orders }
    })
}

fn allowed_spec() -> impl Strategy<Value = AllowedSpec> {
    prop_oneof![
        (0usize..20).prop_map(AllowedSpec::Interval),
        (0i64..10).prop_map(AllowedSpec::Hamming),
        Just(AllowedSpec::Nonzero),
        prop::collection::vec(prop::collection::vec(0u32..9, 1..2), 0..5)
            .prop_map(AllowedSpec::Set),
        prop::collection::vec(prop::collection::vec(0u32..9, 2..4), 0..5)
            .prop_map(AllowedSpec::Set),
    ]
}

proptest! {
    #[test]
    fn group_spec_round_trip(g in canonical_group()) {
        let text = g.to_string();
        prop_assert_eq!(text.parse::<GroupSpec>().unwrap(), g);
    }

    #[test]
    fn allowed_spec_round_trip(a in allowed_spec()) {
        let text = a.to_string();
        let back: AllowedSpec = text.parse().unwrap();
        prop_assert_eq!(back.to_string(), text);
        prop_assert_eq!(back, a);
    }
}
