use std::process::{Command, Output};

use clap::Parser;
use dequantlab::cli::{run, Cli};
use dequantlab::report::{flatten, parse_text, Report};
use proptest::prelude::*;
use serde_json::Value;

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dequantlab"))
        .args(args)
        .env_remove("DEQUANTLAB_MAX_QUBITS")
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut all = args.to_vec();
    all.push("--json");
    let out = bin(&all);
    let v: Value = serde_json::from_slice(&out.stdout)
        .unwrap_or_else(|e| panic!("{args:?}: {e}\n{}", String::from_utf8_lossy(&out.stdout)));
    (v, out.status.code().unwrap())
}

fn in_process(args: &[&str]) -> Report {
    let cli = Cli::try_parse_from(std::iter::once("dequantlab").chain(args.iter().copied()))
        .expect("arguments parse");
    run(&cli, &args.join(" "))
}

#[test]
fn solve_classical_identifies_function() {
    let (v, code) = json(&["solve", "--f", "0011", "--method", "classical"]);
    assert_eq!(code, 0);
    assert_eq!(v["verdict"], "balanced");
    assert_eq!(v["oracle_calls"], 1);
    assert_eq!(v["identified_function"], "0011");
}

#[test]
fn solve_quantum_constant() {
    let (v, code) = json(&["solve", "--f", "0000", "--method", "quantum"]);
    assert_eq!(code, 0);
    assert_eq!(v["verdict"], "constant");
    assert_eq!(v["oracle_calls"], 1);
    assert_eq!(v["zero_probability"], 1.0);
}

#[test]
fn classical_route_refuses_three_qubits() {
    let (v, code) = json(&["solve", "--f", "00011110", "--method", "classical"]);
    assert_eq!(code, 2);
    assert!(v["error"]
        .as_str()
        .unwrap()
        .contains("no separable de-quantisation"));
    assert!(v["error"].as_str().unwrap().contains("entangle"));
    let (_, code) = json(&["solve", "--f", "00011110", "--method", "optical"]);
    assert_eq!(code, 2);
}

#[test]
fn promise_violation_exits_one() {
    for method in ["quantum", "classical", "optical", "dequantised"] {
        let (v, code) = json(&["solve", "--f", "0111", "--method", method]);
        assert_eq!(code, 1, "{method}");
        assert!(
            v["error"].as_str().unwrap().contains("promise violated"),
            "{method}: {v}"
        );
    }
}

#[test]
fn dequantised_route() {
    let (v, code) = json(&["solve", "--f", "01101001", "--method", "dequantised"]);
    assert_eq!((code, v["verdict"].as_str()), (0, Some("balanced")));
    let (v, code) = json(&["solve", "--f", "00011110", "--method", "dequantised"]);
    assert_eq!(code, 1);
    assert!(v["error"].as_str().unwrap().contains("entangled"));
}

#[test]
fn optical_route() {
    let (v, code) = json(&["solve", "--f", "0110", "--method", "optical"]);
    assert_eq!((code, v["verdict"].as_str()), (0, Some("balanced")));
    let (v, _) = json(&["solve", "--f", "11", "--method", "optical"]);
    assert_eq!(v["verdict"], "constant");
}

#[test]
fn separability_reports() {
    let (v, code) = json(&["separability", "--f", "0110"]);
    assert_eq!(code, 0);
    assert_eq!(v["separable"], true);
    assert_eq!(v["factors"].as_array().unwrap().len(), 2);

    let (v, _) = json(&["separability", "--f", "00011110"]);
    assert_eq!(v["separable"], false);
    let levels = v["ppi"]["levels"].as_array().unwrap();
    let k2 = levels.iter().find(|l| l["k"] == 2).unwrap();
    assert_eq!(k2["consistent"], false);
    assert_eq!(k2["violation"], "a0*a3 != a1*a2");

    let (v, _) = json(&["separability", "--f", "0000"]);
    assert_eq!(v["separable"], true);
    let levels = v["ppi"]["levels"].as_array().unwrap();
    assert!(levels.iter().all(|l| l["consistent"] == true));
    assert_eq!(v["separable_cuts"].as_array().unwrap().len(), 1);
}

#[test]
fn census_commands() {
    let (v, code) = json(&["census", "--n", "3"]);
    assert_eq!(code, 0);
    assert_eq!(
        (v["a_n"].as_str(), v["b_n"].as_str()),
        (Some("16"), Some("72"))
    );
    assert_eq!(v["fraction"], "2/9");
    let (v, _) = json(&["census", "--n", "1"]);
    assert_eq!(
        (v["a_n"].as_str(), v["b_n"].as_str()),
        (Some("4"), Some("4"))
    );
    let (v, code) = json(&["census", "--n", "4", "--brute-force"]);
    assert_eq!(code, 0);
    assert_eq!(
        (v["a_n"].as_str(), v["b_n"].as_str()),
        (Some("32"), Some("12872"))
    );
    assert_eq!(v["method"], "brute-force");
    let (_, code) = json(&["census", "--n", "5", "--brute-force"]);
    assert_eq!(code, 2);
    let (v, _) = json(&["census", "--n", "2", "--list"]);
    assert_eq!(v["separable_set"].as_array().unwrap().len(), 8);
}

#[test]
fn census_table_is_aligned_text() {
    let out = bin(&["census", "--n", "4", "--table"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(
        text.contains("rows:\n  n  a_n    b_n  fraction\n"),
        "{text}"
    );
    assert!(text.contains("  4   32  12872    4/1609\n"), "{text}");
}

#[test]
fn witness_command() {
    let (v, code) = json(&["witness", "--n", "3"]);
    assert_eq!(code, 0);
    assert_eq!(v["table"], "00011101");
    assert_eq!(v["kind"], "balanced");
    assert_eq!(v["no_separable_qubit"], true);
    assert_eq!(v["no_separable_cut"], true);
    let (_, code) = json(&["witness", "--n", "2"]);
    assert_eq!(code, 2);
}

#[test]
fn decompose_command() {
    let (v, code) = json(&["decompose-su2", "1 0 0 0 0 0 1 0"]);
    assert_eq!(code, 0, "{v}");
    assert!(v["residual"].as_f64().unwrap() < 1e-8);
    assert_eq!(v["plates"].as_array().unwrap().len(), 3);
    let (_, code) = json(&["decompose-su2", "1", "0", "0", "0", "0", "0", "-1", "0"]);
    assert_eq!(code, 2);
    let (_, code) = json(&[
        "decompose-su2",
        "--rescale",
        "1",
        "0",
        "0",
        "0",
        "0",
        "0",
        "-1",
        "0",
    ]);
    assert_eq!(code, 0);
    let (_, code) = json(&["decompose-su2", "1 0 0"]);
    assert_eq!(code, 2);
}

#[test]
fn verify_command_and_negative_control() {
    let (v, code) = json(&["verify", "--max-n", "3"]);
    assert_eq!(code, 0, "{v}");
    assert_eq!(v["passed"], 10);
    let (v, code) = json(&["verify", "--max-n", "3", "--inject-fault"]);
    assert_eq!(code, 1);
    assert!(!v["failed"].as_array().unwrap().is_empty());
}

#[test]
fn batch_file_input() {
    let dir = std::env::temp_dir().join(format!("dequantlab-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("tables.txt");
    std::fs::write(&path, "# n = 2\n0000\n0110\n0111\n").unwrap();
    let (v, code) = json(&["classify", "--file", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(v["count"], 3);
    assert_eq!(v["results"][2]["kind"], "invalid");
    let (v, code) = json(&["solve", "--file", path.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert_eq!(v["results"][1]["verdict"], "balanced");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(bin(&["solve"]).status.code(), Some(2));
    assert_eq!(bin(&["solve", "--f", "012"]).status.code(), Some(2));
    assert_eq!(
        bin(&["solve", "--f", "0011", "--method", "magic"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(bin(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn max_qubits_environment_variable() {
    let run = |limit: &str| {
        Command::new(env!("CARGO_BIN_EXE_dequantlab"))
            .args(["solve", "--f", "0x0", "--n", "6", "--json"])
            .env("DEQUANTLAB_MAX_QUBITS", limit)
            .output()
            .unwrap()
    };
    assert_eq!(run("5").status.code(), Some(2));
    assert_eq!(run("6").status.code(), Some(0));
    assert_eq!(run("zero").status.code(), Some(2));
}

#[test]
fn text_and_json_agree() {
    for args in [
        vec!["separability", "--f", "00011110"],
        vec!["census", "--n", "3", "--table", "--list"],
        vec!["solve", "--f", "0110", "--method", "optical"],
        vec!["witness", "--n", "4"],
        vec!["solve", "--f", "0111"],
    ] {
        let report = in_process(&args);
        let reparsed: Value = serde_json::from_str(&report.render_json()).unwrap();
        assert_eq!(reparsed, report.to_value(), "{args:?}");
        assert_eq!(
            parse_text(&report.render_text()),
            flatten(&reparsed),
            "{args:?}"
        );
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn exit_codes_follow_validity(n in 1usize..=4, bits in proptest::collection::vec(any::<bool>(), 16), method in 0usize..4) {
        let table: String = bits[..1 << n].iter().map(|&b| if b { '1' } else { '0' }).collect();
        let ones = table.matches('1').count();
        let valid = ones == 0 || ones == 1 << n || 2 * ones == 1 << n;
        let name = ["quantum", "classical", "optical", "dequantised"][method];
        let report = in_process(&["solve", "--f", &table, "--method", name]);
        let expected = if (name == "classical" || name == "optical") && n >= 3 {
            2
        } else if !valid {
            1
        } else if name == "dequantised" {
            // entangled oracles have no product form
            let sep = in_process(&["separability", "--f", &table]);
            if sep.payload["separable"] == true { 0 } else { 1 }
        } else {
            0
        };
        prop_assert_eq!(report.exit_code, expected, "{} {}", table, name);
        let reparsed: Value = serde_json::from_str(&report.render_json()).unwrap();
        prop_assert_eq!(parse_text(&report.render_text()), flatten(&reparsed));
    }
}
