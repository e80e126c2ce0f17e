//! End-to-end tests for the command-line interface, exercising the exit-code
//! contract and report determinism without spawning processes.

use raag_cli::{execute, Outcome};

fn run(args: &[&str], stdin: &str) -> Outcome {
    let argv: Vec<String> = std::iter::once("raag".to_owned())
        .chain(args.iter().map(|s| (*s).to_owned()))
        .collect();
    let input = stdin.to_owned();
    execute(&argv, &move || Ok(input.clone()))
}

const P3: &str = "a: b\nb: a c\nc: b\n";
const P4: &str = "a: b\nb: a c\nc: b d\nd: c\n";
const SOL: &str = "a: b\nb: a\nc:\n";
const PENTAGON: &str = "a: b e\nb: a c\nc: b d\nd: c e\ne: d a\n";

#[test]
fn analyze_sol_graph_reports_free_pair() {
    let out = run(&["analyze"], SOL);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert!(out.stdout.contains("verdict: free"));
    assert!(out.stdout.contains("equivalent pairs: {a b}"));
}

#[test]
fn analyze_gamma_2_pipeline() {
    let gamma = run(&["gamma-k", "--k", "2"], "");
    assert_eq!(gamma.code, 0);
    let out = run(&["analyze"], &gamma.stdout);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("verdict: virtually_nilpotent"));
    assert!(out.stdout.contains("nilpotence class: 2"));
}

#[test]
fn gamma_0_emits_single_vertex() {
    let out = run(&["gamma-k", "--k", "0"], "");
    assert_eq!(out.stdout, "x0:\n");
}

#[test]
fn depth_table_matches_known_values() {
    let out = run(&["depth"], P4);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("graph depth: 1"));
}

#[test]
fn parse_errors_exit_one() {
    for bad in ["a: b\nb:\n", "a: a\n", "a b c\n"] {
        let out = run(&["analyze"], bad);
        assert_eq!(out.code, 1, "input {bad:?}");
        assert!(out.stdout.is_empty());
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn empty_graph_needs_flag() {
    let out = run(&["analyze"], "# nothing\n");
    assert_eq!(out.code, 1);
    let out = run(&["analyze", "--allow-empty"], "# nothing\n");
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("out_finite=true"));
}

#[test]
fn witness_reverifies_certificates() {
    let free = run(&["witness"], P3);
    assert_eq!(free.code, 0, "{}", free.stderr);
    assert!(free.stdout.contains("certificate re-verified: true"));

    let nilpotent = run(&["witness"], P4);
    assert_eq!(nilpotent.code, 0, "{}", nilpotent.stderr);
    assert!(nilpotent.stdout.contains("witness check passed: true"));
}

#[test]
fn verify_lemmas_zero_failures_on_p4() {
    let out = run(&["verify-lemmas"], P4);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert!(out.stdout.contains("failures: 0"));
}

#[test]
fn verify_sol_passes() {
    let out = run(&["verify-sol"], "");
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("passed: true"));
}

#[test]
fn pentagon_is_finite_in_analyze() {
    let out = run(&["analyze"], PENTAGON);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("out_finite=true"));
    assert!(out.stdout.contains("nilpotence class: 0"));
}

#[test]
fn census_counts_are_stable() {
    let out = run(&["census", "--max-n", "4"], "");
    assert_eq!(out.code, 0);
    // known non-isomorphic counts and the lone depth-1 graph (the path)
    assert!(out.stdout.contains("4  11      10    1"), "{}", out.stdout);
    let bad = run(&["census", "--max-n", "9"], "");
    assert_eq!(bad.code, 1);
}

#[test]
fn json_reports_are_deterministic() {
    for args in [
        vec!["analyze", "--json"],
        vec!["depth", "--json"],
        vec!["witness", "--json"],
        vec!["verify-lemmas", "--json"],
    ] {
        let a = run(&args, P4);
        let b = run(&args, P4);
        assert_eq!(a.code, 0, "{args:?}: {}", a.stderr);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
        assert!(a.stdout.contains("\"schema_version\": \"1.0.0\""));
    }
    let sol = run(&["verify-sol", "--json"], "");
    assert!(sol.stdout.contains("\"passed\": true"));
    let census = run(&["census", "--max-n", "3", "--json"], "");
    assert_eq!(census.code, 0);
    assert!(census.stdout.contains("\"max_n\": 3"));
}

#[test]
fn json_round_trips_the_graph_echo() {
    let out = run(&["analyze", "--json"], P3);
    let doc: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    let echoed = doc["graph"].as_str().unwrap();
    assert_eq!(echoed, P3);
    assert_eq!(doc["payload"]["verdict"], "free");
}

#[test]
fn file_input_works() {
    let dir = std::env::temp_dir().join("raag-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("p3.graph");
    std::fs::write(&path, P3).unwrap();
    let out = run(&["analyze", path.to_str().unwrap()], "");
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("verdict: free"));
    let missing = run(&["analyze", "/nonexistent/nowhere.graph"], "");
    assert_eq!(missing.code, 1);
}

#[test]
fn help_and_version_exit_zero() {
    assert_eq!(run(&["--help"], "").code, 0);
    assert_eq!(run(&["--version"], "").code, 0);
    assert_eq!(run(&["bogus"], "").code, 1);
}
