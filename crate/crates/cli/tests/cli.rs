use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

use crossbial_cli::workspace::Workspace;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_crossbial"));
    c.env_remove("CROSSBIAL_MAX_DIM");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!(
            "stdout is not JSON ({e}): {}\nstderr: {}",
            String::from_utf8_lossy(&out.stdout),
            String::from_utf8_lossy(&out.stderr)
        )
    })
}

fn p(dir: &TempDir, name: &str) -> String {
    dir.path().join(name).display().to_string()
}

fn build(dir: &TempDir, file: &str, args: &[&str]) -> String {
    let path = p(dir, file);
    let mut all = vec!["--format", "json", "zoo", "build"];
    all.extend_from_slice(args);
    all.extend_from_slice(&["-o", &path]);
    let out = run(&all);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    path
}

fn radford_file(dir: &TempDir) -> String {
    build(
        dir,
        "s.json",
        &[
            "radford", "--n", "2", "--q-exp", "1", "--N", "2", "--nu", "1",
        ],
    )
}

#[test]
fn radford_pipeline_passes_hopf_check() {
    let dir = TempDir::new().unwrap();
    let s = radford_file(&dir);
    let out = run(&["--format", "json", "check", "hopf", "--in", &s]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["verdict"], "pass");
    assert_eq!(r["result"]["dim"], 4);
    let entries = r["checks"][0]["report"]["entries"].as_array().unwrap();
    assert!(entries.iter().any(|e| e["axiom"] == "coassociativity"));
}

#[test]
fn datum_order_is_at_most_two() {
    let dir = TempDir::new().unwrap();
    let s = radford_file(&dir);
    let out = run(&[
        "--format", "json", "datum", "order", "--in", &s, "--max-n", "8",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let k = json(&out)["result"]["order"].as_u64().unwrap();
    assert!(k <= 2);
}

#[test]
fn corrupted_structure_fails_naming_axiom() {
    let dir = TempDir::new().unwrap();
    let s = radford_file(&dir);
    let mut v: Value = serde_json::from_str(&std::fs::read_to_string(&s).unwrap()).unwrap();
    // Δ(1) = 0: breaks the counit axioms and Δ∘η = η⊗η
    let delta = &mut v["structures"]["H"]["delta"]["matrix"];
    for row in delta.as_array_mut().unwrap() {
        row[0] = Value::String("0".into());
    }
    let bad = p(&dir, "corrupted.json");
    std::fs::write(&bad, serde_json::to_string(&v).unwrap()).unwrap();
    let out = run(&["--format", "json", "check", "hopf", "--in", &bad]);
    assert_eq!(out.status.code(), Some(1));
    let r = json(&out);
    assert_eq!(r["verdict"], "fail");
    let failed: Vec<&str> = r["checks"][0]["report"]["entries"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|e| e["passed"] == false)
        .map(|e| e["axiom"].as_str().unwrap())
        .collect();
    assert!(failed.contains(&"left counit"), "{failed:?}");

    let text = run(&["check", "hopf", "--in", &bad]);
    assert_eq!(text.status.code(), Some(1));
    let t = String::from_utf8(text.stdout).unwrap();
    assert!(t.contains("FAIL  left counit"), "{t}");
    assert!(t.contains("verdict: FAIL"));
}

#[test]
fn malformed_rational_is_a_parse_error() {
    let dir = TempDir::new().unwrap();
    let s = radford_file(&dir);
    let mut v: Value = serde_json::from_str(&std::fs::read_to_string(&s).unwrap()).unwrap();
    v["structures"]["H"]["m"]["matrix"][0][0] = Value::String("1/0".into());
    let bad = p(&dir, "bad.json");
    std::fs::write(&bad, serde_json::to_string(&v).unwrap()).unwrap();
    let out = run(&["check", "hopf", "--in", &bad]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("/structures/H/m/matrix/0/0"), "{err}");
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["check", "hopf", "--bogus"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        run(&["check", "hopf", "--in", "/nonexistent/ws.json"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn reports_are_byte_identical_across_runs() {
    let dir = TempDir::new().unwrap();
    let s = radford_file(&dir);
    for args in [
        vec!["--format", "json", "datum", "classify", "--in", &s],
        vec!["datum", "check", "--in", &s],
        vec!["--format", "json", "cross", "verify-trivalent", "--in", &s],
    ] {
        let a = run(&args);
        let b = run(&args);
        assert_eq!(a.stdout, b.stdout);
        assert!(!String::from_utf8_lossy(&a.stdout).contains("timing"));
    }
    let t = run(&["--format", "json", "--timing", "datum", "check", "--in", &s]);
    assert!(json(&t)["timing"]["seconds"].is_number());
}

#[test]
fn zoo_files_round_trip_byte_for_byte() {
    let dir = TempDir::new().unwrap();
    for (file, args) in [
        (
            "r.json",
            vec![
                "radford", "--n", "2", "--q-exp", "1", "--N", "2", "--nu", "1",
            ],
        ),
        ("sd.json", vec!["sweedler-double"]),
        ("yd.json", vec!["yd-c3-double"]),
        ("cm.json", vec!["sweedler-crossed-modules", "--alpha", "-1"]),
        ("bc.json", vec!["bicharacter", "--N", "3"]),
    ] {
        let path = build(&dir, file, &args);
        let text = std::fs::read_to_string(&path).unwrap();
        let ws = Workspace::load(Path::new(&path)).unwrap();
        assert_eq!(ws.to_json().unwrap(), text, "{file}");
    }
}

#[test]
fn dimension_cap_is_enforced() {
    let dir = TempDir::new().unwrap();
    let out = bin()
        .env("CROSSBIAL_MAX_DIM", "3")
        .args([
            "zoo",
            "build",
            "group",
            "--N",
            "4",
            "-o",
            &p(&dir, "g.json"),
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("CROSSBIAL_MAX_DIM"));
    let s = radford_file(&dir);
    let out = bin()
        .env("CROSSBIAL_MAX_DIM", "2")
        .args(["check", "hopf", "--in", &s])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn decompose_and_rebuild_cross_product() {
    let dir = TempDir::new().unwrap();
    let s = radford_file(&dir);
    let d = p(&dir, "d.json");
    let out = run(&[
        "--format",
        "json",
        "cross",
        "decompose",
        "--in",
        &s,
        "-o",
        &d,
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["result"]["pattern"], "1010");
    let out = run(&[
        "--format",
        "json",
        "cross",
        "build",
        "--in",
        &d,
        "--tuple",
        "system.tuple",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["result"]["dim"], 4);
    let out = run(&["--format", "json", "datum", "build", "--in", &s, "-o", &d]);
    assert_eq!(out.status.code(), Some(0));
    let out = run(&[
        "--format",
        "json",
        "check",
        "bialgebra",
        "--in",
        &d,
        "--structure",
        "datum.cross",
    ]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn twist_and_pairing_commands() {
    let dir = TempDir::new().unwrap();
    let c = build(&dir, "c.json", &["bicharacter", "--N", "2"]);
    let out = run(&["--format", "json", "twist", "validate", "--in", &c]);
    assert_eq!(out.status.code(), Some(0));
    let t = p(&dir, "t.json");
    let out = run(&["--format", "json", "twist", "apply", "--in", &c, "-o", &t]);
    assert_eq!(out.status.code(), Some(0));
    // group-likes: χ(x,y)·xy·χ⁻(x,y) = xy
    assert_eq!(json(&out)["result"]["multiplication_changed"], false);
    let out = run(&[
        "--format",
        "json",
        "check",
        "hopf",
        "--in",
        &t,
        "--structure",
        "cocycle.twisted",
    ]);
    assert_eq!(out.status.code(), Some(0));

    let g = build(&dir, "g.json", &["group-double", "--N", "3"]);
    let out = run(&["--format", "json", "pairing", "matched-pair", "--in", &g]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["result"]["braiding_involutive"], true);
    assert_eq!(
        run(&["pairing", "check", "--in", &g]).status.code(),
        Some(0)
    );

    let y = build(&dir, "y.json", &["yd-c3-double"]);
    let out = run(&["--format", "json", "pairing", "matched-pair", "--in", &y]);
    assert_eq!(out.status.code(), Some(1));
    let r = json(&out);
    assert_eq!(r["result"]["is_matched_pair"], false);
    assert_eq!(r["result"]["braiding_involutive"], false);
}

#[test]
fn double_biproduct_command() {
    let dir = TempDir::new().unwrap();
    let f = build(
        &dir,
        "db.json",
        &["sweedler-crossed-modules", "--alpha", "1"],
    );
    let out = run(&["--format", "json", "double-biproduct", "build", "--in", &f]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["result"]["dim"], 8);
    assert_eq!(r["result"]["twisted_equals_direct"], true);

    let bare = build(&dir, "bare.json", &["sweedler-crossed-modules"]);
    let out = run(&["double-biproduct", "build", "--in", &bare]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn zoo_list_names_builders() {
    let out = run(&["--format", "json", "zoo", "list"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(json(&out)["result"]["builders"]["radford"].is_string());
}

#[test]
fn command_grammar_is_consistent() {
    use clap::CommandFactory;
    crossbial_cli::commands::Cli::command().debug_assert();
}
