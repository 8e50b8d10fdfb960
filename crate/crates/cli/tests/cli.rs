use std::path::PathBuf;
use std::process::Command;

use graph_zeta_cli::{run, EXIT_OK, EXIT_REJECTED, EXIT_RESOURCE, EXIT_USAGE};

fn fixture(name: &str) -> String {
    manifest_path(&format!("fixtures/{name}"))
}

fn manifest_path(rel: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join(rel)
        .to_string_lossy()
        .into_owned()
}

fn golden(name: &str) -> String {
    std::fs::read_to_string(manifest_path(&format!("tests/golden/{name}"))).unwrap()
}

fn binary(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_graphzeta"))
        .args(args)
        .output()
        .unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn write_temp(name: &str, text: &str) -> String {
    let dir = std::env::temp_dir().join(format!("graphzeta-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn verify_matches_golden() {
    let (code, out, _) = binary(&["verify", "--input", &fixture("worked_example.json")]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, golden("verify_worked_example.txt"));
}

#[test]
fn verify_json_matches_golden() {
    let (code, out, _) = binary(&[
        "verify",
        "--input",
        &fixture("worked_example.json"),
        "--format",
        "json",
    ]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, golden("verify_worked_example.json"));
}

#[test]
fn series_matches_golden() {
    let (code, out, _) = binary(&["series", "--input", &fixture("worked_example.json"), "-T", "7"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, golden("series_worked_example.txt"));
}

#[test]
fn output_is_repeatable() {
    let args = ["graphzeta", "series", "-i", &fixture("worked_example.json"), "-T", "5", "--format", "json"];
    assert_eq!(run(args), run(args));
}

#[test]
fn triangle_series_rows() {
    let o = run(["graphzeta", "series", "-i", &fixture("triangle.json"), "-T", "6", "--format", "coeffs"]);
    assert_eq!(o.status, EXIT_OK);
    assert_eq!(
        o.stdout,
        "exp: 1,0,0,1,0,0,1\neuler: 1,0,0,1,0,0,1\nhashimoto: 1,0,0,1,0,0,1\nAGREE\n"
    );
}

#[test]
fn lyndon_listing() {
    let o = run(["graphzeta", "lyndon", "-n", "2", "-T", "2"]);
    assert_eq!((o.status, o.stdout.as_str()), (EXIT_OK, "1; 2; 12\n"));
}

#[test]
fn nm_lists_counts() {
    let o = run(["graphzeta", "nm", "-i", &fixture("triangle.json"), "-T", "6", "--format", "coeffs"]);
    assert_eq!(o.stdout, "0,0,3,0,0,3\n");
}

#[test]
fn classical_k4() {
    let o = run(["graphzeta", "classical", "-i", &fixture("k4.json"), "--format", "coeffs"]);
    let h = run(["graphzeta", "hashimoto", "-i", &fixture("k4.json"), "--format", "coeffs"]);
    assert_eq!(o.status, EXIT_OK);
    assert_eq!(o.stdout, h.stdout);
}

#[test]
fn classical_needs_graph_input() {
    let o = run(["graphzeta", "classical", "-i", &fixture("triangle.json")]);
    assert_eq!(o.status, EXIT_USAGE);
}

#[test]
fn classical_general_rejected() {
    let o = run(["graphzeta", "classical", "-i", &fixture("k4.json"), "--scheme", "GENERAL"]);
    assert_eq!(o.status, EXIT_REJECTED);
}

#[test]
fn resource_guard_exit() {
    let (code, out, err) = binary(&["series", "-i", &fixture("worked_example.json"), "-T", "10"]);
    assert_eq!(code, EXIT_RESOURCE);
    assert!(out.is_empty());
    assert!(err.contains("exceeds"));
    let o = run(["graphzeta", "nm", "-i", &fixture("worked_example.json"), "-T", "3", "--max-paths", "100"]);
    assert_eq!(o.status, EXIT_RESOURCE);
}

#[test]
fn bowen_lanford_reduced_rejected() {
    for cmd in ["hashimoto", "verify", "series"] {
        let (code, _, err) = binary(&[
            cmd,
            "-i",
            &fixture("worked_example.json"),
            "--scheme",
            "BOWEN_LANFORD",
            "--reduced",
            "-T",
            "3",
        ]);
        assert_eq!(code, EXIT_REJECTED, "{cmd}");
        assert!(err.contains("reduced"));
    }
}

#[test]
fn mizuno_sato_reduced_accepted() {
    let o = run([
        "graphzeta", "series", "-i", &fixture("worked_example.json"), "--scheme", "MIZUNO_SATO", "--reduced", "-T", "6",
    ]);
    assert_eq!(o.status, EXIT_OK);
    assert!(o.stdout.ends_with("AGREE\n"));
}

#[test]
fn usage_errors() {
    assert_eq!(binary(&["verify"]).0, EXIT_USAGE);
    assert_eq!(binary(&["frobnicate"]).0, EXIT_USAGE);
    assert_eq!(binary(&["verify", "-i", "/nonexistent.json"]).0, EXIT_USAGE);
    let o = run(["graphzeta", "verify", "-i", &fixture("triangle.json"), "--scheme", "NOPE"]);
    assert_eq!(o.status, EXIT_USAGE);
    let float = write_temp(
        "float.json",
        r#"{"version":1,"vertices":["x"],"arcs":[{"tail":"x","head":"x","tau":"0.5"}]}"#,
    );
    let o = run(["graphzeta", "verify", "-i", &float]);
    assert_eq!(o.status, EXIT_USAGE);
    assert!(o.stderr.contains("decimal"));
}

#[test]
fn eval_q_conflicts_with_literal_q() {
    let path = write_temp(
        "literal_q.json",
        r#"{"version":1,"vertices":["x"],"arcs":[{"tail":"x","head":"x","tau":"q"}]}"#,
    );
    assert_eq!(run(["graphzeta", "verify", "-i", &path]).status, EXIT_OK);
    assert_eq!(run(["graphzeta", "verify", "-i", &path, "--eval-q", "1/2"]).status, EXIT_USAGE);
}

#[test]
fn bartholdi_symbolic_and_evaluated() {
    let f = fixture("worked_example.json");
    let symbolic = run(["graphzeta", "verify", "-i", &f, "--scheme", "BARTHOLDI"]);
    assert_eq!(symbolic.status, EXIT_OK);
    assert!(symbolic.stdout.starts_with("scheme: BARTHOLDI over Q(q)\n"));
    let at_zero = run(["graphzeta", "hashimoto", "-i", &f, "--scheme", "BARTHOLDI", "--eval-q", "0", "--format", "coeffs"]);
    let ihara = run(["graphzeta", "hashimoto", "-i", &f, "--scheme", "IHARA", "--format", "coeffs"]);
    assert_eq!(at_zero.stdout, ihara.stdout);
}
