use std::path::PathBuf;

use tfpoly::cli::run_from;

fn fixture(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "fixtures", &format!("{name}.graph")]
        .iter()
        .collect();
    p.display().to_string()
}

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut full = vec!["tfpoly"];
    full.extend_from_slice(args);
    let code = run_from(full, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn tutte_of_triangle() {
    let k3 = fixture("k3");
    let (code, out, _) = run(&["tutte", &k3]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "x^2 + x + y");
    let (code, shift, _) = run(&["tutte", &k3, "--route", "shift"]);
    assert_eq!(code, 0);
    assert_eq!(shift, out);
}

#[test]
fn omega_routes_agree_at_a_point() {
    let k3 = fixture("k3");
    let (_, brute, _) = run(&["omega", &k3, "--via", "brute", "--p", "3", "--q", "2"]);
    let (_, expansion, _) = run(&["--json", "omega", &k3]);
    let v: serde_json::Value = serde_json::from_str(&expansion).unwrap();
    let rep = tfpoly::invariants::PolynomialReport::from_json(&v).unwrap();
    let at = rep
        .poly
        .evaluate(&[(tfpoly::Var::X, 3.into()), (tfpoly::Var::Y, 2.into())])
        .unwrap();
    assert_eq!(at.to_string(), brute.trim());
}

#[test]
fn json_output_names_the_file() {
    let k3 = fixture("k3");
    let (code, out, _) = run(&["--json", "chromatic", &k3]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["invariant"], "chromatic");
    assert_eq!(v["graph"], k3.as_str());
    assert!(v.get("denominator").is_none());
}

#[test]
fn fractional_integral_tension_carries_a_denominator() {
    let (code, out, _) = run(&["--json", "tension", "--integral", &fixture("k4_minus_edge")]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["denominator"], "3");
}

#[test]
fn tutte_values_quadrants() {
    let k3 = fixture("k3");
    let (_, minus, _) = run(&["tutte-values", &k3, "--p", "2", "--q", "3", "--quadrant", "--"]);
    let (_, mixed, _) = run(&["tutte-values", &k3, "--p", "2", "--q", "3", "--quadrant", "-+"]);
    assert_eq!(minus.trim(), "-1");
    assert_eq!(mixed.trim(), "5");
}

#[test]
fn classify_orientations_emits_one_line_per_class() {
    let (code, out, _) = run(&["classify-orientations", &fixture("k3")]);
    assert_eq!(code, 0);
    // T(K3;1,1) = 3.
    assert_eq!(out.lines().count(), 3);
    for line in out.lines() {
        serde_json::from_str::<serde_json::Value>(line).unwrap();
    }
}

#[test]
fn kappa_of_one_orientation() {
    let (code, out, _) = run(&["kappa", &fixture("k3"), "--orientation", "000"]);
    assert_eq!(code, 0);
    assert!(!out.trim().is_empty());
    let (code, _, err) = run(&["kappa", &fixture("k3"), "--orientation", "0a0"]);
    assert_eq!(code, 2);
    assert!(err.contains("orientation bits"));
}

#[test]
fn verify_passes_and_accepts_several_graphs() {
    let (code, out, _) = run(&["verify", &fixture("edge"), &fixture("digon"), "--suite", "section6"]);
    assert_eq!(code, 0, "{out}");
    let (code, _, _) = run(&["verify", &fixture("loop"), "--suite", "pair-identities"]);
    assert_eq!(code, 0);
}

#[test]
fn exit_codes_for_bad_input() {
    assert_eq!(run(&["tutte", "/nonexistent.graph"]).0, 2);
    assert_eq!(run(&["no-such-command"]).0, 2);
    assert_eq!(run(&["--help"]).0, 0);
    // A size guard violation is reported, not panicked on.
    let (code, _, err) = run(&["--max-edges", "2", "whitney", &fixture("k3")]);
    assert_eq!(code, 2);
    assert!(!err.is_empty());
}

#[test]
fn parse_errors_carry_the_line() {
    let dir = std::env::temp_dir().join(format!("tfpoly-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.graph");
    std::fs::write(&bad, "v 2\ne 0 5\n").unwrap();
    let (code, _, err) = run(&["tutte", bad.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("bad.graph"), "{err}");
    std::fs::remove_dir_all(&dir).unwrap();
}
