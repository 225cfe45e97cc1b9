use std::path::Path;

use convertible_codes::cli::{main_with_args, BuiltCode, CodeKind, CodeSpecFile, Plan};

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut full = vec!["convcode"];
    full.extend_from_slice(args);
    let code = main_with_args(full, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn build_into(dir: &Path, name: &str, args: &[&str]) -> String {
    let path = dir.join(name).to_string_lossy().into_owned();
    let mut all = vec!["build"];
    all.extend_from_slice(args);
    all.extend_from_slice(&["--out", &path]);
    let (code, _, err) = run(&all);
    assert_eq!(code, 0, "{err}");
    path
}

#[test]
fn repro_commands_succeed() {
    for cmd in ["repro-example1", "repro-example2"] {
        let (code, out, err) = run(&[cmd]);
        assert_eq!(code, 0, "{err}");
        assert!(out.lines().count() > 5);
    }
}

#[test]
fn build_convert_verify_mds() {
    let dir = tempfile::tempdir().unwrap();
    let spec = build_into(dir.path(), "mds.json", &["--kind", "mds", "--zeta", "2", "--k", "2", "--li", "2", "--lf", "2", "--field", "19"]);
    let (code, out, _) = run(&["convert", &spec, "--seed", "3"]);
    assert_eq!(code, 0);
    assert!(out.contains("read=4 write=2 total=6"), "{out}");
    let (code, out, _) = run(&["verify", &spec, "--level", "full"]);
    assert_eq!(code, 0, "{out}");
}

#[test]
fn build_convert_lrc_json() {
    let dir = tempfile::tempdir().unwrap();
    let spec = build_into(dir.path(), "lrc.json", &["--kind", "lrc", "--zeta", "2", "--k", "2", "--r", "2", "--li", "1", "--lf", "1", "--field", "19"]);
    let (code, out, _) = run(&["convert", &spec, "--json"]);
    assert_eq!(code, 0);
    let doc: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert!(doc.is_object());
    let (code, out, _) = run(&["convert", &spec]);
    assert_eq!(code, 0);
    assert!(out.contains("read=4 write=3 total=7"), "{out}");
}

#[test]
fn spec_round_trip_is_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    for kind in [CodeKind::Mds, CodeKind::Lrc] {
        let r = (kind == CodeKind::Lrc).then_some(2);
        let code = BuiltCode::build(kind, 3, 2, r, 2, 1, None).unwrap();
        let spec = code.to_spec();
        let path = dir.path().join("spec.json");
        spec.save(&path).unwrap();
        let back = CodeSpecFile::load(&path).unwrap();
        assert_eq!(back, spec);
        assert_eq!(back.to_json(), std::fs::read_to_string(&path).unwrap());
        let rebuilt = BuiltCode::from_spec(&back).unwrap();
        assert_eq!(rebuilt.to_spec(), spec);
    }
}

#[test]
fn build_output_is_deterministic() {
    let args = ["build", "--kind", "lrc", "--zeta", "3", "--k", "2", "--r", "1", "--li", "3", "--lf", "2"];
    let first = run(&args);
    let second = run(&args);
    assert_eq!(first.0, 0);
    assert_eq!(first.1, second.1);
    let conv = |spec: &str| run(&["convert", spec, "--seed", "9"]).1;
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("s.json");
    std::fs::write(&path, &first.1).unwrap();
    let p = path.to_string_lossy();
    assert_eq!(conv(&p), conv(&p));
}

#[test]
fn reencode_plan_is_used_when_final_is_long() {
    let code = BuiltCode::build(CodeKind::Mds, 2, 2, None, 3, 3, None).unwrap();
    assert_eq!(code.to_spec().plan, Plan::DefaultReencode);
    assert!(code.encode_from_scratch(&[]).is_none());
}

#[test]
fn corrupted_matrix_reports_witness() {
    let dir = tempfile::tempdir().unwrap();
    let spec = build_into(dir.path(), "lrc.json", &["--kind", "lrc", "--zeta", "2", "--k", "2", "--r", "2", "--li", "1", "--lf", "1", "--field", "19"]);
    let mut file = CodeSpecFile::load(Path::new(&spec)).unwrap();
    file.matrices[0][0][0] = (file.matrices[0][0][0] + 1) % 19;
    file.save(Path::new(&spec)).unwrap();
    let (code, out, err) = run(&["verify", &spec]);
    assert_eq!(code, 3);
    assert!(out.contains("FAIL"), "{out}");
    assert!(err.contains("condition_violation"), "{err}");
    assert!(err.contains("fails at ("), "{err}");
}

#[test]
fn exit_codes() {
    let (code, _, err) = run(&["build", "--kind", "lrc", "--zeta", "2", "--k", "2", "--r", "2", "--li", "1", "--lf", "1", "--field", "23"]);
    assert_eq!(code, 2, "{err}");
    let doc: serde_json::Value = serde_json::from_str(err.trim()).unwrap();
    assert!(doc["error"].is_string());

    let (code, _, _) = run(&["verify", "/nonexistent/spec.json"]);
    assert_eq!(code, 4);

    let (code, _, _) = run(&["no-such-command"]);
    assert_eq!(code, 2);

    let dir = tempfile::tempdir().unwrap();
    let spec = build_into(dir.path(), "mds.json", &["--kind", "mds", "--zeta", "2", "--k", "2", "--li", "2", "--lf", "2", "--field", "19"]);
    let (code, _, err) = run(&["convert", &spec, "--codewords", "1,2,3,4;5,6,7,8"]);
    assert_eq!(code, 3, "{err}");
    assert!(err.contains("not_a_codeword"), "{err}");

    let (code, _, _) = run(&["convert", &spec, "--messages", "1,2"]);
    assert_eq!(code, 2);
}

#[test]
fn bounds_command() {
    let (code, out, _) = run(&["bounds", "--ni", "6", "--k", "4", "--nf", "10", "--zeta", "2", "--json"]);
    assert_eq!(code, 0);
    let doc: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(doc["read_lower"], 4);
    assert_eq!(doc["write_lower"], 2);
    let (code, out, _) = run(&["bounds", "--ni", "9", "--k", "4", "--nf", "15", "--zeta", "2", "--r", "2", "--d", "5"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("read>=4 write>=3"), "{out}");
}
