use std::io::Write;
use std::process::{Command, Output};

const Z15: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/../core/fixtures/z15.um");
const Z15_JSON: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/../core/fixtures/z15.json");

fn um(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_um"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn validate_fixture() {
    let out = um(&["validate", Z15]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "ultrametric: OK (n=15, |Sp|=10)\n");
    let out = um(&["validate", Z15_JSON]);
    assert_eq!(stdout(&out), "ultrametric: OK (n=15, |Sp|=10)\n");
}

#[test]
fn hausdorff_worked_example() {
    let out = um(&[
        "hausdorff",
        Z15,
        "--a",
        "x3,x4,x6,x7,x10,x13,x15",
        "--b",
        "x1,x3,x5,x7,x10,x12,x13,x14",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "7\n");
}

#[test]
fn classify_fixture() {
    let out = um(&["classify", Z15]);
    assert_eq!(
        stdout(&out),
        "strictly_binary=false\ninjective=true\nU=false\nR=false\nall_msts_paths=false\n"
    );
    let out = um(&["--format", "json", "classify", Z15]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["injective_labeling"], true);
    assert_eq!(v["in_class_u"], false);
}

#[test]
fn spectrum_and_multispectrum() {
    assert_eq!(stdout(&um(&["spectrum", Z15])), "0 1 2 3 4 5 6 7 8 9\n");
    let multi = stdout(&um(&["spectrum", "--multi", Z15]));
    assert!(multi.ends_with("9 72\n"), "{multi}");
}

#[test]
fn msp_both_algorithms() {
    let out = stdout(&um(&["msp", Z15, "--start", "x1"]));
    assert!(out.contains("weights: 1 1 4 4 2 9 3 5 9 7 7 8 8 6\n"), "{out}");
    assert!(out.ends_with("total: 74\n"));
    let out = stdout(&um(&["msp", Z15, "--start", "x9", "--algorithm", "tree"]));
    assert!(out.starts_with("path: x9 "), "{out}");
    assert!(out.ends_with("total: 74\n"));
}

#[test]
fn mst_dist_balls_tree() {
    assert!(stdout(&um(&["mst", Z15])).ends_with("total: 74\n"));
    assert_eq!(stdout(&um(&["dist", Z15, "--a", "x1", "--b", "x4,x9"])), "4\n");
    let balls = stdout(&um(&["balls", Z15]));
    assert_eq!(balls.lines().count(), 24);
    assert!(balls.contains("{x1,x2,x3} 1\n"));
    let dot = stdout(&um(&["--format", "dot", "tree", Z15]));
    assert!(dot.starts_with("digraph representing_tree {"));
    let text = stdout(&um(&["tree", Z15]));
    assert!(text.starts_with("9 {x1,"));
    let json = um(&["--format", "json", "tree", Z15]);
    let v: serde_json::Value = serde_json::from_slice(&json.stdout).unwrap();
    assert_eq!(v["nodes"].as_array().unwrap().len(), 24);
}

#[test]
fn gen_is_deterministic_and_valid() {
    let a = um(&["gen", "--n", "8", "--seed", "42"]);
    let b = um(&["gen", "--n", "8", "--seed", "42"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let mut file = tempfile::NamedTempFile::new().unwrap();
    file.write_all(&a.stdout).unwrap();
    let out = um(&["validate", file.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let json = um(&["--format", "json", "gen", "--n", "5", "--labels", "0.5,1.25,3", "--branching", "2"]);
    let v: serde_json::Value = serde_json::from_slice(&json.stdout).unwrap();
    assert_eq!(v["labels"].as_array().unwrap().len(), 5);
}

#[test]
fn exit_codes() {
    let mut bad = tempfile::NamedTempFile::new().unwrap();
    bad.write_all(b"n 3\na b c\n1\n3 1\n").unwrap();
    let out = um(&["validate", bad.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("strong triangle"));

    let mut malformed = tempfile::NamedTempFile::new().unwrap();
    malformed.write_all(b"n 2\na b\n1.x\n").unwrap();
    let out = um(&["validate", malformed.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));

    assert_eq!(um(&["hausdorff", Z15, "--a", "x1", "--b", "nope"]).status.code(), Some(1));
    assert_eq!(um(&["validate", "/nonexistent/file.um"]).status.code(), Some(1));
    assert_eq!(um(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(um(&["--format", "dot", "classify", Z15]).status.code(), Some(2));
    assert_eq!(um(&["gen", "--n", "0"]).status.code(), Some(2));
}

#[test]
fn reads_stdin() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_um"))
        .args(["validate", "-"])
        .stdin(std::process::Stdio::piped())
        .stdout(std::process::Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"n 2\na b\n3\n").unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(stdout(&out), "ultrametric: OK (n=2, |Sp|=2)\n");
}
