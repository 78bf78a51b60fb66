use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name)
}

fn afx(args: &[&str], files: &[&str]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_afx"));
    cmd.args(args);
    for f in files {
        cmd.arg(data(f));
    }
    cmd.output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn mixed_volume_of_cube() {
    let o = afx(&["mixedvol"], &["cube3.json", "cube3.json", "cube3.json"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "1");
}

#[test]
fn classify_degenerate_example() {
    let o = afx(&["classify"], &["exdeg.json"]);
    assert_eq!(stdout(&o).trim(), "class=critical, maximal sets {2}");
    let o = afx(&["classify", "--json"], &["exdeg.json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["maximal_sets"], serde_json::json!([[2]]));
}

#[test]
fn extremal_dimension_and_test() {
    let o = afx(&["extremal", "--test", data("exdeg_test.json").to_str().unwrap()], &["exdeg.json"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.starts_with("class=critical, dim X = 5 = 4 (linear) + 1 (D_1)"), "{out}");
    assert!(out.contains("extremal: yes"));
    assert!(out.contains("D_1 part:"));
}

#[test]
fn local_extension_passes() {
    let o = afx(&["localaf"], &["exdeg.json"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().filter(|l| l.ends_with("audit pass")).count(), 10);
    let o = afx(&["localaf", "--r", "3"], &["exdeg.json"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn poset_sequences() {
    let o = afx(&["stanley"], &["chain3.poset"]);
    assert!(stdout(&o).starts_with("N = [0, 1, 0]; trivial zeros at i=1,3\n"));
    let o = afx(&["stanley", "--json"], &["worked.poset"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["counts"], serde_json::json!([0, 1, 1, 1, 0]));
    assert_eq!(v["equality"], serde_json::json!([3]));
}

#[test]
fn malformed_input_exits_with_one() {
    let o = afx(&["mixedvol"], &["bad_syntax.json"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3, column"));
    let o = afx(&["mixedvol"], &["bad_entry.json"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("vertices[1][1]"));
    // two bodies in R^3 do not make a mixed volume
    let o = afx(&["mixedvol"], &["cube3.json", "cube3.json"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn verify_single_suite() {
    let o = afx(&["verify", "--suite", "5"], &[]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("criterion 5 [degenerate example]: PASS"));
    let o = afx(&["verify", "--suite", "11"], &[]);
    assert_eq!(o.status.code(), Some(1));
}
