//! Golden outputs of the command-line surface.

use std::process::Command;

use ratmackey::cli::execute;

fn stdout(args: &[&str]) -> String {
    let o = execute(args);
    assert_eq!(o.code, 0, "{args:?}: {}", o.stderr);
    o.stdout
}

#[test]
fn documented_examples() {
    assert_eq!(stdout(&["stems", "--n", "2", "--degree", "1 - 1*sigma"]), "M0- + M1-\n");
    assert_eq!(stdout(&["torus-check", "--n", "2", "--lie", "su2"]), "lhs=3 rhs=4 verdict=FAILS\n");
    assert_eq!(stdout(&["stems", "--n", "3", "--degree", "1"]), "0\n");
}

#[test]
fn stems_methods_agree() {
    for method in ["closed", "sector", "oracle"] {
        assert_eq!(stdout(&["stems", "--n", "3", "--degree", "2 - l1", "--method", method]), "M0 + M1\n");
        assert_eq!(stdout(&["stems", "--n", "2", "--degree", "-l0", "--method", method]), "M1 + M2\n");
    }
    assert_eq!(stdout(&["stems", "--n", "1", "--degree", "0"]), "M0 + M1\n");
}

#[test]
fn collisions_are_noted() {
    let out = stdout(&["stems", "--n", "2", "--degree", "l0 - 2*sigma"]);
    let lines: Vec<_> = out.lines().collect();
    assert_eq!(lines[0], "M0 + M2");
    assert!(lines[1].starts_with("note: 2 admissible tuples"), "{out}");
}

#[test]
fn torus_checks() {
    assert_eq!(stdout(&["torus-check", "--n", "1", "--lie", "su2"]), "lhs=2 rhs=2 verdict=HOLDS\n");
    assert_eq!(stdout(&["torus-check", "--n", "3", "--lie", "su2"]), "lhs=5 rhs=8 verdict=FAILS\n");
    assert_eq!(
        stdout(&["torus-check", "--n", "3", "--lie", "su2", "--weyl", "permutation"]),
        "lhs=5 rhs=5 verdict=HOLDS\n"
    );
    let out = stdout(&["torus-check", "--n", "1", "--lie", "um", "--m", "2", "--maxdeg", "20"]);
    assert!(out.ends_with("verdict=HOLDS\n"), "{out}");
}

#[test]
fn tables() {
    let out = stdout(&["bgs1", "--n", "2", "--maxdeg", "4"]);
    assert!(out.contains("     2  1,3,7                M0 + 2*M1 + 4*M2\n"), "{out}");
    assert!(out.contains("fixed-point assembly agrees: yes"));
    let out = stdout(&["bgsigma2", "--n", "1", "--maxdeg", "4"]);
    assert!(out.contains("     0  1,3                  M0 + 2*M1\n"), "{out}");
    let out = stdout(&["bgu", "--n", "1", "--m", "2", "--maxdeg", "2"]);
    assert!(out.contains("components per level: 1,3\n"), "{out}");
    let out = stdout(&["consistency", "bsigma2", "--n", "2", "--maxdeg", "4"]);
    assert!(out.contains("degree 0 level 2: fixed points 5 vs quotient 7"), "{out}");
    let out = stdout(&["consistency", "bsigma2", "--n", "1", "--maxdeg", "4"]);
    assert!(out.contains("diff: empty"), "{out}");
    let out = stdout(&["sphere", "--n", "2", "--rep", "sigma"]);
    assert!(out.contains("     1  1,2,0                M0- + M1-\n"), "{out}");
}

#[test]
fn presentations() {
    let out = stdout(&["point-presentation", "--n", "2"]);
    assert!(out.contains("generators: 12\n"), "{out}");
    let out = stdout(&["burnside", "--n", "2", "--level", "1"]);
    assert!(out.contains("e_0 = 1/2*x[1,0]"), "{out}");
    let out = stdout(&["collapse", "--s", "2"]);
    assert!(out.contains("e_1 = -e^2 + 2*e\n"), "{out}");
}

#[test]
fn records_format() {
    let out = stdout(&["--format", "records", "stems", "--n", "2", "--degree", "1 - sigma"]);
    let v: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(v["mackey_class"], "M0- + M1-");
    assert_eq!(v["level_dims"], serde_json::json!([1, 2, 0]));
    let out = stdout(&["bgs1", "--n", "1", "--maxdeg", "2", "--format", "records"]);
    let rows: Vec<serde_json::Value> = out.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(rows.len(), 3 * 2);
    assert_eq!(rows[1], serde_json::json!({"degree": 0, "level": 1, "dim": 3, "mackey_class": "M0 + 2*M1"}));
}

#[test]
fn deterministic() {
    let args = ["compare", "--n", "2", "--bound", "2"];
    assert_eq!(execute(args), execute(args));
    assert!(stdout(&args).contains("0 disagreement(s)"));
}

#[test]
fn out_file() {
    let dir = std::env::temp_dir().join(format!("ratmackey-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("stem.txt");
    let o = execute(["stems", "--n", "2", "--degree", "1-sigma", "--out", path.to_str().unwrap()]);
    assert_eq!(o.code, 0);
    assert!(o.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), "M0- + M1-\n");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        vec!["stems", "--n", "2", "--degree", "1 +"],
        vec!["stems", "--n", "2", "--degree", "l5"],
        vec!["stems", "--n", "0", "--degree", "1"],
        vec!["stems", "--n", "2", "--degree", "1", "--method", "guess"],
        vec!["bgu", "--n", "2", "--m", "0"],
        vec!["nonsense"],
    ] {
        let o = execute(&args);
        assert_eq!(o.code, 2, "{args:?}");
        assert!(!o.stderr.is_empty());
    }
    let o = execute(["stems", "--n", "2", "--degree", "1 - 2*sigma +\n  tau"]);
    assert!(o.stderr.contains("line 2, column 3"), "{}", o.stderr);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_ratmackey");
    let ok = Command::new(bin).args(["stems", "--n", "2", "--degree", "1 - 1*sigma"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&ok.stdout), "M0- + M1-\n");
    let bad = Command::new(bin).args(["stems", "--n", "2", "--degree", "1 + tau"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
    let st = Command::new(bin).args(["selftest", "--quick"]).output().unwrap();
    assert_eq!(st.status.code(), Some(0), "{}", String::from_utf8_lossy(&st.stdout));
}
