use std::fs;
use std::process::{Command, Output};

use stabchar::embeddings::{Decomposition, EmbeddingTable};
use stabchar::{part, Basis, FormalSum};

fn stabchar(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_stabchar"))
        .args(args)
        .env_remove("STABCHAR_CACHE_DIR")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = stabchar(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn worked_example_text_and_json() {
    assert_eq!(
        stdout(&["embed", "--series", "one", "--lambda", "3,2,2"]),
        "sp[3,2,2] + sp[3,1,1] + sp[2,2,1] + sp[3] + sp[2,1]\n"
    );
    let json: serde_json::Value = serde_json::from_str(&stdout(&[
        "embed", "--series", "one", "--lambda", "3,2,2", "--json",
    ]))
    .unwrap();
    assert_eq!(json["schema"], 1);
    let d = Decomposition::from_json(&json).unwrap();
    assert_eq!(d.source(), &part![3, 2, 2]);
    assert_eq!(d.sum().len(), 5);
}

#[test]
fn expand_products_and_skews() {
    assert_eq!(
        stdout(&["expand", "--skew", "3,2,2/1,1"]),
        "s[3,1,1] + s[2,2,1]\n"
    );
    assert_eq!(
        stdout(&["expand", "--lambda", "3,2,2", "--mu", "1,1"]),
        "s[3,1,1] + s[2,2,1]\n"
    );
    assert_eq!(stdout(&["expand", "--multiply", "1/1"]), "s[2] + s[1,1]\n");
    assert_eq!(
        stdout(&["expand", "--multiply", "2,1/1", "--bcd"]),
        "sp[3,1] + sp[2,2] + sp[2,1,1] + sp[2] + sp[1,1]\n"
    );
    let json: serde_json::Value =
        serde_json::from_str(&stdout(&["expand", "--multiply", "1/1", "--json"])).unwrap();
    let sum = FormalSum::from_json(&json).unwrap();
    assert_eq!(sum.basis(), Basis::Schur);
    assert_eq!(sum.len(), 2);
}

#[test]
fn kappa_listing_and_positivity() {
    assert_eq!(
        stdout(&["kappa", "--series", "one", "--degree", "4"]),
        "0: s[]\n1: 0\n2: s[1,1]\n3: 0\n4: s[2,2] + s[1,1,1,1]\n"
    );
    let out = stabchar(&[
        "kappa",
        "--series",
        "1,0,2",
        "--degree",
        "4",
        "--check-positivity",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        String::from_utf8_lossy(&out.stdout),
        "violation: s[1,1] coeff -1\n"
    );
    assert_eq!(
        stdout(&[
            "kappa",
            "--series",
            "geom2",
            "--degree",
            "6",
            "--check-positivity"
        ]),
        "positive through degree 6\n"
    );
}

#[test]
fn kr_family_output() {
    assert_eq!(
        stdout(&["embed", "--family", "BD", "--lambda", "3,2,2", "--weights"]),
        "V(w1 + 2*w3) + V(2*w1 + w3) + V(w2 + w3) + V(3*w1) + V(w1 + w2)\n# valid for rank > 5\n"
    );
    let json: serde_json::Value = serde_json::from_str(&stdout(&[
        "embed", "--family", "C", "--lambda", "2,2", "--json",
    ]))
    .unwrap();
    assert_eq!(json["basis"], "sp");
    assert_eq!(json["note"], "valid for rank > 4");
}

#[test]
fn table_file_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t.json");
    let text = stdout(&["table", "--series", "1,1", "--cutoff", "4"]);
    let table = EmbeddingTable::from_json(&text).unwrap();
    assert_eq!(table.cutoff(), 4);
    fs::write(&path, &text).unwrap();
    let p = path.to_str().unwrap();
    for lambda in ["2,1", "3", "1,1,1", "2,2"] {
        assert_eq!(
            stdout(&["embed", "--table", p, "--lambda", lambda]),
            stdout(&["embed", "--series", "1,1", "--lambda", lambda]),
            "{lambda}"
        );
    }
    // a cutoff too small for the shape is reported, not guessed
    let out = stabchar(&["embed", "--table", p, "--lambda", "2,2,1,1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_reports_and_exit_codes() {
    let out = stabchar(&["verify", "--prop", "kr", "--max", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("seed 0\n"));
    assert!(text.lines().filter(|l| l.starts_with("PASS")).count() == 8);
    assert!(text.ends_with("summary passed=8 failed=0\n"));
    let out = stabchar(&["verify", "--prop", "parity", "--series", "1,1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn errors_exit_with_two() {
    for args in [
        &["embed", "--lambda", "x", "--series", "one"][..],
        &["embed", "--lambda", "2,1"],
        &["kappa", "--series", "0,1", "--degree", "3"],
        &["expand", "--multiply", "2,1"],
        &["frobnicate"],
    ] {
        let out = stabchar(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn output_is_byte_deterministic() {
    for args in [
        &["kappa", "--series", "geom", "--degree", "7", "--json"][..],
        &["embed", "--series", "1,3,-2", "--lambda", "4,2,1"],
        &[
            "verify", "--prop", "linear", "--d", "1", "--k", "5", "--seed", "9",
        ],
        &[
            "scan",
            "--grid",
            "a=0..1/2:1/4,b=0..1/2:1/4",
            "--degree",
            "9",
        ],
    ] {
        assert_eq!(stabchar(args).stdout, stabchar(args).stdout, "{args:?}");
    }
}

#[test]
fn scan_reports_and_writes_csv() {
    let text = stdout(&["scan", "--a", "1/4", "--b", "3/10"]);
    assert!(text.contains("s[3,2,2,1,1]: 0\n"), "{text}");
    assert!(text.contains("b is on"), "{text}");
    let text = stdout(&["scan", "--a", "0", "--b", "0", "--degree", "6"]);
    assert!(text.contains("all coefficients nonnegative"), "{text}");

    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("out.csv");
    stdout(&[
        "scan",
        "--grid",
        "a=0..1/2:1/4,b=0..1:1/2",
        "--degree",
        "9",
        "--csv",
        csv.to_str().unwrap(),
    ]);
    let rows: Vec<String> = fs::read_to_string(&csv)
        .unwrap()
        .lines()
        .map(String::from)
        .collect();
    assert_eq!(rows.len(), 10);
    assert!(rows[0].starts_with("a,b,degree,coeff_32211"));
    assert!(rows[1].starts_with("0,0,9,"));
    let help = stdout(&["scan", "--help"]);
    assert!(help.contains("b_vs_boundary"));
}

#[test]
fn cache_directory_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_stabchar"))
            .args(["expand", "--skew", "4,3,2/2,1"])
            .env("STABCHAR_CACHE_DIR", dir.path())
            .output()
            .unwrap()
    };
    let first = run();
    assert!(first.status.success());
    let files: Vec<_> = fs::read_dir(dir.path()).unwrap().collect();
    assert_eq!(files.len(), 1, "one cache file written");
    let second = run();
    assert_eq!(first.stdout, second.stdout);
    let flag = Command::new(env!("CARGO_BIN_EXE_stabchar"))
        .args([
            "--cache-dir",
            dir.path().to_str().unwrap(),
            "expand",
            "--skew",
            "4,3,2/2,1",
        ])
        .output()
        .unwrap();
    assert_eq!(flag.stdout, first.stdout);
}
