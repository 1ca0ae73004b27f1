use std::process::{Command, Output};

use k0rep_cli::json::GroupJson;
use k0rep_core::{k0_repetitive, DynkinSpec, K0Job};

fn k0rep(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_k0rep"))
        .args(args)
        .env_remove("K0REP_MAX_VERTICES")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

#[test]
fn compute_examples() {
    let o = k0rep(&["compute", "--family", "A", "--n", "3", "--p", "1"]);
    assert_eq!((code(&o), stdout(&o).as_str()), (0, "Z\n"));
    let o = k0rep(&[
        "compute", "--family", "D", "--n", "4", "--p", "1", "--format", "json",
    ]);
    assert_eq!(
        (code(&o), stdout(&o).as_str()),
        (0, "{\"rank\":2,\"torsion\":[]}\n")
    );
    let o = k0rep(&["compute", "--family", "A", "--n", "2", "--p", "3"]);
    assert_eq!((code(&o), stdout(&o).as_str()), (0, "Z/2 ⊕ Z/2\n"));
}

#[test]
fn compute_json_round_trips() {
    for (n, p) in [(3, 2), (2, 3), (5, 6), (4, 5)] {
        let o = k0rep(&[
            "compute",
            "--family",
            "A",
            "--n",
            &n.to_string(),
            "--p",
            &p.to_string(),
            "--format",
            "json",
        ]);
        assert_eq!(code(&o), 0);
        let parsed: GroupJson = serde_json::from_str(stdout(&o).trim()).unwrap();
        let expected = k0_repetitive(&K0Job::new(DynkinSpec::a(n).unwrap(), p).unwrap());
        assert_eq!(parsed.to_group(), Some(expected.clone()));
        assert_eq!(GroupJson::from_group(&expected), Some(parsed));
    }
}

#[test]
fn compute_cross_checks() {
    let o = k0rep(&[
        "compute", "--family", "D", "--n", "6", "--p", "5", "--method", "both",
    ]);
    assert_eq!(code(&o), 0);
    let o = k0rep(&[
        "compute", "--family", "A", "--n", "3", "--p", "7", "--method", "all",
    ]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).ends_with("PASS\n"));
    // both computations agree, the closed form does not
    let o = k0rep(&[
        "compute", "--family", "D", "--n", "5", "--p", "4", "--method", "all",
    ]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("snf: Z ⊕ Z/2 ⊕ Z/2 ⊕ Z/2\nar: Z ⊕ Z/2 ⊕ Z/2 ⊕ Z/2\npredict: Z^5"));
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["compute", "--family", "D", "--n", "2", "--p", "1"][..],
        &["compute", "--family", "A", "--n", "3", "--p", "0"],
        &["compute", "--family", "B", "--n", "3", "--p", "1"],
        &["compute", "--family", "A", "--n", "3"],
        &[
            "compute", "--family", "A", "--n", "3", "--p", "1", "--format", "csv",
        ],
        &[
            "sweep",
            "--family",
            "A",
            "--n-range",
            "4..2",
            "--p-range",
            "1..2",
        ],
        &[
            "compute",
            "--family",
            "D",
            "--n",
            "6",
            "--p",
            "8",
            "--method",
            "ar",
            "--max-vertices",
            "10",
        ],
    ] {
        assert_eq!(code(&k0rep(args)), 2, "{args:?}");
    }
}

#[test]
fn golden_suite_reports_exactly_the_known_discrepancies() {
    let o = k0rep(&["verify", "--suite", "paper"]);
    assert_eq!(code(&o), 1);
    let out = stdout(&o);
    let failed: Vec<&str> = out
        .lines()
        .filter_map(|l| l.strip_prefix("FAIL golden "))
        .collect();
    assert_eq!(failed, ["D5 Φ^4 = −I", "predict D5 p=4"]);
    assert!(out.contains("38 passed, 2 failed, 0 skipped"));
    assert!(out.contains("failures:\nD5 Φ^4 = −I\n  - expected: "));
}

#[test]
fn cross_suite_passes() {
    let o = k0rep(&["verify", "--suite", "cross", "--max-n", "6", "--max-p", "8"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).ends_with("80 passed, 0 failed, 0 skipped\n"));
}

#[test]
fn budget_from_env_and_flag() {
    let run = |env: Option<&str>, flag: Option<&str>| {
        let mut c = Command::new(env!("CARGO_BIN_EXE_k0rep"));
        c.args(["verify", "--suite", "cross", "--max-n", "3", "--max-p", "2"]);
        if let Some(f) = flag {
            c.args(["--max-vertices", f]);
        }
        match env {
            Some(e) => c.env("K0REP_MAX_VERTICES", e),
            None => c.env_remove("K0REP_MAX_VERTICES"),
        };
        let o = c.output().unwrap();
        assert_eq!(code(&o), 0);
        stdout(&o).lines().filter(|l| l.starts_with("SKIP")).count()
    };
    assert_eq!(run(None, None), 0);
    assert!(run(Some("5"), None) > 0);
    assert_eq!(run(Some("5"), Some("1000")), 0);
}

#[test]
fn sweep_table() {
    let o = k0rep(&[
        "sweep",
        "--family",
        "A",
        "--n-range",
        "2..4",
        "--p-range",
        "1..8",
    ]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("family,n,p,group,rank,torsion,source"));
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 24);
    assert!(rows.contains(&"A,3,4,Z^3,3,,snf"));
    assert!(rows.contains(&"A,2,3,Z/2 + Z/2,0,2 2,snf"));

    let o = k0rep(&[
        "sweep",
        "--family",
        "D",
        "--n-range",
        "5..5",
        "--p-range",
        "8..8",
        "--method",
        "snf,ar,predict",
    ]);
    let out = stdout(&o);
    assert_eq!(
        out.lines()
            .filter(|l| l.starts_with("D,5,8,Z^5,5,"))
            .count(),
        3
    );
}

#[test]
fn sweep_is_deterministic_and_writes_files() {
    let dir = tempfile::tempdir().unwrap();
    let mut outputs = Vec::new();
    for (i, jobs) in ["1", "4", "4"].iter().enumerate() {
        let path = dir.path().join(format!("s{i}.json"));
        let o = k0rep(&[
            "sweep",
            "--family",
            "D",
            "--n-range",
            "3..6",
            "--p-range",
            "1..10",
            "--method",
            "snf,ar,predict",
            "--format",
            "json",
            "--jobs",
            jobs,
            "--out",
            path.to_str().unwrap(),
        ]);
        assert_eq!(code(&o), 0);
        assert!(o.stdout.is_empty());
        outputs.push(std::fs::read(&path).unwrap());
    }
    assert!(outputs.windows(2).all(|w| w[0] == w[1]));
    let rows: Vec<serde_json::Value> = serde_json::from_slice(&outputs[0]).unwrap();
    assert_eq!(rows.len(), 4 * 10 * 3);
    assert_eq!(rows[0]["family"], "D");
    assert_eq!(rows[0]["source"], "snf");

    let bad = dir.path().join("missing").join("x.csv");
    let o = k0rep(&[
        "sweep",
        "--family",
        "A",
        "--n-range",
        "2..3",
        "--p-range",
        "1..2",
        "--out",
        bad.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 2);
}

#[test]
fn quiver_dot() {
    let o = k0rep(&["quiver", "--family", "D", "--n", "3", "--p", "2"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.starts_with("digraph \"D3_p2\" {\n"));
    assert_eq!(out.matches("[label=\"(").count(), 18);
}
