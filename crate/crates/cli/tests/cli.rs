use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use cuephrase::corpus::HEADER;

fn cuephrase(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cuephrase"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn ok(args: &[&str], dir: &Path) -> String {
    let o = cuephrase(args, dir);
    assert!(
        o.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&o.stderr)
    );
    stdout(&o)
}

const ROWS: &str = "\
9,1,1,1,only,H*+L,complex,f,t,par.,t,f,f,adverb,now,discourse
9,2,8,1,other,H*,H*,t,f,f,f,f,f,adverb,now,sentential
";

fn write_rows(dir: &Path) {
    fs::write(dir.join("rows.csv"), format!("{HEADER},class\n{ROWS}")).unwrap();
}

#[test]
fn baseline_on_reference_rows() {
    let dir = tempfile::tempdir().unwrap();
    write_rows(dir.path());
    let out = ok(&["baseline", "--model", "prosodic", "--in", "rows.csv"], dir.path());
    assert!(out.contains("errors: 0"), "{out}");
    assert!(out.contains("line 1: 1\n") && out.contains("line 6: 1\n"), "{out}");
    let out = ok(&["baseline", "--model", "textual", "--in", "rows.csv"], dir.path());
    assert!(out.contains("line 9: 1\n") && out.contains("line 10: 1\n"), "{out}");
    let out = ok(&["baseline", "--model", "majority", "--in", "rows.csv"], dir.path());
    assert!(out.contains("error: 0.5000"), "{out}");
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(cuephrase(&["frobnicate"], dir.path()).status.code(), Some(2));
    assert_eq!(
        cuephrase(&["baseline", "--model", "oracle", "--in", "x"], dir.path())
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        cuephrase(&["baseline", "--model", "prosodic", "--in", "missing.csv"], dir.path())
            .status
            .code(),
        Some(1)
    );
    fs::write(dir.path().join("bad.csv"), "nonsense\n").unwrap();
    let o = cuephrase(&["eval", "--model", "bad.csv", "--in", "bad.csv"], dir.path());
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).starts_with("error:"));
}

#[test]
fn train_eval_explain_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    ok(
        &[
            "gen",
            "--n",
            "400",
            "--labeler",
            "prosodic",
            "--seed",
            "2",
            "--out",
            "train.csv",
        ],
        d,
    );
    for learner in ["tree", "rules"] {
        let model = format!("{learner}.txt");
        ok(
            &[
                "train",
                "--learner",
                learner,
                "--set",
                "hl93features",
                "--in",
                "train.csv",
                "--out",
                &model,
            ],
            d,
        );
        let out = ok(&["eval", "--model", &model, "--in", "train.csv"], d);
        assert!(out.contains("n: 400"), "{out}");
        let explained = ok(&["explain", "--model", &model], d);
        assert!(explained.contains("composition of intermediate phrase"), "{explained}");
    }
    // A saved rule list can label a new corpus.
    ok(
        &[
            "gen",
            "--n",
            "50",
            "--labeler",
            "rules:rules.txt",
            "--seed",
            "3",
            "--out",
            "relabeled.csv",
        ],
        d,
    );
    let out = ok(&["eval", "--model", "rules.txt", "--in", "relabeled.csv"], d);
    assert!(out.contains("errors: 0 "), "{out}");
    let o = cuephrase(&["gen", "--n", "5", "--labeler", "rules:tree.txt", "--out", "x.csv"], d);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn unpruned_tree_fits_training_data() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    ok(
        &[
            "gen",
            "--n",
            "300",
            "--labeler",
            "textual",
            "--noise",
            "0.2",
            "--seed",
            "4",
            "--out",
            "c.csv",
        ],
        d,
    );
    ok(
        &[
            "train",
            "--learner",
            "tree",
            "--set",
            "hl93features+",
            "--in",
            "c.csv",
            "--out",
            "t.txt",
            "--no-prune",
        ],
        d,
    );
    ok(
        &[
            "train",
            "--learner",
            "tree",
            "--set",
            "hl93features+",
            "--in",
            "c.csv",
            "--out",
            "p.txt",
        ],
        d,
    );
    let full = fs::read_to_string(d.join("t.txt")).unwrap();
    let pruned = fs::read_to_string(d.join("p.txt")).unwrap();
    assert!(pruned.lines().count() < full.lines().count());
}

#[test]
fn prepare_requires_combining_judges() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let row = "9,1,1,1,only,H*+L,complex,f,t,par.,t,f,f,adverb";
    let text = format!(
        "{HEADER},judge1,judge2\n{row},now,discourse,discourse\n{row},and,sentential,sentential\n{row},so,discourse,ambiguous\n"
    );
    fs::write(d.join("judged.csv"), text).unwrap();
    let o = cuephrase(&["prepare", "--in", "judged.csv", "--out", "out.csv"], d);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("--combine-judges"));

    ok(
        &["prepare", "--in", "judged.csv", "--combine-judges", "--out", "both.csv"],
        d,
    );
    let both = fs::read_to_string(d.join("both.csv")).unwrap();
    assert_eq!(both.lines().count(), 3);
    ok(
        &[
            "prepare",
            "--in",
            "judged.csv",
            "--combine-judges",
            "--drop-conjuncts",
            "--out",
            "nc.csv",
        ],
        d,
    );
    let nc = fs::read_to_string(d.join("nc.csv")).unwrap();
    assert_eq!(nc.lines().count(), 2);
    assert!(nc.lines().nth(1).unwrap().ends_with(",now,discourse"));
}

#[test]
fn crossval_writes_report() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    ok(
        &[
            "gen",
            "--n",
            "200",
            "--labeler",
            "prosodic",
            "--seed",
            "5",
            "--out",
            "c.csv",
        ],
        d,
    );
    let table = ok(
        &[
            "crossval",
            "--learner",
            "both",
            "--sets",
            "P-P, A",
            "--in",
            "c.csv",
            "--seed",
            "1",
        ],
        d,
    );
    let lines: Vec<&str> = table.lines().collect();
    assert_eq!(lines[0], "set  learner  mean%  stderr%");
    assert_eq!(lines.len(), 5);
    assert!(lines[1].starts_with("P-P") && lines[1].contains("tree"));
    assert!(lines[4].starts_with("A") && lines[4].contains("rules"));
    let report = fs::read_to_string(d.join("c.crossval.jsonl")).unwrap();
    assert_eq!(report.lines().count(), 4);
    for line in report.lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["runs"].as_array().unwrap().len(), 10);
    }
    let o = cuephrase(&["crossval", "--learner", "tree", "--sets", "Q-Q", "--in", "c.csv"], d);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn generation_is_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    for name in ["a.csv", "b.csv"] {
        ok(
            &[
                "gen",
                "--n",
                "100",
                "--labeler",
                "textual",
                "--noise",
                "0.1",
                "--seed",
                "9",
                "--out",
                name,
            ],
            d,
        );
    }
    assert_eq!(fs::read(d.join("a.csv")).unwrap(), fs::read(d.join("b.csv")).unwrap());
}
