use std::io::Write;
use std::process::{Command, Output, Stdio};

use maxrep::runs::{enumerate_runs, Run};
use maxrep::Word;
use serde_json::Value;

fn maxrep(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_maxrep"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn with_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_maxrep"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("valid JSON on stdout")
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

#[test]
fn runs_json_round_trips() {
    let out = maxrep(&["--format", "json", "runs", "abaababbababb"]);
    assert_eq!(code(&out), 0);
    let doc = json(&out);
    let runs: Vec<Run> = serde_json::from_value(doc["runs"].clone()).unwrap();
    assert_eq!(runs.len(), 8);
    assert!(runs.contains(&Run {
        start: 7,
        end: 11,
        period: 2
    }));
    let w = Word::parse("abaababbababb").unwrap();
    assert_eq!(runs, enumerate_runs(&w));

    let naive = json(&maxrep(&[
        "--format",
        "json",
        "runs",
        "--naive",
        "abaababbababb",
    ]));
    assert_eq!(naive["runs"], doc["runs"]);
}

#[test]
fn run_free_word() {
    let out = maxrep(&["--format", "json", "runs", "ab"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["runs"], Value::Array(vec![]));
}

#[test]
fn assign_and_roots() {
    let doc = json(&maxrep(&["--format", "json", "assign", "aa"]));
    assert_eq!(doc["assignments"][0]["k"], 1);
    assert_eq!(doc["distinct"], true);

    let doc = json(&maxrep(&["--format", "json", "roots", "aa"]));
    let roots = doc["roots"].as_array().unwrap();
    let find = |kind: &str| {
        roots
            .iter()
            .find(|r| r["kind"] == kind)
            .map(|r| (r["start"].as_u64().unwrap(), r["end"].as_u64().unwrap()))
    };
    assert_eq!(find("lroot"), Some((0, 0)));
    assert_eq!(find("oroot"), Some((1, 1)));

    let doc = json(&maxrep(&[
        "--format", "json", "roots", "--kind", "oroot", "baba",
    ]));
    let roots = doc["roots"].as_array().unwrap();
    assert_eq!(roots.len(), 1);
    assert_eq!(
        (roots[0]["start"].as_u64(), roots[0]["end"].as_u64()),
        (Some(1), Some(2))
    );
}

#[test]
fn critical_cut() {
    let doc = json(&maxrep(&[
        "--format", "json", "critical", "abaaba", "--cut", "5",
    ]));
    let cut = &doc["cuts"][0];
    assert_eq!(cut["cut"], 5);
    assert_eq!(cut["local_period"], 2);
    assert_eq!(cut["critical"], false);
}

#[test]
fn density_of_interval_and_witness() {
    let doc = json(&maxrep(&[
        "--format",
        "json",
        "density",
        "ababaababbababb",
        "--interval",
        "4",
        "9",
    ]));
    assert_eq!(doc["count"], 6);
    assert_eq!(doc["ratio"].as_f64(), Some(1.0));

    let out = maxrep(&["witness", "3"]);
    let word = String::from_utf8(out.stdout).unwrap().trim().to_string();
    let doc = json(&maxrep(&["--format", "json", "density", &word]));
    assert_eq!(
        (doc["start"].as_u64(), doc["end"].as_u64()),
        (Some(6), Some(13))
    );
    assert_eq!(doc["ratio"].as_f64(), Some(1.0));
}

#[test]
fn small_sweep() {
    let out = maxrep(&[
        "--format",
        "json",
        "sweep",
        "--alphabet",
        "2",
        "--max-len",
        "6",
        "--checks",
        "runs-lt-n",
    ]);
    assert_eq!(code(&out), 0);
    let doc = json(&out);
    assert_eq!(doc["words"], 126);
    assert_eq!(doc["checks"][0]["violations"], 0);
}

#[test]
fn failing_check_exits_one() {
    let out = maxrep(&["sweep", "--max-len", "4", "--checks", "oroot-same-order"]);
    assert_eq!(code(&out), 1);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(code(&maxrep(&["sweep", "--checks", "bogus"])), 2);
    assert_eq!(code(&maxrep(&["runs", "ab1"])), 2);
    assert_eq!(code(&maxrep(&["runs"])), 2);
    assert_eq!(code(&maxrep(&["critical", "abc", "--cut", "9"])), 2);
}

#[test]
fn batch_mode() {
    let out = with_stdin(&["--stdin", "--format", "json", "runs"], "abab\n\naab\n");
    assert_eq!(code(&out), 0);
    let doc = json(&out);
    let items = doc.as_array().unwrap();
    assert_eq!(items.len(), 2);
    assert_eq!(items[1]["word"], "aab");

    let out = with_stdin(&["--stdin", "--format", "csv", "runs"], "abab\naab\n");
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text, "word,start,end,period\nabab,0,3,2\naab,0,1,1\n");

    let out = with_stdin(
        &[
            "--stdin",
            "--format",
            "json",
            "sweep",
            "--checks",
            "runs-lt-n",
        ],
        "abaababbababb\naa\n",
    );
    assert_eq!(json(&out)["words"], 2);
}
