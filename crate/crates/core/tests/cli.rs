//! Golden transcripts for the command-line interface.

use std::process::Command;

use pulveriser::trace;

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn run(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_pulveriser"))
        .args(args)
        .output()
        .expect("binary runs");
    Run {
        code: out.status.code().unwrap_or(-1),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn golden(args: &[&str], expected: &str) {
    let r = run(args);
    assert_eq!(r.code, 0, "{args:?}: {}", r.stderr);
    assert_eq!(r.stdout, expected, "{args:?}");
    assert!(r.stderr.is_empty(), "{args:?}: {}", r.stderr);
}

#[test]
fn triples() {
    golden(
        &["triples", "30"],
        "3 4 5\n5 12 13\n15 8 17\n7 24 25\n21 20 29\n",
    );
    golden(
        &["triples", "13", "--json"],
        "[{\"a\":\"3\",\"b\":\"4\",\"c\":\"5\"},{\"a\":\"5\",\"b\":\"12\",\"c\":\"13\"}]\n",
    );
}

#[test]
fn pothayanar() {
    golden(&["pothayanar", "3", "4"], "37/8 inexact\n");
    golden(&["pothayanar", "4", "3"], "5 exact\n");
    golden(
        &["pothayanar", "12", "5", "--json"],
        "{\"estimate\":\"13\",\"exact\":true}\n",
    );
}

#[test]
fn prosody() {
    golden(
        &["prastara", "3"],
        "GGG\nLGG\nGLG\nLLG\nGGL\nLGL\nGLL\nLLL\n",
    );
    golden(&["nashta", "4", "3"], "LLG\n");
    golden(&["uddishta", "LLG"], "4\n");
    golden(
        &["matra", "5"],
        "count 8\nLLLLL\nLLLG\nLLGL\nLGLL\nLGG\nGLLL\nGLG\nGGL\n",
    );
    golden(&["meru", "10"], "1 10 45 120 210 252 210 120 45 10 1\n");
    golden(&["exp", "3", "5"], "243\n");
    golden(&["exp", "-2", "3"], "-8\n");
    golden(&["points", "2", "3"], "11/16\n");
    golden(
        &["points", "1", "2", "--json"],
        "{\"a\":\"3/4\",\"b\":\"1/4\"}\n",
    );
}

#[test]
fn roots() {
    golden(&["sqrt", "1521"], "39 remainder 0\n");
    golden(&["sqrt", "2000", "--base", "16"], "44 remainder 64\n");
    golden(
        &["heron", "2", "1", "3"],
        "0 1 1\n1 3/2 1/4\n2 17/12 1/144\n3 577/408 1/166464\n",
    );
    golden(
        &["bakhshali", "2", "1", "2"],
        "0 1 1\n1 17/12 1/144\n2 665857/470832 1/221682772224\n",
    );
}

#[test]
fn diophantine() {
    golden(
        &["kuttaka", "17", "5", "1"],
        "x=3 y=-10 x_period=5 y_period=17 g=1\n",
    );
    golden(&["chakravala", "61"], "1766319049 226153980\n");
    golden(
        &["chakravala", "61", "--json"],
        "{\"n\":\"61\",\"x\":\"1766319049\",\"y\":\"226153980\"}\n",
    );
}

#[test]
fn comparative() {
    golden(&["egyptian", "4/17"], "1/5 + 1/29 + 1/1233 + 1/3039345\n");
    golden(
        &["egyptian", "7/3", "--json"],
        "{\"integer_part\":\"2\",\"terms\":[\"1/3\"]}\n",
    );
    golden(&["sieve", "30"], "2 3 5 7 11 13 17 19 23 29\n");
    golden(
        &["euclid", "2", "3", "5", "7", "11", "13"],
        "witness 30031 new_prime 59\n",
    );
}

#[test]
fn trace_to_stdout() {
    golden(
        &["exp", "3", "5", "--trace"],
        concat!(
            "TRACE {\"v\":1}\n",
            "TRACE {\"algorithm\":\"exp\",\"step\":1,\"state\":{\"n\":\"1\",\"depth\":\"3\",\"value\":\"3\"},\"note\":\"odd\"}\n",
            "TRACE {\"algorithm\":\"exp\",\"step\":2,\"state\":{\"n\":\"2\",\"depth\":\"2\",\"value\":\"9\"},\"note\":\"even\"}\n",
            "TRACE {\"algorithm\":\"exp\",\"step\":3,\"state\":{\"n\":\"5\",\"depth\":\"1\",\"value\":\"243\"},\"note\":\"odd\"}\n",
            "243\n",
        ),
    );
}

#[test]
fn trace_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("sqrt.jsonl");
    golden(
        &["sqrt", "1521", &format!("--trace={}", path.display())],
        "39 remainder 0\n",
    );
    let events = trace::parse_stream(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let rows: Vec<Vec<&str>> = events
        .iter()
        .map(|e| {
            ["processed", "digit", "root", "remainder"]
                .map(|k| e.get(k).unwrap())
                .to_vec()
        })
        .collect();
    assert_eq!(rows, [["15", "3", "3", "6"], ["1521", "9", "39", "0"]]);
}

#[test]
fn domain_errors_exit_three() {
    for (args, name) in [
        (&["chakravala", "49"][..], "PerfectSquare"),
        (&["sqrt", "1", "--base", "1"][..], "InvalidBase"),
        (&["kuttaka", "4", "6", "3"][..], "NotSolvable"),
        (&["euclid", "2", "4"][..], "NotPrimeInput"),
        (&["points", "0", "2"][..], "InvalidWins"),
    ] {
        let r = run(args);
        assert_eq!(r.code, 3, "{args:?}");
        assert!(r.stdout.is_empty(), "{args:?}");
        assert!(
            r.stderr.starts_with(&format!("{name}: ")),
            "{args:?}: {}",
            r.stderr
        );
    }
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["triples", "x"][..],
        &["frobnicate"][..],
        &["kuttaka", "1"][..],
        &[][..],
    ] {
        assert_eq!(run(args).code, 2, "{args:?}");
    }
}

#[test]
fn unwritable_trace_file_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("missing").join("t.jsonl");
    let r = run(&["exp", "2", "3", &format!("--trace={}", path.display())]);
    assert_eq!(r.code, 1, "{}", r.stderr);
}
