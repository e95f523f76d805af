//! End-to-end behaviour of the binary: exit codes, formats, determinism.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ringdiv"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 output")
}

#[test]
fn exit_code_contract() {
    assert_eq!(
        run(&["verify", "--suite", "appendix"]).status.code(),
        Some(0)
    );
    assert_eq!(
        run(&["verify", "--suite", "cliff76", "--semantics", "naive"])
            .status
            .code(),
        Some(1)
    );
    // Usage errors: unknown suite, unknown semantics, bad index, bad word.
    assert_eq!(run(&["verify", "--suite", "nope"]).status.code(), Some(2));
    assert_eq!(
        run(&["verify", "--suite", "all", "--semantics", "sloppy"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["gen", "left", "--algebra", "o", "--index", "9"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(run(&["rank", "L9"]).status.code(), Some(2));
    assert_eq!(run(&["rank"]).status.code(), Some(2));
    assert_eq!(
        run(&["rank", "--preset", "complex-4", "L1"]).status.code(),
        Some(2)
    );
    // Clap rejects unknown subcommands with the same usage code.
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    // Write failure to an impossible path.
    assert_eq!(
        run(&[
            "gen",
            "left",
            "--algebra",
            "o",
            "--index",
            "1",
            "--output",
            "/nonexistent-dir/matrix.json"
        ])
        .status
        .code(),
        Some(3)
    );
}

#[test]
fn verify_all_is_deterministic_modulo_wall_time() {
    let a = run(&["verify", "--suite", "all"]);
    let b = run(&["verify", "--suite", "all"]);
    assert!(a.status.success() && b.status.success());

    fn strip_wall_time(value: &mut serde_json::Value) {
        match value {
            serde_json::Value::Object(map) => {
                map.remove("wall_time_ms");
                for v in map.values_mut() {
                    strip_wall_time(v);
                }
            }
            serde_json::Value::Array(items) => {
                for v in items {
                    strip_wall_time(v);
                }
            }
            _ => {}
        }
    }

    let mut ja: serde_json::Value = serde_json::from_str(&stdout(&a)).unwrap();
    let mut jb: serde_json::Value = serde_json::from_str(&stdout(&b)).unwrap();
    strip_wall_time(&mut ja);
    strip_wall_time(&mut jb);
    assert_eq!(
        serde_json::to_string(&ja).unwrap(),
        serde_json::to_string(&jb).unwrap()
    );
}

#[test]
fn reports_go_to_stdout_progress_to_stderr() {
    let out = run(&["verify", "--suite", "complex-basis"]);
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["suite"], "complex-basis");
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("complex-basis"), "progress line on stderr");
}

#[test]
fn gen_formats() {
    let csv = run(&[
        "gen",
        "left",
        "--algebra",
        "c",
        "--index",
        "1",
        "--format",
        "csv",
    ]);
    assert_eq!(stdout(&csv), "0,-1\n1,0\n");

    let plain = run(&[
        "gen",
        "left",
        "--algebra",
        "c",
        "--index",
        "1",
        "--format",
        "plain",
    ]);
    assert_eq!(stdout(&plain), "E1\n 0 -1\n 1  0\n");

    let json = run(&["gen", "mixed", "-i", "1", "-j", "2", "--format", "json"]);
    let record: serde_json::Value = serde_json::from_str(&stdout(&json)).unwrap();
    assert_eq!(record["side"], "mixed");
    assert_eq!(record["indices"], serde_json::json!([1, 2]));
    assert_eq!(record["dimension"], 4);
}

#[test]
fn gen_appendix_emits_fourteen_records() {
    let out = run(&["gen", "appendix", "--format", "json"]);
    let body: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(body["set"], "appendix");
    assert_eq!(body["matrices"].as_array().unwrap().len(), 14);
}

#[test]
fn gen_gamma_cliff76_splits_barred_generators() {
    let out = run(&["gen", "gamma", "--set", "cliff76", "--format", "json"]);
    let body: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let generators = body["generators"].as_array().unwrap();
    assert_eq!(generators.len(), 13);
    // Pure-left generators carry one matrix, barred ones a pair.
    assert_eq!(generators[0]["matrices"].as_array().unwrap().len(), 1);
    assert_eq!(generators[6]["matrices"].as_array().unwrap().len(), 2);

    let plain = run(&["gen", "gamma", "--set", "cliff76", "--format", "plain"]);
    let text = stdout(&plain);
    assert!(text.contains("gamma_0 = E2"));
    assert!(text.contains("gamma_6 = E1 x 1|E1"));
}

#[test]
fn gen_mixed_rejects_non_quaternion_algebra() {
    let out = run(&["gen", "mixed", "--algebra", "o", "-i", "1", "-j", "2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn gen_writes_files() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("e1.json");
    let out = run(&[
        "gen",
        "left",
        "--algebra",
        "h",
        "--index",
        "1",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    let record: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(record["algebra"], "H");
    assert_eq!(record["dimension"], 4);
}

#[test]
fn rank_words_and_presets() {
    let two = run(&["rank", "L1", "R1"]);
    let body: serde_json::Value = serde_json::from_str(&stdout(&two)).unwrap();
    assert_eq!(body["rank"], 2);
    assert_eq!(body["matrices"], 2);

    let dup = run(&["rank", "L1", "L1"]);
    let body: serde_json::Value = serde_json::from_str(&stdout(&dup)).unwrap();
    assert_eq!(body["rank"], 1);

    // The two orderings of gamma_0 gamma_9 differ exactly by sign
    // ({E1, E2} = 0), so they span a line.
    let multi = run(&["rank", "L2.L1.R4", "L1.R4.L2"]);
    let body: serde_json::Value = serde_json::from_str(&stdout(&multi)).unwrap();
    assert_eq!(body["rank"], 1);

    let mixed_pair = run(&["rank", "L2.L1.R4", "L1.R3"]);
    let body: serde_json::Value = serde_json::from_str(&stdout(&mixed_pair)).unwrap();
    assert_eq!(body["rank"], 2);

    for (preset, rank) in [
        ("quaternion-16", 16u64),
        ("complex-4", 4),
        ("octonion-left", 64),
        ("octonion-right", 64),
        ("octonion-two-sided", 63),
    ] {
        let out = run(&["rank", "--preset", preset]);
        assert!(out.status.success(), "{preset}");
        let body: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
        assert_eq!(body["rank"], rank, "{preset}");
        assert_eq!(body["matches_expected"], true, "{preset}");
    }
}
