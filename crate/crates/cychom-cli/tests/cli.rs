//! End-to-end tests of the binary: output shape, determinism, exit codes.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_cychom"))
}

fn data(file: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../data")
        .join(file)
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn hc_prints_hochschild_and_cyclic_with_agreement() {
    let out = run(&[
        "hc",
        "--input",
        data("dual_numbers.toml").to_str().unwrap(),
        "--max-degree",
        "3",
        "--no-timestamp",
    ]);
    assert!(out.status.success(), "{out:?}");
    let text = stdout(&out);
    assert!(text.contains("hochschild"), "{text}");
    assert!(text.contains("cyclic (connes)"), "{text}");
    assert!(text.contains("cyclic (bicomplex)"), "{text}");
    assert!(text.contains("cyclic (mixed)"), "{text}");
    // Degree rows: HH = 2,1,1,1 and HC = 2,0,2,0, all agreeing.
    assert!(text.contains("0       2           2"), "{text}");
    assert!(text.contains("1       1           0"), "{text}");
    for line in text
        .lines()
        .filter(|l| l.starts_with(|c: char| c.is_ascii_digit()))
    {
        assert!(line.trim_end().ends_with("yes"), "{line}");
    }
    // The convention header is always present.
    assert!(text.contains("# convention composition"), "{text}");
}

#[test]
fn output_is_byte_identical_without_timestamp() {
    let input = data("k.toml");
    let args = [
        "hc",
        "--input",
        input.to_str().unwrap(),
        "--max-degree",
        "2",
        "--no-timestamp",
        "--output",
        "json",
    ];
    let a = run(&args);
    let b = run(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let parsed: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert!(parsed["timestamp"].is_null());
    assert_eq!(parsed["tables"][0]["rows"][0][1], "1");
}

#[test]
fn csv_format_and_env_override() {
    let out = bin()
        .env("CYCHOM_OUTPUT", "csv")
        .args([
            "hc",
            "--input",
            data("k.toml").to_str().unwrap(),
            "--max-degree",
            "1",
            "--no-timestamp",
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("degree,hochschild"), "{text}");
    // A flag beats the environment.
    let out = bin()
        .env("CYCHOM_OUTPUT", "csv")
        .args([
            "hc",
            "--input",
            data("k.toml").to_str().unwrap(),
            "--max-degree",
            "1",
            "--no-timestamp",
            "--output",
            "json",
        ])
        .output()
        .unwrap();
    assert!(stdout(&out).starts_with('{'), "{}", stdout(&out));
}

#[test]
fn compose_normalizes_expressions() {
    let out = run(&["compose", "s1_1 . d1_0 . t1^1", "--no-timestamp"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(
        text.contains("normal form     s1_1 . d1_0 . t1^1"),
        "{text}"
    );
    assert!(text.contains("underlying map  [1, 1]"), "{text}");

    let out = run(&["compose", "not a morphism"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_reports_clean_relations() {
    let out = run(&[
        "verify",
        "--max-level",
        "3",
        "--input",
        data("z2_group.toml").to_str().unwrap(),
        "--no-timestamp",
    ]);
    assert!(out.status.success(), "{out:?}");
    let text = stdout(&out);
    assert!(text.contains("index category"), "{text}");
    assert!(text.contains("module of kZ/2"), "{text}");
}

#[test]
fn charmap_pairs_gated_classes() {
    let out = run(&[
        "charmap",
        "--action",
        data("z2_swap_action.toml").to_str().unwrap(),
        "--degree",
        "0",
        "--probe-trials",
        "3",
        "--no-timestamp",
    ]);
    assert!(out.status.success(), "{out:?}");
    let text = stdout(&out);
    assert!(text.contains("gated[0]"), "{text}");
    assert!(text.contains("nontrivial"), "{text}");
    assert!(text.contains("3/3"), "{text}");

    // Degree 1 has no gated cocycles: an empty classes table, still success.
    let out = run(&[
        "charmap",
        "--action",
        data("z2_swap_action.toml").to_str().unwrap(),
        "--degree",
        "1",
        "--no-timestamp",
    ]);
    assert!(out.status.success(), "{out:?}");
    assert!(
        stdout(&out).contains("gated cocycles        0"),
        "{}",
        stdout(&out)
    );
}

#[test]
fn exit_codes_separate_usage_math_and_budget() {
    // Unreadable / unparseable input: usage (2).
    let out = run(&["hc", "--input", "/nonexistent.toml"]);
    assert_eq!(out.status.code(), Some(2));

    // Parseable file describing broken mathematics: violation (1).
    let dir = std::env::temp_dir().join("cychom-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("broken_unit.toml");
    std::fs::write(
        &bad,
        "kind = \"algebra\"\nlabels = [\"1\",\"x\"]\nunit = [\"1\",\"0\"]\n\
         structure = [[0,0,0,\"1\"],[0,1,1,\"1\"],[1,0,0,\"1\"],[1,1,1,\"1\"]]\n",
    )
    .unwrap();
    let out = run(&["hc", "--input", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("unit law"), "{err}");

    // Over the memory budget: 3.
    let out = run(&[
        "hc",
        "--input",
        data("z2_group.toml").to_str().unwrap(),
        "--max-degree",
        "5",
        "--budget-mb",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(3));

    // Degree outside the certified window: usage (2).
    let out = run(&[
        "hc",
        "--input",
        data("k.toml").to_str().unwrap(),
        "--max-degree",
        "4",
        "--truncation",
        "3",
    ]);
    assert_eq!(out.status.code(), Some(2));
}
