use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn blockcount(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_blockcount"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = blockcount(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn code(args: &[&str]) -> i32 {
    blockcount(args).status.code().unwrap()
}

fn json(args: &[&str]) -> serde_json::Value {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    serde_json::from_str(&stdout(&all)).unwrap()
}

#[test]
fn verlinde_d4_genus_two() {
    assert_eq!(stdout(&["verlinde", "D4", "--level", "1", "--genus", "2"]), "16\n");
    let v = json(&["verlinde", "so8", "--level", "1", "--genus", "2"]);
    assert_eq!(v["result"]["dimension"], 16);
    assert_eq!(v["exact"], true);
    assert_eq!(v["schema"], "1");
    assert_eq!(v["query"]["algebra"], "D4");
}

#[test]
fn adjoint_a2_is_conformal() {
    let text = stdout(&["conformal-check", "ad", "A2"]);
    assert!(text.starts_with("true\nwitness: 4 = 4\n"), "{text}");
    let v = json(&["conformal-check", "ad", "A2"]);
    assert_eq!(v["result"]["conformal"], true);
    assert_eq!(v["result"]["witness"], "4 = 4");
    assert_eq!(v["result"]["index"], "3");
}

#[test]
fn alcove_a1_level_two_has_three_weights() {
    let text = stdout(&["alcove", "A1", "--level", "2"]);
    assert_eq!(text.lines().count(), 3);
    let v = json(&["alcove", "A1", "--level", "2"]);
    assert_eq!(v["result"]["count"], 3);
    let ws: Vec<&str> = v["result"]["weights"]
        .as_array()
        .unwrap()
        .iter()
        .map(|w| w["weight"].as_str().unwrap())
        .collect();
    assert_eq!(ws, ["(0)", "(1)", "(2)"]);
}

#[test]
fn rationals_are_strings() {
    let v = json(&["charge", "G2", "--level", "1/2"]);
    assert_eq!(v["result"]["central_charge"], "14/9");
    assert_eq!(v["query"]["level"], "1/2");
}

#[test]
fn exit_codes() {
    // parse errors
    assert_eq!(code(&["alcove", "Q3", "--level", "1"]), 2);
    assert_eq!(code(&["alcove", "A1"]), 2);
    assert_eq!(code(&["fuse", "A2", "--level", "1", "1,x", "0,0"]), 2);
    assert_eq!(code(&["charge", "A2", "--level", "half"]), 2);
    assert_eq!(code(&["frobnicate"]), 2);
    // domain errors
    assert_eq!(code(&["fuse", "A2", "--level", "1", "2,0", "0,0"]), 3);
    assert_eq!(code(&["fuse", "A2", "--level", "1", "1,0,0", "0,0"]), 3);
    assert_eq!(code(&["verlinde", "E8", "--level", "30", "--genus", "1"]), 3);
    assert_eq!(code(&["conformal-check", "ad", "A1"]), 3);
    assert_eq!(code(&["character", "A1", "--level", "1", "--depth", "50"]), 3);
    assert_eq!(code(&["theta", "--genus", "9"]), 3);
    assert_eq!(code(&["casimir", "E8"]), 3);
}

#[test]
fn alcove_cap_comes_from_the_environment() {
    let run = |cap: &str| {
        Command::new(env!("CARGO_BIN_EXE_blockcount"))
            .args(["verlinde", "A2", "--level", "3", "--genus", "1"])
            .env("BLOCKCOUNT_MAX_ALCOVE", cap)
            .output()
            .unwrap()
    };
    let small = run("5");
    assert_eq!(small.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&small.stderr).contains("cap"));
    let large = run("100");
    assert_eq!(String::from_utf8(large.stdout).unwrap(), "10\n");
}

#[test]
fn diagnostics_name_the_offending_token() {
    let out = blockcount(&["alcove", "Q3", "--level", "1"]);
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).contains("\"Q3\""));
}

#[test]
fn identical_invocations_are_byte_identical() {
    let cases: [&[&str]; 4] = [
        &["--json", "verlinde", "B3", "--level", "2", "--genus", "1", "--insert", "1,0,0"],
        &["--json", "center", "D4", "--level", "2"],
        &["--json", "branch", "B2", "--depth", "2"],
        &["--json", "casimir", "A2", "--matrix"],
    ];
    for args in cases {
        let a = blockcount(args);
        let b = blockcount(args);
        assert!(a.status.success());
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn selftest_passes() {
    let out = blockcount(&["selftest"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(out.status.success(), "{text}");
    assert_eq!(text.lines().filter(|l| l.starts_with("PASS")).count(), 10, "{text}");
    assert_eq!(code(&["selftest", "--criterion", "11"]), 2);
}

/// Runs every `tests/golden/*.cmd` and compares stdout with the matching
/// `.out` file. `BLOCKCOUNT_BLESS=1` rewrites the expectations.
#[test]
fn golden_corpus() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    let bless = std::env::var_os("BLOCKCOUNT_BLESS").is_some();
    let mut cmds: Vec<_> = fs::read_dir(&dir)
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|x| x == "cmd"))
        .collect();
    cmds.sort();
    assert!(!cmds.is_empty());
    let mut failures = Vec::new();
    for cmd in &cmds {
        let line = fs::read_to_string(cmd).unwrap();
        let args: Vec<&str> = line.split_whitespace().collect();
        let got = stdout(&args);
        let expected = cmd.with_extension("out");
        if bless {
            fs::write(&expected, &got).unwrap();
            continue;
        }
        let want = fs::read_to_string(&expected)
            .unwrap_or_else(|_| panic!("missing {}", expected.display()));
        if got != want {
            failures.push(format!("{}:\n--- want\n{want}--- got\n{got}", cmd.display()));
        }
    }
    assert!(failures.is_empty(), "{}", failures.join("\n"));
}
