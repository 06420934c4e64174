use std::process::{Command, Output};

use serde_json::Value;

fn qfock(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qfock"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = qfock(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout)
        .unwrap()
        .trim_end()
        .to_string()
}

#[test]
fn apply_f0_on_vacuum() {
    assert_eq!(stdout(&["apply", "--sector", "0", "f0"]), "q^2 * e^{1a}");
}

#[test]
fn straighten_json() {
    assert_eq!(
        stdout(&["--json", "straighten", "1,4,1"]),
        r#"{"sign":-1,"partition":[3,2,1]}"#
    );
    assert_eq!(stdout(&["straighten", "1,2,2"]), "0");
    assert_eq!(stdout(&["straighten", "-1,2"]), "-1 * s[1]");
}

#[test]
fn x_minus_example() {
    assert_eq!(
        stdout(&[
            "x", "--sign", "minus", "--n", "0", "--sector", "0", "--charge", "1", "--mu", "1"
        ]),
        "-1 * s[2] e^{0a} + q^4 * s[1,1] e^{0a}"
    );
}

#[test]
fn json_outputs_reparse() {
    let v: Value =
        serde_json::from_str(&stdout(&["--json", "apply", "--sector", "1", "f0 f1"])).unwrap();
    let back = qfock::FockVector::from_json(&v).unwrap();
    assert_eq!(
        back.to_string(),
        stdout(&["apply", "--sector", "1", "f0 f1"])
    );

    let p = stdout(&["--json", "convert", "--to", "power", "2,1"]);
    assert_eq!(stdout(&["convert", "--to", "schur", &p]), "1 * s[2,1]");
}

#[test]
fn symmetric_function_commands() {
    assert_eq!(
        stdout(&["lr", "2,1", "2,1"]),
        "1 * s[4,2] + 1 * s[4,1,1] + 1 * s[3,3] + 2 * s[3,2,1] + 1 * s[3,1,1,1] + 1 * s[2,2,2] + 1 * s[2,2,1,1]"
    );
    for method in ["jacobi-trudi", "raising"] {
        assert_eq!(
            stdout(&["lr", "2,1", "1", "--method", method]),
            stdout(&["lr", "2,1", "1"])
        );
    }
    assert_eq!(stdout(&["conjugate", "3,1"]), "[2,1,1]");
    assert_eq!(stdout(&["--json", "conjugate", "3,1"]), "[2,1,1]");
    assert_eq!(
        stdout(&["pieri", "--kind", "e", "--n", "1", "1"]),
        "1 * s[2] + 1 * s[1,1]"
    );
    assert_eq!(stdout(&["jt", "2,1"]), "-1 * h[3] + 1 * h[2,1]");
    assert_eq!(stdout(&["mixed", "1", "2,1,1,1"]), "1 * s[3,2,1]");
    assert_eq!(stdout(&["mixed", "1", "2,2"]), "0");
    assert_eq!(stdout(&["inner", "2,1", "2,1"]), "1");
    assert_eq!(
        stdout(&["inner", "--deformed", "1", "1"]),
        "(1) / (q^2 + 1)"
    );
}

#[test]
fn divided_power() {
    assert_eq!(
        stdout(&["divided", "--sign", "minus", "--n", "0", "--r", "2", "--charge", "1"]),
        "-q * e^{-1a}"
    );
    let out = qfock(&["divided", "--sign", "plus", "--n", "0", "--r", "0"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn usage_and_parse_errors_exit_1() {
    for args in [
        &["apply", "f2"][..],
        &["apply", "--sector", "2", "f0"],
        &["lr", "2,1"],
        &["straighten", "1,x"],
        &["conjugate", "1,2"],
        &["bogus"],
    ] {
        assert_eq!(qfock(args).status.code(), Some(1), "{args:?}");
    }
    let err = String::from_utf8(qfock(&["apply", "f0 f1 e7"]).stderr).unwrap();
    assert!(err.contains("token 3"), "{err}");
}

#[test]
fn thread_cap_is_validated() {
    let run = |val: &str| {
        Command::new(env!("CARGO_BIN_EXE_qfock"))
            .env("QFOCK_THREADS", val)
            .args(["conjugate", "2"])
            .output()
            .unwrap()
            .status
            .code()
    };
    assert_eq!(run("2"), Some(0));
    assert_eq!(run("0"), Some(1));
    assert_eq!(run("many"), Some(1));
}

#[test]
fn check_exit_codes() {
    let out = qfock(&[
        "check",
        "--suite",
        "chevalley",
        "--max-weight",
        "1",
        "--max-charge",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8(out.stdout)
        .unwrap()
        .starts_with("chevalley: PASS"));

    let out = qfock(&["--json", "check", "--suite", "golden"]);
    assert_eq!(out.status.code(), Some(2));
    let reports: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(reports[0]["suite"], "golden");
    assert_eq!(reports[0]["pass"], false);

    assert_eq!(
        qfock(&["check", "--suite", "s-relations"]).status.code(),
        Some(2)
    );
    assert_eq!(
        qfock(&["check", "--suite", "deviation"]).status.code(),
        Some(0)
    );
}

#[test]
fn output_is_deterministic() {
    let args = [
        "--json", "x", "--sign", "plus", "--n", "-1", "--charge", "-1", "--mu", "2,1",
    ];
    assert_eq!(stdout(&args), stdout(&args));
}
