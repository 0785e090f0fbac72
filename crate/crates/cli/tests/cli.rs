//! End-to-end tests of the `knoedel` binary.

use std::process::{Command, Output};

fn knoedel(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_knoedel")).args(args).env_remove("KNOEDEL_MAX_STEPS").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn table_lists_exact_distribution() {
    let o = knoedel(&["table", "--model", "double-large", "--steps", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("model,step,state,num,den,decimal"));
    assert!(text.contains("double-large,1,beta,2,3,0.666666666667"));
    assert!(text.contains("double-large,3,0,16,27,"));
}

#[test]
fn coeff_closed_form_and_dp_agree() {
    let cf = knoedel(&["coeff", "--model", "double-small", "--state", "beta", "--steps", "5"]);
    let dp = knoedel(&["coeff", "--model", "double-small", "--state", "beta", "--steps", "5", "--source", "dp"]);
    assert_eq!(cf.status.code(), Some(0));
    let value = |o: &Output| stdout(o).lines().nth(1).unwrap().rsplit_once(',').unwrap().0.to_string();
    assert_eq!(value(&cf), value(&dp));
}

#[test]
fn json_carries_exact_fraction() {
    let o = knoedel(&["coeff", "--model", "double-large", "--state", "0", "--steps", "3", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v[0]["value"], "16/27");
    assert_eq!(v[0]["num"], "16");
    assert_eq!(v[0]["den"], "27");
    assert_eq!(v[0]["source"], "closed-form");
}

#[test]
fn off_residue_query_is_zero_with_note() {
    let o = knoedel(&["coeff", "--model", "double-large", "--state", "0", "--steps", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains(",0,1,0,"));
    assert!(!o.stderr.is_empty());
}

#[test]
fn series_prints_kernel_root() {
    let o = knoedel(&["series", "--which", "t", "--order", "2"]);
    assert!(stdout(&o).contains("t,1,4/27,4,27,0.148148148148"));
}

#[test]
fn verify_succeeds() {
    let o = knoedel(&["verify", "--order", "12", "--max-steps", "12"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn simulate_is_byte_reproducible() {
    let args = ["simulate", "--model", "double-small", "--steps", "9", "--trials", "20000", "--seed", "42"];
    let a = knoedel(&args);
    let b = knoedel(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let other = knoedel(&["simulate", "--model", "double-small", "--steps", "9", "--trials", "20000", "--seed", "43"]);
    assert_ne!(a.stdout, other.stdout);
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["series", "--which", "nope"][..],
        &["simulate", "--model", "double-large", "--steps", "3", "--trials", "0"],
        &["coeff", "--model", "double-large", "--state", "0", "--steps", "3", "--p", "1/2"],
        &["table", "--model", "double-large", "--steps", "201"],
    ] {
        assert_eq!(knoedel(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn step_cap_can_be_raised() {
    let o = Command::new(env!("CARGO_BIN_EXE_knoedel"))
        .args(["coeff", "--model", "double-large", "--state", "0", "--steps", "201"])
        .env("KNOEDEL_MAX_STEPS", "300")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
}
