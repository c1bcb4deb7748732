use std::process::Command;

use cherednik::cli::{run, EXIT_FAIL, EXIT_OK, EXIT_USAGE};

fn cli(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(std::iter::once("cherednik").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn eval_renders_normal_forms() {
    assert_eq!(cli(&["eval", "comm(w[1], u[1])", "--N", "1"]), (EXIT_OK, "-ħ * u_1\n".into(), String::new()));
    assert_eq!(cli(&["eval", "comm(e[1], f[0])", "--N", "1", "--l", "0"]).1, "ħ\n");
    assert_eq!(cli(&["eval", "Res(X[1]) + Res(X[2]) - E[1;1]", "--N", "2", "--l", "0"]).1, "0\n");
    assert_eq!(cli(&["eval", "comm(w[1], w[2])"]).1, "0\n");
    assert_eq!(cli(&["eval", "Res(Y[1]) + Res(Y[2]) - F[1; 1]", "--z", "zero"]).1, "0\n");
}

#[test]
fn apply_acts_on_polynomials() {
    let (code, out, _) = cli(&["apply", "u[1] * w[1]", "--to", "w[1]^2", "--N", "1", "--l", "0"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, "ħ^3 + 3*ħ^2*w_1 + 3*ħ*w_1^2 + w_1^3\n");
}

#[test]
fn input_errors_use_the_usage_code() {
    let (code, _, err) = cli(&["eval", "comm(w[1],\n  Q[1])"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("line 2, column 3"), "{err}");
    assert_eq!(cli(&["check", "nonsense"]).0, EXIT_USAGE);
    assert_eq!(cli(&["check", "hgr1", "--bogus"]).0, EXIT_USAGE);
    assert_eq!(cli(&["check", "hgr1", "--N", "9"]).0, EXIT_USAGE);
    assert_eq!(cli(&["eval", "Y[1]", "--l", "0"]).0, EXIT_USAGE);
    assert_eq!(cli(&["frobnicate"]).0, EXIT_USAGE);
    assert_eq!(cli(&["--help"]).0, EXIT_OK);
}

#[test]
fn check_reports_in_both_formats() {
    let (code, out, _) = cli(&["check", "spherical", "--N", "2", "--l", "1"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("suite spherical (N=2, l=1, order=8)\n"));
    assert!(!out.contains("FAIL"));

    let args = ["check", "poisson", "--N", "2", "--l", "2", "--format", "json", "--no-timings", "--jobs", "2"];
    let (code, first, _) = cli(&args);
    assert_eq!(code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&first).unwrap();
    assert_eq!(v["suite"], "poisson");
    assert_eq!(v["context"], serde_json::json!({"N": 2, "l": 2, "order": 8}));
    let items = v["items"].as_array().unwrap();
    assert!(!items.is_empty());
    for it in items {
        let keys: Vec<&str> = it.as_object().unwrap().keys().map(|k| k.as_str()).collect();
        assert_eq!(keys, ["anchor", "id", "millis", "status"]);
        assert_eq!(it["status"], "pass");
    }
    assert_eq!(v["summary"]["failed"], 0);
    assert_eq!(cli(&args).1, first, "reports must be byte-identical");
}

#[test]
fn unframed_suites_report_their_effective_rank() {
    let (_, out, _) = cli(&["check", "tau", "--N", "2", "--l", "2", "--max-degree", "2"]);
    assert!(out.starts_with("suite tau (N=2, l=0, order=8)\n"), "{out}");
}

#[test]
fn binary_exit_codes_and_job_variable() {
    let bin = env!("CARGO_BIN_EXE_cherednik");
    let ok = Command::new(bin).args(["check", "cyclotomic", "--l", "3"]).env("CHEREDNIK_JOBS", "1").output().unwrap();
    assert_eq!(ok.status.code(), Some(EXIT_OK));
    let bad = Command::new(bin).args(["check", "nope"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(EXIT_USAGE));
    let bad_jobs = Command::new(bin).args(["check", "cyclotomic"]).env("CHEREDNIK_JOBS", "many").output().unwrap();
    assert_eq!(bad_jobs.status.code(), Some(EXIT_USAGE));
    assert_ne!(EXIT_FAIL, EXIT_USAGE);
}
