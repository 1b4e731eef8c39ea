use std::path::PathBuf;
use std::process::{Command, Output};

use hopfad::hopf::{sweedler, write_hsc};
use hopfad::Field;
use hopfad_cli::report::{Report, Status};

fn hopfad(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hopfad"))
        .args(args)
        .env_remove("HOPFAD_BUDGET")
        .output()
        .expect("binary runs")
}

fn report(out: &Output) -> Report {
    let text = String::from_utf8(out.stdout.clone()).unwrap();
    Report::from_json(&text).unwrap_or_else(|e| panic!("bad JSON ({e}): {text}"))
}

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn scratch(name: &str, contents: &str) -> String {
    let p = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&p, contents).unwrap();
    p.to_string_lossy().into_owned()
}

#[test]
fn verify_sweedler_passes_and_json_round_trips() {
    let out = hopfad(&["verify", "--builtin", "sweedler", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout.clone()).unwrap();
    let r = report(&out);
    assert_eq!(r.schema, 1);
    assert_eq!(r.to_json() + "\n", text);
    assert!(r.checks.iter().any(|c| c.id == "identity/comult-of-adjoint"));
    assert!(r.checks.iter().all(|c| c.status == Status::Pass));
    let ids: Vec<_> = r.checks.iter().map(|c| c.id.clone()).collect();
    let mut sorted = ids.clone();
    sorted.sort();
    assert_eq!(ids, sorted);
}

#[test]
fn verify_s3_from_cycles() {
    let out = hopfad(&["verify", "--builtin", "group:perm:(123),(12)"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn verify_file_and_corrupted_file() {
    let text = write_hsc(&sweedler(&Field::rationals()).unwrap());
    let good = scratch("sweedler.hsc", &text);
    assert_eq!(hopfad(&["verify", &good]).status.code(), Some(0));

    // g·g = 1 becomes g·g = g
    let line = text
        .lines()
        .find(|l| l.starts_with("mult 1 1 0 "))
        .expect("g·g record")
        .to_string();
    let bad = scratch("corrupt.hsc", &text.replace(&line, "mult 1 1 1 1"));
    let out = hopfad(&["verify", &bad, "--json"]);
    assert_eq!(out.status.code(), Some(1));
    let r = report(&out);
    let failed: Vec<_> = r.checks.iter().filter(|c| c.status == Status::Fail).collect();
    assert!(!failed.is_empty());
    assert!(failed.iter().all(|c| !c.data["witness"].is_null()));
    assert!(r.checks.iter().all(|c| c.id.starts_with("axiom/")));
}

#[test]
fn parse_errors_exit_with_three() {
    let bad = scratch("broken.hsc", "field Q\ndim 2\nmult 0 5 0 1\n");
    let out = hopfad(&["verify", &bad]);
    assert_eq!(out.status.code(), Some(3));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("line 3"), "{err}");
    assert_eq!(hopfad(&["frobnicate"]).status.code(), Some(3));
    assert_eq!(hopfad(&["verify", "--builtin", "nonsense"]).status.code(), Some(3));
    assert_eq!(hopfad(&["fc", "bogus"]).status.code(), Some(3));
}

#[test]
fn adfin_quotient_window_is_finite() {
    let out = hopfad(&["adfin", "--algebra", "uq-sl2-quotient:3", "--window", "6", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    let ids: Vec<_> = r.checks.iter().map(|c| c.id.as_str()).collect();
    assert_eq!(ids, ["window/antipode", "window/coideal", "window/finite"]);
}

#[test]
fn generic_probe_is_evidence_and_budget_comes_from_env() {
    let out = Command::new(env!("CARGO_BIN_EXE_hopfad"))
        .args(["adfin", "--algebra", "uq-sl2", "--json"])
        .env("HOPFAD_BUDGET", "25")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let r = report(&out);
    let k = r.checks.iter().find(|c| c.id == "probe/K").unwrap();
    assert_eq!(k.status, Status::Evidence);
    assert_eq!(k.data["budget"], 25);
    let dims: Vec<u64> = k.data["dims"].as_array().unwrap().iter().map(|d| d.as_u64().unwrap()).collect();
    assert!(dims.len() >= 6 && dims[..6].windows(2).all(|w| w[0] < w[1]), "{dims:?}");
}

#[test]
fn fc_dinf_members_are_the_rotations() {
    let out = hopfad(&["fc", "dinf", "--length", "8", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    let mut members: Vec<String> = r.checks[0].data["members"]
        .as_array()
        .unwrap()
        .iter()
        .map(|m| m.as_str().unwrap().to_string())
        .collect();
    members.sort();
    let mut expected: Vec<String> = (-8i64..=8)
        .map(|k| match k {
            0 => "e".to_string(),
            1 => "r".to_string(),
            _ => format!("r^{k}"),
        })
        .collect();
    expected.sort();
    assert_eq!(members, expected);
}

#[test]
fn dietzmann_families() {
    let out = hopfad(&["dietzmann", &fixture("d4-family.json"), "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    let f = r.checks.iter().find(|c| c.id == "dietzmann/filtration").unwrap();
    assert_eq!(f.data["stabilization"], 2);
    assert_eq!(f.data["closure_dim"], 8);

    let out = hopfad(&["dietzmann", &fixture("zs3-family.json"), "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let f = report(&out).checks.into_iter().find(|c| c.id == "dietzmann/filtration").unwrap();
    assert_eq!(f.data["stabilization"], 1);
    assert_eq!(f.data["closure_dim"], 6);

    let out = hopfad(&["dietzmann", &fixture("dinf-negative.json"), "--json"]);
    assert_eq!(out.status.code(), Some(1));
    let h = report(&out).checks.into_iter().find(|c| c.id == "dietzmann/hypotheses").unwrap();
    assert_eq!(h.status, Status::Fail);
    assert_eq!(h.data["stability"], "unknown");
}

#[test]
fn tensorfin_defaults_agree() {
    let out = hopfad(&["tensorfin", "--window", "10", "--budget", "40", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r.checks[0].status, Status::Pass);
    let n = r.checks[0].data["elements"].as_array().unwrap().len();
    assert_eq!(n, 11 * 11 + 100);
}
