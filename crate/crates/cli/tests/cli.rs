use std::process::{Command, Output};

fn epoly(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_epoly"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn compute_m1_json() {
    let o = epoly(&["compute", "--target", "m1"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.starts_with("{\n  \"version\": 1,"));
    assert!(s.contains("\"name\": \"twisted.e_M1\""));
    assert!(s.contains("\"misprint_delta\""));
}

#[test]
fn compute_m_text() {
    let o = epoly(&["compute", "--target", "m", "--format", "text"]);
    assert_eq!(o.status.code(), Some(0));
    let last = stdout(&o).lines().last().unwrap().to_string();
    assert_eq!(
        last,
        "untwisted.e_M = q^12 - 4q^10 + 74q^8 + 375q^6 + 16q^4 + q^2 + 1  [matches]"
    );
}

#[test]
fn compute_all_has_every_stage() {
    let o = epoly(&["compute", "--target", "all", "--format", "text"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    for name in ["twisted.e_W ", "genus2.R_Ybar4_Z2 ", "untwisted.e_V "] {
        assert!(s.contains(name), "{name}");
    }
    assert!(!s.contains("MISMATCH"));
}

#[test]
fn verify_paper_passes() {
    let o = epoly(&["verify", "--paper"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.lines().filter(|l| l.starts_with("misprint")).count() == 2);
    assert!(!s.contains("MISMATCH") && !s.contains("MISSING"));
}

#[test]
fn verify_oracle_small_primes() {
    let o = epoly(&["verify", "--oracle", "3,5"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("e_Y1           q=5   e=1269120"));
    assert!(s
        .lines()
        .any(|l| l.starts_with("e_Y1") && l.contains("q=3") && l.ends_with("recorded")));
}

#[test]
fn verify_oracle_rejects_even_field() {
    let o = epoly(&["verify", "--oracle", "2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("unsupported field size 2"));
}

#[test]
fn count_anchors() {
    let o = epoly(&["count", "--q", "3"]);
    assert_eq!(stdout(&o).trim(), "168");
    let o = epoly(&["count", "--q", "5", "--genus", "2", "--center", "minus-id"]);
    assert_eq!(stdout(&o).trim(), "1269120");
    let o = epoly(&[
        "count",
        "--q",
        "5",
        "--genus",
        "3",
        "--center",
        "minus-id",
        "--trace-stratum",
        "points",
    ]);
    assert_eq!(stdout(&o).trim(), "4286016000");
}

#[test]
fn count_errors() {
    assert_eq!(epoly(&["count", "--q", "9"]).status.code(), Some(2));
    assert_eq!(
        epoly(&["count", "--q", "5", "--genus", "4"]).status.code(),
        Some(2)
    );
    assert_eq!(
        epoly(&[
            "count",
            "--q",
            "5",
            "--genus",
            "2",
            "--trace-stratum",
            "lines"
        ])
        .status
        .code(),
        Some(2)
    );
}

#[test]
fn bad_arguments_are_usage_errors() {
    assert_eq!(epoly(&["compute", "--target", "m2"]).status.code(), Some(2));
    assert_eq!(epoly(&["verify"]).status.code(), Some(2));
}
