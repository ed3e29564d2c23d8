use std::process::{Command, Output};

fn oscq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_oscq")).args(args).env_remove("OSCQ_ORDER").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn classify_prints_the_family_and_cocommutators() {
    let o = oscq(&["classify", "--r", "0,0,0,1,0,0"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.starts_with("Type II standard"), "{s}");
    assert!(s.contains("δ(Ap) = -Ap ∧ M"), "{s}");
    let o = oscq(&["classify", "--r", "0,0,1,0,0,0"]);
    assert!(stdout(&o).starts_with("Type II non-standard"));
}

#[test]
fn text_and_json_carry_the_same_classification() {
    let text = stdout(&oscq(&["classify", "--r", "1,0,0,0,0,0"]));
    let json: serde_json::Value =
        serde_json::from_slice(&oscq(&["--format", "json", "classify", "--r", "1,0,0,0,0,0"]).stdout).unwrap();
    assert_eq!(json["summary"], "Type I+ non-standard");
    assert!(text.starts_with(json["summary"].as_str().unwrap()));
    for pair in json["cocommutators"].as_array().unwrap() {
        let line = format!("{} = {}", pair[0].as_str().unwrap(), pair[1].as_str().unwrap());
        assert!(text.contains(&line), "{line} missing from\n{text}");
    }
}

#[test]
fn verify_reports_every_check() {
    let o = oscq(&["verify", "--target", "prop1", "--order", "0"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.lines().all(|l| l.starts_with("PASS")), "{s}");
    for fam in ["I+s", "I+n", "I-s", "I-n", "IIs", "IIn"] {
        assert!(s.contains(fam), "{fam}");
    }
    let o = oscq(&["--format", "json", "verify", "--target", "prop4", "--order", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let rows: Vec<serde_json::Value> = serde_json::from_slice(&o.stdout).unwrap();
    assert!(!rows.is_empty());
    assert!(rows.iter().all(|r| r["family"] == "IIn" && r["status"] == "pass"));
}

#[test]
fn tables_match_their_fixtures() {
    for which in ["I", "II", "III"] {
        let o = oscq(&["tables", "--which", which, "--order", "4"]);
        assert_eq!(o.status.code(), Some(0), "{which}: {}", stdout(&o));
    }
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(oscq(&["verify", "--target", "prop2", "--family", "I+s"]).status.code(), Some(2));
    assert_eq!(oscq(&["verify", "--family", "nope", "--order", "1"]).status.code(), Some(2));
    assert_eq!(oscq(&["verify", "--order", "-1"]).status.code(), Some(2));
    assert_eq!(oscq(&["classify", "--r", "1,2"]).status.code(), Some(2));
    assert_eq!(oscq(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(oscq(&["--jobs", "0", "classify", "--r", "0,0,0,0,0,0"]).status.code(), Some(2));
}

#[test]
fn classification_outcomes_and_exit_codes() {
    let o = oscq(&["classify", "--r", "1,1,0,0,0,0"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("not a coboundary bialgebra: violated c1*c2 = 1"));
    let o = oscq(&["classify", "--r", "a,b,0,0,0,0"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("c1*c2 = a*b"));
    let o = oscq(&["classify", "--r", "a,b,0,0,0,0", "--nonzero", "a"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("cannot decide whether c1*c2 vanishes"));
}

#[test]
fn out_flag_writes_a_file() {
    let path = std::env::temp_dir().join(format!("oscq-cli-{}.txt", std::process::id()));
    let o = oscq(&["--out", path.to_str().unwrap(), "classify", "--r", "0,0,0,0,0,0"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    assert!(std::fs::read_to_string(&path).unwrap().starts_with("trivial bialgebra"));
    let _ = std::fs::remove_file(path);
}
