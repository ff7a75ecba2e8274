use std::process::{Command, Output};

fn foata(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_foata")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = foata(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn canon_of_running_example() {
    let out = stdout(&["canon", "6", "4", "3", "7", "5", "2", "1"]);
    assert!(out.contains("A: (a_1)(a_2 a_1^-1)(a_3 a_2)(a_4 a_3 a_2 a_1)(a_5 a_4 a_3)"), "{out}");
}

#[test]
fn psi_forward_and_back() {
    assert_eq!(stdout(&["psi", "6 4 3 7 5 2 1"]).trim(), "[4,6,7,3,2,1,5]");
    assert_eq!(stdout(&["psi", "--inverse", "4,6,7,3,2,1,5"]).trim(), "[6,4,3,7,5,2,1]");
    let json: serde_json::Value = serde_json::from_str(&stdout(&["psi", "--json", "6 4 3 7 5 2 1"])).unwrap();
    assert_eq!(json["output"]["images"], serde_json::json!([4, 6, 7, 3, 2, 1, 5]));
}

#[test]
fn phi_trace_ends_in_image() {
    let out = stdout(&["phi", "--trace", "6", "5", "3", "1", "4", "2"]);
    assert!(out.contains("r'_4 = 6 5 3 | 1 |"), "{out}");
    assert_eq!(out.lines().last(), Some("3 6 5 4 1 2"));
}

#[test]
fn verify_exit_codes() {
    let ok = foata(&["verify", "--theorem", "psi", "--n", "4"]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&ok.stdout).starts_with("[PASS] psi"));
    let capped = foata(&["verify", "--theorem", "psi", "--n", "9"]);
    assert_eq!(capped.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&capped.stderr).contains("cap"));
    let json = stdout(&["verify", "--theorem", "a-eq", "--n", "3", "--d1", "1", "--d2", "", "--json"]);
    for line in json.lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["status"], "pass");
    }
}

#[test]
fn table_csv() {
    let out = stdout(&["table", "--group", "s", "--stat", "maj", "--n", "3"]);
    assert_eq!(out, "value,count\n0,1\n1,2\n2,2\n3,1\n");
}

#[test]
fn avoid_reports_witness() {
    assert!(stdout(&["avoid", "--q", "2", "1 2 5 4 3"]).starts_with("contains"));
    assert_eq!(stdout(&["avoid", "--q", "2", "2 1 3"]).trim(), "avoids");
    // Avoid_1(m) is counted by the Bell numbers
    assert_eq!(stdout(&["avoid", "--q", "1", "--enumerate", "4"]).lines().count(), 15);
}

#[test]
fn bad_input_is_an_error() {
    let out = foata(&["psi", "1 2 1"]);
    assert_eq!(out.status.code(), Some(2));
    let odd = foata(&["psi", "2 1 3"]);
    assert_eq!(odd.status.code(), Some(2));
}
