use std::process::Command;

use pascal_det::report::{Report, Status};

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_pascal-det"))
        .args(args)
        .output()
        .unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn reports(stdout: &str) -> Vec<Report> {
    stdout
        .lines()
        .map(|l| serde_json::from_str(l).expect("each line is a JSON report"))
        .collect()
}

#[test]
fn verify_emits_ordered_json_lines() {
    let (code, out, err) = run(&["verify", "--theorem", "3", "--n-max", "2"]);
    assert_eq!(code, 0, "{err}");
    let rs = reports(&out);
    assert_eq!(rs.iter().map(|r| r.n).collect::<Vec<_>>(), vec![1, 2]);
    assert_eq!(rs[1].lhs, "x^4 + 4*x^3 + 6*x^2 + 4*x + 1");
    let first = out.lines().next().unwrap();
    assert!(first.starts_with(r#"{"case":"T3","n":1,"engine":"bareiss","status":"pass","lhs":"1","rhs":"1","millis":"#));
}

#[test]
fn det_from_file() {
    let dir = std::env::temp_dir().join(format!("pascal-det-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let ok = dir.join("m.json");
    std::fs::write(&ok, r#"[["0","-1"],["1","0"]]"#).unwrap();
    let (code, out, _) = run(&["det", "--file", ok.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(reports(&out)[0].lhs, "1");

    let sym = dir.join("s.json");
    std::fs::write(&sym, r#"[["1+x","rho"],["1/2*sigma","x^2"]]"#).unwrap();
    let (code, out, _) = run(&["det", "--file", sym.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(reports(&out)[0].lhs, "x^3 + x^2 - 1/2*rho*sigma");

    let bad = dir.join("bad.json");
    std::fs::write(&bad, r#"[["x^(-1)"]]"#).unwrap();
    let (code, out, err) = run(&["det", "--file", bad.to_str().unwrap()]);
    assert_eq!((code, out.as_str()), (2, ""));
    assert!(err.contains("negative exponent"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn exit_codes_follow_statuses() {
    assert_eq!(run(&["hyper-suite", "--samples", "10", "--seed", "99"]).0, 0);
    // n = 0 cannot be checked and is reported as an error
    let (code, out, _) = run(&["verify", "--theorem", "1", "--n-max", "0"]);
    assert_eq!((code, out.as_str()), (0, ""));
    let (code, _, err) = run(&["verify", "--theorem", "1"]);
    assert_eq!(code, 2);
    assert!(err.contains("--n-max"));
    assert_eq!(run(&["genfun", "--theorem", "4", "--order", "2"]).0, 2);
}

#[test]
fn proof_steps_and_lu() {
    let (code, out, _) = run(&["proof-steps", "--n", "2"]);
    assert_eq!(code, 0);
    let rs = reports(&out);
    assert!(rs.iter().all(|r| r.status == Status::Pass));
    assert!(rs.iter().any(|r| r.case == "S6_constant" && r.n == 2));
    let (code, out, _) = run(&["lu", "--theorem", "1", "--n-max", "3"]);
    assert_eq!(code, 0);
    assert_eq!(reports(&out).len(), 3);
}
