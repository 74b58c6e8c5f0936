use std::process::Command;

fn mindex(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_mindex")).args(args).output().expect("binary runs")
}

// [DERIVED] admissible X exits 0
#[test]
fn verify_passes() {
    let out = mindex(&["verify", "--family", "L", "--indices", "1I,2II", "--g", "7/3", "--nmax", "4"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["outcome"], "pass");
}

// [DERIVED] a failed check exits 2
#[test]
fn inconsistent_x_exits_2() {
    let out = mindex(&["verify", "--family", "W", "--indices", "1I", "--a", "1/3,2/5,3/7,5/11", "--x", "0,1", "--nmax", "3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("FAIL"));
}

// [DERIVED] malformed input exits 1
#[test]
fn usage_errors_exit_1() {
    for args in [
        vec!["verify", "--family", "L", "--indices", "1I,1I", "--g", "1"],
        vec!["verify", "--family", "L", "--indices", "1I", "--g", "1", "--h", "2"],
        vec!["verify", "--family", "Q", "--g", "1"],
        vec!["appendixb", "--case", "J.Ex1", "--family", "L", "--g", "1"],
    ] {
        let out = mindex(&args);
        assert_eq!(out.status.code(), Some(1), "{args:?}");
    }
}

// [PAPER] appendixb reproduces a tabulated case and both equivalences
#[test]
fn appendixb() {
    let out = mindex(&["appendixb", "--case", "AW.Ex1", "--family", "AW", "--indices", "1I", "--a", "1/2,1/3,1/5,1/7", "--t", "1/2"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let out = mindex(&["appendixb", "--equiv", "--family", "L", "--g", "7/3", "--nmax", "5"]);
    assert_eq!(out.status.code(), Some(0));
}

// [DERIVED] outputs land in files
#[test]
fn writes_json_and_csv() {
    let dir = std::env::temp_dir().join(format!("mindex-bin-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let (json, csv) = (dir.join("r.json"), dir.join("r.csv"));
    let out = mindex(&[
        "verify", "--family", "J", "--indices", "1II", "--g", "7/3", "--h", "5/4", "--nmax", "3",
        "--out", json.to_str().unwrap(), "--csv", csv.to_str().unwrap(), "--checked",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(std::fs::read_to_string(&json).unwrap().contains("\"schema\": 1"));
    assert!(std::fs::read_to_string(&csv).unwrap().starts_with("n,k,r,status"));
    std::fs::remove_dir_all(&dir).unwrap();
}

// [TRIVIAL] calibrate prints the chosen conventions
#[test]
fn calibrate_prints() {
    let out = mindex(&["calibrate", "--family", "J", "--indices", "1I", "--g", "7/3", "--h", "5/4"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["c_f"], "-4");
}
