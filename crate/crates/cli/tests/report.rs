use mindex_cli::config::RunConfig;
use mindex_cli::report::{Outcome, RowStatus, VerificationReport};
use mindex_cli::sweep::{run_sweep, SweepConfig};
use mindex_cli::verify::run_verify;
use proptest::prelude::*;

fn laguerre(indices: &str, y: &str) -> RunConfig {
    RunConfig {
        family: "L".into(),
        indices: indices.into(),
        g: Some("7/3".into()),
        h: None,
        a: None,
        t: None,
        y: y.into(),
        x: None,
        nmax: 4,
    }
}

// [DERIVED] JSON round trip is lossless and byte-stable
#[test]
fn json_round_trip() {
    let rep = run_verify(&laguerre("1I,2II", "1,1/2")).unwrap();
    assert_eq!(rep.outcome, Outcome::Pass);
    let json = rep.to_json().unwrap();
    let back = VerificationReport::from_json(&json).unwrap();
    assert_eq!(back, rep);
    assert_eq!(back.to_json().unwrap(), json);
    let bumped = json.replacen("\"schema\": 1", "\"schema\": 99", 1);
    assert!(VerificationReport::from_json(&bumped).is_err());
}

// [TRIVIAL] CSV carries every stored coefficient
#[test]
fn csv_table() {
    let rep = run_verify(&laguerre("1I", "min")).unwrap();
    let mut buf = Vec::new();
    rep.write_csv(&mut buf).unwrap();
    let text = String::from_utf8(buf).unwrap();
    let mut rd = csv::Reader::from_reader(text.as_bytes());
    let rows: Vec<csv::StringRecord> = rd.records().map(Result::unwrap).collect();
    let stored: usize = rep.rows.iter().map(|r| r.r.len()).sum();
    assert_eq!(rows.len(), stored);
    assert_eq!(&rows[0][3], "consistent");
}

// [PAPER] the tabulated {1I} Laguerre case carries a golden section
#[test]
fn verify_attaches_golden() {
    let rep = run_verify(&laguerre("1I", "min")).unwrap();
    assert!(rep.golden.as_ref().is_some_and(|g| g.passed()));
    assert_eq!(rep.band, rep.ell + 1);
    assert!(run_verify(&laguerre("2I", "min")).unwrap().golden.is_none());
}

// [DERIVED] a non-admissible X fails on both routes
#[test]
fn negative_control_report() {
    let mut cfg = laguerre("1I", "min");
    cfg.x = Some("0,1".into());
    let rep = run_verify(&cfg).unwrap();
    assert_eq!(rep.outcome, Outcome::Fail);
    assert!(!rep.necessary.passed);
    assert_eq!(rep.rows[0].status, RowStatus::Inconsistent);
    assert!(rep.route2.unwrap().rows.iter().any(|r| r.status == RowStatus::NonPolynomial));
}

// [DERIVED] sweeps write one report per instance and resume from them
#[test]
fn sweep_resumes() {
    let dir = std::env::temp_dir().join(format!("mindex-sweep-{}", std::process::id()));
    let _ = std::fs::remove_dir_all(&dir);
    let toml = r#"
[[instance]]
family = "J"
indices = "1II"
g = "7/3"
h = "5/4"
nmax = 3

[[generate]]
family = "L"
max_v = 2
max_m = 1
params = [["7/3"]]
y = ["1", "eta"]
nmax = 3
"#;
    let cfgs = SweepConfig::from_toml(toml).unwrap().instances().unwrap();
    assert_eq!(cfgs.len(), 1 + 4 * 2);
    let first = run_sweep(&cfgs, Some(&dir)).unwrap();
    assert!(first.iter().all(|e| e.passed() && !e.resumed));
    assert_eq!(std::fs::read_dir(&dir).unwrap().count(), cfgs.len());
    let second = run_sweep(&cfgs, Some(&dir)).unwrap();
    assert!(second.iter().all(|e| e.passed() && e.resumed));
    std::fs::remove_dir_all(&dir).unwrap();
}

fn rational() -> impl Strategy<Value = String> {
    (-30i64..=30, 1i64..=12).prop_map(|(a, b)| format!("{a}/{b}"))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    // [DERIVED] configs survive TOML and JSON, and the hash follows content
    #[test]
    fn config_serde_and_hash(g in rational(), h in rational(), y in prop::collection::vec(rational(), 1..4), nmax in 0usize..9) {
        let cfg = RunConfig {
            family: "J".into(),
            indices: "1I,2II".into(),
            g: Some(g),
            h: Some(h),
            a: None,
            t: None,
            y: y.join(","),
            x: None,
            nmax,
        };
        let toml_text = toml::to_string(&cfg).unwrap();
        let from_toml: RunConfig = toml::from_str(&toml_text).unwrap();
        prop_assert_eq!(&from_toml, &cfg);
        let from_json: RunConfig = serde_json::from_str(&serde_json::to_string(&cfg).unwrap()).unwrap();
        prop_assert_eq!(from_json.hash(), cfg.hash());
        let mut other = cfg.clone();
        other.nmax += 1;
        prop_assert_ne!(other.hash(), cfg.hash());
    }
}
