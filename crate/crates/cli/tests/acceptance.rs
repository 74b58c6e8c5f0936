//! Acceptance run: one PASS/FAIL line per criterion, with timings.
//! Exits nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use mindex_cli::golden::{check_equivalence, run_golden, Equivalence, Evaluation, GoldenReport, Status};
use mindex_cli::report::{Outcome, RowStatus, VerificationReport};
use mindex_cli::sweep::{run_sweep, InstanceResult, SweepConfig, SweepEntry};
use mindex_cli::verify::run_verify;
use mindex_cli::RunConfig;
use mindex_core::algebra::{Poly, Rational, Var};
use mindex_core::darboux::{calibrate, MultiIndexedSystem};
use mindex_core::families::{printed_x_min, AnchorCase, FamilySpec};
use mindex_core::rings::{difference_quotient, AwRing, WilsonRing};
use mindex_core::xbuilder::{coordinate_quotient, discrete_antiderivative, gprime, make_x, Coordinate};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<String, String>;

fn r(a: i64, b: i64) -> Rational {
    Rational::frac(a, b)
}

fn wilson(i: usize) -> FamilySpec<Rational> {
    let a = [
        [r(1, 3), r(2, 5), r(3, 7), r(5, 11)],
        [r(2, 7), r(3, 8), r(4, 9), r(6, 13)],
    ];
    FamilySpec::wilson(a[i].clone())
}

fn askey_wilson(i: usize) -> FamilySpec<Rational> {
    let a = [
        [r(1, 2), r(1, 3), r(1, 5), r(1, 7)],
        [r(1, 3), r(1, 4), r(2, 5), r(1, 6)],
    ];
    FamilySpec::askey_wilson(a[i].clone(), r(1, 2)).expect("valid")
}

struct Harness {
    failed: usize,
}

impl Harness {
    fn run(&mut self, id: usize, title: &str, budget: Option<Duration>, f: impl FnOnce() -> Check) {
        let t = Instant::now();
        let result = f();
        let dt = t.elapsed();
        let over = budget.filter(|b| dt > *b);
        let budget_txt = budget.map(|b| format!(" (budget {}s)", b.as_secs())).unwrap_or_default();
        let (ok, detail) = match (result, over) {
            (Ok(d), None) => (true, d),
            (Ok(d), Some(b)) => (false, format!("{d}; exceeded {}s", b.as_secs())),
            (Err(e), _) => (false, e),
        };
        if !ok {
            self.failed += 1;
        }
        println!(
            "{} criterion {id:>2}: {title}: {detail} [{:.2}s{budget_txt}]",
            if ok { "PASS" } else { "FAIL" },
            dt.as_secs_f64()
        );
    }
}

fn golden_summary(reports: &[(String, GoldenReport)]) -> Check {
    let mut matched = 0;
    let mut limits = Vec::new();
    for (label, g) in reports {
        if !g.passed() {
            let bad: Vec<_> = g.verdicts.iter().filter(|v| v.status == Status::Mismatch).map(|v| &v.quantity).collect();
            return Err(format!("{label}: consistent={} mismatches {bad:?}", g.consistent));
        }
        matched += g.count(Status::Match);
        if matches!(g.evaluation, Evaluation::Limit { .. }) || !g.printed_limits.is_empty() {
            limits.push(label.clone());
        }
    }
    Ok(format!("{} runs, {matched} invariants equal; limits taken at {limits:?}", reports.len()))
}

fn criterion_l() -> Check {
    let mut out = Vec::new();
    for g in [r(1, 1), r(3, 2), r(7, 3)] {
        let spec = FamilySpec::laguerre(g.clone());
        for case in [AnchorCase::LEx1, AnchorCase::LEx2, AnchorCase::LEx3] {
            let rep = run_golden(case, &spec, 6).map_err(|e| format!("{case} g={g}: {e}"))?;
            out.push((format!("{case} g={g}"), rep));
        }
    }
    golden_summary(&out)
}

fn criterion_j() -> Check {
    let mut out = Vec::new();
    for (g, h) in [(r(2, 1), r(1, 1)), (r(5, 2), r(3, 2))] {
        let spec = FamilySpec::jacobi(g.clone(), h.clone());
        for case in [AnchorCase::JEx1, AnchorCase::JEx2, AnchorCase::JEx3] {
            let rep = run_golden(case, &spec, 6).map_err(|e| format!("{case} ({g},{h}): {e}"))?;
            out.push((format!("{case} ({g},{h})"), rep));
        }
    }
    golden_summary(&out)
}

fn shift_config(spec: &FamilySpec<Rational>) -> RunConfig {
    let v: Vec<String> = spec.values().iter().map(ToString::to_string).collect();
    RunConfig {
        family: spec.family().to_string(),
        indices: "1I".into(),
        g: None,
        h: None,
        a: Some(v[..4].join(",")),
        t: v.get(4).cloned(),
        y: "min".into(),
        x: None,
        nmax: 6,
    }
}

fn criterion_shift() -> Check {
    let mut notes = Vec::new();
    for spec in [wilson(0), wilson(1), askey_wilson(0), askey_wilson(1)] {
        let rep = run_verify(&shift_config(&spec)).map_err(|e| format!("{spec}: {e}"))?;
        let g = rep.golden.as_ref().ok_or(format!("{spec}: no golden comparison"))?;
        if rep.outcome != Outcome::Pass || !g.passed() {
            return Err(format!("{spec}: {:?}", rep.failures));
        }
        if rep.band != rep.ell + 1 || g.band != rep.band {
            return Err(format!("{spec}: band {} with ell {}", rep.band, rep.ell));
        }
        let terms = |row: &mindex_cli::report::RowReport| row.r.values().filter(|v| v.as_str() != "0").count();
        if rep.rows.iter().any(|row| row.n >= rep.band && terms(row) != 2 * rep.band + 1) {
            return Err(format!("{spec}: rows are not {}-term", 2 * rep.band + 1));
        }
        let unavailable = g.count(Status::ExternalDataUnavailable);
        let ratio = g.route_ratio.clone().unwrap_or_default();
        notes.push(format!(
            "{}: {} pair invariants equal, r_(n,0) external data unavailable ({unavailable} entries), route-2/route-1 = {ratio}",
            spec,
            g.count(Status::Match)
        ));
    }
    Ok(notes.join("; "))
}

fn criterion_xmin() -> Check {
    let mut ratios = Vec::new();
    for case in AnchorCase::ALL {
        let spec = match case.family() {
            mindex_core::families::Family::L => FamilySpec::laguerre(r(7, 3)),
            mindex_core::families::Family::J => FamilySpec::jacobi(r(7, 3), r(5, 4)),
            mindex_core::families::Family::W => wilson(0),
            mindex_core::families::Family::AW => askey_wilson(0),
        };
        let d = case.index_set();
        let cal = calibrate(&spec, &d).map_err(|e| e.to_string())?;
        let sys = MultiIndexedSystem::build(&spec, &d, &cal.conventions).map_err(|e| e.to_string())?;
        let x = make_x(&sys, &Poly::one(Var::Eta)).map_err(|e| e.to_string())?;
        let printed = printed_x_min(case, &spec).map_err(|e| e.to_string())?;
        match x.x.ratio_to(&printed) {
            Some(c) => ratios.push(format!("{case}: {c}")),
            None => return Err(format!("{case}: built {} vs printed {printed}", x.x)),
        }
    }
    Ok(ratios.join(", "))
}

fn sweep(toml: &str) -> Result<Vec<SweepEntry>, String> {
    let cfg = SweepConfig::from_toml(toml).map_err(|e| e.to_string())?;
    run_sweep(&cfg.instances().map_err(|e| e.to_string())?, None).map_err(|e| e.to_string())
}

fn reports(entries: &[SweepEntry]) -> Result<Vec<&VerificationReport>, String> {
    entries
        .iter()
        .map(|e| match &e.result {
            InstanceResult::Report(r) => Ok(&**r),
            InstanceResult::Error(msg) => Err(format!("{} {{{}}} y={}: {msg}", e.config.family, e.config.indices, e.config.y)),
        })
        .collect()
}

fn all_close(entries: &Result<Vec<SweepEntry>, String>) -> Check {
    let entries = entries.as_ref().map_err(Clone::clone)?;
    let reps = reports(entries)?;
    for rep in &reps {
        let c = &rep.config;
        let label = format!("{} {{{}}} y={} {:?}", c.family, c.indices, c.y, (&c.g, &c.h, &c.a, &c.t));
        if rep.rows.iter().any(|row| row.status != RowStatus::Consistent) {
            return Err(format!("{label}: inconsistent"));
        }
        let dy = match c.y.as_str() {
            "min" => 0,
            y => y.split(',').count() - 1,
        };
        if rep.band != rep.ell + dy + 1 {
            return Err(format!("{label}: band {} != ell {} + {dy} + 1", rep.band, rep.ell));
        }
        if !rep.band_violations.is_empty() {
            return Err(format!("{label}: band violations {:?}", rep.band_violations));
        }
    }
    let sets: std::collections::BTreeSet<_> = reps.iter().map(|r| (&r.config.family, &r.config.indices)).collect();
    Ok(format!("{} systems ({} index sets), all consistent with L = ell + deg Y + 1 and no entries below the band", reps.len(), sets.len()))
}

fn round_trips(all: &[&Result<Vec<SweepEntry>, String>]) -> Check {
    let mut n = 0;
    for entries in all {
        for rep in reports(entries.as_ref().map_err(Clone::clone)?)? {
            if !rep.round_trip {
                return Err(format!("{} {{{}}}: {:?}", rep.config.family, rep.config.indices, rep.failures));
            }
            n += 1;
        }
    }
    Ok(format!("B F = (E_n - E~) at every step, n <= 6, on {n} systems"))
}

fn cross_route(all: &[&Result<Vec<SweepEntry>, String>]) -> Check {
    let mut n = 0;
    for entries in all {
        for rep in reports(entries.as_ref().map_err(Clone::clone)?)? {
            let ok = rep.route2.as_ref().is_some_and(|r2| r2.constant_ratio.is_some());
            if !ok {
                return Err(format!("{} {{{}}} y={}: no constant ratio", rep.config.family, rep.config.indices, rep.config.y));
            }
            n += 1;
        }
    }
    Ok(format!("{n} systems with a single route-2/route-1 constant"))
}

fn criterion_discrete() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let coords = [
        ("W", Coordinate::Wilson),
        ("AW t=1/2", Coordinate::AskeyWilson { t: r(1, 2) }),
        ("AW t=1/3", Coordinate::AskeyWilson { t: r(1, 3) }),
        ("AW t=2/5", Coordinate::AskeyWilson { t: r(2, 5) }),
    ];
    for (name, c) in &coords {
        for _ in 0..50 {
            let deg = rng.gen_range(0..=6usize);
            let cs: Vec<Rational> = (0..=deg).map(|_| r(rng.gen_range(-20..=20), rng.gen_range(1..=9))).collect();
            let p = Poly::new(cs, Var::Eta);
            let x = discrete_antiderivative(&p, c).map_err(|e| format!("{name}: {e}"))?;
            if coordinate_quotient(c, &x).map_err(|e| e.to_string())? != p {
                return Err(format!("{name}: I[p] fails for p = {p}"));
            }
        }
        for n in 0..=6 {
            let e = Poly::<Rational>::monomial(r(1, 1), n + 1, Var::Eta);
            let dq = match c {
                Coordinate::Wilson => difference_quotient(&WilsonRing::new(), &e),
                Coordinate::AskeyWilson { t } => difference_quotient(&AwRing::new(t.clone()).map_err(|e| e.to_string())?, &e),
            }
            .map_err(|e| e.to_string())?;
            for k in 0..=n {
                if gprime(c, n, k).map_err(|e| e.to_string())? != dq.coeff(n - k) {
                    return Err(format!("{name}: g'({n},{k}) differs from the ring expansion"));
                }
            }
        }
    }
    Ok("200 random polynomials and g' tables for n <= 6 on W and AW (t = 1/2, 1/3, 2/5)".into())
}

fn criterion_negative() -> Check {
    let specs = [
        ("L", FamilySpec::laguerre(r(7, 3))),
        ("J", FamilySpec::jacobi(r(7, 3), r(5, 4))),
        ("W", wilson(0)),
        ("AW", askey_wilson(0)),
    ];
    let mut lines = Vec::new();
    for (name, spec) in specs {
        for x in ["0,1", "0,0,1"] {
            let mut cfg = match spec.family() {
                mindex_core::families::Family::W | mindex_core::families::Family::AW => shift_config(&spec),
                _ => RunConfig {
                    family: name.into(),
                    indices: "1I".into(),
                    g: spec.g().map(ToString::to_string),
                    h: spec.h().map(ToString::to_string),
                    a: None,
                    t: None,
                    y: "min".into(),
                    x: None,
                    nmax: 6,
                },
            };
            cfg.x = Some(x.into());
            let rep = run_verify(&cfg).map_err(|e| format!("{name} X={x}: {e}"))?;
            let inconsistent = rep.rows.iter().position(|row| row.status == RowStatus::Inconsistent);
            let witness = rep
                .route2
                .as_ref()
                .and_then(|r2| r2.rows.iter().find(|row| row.status == RowStatus::NonPolynomial));
            match (rep.outcome, inconsistent, witness, rep.necessary.passed) {
                (Outcome::Fail, Some(n), Some(w), false) => lines.push(format!(
                    "{name} X={x}: route 1 inconsistent from n = {n}, route 2 remainder at n = {}",
                    w.n
                )),
                _ => return Err(format!("{name} X={x}: not rejected as expected: {:?}", rep.failures)),
            }
        }
    }
    Ok(lines.join("; "))
}

fn criterion_equivalence() -> Check {
    let mut out = Vec::new();
    for spec in [
        FamilySpec::laguerre(r(7, 3)),
        FamilySpec::laguerre(r(23, 5)),
        FamilySpec::jacobi(r(7, 2), r(5, 4)),
        FamilySpec::jacobi(r(29, 6), r(13, 7)),
    ] {
        for which in Equivalence::ALL {
            let rep = check_equivalence(&spec, which, 5).map_err(|e| format!("{spec} {which:?}: {e}"))?;
            match rep.constant {
                Some(c) => out.push(format!("{spec} {which:?}: {c}")),
                None => return Err(format!("{spec} {which:?}: ratios {:?}", rep.ratios)),
            }
        }
    }
    Ok(out.join(", "))
}

fn main() -> ExitCode {
    let mut h = Harness { failed: 0 };
    let secs = |s| Some(Duration::from_secs(s));
    h.run(1, "tabulated invariants, L", secs(10), criterion_l);
    h.run(2, "tabulated invariants, J", secs(60), criterion_j);
    h.run(3, "tabulated invariants and route cross-check, W and AW", secs(60), criterion_shift);
    h.run(4, "X_min shape", None, criterion_xmin);

    let mut c1 = Err(String::from("not run"));
    h.run(5, "constant-coefficient recurrences, L and J, M <= 2", secs(600), || {
        c1 = sweep(include_str!("../sweeps/continuous.toml"));
        all_close(&c1)
    });
    let mut c2 = Err(String::from("not run"));
    h.run(6, "constant-coefficient recurrences, W and AW, M = 1", secs(300), || {
        c2 = sweep(include_str!("../sweeps/shift.toml"));
        all_close(&c2)
    });
    h.run(7, "round-trip calibration on sweep systems", None, || round_trips(&[&c1, &c2]));
    h.run(8, "route-2 against route-1 on sweep systems", None, || cross_route(&[&c1, &c2]));
    h.run(9, "discrete antiderivative and g' tables", None, criterion_discrete);
    h.run(10, "negative controls X = eta, eta^2 on {1I}", None, criterion_negative);
    h.run(11, "index-set equivalences, n <= 5", None, criterion_equivalence);

    println!("{} of 11 criteria passed", 11 - h.failed);
    if h.failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
