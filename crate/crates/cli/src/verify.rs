use std::collections::BTreeMap;
use std::time::Instant;

use mindex_core::algebra::Rational;
use mindex_core::darboux::{calibrate, MultiIndexedSystem};
use mindex_core::families::AnchorCase;
use mindex_core::recurrence::{
    band_check, invariants, necessary_condition, route2_coeffs, solve_recurrence, Necessary,
};
use mindex_core::xbuilder::{make_x, XCandidate};

use crate::config::RunConfig;
use crate::error::CliError;
use crate::golden::run_golden;
use crate::report::{
    coeff_strings, rows, CalibrationSummary, NecessaryReport, Outcome, Route2Report, VerificationReport, SCHEMA,
};

struct Clock(BTreeMap<String, u64>, Instant);

impl Clock {
    fn lap(&mut self, phase: &str) {
        let now = Instant::now();
        self.0.insert(phase.into(), (now - self.1).as_millis() as u64);
        self.1 = now;
    }
}

/// The tabulated case matching this configuration, if any.
pub fn anchor_for(cfg: &RunConfig) -> Option<AnchorCase> {
    if cfg.x.is_some() || cfg.y.trim() != "min" {
        return None;
    }
    let family = cfg.family().ok()?;
    let d = cfg.index_set().ok()?;
    AnchorCase::ALL.into_iter().find(|c| c.family() == family && c.index_set() == d)
}

/// Builds the system, X and both recurrence routes for one instance.
pub fn run_verify(cfg: &RunConfig) -> Result<VerificationReport, CliError> {
    cfg.validate()?;
    let spec = cfg.spec()?;
    let d = cfg.index_set()?;
    let mut clock = Clock(BTreeMap::new(), Instant::now());

    let cal = calibrate(&spec, &d)?;
    let sys = MultiIndexedSystem::build(&spec, &d, &cal.conventions)?;
    clock.lap("calibrate");
    let mut failures = Vec::new();
    let round_trip = match sys.round_trip(cfg.nmax) {
        Ok(()) => true,
        Err(e) => {
            failures.push(format!("round trip: {e}"));
            false
        }
    };
    clock.lap("round_trip");

    let x = match (cfg.x_poly()?, cfg.y_poly()?) {
        (Some(x), _) => XCandidate::custom(x)?,
        (None, Some(y)) => {
            let x = make_x(&sys, &y)?;
            let expect = sys.ell() + y.degree().unwrap_or(0) + 1;
            if x.degree != expect {
                failures.push(format!("deg X = {}, expected {expect}", x.degree));
            }
            x
        }
        (None, None) => unreachable!("either x or y is set"),
    };
    let necessary = match necessary_condition(&sys, &x.x)? {
        Necessary::Pass { y } => NecessaryReport { passed: true, witness: y.to_string() },
        Necessary::Fail { remainder } => {
            failures.push(format!("divisibility condition fails: remainder {remainder}"));
            NecessaryReport { passed: false, witness: remainder.to_string() }
        }
    };
    clock.lap("build_x");

    let table = solve_recurrence(&sys, &x, cfg.nmax)?;
    if let Some((n, _)) = table.first_failure() {
        failures.push(format!("route 1 inconsistent at n = {n}"));
    }
    let band = band_check(&table);
    if !band.ok() {
        failures.push(format!("{} entries below the band", band.violations.len()));
    }
    clock.lap("route1");

    let r2 = route2_coeffs(&sys, &x, cfg.nmax)?;
    let ratio = r2.constant_ratio(&table);
    if let Some((n, _)) = r2.first_failure() {
        failures.push(format!("route 2 fails at n = {n}"));
    } else if table.all_consistent() && ratio.is_none() {
        failures.push("route 2 and route 1 differ by more than a constant".into());
    }
    clock.lap("route2");

    let golden = match anchor_for(cfg) {
        Some(case) => {
            let g = run_golden(case, &spec, cfg.nmax)?;
            if !g.passed() {
                failures.push(format!("{case} golden comparison fails"));
            }
            Some(g)
        }
        None => None,
    };
    clock.lap("golden");

    Ok(VerificationReport {
        schema: SCHEMA,
        config: cfg.clone(),
        calibration: CalibrationSummary::from(&cal),
        round_trip,
        ell: sys.ell(),
        band: table.band,
        x: coeff_strings(&x.x),
        necessary,
        band_violations: band.violations.iter().map(|(n, k, v)| (*n, *k, v.to_string())).collect(),
        rows: rows(&table),
        route2: Some(Route2Report { rows: rows(&r2), constant_ratio: ratio.as_ref().map(Rational::to_string) }),
        invariants: (&invariants(&table)).into(),
        golden,
        timing_ms: clock.0,
        outcome: if failures.is_empty() { Outcome::Pass } else { Outcome::Fail },
        failures,
    })
}
