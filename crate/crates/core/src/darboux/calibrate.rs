use super::system::{Conventions, MultiIndexedSystem, TableFn};
use crate::algebra::{Field, Rational};
use crate::error::{Error, Result};
use crate::families::{operator_table, virtual_candidates, FamilySpec, IdqmShift, IndexSet, SeedType};

/// Highest `n` of the round trip: `0..=2` fix the constants, `3` is the
/// overdetermined check.
pub const CALIBRATION_N: usize = 3;

/// Candidate values of `c_F`.
pub fn c_f_candidates() -> Vec<Rational> {
    [1, -1, 2, -2, 4, -4].into_iter().map(Rational::int).collect()
}

#[derive(Clone, Debug, PartialEq)]
pub struct Calibration {
    pub conventions: Conventions,
    /// How many candidate combinations were tried and how many passed.
    pub tried: usize,
    pub passed: usize,
    pub n_checked: usize,
}

fn virtual_combos(spec_family: crate::families::Family, d: &IndexSet) -> Vec<[&'static str; 2]> {
    let (s1, s2) = d.type_counts();
    let one = virtual_candidates(spec_family, SeedType::I);
    let two = virtual_candidates(spec_family, SeedType::II);
    let ones: &[&str] = if s1 > 0 { one } else { &one[..1] };
    let twos: &[&str] = if s2 > 0 { two } else { &two[..1] };
    let mut out = Vec::new();
    for a in ones {
        for b in twos {
            out.push([*a, *b]);
        }
    }
    out
}

pub fn calibrate<F: Field>(spec: &FamilySpec<F>, d: &IndexSet) -> Result<Calibration> {
    calibrate_with(spec, d, &operator_table)
}

/// Searches conventions (virtual-state ids, `c_F` or the shift-family
/// parameter shifts) for which `B F = (E_n - E~_{d_s})` holds exactly at
/// every step for `n = 0..=3`. The first passing combination is returned.
pub fn calibrate_with<F: Field>(spec: &FamilySpec<F>, d: &IndexSet, tables: &TableFn<F>) -> Result<Calibration> {
    if d.is_empty() {
        return Ok(Calibration {
            conventions: Conventions::default_for(spec.family()),
            tried: 0,
            passed: 0,
            n_checked: 0,
        });
    }
    let family = spec.family();
    let scalars: Vec<(Rational, IdqmShift)> = if family.is_oqm() {
        c_f_candidates().into_iter().map(|c| (c, IdqmShift::default())).collect()
    } else {
        IdqmShift::candidates().into_iter().map(|s| (Rational::one(), s)).collect()
    };
    let mut tried = 0;
    let mut found: Option<Conventions> = None;
    let mut passed = 0;
    let mut last_err = None;
    for ids in virtual_combos(family, d) {
        for (c_f, shift) in &scalars {
            tried += 1;
            let conv = Conventions { virtual_ids: ids, c_f: c_f.clone(), shift: shift.clone() };
            let outcome = MultiIndexedSystem::build_with(spec, d, &conv, tables)
                .and_then(|sys| sys.round_trip(CALIBRATION_N));
            match outcome {
                Ok(()) => {
                    passed += 1;
                    found.get_or_insert(conv);
                }
                Err(e @ (Error::DegenerateParameter(_) | Error::Unsupported(_))) => return Err(e),
                Err(e) => last_err = Some(e),
            }
        }
    }
    match found {
        Some(conventions) => Ok(Calibration { conventions, tried, passed, n_checked: CALIBRATION_N }),
        None => Err(Error::Calibration(format!(
            "no convention among {tried} candidates satisfies the round trip for {d} at {spec}; last failure: {}",
            last_err.map(|e| e.to_string()).unwrap_or_default()
        ))),
    }
}
