use num_traits::ToPrimitive;

use super::spec::{FamilySpec, IndexSet, Params, Seed, SeedType};
use crate::algebra::{Field, Poly, Rational, Var};
use crate::error::{Error, Result};

/// Entries of the forward/backward operators of one continuous chain step.
#[derive(Clone, Debug, PartialEq)]
pub struct OqmTable<F: Field> {
    pub e_f: Poly<F>,
    pub e_b: Poly<F>,
    pub et_f: F,
    pub et_b: F,
}

/// The e-functions of one shift-family step, as the two parameters fed to
/// the ring's `v_function`.
#[derive(Clone, Debug, PartialEq)]
pub struct IdqmTable<F> {
    pub f_pair: [F; 2],
    pub b_pair: [F; 2],
}

#[derive(Clone, Debug, PartialEq)]
pub enum OperatorTable<F: Field> {
    Oqm(OqmTable<F>),
    Idqm(IdqmTable<F>),
}

/// Parameter shifts entering the e-functions of a single shift-family step:
/// the pair used by `F` (resp. `B`) is moved by `f` (resp. `b`); additively
/// for Wilson, as `a -> a·q^shift` for Askey-Wilson.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IdqmShift {
    pub f: Rational,
    pub b: Rational,
}

impl Default for IdqmShift {
    fn default() -> Self {
        IdqmShift { f: Rational::frac(-1, 2), b: Rational::zero() }
    }
}

impl IdqmShift {
    pub fn candidates() -> Vec<IdqmShift> {
        let grid: Vec<Rational> = [-2, -1, 0, 1, 2].iter().map(|&k| Rational::frac(k, 2)).collect();
        let mut out = vec![IdqmShift::default()];
        for f in &grid {
            for b in &grid {
                let c = IdqmShift { f: f.clone(), b: b.clone() };
                if !out.contains(&c) {
                    out.push(c);
                }
            }
        }
        out
    }
}

fn shifted<F: Field>(spec: &FamilySpec<F>, a: &F, by: &Rational) -> Result<F> {
    match spec.params() {
        Params::W { .. } => Ok(a.clone() + &F::from_rational(by)),
        Params::AW { t, .. } => {
            let twice = by.clone() * &Rational::int(2);
            if !twice.is_integer() {
                return Err(Error::Usage(format!("Askey-Wilson shift {by} is not a multiple of 1/2")));
            }
            let k = twice.numer().to_i32().ok_or_else(|| Error::Usage("shift too large".into()))?;
            Ok(a.clone() * &t.pow(k).ok_or(Error::DivisionByZero)?)
        }
        _ => Err(Error::Internal("shift table requested for a continuous family".into())),
    }
}

/// Table entries for the step adding `last` to `prefix`. The counts
/// `s_I`, `s_II` run over `d_1 .. d_s`, including `d_s = last`.
pub fn operator_table<F: Field>(
    spec: &FamilySpec<F>,
    prefix: &IndexSet,
    last: Seed,
    shift: &IdqmShift,
) -> Result<OperatorTable<F>> {
    let (mut s1, mut s2) = prefix.type_counts();
    match last.ty {
        SeedType::I => s1 += 1,
        SeedType::II => s2 += 1,
    }
    let (s1, s2) = (F::from_i64(s1 as i64), F::from_i64(s2 as i64));
    let two = F::from_i64(2);
    let one = F::one();
    let half = F::from_rational(&Rational::frac(1, 2));
    let eta = Poly::<F>::identity(Var::Eta);
    let c = |x: F| Poly::constant(x, Var::Eta);
    let table = match spec.params() {
        Params::L { g } => {
            let gs = g.clone() + &s1 - &s2;
            match last.ty {
                SeedType::I => OqmTable {
                    e_f: c(one.clone()),
                    e_b: eta,
                    et_f: -two.clone(),
                    et_b: -(two * &gs) + &one,
                },
                SeedType::II => OqmTable {
                    e_f: eta,
                    e_b: c(one.clone()),
                    et_f: two.clone() * &gs + &one,
                    et_b: two,
                },
            }
        }
        Params::J { g, h } => {
            let gs = g.clone() + &s1 - &s2;
            let hs = h.clone() + &s2 - &s1;
            let plus = Poly::new(vec![half.clone(), half.clone()], Var::Eta);
            let minus = Poly::new(vec![half.clone(), -half], Var::Eta);
            match last.ty {
                SeedType::I => OqmTable {
                    e_f: plus,
                    e_b: minus,
                    et_f: -(two.clone() * &hs) - &one,
                    et_b: -(two * &gs) + &one,
                },
                SeedType::II => OqmTable {
                    e_f: minus,
                    e_b: plus,
                    et_f: two.clone() * &gs + &one,
                    et_b: two * &hs - &one,
                },
            }
        }
        Params::W { a } | Params::AW { a, .. } => {
            if !prefix.is_empty() {
                return Err(Error::Unsupported(
                    "multi-step shift-family tables (M >= 2) are not implemented".into(),
                ));
            }
            let sh = |i: usize, by: &Rational| shifted(spec, &a[i], by);
            let t = match last.ty {
                SeedType::I => IdqmTable {
                    f_pair: [sh(0, &shift.f)?, sh(1, &shift.f)?],
                    b_pair: [sh(2, &shift.b)?, sh(3, &shift.b)?],
                },
                SeedType::II => IdqmTable {
                    f_pair: [sh(2, &shift.f)?, sh(3, &shift.f)?],
                    b_pair: [sh(0, &shift.b)?, sh(1, &shift.b)?],
                },
            };
            return Ok(OperatorTable::Idqm(t));
        }
    };
    Ok(OperatorTable::Oqm(table))
}
