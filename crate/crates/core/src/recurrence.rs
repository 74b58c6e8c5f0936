//! Constant-coefficient recurrences `X P_{D,n} = sum_k r_{n,k} P_{D,n+k}`:
//! the direct solve, the band check, normalization-free invariants, the
//! `B-hat` chain route and the divisibility precondition.

use std::collections::BTreeMap;

use crate::algebra::{solve_exact, Field, Poly, SolveOutcome};
use crate::darboux::{BOutcome, MultiIndexedSystem};
use crate::error::{Error, Result};
use crate::families::classical_poly;
use crate::xbuilder::{coordinate_quotient, Coordinate, XCandidate};

/// Outcome for one `n`.
#[derive(Clone, Debug, PartialEq)]
pub enum Row<F: Field> {
    /// `r_{n,k}` for `k = -n..=L` (wide form).
    Consistent(BTreeMap<i64, F>),
    /// `X P_{D,n}` leaves a nonzero residual of this degree outside the
    /// span of `P_{D,n+k}`.
    Inconsistent { witness_degree: usize, residual: F },
    /// `B-hat` at chain level `level` produced a non-polynomial.
    NonPolynomial { level: usize, remainder: Poly<F> },
}

impl<F: Field> Row<F> {
    pub fn coeffs(&self) -> Option<&BTreeMap<i64, F>> {
        match self {
            Row::Consistent(c) => Some(c),
            _ => None,
        }
    }

    pub fn is_consistent(&self) -> bool {
        matches!(self, Row::Consistent(_))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct RecurrenceTable<F: Field> {
    pub x: Poly<F>,
    /// `L = deg X`.
    pub band: usize,
    pub rows: Vec<Row<F>>,
}

impl<F: Field> RecurrenceTable<F> {
    pub fn n_max(&self) -> usize {
        self.rows.len().saturating_sub(1)
    }

    /// `r_{n,k}`; zero outside the stored range, `None` for a failed row.
    pub fn r(&self, n: usize, k: i64) -> Option<F> {
        let c = self.rows.get(n)?.coeffs()?;
        Some(c.get(&k).cloned().unwrap_or_else(F::zero))
    }

    pub fn all_consistent(&self) -> bool {
        self.rows.iter().all(Row::is_consistent)
    }

    pub fn first_failure(&self) -> Option<(usize, &Row<F>)> {
        self.rows.iter().enumerate().find(|(_, r)| !r.is_consistent())
    }

    /// Entrywise ratio `self / other` when it is one nonzero constant over
    /// all entries; `None` otherwise.
    pub fn constant_ratio(&self, other: &RecurrenceTable<F>) -> Option<F> {
        if self.rows.len() != other.rows.len() {
            return None;
        }
        let mut ratio: Option<F> = None;
        for (a, b) in self.rows.iter().zip(&other.rows) {
            let (a, b) = (a.coeffs()?, b.coeffs()?);
            for k in a.keys().chain(b.keys()) {
                let x = a.get(k).cloned().unwrap_or_else(F::zero);
                let y = b.get(k).cloned().unwrap_or_else(F::zero);
                match (x.is_zero(), y.is_zero()) {
                    (true, true) => continue,
                    (false, false) => {}
                    _ => return None,
                }
                let q = x / &y;
                match &ratio {
                    None => ratio = Some(q),
                    Some(r) if *r == q => {}
                    Some(_) => return None,
                }
            }
        }
        ratio
    }
}

/// Expands `target` in `basis(m)`, `m = n - k_lo .. n + k_hi`, assuming
/// `deg basis(m) = offset + m`; top-down triangular elimination.
fn graded_expand<F: Field>(
    target: &Poly<F>,
    n: usize,
    band: usize,
    offset: usize,
    basis: &dyn Fn(usize) -> Result<Poly<F>>,
) -> Result<std::result::Result<BTreeMap<i64, F>, (usize, F)>> {
    let mut rest = target.clone();
    let mut out = BTreeMap::new();
    for m in (0..=n + band).rev() {
        let p = basis(m)?;
        let deg = offset + m;
        let c = rest.coeff(deg) / &p.lc();
        if !c.is_zero() {
            rest = &rest - &p.scale(&c);
        }
        out.insert(m as i64 - n as i64, c);
    }
    match rest.degree() {
        None => Ok(Ok(out)),
        Some(d) => Ok(Err((d, rest.lc()))),
    }
}

/// The same expansion as a dense exact linear system (checked builds).
/// Rows run from the top coefficient down and columns from the highest
/// basis element down, which keeps the elimination free of fill-in.
fn dense_expand<F: Field>(
    target: &Poly<F>,
    n: usize,
    band: usize,
    basis: &dyn Fn(usize) -> Result<Poly<F>>,
) -> Result<SolveOutcome<F>> {
    let mut cols: Vec<Poly<F>> = (0..=n + band).map(basis).collect::<Result<_>>()?;
    cols.reverse();
    let top = cols.iter().filter_map(Poly::degree).max().unwrap_or(0).max(target.degree().unwrap_or(0));
    let a: Vec<Vec<F>> = (0..=top).rev().map(|i| cols.iter().map(|c| c.coeff(i)).collect()).collect();
    let b: Vec<F> = (0..=top).rev().map(|i| target.coeff(i)).collect();
    Ok(match solve_exact(&a, &b, cols.len())? {
        SolveOutcome::Unique(mut x) => {
            x.reverse();
            SolveOutcome::Unique(x)
        }
        other => other,
    })
}

fn checked_expand<F: Field>(
    target: &Poly<F>,
    n: usize,
    band: usize,
    offset: usize,
    basis: &dyn Fn(usize) -> Result<Poly<F>>,
) -> Result<std::result::Result<BTreeMap<i64, F>, (usize, F)>> {
    let fast = graded_expand(target, n, band, offset, basis)?;
    if crate::checked() && !F::SYMBOLIC {
        let dense = dense_expand(target, n, band, basis)?;
        let agree = match (&fast, &dense) {
            (Ok(c), SolveOutcome::Unique(x)) => {
                x.iter().enumerate().all(|(m, v)| c[&(m as i64 - n as i64)] == *v)
            }
            (Err(_), SolveOutcome::Inconsistent { .. }) => true,
            _ => false,
        };
        if !agree {
            return Err(Error::Internal(format!("graded and dense solves disagree at n = {n}")));
        }
    }
    Ok(fast)
}

/// Route 1: exact solve of `X P_{D,n} = sum_{k=-n}^{L} r_{n,k} P_{D,n+k}`.
pub fn solve_recurrence<F: Field>(
    system: &MultiIndexedSystem<F>,
    x: &XCandidate<F>,
    n_max: usize,
) -> Result<RecurrenceTable<F>> {
    let band = x.degree;
    let basis = |m: usize| system.p(m);
    let mut rows = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let target = &x.x * &system.p(n)?;
        rows.push(match checked_expand(&target, n, band, system.ell(), &basis)? {
            Ok(c) => Row::Consistent(c),
            Err((d, v)) => Row::Inconsistent { witness_degree: d, residual: v },
        });
    }
    Ok(RecurrenceTable { x: x.x.clone(), band, rows })
}

/// Entries below the band: nonzero `r_{n,k}` with `k < -L`.
#[derive(Clone, Debug, PartialEq)]
pub struct BandReport<F: Field> {
    pub violations: Vec<(usize, i64, F)>,
}

impl<F: Field> BandReport<F> {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn band_check<F: Field>(table: &RecurrenceTable<F>) -> BandReport<F> {
    let lo = -(table.band as i64);
    let mut violations = Vec::new();
    for (n, row) in table.rows.iter().enumerate() {
        if let Some(c) = row.coeffs() {
            for (&k, v) in c {
                if k < lo && !v.is_zero() {
                    violations.push((n, k, v.clone()));
                }
            }
        }
    }
    BandReport { violations }
}

/// Normalization-free combinations of a table; `None` marks an undefined
/// entry (vanishing denominator or failed row).
#[derive(Clone, Debug, PartialEq)]
pub struct InvariantTable<F: Field> {
    /// `rho_{n,k} = r_{n,k} r_{n+k,-k} / (r_{n,0} r_{n+k,0})`, `k >= 1`.
    pub rho: BTreeMap<(usize, usize), Option<F>>,
    /// `sigma_n = r_{n,0} / r_{0,0}`.
    pub sigma: BTreeMap<usize, Option<F>>,
    /// `pi_{n,k} = r_{n,k} r_{n+k,-k} / (r_{0,1} r_{1,-1})`, `k >= 1`; needs no `r_{n,0}`.
    pub pair: BTreeMap<(usize, usize), Option<F>>,
}

fn ratio<F: Field>(num: Option<F>, den: Option<F>) -> Option<F> {
    let den = den?;
    if den.is_zero() {
        None
    } else {
        Some(num? / &den)
    }
}

pub fn invariants<F: Field>(table: &RecurrenceTable<F>) -> InvariantTable<F> {
    invariants_with(table.n_max(), table.band, |n, k| table.r(n, k))
}

/// Invariants from an arbitrary entry source; `r` returns `None` for an
/// unknown or undefined entry.
pub fn invariants_with<F: Field>(
    n_max: usize,
    band: usize,
    r: impl Fn(usize, i64) -> Option<F>,
) -> InvariantTable<F> {
    let prod = |a: Option<F>, b: Option<F>| Some(a? * &b?);
    let mut rho = BTreeMap::new();
    let mut pair = BTreeMap::new();
    let base = prod(r(0, 1), r(1, -1));
    for n in 0..=n_max {
        for k in 1..=band {
            if n + k > n_max {
                break;
            }
            let num = prod(r(n, k as i64), r(n + k, -(k as i64)));
            rho.insert((n, k), ratio(num.clone(), prod(r(n, 0), r(n + k, 0))));
            pair.insert((n, k), ratio(num, base.clone()));
        }
    }
    let sigma = (0..=n_max).map(|n| (n, ratio(r(n, 0), r(0, 0)))).collect();
    InvariantTable { rho, sigma, pair }
}

/// Route 2: `B-hat_{d_1} ... B-hat_D (X P_{D,n})` expanded in the classical
/// basis, divided by `prod_j (E_{n+k} - E~_{d_j})`.
pub fn route2_coeffs<F: Field>(
    system: &MultiIndexedSystem<F>,
    x: &XCandidate<F>,
    n_max: usize,
) -> Result<RecurrenceTable<F>> {
    let band = x.degree;
    let spec = system.spec();
    let basis = |m: usize| classical_poly(spec, m);
    let m_seeds = system.index_set().len();
    let mut rows = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let target = &x.x * &system.p(n)?;
        let (images, failure) = system.b_chain(&target)?;
        if let Some((level, outcome)) = failure {
            let remainder = match outcome {
                BOutcome::NonPolynomial { remainder, .. } => remainder,
                BOutcome::Polynomial(_) => unreachable!("failure carries a witness"),
            };
            rows.push(Row::NonPolynomial { level, remainder });
            continue;
        }
        let q = images.last().expect("at least the input");
        match checked_expand(q, n, band, 0, &basis)? {
            Err((d, v)) => rows.push(Row::Inconsistent { witness_degree: d, residual: v }),
            Ok(r0) => {
                let mut out = BTreeMap::new();
                for (k, v) in r0 {
                    let m = (n as i64 + k) as usize;
                    let mut den = F::one();
                    for j in 0..m_seeds {
                        den = den * &(system.energy(m) - &system.seed_energy(j));
                    }
                    let inv = den.inv().ok_or_else(|| {
                        Error::DegenerateParameter(format!("E_{m} coincides with a seed energy"))
                    })?;
                    out.insert(k, v * &inv);
                }
                rows.push(Row::Consistent(out));
            }
        }
    }
    Ok(RecurrenceTable { x: x.x.clone(), band, rows })
}

#[derive(Clone, Debug, PartialEq)]
pub enum Necessary<F: Field> {
    /// `dX/deta = Xi_D Y` (or its difference analogue).
    Pass { y: Poly<F> },
    Fail { remainder: Poly<F> },
}

impl<F: Field> Necessary<F> {
    pub fn passed(&self) -> bool {
        matches!(self, Necessary::Pass { .. })
    }
}

/// Divisibility of `dX/deta` (continuous) or of the difference quotient of
/// `X` (shift families) by `Xi_D`.
pub fn necessary_condition<F: Field>(system: &MultiIndexedSystem<F>, x: &Poly<F>) -> Result<Necessary<F>> {
    let d = match Coordinate::of(system.spec()) {
        None => x.derivative(),
        Some(c) => coordinate_quotient(&c, x)?,
    };
    let (q, r) = d.divrem(system.xi())?;
    Ok(if r.is_zero() { Necessary::Pass { y: q } } else { Necessary::Fail { remainder: r } })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Rational, Var};
    use crate::darboux::calibrate;
    use crate::families::FamilySpec;
    use crate::xbuilder::make_x;

    fn sys(spec: &FamilySpec<Rational>, d: &str) -> MultiIndexedSystem<Rational> {
        let d = d.parse().unwrap();
        let c = calibrate(spec, &d).unwrap();
        MultiIndexedSystem::build(spec, &d, &c.conventions).unwrap()
    }

    #[test]
    fn laguerre_ex1_five_terms() {
        let spec = FamilySpec::laguerre(Rational::one());
        let s = sys(&spec, "1I");
        let x = make_x(&s, &Poly::one(Var::Eta)).unwrap();
        let t = solve_recurrence(&s, &x, 6).unwrap();
        assert!(t.all_consistent());
        assert_eq!(t.band, 2);
        assert!(band_check(&t).ok());
        let inv = invariants(&t);
        assert_eq!(inv.sigma[&0], Some(Rational::one()));
    }

    #[test]
    fn eta_is_inconsistent() {
        let spec = FamilySpec::laguerre(Rational::one());
        let s = sys(&spec, "1I");
        let x = XCandidate::custom(Poly::identity(Var::Eta)).unwrap();
        let t = solve_recurrence(&s, &x, 4).unwrap();
        assert!(!t.all_consistent());
        let r2 = route2_coeffs(&s, &x, 2).unwrap();
        assert!(matches!(r2.rows[0], Row::NonPolynomial { level: 1, .. }));
        assert!(!necessary_condition(&s, &x.x).unwrap().passed());
    }

    #[test]
    fn band_violation_is_reported() {
        let mut c = BTreeMap::new();
        c.insert(-3, Rational::one());
        c.insert(0, Rational::one());
        let t = RecurrenceTable { x: Poly::identity(Var::Eta), band: 1, rows: vec![Row::Consistent(c)] };
        assert_eq!(band_check(&t).violations.len(), 1);
    }
}
