//! Candidate multiplication polynomials `X(eta)`: antiderivatives of
//! `Xi_D·Y` (continuous or discrete) and the `Xi^2`-type candidates.

use crate::algebra::{ExactRing, Field, Poly, Var};
use crate::darboux::MultiIndexedSystem;
use crate::error::{Error, Result};
use crate::families::{factorial, FamilySpec, Params};
use crate::rings::{difference_quotient, staggered_quotient, AwRing, ShiftRing, WilsonRing};

/// Sinusoidal coordinate of a shift family.
#[derive(Clone, Debug, PartialEq)]
pub enum Coordinate<F> {
    /// `eta = x^2`.
    Wilson,
    /// `eta = cos x`, half shift `t = q^{1/2}`.
    AskeyWilson { t: F },
}

impl<F: Field> Coordinate<F> {
    pub fn of(spec: &FamilySpec<F>) -> Option<Self> {
        match spec.params() {
            Params::W { .. } => Some(Coordinate::Wilson),
            Params::AW { t, .. } => Some(Coordinate::AskeyWilson { t: t.clone() }),
            _ => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum XKind {
    ContinuousAntiderivative,
    DiscreteAntiderivative,
    XiSquaredTimesP,
    Custom,
}

#[derive(Clone, Debug, PartialEq)]
pub struct XCandidate<F: Field> {
    pub x: Poly<F>,
    /// The generating `Y`; absent for custom candidates.
    pub y: Option<Poly<F>>,
    /// `L = deg X`.
    pub degree: usize,
    pub kind: XKind,
}

impl<F: Field> XCandidate<F> {
    /// An arbitrary `X`, e.g. for negative controls.
    pub fn custom(x: Poly<F>) -> Result<Self> {
        let degree = x.degree().ok_or_else(|| Error::Usage("X must be nonzero".into()))?;
        if degree == 0 {
            return Err(Error::Usage("X must be nonconstant".into()));
        }
        Ok(XCandidate { x, y: None, degree, kind: XKind::Custom })
    }
}

/// `int_0^eta p`.
pub fn antiderivative_continuous<F: Field>(p: &Poly<F>) -> Poly<F> {
    p.integral()
}

fn binomial<F: Field>(n: usize, k: usize) -> F {
    if k > n {
        return F::zero();
    }
    factorial::<F>(n) / &(factorial::<F>(k) * &factorial::<F>(n - k))
}

/// `[[m]]' = (t^{-m} - t^m) / (t^{-1} - t)`.
fn q_number<F: Field>(t: &F, m: i64) -> Result<F> {
    let m = i32::try_from(m).map_err(|_| Error::Usage("index too large".into()))?;
    let num = t.pow(-m).ok_or(Error::DivisionByZero)? - &t.pow(m).ok_or(Error::DivisionByZero)?;
    let den = t.inv().ok_or(Error::DivisionByZero)? - t;
    den.inv().map(|d| num * &d).ok_or(Error::DivisionByZero)
}

/// `g'_n^{(k)}`: coefficients of the symmetric quotient
/// `(eta_1^{n+1} - eta_2^{n+1}) / (eta_1 - eta_2) = sum_k g'_n^{(k)} eta^{n-k}`.
pub fn gprime<F: Field>(coord: &Coordinate<F>, n: usize, k: usize) -> Result<F> {
    if k > n {
        return Err(Error::Usage(format!("g' index k = {k} exceeds n = {n}")));
    }
    match coord {
        Coordinate::Wilson => {
            let sign = if k % 2 == 1 { -F::one() } else { F::one() };
            let two = F::from_i64(2).pow(2 * k as i32 + 1).expect("nonzero");
            Ok(sign * &binomial::<F>(2 * n + 2, 2 * k + 1) / &two)
        }
        Coordinate::AskeyWilson { t } => {
            if k % 2 == 1 {
                return Ok(F::zero());
            }
            let h = k / 2;
            let mut sum = F::zero();
            for r in 0..=h {
                let m = (n - k + 1 + 2 * r) as i64;
                let term = binomial::<F>(n - k + r, r) * &q_number(t, m)?
                    / &(factorial::<F>(h - r) * &factorial::<F>(n - h + 1 + r));
                sum = if r % 2 == 1 { sum - &term } else { sum + &term };
            }
            let two_k = F::from_i64(2).pow(k as i32).expect("nonzero");
            Ok(factorial::<F>(n + 1) / &two_k * &sum)
        }
    }
}

/// `difference quotient` of `p` in the coordinate's ring.
pub fn coordinate_quotient<F: Field>(coord: &Coordinate<F>, p: &Poly<F>) -> Result<Poly<F>> {
    match coord {
        Coordinate::Wilson => difference_quotient(&WilsonRing::new(), p),
        Coordinate::AskeyWilson { t } => difference_quotient(&AwRing::new(t.clone())?, p),
    }
}

/// `I[p]`: the polynomial `P` with `P(0) = 0` whose difference quotient is `p`.
pub fn discrete_antiderivative<F: Field>(p: &Poly<F>, coord: &Coordinate<F>) -> Result<Poly<F>> {
    let Some(n) = p.degree() else { return Ok(Poly::zero(Var::Eta)) };
    let g: Vec<Vec<F>> = (0..=n)
        .map(|j| (0..=j).map(|k| gprime(coord, j, k)).collect::<Result<Vec<_>>>())
        .collect::<Result<_>>()?;
    let mut b = vec![F::zero(); n + 2];
    for k in (0..=n).rev() {
        let mut acc = p.coeff(k);
        for j in k + 1..=n {
            acc = acc - g[j][j - k].clone() * &b[j + 1];
        }
        b[k + 1] = acc / &g[k][0];
    }
    let out = Poly::new(b, p.var());
    if crate::checked() {
        let back = coordinate_quotient(coord, &out)?;
        if back != *p {
            return Err(Error::Internal(format!("I[p] fails its defining identity: quotient {back}, p = {p}")));
        }
    }
    Ok(out)
}

/// `X = int Xi_D Y` (continuous) or `I[Xi_D Y]` (shift families).
pub fn make_x<F: Field>(system: &MultiIndexedSystem<F>, y: &Poly<F>) -> Result<XCandidate<F>> {
    let Some(dy) = y.degree() else { return Err(Error::Usage("Y must be nonzero".into())) };
    let integrand = system.xi() * y;
    let (x, kind) = match Coordinate::of(system.spec()) {
        None => (antiderivative_continuous(&integrand), XKind::ContinuousAntiderivative),
        Some(c) => (discrete_antiderivative(&integrand, &c)?, XKind::DiscreteAntiderivative),
    };
    let degree = system.ell() + dy + 1;
    if x.degree() != Some(degree) {
        return Err(Error::Internal(format!("deg X = {:?}, expected {degree}", x.degree())));
    }
    Ok(XCandidate { x, y: Some(y.clone()), degree, kind })
}

/// `X = Xi_D^2 p` (continuous) or `X(x) = Xi_D(x - i gamma/2) Xi_D(x + i gamma/2) p(x)`
/// (shift families), with its generating `Y`. The constant term is kept.
pub fn xi_squared_times<F: Field>(system: &MultiIndexedSystem<F>, p: &Poly<F>) -> Result<XCandidate<F>> {
    if p.is_zero() {
        return Err(Error::Usage("p must be nonzero".into()));
    }
    let xi = system.xi();
    let (x, y) = match Coordinate::of(system.spec()) {
        None => {
            let y = &(&xi.derivative() * p).scale(&F::from_i64(2)) + &(xi * &p.derivative());
            (&(xi * xi) * p, y)
        }
        Some(Coordinate::Wilson) => shifted_square(&WilsonRing::new(), xi, p)?,
        Some(Coordinate::AskeyWilson { t }) => shifted_square(&AwRing::new(t)?, xi, p)?,
    };
    // the generating Y reproduces X up to its constant term
    let from_y = make_x(system, &y)?;
    if from_y.x != x.add_scalar(&-x.coeff(0)) {
        return Err(Error::Internal("Xi^2 candidate does not match its generating Y".into()));
    }
    let degree = x.degree().expect("nonzero");
    Ok(XCandidate { x, y: Some(y), degree, kind: XKind::XiSquaredTimesP })
}

fn shifted_square<F: Field, R: ShiftRing<F>>(ring: &R, xi: &Poly<F>, p: &Poly<F>) -> Result<(Poly<F>, Poly<F>)> {
    let prod = ring.shift_eval(xi, -1).ring_mul(&ring.shift_eval(xi, 1)).ring_mul(&ring.shift_eval(p, 0));
    let x = ring.sym_extract(&prod)?;
    let y = staggered_quotient(ring, xi, p)?;
    Ok((x, y))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Rational;

    fn r(a: i64, b: i64) -> Rational {
        Rational::frac(a, b)
    }

    #[test]
    fn gprime_examples() {
        let w = Coordinate::<Rational>::Wilson;
        assert_eq!(gprime(&w, 0, 0).unwrap(), Rational::one());
        assert_eq!(gprime(&w, 1, 0).unwrap(), r(2, 1));
        assert_eq!(gprime(&w, 1, 1).unwrap(), r(-1, 2));
        let aw = Coordinate::AskeyWilson { t: r(1, 2) };
        assert_eq!(gprime(&aw, 0, 0).unwrap(), Rational::one());
        assert_eq!(gprime(&aw, 3, 1).unwrap(), Rational::zero());
        assert!(gprime(&w, 1, 2).is_err());
    }

    #[test]
    fn wilson_antiderivatives() {
        let w = Coordinate::<Rational>::Wilson;
        let eta = Poly::<Rational>::identity(Var::Eta);
        assert_eq!(discrete_antiderivative(&Poly::one(Var::Eta), &w).unwrap(), eta);
        let p = Poly::from_rationals(&[r(-1, 2), r(2, 1)], Var::Eta);
        assert_eq!(discrete_antiderivative(&p, &w).unwrap(), &eta * &eta);
    }

    #[test]
    fn aw_antiderivative_of_one() {
        let aw = Coordinate::AskeyWilson { t: r(1, 3) };
        let eta = Poly::<Rational>::identity(Var::Eta);
        assert_eq!(discrete_antiderivative(&Poly::one(Var::Eta), &aw).unwrap(), eta);
    }

    #[test]
    fn continuous_examples() {
        assert_eq!(antiderivative_continuous(&Poly::<Rational>::zero(Var::Eta)), Poly::zero(Var::Eta));
        let g = r(7, 3);
        let xi = Poly::<Rational>::from_rationals(&[g.clone() + r(1, 2), r(1, 1)], Var::Eta);
        let expect = Poly::from_rationals(&[r(0, 1), g + r(1, 2), r(1, 2)], Var::Eta);
        assert_eq!(antiderivative_continuous(&xi), expect);
    }
}
