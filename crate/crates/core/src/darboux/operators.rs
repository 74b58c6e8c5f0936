use crate::algebra::{ExactRing, Field, Poly};
use crate::error::{Error, Result};
use crate::families::{FamilySpec, IdqmTable, OperatorTable, OqmTable, Params};
use crate::rings::{AwRing, ShiftRing, WilsonRing};

/// Result of `B-hat`: division by `Xi` either closes or leaves a witness.
#[derive(Clone, Debug, PartialEq)]
pub enum BOutcome<F: Field> {
    Polynomial(Poly<F>),
    NonPolynomial { quotient: Poly<F>, remainder: Poly<F>, divisor: Poly<F> },
}

impl<F: Field> BOutcome<F> {
    pub fn polynomial(&self) -> Option<&Poly<F>> {
        match self {
            BOutcome::Polynomial(p) => Some(p),
            BOutcome::NonPolynomial { .. } => None,
        }
    }

    pub fn into_result(self) -> Result<Poly<F>> {
        match self {
            BOutcome::Polynomial(p) => Ok(p),
            BOutcome::NonPolynomial { remainder, divisor, .. } => Err(Error::Convention(format!(
                "B-hat image is not a polynomial: remainder {remainder} modulo {divisor}"
            ))),
        }
    }
}

/// One chain step `d_1..d_{s-1} -> d_1..d_s` with its denominators.
#[derive(Clone, Debug)]
pub struct Step<F: Field> {
    pub table: OperatorTable<F>,
    pub xi_prefix: Poly<F>,
    pub xi_step: Poly<F>,
    /// `c_F` of the continuous tables; unused by the shift families.
    pub c_f: F,
}

fn divide<F: Field>(num: &Poly<F>, d: &Poly<F>) -> Result<BOutcome<F>> {
    let (q, r) = num.divrem(d)?;
    Ok(if r.is_zero() {
        BOutcome::Polynomial(q)
    } else {
        BOutcome::NonPolynomial { quotient: q, remainder: r, divisor: d.clone() }
    })
}

fn oqm_f<F: Field>(t: &OqmTable<F>, step: &Step<F>, p: &Poly<F>) -> Result<Poly<F>> {
    let xs = &step.xi_step;
    let wr = &(xs * &p.derivative()) - &(&xs.derivative() * p);
    let c_inv = step.c_f.inv().ok_or(Error::DivisionByZero)?;
    let num = &(&t.e_f * &wr) + &(xs * p).scale(&(t.et_f.clone() * &c_inv));
    num.exact_div(&step.xi_prefix)
        .map_err(|e| Error::Convention(format!("F-hat: 1/Xi_prefix does not cancel: {e}")))
}

fn oqm_b<F: Field>(t: &OqmTable<F>, step: &Step<F>, p: &Poly<F>) -> Result<BOutcome<F>> {
    let xp = &step.xi_prefix;
    let wr = &(&xp.derivative() * p) - &(xp * &p.derivative());
    let c = &step.c_f;
    let c_inv = c.inv().ok_or(Error::DivisionByZero)?;
    let num = &(&t.e_b * &wr) + &(xp * p).scale(&(t.et_b.clone() * &c_inv));
    divide(&num.scale(&(c.clone() * c)), &step.xi_step)
}

fn idqm_f<F: Field, R: ShiftRing<F>>(ring: &R, t: &IdqmTable<F>, step: &Step<F>, p: &Poly<F>) -> Result<Poly<F>> {
    let e = ring.v_function(&t.f_pair[0], &t.f_pair[1]);
    let lo = e.ring_mul(&ring.shift_eval(&step.xi_step, 1)).ring_mul(&ring.shift_eval(p, -1));
    let hi = ring.star(&e).ring_mul(&ring.shift_eval(&step.xi_step, -1)).ring_mul(&ring.shift_eval(p, 1));
    let q = lo
        .ring_sub(&hi)
        .ring_div_exact(&ring.delta_eta())
        .map_err(|e| Error::Convention(format!("F-hat numerator not divisible by delta eta: {e}")))?;
    let c_inv = ring.c_phi().inv().ok_or(Error::DivisionByZero)?;
    let img = ring.sym_extract(&q)?.scale(&c_inv);
    img.exact_div(&step.xi_prefix)
        .map_err(|e| Error::Convention(format!("F-hat: 1/Xi_prefix does not cancel: {e}")))
}

fn idqm_b<F: Field, R: ShiftRing<F>>(ring: &R, t: &IdqmTable<F>, step: &Step<F>, p: &Poly<F>) -> Result<BOutcome<F>> {
    let e = ring.v_function(&t.b_pair[0], &t.b_pair[1]);
    // single-step only: the prefix denominator is 1
    if !step.xi_prefix.is_constant() {
        return Err(Error::Unsupported("multi-step shift-family B-hat".into()));
    }
    let p = p.scale(&step.xi_prefix.lc());
    let lo = e.ring_mul(&ring.shift_eval(&p, -1));
    let hi = ring.star(&e).ring_mul(&ring.shift_eval(&p, 1));
    let q = lo
        .ring_sub(&hi)
        .ring_div_exact(&ring.delta_eta())
        .map_err(|e| Error::Convention(format!("B-hat numerator not divisible by delta eta: {e}")))?;
    let c_inv = ring.c_phi().inv().ok_or(Error::DivisionByZero)?;
    divide(&ring.sym_extract(&q)?.scale(&c_inv), &step.xi_step)
}

/// `F-hat_{d_1..d_s}`.
pub fn apply_f<F: Field>(spec: &FamilySpec<F>, step: &Step<F>, p: &Poly<F>) -> Result<Poly<F>> {
    if p.is_zero() {
        return Ok(p.clone());
    }
    match (&step.table, spec.params()) {
        (OperatorTable::Oqm(t), _) => oqm_f(t, step, p),
        (OperatorTable::Idqm(t), Params::W { .. }) => idqm_f(&WilsonRing::new(), t, step, p),
        (OperatorTable::Idqm(t), Params::AW { t: tt, .. }) => idqm_f(&AwRing::new(tt.clone())?, t, step, p),
        _ => Err(Error::Internal("operator table does not match the family".into())),
    }
}

/// `B-hat_{d_1..d_s}`.
pub fn apply_b<F: Field>(spec: &FamilySpec<F>, step: &Step<F>, p: &Poly<F>) -> Result<BOutcome<F>> {
    if p.is_zero() {
        return Ok(BOutcome::Polynomial(p.clone()));
    }
    match (&step.table, spec.params()) {
        (OperatorTable::Oqm(t), _) => oqm_b(t, step, p),
        (OperatorTable::Idqm(t), Params::W { .. }) => idqm_b(&WilsonRing::new(), t, step, p),
        (OperatorTable::Idqm(t), Params::AW { t: tt, .. }) => idqm_b(&AwRing::new(tt.clone())?, t, step, p),
        _ => Err(Error::Internal("operator table does not match the family".into())),
    }
}
