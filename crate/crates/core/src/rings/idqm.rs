use std::fmt;
use std::marker::PhantomData;

use super::laurent::Laurent;
use crate::algebra::{ExactRing, Field, Gaussian, Poly, Rational, Var};
use crate::error::{Error, Result};

/// Function ring for the pure-imaginary-shift families. Elements represent
/// functions of `x`; `shift_eval(p, m)` is `p(eta(x + i m gamma / 2))`.
pub trait ShiftRing<F: Field>: Clone + Send + Sync + fmt::Debug {
    type Elem: ExactRing + fmt::Display + Send + Sync;

    fn shift_eval(&self, p: &Poly<F>, m: i64) -> Self::Elem;

    fn constant(&self, c: &F) -> Self::Elem;

    /// `x -> -x`; the check functions are exactly its invariants.
    fn involution(&self, e: &Self::Elem) -> Self::Elem;

    /// Complex conjugate of the function for real `x`.
    fn star(&self, e: &Self::Elem) -> Self::Elem;

    /// The polynomial `P` with `P(eta(x)) = e`.
    fn sym_extract(&self, e: &Self::Elem) -> Result<Poly<F>>;

    /// `c_phi` in `phi(x) = i c_phi (eta(x - i gamma/2) - eta(x + i gamma/2))`.
    fn c_phi(&self) -> F;

    /// Two-factor building block of the e-functions:
    /// `(a + ix)(b + ix)` for Wilson, `e^{-ix}(1 - a e^{ix})(1 - b e^{ix})` for Askey-Wilson.
    fn v_function(&self, a: &F, b: &F) -> Self::Elem;

    /// Odd weight used by the last symmetric combination: `i x` or `e^{±ix}`.
    fn weight(&self, sign: i32) -> Self::Elem;

    fn delta_eta(&self) -> Self::Elem {
        let eta = Poly::identity(Var::Eta);
        self.shift_eval(&eta, -1).ring_sub(&self.shift_eval(&eta, 1))
    }
}

/// Wilson: `eta = x^2`, `gamma = 1`; elements are polynomials in `x` with
/// Gaussian-rational coefficients.
#[derive(Clone, Debug, Default)]
pub struct WilsonRing<F>(PhantomData<F>);

impl<F: Field> WilsonRing<F> {
    pub fn new() -> Self {
        WilsonRing(PhantomData)
    }

    fn lift(c: &F) -> Gaussian<F> {
        Gaussian::real(c.clone())
    }
}

impl<F: Field> ShiftRing<F> for WilsonRing<F> {
    type Elem = Poly<Gaussian<F>>;

    fn shift_eval(&self, p: &Poly<F>, m: i64) -> Self::Elem {
        let half_m = F::from_rational(&Rational::frac(m, 2));
        let shifted_x = Poly::new(vec![Gaussian::new(F::zero(), half_m), Gaussian::one()], Var::X);
        let eta = &shifted_x * &shifted_x;
        p.map(Self::lift).with_var(Var::X).compose(&eta)
    }

    fn constant(&self, c: &F) -> Self::Elem {
        Poly::constant(Self::lift(c), Var::X)
    }

    fn involution(&self, e: &Self::Elem) -> Self::Elem {
        let coeffs = e
            .coeffs()
            .iter()
            .enumerate()
            .map(|(k, c)| if k % 2 == 1 { -c.clone() } else { c.clone() })
            .collect();
        Poly::new(coeffs, Var::X)
    }

    fn star(&self, e: &Self::Elem) -> Self::Elem {
        e.map(Gaussian::conj)
    }

    fn sym_extract(&self, e: &Self::Elem) -> Result<Poly<F>> {
        let mut out = Vec::new();
        for (k, c) in e.coeffs().iter().enumerate() {
            if k % 2 == 1 {
                if !c.is_zero() {
                    return Err(Error::NotCheckPolynomial(format!("odd power x^{k} in {e}")));
                }
                continue;
            }
            if !c.is_real() {
                return Err(Error::NotCheckPolynomial(format!("non-real coefficient in {e}")));
            }
            out.push(c.re.clone());
        }
        Ok(Poly::new(out, Var::Eta))
    }

    fn c_phi(&self) -> F {
        F::one()
    }

    fn v_function(&self, a: &F, b: &F) -> Self::Elem {
        let f = |c: &F| Poly::new(vec![Self::lift(c), Gaussian::i()], Var::X);
        &f(a) * &f(b)
    }

    fn weight(&self, _sign: i32) -> Self::Elem {
        Poly::monomial(Gaussian::i(), 1, Var::X)
    }
}

/// Askey-Wilson: `eta = cos x`, elements are Laurent polynomials in
/// `z = e^{ix}`, and the half shift `x -> x - i gamma/2` is `z -> t z` with
/// `t = q^{1/2}`.
#[derive(Clone, Debug)]
pub struct AwRing<F> {
    t: F,
}

impl<F: Field> AwRing<F> {
    pub fn new(t: F) -> Result<Self> {
        if t.is_zero() || t == F::one() || t == -F::one() {
            return Err(Error::DegenerateParameter(format!("shift unit t = {t}")));
        }
        Ok(AwRing { t })
    }

    pub fn t(&self) -> &F {
        &self.t
    }

    fn eta_elem() -> Laurent<F> {
        let half = F::from_rational(&Rational::frac(1, 2));
        Laurent::new(-1, vec![half.clone(), F::zero(), half])
    }
}

impl<F: Field> ShiftRing<F> for AwRing<F> {
    type Elem = Laurent<F>;

    fn shift_eval(&self, p: &Poly<F>, m: i64) -> Self::Elem {
        let factor = self.t.pow(-m as i32).expect("t is nonzero");
        let eta = Self::eta_elem().dilate(&factor).expect("t is nonzero");
        let mut acc = Laurent::zero();
        for c in p.coeffs().iter().rev() {
            acc = acc.mul(&eta).add(&Laurent::constant(c.clone()));
        }
        acc
    }

    fn constant(&self, c: &F) -> Self::Elem {
        Laurent::constant(c.clone())
    }

    fn involution(&self, e: &Self::Elem) -> Self::Elem {
        e.invert_variable()
    }

    fn star(&self, e: &Self::Elem) -> Self::Elem {
        e.invert_variable()
    }

    /// Peels `c (z^k + z^-k) = 2c T_k(eta)` from the top.
    fn sym_extract(&self, e: &Self::Elem) -> Result<Poly<F>> {
        if e.invert_variable() != *e {
            return Err(Error::NotCheckPolynomial(format!("not symmetric under z -> 1/z: {e}")));
        }
        let Some((_, hi)) = e.window() else { return Ok(Poly::zero(Var::Eta)) };
        let eta = Poly::identity(Var::Eta);
        let two = F::from_i64(2);
        let mut cheb = vec![Poly::one(Var::Eta), eta.clone()];
        for k in 2..=hi.max(1) as usize {
            let next = &(&eta * &cheb[k - 1]).scale(&two) - &cheb[k - 2];
            cheb.push(next);
        }
        let mut out = Poly::constant(e.coeff(0), Var::Eta);
        for k in 1..=hi {
            let c = e.coeff(k);
            out = &out + &cheb[k as usize].scale(&(c * &two));
        }
        Ok(out)
    }

    fn c_phi(&self) -> F {
        F::from_i64(2) / &(self.t.inv().expect("t is nonzero") - &self.t)
    }

    fn v_function(&self, a: &F, b: &F) -> Self::Elem {
        let f = |c: &F| Laurent::new(0, vec![F::one(), -c.clone()]);
        f(a).mul(&f(b)).mul(&Laurent::monomial(F::one(), -1))
    }

    fn weight(&self, sign: i32) -> Self::Elem {
        Laurent::monomial(F::one(), sign.signum() as i64)
    }
}

fn extract_quotient<F: Field, R: ShiftRing<F>>(ring: &R, num: &R::Elem) -> Result<Poly<F>> {
    let q = num
        .ring_div_exact(&ring.delta_eta())
        .map_err(|e| Error::Internal(format!("difference quotient not exact: {e}")))?;
    ring.sym_extract(&q)
}

/// `p(x - i gamma/2) + p(x + i gamma/2)` as a polynomial in `eta`.
pub fn shift_sum<F: Field, R: ShiftRing<F>>(ring: &R, p: &Poly<F>) -> Result<Poly<F>> {
    ring.sym_extract(&ring.shift_eval(p, -1).ring_add(&ring.shift_eval(p, 1)))
}

/// `(p(x - i gamma/2) - p(x + i gamma/2)) / (eta(x - i gamma/2) - eta(x + i gamma/2))`.
pub fn difference_quotient<F: Field, R: ShiftRing<F>>(ring: &R, p: &Poly<F>) -> Result<Poly<F>> {
    extract_quotient(ring, &ring.shift_eval(p, -1).ring_sub(&ring.shift_eval(p, 1)))
}

/// `p(x - i gamma/2) p(x + i gamma/2)`.
pub fn shift_product<F: Field, R: ShiftRing<F>>(ring: &R, p: &Poly<F>) -> Result<Poly<F>> {
    ring.sym_extract(&ring.shift_eval(p, -1).ring_mul(&ring.shift_eval(p, 1)))
}

/// `(p1(x - i gamma) p2(x - i gamma/2) - p1(x + i gamma) p2(x + i gamma/2)) / delta eta`.
pub fn staggered_quotient<F: Field, R: ShiftRing<F>>(
    ring: &R,
    p1: &Poly<F>,
    p2: &Poly<F>,
) -> Result<Poly<F>> {
    let lo = ring.shift_eval(p1, -2).ring_mul(&ring.shift_eval(p2, -1));
    let hi = ring.shift_eval(p1, 2).ring_mul(&ring.shift_eval(p2, 1));
    extract_quotient(ring, &lo.ring_sub(&hi))
}

/// `w(x) p1(x + i gamma/2) p2(x - i gamma/2)` plus its image under `x -> -x`,
/// with `w` the odd weight of the ring.
pub fn weighted_pair<F: Field, R: ShiftRing<F>>(
    ring: &R,
    p1: &Poly<F>,
    p2: &Poly<F>,
    sign: i32,
) -> Result<Poly<F>> {
    let b = ring.weight(sign).ring_mul(&ring.shift_eval(p1, 1)).ring_mul(&ring.shift_eval(p2, -1));
    ring.sym_extract(&b.ring_add(&ring.involution(&b)))
}
