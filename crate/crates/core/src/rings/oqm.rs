use std::fmt;

use crate::algebra::{ExactRing, Field, Poly, Var};
use crate::error::Result;

/// Ring with a derivation `D` compatible with exact division.
pub trait DerivationRing: ExactRing {
    fn derive(&self) -> Self;
}

/// Laguerre ring: polynomials in `x` with `d/dx`; the coordinate is `eta = x^2`.
impl<F: Field> DerivationRing for Poly<F> {
    fn derive(&self) -> Self {
        self.derivative()
    }
}

pub fn apply_derivation<R: DerivationRing>(e: &R) -> R {
    e.derive()
}

/// Element `a(eta) + b(eta)·s` of the Jacobi ring `Q[eta, s]/(s^2 - 1 + eta^2)`.
/// With `eta = cos 2x`, `s = sin 2x` the derivation is `d/dx`:
/// `D eta = -2s`, `D s = 2 eta`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct JElem<F> {
    pub a: Poly<F>,
    pub b: Poly<F>,
}

impl<F: Field> JElem<F> {
    pub fn new(a: Poly<F>, b: Poly<F>) -> Self {
        JElem { a, b }
    }

    pub fn from_eta(a: Poly<F>) -> Self {
        JElem { a, b: Poly::zero(Var::Eta) }
    }

    pub fn eta() -> Self {
        Self::from_eta(Poly::identity(Var::Eta))
    }

    pub fn s() -> Self {
        JElem { a: Poly::zero(Var::Eta), b: Poly::one(Var::Eta) }
    }

    pub fn scalar(c: F) -> Self {
        Self::from_eta(Poly::constant(c, Var::Eta))
    }

    fn one_minus_eta_sq() -> Poly<F> {
        Poly::new(vec![F::one(), F::zero(), -F::one()], Var::Eta)
    }

    pub fn conj(&self) -> Self {
        JElem { a: self.a.clone(), b: -&self.b }
    }

    /// `(a + bs)(a - bs) = a^2 - b^2 (1 - eta^2)`.
    pub fn norm(&self) -> Poly<F> {
        &(&self.a * &self.a) - &(&(&self.b * &self.b) * &Self::one_minus_eta_sq())
    }

    /// The pure-`eta` part when the `s` component vanishes.
    pub fn as_eta_poly(&self) -> Option<&Poly<F>> {
        if self.b.is_zero() {
            Some(&self.a)
        } else {
            None
        }
    }
}

impl<F: Field> fmt::Display for JElem<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] + [{}]*s", self.a, self.b)
    }
}

impl<F: Field> fmt::Debug for JElem<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<F: Field> ExactRing for JElem<F> {
    fn ring_zero_like(&self) -> Self {
        Self::from_eta(Poly::zero(Var::Eta))
    }
    fn ring_one_like(&self) -> Self {
        Self::from_eta(Poly::one(Var::Eta))
    }
    fn ring_is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
    fn ring_add(&self, o: &Self) -> Self {
        JElem { a: &self.a + &o.a, b: &self.b + &o.b }
    }
    fn ring_sub(&self, o: &Self) -> Self {
        JElem { a: &self.a - &o.a, b: &self.b - &o.b }
    }
    fn ring_mul(&self, o: &Self) -> Self {
        let a = &(&self.a * &o.a) + &(&(&self.b * &o.b) * &Self::one_minus_eta_sq());
        let b = &(&self.a * &o.b) + &(&self.b * &o.a);
        JElem { a, b }
    }
    fn ring_div_exact(&self, d: &Self) -> Result<Self> {
        let n = d.norm();
        let p = self.ring_mul(&d.conj());
        Ok(JElem { a: p.a.exact_div(&n)?, b: p.b.exact_div(&n)? })
    }
}

impl<F: Field> DerivationRing for JElem<F> {
    /// `D(a + bs) = (2 eta b - 2(1 - eta^2) b') + (-2 a') s`.
    fn derive(&self) -> Self {
        let two = F::from_i64(2);
        let eta = Poly::identity(Var::Eta);
        let a = &(&eta * &self.b).scale(&two)
            - &(&Self::one_minus_eta_sq() * &self.b.derivative()).scale(&two);
        let b = self.a.derivative().scale(&-two);
        JElem { a, b }
    }
}
