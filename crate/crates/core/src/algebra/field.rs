use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use super::rational::Rational;

/// Exact coefficient field. Every construction in the crate is generic over
/// it, so the same code runs over the rationals and over rational functions
/// of an auxiliary parameter (used to take limits at degenerate points).
pub trait Field:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + for<'a> Div<&'a Self, Output = Self>
{
    /// Elements of unbounded size (rational functions). Checked builds skip
    /// the redundant dense cross-solves for such fields.
    const SYMBOLIC: bool = false;

    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn from_rational(r: &Rational) -> Self;

    fn from_i64(n: i64) -> Self {
        Self::from_rational(&Rational::int(n))
    }

    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Self::one() / self)
        }
    }

    /// Integer power; negative exponents of zero return `None`.
    fn pow(&self, e: i32) -> Option<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..e.unsigned_abs() {
            acc = acc * &base;
        }
        Some(acc)
    }

    /// Scalar by which a coefficient vector is divided to reach its canonical
    /// representative. The default makes the vector monic.
    fn normalizing_scale(coeffs: &[Self]) -> Self {
        coeffs
            .iter()
            .rev()
            .find(|c| !c.is_zero())
            .cloned()
            .unwrap_or_else(Self::one)
    }

    /// The value as a plain rational, when it is one.
    fn as_rational(&self) -> Option<Rational>;
}
