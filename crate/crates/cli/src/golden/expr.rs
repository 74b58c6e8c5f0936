//! Arithmetic wrapper for transcribing closed forms over any `Field`.

use std::ops::{Add, Div, Mul, Neg, Sub};

use mindex_core::algebra::Field;
use mindex_core::families::{poch, qpoch};

#[derive(Clone, Debug, PartialEq)]
pub struct S<F: Field>(pub F);

impl<F: Field> S<F> {
    pub fn int(n: i64) -> Self {
        S(F::from_i64(n))
    }

    pub fn p(&self, e: u32) -> Self {
        S((0..e).fold(F::one(), |acc, _| acc * &self.0))
    }

    /// `(self)_k`.
    pub fn poch(&self, k: usize) -> Self {
        S(poch(&self.0, k))
    }

    /// `(self; q)_k`.
    pub fn qpoch(&self, q: &S<F>, k: usize) -> Self {
        S(qpoch(&self.0, &q.0, k))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// Checked quotient; `None` at a pole.
    pub fn over(self, d: S<F>) -> Option<S<F>> {
        d.0.inv().map(|i| S(self.0 * &i))
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident) => {
        impl<F: Field> $tr<S<F>> for S<F> {
            type Output = S<F>;
            fn $m(self, o: S<F>) -> S<F> {
                S($tr::$m(self.0, o.0))
            }
        }
        impl<F: Field> $tr<&S<F>> for S<F> {
            type Output = S<F>;
            fn $m(self, o: &S<F>) -> S<F> {
                S($tr::$m(self.0, &o.0))
            }
        }
        impl<F: Field> $tr<S<F>> for &S<F> {
            type Output = S<F>;
            fn $m(self, o: S<F>) -> S<F> {
                S($tr::$m(self.0.clone(), o.0))
            }
        }
        impl<F: Field> $tr<&S<F>> for &S<F> {
            type Output = S<F>;
            fn $m(self, o: &S<F>) -> S<F> {
                S($tr::$m(self.0.clone(), &o.0))
            }
        }
        impl<F: Field> $tr<i64> for S<F> {
            type Output = S<F>;
            fn $m(self, o: i64) -> S<F> {
                S($tr::$m(self.0, F::from_i64(o)))
            }
        }
        impl<F: Field> $tr<i64> for &S<F> {
            type Output = S<F>;
            fn $m(self, o: i64) -> S<F> {
                S($tr::$m(self.0.clone(), F::from_i64(o)))
            }
        }
        impl<F: Field> $tr<S<F>> for i64 {
            type Output = S<F>;
            fn $m(self, o: S<F>) -> S<F> {
                S($tr::$m(F::from_i64(self), o.0))
            }
        }
        impl<F: Field> $tr<&S<F>> for i64 {
            type Output = S<F>;
            fn $m(self, o: &S<F>) -> S<F> {
                S($tr::$m(F::from_i64(self), &o.0))
            }
        }
    };
}

binop!(Add, add);
binop!(Sub, sub);
binop!(Mul, mul);
binop!(Div, div);

impl<F: Field> Neg for S<F> {
    type Output = S<F>;
    fn neg(self) -> S<F> {
        S(-self.0)
    }
}

impl<F: Field> Neg for &S<F> {
    type Output = S<F>;
    fn neg(self) -> S<F> {
        S(-self.0.clone())
    }
}
