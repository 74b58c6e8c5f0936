use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use super::field::Field;
use super::rational::Rational;

/// `re + im·i` over a real field. Needed for the Wilson half shifts
/// `x -> x ± i/2`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Gaussian<F> {
    pub re: F,
    pub im: F,
}

pub type GaussianRational = Gaussian<Rational>;

impl<F: Field> Gaussian<F> {
    pub fn new(re: F, im: F) -> Self {
        Gaussian { re, im }
    }

    pub fn real(re: F) -> Self {
        Gaussian { re, im: F::zero() }
    }

    pub fn i() -> Self {
        Gaussian { re: F::zero(), im: F::one() }
    }

    pub fn conj(&self) -> Self {
        Gaussian { re: self.re.clone(), im: -self.im.clone() }
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn norm_sqr(&self) -> F {
        self.re.clone() * &self.re + self.im.clone() * &self.im
    }
}

impl<F: Field> fmt::Display for Gaussian<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else if self.re.is_zero() {
            write!(f, "({})i", self.im)
        } else {
            write!(f, "{} + ({})i", self.re, self.im)
        }
    }
}

impl<F: Field> fmt::Debug for Gaussian<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<F: Field> Add for Gaussian<F> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Gaussian { re: self.re + o.re, im: self.im + o.im }
    }
}

impl<'a, F: Field> Add<&'a Gaussian<F>> for Gaussian<F> {
    type Output = Self;
    fn add(self, o: &'a Self) -> Self {
        Gaussian { re: self.re + &o.re, im: self.im + &o.im }
    }
}

impl<F: Field> Sub for Gaussian<F> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Gaussian { re: self.re - o.re, im: self.im - o.im }
    }
}

impl<'a, F: Field> Sub<&'a Gaussian<F>> for Gaussian<F> {
    type Output = Self;
    fn sub(self, o: &'a Self) -> Self {
        Gaussian { re: self.re - &o.re, im: self.im - &o.im }
    }
}

impl<'a, F: Field> Mul<&'a Gaussian<F>> for Gaussian<F> {
    type Output = Self;
    fn mul(self, o: &'a Self) -> Self {
        let re = self.re.clone() * &o.re - self.im.clone() * &o.im;
        let im = self.re * &o.im + self.im * &o.re;
        Gaussian { re, im }
    }
}

impl<F: Field> Mul for Gaussian<F> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        self * &o
    }
}

impl<'a, F: Field> Div<&'a Gaussian<F>> for Gaussian<F> {
    type Output = Self;
    fn div(self, o: &'a Self) -> Self {
        let n = o.norm_sqr();
        let p = self * &o.conj();
        Gaussian { re: p.re / &n, im: p.im / &n }
    }
}

impl<F: Field> Div for Gaussian<F> {
    type Output = Self;
    fn div(self, o: Self) -> Self {
        self / &o
    }
}

impl<F: Field> Neg for Gaussian<F> {
    type Output = Self;
    fn neg(self) -> Self {
        Gaussian { re: -self.re, im: -self.im }
    }
}

impl<F: Field> Field for Gaussian<F> {
    fn zero() -> Self {
        Gaussian::real(F::zero())
    }

    fn one() -> Self {
        Gaussian::real(F::one())
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    fn from_rational(r: &Rational) -> Self {
        Gaussian::real(F::from_rational(r))
    }

    fn as_rational(&self) -> Option<Rational> {
        if self.im.is_zero() {
            self.re.as_rational()
        } else {
            None
        }
    }
}
