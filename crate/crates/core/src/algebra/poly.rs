use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::field::Field;
use super::rational::Rational;
use crate::error::{Error, Result};

/// Name of the indeterminate a polynomial is written in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    Eta,
    X,
    /// Auxiliary perturbation parameter for limits at degenerate points.
    Eps,
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Var::Eta => "eta",
            Var::X => "x",
            Var::Eps => "eps",
        })
    }
}

/// Dense univariate polynomial; `coeffs[k]` multiplies `var^k`. The highest
/// stored coefficient is never zero, so the zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<F> {
    coeffs: Vec<F>,
    var: Var,
}

impl<F: Field> Poly<F> {
    pub fn new(mut coeffs: Vec<F>, var: Var) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs, var }
    }

    pub fn zero(var: Var) -> Self {
        Poly { coeffs: Vec::new(), var }
    }

    pub fn one(var: Var) -> Self {
        Self::constant(F::one(), var)
    }

    pub fn constant(c: F, var: Var) -> Self {
        Self::new(vec![c], var)
    }

    pub fn monomial(c: F, k: usize, var: Var) -> Self {
        let mut coeffs = vec![F::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs, var)
    }

    /// The indeterminate itself.
    pub fn identity(var: Var) -> Self {
        Self::monomial(F::one(), 1, var)
    }

    /// `c0 + c1·var` from rationals, handy in tests and tables.
    pub fn from_rationals(cs: &[Rational], var: Var) -> Self {
        Self::new(cs.iter().map(F::from_rational).collect(), var)
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn with_var(mut self, var: Var) -> Self {
        self.var = var;
        self
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<F> {
        self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn coeff(&self, k: usize) -> F {
        self.coeffs.get(k).cloned().unwrap_or_else(F::zero)
    }

    pub fn lc(&self) -> F {
        self.coeffs.last().cloned().unwrap_or_else(F::zero)
    }

    fn check_var(&self, other: &Self) -> Result<()> {
        if self.var == other.var {
            Ok(())
        } else {
            Err(Error::VariableMismatch(self.var.to_string(), other.var.to_string()))
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_var(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) + &other.coeff(k)).collect();
        Ok(Self::new(coeffs, self.var))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_var(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) - &other.coeff(k)).collect();
        Ok(Self::new(coeffs, self.var))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_var(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.var));
        }
        let mut out = vec![F::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + &(a.clone() * b);
            }
        }
        Ok(Self::new(out, self.var))
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(self.var);
        }
        Self::new(self.coeffs.iter().map(|a| a.clone() * c).collect(), self.var)
    }

    pub fn add_scalar(&self, c: &F) -> Self {
        let mut coeffs = self.coeffs.clone();
        if coeffs.is_empty() {
            coeffs.push(F::zero());
        }
        coeffs[0] = coeffs[0].clone() + c;
        Self::new(coeffs, self.var)
    }

    /// Multiplies by `var^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![F::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self::new(coeffs, self.var)
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Self::one(self.var);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c.clone() * &F::from_i64(k as i64))
            .collect();
        Self::new(coeffs, self.var)
    }

    /// Term-wise antiderivative with zero constant term.
    pub fn integral(&self) -> Self {
        let mut coeffs = vec![F::zero()];
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs.push(c.clone() / &F::from_i64(k as i64 + 1));
        }
        Self::new(coeffs, self.var)
    }

    pub fn eval(&self, at: &F) -> F {
        let mut acc = F::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * at + c;
        }
        acc
    }

    /// `self(inner)`; the result lives in `inner`'s variable.
    pub fn compose(&self, inner: &Self) -> Self {
        let mut acc = Self::zero(inner.var);
        for c in self.coeffs.iter().rev() {
            acc = (&acc * inner).add_scalar(c);
        }
        acc
    }

    /// Euclidean division `self = q·d + r` with `deg r < deg d`.
    pub fn divrem(&self, d: &Self) -> Result<(Self, Self)> {
        self.check_var(d)?;
        let dd = d.degree().ok_or(Error::DivisionByZero)?;
        let inv = d.lc().inv().ok_or(Error::DivisionByZero)?;
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return Ok((Self::zero(self.var), self.clone()));
        }
        let mut q = vec![F::zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = r[k + dd].clone() * &inv;
            if !c.is_zero() {
                for (j, dj) in d.coeffs.iter().enumerate() {
                    r[k + j] = r[k + j].clone() - &(c.clone() * dj);
                }
            }
            q[k] = c;
        }
        r.truncate(dd);
        Ok((Self::new(q, self.var), Self::new(r, self.var)))
    }

    pub fn exact_div(&self, d: &Self) -> Result<Self> {
        let (q, r) = self.divrem(d)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::InexactDivision(format!("({self}) / ({d}) leaves {r}")))
        }
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Result<Self> {
        self.check_var(other)?;
        let (mut a, mut b) = (self.monic(), other.monic());
        while !b.is_zero() {
            let (_, r) = a.divrem(&b)?;
            a = b;
            b = r.monic();
        }
        Ok(a)
    }

    pub fn monic(&self) -> Self {
        match self.lc().inv() {
            Some(inv) => self.scale(&inv),
            None => self.clone(),
        }
    }

    /// Canonical representative under scalar multiples, together with the
    /// scalar that was divided out (`self = scale · canonical`).
    pub fn normalized(&self) -> (F, Self) {
        if self.is_zero() {
            return (F::one(), self.clone());
        }
        let s = F::normalizing_scale(&self.coeffs);
        let inv = s.inv().expect("normalizing scale is nonzero");
        (s, self.scale(&inv))
    }

    /// `Some(c)` with `self = c·other` when the two are proportional and
    /// `other` is nonzero.
    pub fn ratio_to(&self, other: &Self) -> Option<F> {
        if other.is_zero() || self.var != other.var {
            return None;
        }
        if self.degree() != other.degree() {
            return if self.is_zero() { Some(F::zero()) } else { None };
        }
        let c = self.lc() / &other.lc();
        if other.scale(&c) == *self {
            Some(c)
        } else {
            None
        }
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> Poly<G> {
        Poly::new(self.coeffs.iter().map(f).collect(), self.var)
    }

    pub fn try_map<G: Field>(&self, f: impl Fn(&F) -> Option<G>) -> Option<Poly<G>> {
        let coeffs = self.coeffs.iter().map(f).collect::<Option<Vec<_>>>()?;
        Some(Poly::new(coeffs, self.var))
    }

    /// Coefficient-wise rational values, when every coefficient is rational.
    pub fn to_rational(&self) -> Option<Poly<Rational>> {
        self.try_map(|c| c.as_rational())
    }
}

impl<F: Field> fmt::Display for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*{}", self.var)?,
                _ => write!(f, "({c})*{}^{k}", self.var)?,
            }
        }
        Ok(())
    }
}

impl<F: Field> fmt::Debug for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

macro_rules! poly_binop {
    ($tr:ident, $m:ident, $try:ident) => {
        impl<'a, F: Field> $tr<&'a Poly<F>> for &'a Poly<F> {
            type Output = Poly<F>;
            fn $m(self, rhs: &'a Poly<F>) -> Poly<F> {
                self.$try(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl<F: Field> $tr<Poly<F>> for Poly<F> {
            type Output = Poly<F>;
            fn $m(self, rhs: Poly<F>) -> Poly<F> {
                (&self).$m(&rhs)
            }
        }
        impl<'a, F: Field> $tr<&'a Poly<F>> for Poly<F> {
            type Output = Poly<F>;
            fn $m(self, rhs: &'a Poly<F>) -> Poly<F> {
                (&self).$m(rhs)
            }
        }
    };
}

poly_binop!(Add, add, try_add);
poly_binop!(Sub, sub, try_sub);
poly_binop!(Mul, mul, try_mul);

impl<F: Field> Neg for Poly<F> {
    type Output = Poly<F>;
    fn neg(self) -> Poly<F> {
        let var = self.var;
        Poly::new(self.coeffs.into_iter().map(|c| -c).collect(), var)
    }
}

impl<F: Field> Neg for &Poly<F> {
    type Output = Poly<F>;
    fn neg(self) -> Poly<F> {
        -self.clone()
    }
}
