use std::fmt;

use crate::algebra::{ExactRing, Field, Poly, Var};
use crate::error::{Error, Result};

/// Laurent polynomial `Σ_k c_k z^k` with finitely many nonzero terms;
/// `coeffs[j]` multiplies `z^(low + j)`. Both ends of `coeffs` are nonzero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Laurent<F> {
    low: i64,
    coeffs: Vec<F>,
}

impl<F: Field> Laurent<F> {
    pub fn new(low: i64, mut coeffs: Vec<F>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        let lead = coeffs.iter().take_while(|c| c.is_zero()).count();
        coeffs.drain(..lead);
        let low = if coeffs.is_empty() { 0 } else { low + lead as i64 };
        Laurent { low, coeffs }
    }

    pub fn zero() -> Self {
        Laurent { low: 0, coeffs: Vec::new() }
    }

    pub fn constant(c: F) -> Self {
        Self::new(0, vec![c])
    }

    pub fn monomial(c: F, k: i64) -> Self {
        Self::new(k, vec![c])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Lowest and highest exponents present.
    pub fn window(&self) -> Option<(i64, i64)> {
        if self.is_zero() {
            None
        } else {
            Some((self.low, self.low + self.coeffs.len() as i64 - 1))
        }
    }

    pub fn coeff(&self, k: i64) -> F {
        let j = k - self.low;
        if j < 0 {
            return F::zero();
        }
        self.coeffs.get(j as usize).cloned().unwrap_or_else(F::zero)
    }

    pub fn add(&self, o: &Self) -> Self {
        self.combine(o, true)
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.combine(o, false)
    }

    fn combine(&self, o: &Self, plus: bool) -> Self {
        let (Some((l1, h1)), Some((l2, h2))) = (self.window(), o.window()) else {
            return if self.is_zero() {
                if plus { o.clone() } else { o.scale(&-F::one()) }
            } else {
                self.clone()
            };
        };
        let (lo, hi) = (l1.min(l2), h1.max(h2));
        let coeffs = (lo..=hi)
            .map(|k| if plus { self.coeff(k) + &o.coeff(k) } else { self.coeff(k) - &o.coeff(k) })
            .collect();
        Self::new(lo, coeffs)
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut out = vec![F::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + &(a.clone() * b);
            }
        }
        Self::new(self.low + o.low, out)
    }

    pub fn scale(&self, c: &F) -> Self {
        Self::new(self.low, self.coeffs.iter().map(|a| a.clone() * c).collect())
    }

    /// `z -> 1/z`.
    pub fn invert_variable(&self) -> Self {
        match self.window() {
            None => Self::zero(),
            Some((_, hi)) => Self::new(-hi, self.coeffs.iter().rev().cloned().collect()),
        }
    }

    /// `z -> c·z`.
    pub fn dilate(&self, c: &F) -> Result<Self> {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(j, a)| {
                c.pow((self.low + j as i64) as i32)
                    .map(|p| a.clone() * &p)
                    .ok_or(Error::DivisionByZero)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(self.low, coeffs))
    }

    /// Exact quotient, failing when `d` does not divide `self`.
    pub fn div_exact(&self, d: &Self) -> Result<Self> {
        let Some((dl, _)) = d.window() else { return Err(Error::DivisionByZero) };
        let Some((sl, _)) = self.window() else { return Ok(Self::zero()) };
        let a = Poly::new(self.coeffs.clone(), Var::X);
        let b = Poly::new(d.coeffs.clone(), Var::X);
        let (q, r) = a.divrem(&b)?;
        if !r.is_zero() {
            return Err(Error::InexactDivision(format!("({self}) / ({d})")));
        }
        Ok(Self::new(sl - dl, q.into_coeffs()))
    }
}

impl<F: Field> fmt::Display for Laurent<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(j, c)| format!("({c})*z^{}", self.low + j as i64))
            .collect();
        f.write_str(&terms.join(" + "))
    }
}

impl<F: Field> fmt::Debug for Laurent<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<F: Field> ExactRing for Laurent<F> {
    fn ring_zero_like(&self) -> Self {
        Self::zero()
    }
    fn ring_one_like(&self) -> Self {
        Self::constant(F::one())
    }
    fn ring_is_zero(&self) -> bool {
        self.is_zero()
    }
    fn ring_add(&self, o: &Self) -> Self {
        self.add(o)
    }
    fn ring_sub(&self, o: &Self) -> Self {
        self.sub(o)
    }
    fn ring_mul(&self, o: &Self) -> Self {
        self.mul(o)
    }
    fn ring_div_exact(&self, d: &Self) -> Result<Self> {
        self.div_exact(d)
    }
}
