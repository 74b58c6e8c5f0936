use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use super::field::Field;
use super::poly::{Poly, Var};
use super::rational::Rational;
use crate::error::{Error, Result};

/// `num/den` with `gcd(num, den) = 1` and a monic denominator.
///
/// Over `F = Rational` in the variable [`Var::Eps`] this is itself a field,
/// used to carry a symbolic perturbation of the parameters.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction<F> {
    num: Poly<F>,
    den: Poly<F>,
}

impl<F: Field> RationalFunction<F> {
    pub fn new(num: Poly<F>, den: Poly<F>) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.var() != den.var() {
            return Err(Error::VariableMismatch(num.var().to_string(), den.var().to_string()));
        }
        if num.is_zero() {
            return Ok(RationalFunction { num, den: Poly::one(den.var()) });
        }
        let g = num.gcd(&den)?;
        let (num, den) = if g.is_constant() {
            (num, den)
        } else {
            (num.exact_div(&g)?, den.exact_div(&g)?)
        };
        let inv = den.lc().inv().ok_or(Error::DivisionByZero)?;
        Ok(RationalFunction { num: num.scale(&inv), den: den.scale(&inv) })
    }

    pub fn from_poly(p: Poly<F>) -> Self {
        let den = Poly::one(p.var());
        RationalFunction { num: p, den }
    }

    pub fn num(&self) -> &Poly<F> {
        &self.num
    }

    pub fn den(&self) -> &Poly<F> {
        &self.den
    }

    pub fn var(&self) -> Var {
        self.num.var()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    /// Value at a point; `None` at a pole.
    pub fn eval(&self, at: &F) -> Option<F> {
        let d = self.den.eval(at);
        if d.is_zero() {
            None
        } else {
            Some(self.num.eval(at) / &d)
        }
    }

    pub fn derivative(&self) -> Self {
        let n = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        Self::new(n, &self.den * &self.den).expect("nonzero denominator")
    }

    /// From coprime `num`, `den`: only the denominator is made monic.
    fn coprime(num: Poly<F>, den: Poly<F>) -> Self {
        if num.is_zero() {
            return RationalFunction { num, den: Poly::one(den.var()) };
        }
        let inv = den.lc().inv().expect("nonzero denominator");
        if inv == F::one() {
            return RationalFunction { num, den };
        }
        RationalFunction { num: num.scale(&inv), den: den.scale(&inv) }
    }

    fn cancel(a: &Poly<F>, b: &Poly<F>) -> (Poly<F>, Poly<F>) {
        if a.is_constant() || b.is_constant() {
            return (a.clone(), b.clone());
        }
        let g = a.gcd(b).expect("same variable");
        if g.is_constant() {
            (a.clone(), b.clone())
        } else {
            (a.exact_div(&g).expect("gcd divides"), b.exact_div(&g).expect("gcd divides"))
        }
    }

    fn combine(&self, o: &Self, sign: bool) -> Self {
        let pm = |a: &Poly<F>, b: &Poly<F>| if sign { a + b } else { a - b };
        if self.den.is_constant() && o.den.is_constant() {
            return Self::coprime(pm(&(&self.num * &o.den), &(&o.num * &self.den)), &self.den * &o.den);
        }
        // Henrici: with g = gcd(b, d), b = g b', d = g d', the sum is
        // (a d' + c b') / (g b' d') and only g can still cancel.
        let (b1, d1) = Self::cancel(&self.den, &o.den);
        let g = self.den.exact_div(&b1).expect("cofactor");
        let n = pm(&(&self.num * &d1), &(&o.num * &b1));
        if g.is_constant() {
            return Self::coprime(n, &self.den * &d1);
        }
        let (n, g) = Self::cancel(&n, &g);
        Self::coprime(n, &(&g * &b1) * &d1)
    }

    fn times(&self, o: &Self) -> Self {
        if self.num.is_zero() || o.num.is_zero() {
            return Self::zero_in(self.var());
        }
        let (a, d) = Self::cancel(&self.num, &o.den);
        let (c, b) = Self::cancel(&o.num, &self.den);
        Self::coprime(&a * &c, &b * &d)
    }

    fn over(&self, o: &Self) -> Self {
        if o.num.is_zero() {
            panic!("{}", Error::DivisionByZero);
        }
        let inv = RationalFunction { num: o.den.clone(), den: o.num.clone() };
        self.times(&inv)
    }

    fn zero_in(v: Var) -> Self {
        RationalFunction { num: Poly::zero(v), den: Poly::one(v) }
    }
}

impl<F: Field> fmt::Display for RationalFunction<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_constant() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl<F: Field> fmt::Debug for RationalFunction<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

macro_rules! ratfunc_binop {
    ($tr:ident, $m:ident, $body:expr) => {
        impl<F: Field> $tr for RationalFunction<F> {
            type Output = Self;
            fn $m(self, o: Self) -> Self {
                $body(&self, &o)
            }
        }
        impl<'a, F: Field> $tr<&'a RationalFunction<F>> for RationalFunction<F> {
            type Output = Self;
            fn $m(self, o: &'a Self) -> Self {
                $body(&self, o)
            }
        }
    };
}

ratfunc_binop!(Add, add, |a: &RationalFunction<F>, b| a.combine(b, true));
ratfunc_binop!(Sub, sub, |a: &RationalFunction<F>, b| a.combine(b, false));
ratfunc_binop!(Mul, mul, |a: &RationalFunction<F>, b| a.times(b));
ratfunc_binop!(Div, div, |a: &RationalFunction<F>, b| a.over(b));

impl<F: Field> Neg for RationalFunction<F> {
    type Output = Self;
    fn neg(self) -> Self {
        RationalFunction { num: -self.num, den: self.den }
    }
}

/// Field structure in the perturbation variable.
impl<F: Field> Field for RationalFunction<F> {
    const SYMBOLIC: bool = true;

    fn zero() -> Self {
        Self::from_poly(Poly::zero(Var::Eps))
    }

    fn one() -> Self {
        Self::from_poly(Poly::one(Var::Eps))
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn from_rational(r: &Rational) -> Self {
        Self::from_poly(Poly::constant(F::from_rational(r), Var::Eps))
    }

    fn as_rational(&self) -> Option<Rational> {
        if self.num.degree().unwrap_or(0) == 0 && self.den.degree() == Some(0) {
            (self.num.coeff(0) / &self.den.coeff(0)).as_rational()
        } else {
            None
        }
    }
}

/// Rational functions of one auxiliary parameter over the rationals.
pub type Perturbed = RationalFunction<Rational>;

impl Perturbed {
    /// The symbolic parameter itself.
    pub fn eps() -> Self {
        Self::from_poly(Poly::identity(Var::Eps))
    }

    /// `c + k·eps`.
    pub fn linear(c: &Rational, k: &Rational) -> Self {
        Self::from_poly(Poly::new(vec![c.clone(), k.clone()], Var::Eps))
    }

    /// Value at `eps = 0`, `None` at a pole.
    pub fn at_zero(&self) -> Option<Rational> {
        self.eval(&Rational::zero())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(cs: &[i64]) -> Poly<Rational> {
        Poly::new(cs.iter().map(|&c| Rational::int(c)).collect(), Var::Eps)
    }

    #[test]
    fn reduced_on_construction() {
        let f = RationalFunction::new(&p(&[-1, 1]) * &p(&[2, 1]), p(&[-2, 2])).unwrap();
        let expect = Poly::from_rationals(&[Rational::int(1), Rational::frac(1, 2)], Var::Eps);
        assert_eq!(f.num(), &expect);
        assert_eq!(f.den(), &p(&[1]));
    }

    #[test]
    fn field_axioms_on_samples() {
        let a = RationalFunction::new(p(&[1, 2]), p(&[3, 0, 1])).unwrap();
        let b = RationalFunction::new(p(&[0, 1]), p(&[1, 1])).unwrap();
        assert_eq!((a.clone() * &b) / &b, a);
        assert_eq!((a.clone() + &b) - &b, a);
        assert!((a.clone() - &a).is_zero());
    }

    #[test]
    fn limit_at_zero() {
        let e = Perturbed::eps();
        let f = (e.clone() * &e + &e) / &e;
        assert_eq!(f.at_zero(), Some(Rational::int(1)));
        assert_eq!((Perturbed::one() / &e).at_zero(), None);
    }

    fn arb_poly() -> impl proptest::strategy::Strategy<Value = Poly<Rational>> {
        use proptest::prelude::*;
        prop::collection::vec(-4i64..=4, 1..4).prop_map(|cs| p(&cs))
    }

    fn arb_rf() -> impl proptest::strategy::Strategy<Value = Perturbed> {
        use proptest::prelude::*;
        (arb_poly(), arb_poly()).prop_filter_map("zero denominator", |(n, d)| RationalFunction::new(n, d).ok())
    }

    proptest::proptest! {
        #[test]
        fn shortcuts_match_plain_reduction(a in arb_rf(), b in arb_rf()) {
            let plain = |n: Poly<Rational>, d: Poly<Rational>| RationalFunction::new(n, d).unwrap();
            proptest::prop_assert_eq!(
                a.clone() + &b,
                plain(&(a.num() * b.den()) + &(b.num() * a.den()), a.den() * b.den())
            );
            proptest::prop_assert_eq!(
                a.clone() - &b,
                plain(&(a.num() * b.den()) - &(b.num() * a.den()), a.den() * b.den())
            );
            proptest::prop_assert_eq!(a.clone() * &b, plain(a.num() * b.num(), a.den() * b.den()));
            if !b.is_zero() {
                proptest::prop_assert_eq!(a.clone() / &b, plain(a.num() * b.den(), a.den() * b.num()));
            }
        }
    }
}
