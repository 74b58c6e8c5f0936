use std::fmt;
use std::str::FromStr;

use super::spec::{Family, FamilySpec, IndexSet, Params};
use crate::algebra::{Field, Poly, Rational, Var};
use crate::error::{Error, Result};

/// The eight printed example cases.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AnchorCase {
    LEx1,
    LEx2,
    LEx3,
    JEx1,
    JEx2,
    JEx3,
    WEx1,
    AwEx1,
}

impl AnchorCase {
    pub const ALL: [AnchorCase; 8] = [
        AnchorCase::LEx1,
        AnchorCase::LEx2,
        AnchorCase::LEx3,
        AnchorCase::JEx1,
        AnchorCase::JEx2,
        AnchorCase::JEx3,
        AnchorCase::WEx1,
        AnchorCase::AwEx1,
    ];

    pub fn id(self) -> &'static str {
        match self {
            AnchorCase::LEx1 => "L.Ex1",
            AnchorCase::LEx2 => "L.Ex2",
            AnchorCase::LEx3 => "L.Ex3",
            AnchorCase::JEx1 => "J.Ex1",
            AnchorCase::JEx2 => "J.Ex2",
            AnchorCase::JEx3 => "J.Ex3",
            AnchorCase::WEx1 => "W.Ex1",
            AnchorCase::AwEx1 => "AW.Ex1",
        }
    }

    pub fn family(self) -> Family {
        match self {
            AnchorCase::LEx1 | AnchorCase::LEx2 | AnchorCase::LEx3 => Family::L,
            AnchorCase::JEx1 | AnchorCase::JEx2 | AnchorCase::JEx3 => Family::J,
            AnchorCase::WEx1 => Family::W,
            AnchorCase::AwEx1 => Family::AW,
        }
    }

    pub fn index_set(self) -> IndexSet {
        let s = match self {
            AnchorCase::LEx1 | AnchorCase::JEx1 | AnchorCase::WEx1 | AnchorCase::AwEx1 => "1I",
            AnchorCase::LEx2 | AnchorCase::JEx2 => "1I,2I",
            AnchorCase::LEx3 | AnchorCase::JEx3 => "1I,1II",
        };
        s.parse().expect("valid literal")
    }

    /// Number of terms of the printed relation, `3 + 2 ell`.
    pub fn terms(self) -> usize {
        3 + 2 * self.index_set().ell()
    }
}

impl fmt::Display for AnchorCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for AnchorCase {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        AnchorCase::ALL
            .into_iter()
            .find(|c| c.id().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::Parse(format!("unknown case {s:?}")))
    }
}

fn k<F: Field>(a: i64) -> F {
    F::from_i64(a)
}

fn frac<F: Field>(a: i64, b: i64) -> F {
    F::from_rational(&Rational::frac(a, b))
}

/// `eta · (c0 + c1 eta + ...)`.
fn eta_times<F: Field>(cs: Vec<F>) -> Poly<F> {
    Poly::new(cs, Var::Eta).shift_up(1)
}

/// The printed `X_min(eta)` of an example case at the given parameters.
pub fn printed_x_min<F: Field>(case: AnchorCase, spec: &FamilySpec<F>) -> Result<Poly<F>> {
    if spec.family() != case.family() {
        return Err(Error::Usage(format!("{case} needs family {}, got {}", case.family(), spec.family())));
    }
    let p = match (case, spec.params()) {
        (AnchorCase::LEx1, Params::L { g }) => {
            // (1/2) eta (eta + 2g + 1)
            let tg = k::<F>(2) * g;
            eta_times(vec![tg + &k(1), k(1)]).scale(&frac(1, 2))
        }
        (AnchorCase::LEx2, Params::L { g }) => {
            // (1/24) eta (4 eta^2 + 6(2g+1) eta + 3(2g+1)(2g+3))
            let tg = k::<F>(2) * g;
            let c0 = k::<F>(3) * &(tg.clone() + &k(1)) * &(tg.clone() + &k(3));
            let c1 = k::<F>(6) * &(tg + &k(1));
            eta_times(vec![c0, c1, k(4)]).scale(&frac(1, 24))
        }
        (AnchorCase::LEx3, Params::L { g }) => {
            // (1/8) eta (2 eta^3 + 4(2g-1) eta^2 + 3(2g-3)(2g+1) eta + (2g-3)(2g-1)(2g+1))
            let tg = k::<F>(2) * g;
            let m3 = tg.clone() - &k(3);
            let m1 = tg.clone() - &k(1);
            let p1 = tg + &k(1);
            let c0 = m3.clone() * &m1 * &p1;
            let c1 = k::<F>(3) * &m3 * &p1;
            let c2 = k::<F>(4) * &m1;
            eta_times(vec![c0, c1, c2, k(2)]).scale(&frac(1, 8))
        }
        (AnchorCase::JEx1, Params::J { g, h }) => {
            let (a, b) = (g.clone() + h, g.clone() - h);
            // (1/4) eta ((b+2) eta + 2(a-1))
            eta_times(vec![k::<F>(2) * &(a - &k(1)), b + &k(2)]).scale(&frac(1, 4))
        }
        (AnchorCase::JEx2, Params::J { g, h }) => {
            let (a, b) = (g.clone() + h, g.clone() - h);
            // (1/48)(b+4) eta ((b+2)(b+3) eta^2 + 3(b+3)(a-1) eta + 3(a^2-2a+b+3))
            let c2 = (b.clone() + &k(2)) * &(b.clone() + &k(3));
            let c1 = k::<F>(3) * &(b.clone() + &k(3)) * &(a.clone() - &k(1));
            let c0 = k::<F>(3) * &(a.clone() * &a - &(k::<F>(2) * &a) + &b + &k(3));
            eta_times(vec![c0, c1, c2]).scale(&((b + &k(4)) * &frac(1, 48)))
        }
        (AnchorCase::JEx3, Params::J { g, h }) => {
            let (a, b) = (g.clone() + h, g.clone() - h);
            // -(1/64) eta ((b-2)b(b+2) eta^3 + 4b^2(a-1) eta^2 + 6b(a-1)^2 eta + 4(a-3)(a-1)(a+1))
            let am1 = a.clone() - &k(1);
            let c3 = (b.clone() - &k(2)) * &b * &(b.clone() + &k(2));
            let c2 = k::<F>(4) * &b * &b * &am1;
            let c1 = k::<F>(6) * &b * &am1 * &am1;
            let c0 = k::<F>(4) * &(a.clone() - &k(3)) * &am1 * &(a + &k(1));
            eta_times(vec![c0, c1, c2, c3]).scale(&frac(-1, 64))
        }
        (AnchorCase::WEx1, Params::W { a }) => {
            let (s1, s2) = (a[0].clone() + &a[1], a[0].clone() * &a[1]);
            let (t1, t2) = (a[2].clone() + &a[3], a[2].clone() * &a[3]);
            // (1/4) eta (2(s1-t1-2) eta + 4(s2 t1 - s1 t2 - s1 t1 + 2 t2) + s1 + 3 t1 - 2)
            let c1 = k::<F>(2) * &(s1.clone() - &t1 - &k(2));
            let c0 = k::<F>(4)
                * &(s2 * &t1 - &(s1.clone() * &t2) - &(s1.clone() * &t1) + &(k::<F>(2) * &t2))
                + &s1
                + &(k::<F>(3) * &t1)
                - &k(2);
            eta_times(vec![c0, c1]).scale(&frac(1, 4))
        }
        (AnchorCase::AwEx1, Params::AW { a, t }) => {
            let q = t.clone() * t;
            let (s1, s2) = (a[0].clone() + &a[1], a[0].clone() * &a[1]);
            let (t1, t2) = (a[2].clone() + &a[3], a[2].clone() * &a[3]);
            let q2 = q.clone() * &q;
            let one = F::one();
            // eta/((1+q) s1) (2 t (s2 - t2 q^2) eta - (1+q)(s1(1-t2) q + t1(s2 - q^2)))
            let c1 = k::<F>(2) * t * &(s2.clone() - &(t2.clone() * &q2));
            let c0 = -(one.clone() + &q)
                * &(s1.clone() * &(one.clone() - &t2) * &q + &(t1 * &(s2 - &q2)));
            let pre = ((one + &q) * &s1)
                .inv()
                .ok_or_else(|| Error::DegenerateParameter("(1+q)(a1+a2) = 0".into()))?;
            eta_times(vec![c0, c1]).scale(&pre)
        }
        _ => unreachable!("family checked above"),
    };
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_round_trip() {
        for c in AnchorCase::ALL {
            assert_eq!(c.id().parse::<AnchorCase>().unwrap(), c);
        }
        assert_eq!(AnchorCase::LEx3.terms(), 9);
        assert_eq!(AnchorCase::WEx1.terms(), 5);
    }

    #[test]
    fn laguerre_ex1_shape() {
        let spec = FamilySpec::laguerre(Rational::one());
        let x = printed_x_min(AnchorCase::LEx1, &spec).unwrap();
        // (1/2) eta (eta + 3)
        let expect = Poly::from_rationals(
            &[Rational::zero(), Rational::frac(3, 2), Rational::frac(1, 2)],
            Var::Eta,
        );
        assert_eq!(x, expect);
    }

    #[test]
    fn family_mismatch() {
        let spec = FamilySpec::laguerre(Rational::one());
        assert!(printed_x_min(AnchorCase::JEx1, &spec).is_err());
    }
}
