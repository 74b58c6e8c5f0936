use super::classical::{askey_wilson, eigen_energy, jacobi, laguerre, wilson};
use super::spec::{Family, FamilySpec, Params, Seed, SeedType};
use crate::algebra::{Field, Poly, Rational, Var};
use crate::error::{Error, Result};

/// How the seed's prefactor (relative to the ground state) enters the
/// Wronskian.
#[derive(Clone, Debug, PartialEq)]
pub enum Prefactor<F: Field> {
    /// `B(eta)·d/deta log(prefactor) = S(eta)`, with `B` common to the family
    /// (`eta` for L, `1 - eta^2` for J).
    LogDerivative { b: Poly<F>, s: Poly<F> },
    /// Shift families: the one-step construction never needs it.
    NotRequired,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SeedDescriptor<F: Field> {
    pub seed: Seed,
    /// `xi_v^t(eta)`, of degree `v`.
    pub xi: Poly<F>,
    /// `E~_v^t`.
    pub energy: F,
    pub prefactor: Prefactor<F>,
    pub convention: &'static str,
}

/// Candidate virtual-state conventions for one (family, type); the first is
/// the default, calibration confirms or rejects it.
pub fn virtual_candidates(family: Family, ty: SeedType) -> &'static [&'static str] {
    match (family, ty) {
        (Family::L, SeedType::I) => &["L1:lag(g-1/2;-eta)", "L1:lag(g+1/2;-eta)"],
        (Family::L, SeedType::II) => &["L2:lag(1/2-g;eta)", "L2:lag(-1/2-g;eta)"],
        (Family::J, SeedType::I) => &["J1:jac(g-1/2,1/2-h)", "J1:jac(g+1/2,-1/2-h)"],
        (Family::J, SeedType::II) => &["J2:jac(1/2-g,h-1/2)", "J2:jac(-1/2-g,h+1/2)"],
        (Family::W, SeedType::I) => &["W1:(1-a1,1-a2,a3,a4)", "W1:(-a1,-a2,a3,a4)"],
        (Family::W, SeedType::II) => &["W2:(a1,a2,1-a3,1-a4)", "W2:(a1,a2,-a3,-a4)"],
        (Family::AW, SeedType::I) => &["AW1:(q/a1,q/a2,a3,a4)", "AW1:(1/a1,1/a2,a3,a4)"],
        (Family::AW, SeedType::II) => &["AW2:(a1,a2,q/a3,q/a4)", "AW2:(a1,a2,1/a3,1/a4)"],
    }
}

pub fn virtual_seed<F: Field>(spec: &FamilySpec<F>, seed: Seed) -> Result<SeedDescriptor<F>> {
    virtual_seed_with(spec, seed, virtual_candidates(spec.family(), seed.ty)[0])
}

fn r<F: Field>(a: i64, b: i64) -> F {
    F::from_rational(&Rational::frac(a, b))
}

pub fn virtual_seed_with<F: Field>(
    spec: &FamilySpec<F>,
    seed: Seed,
    convention: &'static str,
) -> Result<SeedDescriptor<F>> {
    if seed.v == 0 {
        return Err(Error::Usage("virtual-state degree must be at least 1".into()));
    }
    let cands = virtual_candidates(spec.family(), seed.ty);
    let alt = match cands.iter().position(|c| *c == convention) {
        Some(i) => i == 1,
        None => return Err(Error::Usage(format!("unknown convention {convention} for {}", spec.family()))),
    };
    let v = seed.v;
    let vv = F::from_i64(v as i64);
    let one = F::one();
    let shift = if alt { F::one() } else { F::zero() };
    let eta = Poly::<F>::identity(Var::Eta);
    let (xi, energy, prefactor) = match (spec.params(), seed.ty) {
        (Params::L { g }, SeedType::I) => {
            let xi = laguerre(v, &(g.clone() - &r(1, 2) + &shift)).compose(&-eta.clone());
            let e = -F::from_i64(4) * &(g.clone() + &vv + &r(1, 2));
            (xi, e, Prefactor::LogDerivative { b: eta.clone(), s: eta })
        }
        (Params::L { g }, SeedType::II) => {
            let xi = laguerre(v, &(r::<F>(1, 2) - g - &shift));
            let e = -F::from_i64(4) * &(g.clone() - &vv - &r(1, 2));
            let s = Poly::constant(r::<F>(1, 2) - g, Var::Eta);
            (xi, e, Prefactor::LogDerivative { b: eta, s })
        }
        (Params::J { g, h }, SeedType::I) => {
            let xi = jacobi(v, &(g.clone() - &r(1, 2) + &shift), &(r::<F>(1, 2) - h - &shift));
            let e = -F::from_i64(4) * &(g.clone() + &vv + &r(1, 2)) * &(h.clone() - &vv - &r(1, 2));
            let b = Poly::new(vec![one.clone(), F::zero(), -one.clone()], Var::Eta);
            let s = Poly::new(vec![one.clone(), -one.clone()], Var::Eta).scale(&(r::<F>(1, 2) - h));
            (xi, e, Prefactor::LogDerivative { b, s })
        }
        (Params::J { g, h }, SeedType::II) => {
            let xi = jacobi(v, &(r::<F>(1, 2) - g - &shift), &(h.clone() - &r(1, 2) + &shift));
            let e = -F::from_i64(4) * &(g.clone() - &vv - &r(1, 2)) * &(h.clone() + &vv + &r(1, 2));
            let b = Poly::new(vec![one.clone(), F::zero(), -one.clone()], Var::Eta);
            let s = Poly::new(vec![one.clone(), one.clone()], Var::Eta).scale(&(g.clone() - &r(1, 2)));
            (xi, e, Prefactor::LogDerivative { b, s })
        }
        (Params::W { a }, ty) => {
            let base = if alt { F::zero() } else { one.clone() };
            let (s1, s1p) = (a[0].clone() + &a[1], a[2].clone() + &a[3]);
            let (tw, e) = match ty {
                SeedType::I => (
                    [base.clone() - &a[0], base - &a[1], a[2].clone(), a[3].clone()],
                    -(s1 - &vv - &one) * &(s1p + &vv),
                ),
                SeedType::II => (
                    [a[0].clone(), a[1].clone(), base.clone() - &a[2], base - &a[3]],
                    -(s1p - &vv - &one) * &(s1 + &vv),
                ),
            };
            (wilson(v, &tw), e, Prefactor::NotRequired)
        }
        (Params::AW { a, .. }, ty) => {
            let q = spec.q().expect("AW has q");
            let base = if alt { one.clone() } else { q.clone() };
            let over = |x: &F| -> Result<F> {
                x.inv()
                    .map(|i| base.clone() * &i)
                    .ok_or_else(|| Error::DegenerateParameter("zero a-parameter".into()))
            };
            let (s2, s2p) = (a[0].clone() * &a[1], a[2].clone() * &a[3]);
            let qv = q.pow(v as i32).expect("q is nonzero");
            let qmv1 = q.pow(-(v as i32) - 1).expect("q is nonzero");
            let (tw, e) = match ty {
                SeedType::I => (
                    [over(&a[0])?, over(&a[1])?, a[2].clone(), a[3].clone()],
                    -(one.clone() - &(s2 * &qmv1)) * &(one.clone() - &(s2p * &qv)),
                ),
                SeedType::II => (
                    [a[0].clone(), a[1].clone(), over(&a[2])?, over(&a[3])?],
                    -(one.clone() - &(s2p * &qmv1)) * &(one.clone() - &(s2 * &qv)),
                ),
            };
            (askey_wilson(v, &tw, &q)?, e, Prefactor::NotRequired)
        }
    };
    if xi.degree() != Some(v) {
        return Err(Error::DegenerateParameter(format!(
            "virtual polynomial of {seed} loses its leading coefficient for {spec}"
        )));
    }
    Ok(SeedDescriptor { seed, xi, energy, prefactor, convention })
}

/// Guards the energy denominators: `E~_v` must differ from `E_n`, `n <= n_max`.
pub fn check_energy_gap<F: Field>(
    spec: &FamilySpec<F>,
    seed: &SeedDescriptor<F>,
    n_max: usize,
) -> Result<()> {
    for n in 0..=n_max {
        if eigen_energy(spec, n) == seed.energy {
            return Err(Error::DegenerateParameter(format!(
                "virtual energy of {} equals E_{n} for {spec}",
                seed.seed
            )));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn laguerre_type_one_seed() {
        let g = Rational::frac(7, 3);
        let spec = FamilySpec::laguerre(g.clone());
        let s = virtual_seed(&spec, Seed::new(1, SeedType::I).unwrap()).unwrap();
        // eta + g + 1/2
        let expect = Poly::from_rationals(&[g + Rational::frac(1, 2), Rational::one()], Var::Eta);
        assert_eq!(s.xi, expect);
    }

    #[test]
    fn jacobi_type_one_seed_shape() {
        let (g, h) = (Rational::frac(7, 3), Rational::frac(5, 4));
        let spec = FamilySpec::jacobi(g.clone(), h.clone());
        let s = virtual_seed(&spec, Seed::new(1, SeedType::I).unwrap()).unwrap();
        let one = Rational::one();
        let expect = Poly::from_rationals(
            &[g.clone() + &h - &one, g - &h + &Rational::int(2)],
            Var::Eta,
        );
        assert!(s.xi.ratio_to(&expect).is_some());
    }

    #[test]
    fn unknown_convention() {
        let spec = FamilySpec::laguerre(Rational::one());
        let seed = Seed::new(1, SeedType::I).unwrap();
        assert!(virtual_seed_with(&spec, seed, "nope").is_err());
    }
}
