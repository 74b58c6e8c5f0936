use crate::algebra::{bareiss_det, ExactRing, Field, Poly, Rational, Var};
use crate::error::{Error, Result};
use crate::families::{FamilySpec, Params, Prefactor, SeedDescriptor, SeedType};
use crate::rings::{DerivationRing, JElem};

/// One Wronskian column `f·g` with `b·(log f)' = s`.
#[derive(Clone, Debug)]
pub struct TwistedColumn<R> {
    pub g: R,
    pub s: R,
}

/// `det[H_r(col_j)]` with `H_0 = g`, `H_{r+1} = b H_r' - r b' H_r + s H_r`.
///
/// `H_r = b^r (f g)^{(r)} / f`, so the result is
/// `b^{N(N-1)/2} W[f_1 g_1, ..., f_N g_N] / (f_1 ... f_N)`.
pub fn twisted_wronskian<R: DerivationRing>(cols: &[TwistedColumn<R>], b: &R) -> Result<R> {
    let n = cols.len();
    if n == 0 {
        return Err(Error::Shape("Wronskian of no functions".into()));
    }
    let db = b.derive();
    let mut rows: Vec<Vec<R>> = Vec::with_capacity(n);
    rows.push(cols.iter().map(|c| c.g.clone()).collect());
    let mut r_db = db.ring_zero_like();
    for r in 0..n - 1 {
        let next = cols
            .iter()
            .zip(&rows[r])
            .map(|(c, h)| b.ring_mul(&h.derive()).ring_sub(&r_db.ring_mul(h)).ring_add(&c.s.ring_mul(h)))
            .collect();
        rows.push(next);
        r_db = r_db.ring_add(&db);
    }
    bareiss_det(rows)
}

/// The common `B(eta)`: `eta` for Laguerre, `1 - eta^2` for Jacobi.
pub fn b_poly<F: Field>(spec: &FamilySpec<F>) -> Result<Poly<F>> {
    match spec.params() {
        Params::L { .. } => Ok(Poly::identity(Var::Eta)),
        Params::J { .. } => Ok(Poly::new(vec![F::one(), F::zero(), -F::one()], Var::Eta)),
        _ => Err(Error::Internal("derivative Wronskian requested for a shift family".into())),
    }
}

fn seed_s<F: Field>(seed: &SeedDescriptor<F>) -> Result<Poly<F>> {
    match &seed.prefactor {
        Prefactor::LogDerivative { s, .. } => Ok(s.clone()),
        Prefactor::NotRequired => Err(Error::Internal(format!("seed {} has no log-derivative", seed.seed))),
    }
}

/// Raw `det H` in `eta` for the seed columns, optionally bordered by an
/// eigenpolynomial column (prefactor 1).
pub fn eta_determinant<F: Field>(
    spec: &FamilySpec<F>,
    seeds: &[SeedDescriptor<F>],
    extra: Option<&Poly<F>>,
) -> Result<Poly<F>> {
    let b = b_poly(spec)?;
    let mut cols = seeds
        .iter()
        .map(|s| Ok(TwistedColumn { g: s.xi.clone(), s: seed_s(s)? }))
        .collect::<Result<Vec<_>>>()?;
    if let Some(p) = extra {
        cols.push(TwistedColumn { g: p.clone(), s: Poly::zero(Var::Eta) });
    }
    twisted_wronskian(&cols, &b)
}

/// The polynomial factor restoring the prefactor powers after `b^k` is
/// divided out: `eta^{m}` (L) or `((1-eta)/2)^{m1} ((1+eta)/2)^{m2}` (J).
fn extra_factor<F: Field>(spec: &FamilySpec<F>, m1: usize, m2: usize) -> Poly<F> {
    let half = F::from_rational(&Rational::frac(1, 2));
    match spec.params() {
        Params::L { .. } => Poly::identity(Var::Eta).pow(m1 + m2),
        _ => {
            let minus = Poly::new(vec![half.clone(), -half.clone()], Var::Eta);
            let plus = Poly::new(vec![half.clone(), half], Var::Eta);
            &minus.pow(m1) * &plus.pow(m2)
        }
    }
}

/// Unnormalized `Xi_D` from the seed Wronskian.
pub fn raw_xi<F: Field>(spec: &FamilySpec<F>, seeds: &[SeedDescriptor<F>]) -> Result<Poly<F>> {
    if seeds.is_empty() {
        return Ok(Poly::one(Var::Eta));
    }
    let n = seeds.len();
    let det = eta_determinant(spec, seeds, None)?;
    let m1 = seeds.iter().filter(|s| s.seed.ty == SeedType::I).count();
    let m2 = n - m1;
    let k = n * (n - 1) / 2;
    let b = b_poly(spec)?;
    let (e1, e2) = match spec.params() {
        Params::L { .. } => (m1 * m2, 0),
        _ => (m1 * m2, m1 * m2),
    };
    let num = &det * &extra_factor(spec, e1, e2);
    num.exact_div(&b.pow(k))
        .map_err(|e| Error::Internal(format!("Wronskian not divisible by B^{k}: {e}")))
}

/// Unnormalized `P_{D,n}` from the Wronskian bordered by `P_n`.
pub fn raw_p<F: Field>(
    spec: &FamilySpec<F>,
    seeds: &[SeedDescriptor<F>],
    pn: &Poly<F>,
) -> Result<Poly<F>> {
    if seeds.is_empty() {
        return Ok(pn.clone());
    }
    let m = seeds.len();
    let det = eta_determinant(spec, seeds, Some(pn))?;
    let m1 = seeds.iter().filter(|s| s.seed.ty == SeedType::I).count();
    let m2 = m - m1;
    let k = (m + 1) * m / 2;
    let b = b_poly(spec)?;
    let (e1, e2) = match spec.params() {
        Params::L { .. } => ((m1 + 1) * m2, 0),
        _ => ((m1 + 1) * m2, (m2 + 1) * m1),
    };
    let num = &det * &extra_factor(spec, e1, e2);
    num.exact_div(&b.pow(k))
        .map_err(|e| Error::Internal(format!("bordered Wronskian not divisible by B^{k}: {e}")))
}

/// Recomputes the seed determinant with the derivation in `x` (Laguerre:
/// polynomials in `x`, `eta = x^2`; Jacobi: the ring `Q[eta, s]`) and checks
/// `det_x = c^k det_eta` with `c = 2x` resp. `-2s` substituted.
pub fn x_ring_cross_check<F: Field>(spec: &FamilySpec<F>, seeds: &[SeedDescriptor<F>]) -> Result<()> {
    let n = seeds.len();
    if n == 0 {
        return Ok(());
    }
    let k = n * (n - 1) / 2;
    let det_eta = eta_determinant(spec, seeds, None)?;
    match spec.params() {
        Params::L { .. } => {
            let x2 = Poly::<F>::monomial(F::one(), 2, Var::X);
            let lift = |p: &Poly<F>| p.clone().with_var(Var::X).compose(&x2);
            let cols = seeds
                .iter()
                .map(|s| {
                    Ok(TwistedColumn { g: lift(&s.xi), s: lift(&seed_s(s)?).scale(&F::from_i64(2)) })
                })
                .collect::<Result<Vec<_>>>()?;
            let det_x = twisted_wronskian(&cols, &Poly::identity(Var::X))?;
            let expect = lift(&det_eta).scale(&F::from_i64(2).pow(k as i32).expect("nonzero"));
            if det_x != expect {
                return Err(Error::Internal(format!("x-ring Wronskian mismatch: {det_x} vs {expect}")));
            }
        }
        Params::J { .. } => {
            let b = JElem::from_eta(b_poly(spec)?);
            let m2s = JElem::s().ring_mul(&JElem::scalar(-F::from_i64(2)));
            let cols = seeds
                .iter()
                .map(|s| Ok(TwistedColumn { g: JElem::from_eta(s.xi.clone()), s: m2s.ring_mul(&JElem::from_eta(seed_s(s)?)) }))
                .collect::<Result<Vec<_>>>()?;
            let det_x = twisted_wronskian(&cols, &b)?;
            let mut expect = JElem::from_eta(det_eta);
            for _ in 0..k {
                expect = expect.ring_mul(&m2s);
            }
            if det_x != expect {
                return Err(Error::Internal(format!("s-ring Wronskian mismatch: {det_x} vs {expect}")));
            }
        }
        _ => return Err(Error::Internal("x-ring check requested for a shift family".into())),
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{virtual_seed, Seed};

    fn r(a: i64, b: i64) -> Rational {
        Rational::frac(a, b)
    }

    #[test]
    fn plain_wronskian_of_monomials() {
        // W[1, x, x^2] = 2 with b = 1, s = 0
        let one = Poly::<Rational>::one(Var::X);
        let cols: Vec<_> = (0..3)
            .map(|k| TwistedColumn { g: Poly::monomial(Rational::one(), k, Var::X), s: Poly::zero(Var::X) })
            .collect();
        assert_eq!(twisted_wronskian(&cols, &one).unwrap(), Poly::constant(Rational::int(2), Var::X));
    }

    #[test]
    fn single_seed_is_its_polynomial() {
        let spec = FamilySpec::laguerre(r(7, 3));
        let s = virtual_seed(&spec, Seed::new(2, SeedType::I).unwrap()).unwrap();
        assert_eq!(raw_xi(&spec, std::slice::from_ref(&s)).unwrap(), s.xi);
    }

    #[test]
    fn cross_check_two_seeds() {
        let spec = FamilySpec::jacobi(r(7, 3), r(5, 4));
        let seeds: Vec<_> = ["1I", "2II"]
            .iter()
            .map(|t| virtual_seed(&spec, t.parse().unwrap()).unwrap())
            .collect();
        x_ring_cross_check(&spec, &seeds).unwrap();
        let spec = FamilySpec::laguerre(r(7, 3));
        let seeds: Vec<_> = ["1I", "1II", "3I"]
            .iter()
            .map(|t| virtual_seed(&spec, t.parse().unwrap()).unwrap())
            .collect();
        x_ring_cross_check(&spec, &seeds).unwrap();
    }
}
