use super::spec::{FamilySpec, Params};
use crate::algebra::{Field, Poly, Rational, Var};
use crate::error::{Error, Result};

pub fn factorial<F: Field>(k: usize) -> F {
    (1..=k).fold(F::one(), |acc, j| acc * &F::from_i64(j as i64))
}

/// Rising factorial `(a)_k`.
pub fn poch<F: Field>(a: &F, k: usize) -> F {
    (0..k).fold(F::one(), |acc, j| acc * &(a.clone() + &F::from_i64(j as i64)))
}

/// `(a; q)_k`.
pub fn qpoch<F: Field>(a: &F, q: &F, k: usize) -> F {
    let mut acc = F::one();
    let mut aq = a.clone();
    for _ in 0..k {
        acc = acc * &(F::one() - &aq);
        aq = aq * q;
    }
    acc
}

fn half<F: Field>() -> F {
    F::from_rational(&Rational::frac(1, 2))
}

fn eta<F: Field>() -> Poly<F> {
    Poly::identity(Var::Eta)
}

/// `L_n^{(alpha)}(eta) = sum_k (-1)^k (alpha+k+1)_{n-k} / ((n-k)! k!) eta^k`.
pub fn laguerre<F: Field>(n: usize, alpha: &F) -> Poly<F> {
    let coeffs = (0..=n)
        .map(|k| {
            let c = poch(&(alpha.clone() + &F::from_i64(k as i64 + 1)), n - k)
                / &(factorial::<F>(n - k) * &factorial::<F>(k));
            if k % 2 == 1 {
                -c
            } else {
                c
            }
        })
        .collect();
    Poly::new(coeffs, Var::Eta)
}

/// `P_n^{(alpha,beta)}(eta) = sum_k (n+alpha+beta+1)_k (alpha+k+1)_{n-k} / (k!(n-k)!) ((eta-1)/2)^k`.
pub fn jacobi<F: Field>(n: usize, alpha: &F, beta: &F) -> Poly<F> {
    let base = Poly::new(vec![-half::<F>(), half::<F>()], Var::Eta);
    let top = alpha.clone() + beta + &F::from_i64(n as i64 + 1);
    let mut acc = Poly::zero(Var::Eta);
    let mut power = Poly::one(Var::Eta);
    for k in 0..=n {
        let c = poch(&top, k) * &poch(&(alpha.clone() + &F::from_i64(k as i64 + 1)), n - k)
            / &(factorial::<F>(k) * &factorial::<F>(n - k));
        acc = &acc + &power.scale(&c);
        power = &power * &base;
    }
    acc
}

/// Wilson polynomial `W_n(eta; a)` in its standard normalization
/// `(a1+a2)_n (a1+a3)_n (a1+a4)_n 4F3(...)`, written without divisions.
pub fn wilson<F: Field>(n: usize, a: &[F; 4]) -> Poly<F> {
    let b1 = a.iter().fold(F::zero(), |s, x| s + x);
    let nn = F::from_i64(n as i64);
    let mut acc = Poly::zero(Var::Eta);
    let mut prod = Poly::one(Var::Eta);
    for k in 0..=n {
        let kk = F::from_i64(k as i64);
        let mut c = poch(&-nn.clone(), k) * &poch(&(nn.clone() + &b1 - &F::one()), k)
            / &factorial::<F>(k);
        for j in 1..4 {
            c = c * &poch(&(a[0].clone() + &a[j] + &kk), n - k);
        }
        acc = &acc + &prod.scale(&c);
        let aj = a[0].clone() + &kk;
        prod = &prod * &eta::<F>().add_scalar(&(aj.clone() * &aj));
    }
    acc
}

/// Askey-Wilson polynomial `p_n(eta; a | q)` in its standard normalization
/// `a1^{-n} (a1a2, a1a3, a1a4; q)_n 4phi3(...)`, written without divisions
/// by the lower parameters.
pub fn askey_wilson<F: Field>(n: usize, a: &[F; 4], q: &F) -> Result<Poly<F>> {
    let inv_a1 = a[0].inv().ok_or_else(|| Error::DegenerateParameter("a1 = 0".into()))?;
    let q_inv_n = q.pow(-(n as i32)).ok_or_else(|| Error::DegenerateParameter("q = 0".into()))?;
    let b4 = a.iter().fold(F::one(), |s, x| s * x);
    let qn1 = q.pow(n as i32 - 1).expect("q is nonzero");
    let mut acc = Poly::zero(Var::Eta);
    let mut prod = Poly::one(Var::Eta);
    let mut qk = F::one();
    for k in 0..=n {
        let qq = qpoch(q, q, k);
        let mut c = qpoch(&q_inv_n, q, k) * &qpoch(&(b4.clone() * &qn1), q, k) * &qk
            / &qq;
        for j in 1..4 {
            c = c * &qpoch(&(a[0].clone() * &a[j] * &qk), q, n - k);
        }
        acc = &acc + &prod.scale(&c);
        // 1 - 2 a1 q^k eta + a1^2 q^{2k}
        let aq = a[0].clone() * &qk;
        let factor = Poly::new(
            vec![F::one() + &(aq.clone() * &aq), -(aq * &F::from_i64(2))],
            Var::Eta,
        );
        prod = &prod * &factor;
        qk = qk * q;
    }
    Ok(acc.scale(&inv_a1.pow(n as i32).expect("nonzero")))
}

/// The eigenpolynomial `P_n(eta)` of the undeformed family.
pub fn classical_poly<F: Field>(spec: &FamilySpec<F>, n: usize) -> Result<Poly<F>> {
    let p = match spec.params() {
        Params::L { g } => laguerre(n, &(g.clone() - &half::<F>())),
        Params::J { g, h } => jacobi(n, &(g.clone() - &half::<F>()), &(h.clone() - &half::<F>())),
        Params::W { a } => wilson(n, a),
        Params::AW { a, .. } => askey_wilson(n, a, &spec.q().expect("AW has q"))?,
    };
    if p.degree() != Some(n) {
        return Err(Error::DegenerateParameter(format!(
            "leading coefficient of P_{n} vanishes for {spec}"
        )));
    }
    Ok(p)
}

/// Eigenvalue `E_n`.
pub fn eigen_energy<F: Field>(spec: &FamilySpec<F>, n: usize) -> F {
    let nn = F::from_i64(n as i64);
    match spec.params() {
        Params::L { .. } => nn * &F::from_i64(4),
        Params::J { g, h } => F::from_i64(4) * &nn * &(nn.clone() + g + h),
        Params::W { a } => {
            let b1 = a.iter().fold(F::zero(), |s, x| s + x);
            nn.clone() * &(nn + &b1 - &F::one())
        }
        Params::AW { a, .. } => {
            let q = spec.q().expect("AW has q");
            let b4 = a.iter().fold(F::one(), |s, x| s * x);
            let q_inv_n = q.pow(-(n as i32)).expect("q is nonzero");
            let qn1 = q.pow(n as i32 - 1).expect("q is nonzero");
            (q_inv_n - &F::one()) * &(F::one() - &(b4 * &qn1))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(a: i64, b: i64) -> Rational {
        Rational::frac(a, b)
    }

    #[test]
    fn laguerre_small() {
        let spec = FamilySpec::laguerre(Rational::one());
        assert_eq!(classical_poly(&spec, 0).unwrap(), Poly::one(Var::Eta));
        let p1 = classical_poly(&spec, 1).unwrap();
        assert_eq!(p1, Poly::from_rationals(&[r(3, 2), r(-1, 1)], Var::Eta));
    }

    #[test]
    fn energies() {
        let spec = FamilySpec::laguerre(r(7, 3));
        assert_eq!(eigen_energy(&spec, 0), Rational::zero());
        assert_eq!(eigen_energy(&spec, 1), Rational::int(4));
    }
}
