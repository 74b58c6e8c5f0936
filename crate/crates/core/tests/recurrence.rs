use std::collections::BTreeMap;

use mindex_core::algebra::{Field, Poly, Rational, Var};
use mindex_core::darboux::{calibrate, MultiIndexedSystem};
use mindex_core::families::{classical_poly, printed_x_min, AnchorCase, FamilySpec, IndexSet, OperatorTable};
use mindex_core::recurrence::{
    band_check, invariants, necessary_condition, route2_coeffs, solve_recurrence, RecurrenceTable, Row,
};
use mindex_core::xbuilder::{make_x, XCandidate};
use proptest::prelude::*;

fn r(a: i64, b: i64) -> Rational {
    Rational::frac(a, b)
}

fn calibrated(spec: &FamilySpec<Rational>, d: &str) -> MultiIndexedSystem<Rational> {
    let d: IndexSet = d.parse().unwrap();
    let cal = calibrate(spec, &d).unwrap();
    MultiIndexedSystem::build(spec, &d, &cal.conventions).unwrap()
}

fn eta() -> Poly<Rational> {
    Poly::identity(Var::Eta)
}

fn wilson() -> FamilySpec<Rational> {
    FamilySpec::wilson([r(1, 3), r(2, 5), r(3, 7), r(5, 11)])
}

fn aw() -> FamilySpec<Rational> {
    FamilySpec::askey_wilson([r(1, 2), r(1, 3), r(1, 5), r(1, 7)], r(1, 2)).unwrap()
}

// [DERIVED] Laguerre three-term recurrence for L_n^{(g-1/2)}
#[test]
fn laguerre_three_term() {
    let g = r(7, 3);
    let alpha = g.clone() - r(1, 2);
    let sys = calibrated(&FamilySpec::laguerre(g), "");
    let t = solve_recurrence(&sys, &XCandidate::custom(eta()).unwrap(), 8).unwrap();
    for n in 0..=8usize {
        let nn = Rational::int(n as i64);
        assert_eq!(t.r(n, 1).unwrap(), -(nn.clone() + Rational::one()));
        assert_eq!(t.r(n, 0).unwrap(), Rational::int(2) * &nn + &alpha + &Rational::one());
        if n > 0 {
            assert_eq!(t.r(n, -1).unwrap(), -(nn + &alpha));
        }
    }
}

// [DERIVED] Jacobi three-term recurrence for P_n^{(g-1/2, h-1/2)}
#[test]
fn jacobi_three_term() {
    let (g, h) = (r(7, 3), r(5, 4));
    let (a, b) = (g.clone() - r(1, 2), h.clone() - r(1, 2));
    let sys = calibrated(&FamilySpec::jacobi(g, h), "");
    let t = solve_recurrence(&sys, &XCandidate::custom(eta()).unwrap(), 8).unwrap();
    let two = Rational::int(2);
    for n in 0..=8usize {
        let nn = Rational::int(n as i64);
        let s = two.clone() * &nn + &a + &b;
        let up = two.clone() * &(nn.clone() + Rational::one()) * &(nn.clone() + &a + &b + &Rational::one())
            / &((s.clone() + Rational::one()) * &(s.clone() + &two));
        let mid = (b.clone() * &b - &(a.clone() * &a)) / &(s.clone() * &(s.clone() + &two));
        assert_eq!(t.r(n, 1).unwrap(), up, "n={n}");
        assert_eq!(t.r(n, 0).unwrap(), mid, "n={n}");
        if n > 0 {
            let down = two.clone() * &(nn.clone() + &a) * &(nn + &b) / &(s.clone() * &(s + Rational::one()));
            assert_eq!(t.r(n, -1).unwrap(), down, "n={n}");
        }
    }
}

// [DERIVED] the undeformed shift families close on eta with band 1
#[test]
fn shift_three_term() {
    for spec in [wilson(), aw()] {
        let sys = calibrated(&spec, "");
        let t = solve_recurrence(&sys, &XCandidate::custom(eta()).unwrap(), 6).unwrap();
        assert!(t.all_consistent());
        assert!(band_check(&t).ok());
        for n in 0..=6 {
            assert!(!t.r(n, 1).unwrap().is_zero());
        }
    }
}

fn oqm_b_coeffs(sys: &MultiIndexedSystem<Rational>, s: usize) -> (Poly<Rational>, Rational) {
    match &sys.step(s).table {
        OperatorTable::Oqm(t) => (t.e_b.clone(), t.et_b.clone()),
        _ => panic!("continuous family expected"),
    }
}

// [DERIVED] single step: B(X P_{d,n}) = (E_n - E~) X P_n - c^2 e^B Y P_{d,n}
#[test]
fn proof_identity_m1() {
    for spec in [FamilySpec::laguerre(r(7, 3)), FamilySpec::jacobi(r(7, 3), r(5, 4))] {
        for d in ["1I", "2II"] {
            let sys = calibrated(&spec, d);
            let y = Poly::from_rationals(&[r(2, 3), r(1, 1)], Var::Eta);
            let x = make_x(&sys, &y).unwrap().x;
            let c = sys.conventions().c_f.clone();
            let (e_b, _) = oqm_b_coeffs(&sys, 1);
            for n in 0..=4 {
                let pn = classical_poly(&spec, n).unwrap();
                let pd = sys.chain_p(1, n).unwrap();
                let lhs = sys.apply_b(1, &(&x * &pd)).unwrap().into_result().unwrap();
                let gap = sys.energy(n) - &sys.seed_energy(0);
                let rhs = &(&x * &pn).scale(&gap) - &(&(&e_b * &y) * &pd).scale(&(c.clone() * &c));
                assert_eq!(lhs, rhs, "{spec} {d} n={n}");
            }
        }
    }
}

// [DERIVED] two steps: the intermediate and the composed identities
#[test]
fn proof_identity_m2() {
    for spec in [FamilySpec::laguerre(r(7, 3)), FamilySpec::jacobi(r(7, 3), r(5, 4))] {
        for d in ["1I,2I", "1I,1II"] {
            let sys = calibrated(&spec, d);
            let y = Poly::from_rationals(&[r(-1, 3), r(1, 1)], Var::Eta);
            let x = make_x(&sys, &y).unwrap().x;
            let c = sys.conventions().c_f.clone();
            let c2 = c.clone() * &c;
            let (e1, et1) = oqm_b_coeffs(&sys, 1);
            let (e12, et12) = oqm_b_coeffs(&sys, 2);
            let xi1 = sys.xi_level(1).clone();
            for n in 0..=3 {
                let pn = classical_poly(&spec, n).unwrap();
                let p1 = sys.chain_p(1, n).unwrap();
                let p12 = sys.chain_p(2, n).unwrap();
                let g1 = sys.energy(n) - &sys.seed_energy(0);
                let g2 = sys.energy(n) - &sys.seed_energy(1);

                let mid = sys.apply_b(2, &(&x * &p12)).unwrap().into_result().unwrap();
                let want_mid = &(&x * &p1).scale(&g2) - &(&(&(&e12 * &xi1) * &y) * &p12).scale(&c2);
                assert_eq!(mid, want_mid, "{spec} {d} n={n}");

                let top = sys.apply_b(1, &mid).unwrap().into_result().unwrap();
                let yp = &y * &p12;
                let c3 = c2.clone() * &c;
                let c4 = c2.clone() * &c2;
                let mut want = (&x * &pn).scale(&(g1 * &g2));
                want = &want + &(&e1 * &(&e12 * &yp).derivative()).scale(&c4);
                want = &want + &(&(&(&e1 * &e12) * &y) * &p12.derivative()).scale(&c4);
                let mix = &e12.scale(&et1) + &e1.scale(&et12);
                want = &want - &(&mix * &yp).scale(&c3);
                assert_eq!(top, want, "{spec} {d} n={n}");
            }
        }
    }
}

// [PAPER] printed minimal relations have 3 + 2 ell terms and close exactly
#[test]
fn anchor_term_counts() {
    let cases = [
        (AnchorCase::LEx1, FamilySpec::laguerre(r(7, 3))),
        (AnchorCase::LEx2, FamilySpec::laguerre(r(7, 3))),
        (AnchorCase::LEx3, FamilySpec::laguerre(r(7, 3))),
        (AnchorCase::JEx1, FamilySpec::jacobi(r(7, 3), r(5, 4))),
        (AnchorCase::JEx2, FamilySpec::jacobi(r(7, 3), r(5, 4))),
        (AnchorCase::JEx3, FamilySpec::jacobi(r(7, 3), r(5, 4))),
        (AnchorCase::WEx1, wilson()),
        (AnchorCase::AwEx1, aw()),
    ];
    for (case, spec) in cases {
        let sys = calibrated(&spec, &case.index_set().to_string());
        let x = XCandidate::custom(printed_x_min(case, &spec).unwrap()).unwrap();
        assert!(necessary_condition(&sys, &x.x).unwrap().passed(), "{case}");
        let t = solve_recurrence(&sys, &x, 6).unwrap();
        assert!(t.all_consistent(), "{case}");
        assert!(band_check(&t).ok(), "{case}");
        assert_eq!(2 * t.band + 1, case.terms(), "{case}");
        for n in 0..=6 - t.band {
            assert!(!t.r(n, t.band as i64).unwrap().is_zero(), "{case} n={n}");
        }
    }
}

// [DERIVED] both routes agree up to one constant
#[test]
fn routes_agree() {
    let cases = [
        (FamilySpec::laguerre(r(7, 3)), "1I,2II"),
        (FamilySpec::jacobi(r(7, 3), r(5, 4)), "1I,1II"),
        (wilson(), "2I"),
        (aw(), "1II"),
    ];
    for (spec, d) in cases {
        let sys = calibrated(&spec, d);
        let x = make_x(&sys, &Poly::one(Var::Eta)).unwrap();
        let a = solve_recurrence(&sys, &x, 5).unwrap();
        let b = route2_coeffs(&sys, &x, 5).unwrap();
        assert!(b.all_consistent(), "{spec} {d}");
        assert!(a.constant_ratio(&b).is_some(), "{spec} {d}");
    }
}

// [DERIVED] negative controls: eta alone and a non-derived cubic both fail
#[test]
fn negative_controls() {
    for (spec, d) in [(FamilySpec::laguerre(r(7, 3)), "1I,2I"), (wilson(), "1I")] {
        let sys = calibrated(&spec, d);
        for x in [eta(), Poly::from_rationals(&[r(0, 1), r(1, 1), r(0, 1), r(1, 1)], Var::Eta)] {
            let cand = XCandidate::custom(x).unwrap();
            assert!(!necessary_condition(&sys, &cand.x).unwrap().passed());
            let t = solve_recurrence(&sys, &cand, 5).unwrap();
            assert!(t.rows.iter().any(|row| matches!(row, Row::Inconsistent { .. })), "{spec} {d}");
            let r2 = route2_coeffs(&sys, &cand, 3).unwrap();
            assert!(!r2.all_consistent());
        }
    }
}

// [TRIVIAL] X given factored or expanded yields the same table
#[test]
fn factored_matches_expanded() {
    let spec = FamilySpec::laguerre(r(7, 3));
    let sys = calibrated(&spec, "1I,2I");
    let x = printed_x_min(AnchorCase::LEx2, &spec).unwrap();
    let (q, rem) = x.divrem(&eta()).unwrap();
    assert!(rem.is_zero());
    let a = solve_recurrence(&sys, &XCandidate::custom(x).unwrap(), 4).unwrap();
    let b = solve_recurrence(&sys, &XCandidate::custom(&q * &eta()).unwrap(), 4).unwrap();
    assert_eq!(a, b);
}

fn rescaled(t: &RecurrenceTable<Rational>, c: &[Rational], lambda: &Rational) -> RecurrenceTable<Rational> {
    let rows = t
        .rows
        .iter()
        .enumerate()
        .map(|(n, row)| {
            let m: BTreeMap<i64, Rational> = row
                .coeffs()
                .unwrap()
                .iter()
                .map(|(&k, v)| (k, v.clone() * lambda * &c[n] / &c[(n as i64 + k) as usize]))
                .collect();
            Row::Consistent(m)
        })
        .collect();
    RecurrenceTable { x: t.x.scale(lambda), band: t.band, rows }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    // [DERIVED] any X with X' = Xi_D Y closes with band deg X
    #[test]
    fn derived_x_closes(y in prop::collection::vec((-6i64..=6, 1i64..=4), 1..=3), which in 0usize..4) {
        let (spec, d) = [
            (FamilySpec::laguerre(r(7, 3)), "1I,1II"),
            (FamilySpec::jacobi(r(7, 3), r(5, 4)), "2I"),
            (wilson(), "1I"),
            (aw(), "2II"),
        ][which].clone();
        let y = Poly::new(y.into_iter().map(|(a, b)| r(a, b)).collect(), Var::Eta);
        prop_assume!(!y.is_zero());
        let sys = calibrated(&spec, d);
        let x = make_x(&sys, &y).unwrap();
        let t = solve_recurrence(&sys, &x, 4).unwrap();
        prop_assert!(t.all_consistent());
        prop_assert!(band_check(&t).ok());
    }

    // [DERIVED] rho, sigma and pair products ignore P_{D,n} and X normalization
    #[test]
    fn invariants_ignore_normalization(cs in prop::collection::vec((1i64..=9, 1i64..=9, any::<bool>()), 12), l in 1i64..=7) {
        let spec = FamilySpec::laguerre(r(7, 3));
        let sys = calibrated(&spec, "1I");
        let x = make_x(&sys, &Poly::one(Var::Eta)).unwrap();
        let t = solve_recurrence(&sys, &x, 6).unwrap();
        let c: Vec<Rational> = cs.into_iter().map(|(a, b, s)| if s { r(a, b) } else { r(-a, b) }).collect();
        let u = rescaled(&t, &c, &r(l, 3));
        let (i, j) = (invariants(&t), invariants(&u));
        prop_assert_eq!(i.rho, j.rho);
        prop_assert_eq!(i.pair, j.pair);
        prop_assert_eq!(i.sigma, j.sigma);
    }
}
