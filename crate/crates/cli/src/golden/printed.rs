//! Printed closed forms of `r_{n,k}` for `X = X_min`, transcribed term by
//! term. Entries with `k < -n` follow the zero convention.

use mindex_core::algebra::{Field, Rational};
use mindex_core::families::{AnchorCase, FamilySpec, Params};
use mindex_core::{Error, Result};

use super::expr::S;

#[derive(Clone, Debug, PartialEq)]
pub enum Entry<F: Field> {
    Value(F),
    /// A printed denominator vanishes at this point.
    Pole,
    /// Not printed (the shift-family `r_{n,0}`, hosted externally).
    Unavailable,
}

impl<F: Field> Entry<F> {
    pub fn value(&self) -> Option<&F> {
        match self {
            Entry::Value(v) => Some(v),
            _ => None,
        }
    }
}

fn fr<F: Field>(p: i64, q: i64) -> S<F> {
    S(F::from_rational(&Rational::frac(p, q)))
}

fn wrap<F: Field>(v: Option<S<F>>) -> Entry<F> {
    match v {
        Some(s) => Entry::Value(s.0),
        None => Entry::Pole,
    }
}

/// Printed `r_{n,k}` for one of the eight tabulated cases.
pub fn printed_r<F: Field>(case: AnchorCase, spec: &FamilySpec<F>, n: usize, k: i64) -> Result<Entry<F>> {
    if spec.family() != case.family() {
        return Err(Error::Usage(format!("{case} needs family {}, got {spec}", case.family())));
    }
    let band = case.index_set().ell() as i64 + 1;
    if k < -(n as i64) || k.abs() > band {
        return Ok(Entry::Value(F::zero()));
    }
    let nn = S::<F>::int(n as i64);
    Ok(match (case, spec.params()) {
        (AnchorCase::LEx1, Params::L { g }) => wrap(l_ex1(&nn, &S(g.clone()), k)),
        (AnchorCase::LEx2, Params::L { g }) => wrap(l_ex2(&nn, &S(g.clone()), k)),
        (AnchorCase::LEx3, Params::L { g }) => wrap(l_ex3(&nn, &S(g.clone()), k)),
        (AnchorCase::JEx1, Params::J { g, h }) => wrap(j_ex1(&nn, &S(g.clone()), &S(h.clone()), k)),
        (AnchorCase::JEx2, Params::J { g, h }) => wrap(j_ex2(&nn, &S(g.clone()), &S(h.clone()), k)),
        (AnchorCase::JEx3, Params::J { g, h }) => wrap(j_ex3(&nn, &S(g.clone()), &S(h.clone()), k)),
        (AnchorCase::WEx1, Params::W { a }) if k != 0 => wrap(w_ex1(&nn, a, k)),
        (AnchorCase::AwEx1, Params::AW { a, t }) if k != 0 => wrap(aw_ex1(n, a, t, k)),
        (AnchorCase::WEx1 | AnchorCase::AwEx1, _) => Entry::Unavailable,
        _ => unreachable!("family checked above"),
    })
}

fn l_ex1<F: Field>(n: &S<F>, g: &S<F>, k: i64) -> Option<S<F>> {
    let m = 2 * g + 2 * n;
    Some(match k {
        2 => (n + 1) * (n + 2) / 2,
        -2 => (&m - 3) * (&m + 3) / 8,
        1 => -((n + 1) * (&m + 3)),
        -1 => -((&m - 1) * (&m + 3)) / 2,
        0 => (24 * n.p(2) + 4 * (10 * g + 11) * n + (2 * g + 1) * (6 * g + 13)) / 8,
        _ => unreachable!(),
    })
}

fn l_ex2<F: Field>(n: &S<F>, g: &S<F>, k: i64) -> Option<S<F>> {
    let m = 2 * g + 2 * n;
    let gn = g + n;
    Some(match k {
        3 => -(n + 1).poch(3) / 6,
        -3 => -((&m - 5) * (&gn + fr(3, 2)).poch(2)) / 12,
        2 => (n + 1).poch(2) * (&m + 5) / 2,
        -2 => (&m - 3) * (&gn + fr(3, 2)).poch(2) / 2,
        1 => -((n + 1) * (&m + 3) * (4 * g + 5 * n + 12)) / 4,
        -1 => -((&m - 1) * (&m + 5) * (4 * g + 5 * n + 7)) / 8,
        0 => {
            (160 * n.p(3)
                + 96 * (4 * g + 7) * n.p(2)
                + 8 * (36 * g.p(2) + 132 * g + 97) * n
                + (2 * g + 1) * (2 * g + 5) * (14 * g + 45))
                / 48
        }
        _ => unreachable!(),
    })
}

fn l_ex3<F: Field>(n: &S<F>, g: &S<F>, k: i64) -> Option<S<F>> {
    let m = 2 * g + 2 * n;
    let gn = g + n;
    match k {
        4 => ((n + 1).poch(4) * (&m - 3)).over(4 * (&m + 5)),
        -4 => Some((&m - 7) * (&gn - fr(3, 2)).poch(2) * (&m + 3) / 16),
        3 => Some(-((n + 1).poch(3) * (&m - 3))),
        -3 => Some(-((&gn - fr(5, 2)).poch(3) * (&m + 3))),
        2 => {
            let poly = 28 * n.p(2) + 2 * (26 * g + 29) * n + 3 * (2 * g + 1) * (4 * g + 7);
            Some(((n + 1).poch(2) * (&m - 3)).over(4 * (&m + 1))? * poly)
        }
        -2 => {
            let poly = 28 * n.p(2) + 2 * (26 * g - 27) * n + 24 * g.p(2) - 50 * g + 17;
            Some((&m - 3) * (&m + 3) * poly / 16)
        }
        1 => Some(-((n + 1) * (&m - 3) * (&m + 3) * (4 * g + 7 * n + 5)) / 2),
        -1 => Some(-((&gn - fr(3, 2)).poch(2) * (&m + 3) * (4 * g + 7 * n - 2))),
        0 => Some(
            (1120 * n.p(4)
                + 160 * (22 * g + 3) * n.p(3)
                + 8 * (492 * g.p(2) + 168 * g - 299) * n.p(2)
                + 8 * (224 * g.p(3) + 156 * g.p(2) - 328 * g - 135) * n
                + (2 * g - 3) * (2 * g + 1) * (6 * g + 5) * (10 * g + 19))
                / 64,
        ),
        _ => unreachable!(),
    }
}

fn j_ex1<F: Field>(n: &S<F>, g: &S<F>, h: &S<F>, k: i64) -> Option<S<F>> {
    let (a, b) = (g + h, g - h);
    let (mg, mh) = (2 * g + 2 * n, 2 * h + 2 * n);
    let a2n = &a + 2 * n;
    let hn = h + n;
    match k {
        2 => ((n + 1).poch(2) * (&b + 2) * (&a + n).poch(2) * (&mh - 3)).over(a2n.poch(4) * (&mh + 1)),
        -2 => ((&b + 2) * (&mg - 3) * (&mg + 3) * (&hn - fr(3, 2)).poch(2)).over(4 * (&a2n - 3).poch(4)),
        1 => ((n + 1) * (&a - 1) * (&a + n) * (&mg + 3) * (&mh - 3))
            .over((&a2n - 1).poch(3) * (&a2n + 3)),
        -1 => ((&a - 1) * (&mg - 1) * (&mg + 3) * (&hn - fr(3, 2)).poch(2))
            .over((&a2n - 3) * (&a2n - 1).poch(3)),
        0 => {
            let t = 2 * n * (&a + n);
            let body = -(&b * (&b + 4) * (&t - (&a - 2) * (&a - 1)))
                + (&a2n - 1) * (&a2n + 1) * (&t - (&a - 2) * (2 * &a - 1));
            Some((&b + 2).over(4 * (&a2n - 2).poch(2) * (&a2n + 1).poch(2))? * body)
        }
        _ => unreachable!(),
    }
}

fn j_ex2<F: Field>(n: &S<F>, g: &S<F>, h: &S<F>, k: i64) -> Option<S<F>> {
    let (a, b) = (g + h, g - h);
    let (mg, mh) = (2 * g + 2 * n, 2 * h + 2 * n);
    let a2n = &a + 2 * n;
    let (gn, hn) = (g + n, h + n);
    match k {
        3 => ((n + 1).poch(3) * (&b + 2).poch(3) * (&a + n).poch(3) * (&hn - fr(5, 2)).poch(2))
            .over(6 * a2n.poch(6) * (&hn + fr(1, 2)).poch(2)),
        -3 => ((&b + 2).poch(3) * (&mg - 5) * (&gn + fr(3, 2)).poch(2) * (&hn - fr(5, 2)).poch(3))
            .over(12 * (&a2n - 5).poch(6)),
        2 => ((n + 1).poch(2) * (&b + 3).poch(2) * (&a - 1) * (&a + n).poch(2) * (&mg + 5) * (&hn - fr(5, 2)).poch(2))
            .over((&a2n - 1).poch(5) * (&a2n + 5) * (&mh + 1)),
        -2 => ((&b + 3).poch(2) * (&a - 1) * (&mg - 3) * (&gn + fr(3, 2)).poch(2) * (&hn - fr(5, 2)).poch(3))
            .over(2 * (&a2n - 5) * (&a2n - 3).poch(5)),
        1 => {
            let pre = ((&b + 4) * (&a + n) * (&mg + 3) * (&mh - 5))
                .over(8 * (&a2n - 2).poch(4) * (&a2n + 3).poch(2))?;
            let nn = n * (n + &a + 1);
            let body = &b * (&b + 9) * (n + 1) * (&nn - (&a - 2).poch(2))
                + (n + 1) * (2 * (9 - 4 * &a + 2 * a.p(2)) * &nn + (&a - 3).poch(3) * (&a + 6));
            Some(pre * body)
        }
        -1 => {
            let pre = ((&b + 4) * (&mg - 1) * (&mg + 5) * (&hn - fr(3, 2)).poch(2))
                .over(8 * (&a2n - 4).poch(2) * (&a2n - 1).poch(4))?;
            let am1 = &a - 1;
            let body = &b * (&b + 9) * (n * (n + &a - 1) - am1.p(2) - 1)
                + 2 * n * (2 * a.p(2) - 4 * &a + 9) * (n + &a - 1)
                + am1.p(4)
                - 23 * am1.p(2)
                - 14;
            Some(pre * body)
        }
        0 => {
            let pre = ((&b + 4) * (&a - 1)).over(48 * (&a2n - 3).poch(3) * (&a2n + 1).poch(3))?;
            let a23 = (&a - 2) * (&a - 3);
            let n3 = n.p(3) * (n + 2 * &a);
            let t1 = b.p(4) * (&b + 17) * (6 * n * (n + &a) - &a23);
            let t2 = b.p(3)
                * (48 * &n3 + 48 * (a.p(2) + &a - 14) * n.p(2) + 48 * &a * (&a - 14) * n
                    - &a23 * (3 * a.p(2) + 3 * &a - 104));
            let t3 = 2
                * b.p(2)
                * (264 * &n3 + 6 * (45 * a.p(2) + 42 * &a - 181) * n.p(2) + 6 * &a * (a.p(2) + 42 * &a - 181) * n
                    - &a23 * (15 * a.p(2) + 12 * &a - 137));
            let t4 = 3
                * &b
                * (32 * n.p(5) * (n + 3 * &a) + 16 * (6 * a.p(2) + 3 * &a - 43) * n.p(4)
                    + 32 * &a * (a.p(2) + 3 * &a - 43) * n.p(3)
                    - 2 * (3 * a.p(4) - 36 * a.p(3) + 358 * a.p(2) + 316 * &a - 625) * n.p(2)
                    - 2 * &a * (3 * a.p(4) - 12 * a.p(3) + 14 * a.p(2) + 316 * &a - 625) * n
                    - &a23 * (a.p(4) + 2 * a.p(3) - 32 * a.p(2) - 14 * &a + 99));
            let t5 = 3
                * (&a2n - 1)
                * (&a2n + 1)
                * (24 * &n3 + 2 * (7 * a.p(2) + 22 * &a - 111) * n.p(2) - 2 * &a * (5 * a.p(2) - 22 * &a + 111) * n
                    - &a23 * (4 * a.p(2) + 9 * &a - 33));
            Some(pre * (t1 - t2 - t3 + t4 + t5))
        }
        _ => unreachable!(),
    }
}

fn j_ex3<F: Field>(n: &S<F>, g: &S<F>, h: &S<F>, k: i64) -> Option<S<F>> {
    let (a, b) = (g + h, g - h);
    let (mg, mh) = (2 * g + 2 * n, 2 * h + 2 * n);
    let a2n = &a + 2 * n;
    let (gn, hn) = (g + n, h + n);
    let bbb = (&b - 2) * &b * (&b + 2);
    match k {
        4 => (-((n + 1).poch(4) * &bbb * (&a + n).poch(4) * (&mg - 3) * (&mh - 3)))
            .over(4 * a2n.poch(8) * (&mg + 5) * (&mh + 5)),
        -4 => Some(
            (-bbb).over(64 * (&a2n - 7).poch(8))?
                * (&mg - 7)
                * (&gn - fr(3, 2)).poch(2)
                * (&mg + 3)
                * (&mh - 7)
                * (&hn - fr(3, 2)).poch(2)
                * (&mh + 3),
        ),
        3 => (-((n + 1).poch(3) * b.p(2) * (&a - 1) * (&a + n).poch(3) * (&mg - 3) * (&mh - 3)))
            .over(2 * (&a2n - 1).poch(7) * (&a2n + 7)),
        -3 => (-(b.p(2) * (&a - 1) * (&gn - fr(5, 2)).poch(3) * (&mg + 3) * (&hn - fr(5, 2)).poch(3) * (&mh + 3)))
            .over(2 * (&a2n - 7) * (&a2n - 5).poch(7)),
        2 => {
            let pre = ((n + 1).poch(2) * &b * (&a + n).poch(2) * (&mg - 3) * (&mh - 3))
                .over(8 * (&a2n - 2).poch(6) * (&a2n + 5).poch(2) * (&mg + 1) * (&mh + 1))?;
            let a12 = (&a - 1) * (&a - 2);
            let body = b.p(4) * (2 * n * (n + &a + 2) - 3 * &a12)
                - b.p(2)
                    * (8 * n.p(3) * (n + 2 * &a + 4)
                        - 2 * (7 * a.p(2) - 50 * &a - 15) * n.p(2)
                        - 2 * (&a + 2) * (11 * a.p(2) - 34 * &a + 1) * n
                        - 3 * &a12 * (2 * a.p(2) + 9 * &a + 11))
                - (&a2n - 1)
                    * (&a2n + 5)
                    * (4 * (3 * a.p(2) - 6 * &a + 1) * n * (n + &a + 2) + 3 * (&a - 2) * (&a + 1).p(2) * (&a + 2));
            Some(pre * body)
        }
        -2 => {
            let pre = (&b * (&mg - 3) * (&mg + 3) * (&mh - 3) * (&mh + 3))
                .over(128 * (&a2n - 6).poch(2) * (&a2n - 3).poch(6))?;
            let body = b.p(4) * (2 * n * (n + &a - 2) - 3 * a.p(2) + 5 * &a - 6)
                - b.p(2)
                    * (8 * n.p(4) + 16 * (&a - 2) * n.p(3)
                        - 2 * (7 * a.p(2) - 2 * &a - 15) * n.p(2)
                        - 2 * (&a - 2) * (11 * a.p(2) - 18 * &a + 1) * n
                        - 6 * a.p(4)
                        + 35 * a.p(3)
                        - 68 * a.p(2)
                        + 49 * &a
                        - 66)
                - (2 * n + &a + 1)
                    * (2 * n + &a - 5)
                    * (4 * (3 * a.p(2) - 6 * &a + 1) * n * (n + &a - 2)
                        + (&a - 3) * (3 * a.p(3) - 9 * a.p(2) + 12 * &a + 4));
            Some(pre * body)
        }
        1 => {
            let pre = (-((n + 1) * (&a - 1) * (&a + n) * (&mg - 3) * (&mg + 3) * (&mh - 3) * (&mh + 3)))
                .over(8 * (&a2n - 3).poch(5) * (&a2n + 3).poch(3))?;
            let body = b.p(2) * (3 * n * (n + &a + 1) - (&a - 2) * (&a - 3))
                + (&a + 1) * (&a - 3) * (&a2n - 2) * (&a2n + 4);
            Some(pre * body)
        }
        -1 => {
            let pre = (-((&a - 1) * (&gn - fr(3, 2)).poch(2) * (&mg + 3) * (&hn - fr(3, 2)).poch(2) * (&mh + 3)))
                .over(2 * (&a2n - 5).poch(3) * (&a2n - 1).poch(5))?;
            let body = b.p(2) * (3 * n * (n + &a - 1) - a.p(2) + 2 * &a - 6)
                + (&a - 3) * (&a + 1) * (&a2n - 4) * (&a2n + 2);
            Some(pre * body)
        }
        0 => {
            let pre = (-&b).over(64 * (&a2n - 4).poch(4) * (&a2n + 1).poch(4))?;
            let a44 = (&a - 4).poch(4);
            let t6 = b.p(6)
                * (6 * n.p(3) * (n + 2 * &a) - 6 * (a.p(2) - 5 * &a + 5) * n.p(2) - 6 * &a * (2 * a.p(2) - 5 * &a + 5) * n
                    + &a44);
            let t4 = 2
                * b.p(4)
                * (24 * n.p(5) * (n + 3 * &a) + 6 * (a.p(2) + 28 * &a - 9) * n.p(4)
                    - 12 * &a * (9 * a.p(2) - 28 * &a + 9) * n.p(3)
                    - 2 * (38 * a.p(4) - 71 * a.p(3) - 17 * a.p(2) + 5 * &a + 117) * n.p(2)
                    - 2 * &a * (5 * a.p(4) + 13 * a.p(3) - 44 * a.p(2) + 5 * &a + 117) * n
                    + &a44 * (2 * a.p(2) + 3 * &a + 11));
            let t2 = b.p(2)
                * (96 * n.p(7) * (n + 4 * &a) + 48 * (a.p(2) + 26 * &a - 15) * n.p(6)
                    - 48 * &a * (25 * a.p(2) - 78 * &a + 45) * n.p(5)
                    - 6 * (279 * a.p(4) - 616 * a.p(3) + 98 * a.p(2) + 376 * &a - 417) * n.p(4)
                    - 12 * &a * (75 * a.p(4) - 96 * a.p(3) - 202 * a.p(2) + 376 * &a - 417) * n.p(3)
                    - 2 * (87 * a.p(6) + 153 * a.p(5) - 1139 * a.p(4) + 1262 * a.p(3) - 931 * a.p(2) - 1031 * &a + 2775)
                        * n.p(2)
                    + 2 * &a
                        * (6 * a.p(6) - 129 * a.p(5) + 353 * a.p(4) - 134 * a.p(3) - 320 * a.p(2) + 1031 * &a - 2775)
                        * n
                    + &a44 * (6 * a.p(4) + 18 * a.p(3) + 37 * a.p(2) + 114 * &a + 153));
            let t0 = 2
                * (&a2n - 3)
                * (&a2n + 3)
                * (48 * (2 * a.p(2) - 4 * &a + 1) * n.p(5) * (n + 3 * &a)
                    + 4 * (76 * a.p(4) - 124 * a.p(3) - 73 * a.p(2) + 124 * &a - 39) * n.p(4)
                    + 8 * &a * (16 * a.p(4) - 4 * a.p(3) - 103 * a.p(2) + 124 * &a - 39) * n.p(3)
                    + 2 * (3 * a.p(6) + 78 * a.p(5) - 274 * a.p(4) + 142 * a.p(3) + 385 * a.p(2) - 544 * &a - 114)
                        * n.p(2)
                    - 2 * &a
                        * (5 * a.p(6) - 38 * a.p(5) + 56 * a.p(4) + 106 * a.p(3) - 463 * a.p(2) + 544 * &a + 114)
                        * n
                    - (&a - 4) * (&a - 2).poch(2) * (&a + 1).poch(2) * (2 * a.p(3) - 3 * a.p(2) - 2 * &a + 21));
            Some(pre * (t6 - t4 + t2 + t0))
        }
        _ => unreachable!(),
    }
}

fn w_ex1<F: Field>(n: &S<F>, a: &[F; 4], k: i64) -> Option<S<F>> {
    let a: Vec<S<F>> = a.iter().cloned().map(S).collect();
    let b1 = &a[0] + &a[1] + &a[2] + &a[3];
    let (s1, s2) = (&a[0] + &a[1], &a[0] * &a[1]);
    let (t1, t2) = (&a[2] + &a[3], &a[2] * &a[3]);
    let c = &s1 - &t1 - 2;
    let b2n = &b1 + 2 * n;
    let cross = |shift: i64, len: usize| {
        let mut acc = S::int(1);
        for i in 0..2 {
            for j in 2..4 {
                acc = acc * (&a[i] + &a[j] + n + shift).poch(len);
            }
        }
        acc
    };
    match k {
        2 => (&c * (&b1 + n - 1).poch(2) * (&s1 + n - 2)).over(2 * (&b2n - 1).poch(4) * (&s1 + n)),
        -2 => Some(
            (n * (n - 1) * &c).over(2 * (&b2n - 4).poch(4))?
                * (&s1 + n - 2).poch(2)
                * (&t1 + n - 2)
                * (&t1 + n + 1)
                * cross(-2, 2),
        ),
        1 => {
            let pre = (-2 * (&b1 + n - 1) * (&s1 + n - 2) * (&t1 + n + 1)).over((&b2n - 2).poch(3) * (&b2n + 2))?;
            Some(pre * (&c * n * (n + &b1) - (&b1 - 2) * (&t1 - &s2 + &t2 + 1)))
        }
        -1 => {
            let pre = (2 * n * (&s1 + n - 2).poch(2) * (&t1 + n - 1) * (&t1 + n + 1))
                .over((&b2n - 4) * (&b2n - 2).poch(3))?;
            let body = (2 - &s1 + &t1) * n * (n + &b1 - 2) + (&s1 - 2) * &b1 - (&s2 - &t2) * (&b1 - 2);
            Some(pre * cross(-1, 1) * body)
        }
        _ => unreachable!(),
    }
}

fn aw_ex1<F: Field>(n: usize, a: &[F; 4], t: &F, k: i64) -> Option<S<F>> {
    let a: Vec<S<F>> = a.iter().cloned().map(S).collect();
    let t = S(t.clone());
    let q = &t * &t;
    let qp = |e: i64| S(q.0.pow(e as i32).expect("q is nonzero"));
    let ni = n as i64;
    let b4 = &a[0] * &a[1] * &a[2] * &a[3];
    let (s1, s2) = (&a[0] + &a[1], &a[0] * &a[1]);
    let (t1, t2) = (&a[2] + &a[3], &a[2] * &a[3]);
    let one = S::<F>::int(1);
    let c = &one - (&t2 * qp(2)).over(s2.clone())?;
    let inner = &q * &s1 * (&one - &t2) + &t1 * (&s2 - qp(2));
    let mixed = (1 + qp(2)) * qp(ni) * (&s1 * &t2 * (&s2 - qp(2)) + &t1 * &s2 * &q * (&one - &t2));
    let cross = |shift: i64, len: usize| {
        let mut acc = S::int(1);
        for i in 0..2 {
            for j in 2..4 {
                acc = acc * (&a[i] * &a[j] * qp(ni + shift)).qpoch(&q, len);
            }
        }
        acc
    };
    match k {
        2 => (t.p(3) * &c * (&b4 * qp(ni - 1)).qpoch(&q, 2) * (&one - &s2 * qp(ni - 2)))
            .over(2 * (1 + &q) * (&b4 * qp(2 * ni - 1)).qpoch(&q, 4) * (&one - &s2 * qp(ni))),
        -2 => Some(
            (qp(ni - 1).qpoch(&q, 2) * &c).over(2 * (1 + &q) * &t * (&b4 * qp(2 * ni - 4)).qpoch(&q, 4))?
                * (&s2 * qp(ni - 2)).qpoch(&q, 2)
                * (&one - &t2 * qp(ni - 2))
                * (&one - &t2 * qp(ni + 1))
                * cross(-2, 2),
        ),
        1 => {
            let pre = (-((&one - &b4 * qp(ni - 1)) * (&one - &s2 * qp(ni - 2)) * (&one - &t2 * qp(ni + 1))))
                .over(2 * &t * &s2 * (&b4 * qp(2 * ni - 2)).qpoch(&q, 3) * (&one - &b4 * qp(2 * ni + 2)))?;
            Some(pre * (&q * (&b4 * qp(2 * ni) + 1) * &inner - &mixed))
        }
        -1 => {
            let pre = (-((&one - qp(ni)) * (&s2 * qp(ni - 2)).qpoch(&q, 2) * (&one - &t2 * qp(ni - 1)) * (&one - &t2 * qp(ni + 1))))
                .over(2 * t.p(5) * &s2 * (&one - &b4 * qp(2 * ni - 4)) * (&b4 * qp(2 * ni - 2)).qpoch(&q, 3))?;
            Some(pre * cross(-1, 1) * ((&b4 * qp(2 * ni) + qp(2)) * &inner - &mixed))
        }
        _ => unreachable!(),
    }
}
