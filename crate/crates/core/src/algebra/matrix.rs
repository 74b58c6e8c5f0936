use std::fmt;

use super::field::Field;
use super::poly::{Poly, Var};
use super::rational::Rational;
use crate::error::{Error, Result};

/// Integral domain with exact division, the setting of fraction-free
/// elimination.
pub trait ExactRing: Clone + PartialEq + fmt::Debug {
    fn ring_zero_like(&self) -> Self;
    fn ring_one_like(&self) -> Self;
    fn ring_is_zero(&self) -> bool;
    fn ring_add(&self, o: &Self) -> Self;
    fn ring_sub(&self, o: &Self) -> Self;
    fn ring_mul(&self, o: &Self) -> Self;
    fn ring_div_exact(&self, d: &Self) -> Result<Self>;

    fn ring_neg(&self) -> Self {
        self.ring_zero_like().ring_sub(self)
    }
}

impl ExactRing for Rational {
    fn ring_zero_like(&self) -> Self {
        Rational::zero()
    }
    fn ring_one_like(&self) -> Self {
        Rational::one()
    }
    fn ring_is_zero(&self) -> bool {
        Field::is_zero(self)
    }
    fn ring_add(&self, o: &Self) -> Self {
        self + o
    }
    fn ring_sub(&self, o: &Self) -> Self {
        self - o
    }
    fn ring_mul(&self, o: &Self) -> Self {
        self * o
    }
    fn ring_div_exact(&self, d: &Self) -> Result<Self> {
        if Field::is_zero(d) {
            Err(Error::DivisionByZero)
        } else {
            Ok(self / d)
        }
    }
}

impl<F: Field> ExactRing for Poly<F> {
    fn ring_zero_like(&self) -> Self {
        Poly::zero(self.var())
    }
    fn ring_one_like(&self) -> Self {
        Poly::one(self.var())
    }
    fn ring_is_zero(&self) -> bool {
        self.is_zero()
    }
    fn ring_add(&self, o: &Self) -> Self {
        self + o
    }
    fn ring_sub(&self, o: &Self) -> Self {
        self - o
    }
    fn ring_mul(&self, o: &Self) -> Self {
        self * o
    }
    fn ring_div_exact(&self, d: &Self) -> Result<Self> {
        self.exact_div(d)
    }
}

/// Determinant by one-step fraction-free (Bareiss) elimination with row
/// pivoting. Every division is exact in the ring.
pub fn bareiss_det<R: ExactRing>(mut m: Vec<Vec<R>>) -> Result<R> {
    let n = m.len();
    if n == 0 || m.iter().any(|row| row.len() != n) {
        return Err(Error::Shape(format!("determinant of a non-square {n}-row matrix")));
    }
    let mut negate = false;
    let mut prev = m[0][0].ring_one_like();
    for k in 0..n - 1 {
        if m[k][k].ring_is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].ring_is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    negate = !negate;
                }
                None => return Ok(m[0][0].ring_zero_like()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = m[i][j].ring_mul(&m[k][k]).ring_sub(&m[i][k].ring_mul(&m[k][j]));
                m[i][j] = t.ring_div_exact(&prev)?;
            }
            m[i][k] = m[i][k].ring_zero_like();
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    Ok(if negate { d.ring_neg() } else { d })
}

/// Rectangular matrix of polynomials in one shared variable.
#[derive(Clone, PartialEq)]
pub struct PolyMatrix<F> {
    rows: usize,
    cols: usize,
    var: Var,
    entries: Vec<Poly<F>>,
}

impl<F: Field> PolyMatrix<F> {
    pub fn new(rows: Vec<Vec<Poly<F>>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if r == 0 || c == 0 || rows.iter().any(|row| row.len() != c) {
            return Err(Error::Shape("matrix rows must be nonempty and of equal length".into()));
        }
        let var = rows[0][0].var();
        if let Some(p) = rows.iter().flatten().find(|p| p.var() != var) {
            return Err(Error::VariableMismatch(var.to_string(), p.var().to_string()));
        }
        Ok(PolyMatrix { rows: r, cols: c, var, entries: rows.into_iter().flatten().collect() })
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn get(&self, i: usize, j: usize) -> &Poly<F> {
        &self.entries[i * self.cols + j]
    }

    pub fn det_fraction_free(&self) -> Result<Poly<F>> {
        if self.rows != self.cols {
            return Err(Error::Usage(format!(
                "determinant of a non-square {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let m = self.entries.chunks(self.cols).map(<[_]>::to_vec).collect();
        bareiss_det(m)
    }
}

/// Outcome of an exact linear solve.
#[derive(Clone, Debug, PartialEq)]
pub enum SolveOutcome<F> {
    Unique(Vec<F>),
    /// Consistent with free unknowns; the solution sets them to zero.
    Underdetermined { solution: Vec<F>, free: Vec<usize> },
    /// Some original row cannot be satisfied.
    Inconsistent { witness_row: usize },
}

impl<F: Field> SolveOutcome<F> {
    pub fn solution(&self) -> Option<&[F]> {
        match self {
            SolveOutcome::Unique(x) | SolveOutcome::Underdetermined { solution: x, .. } => Some(x),
            SolveOutcome::Inconsistent { .. } => None,
        }
    }
}

/// Solves `a·x = b` exactly by row echelon reduction over the field.
pub fn solve_exact<F: Field>(a: &[Vec<F>], b: &[F], unknowns: usize) -> Result<SolveOutcome<F>> {
    if a.len() != b.len() || a.iter().any(|row| row.len() != unknowns) {
        return Err(Error::Shape(format!(
            "system with {} rows, {} right-hand sides, {unknowns} unknowns",
            a.len(),
            b.len()
        )));
    }
    let m = a.len();
    let mut aug: Vec<Vec<F>> =
        a.iter().zip(b).map(|(row, bi)| row.iter().cloned().chain([bi.clone()]).collect()).collect();
    let mut origin: Vec<usize> = (0..m).collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..unknowns {
        let Some(i) = (r..m).find(|&i| !aug[i][c].is_zero()) else { continue };
        aug.swap(r, i);
        origin.swap(r, i);
        let inv = aug[r][c].inv().expect("nonzero pivot");
        let live: Vec<usize> = (c + 1..=unknowns).filter(|&j| !aug[r][j].is_zero()).collect();
        for i in r + 1..m {
            if aug[i][c].is_zero() {
                continue;
            }
            let f = aug[i][c].clone() * &inv;
            for &j in &live {
                aug[i][j] = aug[i][j].clone() - &(f.clone() * &aug[r][j]);
            }
            aug[i][c] = F::zero();
        }
        pivots.push(c);
        r += 1;
    }
    if let Some(i) = (r..m).find(|&i| !aug[i][unknowns].is_zero()) {
        return Ok(SolveOutcome::Inconsistent { witness_row: origin[i] });
    }
    let mut x = vec![F::zero(); unknowns];
    for (k, &c) in pivots.iter().enumerate().rev() {
        let mut acc = aug[k][unknowns].clone();
        for j in c + 1..unknowns {
            acc = acc - aug[k][j].clone() * &x[j];
        }
        x[c] = acc / &aug[k][c];
    }
    for (row, bi) in a.iter().zip(b) {
        let lhs = row.iter().zip(&x).fold(F::zero(), |s, (aij, xj)| s + aij.clone() * xj);
        if lhs != *bi {
            return Err(Error::Internal("nonzero residual after exact solve".into()));
        }
    }
    if pivots.len() == unknowns {
        Ok(SolveOutcome::Unique(x))
    } else {
        let free = (0..unknowns).filter(|c| !pivots.contains(c)).collect();
        Ok(SolveOutcome::Underdetermined { solution: x, free })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> Rational {
        Rational::int(n)
    }

    fn c(n: i64) -> Poly<Rational> {
        Poly::constant(r(n), Var::Eta)
    }

    #[test]
    fn identity_det() {
        let m = PolyMatrix::new(
            (0..3).map(|i| (0..3).map(|j| c((i == j) as i64)).collect()).collect(),
        )
        .unwrap();
        assert_eq!(m.det_fraction_free().unwrap(), c(1));
    }

    #[test]
    fn small_dets() {
        let m = PolyMatrix::new(vec![vec![c(2), c(1)], vec![c(1), c(1)]]).unwrap();
        assert_eq!(m.det_fraction_free().unwrap(), c(1));
        let p = Poly::new(vec![r(1), r(2)], Var::Eta);
        let m = PolyMatrix::new(vec![vec![p.clone()]]).unwrap();
        assert_eq!(m.det_fraction_free().unwrap(), p);
    }

    #[test]
    fn pivoting_needed() {
        let m = PolyMatrix::new(vec![vec![c(0), c(1)], vec![c(1), c(0)]]).unwrap();
        assert_eq!(m.det_fraction_free().unwrap(), c(-1));
    }

    #[test]
    fn non_square_is_usage_error() {
        let m = PolyMatrix::new(vec![vec![c(1), c(2)]]).unwrap();
        assert!(matches!(m.det_fraction_free(), Err(Error::Usage(_))));
    }

    #[test]
    fn solve_examples() {
        let out = solve_exact(&[vec![r(1)], vec![r(2)]], &[r(3), r(6)], 1).unwrap();
        assert_eq!(out, SolveOutcome::Unique(vec![r(3)]));
        let out = solve_exact(&[vec![r(1)], vec![r(1)]], &[r(3), r(4)], 1).unwrap();
        assert_eq!(out, SolveOutcome::Inconsistent { witness_row: 1 });
        let out = solve_exact::<Rational>(&[], &[], 1).unwrap();
        assert_eq!(out, SolveOutcome::Underdetermined { solution: vec![r(0)], free: vec![0] });
    }
}
