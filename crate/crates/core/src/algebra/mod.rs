//! Exact scalars, dense polynomials, rational functions and fraction-free
//! linear algebra.

mod field;
mod gaussian;
mod matrix;
mod poly;
mod ratfunc;
mod rational;

pub use field::Field;
pub use gaussian::{Gaussian, GaussianRational};
pub use matrix::{bareiss_det, solve_exact, ExactRing, PolyMatrix, SolveOutcome};
pub use poly::{Poly, Var};
pub use ratfunc::{Perturbed, RationalFunction};
pub use rational::Rational;
