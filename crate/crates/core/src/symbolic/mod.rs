//! Exact arithmetic substrate.

mod linalg;
mod matrix;
mod poly;
mod rational;

pub use linalg::{nullspace, rank, rref, Rref};
pub use matrix::{det_bareiss, det_exact, det_rational, ExactRing, Matrix, PolyMatrix, QMatrix};
pub use poly::{Monomial, MultiPoly, Var, NUM_VARS};
pub use rational::{parse_rational, Rational};
