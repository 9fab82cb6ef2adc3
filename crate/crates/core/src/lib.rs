//! Exact computer algebra for the Lie algebra spanned by `L_m`, `J_m`,
//! `P^1_m`, `P^2_m` (m an integer), its central extensions and Verma modules.
//!
//! The crate is `no_std` (it only needs `alloc`) and is organised bottom-up:
//!
//! - [`symbolic`]: rationals, sparse polynomials in the fixed variable set
//!   `{h, mu, rho1, rho2, alpha, beta}`, fraction-free determinants and
//!   rational row reduction.
//! - [`algebra`]: structure constants of the algebra, its central extension,
//!   the four-variable variant with `Theta` generators and the finite
//!   subalgebra with the exotic extension; the anti-automorphism `omega` and a
//!   Jacobi-identity checker.
//! - [`combinatorics`]: partitions, their ordering and two-way splits.
//! - [`verma`]: PBW normal ordering on Verma modules, Gram matrices, the block
//!   factorisation and Kac determinants.
//! - [`cohomology`]: finite-window classification of central extensions.
//! - [`realizations`]: checks of the vector-field and boson realizations.
//!
//! Everything is a pure function of immutable inputs.

#![no_std]

extern crate alloc;

pub mod algebra;
pub mod cohomology;
pub mod combinatorics;
pub mod error;
pub mod realizations;
pub mod symbolic;
pub mod verma;

pub use error::{Error, Result};
pub use symbolic::{MultiPoly, PolyMatrix, Rational, Var};
