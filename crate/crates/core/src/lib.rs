//! Exact computations in the level-one irreducible modules V(Λ₀), V(Λ₁) of
//! the quantum affine algebra U_q(ŝl₂), realized on symmetric functions in the
//! Schur basis tensored with the group algebra of the root lattice.
//!
//! The crate is organized bottom-up:
//!
//! - [`qring`]: Laurent polynomials in `v = q^{1/2}` with big-integer (or
//!   rational) coefficients, quantum integers and Gaussian binomials.
//! - [`shapes`]: partitions, integer tuples, strips and straightening.
//! - [`schur`]: symmetric functions in the Schur and power-sum bases,
//!   Littlewood–Richardson products and conversions.
//! - [`oracle`]: a brute-force Heisenberg-algebra evaluator of vertex-operator
//!   components in the power-sum basis, used to cross-check everything else.
//! - [`fock`]: closed-form actions of the Drinfeld currents, their divided
//!   powers and the Chevalley generators on the Schur basis.
//! - [`verify`]: relation suites and differential checks producing
//!   machine-readable reports.

pub mod fock;
pub mod lincomb;
pub mod mpoly;
pub mod oracle;
pub mod qring;
pub mod schur;
pub mod shapes;
pub mod verify;

mod error;

pub use error::{Error, Result};
pub use fock::{FockVector, Generator, Token, Word};
pub use qring::{HalfLaurent, Laurent, RatHalfLaurent};
pub use schur::{PowerPoly, SchurPoly};
pub use shapes::{Partition, StraightenResult, Tuple};
