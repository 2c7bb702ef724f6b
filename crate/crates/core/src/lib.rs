//! Correlations between two coupled large spins evolving under an
//! `S1z S2z` coupling, in the high-temperature limit.
//!
//! The crate is split in three layers:
//!
//! * [`spin_core`] holds exact finite-dimensional spin algebra: ladder
//!   operators, spin coherent states and Kronecker products.
//! * [`measures`] evaluates the closed-form correlation measures (quantum and
//!   classical mutual information, POVM and projective classical parts, the
//!   quantum remainders) in units of `B = beta^2 / (6 ln 2)`.
//! * [`oracle`] recomputes the same quantities from scratch: dense density
//!   matrices, a Jacobi eigensolver for von Neumann entropies and
//!   Gauss-Legendre quadrature on the Bloch sphere for Shannon entropies.
//!
//! [`verify`] ties the two together into a runnable invariant suite.

pub mod error;
pub mod measures;
pub mod oracle;
pub mod spin_core;
pub mod verify;

pub use error::{Error, Result};
pub use measures::{DimensionlessTime, Measure, MeasureSeries, PairConfig, UnitMode};
pub use spin_core::{BlochPoint, ComplexMatrix, SpinNumber};
