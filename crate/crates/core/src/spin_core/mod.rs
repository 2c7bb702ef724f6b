//! Exact finite-dimensional spin algebra.

pub mod coherent;
pub mod matrix;
pub mod number;
pub mod operators;

pub use coherent::{coherent_amplitudes, overlap, BlochPoint, ClassicalMomentum};
pub use matrix::{kron, kron_vec, ComplexMatrix};
pub use number::{binomial, binomial_term, SpinNumber};
pub use operators::{build_sminus, build_splus, build_sx, build_sy, build_sz, sz_phase};
