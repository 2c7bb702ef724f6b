//! Coherent-state projections of the exact state.

use std::f64::consts::PI;

use num_complex::Complex64;

use super::quadrature::QuadratureRule;
use super::state::EvolvedState;
use crate::spin_core::{coherent_amplitudes, kron_vec, BlochPoint, ComplexMatrix, SpinNumber};

/// `⟨θ,φ| A |θ,φ⟩` for a single spin.
pub fn scs_expectation(s: SpinNumber, p: BlochPoint, op: &ComplexMatrix) -> Complex64 {
    op.expectation(&coherent_amplitudes(s, p))
}

/// Joint angle density `d1 d2/(4π)² ⟨p1, p2| ρ |p1, p2⟩` computed from the
/// density matrix.
pub fn povm_joint_numeric(state: &EvolvedState, p1: BlochPoint, p2: BlochPoint) -> f64 {
    let psi = kron_vec(
        &coherent_amplitudes(state.cfg.s1(), p1),
        &coherent_amplitudes(state.cfg.s2(), p2),
    );
    let d = state.cfg.dim() as f64;
    d * state.rho().expectation(&psi).re / (16.0 * PI * PI)
}

/// Coupling part `⟨p1, p2| Δρ |p1, p2⟩` of the same projection.
pub fn povm_coupling_numeric(state: &EvolvedState, p1: BlochPoint, p2: BlochPoint) -> f64 {
    let psi = kron_vec(
        &coherent_amplitudes(state.cfg.s1(), p1),
        &coherent_amplitudes(state.cfg.s2(), p2),
    );
    state.delta_rho.expectation(&psi).re
}

/// `(1/2) ∫ |ξ(θ)|² d cos θ` by Gauss-Legendre, where
/// `|ξ|² = [cos²(τ/2) + cos²θ sin²(τ/2)]^{2S}`.
pub fn f_quadrature(s: SpinNumber, tau: f64, rule: &QuadratureRule) -> f64 {
    let (sh, ch) = (tau / 2.0).sin_cos();
    let n = s.twice() as i32;
    0.5 * rule.integrate_cos_theta(|x| (ch * ch + x * x * sh * sh).powi(n))
}
