//! Closed-form correlation measures in units of `B = β²/(6 ln 2)`.

use std::f64::consts::PI;

use num_complex::Complex64;

use super::kernels::{f, g, g_classical, xi, XiSign};
use super::pair::PairConfig;
use crate::error::Result;
use crate::spin_core::{BlochPoint, ClassicalMomentum};

/// Total (quantum) mutual information `I`.
pub fn mutual_info_quantum(cfg: &PairConfig, tau: f64) -> f64 {
    let (s1, s2) = (cfg.s1(), cfg.s2());
    s1.casimir() * (1.0 - g(s2, tau).powi(2)) + s2.casimir() * (1.0 - g(s1, tau).powi(2))
}

/// Mutual information `J_C` of two classical angular momenta.
pub fn mutual_info_classical(cfg: &PairConfig, tau: f64) -> f64 {
    let (a, b) = (cfg.s1().value(), cfg.s2().value());
    a * a * (1.0 - g_classical(b, tau).powi(2)) + b * b * (1.0 - g_classical(a, tau).powi(2))
}

/// Mutual information `J_GG` of the angle distribution obtained by coherent-state
/// POVMs on both spins.
pub fn mutual_info_povm(cfg: &PairConfig, tau: f64) -> f64 {
    let (s1, s2) = (cfg.s1(), cfg.s2());
    let (a, b) = (s1.value(), s2.value());
    a * a * (f(s2, tau) - g(s2, tau).powi(2)) + b * b * (f(s1, tau) - g(s1, tau).powi(2))
}

/// Quantum part `Q_GG = I - J_GG` for POVMs on both spins.
pub fn q_povm_both(cfg: &PairConfig, tau: f64) -> f64 {
    let (s1, s2) = (cfg.s1(), cfg.s2());
    let (a, b) = (s1.value(), s2.value());
    let (g1sq, g2sq) = (g(s1, tau).powi(2), g(s2, tau).powi(2));
    a * a * (1.0 - f(s2, tau)) + b * b * (1.0 - f(s1, tau)) + a * (1.0 - g2sq) + b * (1.0 - g1sq)
}

/// Classical part `C_G` for a coherent-state POVM on the second spin only.
pub fn c_povm_one(cfg: &PairConfig, tau: f64) -> f64 {
    let (s1, s2) = (cfg.s1(), cfg.s2());
    let b = s2.value();
    s1.casimir() * (f(s2, tau) - g(s2, tau).powi(2)) + b * b * (1.0 - g(s1, tau).powi(2))
}

/// Quantum part `Q_G = I - C_G`.
pub fn q_povm_one(cfg: &PairConfig, tau: f64) -> f64 {
    let (s1, s2) = (cfg.s1(), cfg.s2());
    s1.casimir() * (1.0 - f(s2, tau)) + s2.value() * (1.0 - g(s1, tau).powi(2))
}

/// Classical part `C_O` for the projective `σ_Z` measurement on a spin-1/2 first spin.
pub fn c_orth(cfg: &PairConfig, tau: f64) -> Result<f64> {
    cfg.require_spin_half()?;
    Ok(cfg.s2().casimir() * (tau / 2.0).sin().powi(2))
}

/// Quantum part `Q_O = I - C_O`.
pub fn q_orth(cfg: &PairConfig, tau: f64) -> Result<f64> {
    cfg.require_spin_half()?;
    Ok(0.75 * (1.0 - g(cfg.s2(), tau).powi(2)))
}

/// Free induction decay, normalised to one at `τ = 0`.
pub fn fid(cfg: &PairConfig, tau: f64) -> f64 {
    let (c1, c2) = (cfg.s1().casimir(), cfg.s2().casimir());
    (c1 * g(cfg.s2(), tau) + c2 * g(cfg.s1(), tau)) / (c1 + c2)
}

fn joint_angle_density(
    cfg: &PairConfig,
    beta: f64,
    p1: BlochPoint,
    p2: BlochPoint,
    kernel: impl Fn(usize, BlochPoint) -> Complex64,
) -> f64 {
    let m1 = ClassicalMomentum::new(cfg.s1().value(), p1).s_plus();
    let m2 = ClassicalMomentum::new(cfg.s2().value(), p2).s_plus();
    let coupling = (m1 * kernel(2, p2)).re + (m2 * kernel(1, p1)).re;
    (1.0 + beta * coupling) / (16.0 * PI * PI)
}

/// Angle distribution after coherent-state POVMs on both spins.
///
/// The coupling term pairs `S_{1+}` with the coherent-state average of
/// `exp(-iτ Ŝ_{2Z})`, i.e. `ξ_{2-}`, and symmetrically for the second spin.
pub fn povm_density(cfg: &PairConfig, tau: f64, beta: f64, p1: BlochPoint, p2: BlochPoint) -> f64 {
    joint_angle_density(cfg, beta, p1, p2, |which, p| {
        let s = if which == 1 { cfg.s1() } else { cfg.s2() };
        xi(s, p.theta(), tau, XiSign::Minus)
    })
}

/// Angle distribution of two classical angular momenta after the same evolution.
pub fn classical_density(
    cfg: &PairConfig,
    tau: f64,
    beta: f64,
    p1: BlochPoint,
    p2: BlochPoint,
) -> f64 {
    joint_angle_density(cfg, beta, p1, p2, |which, p| {
        let s = if which == 1 { cfg.s1() } else { cfg.s2() };
        Complex64::from_polar(1.0, -tau * s.value() * p.theta().cos())
    })
}
