//! Short-time laws and half-period ratios.

use super::pair::PairConfig;
use crate::spin_core::SpinNumber;

/// Fractions of the total correlation at half the quantum period, `τ = π`.
///
/// These are the closed forms obtained with `g(π) = 0`, which holds for
/// half-integer spins; for integer spins `g(π) = ±1/d` and the exact measures
/// deviate from these fractions by `O(1/d²)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MidpointRatios {
    /// `C_O / I`, projective measurement on the first spin.
    pub c_orth: f64,
    /// `Q_O / I`.
    pub q_orth: f64,
    /// `C_G / I`, coherent-state POVM on the second spin.
    pub c_povm_one: f64,
    /// `C_GG / I = J_GG / I`, coherent-state POVMs on both spins.
    pub c_povm_both: f64,
}

impl MidpointRatios {
    pub fn q_povm_one(&self) -> f64 {
        1.0 - self.c_povm_one
    }

    pub fn q_povm_both(&self) -> f64 {
        1.0 - self.c_povm_both
    }
}

pub fn midpoint_ratios(cfg: &PairConfig) -> MidpointRatios {
    let (s1, s2) = (cfg.s1(), cfg.s2());
    let (a, b) = (s1.value(), s2.value());
    let (c1, c2) = (s1.casimir(), s2.casimir());
    let total = c1 + c2;
    MidpointRatios {
        c_orth: c2 / total,
        q_orth: c1 / total,
        c_povm_one: (c1 / (4.0 * b + 1.0) + b * b) / total,
        c_povm_both: (a * a / (4.0 * b + 1.0) + b * b / (4.0 * a + 1.0)) / total,
    }
}

/// Leading `τ²` coefficients of the mutual informations.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ShortTimeCoefficients {
    pub mutual_info_quantum: f64,
    pub mutual_info_classical: f64,
    pub mutual_info_povm: f64,
}

pub fn short_time_asymptotics(cfg: &PairConfig) -> ShortTimeCoefficients {
    let (s1, s2) = (cfg.s1(), cfg.s2());
    let (a, b) = (s1.value(), s2.value());
    let classical = 2.0 / 3.0 * a * a * b * b;
    ShortTimeCoefficients {
        mutual_info_quantum: 2.0 / 3.0 * s1.casimir() * s2.casimir(),
        mutual_info_classical: classical,
        // f - g² = S²τ²/3 + O(τ⁴), so J_GG shares the classical coefficient.
        mutual_info_povm: classical,
    }
}

/// `M''(0)/2` of an even function with `M(0) = 0`, by a central difference of step `h`.
pub fn quadratic_coefficient(measure: impl Fn(f64) -> f64, h: f64) -> f64 {
    (measure(h) - 2.0 * measure(0.0) + measure(-h)) / (2.0 * h * h)
}

/// `τ → 0` limits of the quantum fractions (and of their values at every revival `τ = 2πk`).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SmallTimeRatios {
    /// `Q_GG / I → (S1 + S2 + 1) / ((S1 + 1)(S2 + 1))`
    pub q_povm_both: f64,
    /// `Q_G / I → 1 / (S2 + 1)`
    pub q_povm_one: f64,
    /// `Q_O / I → 1/2`; only defined for `S1 = 1/2`.
    pub q_orth: Option<f64>,
}

pub fn small_time_ratios(cfg: &PairConfig) -> SmallTimeRatios {
    let (a, b) = (cfg.s1().value(), cfg.s2().value());
    SmallTimeRatios {
        q_povm_both: (a + b + 1.0) / ((a + 1.0) * (b + 1.0)),
        q_povm_one: 1.0 / (b + 1.0),
        q_orth: (cfg.s1() == SpinNumber::HALF).then_some(0.5),
    }
}

/// Large-`S` forms of the short-time fractions for `S1 = S2 = S`: `(2/S, 1/S)`.
pub fn small_time_ratios_large_spin(s: SpinNumber) -> (f64, f64) {
    let s = s.value();
    (2.0 / s, 1.0 / s)
}

/// Large-`S` forms of the half-period quantum fractions for `S1 = S2 = S`:
/// `(1 - 1/(4S), (1 + 3/(4S))/2)`.
pub fn midpoint_ratios_large_spin(s: SpinNumber) -> (f64, f64) {
    let s = s.value();
    (1.0 - 1.0 / (4.0 * s), 0.5 * (1.0 + 3.0 / (4.0 * s)))
}

/// Large-`S2` estimate `3/(4 S2²)` of the minimum of `Q_O / I` for `S1 = 1/2`.
pub fn q_orth_minimum_large_spin(s2: SpinNumber) -> f64 {
    3.0 / (4.0 * s2.value().powi(2))
}
