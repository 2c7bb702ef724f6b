//! Projective `σ_Z` measurement on a spin-1/2 first spin.

use super::entropy::PerturbationSpectrum;
use super::state::{EvolvedState, Subsystem};
use crate::error::Result;
use crate::spin_core::ComplexMatrix;

/// Outcome branch of the measurement on spin 1, with its spin-2 block of `Δρ`.
#[derive(Clone, Debug)]
struct Branch {
    /// `Tr B`.
    trace: f64,
    /// Spectrum of `B - (Tr B / d2) 1`.
    centred: PerturbationSpectrum,
}

/// β-independent data of the measurement at one instant.
#[derive(Clone, Debug)]
pub struct OrthMeasurement {
    d2: usize,
    branches: [Branch; 2],
    reduced_second: PerturbationSpectrum,
}

impl OrthMeasurement {
    pub fn new(state: &EvolvedState) -> Result<Self> {
        state.cfg.require_spin_half()?;
        let d2 = state.cfg.s2().dim();
        let branch = |offset: usize| {
            let block =
                ComplexMatrix::from_fn(d2, |i, j| state.delta_rho[(offset + i, offset + j)]);
            let trace = block.trace().re;
            let centred = &block - &ComplexMatrix::identity(d2).scale_real(trace / d2 as f64);
            Branch {
                trace,
                centred: PerturbationSpectrum::of(&centred),
            }
        };
        Ok(OrthMeasurement {
            d2,
            branches: [branch(0), branch(d2)],
            reduced_second: PerturbationSpectrum::of(&state.reduced_delta(Subsystem::Second)),
        })
    }

    /// `S(ρ2) - Σ p± S(ρ2|±)` in bits.
    pub fn classical_correlation(&self, beta: f64) -> Result<f64> {
        let d2 = self.d2 as f64;
        let z = 2.0 * d2;
        let mut conditional = 0.0;
        for b in &self.branches {
            let p = (d2 + beta * b.trace) / z;
            // ρ2|± = (1 + β c Δ')/d2 with c = d2/(d2 + β Tr B).
            let mut spectrum = b.centred.clone();
            spectrum.scale = d2 / (d2 + beta * b.trace);
            conditional += p * spectrum.entropy_deficit(beta)?;
        }
        Ok(conditional - self.reduced_second.entropy_deficit(beta)?)
    }
}

/// Classical correlation in bits extracted by measuring `σ_{1Z}`.
pub fn orth_measurement_mi(state: &EvolvedState) -> Result<f64> {
    OrthMeasurement::new(state)?.classical_correlation(state.beta)
}
