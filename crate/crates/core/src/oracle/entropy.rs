//! Von Neumann entropies, including a cancellation-free form for states
//! `ρ = (1 + β Δ)/d` close to the maximally mixed state.

use std::f64::consts::LN_2;

use super::eigen::hermitian_eigenvalues;
use crate::error::{Error, Result};
use crate::spin_core::ComplexMatrix;

/// Most negative eigenvalue tolerated in a density matrix.
const NEGATIVE_EIGENVALUE_TOL: f64 = -1e-10;

/// `|x|` below which [`excess_entropy`] switches to its power series.
const SERIES_RADIUS: f64 = 0.05;

const SERIES: [f64; 11] = {
    let mut c = [0.0; 11];
    let mut i = 0;
    while i < 11 {
        let k = (i + 2) as f64;
        c[i] = if i % 2 == 0 { 1.0 } else { -1.0 } / (k * (k - 1.0));
        i += 1;
    }
    c
};

/// `(1 + x) ln(1 + x) - x`, accurate to round-off for small `x`.
///
/// Non-negative, `x²/2 + O(x³)`. The entropy and relative-entropy integrals
/// of near-uniform states are built from it.
pub fn excess_entropy(x: f64) -> f64 {
    if x.abs() < SERIES_RADIUS {
        // Σ_{k≥2} (-1)^k x^k / (k(k-1)); the first omitted term is below 1e-16 relative.
        let mut acc = 0.0;
        for &c in SERIES.iter().rev() {
            acc = acc * x + c;
        }
        acc * x * x
    } else if x == -1.0 {
        1.0
    } else {
        (1.0 + x) * x.ln_1p() - x
    }
}

/// `-Σ λ log₂ λ` over the eigenvalues of a density matrix, with `0 log 0 = 0`.
pub fn entropy_vn(rho: &ComplexMatrix) -> Result<f64> {
    let values = hermitian_eigenvalues(rho);
    if let Some(&min) = values.first() {
        if min < NEGATIVE_EIGENVALUE_TOL {
            return Err(Error::NegativeEigenvalue(min));
        }
    }
    Ok(values
        .iter()
        .filter(|&&l| l > 0.0)
        .map(|&l| -l * l.log2())
        .sum())
}

/// Spectrum of a traceless perturbation `Δ`, for states `ρ = (1 + β Δ)/d`.
#[derive(Clone, Debug)]
pub struct PerturbationSpectrum {
    pub eigenvalues: Vec<f64>,
    /// Overall factor applied to the eigenvalues; lets conditional states
    /// rescale a cached spectrum.
    pub scale: f64,
}

impl PerturbationSpectrum {
    pub fn of(delta: &ComplexMatrix) -> Self {
        PerturbationSpectrum {
            eigenvalues: hermitian_eigenvalues(delta),
            scale: 1.0,
        }
    }

    pub fn dim(&self) -> usize {
        self.eigenvalues.len()
    }

    /// `log₂ d - S(ρ)` in bits for `ρ = (1 + β Δ)/d`.
    pub fn entropy_deficit(&self, beta: f64) -> Result<f64> {
        let d = self.dim() as f64;
        let mut sum = 0.0;
        for &l in &self.eigenvalues {
            let x = beta * self.scale * l;
            if (1.0 + x) / d < NEGATIVE_EIGENVALUE_TOL {
                return Err(Error::NegativeEigenvalue((1.0 + x) / d));
            }
            sum += excess_entropy(x.max(-1.0));
        }
        // Σ x vanishes because Δ is traceless.
        Ok(sum / (d * LN_2))
    }

    /// Von Neumann entropy in bits.
    pub fn entropy(&self, beta: f64) -> Result<f64> {
        Ok((self.dim() as f64).log2() - self.entropy_deficit(beta)?)
    }
}
