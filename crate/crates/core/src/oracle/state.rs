//! Exact density matrix of the evolved pair and its entropies.

use num_complex::Complex64;

use super::entropy::{entropy_vn, PerturbationSpectrum};
use crate::error::{Error, Result};
use crate::measures::{DimensionlessTime, PairConfig};
use crate::spin_core::{build_sminus, build_splus, build_sx, kron, sz_phase, ComplexMatrix};

/// Polarisation used by oracle runs unless stated otherwise.
pub const DEFAULT_BETA: f64 = 1e-3;

/// Which spin a reduced quantity refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Subsystem {
    First,
    Second,
}

/// Largest admissible polarisation, `0.5 / (S1 + S2)`.
pub fn beta_limit(cfg: &PairConfig) -> f64 {
    0.5 / (cfg.s1().value() + cfg.s2().value())
}

/// The traceless part `Δρ(τ)` of `ρ = (1 + β Δρ)/Z`, starting from `Δρ(0) = S_X`.
pub fn build_delta_rho(cfg: &PairConfig, tau: f64) -> ComplexMatrix {
    let (s1, s2) = (cfg.s1(), cfg.s2());
    let terms = [
        kron(&build_splus(s1), &sz_phase(s2, -tau)),
        kron(&build_sminus(s1), &sz_phase(s2, tau)),
        kron(&sz_phase(s1, -tau), &build_splus(s2)),
        kron(&sz_phase(s1, tau), &build_sminus(s2)),
    ];
    let sum = terms
        .iter()
        .skip(1)
        .fold(terms[0].clone(), |acc, t| &acc + t);
    sum.scale_real(0.5)
}

/// Diagonal of the propagator `exp(-iτ S1z S2z)` in the product basis.
pub fn propagator_phases(cfg: &PairConfig, tau: f64) -> Vec<Complex64> {
    let (s1, s2) = (cfg.s1(), cfg.s2());
    let mut out = Vec::with_capacity(cfg.dim());
    for i in 0..s1.dim() {
        for j in 0..s2.dim() {
            out.push(Complex64::from_polar(1.0, -tau * s1.m_at(i) * s2.m_at(j)));
        }
    }
    out
}

/// Partial trace of an operator on `C^{d1} ⊗ C^{d2}`, keeping one factor.
pub fn partial_trace(
    m: &ComplexMatrix,
    d1: usize,
    d2: usize,
    keep: Subsystem,
) -> Result<ComplexMatrix> {
    if m.dim() != d1 * d2 {
        return Err(Error::Dimension(format!(
            "{}x{} matrix is not {d1}x{d2}",
            m.dim(),
            m.dim()
        )));
    }
    Ok(match keep {
        Subsystem::First => ComplexMatrix::from_fn(d1, |i, j| {
            (0..d2).map(|k| m[(i * d2 + k, j * d2 + k)]).sum()
        }),
        Subsystem::Second => ComplexMatrix::from_fn(d2, |i, j| {
            (0..d1).map(|k| m[(k * d2 + i, k * d2 + j)]).sum()
        }),
    })
}

/// Pair state at one instant and polarisation.
#[derive(Clone, Debug)]
pub struct EvolvedState {
    pub cfg: PairConfig,
    pub tau: DimensionlessTime,
    pub beta: f64,
    pub delta_rho: ComplexMatrix,
}

impl EvolvedState {
    pub fn new(cfg: PairConfig, tau: f64, beta: f64) -> Result<Self> {
        let limit = beta_limit(&cfg);
        if !(0.0..=limit).contains(&beta) {
            return Err(Error::BetaOutOfRange { beta, limit });
        }
        Ok(EvolvedState {
            cfg,
            tau: DimensionlessTime::new(tau),
            beta,
            delta_rho: build_delta_rho(&cfg, tau),
        })
    }

    fn dims(&self) -> (usize, usize) {
        (self.cfg.s1().dim(), self.cfg.s2().dim())
    }

    /// `(1 + β Δρ)/Z`.
    pub fn rho(&self) -> ComplexMatrix {
        let z = self.cfg.dim();
        (&ComplexMatrix::identity(z) + &self.delta_rho.scale_real(self.beta))
            .scale_real(1.0 / z as f64)
    }

    pub fn reduced_density(&self, keep: Subsystem) -> ComplexMatrix {
        let (d1, d2) = self.dims();
        partial_trace(&self.rho(), d1, d2, keep).expect("state dimension matches its spins")
    }

    /// Traceless part of a reduced state: `Tr_other(Δρ) / d_other`.
    pub fn reduced_delta(&self, keep: Subsystem) -> ComplexMatrix {
        let (d1, d2) = self.dims();
        let other = if keep == Subsystem::First { d2 } else { d1 };
        partial_trace(&self.delta_rho, d1, d2, keep)
            .expect("state dimension matches its spins")
            .scale_real(1.0 / other as f64)
    }

    /// β-independent spectra of the joint and reduced perturbations.
    pub fn spectra(&self) -> StateSpectra {
        StateSpectra {
            joint: PerturbationSpectrum::of(&self.delta_rho),
            first: PerturbationSpectrum::of(&self.reduced_delta(Subsystem::First)),
            second: PerturbationSpectrum::of(&self.reduced_delta(Subsystem::Second)),
        }
    }

    /// `S(ρ1) + S(ρ2) - S(ρ)` in bits, from entropy deficits.
    pub fn mutual_info_exact(&self) -> Result<f64> {
        self.spectra().mutual_info(self.beta)
    }

    /// The same quantity from three direct von Neumann entropies.
    pub fn mutual_info_direct(&self) -> Result<f64> {
        let s1 = entropy_vn(&self.reduced_density(Subsystem::First))?;
        let s2 = entropy_vn(&self.reduced_density(Subsystem::Second))?;
        Ok(s1 + s2 - entropy_vn(&self.rho())?)
    }
}

/// Spectra of `Δρ`, `Δρ1`, `Δρ2` at one instant.
#[derive(Clone, Debug)]
pub struct StateSpectra {
    pub joint: PerturbationSpectrum,
    pub first: PerturbationSpectrum,
    pub second: PerturbationSpectrum,
}

impl StateSpectra {
    /// Mutual information in bits at polarisation `beta`.
    ///
    /// Equal to `D(ρ) - D(ρ1) - D(ρ2)` with `D = log₂ d - S`, which avoids
    /// subtracting entropies that agree to `O(β²)`.
    pub fn mutual_info(&self, beta: f64) -> Result<f64> {
        Ok(self.joint.entropy_deficit(beta)?
            - self.first.entropy_deficit(beta)?
            - self.second.entropy_deficit(beta)?)
    }
}

/// `Tr(S_X U S_X U†) / Tr(S_X²)` with `S_X` the total transverse spin.
pub fn fid_trace(cfg: &PairConfig, tau: f64) -> f64 {
    let (s1, s2) = (cfg.s1(), cfg.s2());
    let sx = &kron(&build_sx(s1), &ComplexMatrix::identity(s2.dim()))
        + &kron(&ComplexMatrix::identity(s1.dim()), &build_sx(s2));
    let u = propagator_phases(cfg, tau);
    let n = sx.dim();
    let mut num = Complex64::new(0.0, 0.0);
    let mut den = Complex64::new(0.0, 0.0);
    for a in 0..n {
        for b in 0..n {
            let ab = sx[(a, b)];
            let ba = sx[(b, a)];
            num += ba * u[a] * ab * u[b].conj();
            den += ba * ab;
        }
    }
    num.re / den.re
}
