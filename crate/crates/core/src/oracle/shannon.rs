//! Shannon mutual information of joint angle distributions on two spheres.
//!
//! Both distributions have the form `P = (1 + β u)/(4π)²` with
//! `u = Re(S_{1+} K_2(θ2)) + Re(S_{2+} K_1(θ1))`, where the kernel `K` is the
//! coherent-state average of `exp(-iτ S_Z)` for the POVM outcome density and
//! `exp(-iτ S cos θ)` for classical momenta.

use std::f64::consts::{LN_2, PI};

use num_complex::Complex64;

use super::entropy::excess_entropy;
use super::quadrature::QuadratureRule;
use crate::error::{Error, Result};
use crate::measures::{classical_density, povm_density, xi, PairConfig, XiSign};
use crate::spin_core::{BlochPoint, SpinNumber};

const NEGATIVE_DENSITY_TOL: f64 = -1e-12;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DistributionKind {
    /// Outcomes of coherent-state POVMs on both spins.
    Povm,
    /// Directions of two classical angular momenta.
    Classical,
}

#[derive(Clone, Copy, Debug)]
pub struct AngleDistribution {
    pub cfg: PairConfig,
    pub tau: f64,
    pub beta: f64,
    pub kind: DistributionKind,
}

impl AngleDistribution {
    pub fn new(cfg: PairConfig, tau: f64, beta: f64, kind: DistributionKind) -> Self {
        AngleDistribution {
            cfg,
            tau,
            beta,
            kind,
        }
    }

    /// Density with respect to `sin θ1 dθ1 dφ1 sin θ2 dθ2 dφ2`.
    pub fn density(&self, p1: BlochPoint, p2: BlochPoint) -> f64 {
        match self.kind {
            DistributionKind::Povm => povm_density(&self.cfg, self.tau, self.beta, p1, p2),
            DistributionKind::Classical => {
                classical_density(&self.cfg, self.tau, self.beta, p1, p2)
            }
        }
    }

    fn kernel(&self, s: SpinNumber, cos_theta: f64) -> Complex64 {
        match self.kind {
            DistributionKind::Povm => xi(s, cos_theta.acos(), self.tau, XiSign::Minus),
            DistributionKind::Classical => {
                Complex64::from_polar(1.0, -self.tau * s.value() * cos_theta)
            }
        }
    }

    /// `∫∫ P` under the product rule.
    pub fn normalization(&self, rule: &QuadratureRule) -> f64 {
        let nodes = rule.nodes();
        let mut total = 0.0;
        for a in &nodes {
            for b in &nodes {
                total += a.weight * b.weight * self.density(a.point, b.point);
            }
        }
        total
    }
}

/// `∫∫ P log₂(P / (P1 P2))` over both spheres.
///
/// Evaluated as `∫∫ P1 P2 h(v) + (∫∫ P - ∫∫ P1 P2)` with `P = P1 P2 (1 + v)`
/// and `h(v) = (1+v) ln(1+v) - v`, which keeps full relative precision as
/// `β → 0`. The marginals come from the same rule.
pub fn shannon_mi_quadrature(dist: &AngleDistribution, rule: &QuadratureRule) -> Result<f64> {
    let (s1, s2) = (dist.cfg.s1(), dist.cfg.s2());
    let beta = dist.beta;
    let xs = rule.cos_nodes();
    let wx = rule.cos_weights();
    let nt = rule.n_theta();
    let np = rule.n_phi();
    let wphi = rule.phi_weight();
    let phase: Vec<Complex64> = rule
        .phis()
        .iter()
        .map(|&p| Complex64::from_polar(1.0, p))
        .collect();
    let sin: Vec<f64> = xs.iter().map(|x| (1.0 - x * x).sqrt()).collect();
    let k1: Vec<Complex64> = xs.iter().map(|&x| dist.kernel(s1, x)).collect();
    let k2: Vec<Complex64> = xs.iter().map(|&x| dist.kernel(s2, x)).collect();
    let total_weight: f64 = wx.iter().sum::<f64>() * wphi * np as f64;

    // u = x(i1, j1; i2) + y(i2, j2; i1)
    let x_row = |i1: usize, i2: usize, out: &mut [f64]| {
        let amp = s1.value() * sin[i1];
        for (o, e) in out.iter_mut().zip(&phase) {
            *o = amp * (e * k2[i2]).re;
        }
    };
    let y_row = |i2: usize, i1: usize, out: &mut [f64]| {
        let amp = s2.value() * sin[i2];
        for (o, e) in out.iter_mut().zip(&phase) {
            *o = amp * (e * k1[i1]).re;
        }
    };

    // Marginal perturbations a1(i1, j1), a2(i2, j2): sphere averages of u.
    let mut a1 = vec![0.0; nt * np];
    let mut a2 = vec![0.0; nt * np];
    let mut xr = vec![0.0; np];
    let mut yr = vec![0.0; np];
    for i1 in 0..nt {
        for i2 in 0..nt {
            x_row(i1, i2, &mut xr);
            y_row(i2, i1, &mut yr);
            let w = wx[i2] * wphi;
            let ysum: f64 = yr.iter().sum();
            for j in 0..np {
                a1[i1 * np + j] += w * (np as f64 * xr[j] + ysum);
            }
            let w = wx[i1] * wphi;
            let xsum: f64 = xr.iter().sum();
            for j in 0..np {
                a2[i2 * np + j] += w * (np as f64 * yr[j] + xsum);
            }
        }
    }
    for a in a1.iter_mut().chain(a2.iter_mut()) {
        *a /= total_weight;
    }

    let norm = 1.0 / (16.0 * PI * PI);
    let mut acc = 0.0;
    let mut d2 = vec![0.0; np];
    let mut inv_d2 = vec![0.0; np];
    for i1 in 0..nt {
        for i2 in 0..nt {
            x_row(i1, i2, &mut xr);
            y_row(i2, i1, &mut yr);
            let min_u = xr.iter().copied().fold(f64::INFINITY, f64::min)
                + yr.iter().copied().fold(f64::INFINITY, f64::min);
            if 1.0 + beta * min_u < NEGATIVE_DENSITY_TOL {
                return Err(Error::NegativeDensity((1.0 + beta * min_u) * norm));
            }
            let row1 = &a1[i1 * np..(i1 + 1) * np];
            let row2 = &a2[i2 * np..(i2 + 1) * np];
            for k in 0..np {
                d2[k] = 1.0 + beta * row2[k];
                inv_d2[k] = d2[k].recip();
            }
            let mut block = 0.0;
            for j in 0..np {
                let d1 = 1.0 + beta * row1[j];
                let shift = xr[j] - row1[j];
                let c = beta / d1;
                let mut inner = 0.0;
                for k in 0..np {
                    // v = β(u - a1 - a2 - β a1 a2) / ((1 + β a1)(1 + β a2))
                    let v = c * (shift + yr[k] - row2[k] * d1) * inv_d2[k];
                    inner += d2[k] * excess_entropy(v.max(-1.0));
                }
                block += d1 * inner;
            }
            acc += wx[i1] * wx[i2] * block;
        }
    }
    acc *= wphi * wphi * norm;

    // ∫∫ P - ∫∫ P1 P2 in the same discrete measure.
    let moment = |a: &[f64]| -> f64 {
        (0..nt)
            .map(|i| wx[i] * wphi * a[i * np..(i + 1) * np].iter().sum::<f64>())
            .sum()
    };
    let (m1, m2) = (moment(&a1), moment(&a2));
    let correction = -beta * (total_weight * m2 + beta * m1 * m2) * norm;

    Ok((acc + correction) / LN_2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::measures::{mutual_info_classical, mutual_info_povm};
    use approx::assert_relative_eq;

    fn b_unit(beta: f64) -> f64 {
        beta * beta / (6.0 * LN_2)
    }

    #[test]
    fn uncorrelated_at_origin_and_zero_polarisation() {
        let cfg = PairConfig::new(SpinNumber::HALF, SpinNumber::from_twice(3)).unwrap();
        let rule = QuadratureRule::new(8, 16);
        for kind in [DistributionKind::Povm, DistributionKind::Classical] {
            // Not an exact product at τ = 0: the β² cross term is missing, so MI is O(β⁴).
            let d = AngleDistribution::new(cfg, 0.0, 1e-3, kind);
            let value = shannon_mi_quadrature(&d, &rule).unwrap();
            assert!(value.abs() < 1e-11, "{value:e}");
            let d = AngleDistribution::new(cfg, 1.0, 0.0, kind);
            assert_eq!(shannon_mi_quadrature(&d, &rule).unwrap(), 0.0);
        }
    }

    #[test]
    fn normalised() {
        let cfg = PairConfig::new(SpinNumber::HALF, SpinNumber::from_twice(3)).unwrap();
        let rule = QuadratureRule::new(8, 8);
        for kind in [DistributionKind::Povm, DistributionKind::Classical] {
            let d = AngleDistribution::new(cfg, 0.9, 0.1, kind);
            assert_relative_eq!(d.normalization(&rule), 1.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn small_beta_matches_closed_forms() {
        let cfg = PairConfig::new(SpinNumber::HALF, SpinNumber::from_twice(3)).unwrap();
        let rule = QuadratureRule::new(16, 32);
        let beta = 1e-4;
        let tau = 1.3;
        let d = AngleDistribution::new(cfg, tau, beta, DistributionKind::Povm);
        let value = shannon_mi_quadrature(&d, &rule).unwrap() / b_unit(beta);
        assert_relative_eq!(value, mutual_info_povm(&cfg, tau), max_relative = 1e-5);
        let d = AngleDistribution::new(cfg, tau, beta, DistributionKind::Classical);
        let value = shannon_mi_quadrature(&d, &rule).unwrap() / b_unit(beta);
        assert_relative_eq!(value, mutual_info_classical(&cfg, tau), max_relative = 1e-5);
    }

    #[test]
    fn rejects_negative_density() {
        let cfg = PairConfig::symmetric(SpinNumber::from_twice(3)).unwrap();
        let d = AngleDistribution::new(cfg, 1.0, 1.0, DistributionKind::Classical);
        assert!(matches!(
            shannon_mi_quadrature(&d, &QuadratureRule::new(4, 8)),
            Err(Error::NegativeDensity(_))
        ));
    }
}
