use std::f64::consts::{PI, TAU};

use num_complex::Complex64;

use super::number::{binomial_term, SpinNumber};
use crate::error::{Error, Result};

/// Direction on the unit sphere: polar angle in `[0, π]`, azimuth in `[0, 2π)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BlochPoint {
    theta: f64,
    phi: f64,
}

impl BlochPoint {
    pub const NORTH: BlochPoint = BlochPoint {
        theta: 0.0,
        phi: 0.0,
    };

    pub fn new(theta: f64, phi: f64) -> Result<Self> {
        if !(0.0..=PI).contains(&theta) || !(0.0..TAU).contains(&phi) {
            return Err(Error::InvalidAngle { theta, phi });
        }
        Ok(BlochPoint { theta, phi })
    }

    /// Like [`BlochPoint::new`] but first reduces `phi` modulo `2π`.
    pub fn wrapped(theta: f64, phi: f64) -> Result<Self> {
        let mut phi = phi.rem_euclid(TAU);
        if phi >= TAU {
            phi = 0.0;
        }
        Self::new(theta, phi)
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn phi(&self) -> f64 {
        self.phi
    }

    /// Cartesian unit vector `(x, y, z)`.
    pub fn unit_vector(&self) -> [f64; 3] {
        let (st, ct) = self.theta.sin_cos();
        let (sp, cp) = self.phi.sin_cos();
        [st * cp, st * sp, ct]
    }

    /// `cos Θ` for the angle `Θ` between two directions.
    pub fn cos_angle_to(&self, other: &BlochPoint) -> f64 {
        self.theta.cos() * other.theta.cos()
            + self.theta.sin() * other.theta.sin() * (self.phi - other.phi).cos()
    }
}

/// Classical angular momentum of magnitude `s` pointing along `direction`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ClassicalMomentum {
    pub s: f64,
    pub direction: BlochPoint,
}

impl ClassicalMomentum {
    pub fn new(s: f64, direction: BlochPoint) -> Self {
        ClassicalMomentum { s, direction }
    }

    /// `(S_x, S_y, S_z)`.
    pub fn components(&self) -> [f64; 3] {
        let [x, y, z] = self.direction.unit_vector();
        [self.s * x, self.s * y, self.s * z]
    }

    /// `S_± = S sin θ e^{±iφ}`; returns `S_+`.
    pub fn s_plus(&self) -> Complex64 {
        Complex64::from_polar(self.s * self.direction.theta.sin(), self.direction.phi)
    }
}

/// Half-angle cosine and sine, exact at the poles.
fn half_angles(theta: f64) -> (f64, f64) {
    if theta == 0.0 {
        (1.0, 0.0)
    } else if theta == PI {
        (0.0, 1.0)
    } else {
        let (s, c) = (theta / 2.0).sin_cos();
        (c, s)
    }
}

/// Amplitudes of the spin coherent state `|θ, φ>` on `|m>`, index 0 ↔ `m = S`:
/// `C(2S, S+m)^{1/2} cos(θ/2)^{S+m} (e^{iφ} sin(θ/2))^{S-m}`.
pub fn coherent_amplitudes(s: SpinNumber, dir: BlochPoint) -> Vec<Complex64> {
    let n = s.twice();
    let (c, sn) = half_angles(dir.theta);
    (0..=n)
        .map(|down| {
            // |amplitude|^2 is a binomial weight with `down = S - m` flipped quanta.
            let weight = binomial_term(n, down, sn * sn, c * c);
            Complex64::from_polar(weight.sqrt(), dir.phi * f64::from(down))
        })
        .collect()
}

/// `<a|b>`.
pub fn overlap(a: &[Complex64], b: &[Complex64]) -> Complex64 {
    a.iter().zip(b).map(|(x, y)| x.conj() * y).sum()
}
