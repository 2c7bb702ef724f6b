//! Single-spin time kernels shared by every correlation measure.

use num_complex::Complex64;

use crate::spin_core::{binomial_term, SpinNumber};

/// `|τS|` below which `sin(τS)/(τS)` is replaced by its Taylor series.
const SINC_SERIES_CUTOFF: f64 = 1e-4;

/// Neumaier-compensated running sum.
#[derive(Default, Clone, Copy, Debug)]
pub(crate) struct CompensatedSum {
    sum: f64,
    carry: f64,
}

impl CompensatedSum {
    pub(crate) fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.carry += (self.sum - t) + x;
        } else {
            self.carry += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub(crate) fn total(&self) -> f64 {
        self.sum + self.carry
    }
}

impl FromIterator<f64> for CompensatedSum {
    fn from_iter<I: IntoIterator<Item = f64>>(iter: I) -> Self {
        let mut acc = CompensatedSum::default();
        for x in iter {
            acc.add(x);
        }
        acc
    }
}

/// Dephasing factor `g(τ) = (1/d) Σ_m cos(mτ)`.
///
/// Evaluated as the finite sum, so it is regular at `τ = 2πk` where the
/// closed form `sin(dτ/2) / (d sin(τ/2))` is `0/0`.
pub fn g(s: SpinNumber, tau: f64) -> f64 {
    let sum: CompensatedSum = s.m_values().map(|m| (m * tau).cos()).collect();
    sum.total() / s.dim() as f64
}

/// Classical dephasing factor `sin(τS)/(τS)`.
pub fn g_classical(s_mag: f64, tau: f64) -> f64 {
    let x = tau * s_mag;
    if x.abs() < SINC_SERIES_CUTOFF {
        let x2 = x * x;
        1.0 - x2 / 6.0 + x2 * x2 / 120.0
    } else {
        x.sin() / x
    }
}

/// Branch of the coherent-state phase factor.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum XiSign {
    /// `[cos(τ/2) + i cos θ sin(τ/2)]^{2S}`
    Plus,
    /// `[cos(τ/2) - i cos θ sin(τ/2)]^{2S}`
    Minus,
}

/// `ξ∓ = [cos(τ/2) ∓ i cos θ sin(τ/2)]^{2S}`.
///
/// `Plus` is the coherent-state average of `exp(+iτ S_Z)` and `Minus` that of
/// `exp(-iτ S_Z)` for the state `|θ, φ>`.
pub fn xi(s: SpinNumber, theta: f64, tau: f64, sign: XiSign) -> Complex64 {
    let (sh, ch) = (tau / 2.0).sin_cos();
    let im = match sign {
        XiSign::Plus => theta.cos() * sh,
        XiSign::Minus => -theta.cos() * sh,
    };
    Complex64::new(ch, im).powu(s.twice())
}

/// `f(τ) = Σ_n C(2S, n) cos(τ/2)^{2(2S-n)} sin(τ/2)^{2n} / (2n+1)`, the
/// sphere average of `|ξ|²`.
pub fn f(s: SpinNumber, tau: f64) -> f64 {
    let (sh, ch) = (tau / 2.0).sin_cos();
    let (sin2, cos2) = (sh * sh, ch * ch);
    let n = s.twice();
    let sum: CompensatedSum = (0..=n)
        .map(|k| binomial_term(n, k, sin2, cos2) / f64::from(2 * k + 1))
        .collect();
    sum.total()
}
