use crate::error::{Error, Result};
use crate::spin_core::SpinNumber;

/// The coupled pair `H = (J/S2) S1z S2z` with `S2 >= S1`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PairConfig {
    s1: SpinNumber,
    s2: SpinNumber,
    coupling: f64,
}

impl PairConfig {
    /// Pair with unit coupling `J = 1`.
    pub fn new(s1: SpinNumber, s2: SpinNumber) -> Result<Self> {
        Self::with_coupling(s1, s2, 1.0)
    }

    pub fn with_coupling(s1: SpinNumber, s2: SpinNumber, coupling: f64) -> Result<Self> {
        if s2 < s1 {
            return Err(Error::SpinOrder { s1, s2 });
        }
        if s2.twice() == 0 {
            return Err(Error::InvalidSpin(
                "0 (S2 sets the time scale and must be positive)".into(),
            ));
        }
        Ok(PairConfig { s1, s2, coupling })
    }

    /// Equal spins `S1 = S2 = s`.
    pub fn symmetric(s: SpinNumber) -> Result<Self> {
        Self::new(s, s)
    }

    pub fn s1(&self) -> SpinNumber {
        self.s1
    }

    pub fn s2(&self) -> SpinNumber {
        self.s2
    }

    pub fn coupling(&self) -> f64 {
        self.coupling
    }

    /// Joint Hilbert space dimension `d1 d2`.
    pub fn dim(&self) -> usize {
        self.s1.dim() * self.s2.dim()
    }

    pub(crate) fn require_spin_half(&self) -> Result<()> {
        if self.s1 == SpinNumber::HALF {
            Ok(())
        } else {
            Err(Error::RequiresSpinHalf(self.s1))
        }
    }
}

/// `τ = tJ/S2`. One quantum period is `τ = 2π`.
#[derive(Clone, Copy, Debug, PartialEq, PartialOrd)]
pub struct DimensionlessTime {
    pub tau: f64,
}

impl DimensionlessTime {
    pub fn new(tau: f64) -> Self {
        DimensionlessTime { tau }
    }

    pub fn from_tj(cfg: &PairConfig, tj: f64) -> Self {
        DimensionlessTime {
            tau: tj / cfg.s2.value(),
        }
    }

    /// `tJ = τ S2`, the figure axis.
    pub fn tj(&self, cfg: &PairConfig) -> f64 {
        self.tau * cfg.s2.value()
    }

    /// Uniform grid of `steps` points over `tJ ∈ [0, tj_max]`.
    pub fn grid(cfg: &PairConfig, tj_max: f64, steps: usize) -> Vec<DimensionlessTime> {
        let last = steps.saturating_sub(1).max(1) as f64;
        (0..steps)
            .map(|i| Self::from_tj(cfg, tj_max * i as f64 / last))
            .collect()
    }
}
