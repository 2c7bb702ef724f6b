use std::f64::consts::{LN_2, TAU};
use std::fmt;
use std::str::FromStr;

use super::asymptotics::small_time_ratios;
use super::correlations::*;
use super::pair::{DimensionlessTime, PairConfig};
use crate::error::{Error, Result};

/// Distance from the nearest revival `τ = 2πk` below which quantum fractions
/// are reported by their analytic `0/0` limit.
const REVIVAL_WINDOW: f64 = 1e-6;

/// Selectable output quantity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Measure {
    /// Quantum mutual information `I`.
    I,
    /// Classical-momentum mutual information `J_C`.
    Jc,
    /// Mutual information after POVMs on both spins, `J_GG`.
    Jgg,
    Qgg,
    Cg,
    Qg,
    Co,
    Qo,
    Fid,
    /// `Q_GG / I`
    QggRatio,
    /// `Q_G / I`
    QgRatio,
    /// `Q_O / I`
    QoRatio,
}

impl Measure {
    pub const ALL: [Measure; 12] = [
        Measure::I,
        Measure::Jc,
        Measure::Jgg,
        Measure::Qgg,
        Measure::Cg,
        Measure::Qg,
        Measure::Co,
        Measure::Qo,
        Measure::Fid,
        Measure::QggRatio,
        Measure::QgRatio,
        Measure::QoRatio,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Measure::I => "I",
            Measure::Jc => "Jc",
            Measure::Jgg => "Jgg",
            Measure::Qgg => "Qgg",
            Measure::Cg => "Cg",
            Measure::Qg => "Qg",
            Measure::Co => "Co",
            Measure::Qo => "Qo",
            Measure::Fid => "fid",
            Measure::QggRatio => "Qgg/I",
            Measure::QgRatio => "Qg/I",
            Measure::QoRatio => "Qo/I",
        }
    }

    /// Ratios and the FID carry no unit of `B`.
    pub fn is_dimensionless(self) -> bool {
        matches!(
            self,
            Measure::Fid | Measure::QggRatio | Measure::QgRatio | Measure::QoRatio
        )
    }

    pub fn requires_spin_half(self) -> bool {
        matches!(self, Measure::Co | Measure::Qo | Measure::QoRatio)
    }

    /// Value at `τ`, in units of `B` unless dimensionless.
    ///
    /// Fractions `Q/I` are `0/0` at `τ = 2πk`; there the analytic limit from
    /// [`small_time_ratios`] is returned.
    pub fn evaluate(self, cfg: &PairConfig, tau: f64) -> Result<f64> {
        let value = match self {
            Measure::I => mutual_info_quantum(cfg, tau),
            Measure::Jc => mutual_info_classical(cfg, tau),
            Measure::Jgg => mutual_info_povm(cfg, tau),
            Measure::Qgg => q_povm_both(cfg, tau),
            Measure::Cg => c_povm_one(cfg, tau),
            Measure::Qg => q_povm_one(cfg, tau),
            Measure::Co => c_orth(cfg, tau)?,
            Measure::Qo => q_orth(cfg, tau)?,
            Measure::Fid => fid(cfg, tau),
            Measure::QggRatio | Measure::QgRatio | Measure::QoRatio => {
                let limits = small_time_ratios(cfg);
                let (numerator, limit) = match self {
                    Measure::QggRatio => (q_povm_both(cfg, tau), limits.q_povm_both),
                    Measure::QgRatio => (q_povm_one(cfg, tau), limits.q_povm_one),
                    _ => (q_orth(cfg, tau)?, 0.5),
                };
                let phase = tau.rem_euclid(TAU);
                if phase.min(TAU - phase) < REVIVAL_WINDOW {
                    limit
                } else {
                    numerator / mutual_info_quantum(cfg, tau)
                }
            }
        };
        Ok(value)
    }
}

impl fmt::Display for Measure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Measure {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim();
        Measure::ALL
            .into_iter()
            .find(|m| m.id().eq_ignore_ascii_case(key))
            .ok_or_else(|| Error::InvalidMeasure(key.to_string()))
    }
}

/// How values in units of `B` are reported.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum UnitMode {
    /// Units of `B = β²/(6 ln 2)`.
    B,
    /// Bits for a concrete polarisation `β`.
    Bits { beta: f64 },
    /// Units of `2 B S2²`, the figure normalisation.
    Figure,
}

impl UnitMode {
    pub fn id(&self) -> &'static str {
        match self {
            UnitMode::B => "B",
            UnitMode::Bits { .. } => "bits",
            UnitMode::Figure => "figure",
        }
    }

    /// Converts a value in units of `B`.
    pub fn convert(&self, value_in_b: f64, cfg: &PairConfig) -> f64 {
        match *self {
            UnitMode::B => value_in_b,
            UnitMode::Bits { beta } => value_in_b * beta * beta / (6.0 * LN_2),
            UnitMode::Figure => value_in_b / (2.0 * cfg.s2().value().powi(2)),
        }
    }
}

/// Measures tabulated over a time grid.
#[derive(Clone, Debug, PartialEq)]
pub struct MeasureSeries {
    pub cfg: PairConfig,
    pub taus: Vec<DimensionlessTime>,
    pub columns: Vec<(Measure, Vec<f64>)>,
    pub unit_mode: UnitMode,
}

impl MeasureSeries {
    pub fn evaluate(
        cfg: PairConfig,
        taus: Vec<DimensionlessTime>,
        measures: &[Measure],
        unit_mode: UnitMode,
    ) -> Result<Self> {
        let columns = measures
            .iter()
            .map(|&m| {
                let values = taus
                    .iter()
                    .map(|t| {
                        let v = m.evaluate(&cfg, t.tau)?;
                        Ok(if m.is_dimensionless() {
                            v
                        } else {
                            unit_mode.convert(v, &cfg)
                        })
                    })
                    .collect::<Result<Vec<f64>>>()?;
                Ok((m, values))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(MeasureSeries {
            cfg,
            taus,
            columns,
            unit_mode,
        })
    }

    pub fn len(&self) -> usize {
        self.taus.len()
    }

    pub fn is_empty(&self) -> bool {
        self.taus.is_empty()
    }

    pub fn column(&self, measure: Measure) -> Option<&[f64]> {
        self.columns
            .iter()
            .find(|(m, _)| *m == measure)
            .map(|(_, v)| v.as_slice())
    }

    pub fn tj(&self) -> Vec<f64> {
        self.taus.iter().map(|t| t.tj(&self.cfg)).collect()
    }
}
