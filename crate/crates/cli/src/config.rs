use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use spincorr::{Measure, PairConfig, SpinNumber, UnitMode};

use crate::CliError;

pub const DEFAULT_STEPS: usize = 401;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Format {
    #[default]
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            other => Err(CliError::Invalid(format!(
                "unknown format {other:?} (expected csv or json)"
            ))),
        }
    }
}

/// One spin pair swept over a uniform `tJ` grid.
#[derive(Clone, Debug, PartialEq)]
pub struct SweepConfig {
    pub pair: PairConfig,
    pub tj_max: f64,
    pub steps: usize,
    pub measures: Vec<Measure>,
    pub unit_mode: UnitMode,
}

impl SweepConfig {
    pub fn new(
        pair: PairConfig,
        tj_max: f64,
        steps: usize,
        measures: Vec<Measure>,
        unit_mode: UnitMode,
    ) -> Result<Self, CliError> {
        if steps < 2 {
            return Err(CliError::Invalid(format!(
                "--steps must be at least 2, got {steps}"
            )));
        }
        if !tj_max.is_finite() || tj_max < 0.0 {
            return Err(CliError::Invalid(format!(
                "--tj-max must be a finite non-negative number, got {tj_max}"
            )));
        }
        if measures.is_empty() {
            return Err(CliError::Invalid("no measures selected".into()));
        }
        if let Some(m) = measures.iter().find(|m| m.requires_spin_half()) {
            if pair.s1() != SpinNumber::HALF {
                return Err(CliError::Invalid(format!(
                    "measure {m} requires --s1 1/2, got {}",
                    pair.s1()
                )));
            }
        }
        let mut unique = Vec::with_capacity(measures.len());
        for m in measures {
            if !unique.contains(&m) {
                unique.push(m);
            }
        }
        Ok(SweepConfig {
            pair,
            tj_max,
            steps,
            measures: unique,
            unit_mode,
        })
    }

    /// One quantum period, `tJ = 2π S2`.
    pub fn default_tj_max(pair: &PairConfig) -> f64 {
        2.0 * PI * pair.s2().value()
    }

    /// Every measure that is defined for `pair`.
    pub fn default_measures(pair: &PairConfig) -> Vec<Measure> {
        let base = [
            Measure::I,
            Measure::Jc,
            Measure::Jgg,
            Measure::Qgg,
            Measure::Cg,
            Measure::Qg,
        ];
        let mut out = base.to_vec();
        if pair.s1() == SpinNumber::HALF {
            out.extend([Measure::Co, Measure::Qo]);
        }
        out.push(Measure::Fid);
        out
    }
}

pub fn parse_spin(s: &str) -> Result<SpinNumber, CliError> {
    Ok(s.parse::<SpinNumber>()?)
}

pub fn parse_pair(s1: &str, s2: &str) -> Result<PairConfig, CliError> {
    Ok(PairConfig::new(parse_spin(s1)?, parse_spin(s2)?)?)
}

/// Comma-separated measure identifiers.
pub fn parse_measures(list: &str) -> Result<Vec<Measure>, CliError> {
    list.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| Ok(t.parse::<Measure>()?))
        .collect()
}

pub fn parse_units(units: &str, beta: Option<f64>) -> Result<UnitMode, CliError> {
    let mode = match units.to_ascii_lowercase().as_str() {
        "b" => UnitMode::B,
        "figure" => UnitMode::Figure,
        "bits" => {
            let beta =
                beta.ok_or_else(|| CliError::Invalid("--units bits requires --beta".into()))?;
            if !beta.is_finite() || beta <= 0.0 {
                return Err(CliError::Invalid(format!(
                    "--beta must be positive, got {beta}"
                )));
            }
            return Ok(UnitMode::Bits { beta });
        }
        other => {
            return Err(CliError::Invalid(format!(
                "unknown unit mode {other:?} (expected B, bits or figure)"
            )))
        }
    };
    if beta.is_some() {
        return Err(CliError::Invalid(
            "--beta only applies with --units bits".into(),
        ));
    }
    Ok(mode)
}

/// Sweeps behind the three published figures.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FigurePreset {
    /// `I`, `J_C`, `J_GG` in units of `2 B S²` for `S = 3/2` and `9/2`.
    MutualInformation,
    /// `Q_GG/I` and `Q_G/I` for `S = 3/2` and `9/2`.
    PovmFractions,
    /// `Q_O/I` and `Q_G/I` for `S1 = 1/2`, `S2 ∈ {1/2, 3/2, 9/2}`.
    SpinHalfFractions,
}

impl FigurePreset {
    pub fn from_id(id: u8) -> Result<Self, CliError> {
        match id {
            1 => Ok(FigurePreset::MutualInformation),
            2 => Ok(FigurePreset::PovmFractions),
            3 => Ok(FigurePreset::SpinHalfFractions),
            other => Err(CliError::Invalid(format!(
                "unknown figure {other} (expected 1, 2 or 3)"
            ))),
        }
    }

    pub fn id(self) -> u8 {
        match self {
            FigurePreset::MutualInformation => 1,
            FigurePreset::PovmFractions => 2,
            FigurePreset::SpinHalfFractions => 3,
        }
    }

    /// Expands to one sweep per curve family. Each sweep covers one quantum
    /// period unless `tj_max` is given.
    pub fn sweeps(self, steps: usize, tj_max: Option<f64>) -> Result<Vec<SweepConfig>, CliError> {
        let (pairs, measures, unit_mode): (&[(u32, u32)], Vec<Measure>, UnitMode) = match self {
            FigurePreset::MutualInformation => (
                &[(3, 3), (9, 9)],
                vec![Measure::I, Measure::Jc, Measure::Jgg],
                UnitMode::Figure,
            ),
            FigurePreset::PovmFractions => (
                &[(3, 3), (9, 9)],
                vec![Measure::QggRatio, Measure::QgRatio],
                UnitMode::B,
            ),
            FigurePreset::SpinHalfFractions => (
                &[(1, 1), (1, 3), (1, 9)],
                vec![Measure::QoRatio, Measure::QgRatio],
                UnitMode::B,
            ),
        };
        pairs
            .iter()
            .map(|&(a, b)| {
                let pair = PairConfig::new(SpinNumber::from_twice(a), SpinNumber::from_twice(b))?;
                let tj = tj_max.unwrap_or_else(|| SweepConfig::default_tj_max(&pair));
                SweepConfig::new(pair, tj, steps, measures.clone(), unit_mode)
            })
            .collect()
    }
}

impl fmt::Display for FigurePreset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "figure {}", self.id())
    }
}
