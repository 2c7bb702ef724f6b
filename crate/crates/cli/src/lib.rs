//! Sweeps, figure presets and output formats behind the `spincorr` binary.

pub mod config;
pub mod output;

use thiserror::Error;

use spincorr::{DimensionlessTime, MeasureSeries};

pub use config::{FigurePreset, Format, SweepConfig};

#[derive(Debug, Error)]
pub enum CliError {
    /// Bad user input; reported with exit code 2.
    #[error("{0}")]
    Invalid(String),
    #[error(transparent)]
    Core(#[from] spincorr::Error),
    #[error("csv output failed: {0}")]
    Csv(#[from] csv::Error),
    #[error("json output failed: {0}")]
    Json(#[from] serde_json::Error),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    /// Whether the error stems from invalid input rather than a runtime failure.
    pub fn is_usage(&self) -> bool {
        matches!(self, CliError::Invalid(_) | CliError::Core(_))
    }
}

/// Evaluates the configured measures on the uniform `tJ` grid.
pub fn run_sweep(cfg: &SweepConfig) -> Result<MeasureSeries, CliError> {
    let taus = DimensionlessTime::grid(&cfg.pair, cfg.tj_max, cfg.steps);
    Ok(MeasureSeries::evaluate(
        cfg.pair,
        taus,
        &cfg.measures,
        cfg.unit_mode,
    )?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use spincorr::{Measure, SpinNumber, UnitMode};

    #[test]
    fn degenerate_grid_repeats_the_origin() {
        let pair = config::parse_pair("3/2", "3/2").unwrap();
        let cfg = SweepConfig::new(
            pair,
            0.0,
            2,
            vec![Measure::I, Measure::Jgg, Measure::Fid],
            UnitMode::B,
        )
        .unwrap();
        let s = run_sweep(&cfg).unwrap();
        assert_eq!(s.column(Measure::I).unwrap(), &[0.0, 0.0]);
        assert_eq!(s.column(Measure::Jgg).unwrap(), &[0.0, 0.0]);
        assert_eq!(s.column(Measure::Fid).unwrap(), &[1.0, 1.0]);
        assert_eq!(s.cfg.s1(), SpinNumber::from_twice(3));
    }
}
