//! Closed-form high-temperature correlation measures of the coupled pair.
//!
//! Every mutual information and classical/quantum part is returned in units of
//! `B = β²/(6 ln 2)`; `β` only enters through [`UnitMode::Bits`]. Time is the
//! dimensionless `τ = tJ/S2`, so one quantum period is `τ = 2π`.

pub mod asymptotics;
pub mod correlations;
pub mod kernels;
pub mod pair;
pub mod series;

pub use asymptotics::{
    midpoint_ratios, midpoint_ratios_large_spin, q_orth_minimum_large_spin, quadratic_coefficient,
    short_time_asymptotics, small_time_ratios, small_time_ratios_large_spin, MidpointRatios,
    ShortTimeCoefficients, SmallTimeRatios,
};
pub use correlations::{
    c_orth, c_povm_one, classical_density, fid, mutual_info_classical, mutual_info_povm,
    mutual_info_quantum, povm_density, q_orth, q_povm_both, q_povm_one,
};
pub use kernels::{f, g, g_classical, xi, XiSign};
pub use pair::{DimensionlessTime, PairConfig};
pub use series::{Measure, MeasureSeries, UnitMode};
