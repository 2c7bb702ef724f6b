//! Removing the polarisation dependence of exact results.

use std::f64::consts::LN_2;

use crate::error::Result;

/// `B = β²/(6 ln 2)`.
pub fn b_unit(beta: f64) -> f64 {
    beta * beta / (6.0 * LN_2)
}

/// `bits / B`.
pub fn in_units_of_b(bits: f64, beta: f64) -> f64 {
    bits / b_unit(beta)
}

/// Values in units of `B` at `β` and `β/2`, combined to cancel the `β²` term.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Extrapolation {
    pub beta: f64,
    pub coarse: f64,
    pub fine: f64,
    pub extrapolated: f64,
}

impl Extrapolation {
    /// `bits` maps a polarisation to a result in bits; results must be even in `β`.
    pub fn run(beta: f64, mut bits: impl FnMut(f64) -> Result<f64>) -> Result<Self> {
        let coarse = in_units_of_b(bits(beta)?, beta);
        let fine = in_units_of_b(bits(beta / 2.0)?, beta / 2.0);
        Ok(Extrapolation {
            beta,
            coarse,
            fine,
            extrapolated: (4.0 * fine - coarse) / 3.0,
        })
    }
}
