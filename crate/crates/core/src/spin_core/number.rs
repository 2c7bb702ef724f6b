use std::fmt;
use std::str::FromStr;

use statrs::function::factorial::ln_binomial;

use crate::error::{Error, Result};

/// Largest `n` for which binomial coefficients are formed in integer arithmetic.
const EXACT_BINOMIAL_MAX: u32 = 60;

/// A spin quantum number `S`, stored exactly as the integer `2S`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SpinNumber {
    twice_s: u32,
}

impl SpinNumber {
    pub const HALF: SpinNumber = SpinNumber { twice_s: 1 };

    pub const fn from_twice(twice_s: u32) -> Self {
        SpinNumber { twice_s }
    }

    /// `2S`.
    pub const fn twice(self) -> u32 {
        self.twice_s
    }

    /// `S` as a float.
    pub fn value(self) -> f64 {
        f64::from(self.twice_s) / 2.0
    }

    /// Hilbert space dimension `2S + 1`.
    pub const fn dim(self) -> usize {
        self.twice_s as usize + 1
    }

    /// `S(S + 1)`.
    pub fn casimir(self) -> f64 {
        let s = self.value();
        s * (s + 1.0)
    }

    pub const fn is_integer(self) -> bool {
        self.twice_s.is_multiple_of(2)
    }

    /// `2m` for `m = S, S-1, ..., -S`, in basis order.
    pub fn twice_m_values(self) -> impl Iterator<Item = i64> + Clone {
        let top = i64::from(self.twice_s);
        (0..=top).map(move |i| top - 2 * i)
    }

    /// `m = S, S-1, ..., -S`, in basis order.
    pub fn m_values(self) -> impl Iterator<Item = f64> + Clone {
        self.twice_m_values().map(|tm| tm as f64 / 2.0)
    }

    /// Magnetic quantum number of basis index `i` (index 0 is `m = S`).
    pub fn m_at(self, index: usize) -> f64 {
        (f64::from(self.twice_s) - 2.0 * index as f64) / 2.0
    }
}

impl fmt::Display for SpinNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.twice_s / 2)
        } else {
            write!(f, "{}/2", self.twice_s)
        }
    }
}

impl FromStr for SpinNumber {
    type Err = Error;

    /// Accepts `"3/2"`, `"1.5"`, `"2"`; rejects anything that is not a
    /// non-negative multiple of one half.
    fn from_str(raw: &str) -> Result<Self> {
        let text = raw.trim();
        let invalid = || Error::InvalidSpin(raw.to_string());

        if let Some((num, den)) = text.split_once('/') {
            let num: u64 = num.trim().parse().map_err(|_| invalid())?;
            let den: u64 = den.trim().parse().map_err(|_| invalid())?;
            if den == 0 || !(2 * num).is_multiple_of(den) {
                return Err(invalid());
            }
            let twice = u32::try_from(2 * num / den).map_err(|_| invalid())?;
            return Ok(SpinNumber::from_twice(twice));
        }

        let x: f64 = text.parse().map_err(|_| invalid())?;
        if !x.is_finite() || x < 0.0 {
            return Err(invalid());
        }
        let twice = (2.0 * x).round();
        if (2.0 * x - twice).abs() > 1e-9 || twice > f64::from(u32::MAX) {
            return Err(invalid());
        }
        Ok(SpinNumber::from_twice(twice as u32))
    }
}

/// Binomial coefficient `C(n, k)` as a float. Exact integer arithmetic for
/// `n <= 60`, log-gamma beyond.
pub fn binomial(n: u32, k: u32) -> f64 {
    if k > n {
        return 0.0;
    }
    if n <= EXACT_BINOMIAL_MAX {
        let k = k.min(n - k);
        let mut acc: u128 = 1;
        for i in 0..k {
            acc = acc * u128::from(n - i) / u128::from(i + 1);
        }
        acc as f64
    } else {
        ln_binomial(u64::from(n), u64::from(k)).exp()
    }
}

/// `C(n, k) p^k q^(n-k)` with the convention `0^0 = 1`, safe for large `n`.
pub fn binomial_term(n: u32, k: u32, p: f64, q: f64) -> f64 {
    if k > n {
        return 0.0;
    }
    if n <= EXACT_BINOMIAL_MAX {
        return binomial(n, k) * p.powi(k as i32) * q.powi((n - k) as i32);
    }
    if (p == 0.0 && k > 0) || (q == 0.0 && k < n) {
        return 0.0;
    }
    let mut log = ln_binomial(u64::from(n), u64::from(k));
    if k > 0 {
        log += f64::from(k) * p.ln();
    }
    if k < n {
        log += f64::from(n - k) * q.ln();
    }
    log.exp()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fractions_and_decimals() {
        assert_eq!("3/2".parse::<SpinNumber>().unwrap().twice(), 3);
        assert_eq!("1.5".parse::<SpinNumber>().unwrap().twice(), 3);
        assert_eq!("9/2".parse::<SpinNumber>().unwrap().twice(), 9);
        assert_eq!("2".parse::<SpinNumber>().unwrap().twice(), 4);
        assert_eq!("4/2".parse::<SpinNumber>().unwrap().twice(), 4);
        assert_eq!(" 0.5 ".parse::<SpinNumber>().unwrap(), SpinNumber::HALF);
    }

    #[test]
    fn rejects_non_half_integers() {
        for bad in ["0.3", "-1/2", "-1", "1/3", "x", "", "3/0", "nan", "inf"] {
            assert!(bad.parse::<SpinNumber>().is_err(), "{bad} accepted");
        }
    }

    #[test]
    fn display_round_trips() {
        for twice in 0..12 {
            let s = SpinNumber::from_twice(twice);
            assert_eq!(s.to_string().parse::<SpinNumber>().unwrap(), s);
        }
        assert_eq!(SpinNumber::from_twice(9).to_string(), "9/2");
        assert_eq!(SpinNumber::from_twice(2).to_string(), "1");
    }

    #[test]
    fn m_values_descend_in_unit_steps() {
        let s = SpinNumber::from_twice(3);
        let ms: Vec<f64> = s.m_values().collect();
        assert_eq!(ms, vec![1.5, 0.5, -0.5, -1.5]);
        assert_eq!(s.dim(), 4);
        assert_eq!(s.m_at(3), -1.5);
    }

    #[test]
    fn binomial_exact_and_log_paths_agree() {
        assert_eq!(binomial(4, 2), 6.0);
        assert_eq!(binomial(60, 30), 118264581564861424.0);
        assert_eq!(binomial(5, 7), 0.0);
        let big = binomial(80, 40);
        let exact = 107507208733336176461620.0_f64;
        assert!((big - exact).abs() / exact < 1e-12);
    }

    #[test]
    fn binomial_term_handles_zero_powers() {
        assert_eq!(binomial_term(4, 0, 0.0, 1.0), 1.0);
        assert_eq!(binomial_term(80, 80, 1.0, 0.0), 1.0);
        assert_eq!(binomial_term(80, 3, 0.0, 1.0), 0.0);
        let total: f64 = (0..=90).map(|k| binomial_term(90, k, 0.3, 0.7)).sum();
        assert!((total - 1.0).abs() < 1e-12);
    }
}
