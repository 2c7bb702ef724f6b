//! Spin operators in the Zeeman basis, index 0 ↔ `m = S`.

use num_complex::Complex64;

use super::matrix::ComplexMatrix;
use super::number::SpinNumber;

/// `S_Z = diag(S, S-1, ..., -S)`.
pub fn build_sz(s: SpinNumber) -> ComplexMatrix {
    let diag: Vec<Complex64> = s.m_values().map(|m| Complex64::new(m, 0.0)).collect();
    ComplexMatrix::from_diagonal(&diag)
}

/// Raising operator, `<m+1| S+ |m> = sqrt(S(S+1) - m(m+1))`.
pub fn build_splus(s: SpinNumber) -> ComplexMatrix {
    let mut out = ComplexMatrix::zeros(s.dim());
    let casimir = s.casimir();
    for col in 1..s.dim() {
        let m = s.m_at(col);
        out[(col - 1, col)] = Complex64::new((casimir - m * (m + 1.0)).sqrt(), 0.0);
    }
    out
}

pub fn build_sminus(s: SpinNumber) -> ComplexMatrix {
    build_splus(s).adjoint()
}

/// `S_X = (S+ + S-)/2`.
pub fn build_sx(s: SpinNumber) -> ComplexMatrix {
    let plus = build_splus(s);
    (&plus + &plus.adjoint()).scale_real(0.5)
}

/// `S_Y = (S+ - S-)/(2i)`.
pub fn build_sy(s: SpinNumber) -> ComplexMatrix {
    let plus = build_splus(s);
    (&plus - &plus.adjoint()).scale(Complex64::new(0.0, -0.5))
}

/// `exp(i angle S_Z)`, diagonal.
pub fn sz_phase(s: SpinNumber, angle: f64) -> ComplexMatrix {
    let diag: Vec<Complex64> = s
        .m_values()
        .map(|m| Complex64::from_polar(1.0, angle * m))
        .collect();
    ComplexMatrix::from_diagonal(&diag)
}
