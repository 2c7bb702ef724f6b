//! Cyclic Jacobi diagonalisation of dense Hermitian matrices.

use num_complex::Complex64;

use crate::spin_core::ComplexMatrix;

const THRESHOLD: f64 = 1e-13;
const MAX_SWEEPS: usize = 30;

/// Eigen-decomposition `A = V diag(λ) V†`; column `k` of `vectors` pairs with `values[k]`.
#[derive(Clone, Debug)]
pub struct HermitianEigen {
    pub values: Vec<f64>,
    pub vectors: ComplexMatrix,
    pub sweeps: usize,
    /// Frobenius norm of the off-diagonal remainder at exit.
    pub off_diagonal: f64,
}

impl HermitianEigen {
    /// `V diag(λ) V†`.
    pub fn reconstruct(&self) -> ComplexMatrix {
        let n = self.values.len();
        let v = &self.vectors;
        ComplexMatrix::from_fn(n, |i, j| {
            (0..n)
                .map(|k| v[(i, k)] * self.values[k] * v[(j, k)].conj())
                .sum()
        })
    }
}

fn off_diagonal_norm(a: &ComplexMatrix) -> f64 {
    let n = a.dim();
    let mut acc = 0.0;
    for i in 0..n {
        for j in (i + 1)..n {
            acc += 2.0 * a[(i, j)].norm_sqr();
        }
    }
    acc.sqrt()
}

/// Diagonalises a Hermitian matrix. Only the Hermitian part of `input` is meaningful.
pub fn hermitian_eigen(input: &ComplexMatrix) -> HermitianEigen {
    let n = input.dim();
    let mut a = input.clone();
    let mut v = ComplexMatrix::identity(n);
    let target = THRESHOLD * a.frobenius_norm();

    let sweep = |a: &mut ComplexMatrix, v: &mut ComplexMatrix| {
        for p in 0..n {
            for q in (p + 1)..n {
                rotate(a, v, p, q);
            }
        }
    };

    let mut sweeps = 0;
    let mut off = off_diagonal_norm(&a);
    while off > target && sweeps < MAX_SWEEPS {
        sweeps += 1;
        sweep(&mut a, &mut v);
        off = off_diagonal_norm(&a);
    }
    // Convergence is quadratic: one more pass takes the remainder to round-off.
    if sweeps > 0 && off > 0.0 {
        sweeps += 1;
        sweep(&mut a, &mut v);
        off = off_diagonal_norm(&a);
    }

    HermitianEigen {
        values: (0..n).map(|i| a[(i, i)].re).collect(),
        vectors: v,
        sweeps,
        off_diagonal: off,
    }
}

/// Eigenvalues only, ascending.
pub fn hermitian_eigenvalues(input: &ComplexMatrix) -> Vec<f64> {
    let mut values = hermitian_eigen(input).values;
    values.sort_by(f64::total_cmp);
    values
}

/// Annihilates `a[p][q]` with the unitary `G = diag-phase · R(θ)`:
/// columns `p, q` of `G` are `(c, -s e^{-iα})` and `(s, c e^{-iα})` where
/// `a[p][q] = |a[p][q]| e^{iα}`.
fn rotate(a: &mut ComplexMatrix, v: &mut ComplexMatrix, p: usize, q: usize) {
    let apq = a[(p, q)];
    let r = apq.norm();
    if r == 0.0 {
        return;
    }
    let app = a[(p, p)].re;
    let aqq = a[(q, q)].re;
    let phase = apq / r;
    let phase_conj = phase.conj();

    let theta = (aqq - app) / (2.0 * r);
    let t = if theta.abs() > 1e150 {
        0.5 / theta
    } else {
        theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
    };
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;

    let n = a.dim();
    // A <- A G
    for k in 0..n {
        let akp = a[(k, p)];
        let akq = a[(k, q)];
        a[(k, p)] = akp * c - akq * phase_conj * s;
        a[(k, q)] = akp * s + akq * phase_conj * c;
    }
    // A <- G† A
    for k in 0..n {
        let apk = a[(p, k)];
        let aqk = a[(q, k)];
        a[(p, k)] = apk * c - aqk * phase * s;
        a[(q, k)] = apk * s + aqk * phase * c;
    }
    a[(p, q)] = Complex64::new(0.0, 0.0);
    a[(q, p)] = Complex64::new(0.0, 0.0);
    a[(p, p)] = Complex64::new(app - t * r, 0.0);
    a[(q, q)] = Complex64::new(aqq + t * r, 0.0);

    for k in 0..n {
        let vkp = v[(k, p)];
        let vkq = v[(k, q)];
        v[(k, p)] = vkp * c - vkq * phase_conj * s;
        v[(k, q)] = vkp * s + vkq * phase_conj * c;
    }
}
