//! Product quadrature on the unit sphere: Gauss-Legendre in `cos θ`, uniform in `φ`.

use std::f64::consts::{PI, TAU};

use crate::measures::kernels::CompensatedSum;
use crate::spin_core::BlochPoint;

pub const DEFAULT_N_THETA: usize = 64;
pub const DEFAULT_N_PHI: usize = 128;

/// Gauss-Legendre nodes and weights on `[-1, 1]`, nodes ascending.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    for i in 0..n.div_ceil(2) {
        // Tricomi's initial guess, then Newton on P_n.
        let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (p, d) = legendre_with_derivative(n, x);
            dp = d;
            let dx = p / d;
            x -= dx;
            if dx.abs() <= 1e-16 * x.abs().max(1.0) {
                let (_, d) = legendre_with_derivative(n, x);
                dp = d;
                break;
            }
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    if n % 2 == 1 {
        nodes[n / 2] = 0.0;
    }
    (nodes, weights)
}

fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let (mut p0, mut p1) = (1.0, x);
    if n == 0 {
        return (1.0, 0.0);
    }
    for k in 2..=n {
        let k = k as f64;
        let p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    let n = n as f64;
    (p1, n * (x * p1 - p0) / (x * x - 1.0))
}

/// One quadrature node on the sphere.
#[derive(Clone, Copy, Debug)]
pub struct SphereNode {
    pub point: BlochPoint,
    pub cos_theta: f64,
    pub sin_theta: f64,
    pub weight: f64,
}

/// Sphere rule with `n_theta` Gauss-Legendre nodes in `cos θ` and `n_phi`
/// uniformly spaced azimuths.
#[derive(Clone, Debug)]
pub struct QuadratureRule {
    n_theta: usize,
    n_phi: usize,
    cos_nodes: Vec<f64>,
    cos_weights: Vec<f64>,
}

impl Default for QuadratureRule {
    fn default() -> Self {
        Self::new(DEFAULT_N_THETA, DEFAULT_N_PHI)
    }
}

impl QuadratureRule {
    pub fn new(n_theta: usize, n_phi: usize) -> Self {
        assert!(
            n_theta > 0 && n_phi > 0,
            "quadrature orders must be positive"
        );
        let (cos_nodes, cos_weights) = gauss_legendre(n_theta);
        QuadratureRule {
            n_theta,
            n_phi,
            cos_nodes,
            cos_weights,
        }
    }

    /// The same rule with both orders doubled.
    pub fn refined(&self) -> Self {
        Self::new(2 * self.n_theta, 2 * self.n_phi)
    }

    pub fn n_theta(&self) -> usize {
        self.n_theta
    }

    pub fn n_phi(&self) -> usize {
        self.n_phi
    }

    pub fn cos_nodes(&self) -> &[f64] {
        &self.cos_nodes
    }

    pub fn cos_weights(&self) -> &[f64] {
        &self.cos_weights
    }

    /// Polar angles of the Gauss-Legendre nodes.
    pub fn thetas(&self) -> Vec<f64> {
        self.cos_nodes.iter().map(|x| x.acos()).collect()
    }

    pub fn phis(&self) -> Vec<f64> {
        (0..self.n_phi)
            .map(|j| TAU * j as f64 / self.n_phi as f64)
            .collect()
    }

    pub fn phi_weight(&self) -> f64 {
        TAU / self.n_phi as f64
    }

    /// `∫_{-1}^{1} f(x) dx`.
    pub fn integrate_cos_theta(&self, f: impl Fn(f64) -> f64) -> f64 {
        let sum: CompensatedSum = self
            .cos_nodes
            .iter()
            .zip(&self.cos_weights)
            .map(|(&x, &w)| w * f(x))
            .collect();
        sum.total()
    }

    /// All nodes, `θ`-major.
    pub fn nodes(&self) -> Vec<SphereNode> {
        let phis = self.phis();
        let wphi = self.phi_weight();
        let mut out = Vec::with_capacity(self.n_theta * self.n_phi);
        for (&x, &w) in self.cos_nodes.iter().zip(&self.cos_weights) {
            let theta = x.acos();
            for &phi in &phis {
                out.push(SphereNode {
                    point: BlochPoint::new(theta, phi).expect("quadrature node inside the sphere"),
                    cos_theta: x,
                    sin_theta: (1.0 - x * x).sqrt(),
                    weight: w * wphi,
                });
            }
        }
        out
    }

    /// `∮ f sin θ dθ dφ`.
    pub fn integrate_sphere(&self, f: impl Fn(BlochPoint) -> f64) -> f64 {
        let sum: CompensatedSum = self.nodes().iter().map(|n| n.weight * f(n.point)).collect();
        sum.total()
    }
}
