//! Quadrature on the unit disc.
//!
//! `PolarGrid` is a tensor rule: Gauss–Legendre nodes in the radius crossed
//! with a uniform angular grid. Combined weights carry the polar Jacobian and
//! the 1/π normalisation, so `integrate` approximates ∫_𝔻 f dA/π. The plain
//! radial weights are kept separately for integrals in the (r, φ) coordinate
//! measure dr dφ used by the cone quadrature.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Gauss–Legendre nodes and weights on [-1, 1].
///
/// Newton iteration on the three-term recurrence; standard Chebyshev-like
/// initial guesses. Accurate to machine precision for n up to several
/// thousand.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(n >= 1, "quadrature order must be at least 1");
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let m = n.div_ceil(2);
    for i in 0..m {
        // initial guess for the i-th root (descending order)
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            // evaluate P_n(x) and P'_n(x) by recurrence
            let mut p_prev = 1.0;
            let mut p_curr = x;
            for k in 1..n {
                let p_next =
                    ((2 * k + 1) as f64 * x * p_curr - k as f64 * p_prev) / (k + 1) as f64;
                p_prev = p_curr;
                p_curr = p_next;
            }
            dp = n as f64 * (x * p_curr - p_prev) / (x * x - 1.0);
            let dx = p_curr / dp;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    (nodes, weights)
}

/// Gauss–Legendre rule mapped to [a, b].
pub fn gauss_legendre_on(n: usize, a: f64, b: f64) -> (Vec<f64>, Vec<f64>) {
    let (x, w) = gauss_legendre(n);
    let mid = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    (
        x.iter().map(|&t| mid + half * t).collect(),
        w.iter().map(|&wi| wi * half).collect(),
    )
}

/// Tensor quadrature grid on the disc (or an annulus r_lo ≤ |z| ≤ 1).
///
/// Node (i, j) sits at r_i e^{iθ_j} with θ_j = 2πj/n_theta. Fields sampled on
/// the grid are stored ring-major: index i * n_theta + j.
#[derive(Debug, Clone)]
pub struct PolarGrid {
    r_lo: f64,
    r_nodes: Vec<f64>,
    r_weights: Vec<f64>,
    n_theta: usize,
}

impl PolarGrid {
    /// Grid covering the whole disc.
    pub fn new(n_r: usize, n_theta: usize) -> Result<Self> {
        Self::annulus(n_r, n_theta, 0.0)
    }

    /// Grid covering the annulus r_lo ≤ |z| ≤ 1.
    ///
    /// The radial rule is Gauss–Legendre on [r_lo, 1], so a positive cutoff
    /// keeps full quadrature accuracy (dropping nodes from a [0, 1] rule
    /// would cost several digits).
    pub fn annulus(n_r: usize, n_theta: usize, r_lo: f64) -> Result<Self> {
        Self::on_radial_interval(n_r, n_theta, r_lo, 1.0)
    }

    /// Grid whose radial rule covers [r_lo, r_hi] ⊆ [0, 1].
    pub fn on_radial_interval(n_r: usize, n_theta: usize, r_lo: f64, r_hi: f64) -> Result<Self> {
        if !n_theta.is_power_of_two() {
            return Err(Error::GridNotPowerOfTwo { m: n_theta });
        }
        assert!(
            0.0 <= r_lo && r_lo < r_hi && r_hi <= 1.0,
            "radial interval must satisfy 0 ≤ r_lo < r_hi ≤ 1"
        );
        let (r_nodes, r_weights) = gauss_legendre_on(n_r, r_lo, r_hi);
        Ok(Self {
            r_lo,
            r_nodes,
            r_weights,
            n_theta,
        })
    }

    pub fn r_lo(&self) -> f64 {
        self.r_lo
    }

    pub fn n_r(&self) -> usize {
        self.r_nodes.len()
    }

    pub fn n_theta(&self) -> usize {
        self.n_theta
    }

    pub fn r_nodes(&self) -> &[f64] {
        &self.r_nodes
    }

    /// Plain Gauss–Legendre radial weights (measure dr on [r_lo, 1]).
    pub fn r_weights(&self) -> &[f64] {
        &self.r_weights
    }

    pub fn theta(&self, j: usize) -> f64 {
        2.0 * std::f64::consts::PI * j as f64 / self.n_theta as f64
    }

    pub fn node(&self, i: usize, j: usize) -> Complex64 {
        Complex64::from_polar(self.r_nodes[i], self.theta(j))
    }

    /// Combined weight of node (i, j) for ∫_𝔻 f dA/π.
    ///
    /// dA/π = (1/π) r dr dθ, and the uniform θ-sum carries weight 2π/n_theta,
    /// so the combined weight is 2 r_i w_i / n_theta.
    pub fn area_weight(&self, i: usize) -> f64 {
        2.0 * self.r_nodes[i] * self.r_weights[i] / self.n_theta as f64
    }

    /// ∫_𝔻 f dA/π for a field sampled ring-major on this grid.
    pub fn integrate(&self, values: &[Complex64]) -> Complex64 {
        assert_eq!(values.len(), self.n_r() * self.n_theta);
        let mut total = Complex64::new(0.0, 0.0);
        for i in 0..self.n_r() {
            let mut ring = Complex64::new(0.0, 0.0);
            for j in 0..self.n_theta {
                ring += values[i * self.n_theta + j];
            }
            total += self.area_weight(i) * ring;
        }
        total
    }

    /// (∫_𝔻 |f|^p dA/π)^{1/p} for a field sampled ring-major on this grid.
    pub fn lp_norm(&self, values: &[Complex64], p: f64) -> f64 {
        assert!(p > 0.0);
        assert_eq!(values.len(), self.n_r() * self.n_theta);
        let mut total = 0.0;
        for i in 0..self.n_r() {
            let mut ring = 0.0;
            for j in 0..self.n_theta {
                ring += values[i * self.n_theta + j].norm().powf(p);
            }
            total += self.area_weight(i) * ring;
        }
        total.powf(1.0 / p)
    }
}
