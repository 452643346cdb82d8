//! Integral means and Hardy/Bergman norms.
//!
//! M_p(r, f) = ((1/2π) ∫ |f(re^{iθ})|^p dθ)^{1/p} and
//! ‖f‖_{H^p} = sup_{r<1} M_p(r, f). For polynomials the supremum is attained
//! at r = 1, so the Hardy norm is a boundary integral. Bergman norms are
//! quadrature over the disc with normalised area measure dA/π.

use num_complex::Complex64;

use crate::boundary::{default_grid_size, BoundarySamples};
use crate::error::{Error, Result};
use crate::grid::PolarGrid;
use crate::poly::TaylorPoly;

/// M_p(r, f) on an M-point angular grid.
///
/// Exact (to rounding) for even integer p once M exceeds p·degree; spectrally
/// accurate otherwise.
pub fn integral_mean(f: &TaylorPoly, r: f64, p: f64, m: usize) -> Result<f64> {
    if p <= 0.0 {
        return Err(Error::InvalidExponent {
            p,
            constraint: "p > 0",
        });
    }
    assert!((0.0..=1.0).contains(&r), "radius must lie in [0, 1]");
    let scaled = TaylorPoly::new(
        f.coeffs()
            .iter()
            .enumerate()
            .map(|(n, &c)| c * r.powi(n as i32))
            .collect(),
    );
    let samples = BoundarySamples::from_poly(&scaled, m)?;
    Ok(samples.lp_norm(p))
}

/// Radial profile of integral means together with the norm estimate.
#[derive(Debug, Clone)]
pub struct NormReport {
    pub p: f64,
    pub radii: Vec<f64>,
    pub means: Vec<f64>,
    pub norm_estimate: f64,
}

/// ‖f‖_{H^p} with a radial profile of integral means.
///
/// For a polynomial the means increase in r and the supremum is M_p(1, f).
pub fn hardy_norm(f: &TaylorPoly, p: f64) -> Result<NormReport> {
    hardy_norm_with_grid(f, p, default_grid_size(f.degree()))
}

pub fn hardy_norm_with_grid(f: &TaylorPoly, p: f64, m: usize) -> Result<NormReport> {
    let radii: Vec<f64> = (0..=10).map(|i| i as f64 / 10.0).collect();
    let means = radii
        .iter()
        .map(|&r| integral_mean(f, r, p, m))
        .collect::<Result<Vec<_>>>()?;
    let norm_estimate = *means.last().expect("nonempty profile");
    Ok(NormReport {
        p,
        radii,
        means,
        norm_estimate,
    })
}

/// Boundary Hardy norm only (no profile).
pub fn hardy_norm_value(f: &TaylorPoly, p: f64) -> Result<f64> {
    integral_mean(f, 1.0, p, default_grid_size(f.degree()))
}

/// ‖f‖_{A^p} = (∫_𝔻 |f|^p dA/π)^{1/p} by grid quadrature.
pub fn bergman_norm(f: &TaylorPoly, p: f64, grid: &PolarGrid) -> Result<f64> {
    if p <= 0.0 {
        return Err(Error::InvalidExponent {
            p,
            constraint: "p > 0",
        });
    }
    Ok(grid.lp_norm(&f.on_grid(grid), p))
}

/// Checks the isoperimetric-type inequality ‖h‖_{A^{2p}} ≤ ‖h‖_{H^p}.
///
/// Returns (a_norm, h_norm, ok) with ok allowing 1e-9 of quadrature slack.
pub fn check_isoperimetric(h: &TaylorPoly, p: f64, grid: &PolarGrid) -> Result<(f64, f64, bool)> {
    if p <= 0.5 {
        return Err(Error::InvalidExponent {
            p,
            constraint: "p > 1/2",
        });
    }
    let a_norm = bergman_norm(h, 2.0 * p, grid)?;
    let h_norm = hardy_norm_value(h, p)?;
    Ok((a_norm, h_norm, a_norm <= h_norm + 1e-9))
}

/// Sum of squared coefficient moduli (the H² norm squared, by Parseval).
pub fn coeff_energy(f: &TaylorPoly) -> f64 {
    f.coeffs().iter().map(|c| c.norm_sqr()).sum()
}

/// Hardy-space norm of the dual exponent pairing partner p' = p/(p-1).
pub fn conjugate_exponent(p: f64) -> f64 {
    assert!(p > 1.0, "conjugate exponent needs p > 1");
    p / (p - 1.0)
}

/// Pointwise ring-major field |f|^p integrated over the grid, then 1/p root.
pub fn disc_lp_norm_of_values(values: &[Complex64], p: f64, grid: &PolarGrid) -> f64 {
    grid.lp_norm(values, p)
}
