//! Bergman and Szegő projections.
//!
//! The Bergman projection 𝒫 maps L¹(𝔻) onto analytic functions; against the
//! reproducing kernel it reads 𝒫(f)(z) = ∫ f(w) (1 - z w̄)^{-2} dA(w)/π. Two
//! independent computational routes are provided and cross-tested:
//!
//! * a closed-form rule on monomials z^a z̄^b (exact),
//! * coefficient extraction by quadrature, coeff n = (n+1)·⟨f, zⁿ⟩_{dA/π},
//!
//! plus direct pointwise quadrature of the kernel integral for use as an
//! oracle. The kernel is never expanded near |z w̄| → 1; the moment route is
//! exact for polynomial data and has no singularity at all.
//!
//! The Szegő projection P_S keeps the nonnegative part of the boundary
//! Fourier spectrum (frequency 0 included, so membership in the subspace
//! vanishing at the origin is the single constraint c₀ = 0).

use num_complex::Complex64;

use crate::boundary::BoundarySamples;
use crate::error::{Error, Result};
use crate::grid::PolarGrid;
use crate::poly::{TaylorPoly, ZzbarPoly};

/// Exact Bergman projection of the monomial z^a z̄^b:
/// ((a-b+1)/(a+1)) z^{a-b} for a ≥ b, zero otherwise.
pub fn bergman_project_monomial(a: usize, b: usize) -> TaylorPoly {
    if a < b {
        return TaylorPoly::zero();
    }
    let factor = (a - b + 1) as f64 / (a + 1) as f64;
    TaylorPoly::monomial(a - b).scale(Complex64::new(factor, 0.0))
}

/// Exact Bergman projection of a polynomial in z and z̄ (term-by-term rule).
pub fn bergman_project_zzbar(f: &ZzbarPoly) -> TaylorPoly {
    let mut out = TaylorPoly::zero();
    for (a, b, c) in f.terms() {
        out = out.add(&bergman_project_monomial(a, b).scale(c));
    }
    out
}

/// Bergman projection of grid samples, truncated at degree `n_max`.
///
/// Coefficient n is (n+1)·⟨f, zⁿ⟩_{dA/π}; the angular inner products are one
/// FFT per ring.
pub fn bergman_project(
    values: &[Complex64],
    grid: &PolarGrid,
    n_max: usize,
) -> Result<TaylorPoly> {
    let m = grid.n_theta();
    if n_max >= m / 2 {
        return Err(Error::DegreeExceedsGrid {
            requested: n_max,
            max: m / 2 - 1,
        });
    }
    assert_eq!(values.len(), grid.n_r() * m);
    let fft = rustfft::FftPlanner::new().plan_fft_forward(m);
    let mut moments = vec![Complex64::new(0.0, 0.0); n_max + 1];
    let mut ring = vec![Complex64::new(0.0, 0.0); m];
    for i in 0..grid.n_r() {
        ring.copy_from_slice(&values[i * m..(i + 1) * m]);
        fft.process(&mut ring);
        let w = grid.area_weight(i);
        let r = grid.r_nodes()[i];
        let mut rn = 1.0;
        for (n, moment) in moments.iter_mut().enumerate() {
            // bin n of the unnormalised forward FFT is Σ_j f_ij e^{-inθ_j};
            // the per-angle 1/M factor is already inside area_weight.
            *moment += w * rn * ring[n];
            rn *= r;
        }
    }
    Ok(TaylorPoly::new(
        moments
            .into_iter()
            .enumerate()
            .map(|(n, mom)| mom * (n as f64 + 1.0))
            .collect(),
    ))
}

/// Pointwise Bergman projection by direct quadrature of the kernel integral.
///
/// Oracle route: ∫ f(w) (1 - z w̄)^{-2} dA(w)/π summed over the grid. Keep
/// |z| well inside the disc; the outermost quadrature ring approaches |w| = 1.
pub fn bergman_project_kernel_quadrature(
    values: &[Complex64],
    grid: &PolarGrid,
    z: Complex64,
) -> Complex64 {
    assert_eq!(values.len(), grid.n_r() * grid.n_theta());
    let mut total = Complex64::new(0.0, 0.0);
    for i in 0..grid.n_r() {
        let w = grid.area_weight(i);
        let mut ring = Complex64::new(0.0, 0.0);
        for j in 0..grid.n_theta() {
            let node = grid.node(i, j);
            let denom = Complex64::new(1.0, 0.0) - z * node.conj();
            ring += values[i * grid.n_theta() + j] / (denom * denom);
        }
        total += w * ring;
    }
    total
}

/// Orthogonal projection onto polynomials of degree ≤ n (Fourier truncation).
pub fn truncated_projection(f: &BoundarySamples, n: usize) -> TaylorPoly {
    assert!(n < f.len() / 2, "truncation degree must be below Nyquist");
    f.fourier().analytic_part(n)
}

/// Szegő projection: keeps frequencies 0..=M/2 of the samples.
pub fn szego_project(f: &BoundarySamples) -> TaylorPoly {
    f.fourier().analytic_part(f.len() / 2)
}

/// Szegő projection returned as samples on the same grid.
pub fn szego_project_samples(f: &BoundarySamples) -> BoundarySamples {
    let m = f.len() as i64;
    f.fourier().filter(|n| n >= 0 && n <= m / 2).to_samples()
}

/// Co-projection P_S^⊥ = I - P_S: the negative-frequency part, as samples.
pub fn szego_coproject(f: &BoundarySamples) -> BoundarySamples {
    f.fourier().filter(|n| n < 0).to_samples()
}

/// Max of ‖P_S f‖_p / ‖f‖_p over a corpus, against the bound csc(π/p).
pub fn szego_norm_check(corpus: &[BoundarySamples], p: f64) -> (f64, f64, bool) {
    assert!(p > 1.0);
    let bound = 1.0 / (std::f64::consts::PI / p).sin();
    let mut max_ratio = 0.0_f64;
    for f in corpus {
        let denom = f.lp_norm(p);
        if denom == 0.0 {
            continue;
        }
        let ratio = szego_project_samples(f).lp_norm(p) / denom;
        max_ratio = max_ratio.max(ratio);
    }
    (max_ratio, bound, max_ratio <= bound + 1e-8)
}
