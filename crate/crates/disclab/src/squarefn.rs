//! Cone square functions and the nontangential maximal function.
//!
//! The approach region at boundary angle θ is the cone
//! Γ_θ = {(r, φ) : |θ - φ| < (1-r)/2, r_min < r < 1}, and
//! S(G)(e^{iθ})² = ∬_{Γ_θ} |∇G(re^{iφ})|² dr dφ in the (r, φ) coordinate
//! measure (no Jacobian), so the cone has "area" ∫₀¹ (1-r) dr = 1/2.
//!
//! Quadrature: Gauss–Legendre in r (the field's own radial rule) and a
//! composite midpoint rule in φ across the window of width (1-r), with the
//! field evaluated by trigonometric interpolation from its angular samples.
//! Two routes are provided: a direct per-angle evaluation, and a profile
//! route that applies the midpoint rule at every grid angle at once through
//! a per-ring Fourier multiplier. The two are the same sum reordered, and are
//! cross-tested to rounding accuracy.
//!
//! Gradient convention: |∇|F|| = |F'| for analytic F (Euclidean gradient in
//! x, y), hence |∇|F|^s| = s|F|^{s-1}|F'|.

use num_complex::Complex64;
use rustfft::FftPlanner;

use crate::error::{Error, Result};
use crate::grid::PolarGrid;
use crate::lift::lift_value;
use crate::poly::TaylorPoly;

/// Cone quadrature parameters.
///
/// `r_min` is a radial cutoff for the quadrature; with the aperture law
/// (1-r)/2 fixed, the only free geometry is where the cone starts. The
/// cutoff is realised by building the field's grid on [r_min, 1], never by
/// discarding nodes of a [0, 1] rule.
#[derive(Debug, Clone, Copy)]
pub struct ConeSpec {
    pub r_min: f64,
    /// Midpoint nodes per ring in the φ window.
    pub phi_nodes: usize,
}

impl Default for ConeSpec {
    fn default() -> Self {
        Self {
            r_min: 0.0,
            phi_nodes: 16,
        }
    }
}

/// Half-width of the cone window at radius r.
pub fn cone_half_width(r: f64) -> f64 {
    (1.0 - r) / 2.0
}

/// Pointwise nonnegative field on a polar grid (ring-major), e.g. |∂_z f|²
/// or |∇G|².
#[derive(Debug, Clone)]
pub struct GradField {
    grid: PolarGrid,
    values: Vec<f64>,
}

impl GradField {
    pub fn new(grid: PolarGrid, values: Vec<f64>) -> Self {
        assert_eq!(values.len(), grid.n_r() * grid.n_theta());
        Self { grid, values }
    }

    pub fn grid(&self) -> &PolarGrid {
        &self.grid
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Ring Fourier coefficients: bins[i][n] = (1/M) Σ_j field(i, j) e^{-inθ_j}.
    fn ring_spectra(&self) -> Vec<Vec<Complex64>> {
        let m = self.grid.n_theta();
        let fft = FftPlanner::new().plan_fft_forward(m);
        (0..self.grid.n_r())
            .map(|i| {
                let mut buf: Vec<Complex64> = self.values[i * m..(i + 1) * m]
                    .iter()
                    .map(|&v| Complex64::new(v, 0.0))
                    .collect();
                fft.process(&mut buf);
                for v in &mut buf {
                    *v /= m as f64;
                }
                buf
            })
            .collect()
    }
}

/// |∇|F|^s|² = (s |F|^{s-1} |F'|)² on the grid.
///
/// A node counts as a zero of F when |F| falls below 1e-13 of the
/// coefficient scale. Such nodes are rejected for s < 1 (the field is
/// singular there); for s ≥ 1 they contribute the continuous limit.
pub fn grad_modulus_power(f: &TaylorPoly, s: f64, grid: &PolarGrid) -> Result<GradField> {
    assert!(s > 0.0, "exponent must be positive");
    let fv = f.on_grid(grid);
    let dv = f.derivative().on_grid(grid);
    let m = grid.n_theta();
    let scale = f.coeffs().iter().map(|c| c.norm()).fold(0.0, f64::max);
    let vanish = 1e-13 * scale;
    let mut values = Vec::with_capacity(fv.len());
    for (idx, (w, d)) in fv.iter().zip(&dv).enumerate() {
        let modulus = w.norm();
        if modulus <= vanish {
            if s < 1.0 {
                return Err(Error::VanishingAtNode {
                    r: grid.r_nodes()[idx / m],
                    theta: grid.theta(idx % m),
                    s,
                });
            }
            let g = if s == 1.0 { d.norm() } else { 0.0 };
            values.push(g * g);
        } else {
            let g = s * modulus.powf(s - 1.0) * d.norm();
            values.push(g * g);
        }
    }
    Ok(GradField::new(grid.clone(), values))
}

/// |∂_z f|² for the lift f = |F|^{p-2} F: ∂_z f = (p/2)|F|^{p-2} F'.
pub fn lift_dz_field(f: &TaylorPoly, p: f64, grid: &PolarGrid) -> Result<GradField> {
    assert!(p > 1.0);
    let fv = f.on_grid(grid);
    let dv = f.derivative().on_grid(grid);
    let m = grid.n_theta();
    let scale = f.coeffs().iter().map(|c| c.norm()).fold(0.0, f64::max);
    let vanish = 1e-13 * scale;
    let mut values = Vec::with_capacity(fv.len());
    for (idx, (w, d)) in fv.iter().zip(&dv).enumerate() {
        let modulus = w.norm();
        if modulus <= vanish {
            if p < 2.0 {
                return Err(Error::VanishingAtNode {
                    r: grid.r_nodes()[idx / m],
                    theta: grid.theta(idx % m),
                    s: p - 2.0,
                });
            }
            let g = if p == 2.0 { 0.5 * p * d.norm() } else { 0.0 };
            values.push(g * g);
        } else {
            let g = 0.5 * p * modulus.powf(p - 2.0) * d.norm();
            values.push(g * g);
        }
    }
    Ok(GradField::new(grid.clone(), values))
}

/// Midpoint-rule window multiplier: the φ-window integral of e^{inφ} over
/// width 2w by a K-point composite midpoint rule equals
/// (2w/K) sin(nw)/sin(nw/K) times e^{inθ} at the window centre θ.
fn midpoint_multiplier(n: f64, w: f64, k: usize) -> f64 {
    if n == 0.0 {
        return 2.0 * w;
    }
    let x = n * w / k as f64;
    let den = x.sin();
    if den.abs() < 1e-12 {
        // near x = mπ both sin(Kx) and sin(x) vanish; the ratio tends to
        // K cos(Kx)/cos(x) = ±K
        let ratio = k as f64 * (k as f64 * x).cos() / x.cos();
        (2.0 * w / k as f64) * ratio
    } else {
        (2.0 * w / k as f64) * (n * w).sin() / den
    }
}

/// Square function at a single boundary angle: direct midpoint-in-φ route.
///
/// Per ring, K midpoints are placed across the window |φ-θ| < (1-r)/2 and
/// the field is evaluated there by trigonometric interpolation (frequencies
/// |n| < M/2; the Nyquist bin is dropped).
pub fn square_function(field: &GradField, theta: f64, cone: &ConeSpec) -> f64 {
    let grid = field.grid();
    let m = grid.n_theta();
    let k = cone.phi_nodes;
    let spectra = field.ring_spectra();
    let mut total = 0.0;
    for (i, spec) in spectra.iter().enumerate() {
        let r = grid.r_nodes()[i];
        if r < cone.r_min {
            continue;
        }
        let w = cone_half_width(r);
        let step = 2.0 * w / k as f64;
        let mut window = 0.0;
        for j in 0..k {
            let phi = theta - w + (j as f64 + 0.5) * step;
            // Σ_{|n| < M/2} c_n e^{inφ}, using conjugate symmetry of the
            // real field: c_{-n} = conj(c_n)
            let mut val = spec[0].re;
            for (n, c) in spec.iter().enumerate().take(m / 2).skip(1) {
                let e = Complex64::from_polar(1.0, n as f64 * phi);
                val += 2.0 * (c * e).re;
            }
            window += val;
        }
        total += grid.r_weights()[i] * step * window;
    }
    total.max(0.0).sqrt()
}

/// Square function at every grid angle at once (multiplier route).
///
/// Applies the midpoint window rule spectrally: one forward and one inverse
/// FFT per ring. Identical to `square_function` at grid angles up to
/// rounding.
pub fn square_function_profile(field: &GradField, cone: &ConeSpec) -> Vec<f64> {
    let grid = field.grid();
    let m = grid.n_theta();
    let fft_fwd = FftPlanner::new().plan_fft_forward(m);
    let fft_inv = FftPlanner::new().plan_fft_inverse(m);
    let mut s2 = vec![0.0; m];
    let mut buf = vec![Complex64::new(0.0, 0.0); m];
    for i in 0..grid.n_r() {
        let r = grid.r_nodes()[i];
        if r < cone.r_min {
            continue;
        }
        for (j, v) in buf.iter_mut().enumerate() {
            *v = Complex64::new(field.values()[i * m + j], 0.0);
        }
        fft_fwd.process(&mut buf);
        let w = cone_half_width(r);
        for (bin, v) in buf.iter_mut().enumerate() {
            let n = if bin <= m / 2 {
                bin as i64
            } else {
                bin as i64 - m as i64
            };
            if n.unsigned_abs() as usize >= m / 2 {
                *v = Complex64::new(0.0, 0.0); // drop Nyquist, matching the direct route
            } else {
                *v *= midpoint_multiplier(n as f64, w, cone.phi_nodes) / m as f64;
            }
        }
        fft_inv.process(&mut buf);
        let rw = grid.r_weights()[i];
        for (j, acc) in s2.iter_mut().enumerate() {
            *acc += rw * buf[j].re;
        }
    }
    s2.into_iter().map(|v| v.max(0.0).sqrt()).collect()
}

/// S_z at a single angle for a precomputed |∂_z f|² field.
pub fn square_function_sz(dz_field: &GradField, theta: f64, cone: &ConeSpec) -> f64 {
    square_function(dz_field, theta, cone)
}

/// Nontangential maximal function: sup of |h| over the cone at θ,
/// including the boundary limit node at (r → 1, φ = θ).
pub fn nontangential_max(h: &TaylorPoly, theta: f64, grid: &PolarGrid, cone: &ConeSpec) -> f64 {
    let mut best = h.eval(Complex64::from_polar(1.0, theta)).norm();
    let m = grid.n_theta();
    let two_pi = 2.0 * std::f64::consts::PI;
    for (i, &r) in grid.r_nodes().iter().enumerate() {
        if r < cone.r_min {
            continue;
        }
        let w = cone_half_width(r);
        for j in 0..m {
            let mut d = (grid.theta(j) - theta) % two_pi;
            if d > std::f64::consts::PI {
                d -= two_pi;
            } else if d < -std::f64::consts::PI {
                d += two_pi;
            }
            if d.abs() < w {
                best = best.max(h.eval(grid.node(i, j)).norm());
            }
        }
    }
    best
}

/// Nontangential maximal function at every grid angle.
pub fn nontangential_max_profile(h: &TaylorPoly, grid: &PolarGrid, cone: &ConeSpec) -> Vec<f64> {
    let m = grid.n_theta();
    let hv = h.on_grid(grid);
    let mut out: Vec<f64> = (0..m)
        .map(|j| h.eval(Complex64::from_polar(1.0, grid.theta(j))).norm())
        .collect();
    let dtheta = 2.0 * std::f64::consts::PI / m as f64;
    for (i, &r) in grid.r_nodes().iter().enumerate() {
        if r < cone.r_min {
            continue;
        }
        let w = cone_half_width(r);
        // node at angle index j lies in the cone of every θ_l with
        // |j - l|·dθ < w (mod m)
        let reach = ((w / dtheta).ceil() as usize).min(m / 2);
        for j in 0..m {
            let v = hv[i * m + j].norm();
            for off in 0..=reach {
                if off as f64 * dtheta >= w {
                    break;
                }
                let l_plus = (j + off) % m;
                let l_minus = (j + m - off) % m;
                if v > out[l_plus] {
                    out[l_plus] = v;
                }
                if v > out[l_minus] {
                    out[l_minus] = v;
                }
            }
        }
    }
    out
}

/// Result of a Calderón ratio computation for G = |F|^δ.
#[derive(Debug, Clone)]
pub struct CalderonRatios {
    /// ‖S(G)‖_p / ‖G‖_p (empirical lower bound for C_{p,δ}).
    pub ratio_upper: f64,
    /// ‖G‖_p / ‖S(G)‖_p, reported only when F(0) = 0.
    pub ratio_lower: Option<f64>,
    pub s_norm: f64,
    pub g_norm: f64,
}

/// Calderón ratios for G = |F|^δ in boundary L^p norms.
///
/// The square-function profile is integrated over the cone starting at
/// `cone.r_min`. For δ < 1 with F(0) = 0 the full cone integral diverges at
/// the origin (the field grows like 1/r against the measure dr dφ), so
/// sweeps over such data should use a positive cutoff.
pub fn calderon_ratios(
    f: &TaylorPoly,
    delta: f64,
    p: f64,
    n_r: usize,
    n_theta: usize,
    cone: &ConeSpec,
) -> Result<CalderonRatios> {
    assert!(delta > 0.0 && p > 0.0);
    if f.is_zero() {
        return Err(Error::ZeroKernel);
    }
    let grid = PolarGrid::annulus(n_r, n_theta, cone.r_min)?;
    let field = grad_modulus_power(f, delta, &grid)?;
    let profile = square_function_profile(&field, cone);
    let s_norm = profile_lp_norm(&profile, p);
    // ‖G‖_p = ((1/2π) ∫ |F|^{δp} dθ)^{1/p}
    let boundary = crate::boundary::BoundarySamples::from_poly(f, n_theta)?;
    let mean: f64 = boundary
        .values()
        .iter()
        .map(|v| v.norm().powf(delta * p))
        .sum::<f64>()
        / n_theta as f64;
    let g_norm = mean.powf(1.0 / p);
    let ratio_upper = s_norm / g_norm;
    let ratio_lower = (f.coeff(0).norm() == 0.0).then(|| g_norm / s_norm);
    Ok(CalderonRatios {
        ratio_upper,
        ratio_lower,
        s_norm,
        g_norm,
    })
}

/// ((1/2π) ∫ profile^p dθ)^{1/p} over the uniform angular grid.
pub fn profile_lp_norm(profile: &[f64], p: f64) -> f64 {
    let mean: f64 = profile.iter().map(|v| v.powf(p)).sum::<f64>() / profile.len() as f64;
    mean.powf(1.0 / p)
}

/// Max relative error of |∂_z f| = (p/2)|F|^{p-2}|F'| for f = |F|^{p-2}F,
/// with ∂_z f measured by centred finite differences in x and y.
///
/// Checked on the annulus 0.1 ≤ r ≤ 0.9 with step h = 1e-4 to keep the
/// stencil off the boundary.
pub fn lift_sz_identity_check(f: &TaylorPoly, p: f64) -> Result<f64> {
    assert!(p > 1.0);
    let h = 1e-4;
    let df = f.derivative();
    let mut max_rel = 0.0_f64;
    for i in 0..12 {
        let r = 0.1 + 0.8 * i as f64 / 11.0;
        for j in 0..24 {
            let theta = 2.0 * std::f64::consts::PI * j as f64 / 24.0;
            let z = Complex64::from_polar(r, theta);
            let fz = f.eval(z);
            if fz.norm() < 1e-8 && p < 2.0 {
                continue;
            }
            let lift_at = |w: Complex64| lift_value(f.eval(w), p);
            let fx = (lift_at(z + h) - lift_at(z - h)) / (2.0 * h);
            let fy = (lift_at(z + Complex64::new(0.0, h)) - lift_at(z - Complex64::new(0.0, h)))
                / (2.0 * h);
            let dz = 0.5 * (fx - Complex64::new(0.0, 1.0) * fy);
            let expect = 0.5 * p * fz.norm().powf(p - 2.0) * df.eval(z).norm();
            let scale = expect.abs().max(1e-12);
            max_rel = max_rel.max((dz.norm() - expect).abs() / scale);
        }
    }
    Ok(max_rel)
}

/// ‖S_z(f)‖_p for the lift of F at exponent p, as a boundary norm of the
/// profile; q is the norm exponent.
pub fn lift_sz_norm(
    f: &TaylorPoly,
    p: f64,
    q: f64,
    n_r: usize,
    n_theta: usize,
    cone: &ConeSpec,
) -> Result<f64> {
    let grid = PolarGrid::annulus(n_r, n_theta, cone.r_min)?;
    let field = lift_dz_field(f, p, &grid)?;
    Ok(profile_lp_norm(&square_function_profile(&field, cone), q))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn unit_field(n_r: usize, m: usize) -> GradField {
        let grid = PolarGrid::new(n_r, m).unwrap();
        let values = vec![1.0; n_r * m];
        GradField::new(grid, values)
    }

    #[test]
    fn cone_area_is_one_half() {
        // constant field 1: S² = ∫ (1-r) dr = 1/2 at every angle
        let field = unit_field(48, 64);
        let cone = ConeSpec::default();
        for &theta in &[0.0, 0.37, 2.0, 5.5] {
            let s = square_function(&field, theta, &cone);
            assert_abs_diff_eq!(s, 0.5_f64.sqrt(), epsilon = 1e-10);
        }
        for s in square_function_profile(&field, &cone) {
            assert_abs_diff_eq!(s, 0.5_f64.sqrt(), epsilon = 1e-10);
        }
    }

    #[test]
    fn profile_matches_direct_route() {
        // non-trivial field: the two summation orders must agree to rounding
        let grid = PolarGrid::new(24, 64).unwrap();
        let f = TaylorPoly::new(vec![
            Complex64::new(0.5, 0.1),
            Complex64::new(1.0, 0.0),
            Complex64::new(-0.3, 0.4),
        ]);
        let field = grad_modulus_power(&f, 1.0, &grid).unwrap();
        let cone = ConeSpec::default();
        let profile = square_function_profile(&field, &cone);
        for j in (0..64).step_by(7) {
            let direct = square_function(&field, grid.theta(j), &cone);
            assert_abs_diff_eq!(profile[j], direct, epsilon = 1e-10);
        }
    }

    #[test]
    fn squared_monomial_closed_form() {
        // F = z², δ = 1: field 4r², S = √(∫ 4r²(1-r) dr) = √(1/3)
        let grid = PolarGrid::new(48, 64).unwrap();
        let field = grad_modulus_power(&TaylorPoly::monomial(2), 1.0, &grid).unwrap();
        let s = square_function(&field, 1.0, &ConeSpec::default());
        assert_abs_diff_eq!(s, (1.0_f64 / 3.0).sqrt(), epsilon = 1e-8);
    }

    #[test]
    fn sz_of_square_modulus() {
        // f = |z|²: ∂_z f = z̄, field r², S_z = √(1/12)
        let grid = PolarGrid::new(48, 64).unwrap();
        let values: Vec<f64> = (0..grid.n_r())
            .flat_map(|i| {
                let r2 = grid.r_nodes()[i] * grid.r_nodes()[i];
                std::iter::repeat_n(r2, grid.n_theta())
            })
            .collect();
        let field = GradField::new(grid, values);
        let s = square_function_sz(&field, 0.5, &ConeSpec::default());
        assert_abs_diff_eq!(s, (1.0_f64 / 12.0).sqrt(), epsilon = 1e-10);
    }

    #[test]
    fn constant_has_zero_square_function() {
        let grid = PolarGrid::new(16, 32).unwrap();
        let field = grad_modulus_power(&TaylorPoly::from_real(&[2.5]), 1.0, &grid).unwrap();
        assert_eq!(square_function(&field, 0.0, &ConeSpec::default()), 0.0);
    }

    #[test]
    fn grad_field_for_z_is_one() {
        let grid = PolarGrid::new(8, 16).unwrap();
        let field = grad_modulus_power(&TaylorPoly::monomial(1), 1.0, &grid).unwrap();
        for &v in field.values() {
            assert_abs_diff_eq!(v, 1.0, epsilon = 1e-14);
        }
    }

    #[test]
    fn rejects_vanishing_node_for_small_exponent() {
        // F(z) = z - r₀ e^{iθ₀} hits a node exactly: construct via a node
        let grid = PolarGrid::new(8, 16).unwrap();
        let node = grid.node(3, 5);
        let f = TaylorPoly::new(vec![-node, Complex64::new(1.0, 0.0)]);
        assert!(grad_modulus_power(&f, 0.5, &grid).is_err());
        // s ≥ 1 is fine
        assert!(grad_modulus_power(&f, 1.0, &grid).is_ok());
    }

    #[test]
    fn rotation_equivariance() {
        let f = TaylorPoly::new(vec![
            Complex64::new(0.4, -0.1),
            Complex64::new(0.9, 0.2),
            Complex64::new(0.0, -0.6),
        ]);
        let alpha = 0.9;
        let grid = PolarGrid::new(32, 128).unwrap();
        let cone = ConeSpec::default();
        let field_rot = grad_modulus_power(&f.rotate(alpha), 1.0, &grid).unwrap();
        let field = grad_modulus_power(&f, 1.0, &grid).unwrap();
        for &theta in &[0.0, 1.1, 3.9] {
            let a = square_function(&field_rot, theta, &cone);
            let b = square_function(&field, theta + alpha, &cone);
            assert_abs_diff_eq!(a, b, epsilon = 1e-8);
        }
    }

    #[test]
    fn absolute_homogeneity() {
        let f = TaylorPoly::new(vec![Complex64::new(0.2, 0.3), Complex64::new(1.0, -0.5)]);
        let c = Complex64::new(-1.7, 0.9);
        let delta = 0.75;
        let grid = PolarGrid::annulus(32, 64, 0.1).unwrap();
        let cone = ConeSpec {
            r_min: 0.1,
            ..Default::default()
        };
        let a = square_function(
            &grad_modulus_power(&f.scale(c), delta, &grid).unwrap(),
            0.7,
            &cone,
        );
        let b = square_function(&grad_modulus_power(&f, delta, &grid).unwrap(), 0.7, &cone);
        assert_abs_diff_eq!(a, c.norm().powf(delta) * b, epsilon = 1e-10);
    }

    #[test]
    fn sz_equals_scaled_gradient_square_function() {
        // S_z(lift(F, p)) = (p/2)/(p-1) · S(|F|^{p-1}) pointwise in θ, over
        // a seeded corpus and the exponent menu (fields proportional
        // pointwise, so the quadratures agree to rounding)
        use rand::Rng;
        use rand_chacha::rand_core::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let grid = PolarGrid::new(48, 128).unwrap();
        let cone = ConeSpec::default();
        for _ in 0..8 {
            let coeffs: Vec<Complex64> = (0..=4)
                .map(|_| Complex64::from_polar(rng.gen::<f64>().sqrt(), rng.gen::<f64>() * 6.0))
                .collect();
            let f = TaylorPoly::new(coeffs);
            for &p in &[3.0 / 2.0, 2.0, 3.0, 4.0] {
                let dz = match lift_dz_field(&f, p, &grid) {
                    Ok(field) => field,
                    Err(_) => continue, // zero hit a node with p < 2
                };
                let grad = grad_modulus_power(&f, p - 1.0, &grid).unwrap();
                let factor = (p / 2.0) / (p - 1.0);
                for &theta in &[0.1, 2.2, 4.4] {
                    let lhs = square_function_sz(&dz, theta, &cone);
                    let rhs = factor * square_function(&grad, theta, &cone);
                    assert!((lhs - rhs).abs() / rhs.max(1e-12) < 1e-6, "p={p}");
                }
            }
        }
    }

    #[test]
    fn nontangential_examples() {
        let grid = PolarGrid::new(64, 128).unwrap();
        let cone = ConeSpec::default();
        assert_abs_diff_eq!(
            nontangential_max(&TaylorPoly::one(), 0.3, &grid, &cone),
            1.0,
            epsilon = 1e-14
        );
        assert_abs_diff_eq!(
            nontangential_max(&TaylorPoly::monomial(1), 2.0, &grid, &cone),
            1.0,
            epsilon = 1e-14
        );
        // truncated geometric series 1/(1 - z/2): maximum ≈ 2 at the vertex
        let geo = TaylorPoly::new((0..=30).map(|n| Complex64::new(0.5_f64.powi(n), 0.0)).collect());
        let got = nontangential_max(&geo, 0.0, &grid, &cone);
        // dense-search oracle over the cone
        let mut oracle = geo.eval(Complex64::new(1.0, 0.0)).norm();
        for i in 0..400 {
            let r = i as f64 / 400.0;
            let w = cone_half_width(r);
            for j in -50..=50 {
                let phi = w * j as f64 / 50.0;
                if phi.abs() < w {
                    oracle = oracle.max(geo.eval(Complex64::from_polar(r, phi)).norm());
                }
            }
        }
        assert!((got - oracle).abs() < 1e-9);
        assert!((got - 2.0).abs() < 1e-3);
    }

    #[test]
    fn nontangential_dominates_radial_values() {
        let h = TaylorPoly::new(vec![
            Complex64::new(0.3, 0.3),
            Complex64::new(-0.8, 0.0),
            Complex64::new(0.1, 0.9),
        ]);
        let grid = PolarGrid::new(32, 64).unwrap();
        let cone = ConeSpec::default();
        let theta = 1.3;
        let star = nontangential_max(&h, theta, &grid, &cone);
        for &r in grid.r_nodes() {
            assert!(star >= h.eval(Complex64::from_polar(r, theta)).norm() - 1e-12);
        }
    }

    #[test]
    fn nontangential_profile_matches_pointwise() {
        let h = TaylorPoly::new(vec![
            Complex64::new(0.2, -0.1),
            Complex64::new(1.0, 0.4),
            Complex64::new(-0.3, 0.2),
        ]);
        let grid = PolarGrid::new(24, 64).unwrap();
        let cone = ConeSpec::default();
        let profile = nontangential_max_profile(&h, &grid, &cone);
        for j in (0..64).step_by(11) {
            let direct = nontangential_max(&h, grid.theta(j), &grid, &cone);
            assert_abs_diff_eq!(profile[j], direct, epsilon = 1e-12);
        }
    }

    #[test]
    fn calderon_ratios_for_z() {
        let r = calderon_ratios(
            &TaylorPoly::monomial(1),
            1.0,
            2.0,
            48,
            64,
            &ConeSpec::default(),
        )
        .unwrap();
        assert_abs_diff_eq!(r.ratio_upper, 0.5_f64.sqrt(), epsilon = 1e-9);
        assert_abs_diff_eq!(r.ratio_lower.unwrap(), 2.0_f64.sqrt(), epsilon = 1e-8);
    }

    #[test]
    fn calderon_constant_has_zero_upper_ratio() {
        let r = calderon_ratios(
            &TaylorPoly::from_real(&[3.0]),
            1.0,
            2.0,
            32,
            64,
            &ConeSpec::default(),
        )
        .unwrap();
        assert_eq!(r.ratio_upper, 0.0);
        assert!(r.ratio_lower.is_none());
    }

    #[test]
    fn calderon_ratio_grid_stability() {
        // F = z², δ = 1/2, p = 4: ratios stable under grid doubling
        let f = TaylorPoly::monomial(2);
        let cone = ConeSpec {
            r_min: 0.25,
            ..Default::default()
        };
        let a = calderon_ratios(&f, 0.5, 4.0, 64, 256, &cone).unwrap();
        let b = calderon_ratios(&f, 0.5, 4.0, 128, 512, &cone).unwrap();
        assert!((a.ratio_upper - b.ratio_upper).abs() / b.ratio_upper < 0.02);
        assert!(a.ratio_upper.is_finite() && a.ratio_upper > 0.0);
        let (la, lb) = (a.ratio_lower.unwrap(), b.ratio_lower.unwrap());
        assert!((la - lb).abs() / lb < 0.02);
    }

    #[test]
    fn lift_dz_finite_difference_check() {
        assert!(lift_sz_identity_check(&TaylorPoly::monomial(1), 2.0).unwrap() < 1e-9);
        assert!(lift_sz_identity_check(&TaylorPoly::monomial(1), 4.0).unwrap() < 1e-6);
        let f = TaylorPoly::from_real(&[1.0, 0.5]);
        assert!(lift_sz_identity_check(&f, 3.0).unwrap() < 1e-6);
    }

    #[test]
    fn midpoint_multiplier_matches_direct_sum() {
        // oracle: the multiplier is the literal midpoint sum of e^{inφ}
        for &(n, w, k) in &[(3.0, 0.4, 8), (17.0, 0.49, 16), (40.0, 0.2, 16), (128.0, 0.37, 16)] {
            let direct: f64 = (0..k)
                .map(|j| {
                    let phi = -w + (j as f64 + 0.5) * 2.0 * w / k as f64;
                    (n * phi).cos() * 2.0 * w / k as f64
                })
                .sum();
            let m = midpoint_multiplier(n, w, k);
            assert_abs_diff_eq!(m, direct, epsilon = 1e-12);
        }
    }

}
