//! The nonlinear lift F ↦ |F|^{p-2} F.
//!
//! For analytic F this equals F^{p/2} F̄^{p/2-1} but avoids branch cuts: the
//! factor |F|^{p-2} is real. The lift is the density that turns extremal
//! problems into projection identities, and |lift| = |F|^{p-1} pointwise.

use num_complex::Complex64;

use crate::boundary::BoundarySamples;
use crate::grid::PolarGrid;
use crate::poly::TaylorPoly;

/// |w|^{p-2} w, with value 0 at w = 0.
///
/// The zero convention matches the p > 1 limit: |w|^{p-2} w → 0 as w → 0.
/// Callers with p < 2 should keep grid nodes away from zeros of F.
pub fn lift_value(w: Complex64, p: f64) -> Complex64 {
    let r = w.norm();
    if r == 0.0 {
        Complex64::new(0.0, 0.0)
    } else {
        w * r.powf(p - 2.0)
    }
}

/// Lift of an analytic polynomial on the boundary grid.
pub fn nonlinear_lift_boundary(f: &TaylorPoly, p: f64, m: usize) -> BoundarySamples {
    assert!(p > 1.0, "lift exponent must exceed 1");
    BoundarySamples::from_poly(f, m)
        .expect("power-of-two grid")
        .map(|w| lift_value(w, p))
}

/// Lift of an analytic polynomial on a polar grid, ring-major.
pub fn nonlinear_lift_grid(f: &TaylorPoly, p: f64, grid: &PolarGrid) -> Vec<Complex64> {
    assert!(p > 1.0, "lift exponent must exceed 1");
    f.on_grid(grid)
        .into_iter()
        .map(|w| lift_value(w, p))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn lift_at_p2_is_identity() {
        let f = TaylorPoly::new(vec![Complex64::new(0.3, 1.0), Complex64::new(-0.2, 0.1)]);
        let plain = BoundarySamples::from_poly(&f, 16).unwrap();
        let lifted = nonlinear_lift_boundary(&f, 2.0, 16);
        for (a, b) in lifted.values().iter().zip(plain.values()) {
            assert!((a - b).norm() < 1e-14);
        }
    }

    #[test]
    fn lift_of_constant() {
        let c = Complex64::new(0.6, -0.8); // |c| = 1 scaled
        let f = TaylorPoly::new(vec![2.0 * c]);
        let lifted = nonlinear_lift_boundary(&f, 3.0, 16);
        let expect = 2.0 * c * 2.0_f64.powf(1.0); // |2c|^{p-2} (2c) with p=3
        for v in lifted.values() {
            assert!((v - expect).norm() < 1e-13);
        }
    }

    #[test]
    fn lift_of_z_at_p4_is_z_on_boundary() {
        let lifted = nonlinear_lift_boundary(&TaylorPoly::monomial(1), 4.0, 32);
        for (j, v) in lifted.values().iter().enumerate() {
            let theta = 2.0 * std::f64::consts::PI * j as f64 / 32.0;
            let expect = Complex64::from_polar(1.0, theta);
            assert!((v - expect).norm() < 1e-13);
        }
    }

    #[test]
    fn lift_modulus_identity() {
        // |lift(F, p)| = |F|^{p-1} wherever F != 0
        let f = TaylorPoly::new(vec![
            Complex64::new(1.0, 0.2),
            Complex64::new(0.5, -0.5),
            Complex64::new(0.0, 0.3),
        ]);
        let grid = PolarGrid::new(16, 32).unwrap();
        let vals = f.on_grid(&grid);
        for (w, l) in vals.iter().zip(nonlinear_lift_grid(&f, 2.5, &grid)) {
            if w.norm() > 0.0 {
                assert_abs_diff_eq!(l.norm(), w.norm().powf(1.5), epsilon = 1e-12);
            }
        }
    }

    #[test]
    fn lift_vanishes_at_zero_for_small_p() {
        assert_eq!(
            lift_value(Complex64::new(0.0, 0.0), 1.5),
            Complex64::new(0.0, 0.0)
        );
    }
}
