//! Best analytic approximation in L^p of the circle.
//!
//! For k in L^p, the nearest H^p function f splits off the analytic part:
//! minimise over h the distance to the co-analytic part, shift by z to land
//! in the minimal-norm problem over H0, then f = g/z + P_S(k). At p = 2 the
//! answer is the Szego projection itself.
//!
//! Run with: cargo run --release --example best_approximation

use disclab::boundary::BoundarySamples;
use disclab::dual::{best_analytic_approx, best_analytic_approx_direct, cross_norm_report, IrlsOptions};
use disclab::projections::szego_project;
use num_complex::Complex64;

fn main() -> disclab::Result<()> {
    let m = 256;
    let opts = IrlsOptions::default();

    println!("Best approximation at p = 2 equals the Szego projection:");
    let k = BoundarySamples::from_fn(m, |t| {
        Complex64::new(0.5, 0.0)
            + Complex64::from_polar(1.0, -t)
            + Complex64::from_polar(0.3, 2.0 * t)
            + Complex64::from_polar(0.2, -3.0 * t)
    })?;
    let (f2, d2, _) = best_analytic_approx(&k, 2.0, &opts)?;
    let projected = szego_project(&k);
    let coeff_err: f64 = (0..=4)
        .map(|n| (f2.coeff(n) - projected.coeff(n)).norm())
        .fold(0.0, f64::max);
    println!("  distance = {d2:.8}, max coefficient deviation from P_S(k) = {coeff_err:.2e}");

    println!("\nClassic cases at p = 2:");
    for (name, k) in [
        (
            "k = zb  (nearest H^2 point is 0)",
            BoundarySamples::from_fn(m, |t| Complex64::from_polar(1.0, -t))?,
        ),
        (
            "k = 2cos(theta)  (nearest is z)",
            BoundarySamples::from_fn(m, |t| Complex64::new(2.0 * t.cos(), 0.0))?,
        ),
    ] {
        let (f, d, _) = best_analytic_approx(&k, 2.0, &opts)?;
        println!("  {name}: f degree {}, |f(0)| = {:.1e}, distance = {d:.8}", f.degree(), f.coeff(0).norm());
    }

    println!("\np = 4: reduction route vs direct coefficient minimisation:");
    let (f4, d4, dual) = best_analytic_approx(&k, 4.0, &opts)?;
    let (_, d_direct) = best_analytic_approx_direct(&k, 4.0, &opts)?;
    println!("  reduction distance  = {d4:.10}");
    println!("  dual objective      = {:.10}", dual.min_norm);
    println!("  direct minimisation = {d_direct:.10}");

    println!("\nCross-norm bound ||f||_Hq <= (2 + 1/(1-Ctilde)) csc(pi/q) ||k||_Lq:");
    for (q, ctilde) in [(2.0, 0.0), (4.0, 0.0), (4.0, 0.15)] {
        let report = cross_norm_report(&f4, &k, q, ctilde)?;
        println!(
            "  q = {q:<4} Ctilde = {ctilde:<5}: ||f||_Hq = {:.6} <= {:.6}  ok = {:?}",
            report.f_norm_q, report.bound, report.ok
        );
    }
    Ok(())
}
