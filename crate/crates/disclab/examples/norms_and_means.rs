//! Integral means, Hardy and Bergman norms, and the nonlinear lift.
//!
//! Run with: cargo run --release --example norms_and_means

use disclab::grid::PolarGrid;
use disclab::lift::nonlinear_lift_boundary;
use disclab::norms::{bergman_norm, check_isoperimetric, hardy_norm, integral_mean};
use disclab::poly::TaylorPoly;

fn main() -> disclab::Result<()> {
    let f = TaylorPoly::from_real(&[1.0, 1.0]);

    println!("Integral means M_p(r, 1 + z):");
    println!("{:>6} {:>14} {:>14} {:>14}", "r", "p = 1", "p = 2", "p = 4");
    for i in 0..=5 {
        let r = i as f64 / 5.0;
        println!(
            "{r:>6.2} {:>14.8} {:>14.8} {:>14.8}",
            integral_mean(&f, r, 1.0, 128)?,
            integral_mean(&f, r, 2.0, 128)?,
            integral_mean(&f, r, 4.0, 128)?
        );
    }
    println!(
        "  exact values at r = 1: ||1+z||_H2 = sqrt(2) = {:.8}, ||1+z||_H4 = 6^(1/4) = {:.8}",
        2.0_f64.sqrt(),
        6.0_f64.powf(0.25)
    );

    let report = hardy_norm(&f, 4.0)?;
    println!(
        "\nhardy_norm profile is nondecreasing: first {:.6} ... last {:.6} = norm estimate",
        report.means.first().unwrap(),
        report.norm_estimate
    );

    let grid = PolarGrid::new(64, 128)?;
    println!("\nBergman norms (area measure dA/pi):");
    for (name, g, p, exact) in [
        ("||1||_A2", TaylorPoly::one(), 2.0, 1.0),
        ("||z||_A2", TaylorPoly::monomial(1), 2.0, 0.5_f64.sqrt()),
        ("||z||_A4", TaylorPoly::monomial(1), 4.0, (1.0_f64 / 3.0).powf(0.25)),
    ] {
        println!(
            "  {name} = {:.10}  (exact {exact:.10})",
            bergman_norm(&g, p, &grid)?
        );
    }

    println!("\nIsoperimetric-type comparison ||h||_A2p <= ||h||_Hp:");
    for (name, h) in [
        ("h = 1", TaylorPoly::one()),
        ("h = z", TaylorPoly::monomial(1)),
        ("h = 1 + z", f.clone()),
    ] {
        let (a, hn, ok) = check_isoperimetric(&h, 2.0, &grid)?;
        println!("  {name:<9} A-norm {a:.8} <= H-norm {hn:.8}  ok = {ok}");
    }

    println!("\nNonlinear lift |F|^(p-2) F of F = z at p = 4 on the boundary is z itself:");
    let lift = nonlinear_lift_boundary(&TaylorPoly::monomial(1), 4.0, 16);
    let sample = lift.values()[2];
    println!(
        "  at theta = pi/4: {:.6} + {:.6}i  (|value| = {:.6})",
        sample.re,
        sample.im,
        sample.norm()
    );
    Ok(())
}
