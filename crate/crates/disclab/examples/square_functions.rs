//! Cone square functions and the nontangential maximal function.
//!
//! The cone at boundary angle theta has half-width (1-r)/2 at radius r, and
//! the square function integrates |grad G|^2 over it in dr dphi coordinates:
//! the constant field returns sqrt(1/2) at every angle.
//!
//! Run with: cargo run --release --example square_functions

use disclab::grid::PolarGrid;
use disclab::poly::TaylorPoly;
use disclab::squarefn::{
    calderon_ratios, grad_modulus_power, nontangential_max, square_function,
    square_function_profile, ConeSpec,
};
use num_complex::Complex64;

fn main() -> disclab::Result<()> {
    let grid = PolarGrid::new(96, 256)?;
    let cone = ConeSpec::default();

    println!("Closed forms:");
    let field = grad_modulus_power(&TaylorPoly::monomial(1), 1.0, &grid)?;
    println!(
        "  S(|z|)   at theta = 1.0: {:.10}   (exact sqrt(1/2) = {:.10})",
        square_function(&field, 1.0, &cone),
        0.5_f64.sqrt()
    );
    let field2 = grad_modulus_power(&TaylorPoly::monomial(2), 1.0, &grid)?;
    println!(
        "  S(|z^2|) at theta = 1.0: {:.10}   (exact sqrt(1/3) = {:.10})",
        square_function(&field2, 1.0, &cone),
        (1.0_f64 / 3.0).sqrt()
    );

    println!("\nProfile of S(|F|) for F = 1 + z + z^2/2 at a few angles:");
    let f = TaylorPoly::from_real(&[1.0, 1.0, 0.5]);
    let field = grad_modulus_power(&f, 1.0, &grid)?;
    let profile = square_function_profile(&field, &cone);
    for j in (0..grid.n_theta()).step_by(grid.n_theta() / 8) {
        println!("  theta = {:>8.4}: S = {:.8}", grid.theta(j), profile[j]);
    }

    println!("\nNontangential maximal function of 1/(1 - z/2) (truncated):");
    let geo = TaylorPoly::new((0..=30).map(|n| Complex64::new(0.5_f64.powi(n), 0.0)).collect());
    for theta in [0.0, 1.6, 3.2] {
        println!(
            "  h*({theta:.2}) = {:.8}",
            nontangential_max(&geo, theta, &grid, &cone)
        );
    }
    println!("  (the sup is attained toward the cone vertex; h*(0) is close to 2)");

    println!("\nCalderon ratios for G = |F|^delta, boundary L^p norms:");
    println!("{:>10} {:>6} {:>14} {:>14}", "delta", "p", "upper", "lower");
    let vanishing = TaylorPoly::new(vec![
        Complex64::new(0.0, 0.0),
        Complex64::new(1.0, 0.0),
        Complex64::new(0.0, 0.4),
    ]);
    for delta in [0.5, 1.0, 2.0] {
        for p in [1.0, 2.0, 4.0] {
            // the dr dphi cone integral diverges at the origin for delta < 1
            // when F(0) = 0, so the sweep cuts the cone at r = 1/4
            let cone = ConeSpec {
                r_min: if delta < 1.0 { 0.25 } else { 0.0 },
                ..Default::default()
            };
            let r = calderon_ratios(&vanishing, delta, p, 96, 256, &cone)?;
            println!(
                "{delta:>10.2} {p:>6.1} {:>14.6} {:>14.6}",
                r.ratio_upper,
                r.ratio_lower.unwrap_or(f64::NAN)
            );
        }
    }
    Ok(())
}
