//! Extremal problems: maximise Re <F, k> over the unit ball of A^p or H^p.
//!
//! At p = 2 the solution is k/||k||; at general p the solver certifies
//! optimality through the projection identity k = lambda * P(|F|^{p-2}F).
//!
//! Run with: cargo run --release --example extremal_problems

use disclab::extremal::{
    dual_norm_bound, ryabykh_profile, solve_bergman_extremal, solve_hardy_extremal,
    SolverOptions, Space,
};
use disclab::poly::TaylorPoly;
use num_complex::Complex64;

fn main() -> disclab::Result<()> {
    println!("Closed forms for k = z:");
    let z = TaylorPoly::monomial(1);
    let opts = SolverOptions {
        tol: 1e-9,
        ..Default::default()
    };
    let sol = solve_bergman_extremal(&z, 2.0, &opts)?;
    println!(
        "  A^2: F = {:.6} z, lambda = {:.8}   (exact sqrt(2) z, 1/sqrt(2) = {:.8})",
        sol.f.coeff(1).norm(),
        sol.lambda,
        0.5_f64.sqrt()
    );
    let sol = solve_bergman_extremal(&z, 4.0, &opts)?;
    println!(
        "  A^4: F = {:.6} z, lambda = {:.8}   (exact 3^(1/4) z, 3^(1/4)/2 = {:.8})",
        sol.f.coeff(1).norm(),
        sol.lambda,
        3.0_f64.powf(0.25) / 2.0
    );
    let sol = solve_hardy_extremal(&z, 4.0, &opts)?;
    println!(
        "  H^4: F = {:.6} z, lambda = {:.8}   (exact z, 1)",
        sol.f.coeff(1).norm(),
        sol.lambda
    );

    println!("\nGeneral kernel k = 1 + z/2 + (0.3i) z^2:");
    let k = TaylorPoly::new(vec![
        Complex64::new(1.0, 0.0),
        Complex64::new(0.5, 0.0),
        Complex64::new(0.0, 0.3),
    ]);
    let opts = SolverOptions {
        degree_cap: Some(96),
        tol: 1e-6,
        ..Default::default()
    };
    for (name, space, p) in [
        ("A^{4/3}", Space::Bergman, 4.0 / 3.0),
        ("A^4", Space::Bergman, 4.0),
        ("H^{4/3}", Space::Hardy, 4.0 / 3.0),
        ("H^4", Space::Hardy, 4.0),
    ] {
        let sol = match space {
            Space::Bergman => solve_bergman_extremal(&k, p, &opts)?,
            Space::Hardy => solve_hardy_extremal(&k, p, &opts)?,
        };
        let holder = dual_norm_bound(&k, p, space)?;
        println!(
            "  {name:<8} lambda = {:.8} <= ||k||_p' = {:.8}   residual {:.2e} after {} iterations",
            sol.lambda, holder, sol.residual, sol.iterations
        );
    }

    println!("\nRegularity profile M_(p-1)q(r, F) for k = 1 + z/2, Bergman p = 4, q = 4/3:");
    let k = TaylorPoly::from_real(&[1.0, 0.5]);
    let (sol, profile) = ryabykh_profile(&k, 4.0, 4.0 / 3.0, Space::Bergman, &opts)?;
    println!("  lambda = {:.8}, residual = {:.2e}", sol.lambda, sol.residual);
    for (r, value) in profile {
        println!("  r = {r:<6}: {value:.10}");
    }
    println!("  (a bounded profile as r -> 1 is the numerical signature of Hardy-space membership)");
    Ok(())
}
