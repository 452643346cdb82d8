//! The dual extremal problem and the extremal kernel.
//!
//! max over ||F||_p = 1 of Re (1/2pi) int F k dtheta equals
//! min over g in H0^{p'} of ||k - g||_{p'}, and the minimiser's defect
//! K = k - g matches lambda * conj(|F|^{p-2}F) pointwise (Hoelder equality).
//!
//! Run with: cargo run --release --example duality

use disclab::boundary::BoundarySamples;
use disclab::dual::{duality_gap, solve_dual_min, IrlsOptions};
use disclab::extremal::SolverOptions;
use num_complex::Complex64;

fn main() -> disclab::Result<()> {
    let m = 256;
    let primal_opts = SolverOptions {
        tol: 1e-9,
        max_iter: 20000,
        ..Default::default()
    };
    let dual_opts = IrlsOptions::default();

    println!("Kernels and their duality data at p = 4:");
    println!(
        "{:<22} {:>12} {:>12} {:>10} {:>12} {:>12}",
        "kernel", "primal", "dual", "gap", "K-residual", "Hoelder"
    );
    let kernels: Vec<(&str, BoundarySamples)> = vec![
        (
            "1",
            BoundarySamples::from_fn(m, |_| Complex64::new(1.0, 0.0))?,
        ),
        (
            "e^(-i theta)",
            BoundarySamples::from_fn(m, |t| Complex64::from_polar(1.0, -t))?,
        ),
        (
            "1 + zb/2",
            BoundarySamples::from_fn(m, |t| {
                Complex64::new(1.0, 0.0) + Complex64::from_polar(0.5, -t)
            })?,
        ),
        (
            "2cos(theta) + 0.3 z^2",
            BoundarySamples::from_fn(m, |t| {
                Complex64::new(2.0 * t.cos(), 0.0) + Complex64::from_polar(0.3, 2.0 * t)
            })?,
        ),
    ];
    for (name, k) in &kernels {
        let report = duality_gap(k, 4.0, &primal_opts, &dual_opts)?;
        println!(
            "{:<22} {:>12.8} {:>12.8} {:>10.2e} {:>12.2e} {:>12.2e}",
            name,
            report.primal.lambda,
            report.dual.min_norm,
            report.gap,
            report.kernel_residual,
            report.holder_spread
        );
    }

    println!("\nMinimal-norm solver on its own, k = 1 (mean bound is sharp at g = 0):");
    let one = BoundarySamples::from_fn(m, |_| Complex64::new(1.0, 0.0))?;
    for pp in [4.0 / 3.0, 2.0, 4.0] {
        let sol = solve_dual_min(&one, pp, &dual_opts)?;
        println!(
            "  p' = {pp:<6.3}: min ||1 - g|| = {:.10}  (g degree {}, {} iterations)",
            sol.min_norm,
            sol.g.degree(),
            sol.iterations
        );
    }

    println!("\nExtremal kernel for k = e^(-i theta) at p = 4: K = k itself, F = z, lambda = 1;");
    println!("the identity K = lambda conj(|F|^2 F) reads e^(-i theta) = conj(e^(i theta)).");
    Ok(())
}
