//! Bergman and Szegő projections.
//!
//! Shows the closed-form monomial rule against direct quadrature of the
//! kernel integral, the coefficient-extraction route on mixed z,z̄ data,
//! and the Szegő projection as deletion of negative frequencies.
//!
//! Run with: cargo run --release --example projections

use disclab::boundary::BoundarySamples;
use disclab::grid::PolarGrid;
use disclab::poly::{TaylorPoly, ZzbarPoly};
use disclab::projections::{
    bergman_project, bergman_project_kernel_quadrature, bergman_project_monomial,
    szego_coproject, szego_norm_check, szego_project,
};
use num_complex::Complex64;

fn main() -> disclab::Result<()> {
    println!("Bergman projection of monomials z^a zb^b  (rule vs kernel quadrature at z = 0.4+0.3i)");
    println!("{:>4} {:>4} {:>22} {:>22} {:>10}", "a", "b", "rule", "quadrature", "abs err");
    let grid = PolarGrid::new(64, 128)?;
    let z = Complex64::new(0.4, 0.3);
    for (a, b) in [(0, 1), (3, 0), (1, 1), (2, 1), (4, 2), (5, 5)] {
        let rule = bergman_project_monomial(a, b);
        let values = ZzbarPoly::monomial(a, b, Complex64::new(1.0, 0.0)).on_grid(&grid);
        let direct = bergman_project_kernel_quadrature(&values, &grid, z);
        let exact = rule.eval(z);
        println!(
            "{a:>4} {b:>4} {:>22} {:>22} {:>10.2e}",
            format!("{:.6}", exact),
            format!("{:.6}", direct),
            (exact - direct).norm()
        );
    }

    println!("\nCoefficient route on f = z^2 zb + z  (expect (5/3) z)");
    let mut f = ZzbarPoly::new(2, 1);
    f.set(2, 1, Complex64::new(1.0, 0.0));
    f.set(1, 0, Complex64::new(1.0, 0.0));
    let projected = bergman_project(&f.on_grid(&grid), &grid, 4)?;
    for n in 0..=2 {
        println!("  coeff z^{n}: {:.12}", projected.coeff(n).re);
    }

    println!("\nSzego projection drops negative frequencies:");
    let samples = BoundarySamples::from_fn(64, |t| {
        // zb + 2 + z on the circle
        Complex64::from_polar(1.0, -t) + Complex64::new(2.0, 0.0) + Complex64::from_polar(1.0, t)
    })?;
    let analytic = szego_project(&samples);
    println!("  P_S(zb + 2 + z) has coefficients c0 = {:.6}, c1 = {:.6}", analytic.coeff(0).re, analytic.coeff(1).re);
    let co = szego_coproject(&samples);
    println!("  co-projection sample at theta = 0: {:.6} (expect 1 = e^(-i*0))", co.values()[0].re);

    println!("\nSzego norm bound csc(pi/p) on a small corpus:");
    let corpus: Vec<BoundarySamples> = (1..=8)
        .map(|k| {
            BoundarySamples::from_fn(64, move |t| {
                Complex64::from_polar(1.0, -(k as f64) * t) + Complex64::from_polar(0.5, t)
            })
            .expect("power-of-two grid")
        })
        .collect();
    for p in [4.0 / 3.0, 2.0, 4.0] {
        let (max_ratio, bound, ok) = szego_norm_check(&corpus, p);
        println!("  p = {p:<6.3} max ratio {max_ratio:.6} <= {bound:.6}  ok = {ok}");
    }

    println!("\nTruncated projection keeps frequencies 0..=n:");
    let g = TaylorPoly::from_real(&[1.0, 1.0, 0.0, 1.0]);
    let gs = BoundarySamples::from_poly(&g, 32)?;
    let t = disclab::projections::truncated_projection(&gs, 2);
    println!("  P_2(1 + z + z^3) = {:.3} + {:.3} z (degree {})", t.coeff(0).re, t.coeff(1).re, t.degree());
    Ok(())
}
