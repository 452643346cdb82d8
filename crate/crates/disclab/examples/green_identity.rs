//! The Green-type identity behind the extremal machinery:
//!
//!   (1/2pi) int f h dtheta = (1/2pi) int_D Laplacian(f h) log(1/|z|) dA
//!
//! for f = |F|^{p-2}F with F zero-free on the closed disc and h(0) = 0. The
//! left side is a boundary mean; the right side is disc quadrature with the
//! Laplacian in closed form. The log singularity at the origin is integrable
//! and Gauss-Legendre handles it without special treatment.
//!
//! Run with: cargo run --release --example green_identity

use disclab::experiments::checks::green_identity_check;
use disclab::grid::PolarGrid;
use disclab::poly::TaylorPoly;
use num_complex::Complex64;

fn main() -> disclab::Result<()> {
    let grid = PolarGrid::new(128, 256)?;

    println!("F = 2 + z, h = z, p = 4: both sides equal 4 exactly.");
    let f = TaylorPoly::from_real(&[2.0, 1.0]);
    let h = TaylorPoly::monomial(1);
    let err = green_identity_check(&f, &h, 4.0, &grid)?;
    println!("  relative defect: {err:.3e}\n");

    println!("A spread of zero-free F and origin-vanishing h:");
    println!("{:>30} {:>18} {:>6} {:>12}", "F", "h", "p", "rel defect");
    let cases: Vec<(TaylorPoly, TaylorPoly)> = vec![
        (
            TaylorPoly::from_real(&[2.0, 1.0]),
            TaylorPoly::from_real(&[0.0, 0.5, 1.0]),
        ),
        (
            TaylorPoly::new(vec![
                Complex64::new(1.0, 0.5),
                Complex64::new(0.3, -0.2),
                Complex64::new(0.1, 0.0),
            ]),
            TaylorPoly::new(vec![
                Complex64::new(0.0, 0.0),
                Complex64::new(1.0, 0.0),
                Complex64::new(0.0, 0.7),
            ]),
        ),
        (
            TaylorPoly::from_real(&[3.0, 0.5, 0.25, 0.125]),
            TaylorPoly::from_real(&[0.0, 0.5, 0.5]),
        ),
    ];
    for (f, h) in &cases {
        for p in [3.0, 4.0] {
            let err = green_identity_check(f, h, p, &grid)?;
            println!(
                "{:>30} {:>18} {:>6.1} {:>12.3e}",
                format!("deg {} poly", f.degree()),
                format!("deg {} poly", h.degree()),
                p,
                err
            );
        }
    }

    println!("\nh with h(0) != 0 is rejected:");
    match green_identity_check(&f, &TaylorPoly::one(), 4.0, &grid) {
        Err(e) => println!("  {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
