//! Seeded random corpora.
//!
//! Every sample is generated from its own ChaCha stream derived from
//! (seed, stream, index), so corpora are reproducible and prefix-stable:
//! enlarging a corpus never changes the samples already drawn.

use num_complex::Complex64;
use rand::Rng;
use rand_chacha::{rand_core::SeedableRng, ChaCha8Rng};

use crate::boundary::BoundarySamples;
use crate::poly::{TaylorPoly, ZzbarPoly};

/// Named corpus streams; keeps (seed, index) reuse across experiments apart.
#[derive(Debug, Clone, Copy)]
pub enum Stream {
    Kernels = 1,
    CalderonPolys = 2,
    MaximalPolys = 3,
    PointEvalPairs = 4,
    TrigPolys = 5,
    ZzbarPolys = 6,
    GreenPairs = 7,
    BoundaryFns = 8,
}

fn rng_for(seed: u64, stream: Stream, index: u64) -> ChaCha8Rng {
    let mixed = seed
        ^ (stream as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15)
        ^ index.wrapping_mul(0xbf58_476d_1ce4_e5b9);
    ChaCha8Rng::seed_from_u64(mixed)
}

fn uniform_disc(rng: &mut ChaCha8Rng) -> Complex64 {
    let r: f64 = rng.gen::<f64>().sqrt();
    let phi: f64 = rng.gen::<f64>() * 2.0 * std::f64::consts::PI;
    Complex64::from_polar(r, phi)
}

/// Random polynomial with coefficients uniform on the complex unit disc.
pub fn random_poly(seed: u64, stream: Stream, index: u64, degree: usize) -> TaylorPoly {
    let mut rng = rng_for(seed, stream, index);
    TaylorPoly::new((0..=degree).map(|_| uniform_disc(&mut rng)).collect())
}

/// Same family conditioned on F(0) = 0.
pub fn random_poly_vanishing(seed: u64, stream: Stream, index: u64, degree: usize) -> TaylorPoly {
    let f = random_poly(seed, stream, index, degree);
    let mut coeffs = f.coeffs().to_vec();
    coeffs[0] = Complex64::new(0.0, 0.0);
    TaylorPoly::new(coeffs)
}

/// Random polynomial bounded away from zero on the closed disc:
/// constant c₀ with |c₀| = 1 plus a perturbation of total mass ≤ 1/2.
pub fn random_poly_nonvanishing(seed: u64, stream: Stream, index: u64, degree: usize) -> TaylorPoly {
    let mut rng = rng_for(seed, stream, index);
    let phase: f64 = rng.gen::<f64>() * 2.0 * std::f64::consts::PI;
    let mut coeffs = vec![Complex64::from_polar(1.0, phase)];
    // tail mass ≤ 1/2 < |c₀| keeps the polynomial zero-free on |z| ≤ 1
    for _ in 0..degree {
        coeffs.push(uniform_disc(&mut rng) * (0.5 / degree as f64));
    }
    TaylorPoly::new(coeffs)
}

/// Random polynomial in z and z̄ with uniform-disc coefficients.
pub fn random_zzbar(seed: u64, stream: Stream, index: u64, deg_z: usize, deg_zbar: usize) -> ZzbarPoly {
    let mut rng = rng_for(seed, stream, index);
    let mut out = ZzbarPoly::new(deg_z, deg_zbar);
    for a in 0..=deg_z {
        for b in 0..=deg_zbar {
            out.set(a, b, uniform_disc(&mut rng));
        }
    }
    out
}

/// Random trigonometric polynomial with frequencies -degree..=degree.
pub fn random_trig(seed: u64, stream: Stream, index: u64, degree: usize, m: usize) -> BoundarySamples {
    let mut rng = rng_for(seed, stream, index);
    let coeffs: Vec<(i64, Complex64)> = (-(degree as i64)..=degree as i64)
        .map(|n| (n, uniform_disc(&mut rng)))
        .collect();
    BoundarySamples::from_fn(m, |theta| {
        coeffs
            .iter()
            .map(|&(n, c)| c * Complex64::from_polar(1.0, n as f64 * theta))
            .sum()
    })
    .expect("power-of-two grid")
}
