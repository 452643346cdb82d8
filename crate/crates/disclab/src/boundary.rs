//! Sampled functions on the unit circle and their Fourier coefficients.
//!
//! A `BoundarySamples` holds values on the uniform grid θ_j = 2πj/M with M a
//! power of two. Means over the grid are the trapezoid rule, which is exact
//! for trigonometric polynomials of degree < M, so all boundary integrals in
//! the crate are spectrally accurate on the polynomial corpus.

use num_complex::Complex64;
use rustfft::FftPlanner;

use crate::error::{Error, Result};
use crate::poly::TaylorPoly;

/// Smallest power of two ≥ 4·degree + 16.
///
/// Large enough that products of two polynomials of the given degree stay
/// alias-free under pointwise multiplication on the grid.
pub fn default_grid_size(degree: usize) -> usize {
    (4 * degree + 16).next_power_of_two()
}

/// Complex values on the uniform boundary grid.
#[derive(Debug, Clone)]
pub struct BoundarySamples {
    values: Vec<Complex64>,
}

impl BoundarySamples {
    pub fn new(values: Vec<Complex64>) -> Result<Self> {
        if !values.len().is_power_of_two() {
            return Err(Error::GridNotPowerOfTwo { m: values.len() });
        }
        Ok(Self { values })
    }

    /// Sample an analytic polynomial at the M grid angles.
    pub fn from_poly(f: &TaylorPoly, m: usize) -> Result<Self> {
        if !m.is_power_of_two() {
            return Err(Error::GridNotPowerOfTwo { m });
        }
        assert!(f.degree() < m, "grid too coarse for degree {}", f.degree());
        let mut buf = vec![Complex64::new(0.0, 0.0); m];
        buf[..f.coeffs().len()].copy_from_slice(f.coeffs());
        FftPlanner::new().plan_fft_inverse(m).process(&mut buf);
        Ok(Self { values: buf })
    }

    pub fn from_fn(m: usize, f: impl Fn(f64) -> Complex64) -> Result<Self> {
        if !m.is_power_of_two() {
            return Err(Error::GridNotPowerOfTwo { m });
        }
        let values = (0..m)
            .map(|j| f(2.0 * std::f64::consts::PI * j as f64 / m as f64))
            .collect();
        Ok(Self { values })
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn theta(&self, j: usize) -> f64 {
        2.0 * std::f64::consts::PI * j as f64 / self.len() as f64
    }

    /// (1/2π) ∫ f dθ by the trapezoid rule.
    pub fn mean(&self) -> Complex64 {
        self.values.iter().sum::<Complex64>() / self.len() as f64
    }

    /// ((1/2π) ∫ |f|^p dθ)^{1/p}.
    pub fn lp_norm(&self, p: f64) -> f64 {
        assert!(p > 0.0);
        let mean: f64 = self
            .values
            .iter()
            .map(|v| v.norm().powf(p))
            .sum::<f64>()
            / self.len() as f64;
        mean.powf(1.0 / p)
    }

    pub fn map(&self, f: impl Fn(Complex64) -> Complex64) -> Self {
        Self {
            values: self.values.iter().map(|&v| f(v)).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.len(), other.len());
        Self {
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.len(), other.len());
        Self {
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, c: Complex64) -> Self {
        self.map(|v| v * c)
    }

    /// Discrete Fourier coefficients of the samples.
    pub fn fourier(&self) -> FourierCoefficients {
        let m = self.len();
        let mut buf = self.values.clone();
        FftPlanner::new().plan_fft_forward(m).process(&mut buf);
        for v in &mut buf {
            *v /= m as f64;
        }
        FourierCoefficients { bins: buf }
    }
}

/// Fourier coefficients c_n of a boundary function, |n| ≤ M/2.
///
/// Stored in DFT bin order; `coeff(n)` translates signed frequencies.
#[derive(Debug, Clone)]
pub struct FourierCoefficients {
    bins: Vec<Complex64>,
}

impl FourierCoefficients {
    pub fn grid_size(&self) -> usize {
        self.bins.len()
    }

    /// Coefficient of e^{inθ}. Frequencies beyond ±M/2 are zero by convention.
    pub fn coeff(&self, n: i64) -> Complex64 {
        let m = self.bins.len() as i64;
        if n > m / 2 || n < -m / 2 {
            return Complex64::new(0.0, 0.0);
        }
        let k = if n >= 0 { n } else { m + n };
        self.bins[k as usize]
    }

    /// Analytic part: frequencies 0..=n_max as a polynomial.
    pub fn analytic_part(&self, n_max: usize) -> TaylorPoly {
        TaylorPoly::new((0..=n_max).map(|n| self.coeff(n as i64)).collect())
    }

    /// Inverse transform back to samples.
    pub fn to_samples(&self) -> BoundarySamples {
        let m = self.bins.len();
        let mut buf = self.bins.clone();
        FftPlanner::new().plan_fft_inverse(m).process(&mut buf);
        BoundarySamples { values: buf }
    }

    /// Keep only the bins selected by `keep` (by signed frequency).
    pub fn filter(&self, keep: impl Fn(i64) -> bool) -> FourierCoefficients {
        let m = self.bins.len() as i64;
        let bins = self
            .bins
            .iter()
            .enumerate()
            .map(|(k, &c)| {
                let n = if (k as i64) <= m / 2 {
                    k as i64
                } else {
                    k as i64 - m
                };
                if keep(n) {
                    c
                } else {
                    Complex64::new(0.0, 0.0)
                }
            })
            .collect();
        FourierCoefficients { bins }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn poly_roundtrip_through_fourier() {
        let f = TaylorPoly::new(vec![
            Complex64::new(1.0, 0.5),
            Complex64::new(-0.3, 0.0),
            Complex64::new(0.0, 2.0),
            Complex64::new(0.25, -0.25),
        ]);
        let samples = BoundarySamples::from_poly(&f, 32).unwrap();
        let coeffs = samples.fourier();
        for n in 0..=f.degree() {
            let rel = (coeffs.coeff(n as i64) - f.coeff(n)).norm() / f.coeff(n).norm().max(1.0);
            assert!(rel < 1e-12, "coefficient {n} off by {rel}");
        }
        // higher and negative frequencies vanish
        assert!(coeffs.coeff(5).norm() < 1e-12);
        assert!(coeffs.coeff(-1).norm() < 1e-12);
        // inverse transform reproduces samples
        let back = coeffs.to_samples();
        for (a, b) in back.values().iter().zip(samples.values()) {
            assert!((a - b).norm() < 1e-12);
        }
    }

    #[test]
    fn mean_is_constant_coefficient() {
        let f = TaylorPoly::from_real(&[3.0, 1.0, -2.0]);
        let samples = BoundarySamples::from_poly(&f, 16).unwrap();
        assert_abs_diff_eq!(samples.mean().re, 3.0, epsilon = 1e-13);
    }

    #[test]
    fn l2_norm_matches_parseval() {
        let f = TaylorPoly::from_real(&[1.0, 1.0]);
        let samples = BoundarySamples::from_poly(&f, 16).unwrap();
        assert_abs_diff_eq!(samples.lp_norm(2.0), 2.0_f64.sqrt(), epsilon = 1e-13);
    }

    #[test]
    fn default_grid_size_is_alias_free_power_of_two() {
        assert_eq!(default_grid_size(0), 16);
        assert_eq!(default_grid_size(12), 64);
        assert!(default_grid_size(100).is_power_of_two());
        assert!(default_grid_size(100) >= 416);
    }

    #[test]
    fn rejects_bad_grid_size() {
        assert!(BoundarySamples::new(vec![Complex64::new(0.0, 0.0); 12]).is_err());
    }
}
