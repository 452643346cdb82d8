//! Analytic polynomials and polynomials in z and z̄.
//!
//! `TaylorPoly` is the workhorse representation: every analytic function in
//! the crate (kernels, extremal functions, test functions) is a finite Taylor
//! series Σ aₙ zⁿ. `ZzbarPoly` represents smooth non-analytic inputs
//! Σ c_{ab} z^a z̄^b, the natural domain of the Bergman projection.

use num_complex::Complex64;

use crate::grid::PolarGrid;

/// Analytic polynomial Σ aₙ zⁿ stored by coefficient.
///
/// Trailing zero coefficients are trimmed on construction; the zero
/// polynomial is kept as a single zero coefficient with degree 0.
#[derive(Debug, Clone, PartialEq)]
pub struct TaylorPoly {
    coeffs: Vec<Complex64>,
}

impl TaylorPoly {
    pub fn new(mut coeffs: Vec<Complex64>) -> Self {
        while coeffs.len() > 1 && coeffs.last() == Some(&Complex64::new(0.0, 0.0)) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(Complex64::new(0.0, 0.0));
        }
        Self { coeffs }
    }

    pub fn from_real(coeffs: &[f64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Complex64::new(c, 0.0)).collect())
    }

    pub fn zero() -> Self {
        Self::new(vec![])
    }

    pub fn one() -> Self {
        Self::from_real(&[1.0])
    }

    /// z^n
    pub fn monomial(n: usize) -> Self {
        let mut c = vec![Complex64::new(0.0, 0.0); n + 1];
        c[n] = Complex64::new(1.0, 0.0);
        Self::new(c)
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Coefficient of z^n (zero beyond the stored degree).
    pub fn coeff(&self, n: usize) -> Complex64 {
        self.coeffs
            .get(n)
            .copied()
            .unwrap_or(Complex64::new(0.0, 0.0))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.norm() == 0.0)
    }

    /// Horner evaluation.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for &c in self.coeffs.iter().rev() {
            acc = acc * z + c;
        }
        acc
    }

    pub fn derivative(&self) -> TaylorPoly {
        if self.coeffs.len() <= 1 {
            return TaylorPoly::zero();
        }
        TaylorPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(n, &c)| c * n as f64)
                .collect(),
        )
    }

    pub fn scale(&self, c: Complex64) -> TaylorPoly {
        TaylorPoly::new(self.coeffs.iter().map(|&a| a * c).collect())
    }

    pub fn add(&self, other: &TaylorPoly) -> TaylorPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        TaylorPoly::new((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &TaylorPoly) -> TaylorPoly {
        self.add(&other.scale(Complex64::new(-1.0, 0.0)))
    }

    pub fn mul(&self, other: &TaylorPoly) -> TaylorPoly {
        let mut out = vec![Complex64::new(0.0, 0.0); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        TaylorPoly::new(out)
    }

    /// Coefficient-wise conjugation: aₙ ↦ conj(aₙ).
    ///
    /// On the boundary this sends f(e^{iθ}) to conj(f(e^{-iθ})); it is the
    /// involution that converts between the two duality pairings
    /// ∫F k dθ and ∫F k̄ dθ.
    pub fn conj_coeffs(&self) -> TaylorPoly {
        TaylorPoly::new(self.coeffs.iter().map(|c| c.conj()).collect())
    }

    /// f(e^{iα} z): rotates the disc variable.
    pub fn rotate(&self, alpha: f64) -> TaylorPoly {
        TaylorPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(n, &c)| c * Complex64::from_polar(1.0, alpha * n as f64))
                .collect(),
        )
    }

    /// z·f
    pub fn shift_up(&self) -> TaylorPoly {
        let mut c = vec![Complex64::new(0.0, 0.0)];
        c.extend_from_slice(&self.coeffs);
        TaylorPoly::new(c)
    }

    /// f/z for f with f(0) = 0 (the constant coefficient is dropped).
    pub fn shift_down(&self) -> TaylorPoly {
        if self.coeffs.len() <= 1 {
            return TaylorPoly::zero();
        }
        TaylorPoly::new(self.coeffs[1..].to_vec())
    }

    /// Drops trailing coefficients of modulus at most `cut` (absolute).
    ///
    /// Useful after transform round trips, which leave rounding-level dust
    /// in high coefficients.
    pub fn trim_trailing(&self, cut: f64) -> TaylorPoly {
        let mut coeffs = self.coeffs.clone();
        while coeffs.len() > 1 && coeffs.last().map(|c| c.norm() <= cut) == Some(true) {
            coeffs.pop();
        }
        TaylorPoly::new(coeffs)
    }

    /// Values on every node of a polar grid, ring-major.
    ///
    /// Per ring the polynomial is a trigonometric polynomial in θ with
    /// coefficients aₙ rⁿ, evaluated on the uniform angular grid by an
    /// inverse FFT. Requires degree < n_theta.
    pub fn on_grid(&self, grid: &PolarGrid) -> Vec<Complex64> {
        let m = grid.n_theta();
        assert!(self.degree() < m, "grid too coarse for this degree");
        let fft = rustfft::FftPlanner::new().plan_fft_inverse(m);
        let mut out = Vec::with_capacity(grid.n_r() * m);
        let mut ring = vec![Complex64::new(0.0, 0.0); m];
        for &r in grid.r_nodes() {
            ring.fill(Complex64::new(0.0, 0.0));
            let mut rn = 1.0;
            for (n, &c) in self.coeffs.iter().enumerate() {
                ring[n] = c * rn;
                rn *= r;
            }
            fft.process(&mut ring);
            out.extend_from_slice(&ring);
        }
        out
    }
}

/// Polynomial in z and z̄: Σ c_{ab} z^a z̄^b, stored dense by (a, b).
#[derive(Debug, Clone)]
pub struct ZzbarPoly {
    /// coeffs[a * (deg_zbar + 1) + b] is the coefficient of z^a z̄^b.
    coeffs: Vec<Complex64>,
    deg_z: usize,
    deg_zbar: usize,
}

impl ZzbarPoly {
    pub fn new(deg_z: usize, deg_zbar: usize) -> Self {
        Self {
            coeffs: vec![Complex64::new(0.0, 0.0); (deg_z + 1) * (deg_zbar + 1)],
            deg_z,
            deg_zbar,
        }
    }

    /// c · z^a z̄^b
    pub fn monomial(a: usize, b: usize, c: Complex64) -> Self {
        let mut p = Self::new(a, b);
        p.set(a, b, c);
        p
    }

    pub fn from_taylor(f: &TaylorPoly) -> Self {
        let mut p = Self::new(f.degree(), 0);
        for (a, &c) in f.coeffs().iter().enumerate() {
            p.set(a, 0, c);
        }
        p
    }

    pub fn deg_z(&self) -> usize {
        self.deg_z
    }

    pub fn deg_zbar(&self) -> usize {
        self.deg_zbar
    }

    pub fn coeff(&self, a: usize, b: usize) -> Complex64 {
        if a > self.deg_z || b > self.deg_zbar {
            Complex64::new(0.0, 0.0)
        } else {
            self.coeffs[a * (self.deg_zbar + 1) + b]
        }
    }

    pub fn set(&mut self, a: usize, b: usize, c: Complex64) {
        assert!(a <= self.deg_z && b <= self.deg_zbar);
        self.coeffs[a * (self.deg_zbar + 1) + b] = c;
    }

    /// Iterate (a, b, coefficient) over nonzero entries.
    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, Complex64)> + '_ {
        (0..=self.deg_z).flat_map(move |a| {
            (0..=self.deg_zbar).filter_map(move |b| {
                let c = self.coeff(a, b);
                (c.norm() > 0.0).then_some((a, b, c))
            })
        })
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        let zb = z.conj();
        let mut acc = Complex64::new(0.0, 0.0);
        // Horner in z of Horner-in-z̄ rows
        for a in (0..=self.deg_z).rev() {
            let mut row = Complex64::new(0.0, 0.0);
            for b in (0..=self.deg_zbar).rev() {
                row = row * zb + self.coeff(a, b);
            }
            acc = acc * z + row;
        }
        acc
    }

    /// ∂/∂z, treating z and z̄ as independent variables.
    pub fn dz(&self) -> ZzbarPoly {
        if self.deg_z == 0 {
            return ZzbarPoly::new(0, self.deg_zbar);
        }
        let mut out = ZzbarPoly::new(self.deg_z - 1, self.deg_zbar);
        for a in 1..=self.deg_z {
            for b in 0..=self.deg_zbar {
                out.set(a - 1, b, self.coeff(a, b) * a as f64);
            }
        }
        out
    }

    /// ∂/∂z̄.
    pub fn dzbar(&self) -> ZzbarPoly {
        if self.deg_zbar == 0 {
            return ZzbarPoly::new(self.deg_z, 0);
        }
        let mut out = ZzbarPoly::new(self.deg_z, self.deg_zbar - 1);
        for a in 0..=self.deg_z {
            for b in 1..=self.deg_zbar {
                out.set(a, b - 1, self.coeff(a, b) * b as f64);
            }
        }
        out
    }

    pub fn on_grid(&self, grid: &PolarGrid) -> Vec<Complex64> {
        let mut out = Vec::with_capacity(grid.n_r() * grid.n_theta());
        for i in 0..grid.n_r() {
            for j in 0..grid.n_theta() {
                out.push(self.eval(grid.node(i, j)));
            }
        }
        out
    }

    /// Values on the uniform boundary grid θ_j = 2πj/m.
    pub fn on_boundary(&self, m: usize) -> Vec<Complex64> {
        (0..m)
            .map(|j| {
                let theta = 2.0 * std::f64::consts::PI * j as f64 / m as f64;
                self.eval(Complex64::from_polar(1.0, theta))
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn eval_constant_term_at_origin() {
        let f = TaylorPoly::from_real(&[1.0, 1.0]); // 1 + z
        assert_eq!(f.eval(c(0.0, 0.0)), c(1.0, 0.0));
    }

    #[test]
    fn eval_cube_at_i() {
        let f = TaylorPoly::monomial(3);
        let got = f.eval(c(0.0, 1.0));
        assert_abs_diff_eq!(got.re, 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(got.im, -1.0, epsilon = 1e-15);
    }

    #[test]
    fn eval_quadratic_at_half() {
        let f = TaylorPoly::from_real(&[1.0, 2.0, 1.0]);
        assert_abs_diff_eq!(f.eval(c(0.5, 0.0)).re, 2.25, epsilon = 1e-15);
    }

    #[test]
    fn zero_poly_has_degree_zero() {
        let f = TaylorPoly::new(vec![c(0.0, 0.0); 5]);
        assert_eq!(f.degree(), 0);
        assert!(f.is_zero());
    }

    #[test]
    fn derivative_and_product() {
        let f = TaylorPoly::from_real(&[1.0, 2.0, 3.0]); // 1 + 2z + 3z^2
        let df = f.derivative();
        assert_eq!(df.coeffs(), &[c(2.0, 0.0), c(6.0, 0.0)]);
        let g = TaylorPoly::from_real(&[1.0, 1.0]);
        let fg = f.mul(&g);
        assert_eq!(
            fg.coeffs(),
            &[c(1.0, 0.0), c(3.0, 0.0), c(5.0, 0.0), c(3.0, 0.0)]
        );
    }

    #[test]
    fn grid_evaluation_matches_horner() {
        let f = TaylorPoly::new(vec![c(0.3, -0.1), c(0.0, 1.0), c(-0.5, 0.2)]);
        let grid = PolarGrid::new(8, 16).unwrap();
        let vals = f.on_grid(&grid);
        for i in 0..grid.n_r() {
            for j in 0..grid.n_theta() {
                let direct = f.eval(grid.node(i, j));
                let v = vals[i * grid.n_theta() + j];
                assert_abs_diff_eq!((v - direct).norm(), 0.0, epsilon = 1e-12);
            }
        }
    }

    #[test]
    fn zzbar_eval_and_derivatives() {
        // f = z^2 z̄ + 2 z̄^2
        let mut f = ZzbarPoly::new(2, 2);
        f.set(2, 1, c(1.0, 0.0));
        f.set(0, 2, c(2.0, 0.0));
        let z = c(0.3, 0.4);
        let expect = z * z * z.conj() + 2.0 * z.conj() * z.conj();
        assert_abs_diff_eq!((f.eval(z) - expect).norm(), 0.0, epsilon = 1e-14);

        let fz = f.dz(); // 2 z z̄
        assert_abs_diff_eq!((fz.eval(z) - 2.0 * z * z.conj()).norm(), 0.0, epsilon = 1e-14);
        let fzb = f.dzbar(); // z^2 + 4 z̄
        assert_abs_diff_eq!(
            (fzb.eval(z) - (z * z + 4.0 * z.conj())).norm(),
            0.0,
            epsilon = 1e-14
        );
    }

    #[test]
    fn rotation_acts_on_coefficients() {
        let f = TaylorPoly::from_real(&[1.0, 1.0, 1.0]);
        let alpha = 0.7;
        let g = f.rotate(alpha);
        let z = c(0.2, 0.5);
        let expect = f.eval(z * Complex64::from_polar(1.0, alpha));
        assert_abs_diff_eq!((g.eval(z) - expect).norm(), 0.0, epsilon = 1e-14);
    }
}
