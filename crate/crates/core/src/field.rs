//! Real-valued periodic field with synchronized physical samples and
//! spectral coefficients.

use std::sync::Arc;

use num_complex::Complex;

use crate::error::{Result, SpectralError};
use crate::grid::GridSpec;
use crate::scalar::Scalar;

/// A real field `u` on a periodic grid.
///
/// Samples and coefficients are kept consistent at all times: every
/// constructor and operation refreshes whichever representation it did not
/// compute directly. Coefficients follow the Fourier-series convention
/// `u(x) = sum_m c_m e^{i xi_m x}` with `xi_m = pi*m/L`, so a real cosine of
/// unit amplitude carries `1/2` at each of `+-xi`. Coefficients of a real
/// field satisfy conjugate symmetry `c_{-m} = conj(c_m)`.
#[derive(Clone)]
pub struct Field<T: Scalar> {
    grid: Arc<GridSpec<T>>,
    samples: Vec<T>,
    coeffs: Vec<Complex<T>>,
}

/// Forward transform of raw samples into Fourier-series coefficients.
///
/// The grid starts at `x = -L`, which shows up as the alternating sign
/// `(-1)^i` relative to an index-space DFT.
pub fn to_spectral<T: Scalar>(grid: &GridSpec<T>, samples: &[T]) -> Vec<Complex<T>> {
    let n = grid.num_points();
    debug_assert_eq!(samples.len(), n);
    let mut buf: Vec<Complex<T>> = samples
        .iter()
        .map(|&s| Complex::new(s, T::zero()))
        .collect();
    grid.fft_forward().process(&mut buf);
    let inv_n = T::one() / T::of(n as f64);
    for (i, c) in buf.iter_mut().enumerate() {
        let sign = if i % 2 == 0 { inv_n } else { -inv_n };
        *c = c.scale(sign);
    }
    buf
}

/// Inverse transform: samples of `sum_m c_m e^{i xi_m x}` at the grid points,
/// real part.
pub fn from_spectral<T: Scalar>(grid: &GridSpec<T>, coeffs: &[Complex<T>]) -> Vec<T> {
    let n = grid.num_points();
    debug_assert_eq!(coeffs.len(), n);
    let mut buf: Vec<Complex<T>> = coeffs
        .iter()
        .enumerate()
        .map(|(i, &c)| if i % 2 == 0 { c } else { -c })
        .collect();
    grid.fft_inverse().process(&mut buf);
    buf.into_iter().map(|c| c.re).collect()
}

impl<T: Scalar> Field<T> {
    /// Field from physical samples; rejects NaN/Inf.
    pub fn from_samples(grid: Arc<GridSpec<T>>, samples: Vec<T>) -> Result<Self> {
        if samples.len() != grid.num_points() {
            return Err(SpectralError::GridMismatch);
        }
        if !samples.iter().all(|s| s.is_finite()) {
            return Err(SpectralError::NonFiniteField);
        }
        let coeffs = to_spectral(&grid, &samples);
        Ok(Field {
            grid,
            samples,
            coeffs,
        })
    }

    /// Field from spectral coefficients; rejects NaN/Inf.
    ///
    /// Coefficients are projected onto their conjugate-symmetric part, so the
    /// reconstructed field is exactly real. For coefficients of a real field
    /// the projection is the identity up to rounding.
    pub fn from_coeffs(grid: Arc<GridSpec<T>>, coeffs: Vec<Complex<T>>) -> Result<Self> {
        let n = grid.num_points();
        if coeffs.len() != n {
            return Err(SpectralError::GridMismatch);
        }
        if !coeffs.iter().all(|c| c.re.is_finite() && c.im.is_finite()) {
            return Err(SpectralError::NonFiniteField);
        }
        let half = T::of(0.5);
        let sym: Vec<Complex<T>> = (0..n)
            .map(|i| {
                let j = (n - i) % n;
                (coeffs[i] + coeffs[j].conj()).scale(half)
            })
            .collect();
        let samples = from_spectral(&grid, &sym);
        Ok(Field {
            grid,
            samples,
            coeffs: sym,
        })
    }

    pub fn zeros(grid: Arc<GridSpec<T>>) -> Self {
        let n = grid.num_points();
        Field {
            grid,
            samples: vec![T::zero(); n],
            coeffs: vec![Complex::new(T::zero(), T::zero()); n],
        }
    }

    pub fn constant(grid: Arc<GridSpec<T>>, value: T) -> Result<Self> {
        let n = grid.num_points();
        Self::from_samples(grid, vec![value; n])
    }

    /// Sample a closure over the grid points.
    pub fn from_fn(grid: Arc<GridSpec<T>>, f: impl Fn(T) -> T) -> Result<Self> {
        let samples: Vec<T> = grid.points().map(f).collect();
        Self::from_samples(grid, samples)
    }

    pub fn grid(&self) -> &Arc<GridSpec<T>> {
        &self.grid
    }

    pub fn samples(&self) -> &[T] {
        &self.samples
    }

    pub fn coeffs(&self) -> &[Complex<T>] {
        &self.coeffs
    }

    pub fn is_finite(&self) -> bool {
        self.samples.iter().all(|s| s.is_finite())
    }

    /// Mean over one period, i.e. the zero-mode coefficient.
    pub fn mean(&self) -> T {
        self.coeffs[0].re
    }

    pub fn max_abs(&self) -> T {
        self.samples
            .iter()
            .fold(T::zero(), |acc, &s| acc.max(s.abs()))
    }

    pub fn max_abs_diff(&self, other: &Self) -> T {
        self.samples
            .iter()
            .zip(&other.samples)
            .fold(T::zero(), |acc, (&a, &b)| acc.max((a - b).abs()))
    }

    fn from_parts(grid: Arc<GridSpec<T>>, coeffs: Vec<Complex<T>>) -> Self {
        let samples = from_spectral(&grid, &coeffs);
        Field {
            grid,
            samples,
            coeffs,
        }
    }

    /// Spectral derivative of the given order: multiplies bin `xi` by
    /// `(i*xi)^order`. The Nyquist bin is zeroed.
    pub fn derivative(&self, order: u32) -> Self {
        let n = self.grid.num_points();
        let xi = self.grid.wavenumbers();
        let mut coeffs: Vec<Complex<T>> = self
            .coeffs
            .iter()
            .zip(xi)
            .map(|(&c, &x)| c * Complex::new(T::zero(), x).powu(order))
            .collect();
        coeffs[n / 2] = Complex::new(T::zero(), T::zero());
        Self::from_parts(self.grid.clone(), coeffs)
    }

    /// Apply a Fourier multiplier `a(xi)` coefficient-wise.
    ///
    /// Realness is preserved when the symbol has Hermitian symmetry
    /// `a(-xi) = conj(a(xi))`; real even symbols always qualify. The Nyquist
    /// bin is zeroed. Errors if the symbol is NaN/Inf at any grid wavenumber.
    pub fn apply_multiplier(&self, symbol: impl Fn(T) -> Complex<T>) -> Result<Self> {
        let n = self.grid.num_points();
        let xi = self.grid.wavenumbers();
        let mut coeffs = Vec::with_capacity(n);
        for (&c, &x) in self.coeffs.iter().zip(xi) {
            let a = symbol(x);
            if !(a.re.is_finite() && a.im.is_finite()) {
                return Err(SpectralError::NonFiniteSymbol { xi: x.as_f64() });
            }
            coeffs.push(c * a);
        }
        coeffs[n / 2] = Complex::new(T::zero(), T::zero());
        Ok(Self::from_parts(self.grid.clone(), coeffs))
    }

    /// Apply a real-valued symbol.
    pub fn apply_real_multiplier(&self, symbol: impl Fn(T) -> T) -> Result<Self> {
        self.apply_multiplier(|x| Complex::new(symbol(x), T::zero()))
    }

    /// Apply precomputed real symbol values in bin order (filter-bank rows).
    pub fn apply_symbol_values(&self, values: &[T]) -> Result<Self> {
        let n = self.grid.num_points();
        if values.len() != n {
            return Err(SpectralError::GridMismatch);
        }
        let mut coeffs: Vec<Complex<T>> = self
            .coeffs
            .iter()
            .zip(values)
            .map(|(&c, &v)| c.scale(v))
            .collect();
        coeffs[n / 2] = Complex::new(T::zero(), T::zero());
        Ok(Self::from_parts(self.grid.clone(), coeffs))
    }

    /// Zero all coefficients with `|xi| > fraction * nyquist`.
    pub fn dealias(&self, fraction: T) -> Result<Self> {
        if !(fraction > T::zero() && fraction <= T::one()) {
            return Err(SpectralError::BadFraction(fraction.as_f64()));
        }
        let cutoff = fraction * self.grid.nyquist();
        let xi = self.grid.wavenumbers();
        let coeffs: Vec<Complex<T>> = self
            .coeffs
            .iter()
            .zip(xi)
            .map(|(&c, &x)| {
                if x.abs() > cutoff {
                    Complex::new(T::zero(), T::zero())
                } else {
                    c
                }
            })
            .collect();
        Ok(Self::from_parts(self.grid.clone(), coeffs))
    }

    /// Fraction of spectral energy strictly above `fraction * nyquist`.
    pub fn energy_above(&self, fraction: T) -> T {
        let cutoff = fraction * self.grid.nyquist();
        let xi = self.grid.wavenumbers();
        let mut tail = T::zero();
        let mut total = T::zero();
        for (&c, &x) in self.coeffs.iter().zip(xi) {
            let e = c.norm_sqr();
            total = total + e;
            if x.abs() > cutoff {
                tail = tail + e;
            }
        }
        if total > T::zero() {
            tail / total
        } else {
            T::zero()
        }
    }

    /// Pointwise product `u*v` (physical space), then re-transformed.
    pub fn pointwise_mul(&self, other: &Self) -> Result<Self> {
        if !self.grid.same_grid(&other.grid) {
            return Err(SpectralError::GridMismatch);
        }
        let samples: Vec<T> = self
            .samples
            .iter()
            .zip(&other.samples)
            .map(|(&a, &b)| a * b)
            .collect();
        let coeffs = to_spectral(&self.grid, &samples);
        Ok(Field {
            grid: self.grid.clone(),
            samples,
            coeffs,
        })
    }

    /// Pointwise integer power `u^k`.
    pub fn powi(&self, k: u32) -> Self {
        let samples: Vec<T> = self.samples.iter().map(|&a| a.powi(k as i32)).collect();
        let coeffs = to_spectral(&self.grid, &samples);
        Field {
            grid: self.grid.clone(),
            samples,
            coeffs,
        }
    }

    pub fn scale(&self, factor: T) -> Self {
        Field {
            grid: self.grid.clone(),
            samples: self.samples.iter().map(|&a| a * factor).collect(),
            coeffs: self.coeffs.iter().map(|&c| c.scale(factor)).collect(),
        }
    }

    /// Linear combination `self + factor * other`, no transform needed.
    pub fn add_scaled(&self, factor: T, other: &Self) -> Result<Self> {
        if !self.grid.same_grid(&other.grid) {
            return Err(SpectralError::GridMismatch);
        }
        Ok(Field {
            grid: self.grid.clone(),
            samples: self
                .samples
                .iter()
                .zip(&other.samples)
                .map(|(&a, &b)| a + factor * b)
                .collect(),
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(&a, &b)| a + b.scale(factor))
                .collect(),
        })
    }

    /// Spectral restriction onto a coarser grid with the same half length.
    pub fn restrict_to(&self, coarse: Arc<GridSpec<T>>) -> Result<Self> {
        if coarse.half_length() != self.grid.half_length()
            || coarse.num_points() > self.grid.num_points()
        {
            return Err(SpectralError::GridMismatch);
        }
        let n_src = self.grid.num_points();
        let n = coarse.num_points();
        let mut coeffs = vec![Complex::new(T::zero(), T::zero()); n];
        for i in 0..n {
            let m = if i < n / 2 { i as i64 } else { i as i64 - n as i64 };
            let src = m.rem_euclid(n_src as i64) as usize;
            coeffs[i] = self.coeffs[src];
        }
        coeffs[n / 2] = Complex::new(T::zero(), T::zero());
        Field::from_coeffs(coarse, coeffs)
    }
}

impl<T: Scalar> std::ops::Add for &Field<T> {
    type Output = Field<T>;
    fn add(self, rhs: Self) -> Field<T> {
        self.add_scaled(T::one(), rhs).expect("grid mismatch")
    }
}

impl<T: Scalar> std::ops::Sub for &Field<T> {
    type Output = Field<T>;
    fn sub(self, rhs: Self) -> Field<T> {
        self.add_scaled(-T::one(), rhs).expect("grid mismatch")
    }
}

impl<T: Scalar> std::ops::Neg for &Field<T> {
    type Output = Field<T>;
    fn neg(self) -> Field<T> {
        self.scale(-T::one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::make_grid;
    use std::f64::consts::PI;

    fn grid_2pi(n: usize) -> Arc<GridSpec<f64>> {
        make_grid(PI, n).unwrap()
    }

    #[test]
    fn cosine_coefficients() {
        let g = grid_2pi(64);
        let f = Field::from_fn(g.clone(), |x| x.cos()).unwrap();
        for (i, &c) in f.coeffs().iter().enumerate() {
            let m = if i < 32 { i as i64 } else { i as i64 - 64 };
            let expect = if m.abs() == 1 { 0.5 } else { 0.0 };
            assert!(
                (c.re - expect).abs() < 1e-13 && c.im.abs() < 1e-13,
                "bin {m}: {c}"
            );
        }
    }

    #[test]
    fn zero_field_zero_coeffs() {
        let g = grid_2pi(32);
        let f = Field::from_samples(g, vec![0.0; 32]).unwrap();
        assert!(f.coeffs().iter().all(|c| c.norm() == 0.0));
    }

    #[test]
    fn rejects_non_finite() {
        let g = grid_2pi(32);
        let mut s = vec![0.0; 32];
        s[3] = f64::NAN;
        assert!(matches!(
            Field::from_samples(g.clone(), s),
            Err(SpectralError::NonFiniteField)
        ));
        let mut c = vec![Complex::new(0.0, 0.0); 32];
        c[1] = Complex::new(f64::INFINITY, 0.0);
        assert!(Field::from_coeffs(g, c).is_err());
    }

    #[test]
    fn derivative_of_sine() {
        let g = grid_2pi(64);
        let f = Field::from_fn(g.clone(), |x| x.sin()).unwrap();
        let d = f.derivative(1);
        let expect = Field::from_fn(g, |x| x.cos()).unwrap();
        assert!(d.max_abs_diff(&expect) < 1e-12);
    }

    #[test]
    fn derivative_of_constant_is_zero() {
        let g = grid_2pi(32);
        let f = Field::constant(g, 3.25).unwrap();
        assert!(f.derivative(1).max_abs() < 1e-14);
        assert!(f.derivative(2).max_abs() < 1e-14);
    }

    #[test]
    fn identity_multiplier() {
        let g = grid_2pi(64);
        let f = Field::from_fn(g, |x| x.sin() + 0.3 * (2.0 * x).cos()).unwrap();
        let out = f
            .apply_multiplier(|_| Complex::new(1.0, 0.0))
            .unwrap();
        assert!(f.max_abs_diff(&out) < 1e-13);
    }

    #[test]
    fn helmholtz_symbol_on_constant_and_cosine() {
        let g = grid_2pi(64);
        let c = Field::constant(g.clone(), 2.0).unwrap();
        let out = c.apply_real_multiplier(|x| 1.0 / (1.0 + x * x)).unwrap();
        assert!(out.max_abs_diff(&c) < 1e-13);

        let f = Field::from_fn(g.clone(), |x| x.cos()).unwrap();
        let out = f.apply_real_multiplier(|x| 1.0 / (1.0 + x * x)).unwrap();
        let expect = Field::from_fn(g, |x| 0.5 * x.cos()).unwrap();
        assert!(out.max_abs_diff(&expect) < 1e-13);
    }

    #[test]
    fn non_finite_symbol_rejected() {
        let g = grid_2pi(32);
        let f = Field::from_fn(g, |x| x.sin()).unwrap();
        let r = f.apply_real_multiplier(|x| 1.0 / x);
        assert!(matches!(r, Err(SpectralError::NonFiniteSymbol { .. })));
    }

    #[test]
    fn dealias_drops_high_mode() {
        let g = grid_2pi(64); // nyquist 32
        // single mode at 0.9 * nyquist
        let f = Field::from_fn(g.clone(), |x| (28.0 * x).cos()).unwrap();
        let cut = f.dealias(2.0 / 3.0).unwrap();
        assert!(cut.max_abs() < 1e-13);
        // fraction 1 keeps a band-limited field
        let f2 = Field::from_fn(g, |x| (3.0 * x).sin()).unwrap();
        assert!(f2.dealias(1.0).unwrap().max_abs_diff(&f2) < 1e-13);
    }

    #[test]
    fn dealias_rejects_bad_fraction() {
        let g = grid_2pi(32);
        let f = Field::zeros(g);
        assert!(f.dealias(0.0).is_err());
        assert!(f.dealias(1.5).is_err());
    }

    #[test]
    fn product_of_well_resolved_fields_unaffected_by_dealias() {
        // u, v band-limited to fraction/(k+1) of nyquist with k = 1:
        // their product is below the cutoff, so dealias is a no-op.
        let g = grid_2pi(128); // nyquist 64
        let frac = 2.0 / 3.0;
        let u = Field::from_fn(g.clone(), |x| (15.0 * x).cos()).unwrap();
        let v = Field::from_fn(g, |x| (21.0 * x).sin() + 0.5).unwrap();
        let prod = u.pointwise_mul(&v).unwrap();
        assert!(prod.dealias(frac).unwrap().max_abs_diff(&prod) < 1e-13);
    }

    #[test]
    fn restriction_truncates_spectrum() {
        let fine = grid_2pi(128);
        let coarse = grid_2pi(32);
        let f = Field::from_fn(fine, |x| (3.0 * x).cos() + (40.0 * x).sin()).unwrap();
        let r = f.restrict_to(coarse.clone()).unwrap();
        let expect = Field::from_fn(coarse, |x| (3.0 * x).cos()).unwrap();
        assert!(r.max_abs_diff(&expect) < 1e-12);
    }

    #[test]
    fn f32_round_trip() {
        let g = make_grid::<f32>(std::f32::consts::PI, 64).unwrap();
        let f = Field::from_fn(g.clone(), |x| x.sin() + 0.25 * (3.0 * x).cos()).unwrap();
        let back = Field::from_coeffs(g, f.coeffs().to_vec()).unwrap();
        assert!(f.max_abs_diff(&back) < 1e-5);
    }
}
