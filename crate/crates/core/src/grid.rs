//! Uniform periodic sampling grid on `[-L, L)`.

use std::fmt;
use std::sync::Arc;

use rustfft::{Fft, FftPlanner};

use crate::error::{Result, SpectralError};
use crate::scalar::Scalar;

/// Periodic grid: `num_points` equispaced samples of `[-L, L)`, period `2L`.
///
/// Wavenumbers are `xi_m = pi*m/L` for `m = -N/2 .. N/2-1`, stored in FFT bin
/// order (`m = i` for `i < N/2`, `m = i - N` otherwise), so `wavenumbers()[i]`
/// pairs with coefficient bin `i`. Forward/inverse FFT plans are built once
/// and shared.
pub struct GridSpec<T: Scalar> {
    half_length: T,
    num_points: usize,
    spacing: T,
    wavenumbers: Vec<T>,
    fwd: Arc<dyn Fft<T>>,
    inv: Arc<dyn Fft<T>>,
}

/// Build a grid, validating the size constraints.
pub fn make_grid<T: Scalar>(half_length: T, num_points: usize) -> Result<Arc<GridSpec<T>>> {
    if !(half_length.is_finite() && half_length > T::zero()) {
        return Err(SpectralError::BadHalfLength(half_length.as_f64()));
    }
    if num_points < 16 || !num_points.is_power_of_two() {
        return Err(SpectralError::BadGridSize(num_points));
    }
    let n = num_points;
    let spacing = T::of(2.0) * half_length / T::of(n as f64);
    let dxi = T::PI() / half_length;
    let wavenumbers = (0..n)
        .map(|i| {
            let m = if i < n / 2 { i as i64 } else { i as i64 - n as i64 };
            dxi * T::of(m as f64)
        })
        .collect();
    let mut planner = FftPlanner::new();
    let fwd = planner.plan_fft_forward(n);
    let inv = planner.plan_fft_inverse(n);
    Ok(Arc::new(GridSpec {
        half_length,
        num_points,
        spacing,
        wavenumbers,
        fwd,
        inv,
    }))
}

impl<T: Scalar> GridSpec<T> {
    pub fn half_length(&self) -> T {
        self.half_length
    }

    pub fn num_points(&self) -> usize {
        self.num_points
    }

    pub fn spacing(&self) -> T {
        self.spacing
    }

    /// Wavenumbers in FFT bin order.
    pub fn wavenumbers(&self) -> &[T] {
        &self.wavenumbers
    }

    /// Largest resolvable wavenumber, `pi*N/(2L)`.
    pub fn nyquist(&self) -> T {
        T::PI() * T::of(self.num_points as f64) / (T::of(2.0) * self.half_length)
    }

    /// Sample location of index `i`: `x_i = -L + i*dx`.
    pub fn point(&self, i: usize) -> T {
        -self.half_length + self.spacing * T::of(i as f64)
    }

    /// All sample locations.
    pub fn points(&self) -> impl Iterator<Item = T> + '_ {
        (0..self.num_points).map(|i| self.point(i))
    }

    pub(crate) fn fft_forward(&self) -> &Arc<dyn Fft<T>> {
        &self.fwd
    }

    pub(crate) fn fft_inverse(&self) -> &Arc<dyn Fft<T>> {
        &self.inv
    }

    pub fn same_grid(&self, other: &Self) -> bool {
        std::ptr::eq(self, other)
            || (self.num_points == other.num_points && self.half_length == other.half_length)
    }
}

impl<T: Scalar> fmt::Debug for GridSpec<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GridSpec")
            .field("half_length", &self.half_length)
            .field("num_points", &self.num_points)
            .field("spacing", &self.spacing)
            .finish()
    }
}

impl<T: Scalar> PartialEq for GridSpec<T> {
    fn eq(&self, other: &Self) -> bool {
        self.same_grid(other)
    }
}
