//! Floating-point scalar abstraction: everything in this crate is generic
//! over `Scalar`, which is implemented by `f32` and `f64`.

use std::fmt::{Debug, Display, LowerExp};
use std::iter::Sum;

use num_traits::{Float, FloatConst, FromPrimitive};
use rustfft::FftNum;

/// Real scalar type usable for grid samples and spectral coefficients.
pub trait Scalar:
    Float + FloatConst + FromPrimitive + FftNum + Sum + Display + LowerExp + Debug
{
    /// Lossy conversion from `f64`, for literals and tolerances.
    fn of(x: f64) -> Self {
        Self::from_f64(x).expect("f64 literal not representable")
    }

    /// Lossy conversion to `f64`, for reporting.
    fn as_f64(self) -> f64 {
        self.to_f64().expect("scalar not representable as f64")
    }
}

impl Scalar for f32 {}
impl Scalar for f64 {}
