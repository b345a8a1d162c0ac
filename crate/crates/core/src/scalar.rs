//! Scalar abstraction shared by every module.

use std::fmt::{Debug, Display};

use num_complex::Complex;
use num_traits::{Float, FloatConst, FromPrimitive};

/// Real field the library is generic over (`f32` and `f64`).
pub trait Real: Float + FloatConst + FromPrimitive + Default + Debug + Display + Send + Sync + 'static {
    /// Converts an `f64` literal. Infallible for the implemented types.
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("f64 literal representable")
    }

    fn to_f64_lossy(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }

    /// Default absolute comparison tolerance for this precision.
    fn default_tolerance() -> Self;
}

impl Real for f64 {
    fn default_tolerance() -> Self {
        1e-12
    }
}

impl Real for f32 {
    fn default_tolerance() -> Self {
        1e-5
    }
}

/// Complex scalar over `T`.
pub type C<T> = Complex<T>;

#[inline]
pub fn c<T: Real>(re: f64, im: f64) -> C<T> {
    Complex::new(T::lit(re), T::lit(im))
}

#[inline]
pub fn re<T: Real>(x: T) -> C<T> {
    Complex::new(x, T::zero())
}

#[inline]
pub fn i_unit<T: Real>() -> C<T> {
    Complex::new(T::zero(), T::one())
}

/// `e^{i angle}`.
#[inline]
pub fn phase<T: Real>(angle: T) -> C<T> {
    Complex::new(angle.cos(), angle.sin())
}
