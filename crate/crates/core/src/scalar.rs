//! Scalar abstraction shared by the kernel and the order analysis.

use std::fmt::{Debug, Display};

use num_traits::{Float, FloatConst};

/// Real floating-point scalar the lens-map formulas are written against.
///
/// Implemented for `f32` and `f64`. Tolerances elsewhere in the crate are
/// tuned for `f64`; `f32` is supported for evaluation, not for the
/// verification suite.
pub trait Real: Float + FloatConst + Debug + Display + Send + Sync + 'static {
    /// Converts an `f64` literal into `Self`.
    fn lit(x: f64) -> Self;

    /// Lossy conversion back to `f64` for reporting and error payloads.
    fn as_f64(self) -> f64;
}

impl Real for f32 {
    #[inline]
    fn lit(x: f64) -> Self {
        x as f32
    }

    #[inline]
    fn as_f64(self) -> f64 {
        self as f64
    }
}

impl Real for f64 {
    #[inline]
    fn lit(x: f64) -> Self {
        x
    }

    #[inline]
    fn as_f64(self) -> f64 {
        self
    }
}

/// `sin(πα/2)` and `cos(πα/2)`, the two trigonometric constants every
/// boundary formula is built from.
#[inline]
pub(crate) fn half_angle_trig<T: Real>(alpha: T) -> (T, T) {
    (T::FRAC_PI_2() * alpha).sin_cos()
}
