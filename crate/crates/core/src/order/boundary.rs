use num_complex::Complex;
use serde::Serialize;

use crate::error::{LensError, Result};
use crate::kernel::{half_plane_value, BoundaryAngle, LensParam, OrderKind};
use crate::scalar::{half_angle_trig, Real};

/// Values of the boundary parametrization at one angle.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BoundaryProfile<T> {
    pub alpha: T,
    pub t: T,
    /// Signed modulus proxy: `|ξ(t)|` on the upper half-circle, `−|ξ(t)|`
    /// on the lower one.
    pub b: T,
    pub xi_abs: T,
}

impl<T: Real> BoundaryProfile<T> {
    pub fn at(alpha: T, t: BoundaryAngle<T>) -> Result<Self> {
        let b = boundary_b(alpha, t)?;
        Ok(Self {
            alpha,
            t: t.t(),
            b,
            xi_abs: b.abs(),
        })
    }
}

/// `cot(t/2)`, i.e. `sin t / (1 − cos t)` without the cancellation near `t = 0`.
#[inline]
pub(crate) fn half_cot<T: Real>(t: T) -> T {
    (t / T::lit(2.0)).tan().recip()
}

/// Signed boundary modulus: `cot(t/2)^α` on `(0, π)` and `−(−cot(t/2))^α` on
/// `(π, 2π)`.
pub fn boundary_b<T: Real>(alpha: T, t: BoundaryAngle<T>) -> Result<T> {
    OrderKind::Starlike.check(alpha)?;
    Ok(signed_b(alpha, t.t()))
}

pub(crate) fn signed_b<T: Real>(alpha: T, t: T) -> T {
    let cot = half_cot(t);
    if cot >= T::zero() {
        cot.powf(alpha)
    } else {
        -(-cot).powf(alpha)
    }
}

/// `sin t = 2b^{1/α} / (1 + b^{2/α})` on the upper half-circle.
///
/// Evaluated as `sech(ln b / α)`, which neither overflows nor loses the
/// small values of `sin t` near the endpoints.
pub fn sin_from_b<T: Real>(alpha: T, b: T) -> Result<T> {
    OrderKind::Starlike.check(alpha)?;
    if !(b > T::zero()) {
        return Err(LensError::NonPositive {
            what: "b",
            value: b.as_f64(),
        });
    }
    Ok((b.ln() / alpha).cosh().recip())
}

/// `(b² + 1)² − 4b²cos²(πα/2)`, factored as `((b−c)² + s²)((b+c)² + s²)`
/// so no cancellation occurs near `b = 1` for small `α`.
#[inline]
fn quartic_denominator<T: Real>(b: T, sin: T, cos: T) -> T {
    let s2 = sin * sin;
    ((b - cos).powi(2) + s2) * ((b + cos).powi(2) + s2)
}

pub(crate) fn starlike_value_upper<T: Real>(alpha: T, t: T) -> T {
    let (s, c) = half_angle_trig(alpha);
    let b = signed_b(alpha, t);
    let two = T::lit(2.0);
    alpha * s * (b / t.sin()) * (two * (b * b + T::one()) / quartic_denominator(b, s, c))
}

pub(crate) fn convexity_value_upper<T: Real>(alpha: T, t: T) -> T {
    let (s, c) = half_angle_trig(alpha);
    let b = signed_b(alpha, t);
    // 1 + 2bc + b² = (b + c)² + s²
    let im_quotient = T::lit(2.0) * b * s / ((b + c).powi(2) + s * s);
    let im_factor = (T::lit(2.0) * t.sin()).recip();
    T::lit(2.0) * alpha * im_factor * im_quotient
}

fn upper_angle<T: Real>(t: BoundaryAngle<T>) -> T {
    if t.in_upper_half() {
        t.t()
    } else {
        t.reflected().t()
    }
}

/// Boundary value of `Re{z ℓ'/ℓ}` at `z = e^{it}`:
///
/// ```text
/// α sin(πα/2) · (b/sin t) · 2(b²+1) / ((b²+1)² − 4b² cos²(πα/2))
/// ```
///
/// The lower half-circle is mapped to the upper one by conjugation, which
/// leaves the real part unchanged.
pub fn boundary_starlike_value<T: Real>(alpha: T, t: BoundaryAngle<T>) -> Result<T> {
    OrderKind::Convex.check(alpha)?;
    Ok(starlike_value_upper(alpha, upper_angle(t)))
}

/// Boundary value of `Re{1 + z ℓ''/ℓ'}` at `z = e^{it}`, as the product
/// `2α · Im{z/(1−z²)} · Im{(ξ−1)/(ξ+1)}` with
/// `Im{z/(1−z²)} = 1/(2 sin t)` and
/// `Im{(ξ−1)/(ξ+1)} = 2b sin(πα/2) / (1 + 2b cos(πα/2) + b²)`.
pub fn boundary_convexity_value<T: Real>(alpha: T, t: BoundaryAngle<T>) -> Result<T> {
    OrderKind::Convex.check(alpha)?;
    Ok(convexity_value_upper(alpha, upper_angle(t)))
}

/// Same boundary value from the complex quantities directly:
/// `8α Im{z} Im{ξ} / (|ξ+1|² |1−z²|²)`.
pub fn boundary_convexity_value_alt<T: Real>(alpha: T, t: BoundaryAngle<T>) -> Result<T> {
    OrderKind::Convex.check(alpha)?;
    let p = LensParam::new(alpha)?;
    let z = t.point();
    let xi = half_plane_value(&p, z)?.xi;
    let one = Complex::new(T::one(), T::zero());
    let xi1 = (xi + one).norm_sqr();
    let dz = (one - z * z).norm_sqr();
    Ok(T::lit(8.0) * alpha * z.im * xi.im / (xi1 * dz))
}
