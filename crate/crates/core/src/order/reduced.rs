//! One-variable reductions of the two boundary values.

use serde::Serialize;

use crate::error::{LensError, Result};
use crate::scalar::{half_angle_trig, Real};

/// Sign of a derivative, with rounding-level values reported as zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    /// Classifies `value` as zero when it is within a few ulps of `scale`,
    /// the magnitude of the terms that were summed to produce it.
    fn classify<T: Real>(value: T, scale: T) -> Self {
        if value.abs() <= T::lit(16.0) * T::epsilon() * scale {
            Sign::Zero
        } else if value < T::zero() {
            Sign::Negative
        } else {
            Sign::Positive
        }
    }
}

fn check_alpha<T: Real>(alpha: T, open_at_one: bool) -> Result<()> {
    let ok = alpha > T::zero()
        && if open_at_one {
            alpha < T::one()
        } else {
            alpha <= T::one()
        };
    if !ok {
        return Err(LensError::AlphaOutOfRange {
            alpha: alpha.as_f64(),
            regime: if open_at_one {
                "reduced derivative"
            } else {
                "reduced function"
            },
            lo: 0.0,
            hi: 1.0,
        });
    }
    Ok(())
}

fn check_x<T: Real>(x: T) -> Result<()> {
    if !(x > T::zero()) || !x.is_finite() {
        return Err(LensError::NonPositive {
            what: "x",
            value: x.as_f64(),
        });
    }
    Ok(())
}

/// `x(1+x²) / ((1+x²)² − 4x²cos²(πα/2))`; invariant under `x ↦ 1/x`.
fn starlike_rational<T: Real>(x: T, s: T, c: T) -> T {
    let u = if x > T::one() { x.recip() } else { x };
    let s2 = s * s;
    let denom = ((u - c).powi(2) + s2) * ((u + c).powi(2) + s2);
    u * (T::one() + u * u) / denom
}

/// Derivative of [`starlike_rational`]:
/// `(1−x²)((1+x²)² + 4x²cos²) / ((1+x²)² − 4x²cos²)²`.
fn starlike_rational_derivative<T: Real>(x: T, s: T, c: T) -> T {
    let x2 = x * x;
    let s2 = s * s;
    let denom = ((x - c).powi(2) + s2) * ((x + c).powi(2) + s2);
    let plus = (T::one() + x2).powi(2) + T::lit(4.0) * x2 * c * c;
    (T::one() - x2) * plus / (denom * denom)
}

/// Reduced starlike function
/// `g(x) = x(1+x²)/((1+x²)² − 4x²cos²(πα/2)) · (1 + x^{2/α}) / x^{1/α}`,
/// with `x = b(t)`.
pub fn reduced_starlike_g<T: Real>(alpha: T, x: T) -> Result<T> {
    check_alpha(alpha, false)?;
    check_x(x)?;
    let (s, c) = half_angle_trig(alpha);
    // (1 + x^{2/α}) / x^{1/α} = 2 cosh(ln x / α)
    let tail = T::lit(2.0) * (x.ln() / alpha).cosh();
    Ok(starlike_rational(x, s, c) * tail)
}

/// Sign of `g'(x)` for [`reduced_starlike_g`].
///
/// With `h(x) = 2 cosh(ln x / α)`, the product rule gives
/// `g' = f'h + fh'` and `h'/h = tanh(ln x / α) / (αx)`, so the sign of `g'`
/// is the sign of `f' + f · tanh(ln x / α) / (αx)`, which stays finite
/// where `h` itself overflows.
pub fn reduced_starlike_g_derivative_sign<T: Real>(alpha: T, x: T) -> Result<Sign> {
    check_alpha(alpha, true)?;
    check_x(x)?;
    let (s, c) = half_angle_trig(alpha);
    let first = if x > T::lit(1e18) {
        // f(x) = f(1/x)
        -starlike_rational_derivative(x.recip(), s, c) / (x * x)
    } else {
        starlike_rational_derivative(x, s, c)
    };
    let second = starlike_rational(x, s, c) * (x.ln() / alpha).tanh() / (alpha * x);
    Ok(Sign::classify(first + second, first.abs() + second.abs()))
}

/// `m(α) = 1/sin²(πα/2)`, the minimum of [`reduced_starlike_g`].
pub fn m_of_alpha<T: Real>(alpha: T) -> Result<T> {
    check_alpha(alpha, false)?;
    let (s, _) = half_angle_trig(alpha);
    Ok((s * s).recip())
}

/// Reduced convex function
/// `g(x) = (1+x²) / (x^{1−α} + 2x cos(πα/2) + x^{1+α})`, with `x = b(t)^{1/α}`.
///
/// Dividing through by `x` gives `cosh(ln x) / (cosh(α ln x) + cos(πα/2))`,
/// the form evaluated here.
pub fn reduced_convex_g<T: Real>(alpha: T, x: T) -> Result<T> {
    check_alpha(alpha, false)?;
    check_x(x)?;
    let (_, c) = half_angle_trig(alpha);
    let lx = x.ln();
    Ok(lx.cosh() / ((alpha * lx).cosh() + c))
}

/// Sign of `g'(x)` for [`reduced_convex_g`] via its numerator
/// `(1+α)x^α(x^{2−2α}−1) + 2cos(πα/2)(x²−1) + (1−α)x^{−α}(x^{2+2α}−1)`.
pub fn reduced_convex_g_derivative_sign<T: Real>(alpha: T, x: T) -> Result<Sign> {
    check_alpha(alpha, true)?;
    check_x(x)?;
    let (_, c) = half_angle_trig(alpha);
    let one = T::one();
    let two = T::lit(2.0);
    let terms = [
        (one + alpha) * x.powf(alpha) * (x.powf(two - two * alpha) - one),
        two * c * (x * x - one),
        (one - alpha) * x.powf(-alpha) * (x.powf(two + two * alpha) - one),
    ];
    let total = terms.iter().fold(T::zero(), |acc, &v| acc + v);
    let scale = terms.iter().fold(T::zero(), |acc, &v| acc + v.abs());
    Ok(Sign::classify(total, scale))
}
