//! Complex-plane primitives and the lens map family.
//!
//! The lens map with opening parameter `α` is the composition
//!
//! ```text
//! z  ──ζ──▶  (1+z)/(1−z)  ──(·)^α──▶  ξ  ──▶  (ξ−1)/(ξ+1)
//! ```
//!
//! of a Möbius map onto the right half-plane, a principal power, and the
//! inverse Möbius map back onto the disc. The map is left unnormalized
//! (`ℓ'(0) = α`); both geometric operators evaluated here are invariant under
//! scalar multiples of the map, so the orders computed downstream are the
//! same as for the normalized function.

use num_complex::Complex;
use serde::{Deserialize, Serialize};

use crate::error::{LensError, Result};
use crate::scalar::Real;

/// Points closer than this to `±1` are rejected by every evaluator.
pub const SINGULARITY_GUARD: f64 = 1e-12;

/// Minimum admissible `|ξ + 1|` in the final Möbius step.
pub const DENOMINATOR_GUARD: f64 = 1e-12;

/// Relative slack allowed on the sign of `Re w` in [`half_plane_power`],
/// so boundary values of `ζ` that pick up rounding noise are accepted.
const HALF_PLANE_SLACK: f64 = 1e-10;

/// The two geometric orders, each with the parameter range where it is known.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OrderKind {
    /// `α ∈ [−2, 2] \ {0}`
    Starlike,
    /// `α ∈ [−1, 1] \ {0}`
    Convex,
}

impl OrderKind {
    /// Largest admissible `|α|`.
    pub fn bound(self) -> f64 {
        match self {
            OrderKind::Starlike => 2.0,
            OrderKind::Convex => 1.0,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            OrderKind::Starlike => "starlike",
            OrderKind::Convex => "convex",
        }
    }

    /// Checks that `alpha` is a finite nonzero value inside this regime.
    pub fn check<T: Real>(self, alpha: T) -> Result<()> {
        if !alpha.is_finite() {
            return Err(LensError::NonFiniteAlpha);
        }
        if alpha.is_zero() {
            return Err(LensError::ZeroAlpha);
        }
        let bound = self.bound();
        if alpha.abs() > T::lit(bound) {
            return Err(LensError::AlphaOutOfRange {
                alpha: alpha.as_f64(),
                regime: self.name(),
                lo: -bound,
                hi: bound,
            });
        }
        Ok(())
    }
}

/// Opening parameter of the lens map.
///
/// Construction enforces `α ≠ 0` and `|α| ≤ 2`; the convex regime is the
/// narrower `|α| ≤ 1` and is checked with [`LensParam::require`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LensParam<T> {
    alpha: T,
}

impl<T: Real> LensParam<T> {
    pub fn new(alpha: T) -> Result<Self> {
        OrderKind::Starlike.check(alpha)?;
        Ok(Self { alpha })
    }

    #[inline]
    pub fn alpha(&self) -> T {
        self.alpha
    }

    pub fn supports(&self, regime: OrderKind) -> bool {
        regime.check(self.alpha).is_ok()
    }

    pub fn require(&self, regime: OrderKind) -> Result<()> {
        regime.check(self.alpha)
    }

    /// The parameter `−α`; `ℓ_α(z) = ℓ_{−α}(−z)`.
    pub fn negated(&self) -> Self {
        Self { alpha: -self.alpha }
    }
}

/// A point of the open unit disc.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiscPoint<T> {
    z: Complex<T>,
}

impl<T: Real> DiscPoint<T> {
    pub fn new(z: Complex<T>) -> Result<Self> {
        if !(z.norm() < T::one()) {
            return Err(LensError::OutsideDisc {
                re: z.re.as_f64(),
                im: z.im.as_f64(),
            });
        }
        Ok(Self { z })
    }

    pub fn from_polar(r: T, t: T) -> Result<Self> {
        Self::new(Complex::from_polar(r, t))
    }

    #[inline]
    pub fn z(&self) -> Complex<T> {
        self.z
    }
}

impl<T> From<DiscPoint<T>> for Complex<T> {
    fn from(p: DiscPoint<T>) -> Self {
        p.z
    }
}

/// Boundary parameter `t` of `z = e^{it}`, kept away from `0`, `π` and `2π`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundaryAngle<T> {
    t: T,
}

impl<T: Real> BoundaryAngle<T> {
    /// Accepts `t ∈ (0, 2π)` whose distance from `{0, π, 2π}` exceeds `eps`.
    pub fn new(t: T, eps: T) -> Result<Self> {
        let pi = T::PI();
        let two_pi = pi + pi;
        let ok = t.is_finite() && t > eps && t < two_pi - eps && (t - pi).abs() > eps;
        if !ok {
            return Err(LensError::AngleGuard {
                t: t.as_f64(),
                eps: eps.as_f64(),
            });
        }
        Ok(Self { t })
    }

    #[inline]
    pub fn t(&self) -> T {
        self.t
    }

    /// `e^{it}`
    pub fn point(&self) -> Complex<T> {
        Complex::from_polar(T::one(), self.t)
    }

    pub fn in_upper_half(&self) -> bool {
        self.t < T::PI()
    }

    /// The conjugate angle `2π − t`.
    pub fn reflected(&self) -> Self {
        Self {
            t: T::TAU() - self.t,
        }
    }
}

/// Intermediate values `ζ(z)` and `ξ = ζ^α` of the lens map.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HalfPlaneValue<T> {
    pub zeta: Complex<T>,
    pub xi: Complex<T>,
}

fn guard_singular<T: Real>(z: Complex<T>) -> Result<()> {
    let one = Complex::new(T::one(), T::zero());
    let dist = (one - z).norm().min((one + z).norm());
    if !(dist >= T::lit(SINGULARITY_GUARD)) {
        return Err(LensError::NearSingularity {
            re: z.re.as_f64(),
            im: z.im.as_f64(),
            guard: SINGULARITY_GUARD,
        });
    }
    Ok(())
}

/// Möbius map `ζ(z) = (1+z)/(1−z)` of the disc onto the right half-plane.
pub fn mobius_zeta<T: Real>(z: Complex<T>) -> Result<Complex<T>> {
    let one = Complex::new(T::one(), T::zero());
    if z == one {
        return Err(LensError::Pole {
            re: z.re.as_f64(),
            im: z.im.as_f64(),
        });
    }
    Ok((one + z) / (one - z))
}

/// Principal power `w^α` on the closed right half-plane.
///
/// On that half-plane `arg w ∈ [−π/2, π/2]`, so the principal logarithm is
/// continuous along the whole range of `ζ`.
pub fn half_plane_power<T: Real>(w: Complex<T>, alpha: T) -> Result<Complex<T>> {
    let modulus = w.norm();
    if modulus.is_zero() {
        return Err(LensError::ZeroBase);
    }
    if w.re < -T::lit(HALF_PLANE_SLACK) * modulus {
        return Err(LensError::LeftHalfPlane {
            re: w.re.as_f64(),
            im: w.im.as_f64(),
        });
    }
    Ok(Complex::from_polar(modulus.powf(alpha), alpha * w.arg()))
}

/// `ζ(z)` and `ξ = ζ(z)^α` at a point away from `±1`.
pub fn half_plane_value<T: Real>(p: &LensParam<T>, z: Complex<T>) -> Result<HalfPlaneValue<T>> {
    guard_singular(z)?;
    let zeta = mobius_zeta(z)?;
    let xi = half_plane_power(zeta, p.alpha())?;
    Ok(HalfPlaneValue { zeta, xi })
}

fn xi_plus_one<T: Real>(xi: Complex<T>) -> Result<Complex<T>> {
    let denom = xi + T::one();
    let size = denom.norm();
    if !(size >= T::lit(DENOMINATOR_GUARD)) {
        return Err(LensError::DenominatorGuard {
            value: size.as_f64(),
        });
    }
    Ok(denom)
}

/// The lens map `ℓ_α(z) = (ξ−1)/(ξ+1)`.
pub fn lens_map<T: Real>(p: &LensParam<T>, z: Complex<T>) -> Result<Complex<T>> {
    let HalfPlaneValue { xi, .. } = half_plane_value(p, z)?;
    let denom = xi_plus_one(xi)?;
    Ok((xi - T::one()) / denom)
}

/// `ℓ_α'(z) = 4αξ / ((1−z²)(ξ+1)²)`, from `ξ' = 2αξ/(1−z²)`.
pub fn lens_first_derivative<T: Real>(p: &LensParam<T>, z: Complex<T>) -> Result<Complex<T>> {
    let HalfPlaneValue { xi, .. } = half_plane_value(p, z)?;
    let denom = xi_plus_one(xi)?;
    let one_minus_z2 = -(z * z) + T::one();
    Ok(xi * (T::lit(4.0) * p.alpha()) / (one_minus_z2 * denom * denom))
}

/// `Re{z ℓ'/ℓ}` through the closed form
/// `4αz(1−z²)^{α−1} / ((1+z)^{2α} − (1−z)^{2α})`.
///
/// Undefined at `z = 0`, where the limiting value is 1.
pub fn starlike_operator<T: Real>(p: &LensParam<T>, z: Complex<T>) -> Result<T> {
    if z.re.is_zero() && z.im.is_zero() {
        return Err(LensError::AtOrigin);
    }
    guard_singular(z)?;
    let alpha = p.alpha();
    let two_alpha = alpha + alpha;
    let plus = z + T::one();
    let minus = -z + T::one();
    let one_minus_z2 = -(z * z) + T::one();
    let numer = z * (T::lit(4.0) * alpha) * half_plane_power(one_minus_z2, alpha - T::one())?;
    let denom = half_plane_power(plus, two_alpha)? - half_plane_power(minus, two_alpha)?;
    Ok((numer / denom).re)
}

/// `Re{1 + z ℓ''/ℓ'}` through
/// `(1+z²)/(1−z²) − (2αz/(1−z²)) · (ξ−1)/(ξ+1)`.
pub fn convexity_operator<T: Real>(p: &LensParam<T>, z: Complex<T>) -> Result<T> {
    let lens = lens_map(p, z)?;
    let z2 = z * z;
    let one_minus_z2 = -z2 + T::one();
    let value =
        (z2 + T::one()) / one_minus_z2 - z * (T::lit(2.0) * p.alpha()) / one_minus_z2 * lens;
    Ok(value.re)
}
