use crate::error::Result;
use crate::kernel::OrderKind;
use crate::scalar::{half_angle_trig, Real};

/// Order of starlikeness: `|α| / sin(π|α|/2)` for `|α| ≤ 1`, and `0` for
/// `1 < |α| ≤ 2`, where `z ℓ'/ℓ → 0` at `z → ±1`.
pub fn closed_form_starlike_order<T: Real>(alpha: T) -> Result<T> {
    OrderKind::Starlike.check(alpha)?;
    let a = alpha.abs();
    if a > T::one() {
        return Ok(T::zero());
    }
    let (s, _) = half_angle_trig(a);
    Ok(a / s)
}

/// Order of convexity: `|α| sin(π|α|/2) / (1 + cos(π|α|/2))`.
pub fn closed_form_convex_order<T: Real>(alpha: T) -> Result<T> {
    OrderKind::Convex.check(alpha)?;
    let a = alpha.abs();
    let (s, c) = half_angle_trig(a);
    Ok(a * s / (T::one() + c))
}

pub fn closed_form_order<T: Real>(alpha: T, kind: OrderKind) -> Result<T> {
    match kind {
        OrderKind::Starlike => closed_form_starlike_order(alpha),
        OrderKind::Convex => closed_form_convex_order(alpha),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::LensError;

    #[test]
    fn starlike_examples() {
        assert!((closed_form_starlike_order::<f64>(1.0).unwrap() - 1.0).abs() < 1e-15);
        let v = closed_form_starlike_order::<f64>(0.5).unwrap();
        assert!((v - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-6);
        assert_eq!(closed_form_starlike_order::<f64>(1.5).unwrap(), 0.0);
        assert_eq!(closed_form_starlike_order::<f64>(-2.0).unwrap(), 0.0);
        assert_eq!(
            closed_form_starlike_order::<f64>(0.0),
            Err(LensError::ZeroAlpha)
        );
        assert!(closed_form_starlike_order::<f64>(2.1).is_err());
    }

    #[test]
    fn convex_examples() {
        assert!((closed_form_convex_order::<f64>(1.0).unwrap() - 1.0).abs() < 1e-15);
        assert!((closed_form_convex_order::<f64>(0.5).unwrap() - 0.207107).abs() < 1e-6);
        let v = closed_form_convex_order::<f64>(0.1).unwrap();
        let expected =
            0.1 * (0.05 * std::f64::consts::PI).sin() / (1.0 + (0.05 * std::f64::consts::PI).cos());
        assert!((v - expected).abs() < 1e-16);
        assert!((v - 0.0078702).abs() < 1e-7);
        assert!(closed_form_convex_order::<f64>(1.5).is_err());
        assert_eq!(
            closed_form_convex_order::<f64>(0.0),
            Err(LensError::ZeroAlpha)
        );
    }

    #[test]
    fn small_alpha_limits() {
        let s = closed_form_starlike_order::<f64>(1e-6).unwrap();
        assert!((s - 2.0 / std::f64::consts::PI).abs() < 1e-9);
        assert!(closed_form_convex_order::<f64>(1e-6).unwrap() < 1e-11);
    }
}
