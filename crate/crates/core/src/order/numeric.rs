use serde::{Deserialize, Serialize};

use super::boundary::{convexity_value_upper, half_cot, signed_b, starlike_value_upper};
use super::closed::closed_form_order;
use super::minimize::{minimize_boundary_with, DEFAULT_SCAN_POINTS};
use crate::error::Result;
use crate::kernel::{starlike_operator, LensParam, OrderKind};
use crate::scalar::Real;
use num_complex::Complex;

/// Tuning of the boundary minimization.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NumericOptions {
    /// Distance kept from `t = 0` and `t = π`.
    pub eps_t: f64,
    pub scan_points: usize,
    /// Bracket width at which golden-section refinement stops.
    pub t_tol: f64,
}

impl Default for NumericOptions {
    fn default() -> Self {
        Self {
            eps_t: 1e-9,
            scan_points: DEFAULT_SCAN_POINTS,
            t_tol: 1e-10,
        }
    }
}

/// Closed-form order next to the numerically minimized boundary value.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OrderResult<T> {
    pub alpha: T,
    pub kind: OrderKind,
    pub closed_form: T,
    pub numeric: T,
    /// Minimizing boundary angle; `0` when the infimum is the limit `z → 1`.
    pub minimizer_t: T,
    /// Reduced variable at the minimizer (`b(t)` for starlike,
    /// `b(t)^{1/α}` for convex); `None` for an endpoint limit.
    pub minimizer_x: Option<T>,
    pub endpoint_limit: bool,
    pub residual: T,
    pub tol: T,
    pub pass: bool,
}

/// `Re{z ℓ'/ℓ}` at `z = ±(1 − 10^{−k})` for `k = 2..=7`, returned as
/// `(k, value at +, value at −)`.
pub fn endpoint_samples<T: Real>(alpha: T) -> Result<Vec<(u32, T, T)>> {
    let p = LensParam::new(alpha)?;
    (2..=7)
        .map(|k| {
            let r = T::one() - T::lit(10f64.powi(-(k as i32)));
            let plus = starlike_operator(&p, Complex::new(r, T::zero()))?;
            let minus = starlike_operator(&p, Complex::new(-r, T::zero()))?;
            Ok((k, plus, minus))
        })
        .collect()
}

/// Infimum of `Re{z ℓ'/ℓ}` for `1 < |α| ≤ 2`.
///
/// The infimum is the limit at `z → ±1`, not an attained minimum. It is
/// reported as `0` when both radial sample sequences are positive and
/// strictly decreasing; otherwise the smallest sample is returned.
fn endpoint_infimum<T: Real>(alpha: T) -> Result<T> {
    let samples = endpoint_samples(alpha)?;
    let decays = |pick: &dyn Fn(&(u32, T, T)) -> T| {
        samples.windows(2).all(|w| pick(&w[1]) < pick(&w[0]))
            && samples.iter().all(|s| pick(s) > T::zero())
    };
    if decays(&|s| s.1) && decays(&|s| s.2) {
        return Ok(T::zero());
    }
    Ok(samples
        .iter()
        .flat_map(|s| [s.1, s.2])
        .fold(T::infinity(), T::min))
}

/// [`numeric_order_with`] using default [`NumericOptions`].
pub fn numeric_order<T: Real>(alpha: T, kind: OrderKind, tol: T) -> Result<OrderResult<T>> {
    numeric_order_with(alpha, kind, tol, &NumericOptions::default())
}

/// Order of the given kind from minimizing its boundary value over
/// `t ∈ [ε_t, π − ε_t]`; the lower half-circle carries the same values by
/// conjugation symmetry.
pub fn numeric_order_with<T: Real>(
    alpha: T,
    kind: OrderKind,
    tol: T,
    opts: &NumericOptions,
) -> Result<OrderResult<T>> {
    kind.check(alpha)?;
    let closed_form = closed_form_order(alpha, kind)?;

    let finish = |numeric: T, t: T, x: Option<T>, endpoint_limit: bool| {
        let residual = (closed_form - numeric).abs();
        OrderResult {
            alpha,
            kind,
            closed_form,
            numeric,
            minimizer_t: t,
            minimizer_x: x,
            endpoint_limit,
            residual,
            tol,
            pass: residual <= tol,
        }
    };

    if kind == OrderKind::Starlike && alpha.abs() > T::one() {
        let numeric = endpoint_infimum(alpha)?;
        return Ok(finish(numeric, T::zero(), None, true));
    }

    let eps = T::lit(opts.eps_t);
    let bracket = (eps, T::PI() - eps);
    let t_tol = T::lit(opts.t_tol);
    let min = match kind {
        OrderKind::Starlike => minimize_boundary_with(
            |t| starlike_value_upper(alpha, t),
            bracket,
            t_tol,
            opts.scan_points,
        )?,
        OrderKind::Convex => minimize_boundary_with(
            |t| convexity_value_upper(alpha, t),
            bracket,
            t_tol,
            opts.scan_points,
        )?,
    };
    let x = match kind {
        OrderKind::Starlike => signed_b(alpha, min.t),
        OrderKind::Convex => half_cot(min.t),
    };
    Ok(finish(min.value, min.t, Some(x), false))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_2;

    #[test]
    fn convex_half() {
        let r = numeric_order::<f64>(0.5, OrderKind::Convex, 1e-8).unwrap();
        assert!((r.numeric - 0.207107).abs() < 1e-6);
        assert!(r.residual < 1e-8 && r.pass);
        assert!((r.minimizer_t - FRAC_PI_2).abs() < 1e-6);
        assert!((r.minimizer_x.unwrap() - 1.0).abs() < 1e-6);
    }

    #[test]
    fn starlike_half() {
        let r = numeric_order::<f64>(0.5, OrderKind::Starlike, 1e-8).unwrap();
        assert!((r.numeric - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-6);
        assert!(r.pass && !r.endpoint_limit);
    }

    #[test]
    fn starlike_order_zero_regime() {
        for alpha in [1.5, -1.5, 2.0] {
            let r = numeric_order::<f64>(alpha, OrderKind::Starlike, 1e-8).unwrap();
            assert_eq!(r.numeric, 0.0);
            assert_eq!(r.closed_form, 0.0);
            assert!(r.pass && r.endpoint_limit);
            assert_eq!(r.minimizer_x, None);
        }
    }

    #[test]
    fn identity_map_is_flat() {
        for kind in [OrderKind::Starlike, OrderKind::Convex] {
            let r = numeric_order::<f64>(1.0, kind, 1e-9).unwrap();
            assert!((r.numeric - 1.0).abs() < 1e-12);
            assert!((r.minimizer_t - FRAC_PI_2).abs() < 1e-12);
        }
    }

    #[test]
    fn negative_alpha_is_evaluated_directly() {
        let r = numeric_order::<f64>(-0.4, OrderKind::Convex, 1e-8).unwrap();
        assert!(r.pass);
        assert!((r.minimizer_t - FRAC_PI_2).abs() < 1e-6);
    }

    #[test]
    fn domain_errors() {
        assert!(numeric_order::<f64>(1.5, OrderKind::Convex, 1e-8).is_err());
        assert!(numeric_order::<f64>(0.0, OrderKind::Starlike, 1e-8).is_err());
        assert!(numeric_order::<f64>(2.5, OrderKind::Starlike, 1e-8).is_err());
    }

    #[test]
    fn endpoint_samples_shape() {
        let s = endpoint_samples::<f64>(1.5).unwrap();
        assert_eq!(s.len(), 6);
        assert_eq!(s[0].0, 2);
        assert!((s[1].1 - 0.0335494).abs() < 1e-6);
        for (_, plus, minus) in s {
            assert!((plus - minus).abs() <= 1e-12 * plus.abs().max(1e-300));
        }
    }
}
