//! Conformal lens maps of the unit disc and their geometric orders.
//!
//! The crate evaluates the lens map family `ℓ_α`, its order of starlikeness
//! and its order of convexity, both from closed-form expressions and from an
//! independent boundary minimization, and cross-checks every boundary
//! identity the closed forms rest on.
//!
//! The kernel and the order analysis are generic over [`Real`] (`f32` or
//! `f64`). The verification suite runs in `f64` only, since its tolerances
//! are double-precision tolerances.
//!
//! ```
//! use lenslab::{closed_form_convex_order, numeric_order, OrderKind};
//!
//! let closed = closed_form_convex_order(0.5_f64).unwrap();
//! let numeric = numeric_order(0.5_f64, OrderKind::Convex, 1e-8).unwrap();
//! assert!((closed - numeric.numeric).abs() < 1e-8);
//! ```

// Guards are written as `!(x > lo)` so that NaN is rejected too.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod error;
pub mod kernel;
pub mod order;
pub mod scalar;
pub mod verify;

pub use error::{LensError, Result};
pub use kernel::{
    convexity_operator, half_plane_power, half_plane_value, lens_first_derivative, lens_map,
    mobius_zeta, starlike_operator, BoundaryAngle, DiscPoint, HalfPlaneValue, LensParam, OrderKind,
};
pub use order::{
    boundary_b, boundary_convexity_value, boundary_convexity_value_alt, boundary_starlike_value,
    closed_form_convex_order, closed_form_order, closed_form_starlike_order, m_of_alpha,
    minimize_boundary, numeric_order, numeric_order_with, reduced_convex_g,
    reduced_convex_g_derivative_sign, reduced_starlike_g, reduced_starlike_g_derivative_sign,
    sin_from_b, BoundaryProfile, Minimum, NumericOptions, OrderResult, Sign,
};
pub use scalar::Real;
pub use verify::{full_verify, Check, VerifyConfig, VerifyReport};

/// Double-precision complex number.
pub type Complex64 = num_complex::Complex<f64>;

pub type LensParam64 = LensParam<f64>;
pub type LensParam32 = LensParam<f32>;
pub type DiscPoint64 = DiscPoint<f64>;
pub type BoundaryAngle64 = BoundaryAngle<f64>;
pub type BoundaryProfile64 = BoundaryProfile<f64>;
pub type OrderResult64 = OrderResult<f64>;
pub type OrderResult32 = OrderResult<f32>;
