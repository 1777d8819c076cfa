//! Boundary reductions and order computations.
//!
//! Both orders are infima of a harmonic function over the disc, so they are
//! read off the unit circle. On `z = e^{it}` the operators collapse to real
//! functions of `t`, which in turn reduce to one-variable functions `g` with
//! a unique minimum at `x = 1`.

mod boundary;
mod closed;
mod minimize;
mod numeric;
mod reduced;

pub use boundary::{
    boundary_b, boundary_convexity_value, boundary_convexity_value_alt, boundary_starlike_value,
    sin_from_b, BoundaryProfile,
};
pub use closed::{closed_form_convex_order, closed_form_order, closed_form_starlike_order};
pub use minimize::{minimize_boundary, minimize_boundary_with, Minimum, DEFAULT_SCAN_POINTS};
pub use numeric::{
    endpoint_samples, numeric_order, numeric_order_with, NumericOptions, OrderResult,
};
pub use reduced::{
    m_of_alpha, reduced_convex_g, reduced_convex_g_derivative_sign, reduced_starlike_g,
    reduced_starlike_g_derivative_sign, Sign,
};

pub use crate::kernel::OrderKind;
