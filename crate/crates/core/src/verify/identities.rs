//! Pointwise boundary identities behind the order formulas.

use num_complex::Complex64;

use super::grid::BoundaryGrid;
use super::report::{Check, VerifyReport};
use crate::kernel::{half_plane_value, lens_map, LensParam};
use crate::order::boundary_b;

pub const TOL_RE_VANISHES: f64 = 1e-12;
pub const TOL_IM_SINE: f64 = 1e-12;
pub const TOL_QUOTIENT: f64 = 1e-10;
pub const TOL_IM_XI: f64 = 1e-10;
pub const TOL_SYMMETRY: f64 = 1e-12;

/// Fraction of an identity's natural scale below which a relative error is
/// measured against the scale instead of the (vanishing) right-hand side.
/// Only bites as `|α| → 2`, where `sin(πα/2) → 0`.
const RELATIVE_FLOOR: f64 = 1e-3;

fn rel_err(lhs: f64, rhs: f64, scale: f64) -> f64 {
    (lhs - rhs).abs() / rhs.abs().max(RELATIVE_FLOOR * scale)
}

#[derive(Default)]
struct MaxErr(Option<f64>);

impl MaxErr {
    fn push(&mut self, e: f64) {
        self.0 = Some(match self.0 {
            None => e,
            Some(m) if m.is_nan() => m,
            Some(m) if e.is_nan() || e > m => e,
            Some(m) => m,
        });
    }

    fn check(self, name: &str, tol: f64) -> Check {
        match self.0 {
            Some(m) => Check::within(name, m, 0.0, tol),
            None => Check::failed(name, "no grid point evaluated"),
        }
    }
}

/// Runs the boundary identities pointwise on `grid`:
///
/// * `Re{z/(1−z²)} = 0` (absolute)
/// * `Im{z/(1−z²)} = 1/(2 sin t)`
/// * `Im{(ξ−1)/(ξ+1)} = 2 Im{ξ}/|ξ+1|²`
/// * `Im{ξ}/|ξ±1|² = b sin(πα/2) / (1 ± 2b cos(πα/2) + b²)` on `(0, π)`
/// * `Im{ξ} = b(t) sin(πα/2)`
/// * `ℓ_α(z) = ℓ_{−α}(−z)`
///
/// Each check reports the largest error over the grid. Evaluation failures
/// are recorded as failed checks.
pub fn identity_suite(p: &LensParam<f64>, grid: &BoundaryGrid) -> VerifyReport {
    let alpha = p.alpha();
    let (s, c) = (std::f64::consts::FRAC_PI_2 * alpha).sin_cos();
    let one = Complex64::new(1.0, 0.0);

    let mut re_vanish = MaxErr::default();
    let mut im_sine = MaxErr::default();
    let mut quotient = MaxErr::default();
    let mut b_forms = MaxErr::default();
    let mut im_xi = MaxErr::default();
    let mut symmetry = MaxErr::default();

    for angle in grid.angles() {
        let t = angle.t();
        let z = angle.point();
        let w = z / (one - z * z);
        re_vanish.push(w.re.abs());
        let sine_rhs = 1.0 / (2.0 * t.sin());
        im_sine.push(rel_err(w.im, sine_rhs, sine_rhs.abs()));

        let (xi, b) = match (half_plane_value(p, z), boundary_b(alpha, *angle)) {
            (Ok(hv), Ok(b)) => (hv.xi, b),
            _ => {
                quotient.push(f64::NAN);
                im_xi.push(f64::NAN);
                continue;
            }
        };
        let plus = (xi + one).norm_sqr();
        let minus = (xi - one).norm_sqr();
        let q = (xi - one) / (xi + one);
        quotient.push(rel_err(q.im, 2.0 * xi.im / plus, 2.0 * xi.norm() / plus));
        im_xi.push(rel_err(xi.im, b * s, xi.norm()));

        if angle.in_upper_half() {
            let b_plus = b * s / (1.0 + 2.0 * b * c + b * b);
            let b_minus = b * s / (1.0 - 2.0 * b * c + b * b);
            b_forms.push(rel_err(xi.im / plus, b_plus, xi.norm() / plus));
            b_forms.push(rel_err(xi.im / minus, b_minus, xi.norm() / minus));
        }

        match (lens_map(p, z), lens_map(&p.negated(), -z)) {
            (Ok(a), Ok(b)) => symmetry.push((a - b).norm() / a.norm()),
            _ => symmetry.push(f64::NAN),
        }
    }

    let mut report = VerifyReport::new(alpha);
    report.push(re_vanish.check("re_z_over_one_minus_z2_vanishes", TOL_RE_VANISHES));
    report.push(im_sine.check("im_z_over_one_minus_z2_equals_half_cosec", TOL_IM_SINE));
    report.push(quotient.check("im_mobius_quotient_complex_form", TOL_QUOTIENT));
    report.push(b_forms.check("im_mobius_quotient_b_form", TOL_QUOTIENT));
    report.push(im_xi.check("im_xi_equals_b_sin", TOL_IM_XI));
    report.push(symmetry.check("lens_parameter_symmetry", TOL_SYMMETRY));
    report
}
