//! Independent oracles and the verification report.
//!
//! Every check here compares a closed form against something computed along
//! a different route: finite differences, brute-force grids over the disc,
//! radial limits of interior values, or the complex quantities the boundary
//! formulas were simplified from.

pub mod fd;
pub mod grid;
pub mod identities;
mod report;

use std::f64::consts::{FRAC_PI_2, PI};

use serde::{Deserialize, Serialize};

pub use grid::{interior_grid_infimum, radial_limit_check, BoundaryGrid, RadialLimit};
pub use identities::identity_suite;
pub use report::{Check, VerifyReport};

use crate::error::Result;
use crate::kernel::{
    lens_first_derivative, lens_map, starlike_operator, BoundaryAngle, LensParam, OrderKind,
};
use crate::order::{
    boundary_b, boundary_convexity_value, boundary_convexity_value_alt, boundary_starlike_value,
    closed_form_convex_order, closed_form_starlike_order, endpoint_samples, m_of_alpha,
    numeric_order_with, reduced_convex_g, reduced_convex_g_derivative_sign, reduced_starlike_g,
    reduced_starlike_g_derivative_sign, sin_from_b, NumericOptions, Sign,
};

/// Knobs and tolerances of [`full_verify`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyConfig {
    /// Allowed `|closed form − numeric order|`.
    pub tol: f64,
    pub eps_t: f64,
    pub scan_points: usize,
    pub grid_radial: usize,
    pub grid_angular: usize,
    pub boundary_points: usize,
    pub fd_step: f64,
    pub random_points: usize,
    pub seed: u64,
    pub radii: Vec<f64>,
    pub minimizer_tol: f64,
    pub min_principle_slack: f64,
    pub interior_convergence_tol: f64,
    pub radial_tol: f64,
    pub endpoint_threshold: f64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            tol: 1e-8,
            eps_t: 1e-9,
            scan_points: 2048,
            grid_radial: 64,
            grid_angular: 512,
            boundary_points: 500,
            fd_step: 1e-5,
            random_points: 100,
            seed: 0x1e45_0001,
            radii: vec![0.9, 0.99, 0.999, 0.9999],
            minimizer_tol: 1e-6,
            min_principle_slack: 1e-9,
            interior_convergence_tol: 5e-3,
            radial_tol: 1e-4,
            endpoint_threshold: 1e-2,
        }
    }
}

impl VerifyConfig {
    pub fn with_tol(tol: f64) -> Self {
        Self {
            tol,
            ..Self::default()
        }
    }

    pub fn numeric_options(&self) -> NumericOptions {
        NumericOptions {
            eps_t: self.eps_t,
            scan_points: self.scan_points,
            ..NumericOptions::default()
        }
    }
}

pub const TOL_DERIVATIVE_FD: f64 = 1e-6;
pub const TOL_STARLIKE_FORMS: f64 = 1e-10;
pub const TOL_CONVEXITY_FD: f64 = 1e-5;
pub const TOL_REFLECTION: f64 = 1e-12;
pub const TOL_ROUND_TRIP: f64 = 1e-10;
pub const TOL_REDUCTION: f64 = 1e-10;
pub const TOL_REDUCED_MINIMUM: f64 = 1e-12;

/// Points of the x-grid `logspace(lo, hi, n)`.
pub fn logspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    (0..n)
        .map(|i| 10f64.powf(lo + (hi - lo) * i as f64 / (n - 1) as f64))
        .collect()
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs()
}

/// Largest value of `f` over `items`; any evaluation error or NaN yields NaN.
fn max_over<I, F>(items: I, f: F) -> f64
where
    I: IntoIterator,
    F: Fn(I::Item) -> Result<f64>,
{
    let mut worst = 0.0f64;
    for item in items {
        match f(item) {
            Ok(v) if !v.is_nan() => worst = worst.max(v),
            _ => return f64::NAN,
        }
    }
    worst
}

/// Whether `α` lies in the range `(0, 1]` the reduced functions are defined on.
fn reducible(alpha: f64) -> bool {
    alpha > 0.0 && alpha <= 1.0
}

fn derivative_checks(p: &LensParam<f64>, cfg: &VerifyConfig, report: &mut VerifyReport) {
    let points = fd::sample_points(cfg.random_points, cfg.seed, 0.05, 0.9);
    let h = cfg.fd_step;

    let worst = max_over(&points, |&z| {
        let an = lens_first_derivative(p, z)?;
        Ok((fd::fd_first_derivative(p, z, h)? - an).norm() / an.norm())
    });
    report.push(Check::within(
        "first_derivative_vs_central_difference",
        worst,
        0.0,
        TOL_DERIVATIVE_FD,
    ));

    let worst = max_over(&points, |&z| {
        Ok(rel(starlike_operator(p, z)?, fd::starlike_ratio(p, z)?.re))
    });
    report.push(Check::within(
        "starlike_closed_form_vs_ratio",
        worst,
        0.0,
        TOL_STARLIKE_FORMS,
    ));

    let worst = max_over(&points, |&z| {
        let fd = fd::convexity_by_fd(p, z, h)?;
        Ok(rel(crate::kernel::convexity_operator(p, z)?, fd))
    });
    report.push(Check::within(
        "convexity_operator_vs_fd_second_derivative",
        worst,
        0.0,
        TOL_CONVEXITY_FD,
    ));

    let worst = max_over(&points, |&z| {
        let a = lens_map(p, z.conj())?;
        let b = lens_map(p, z)?.conj();
        Ok((a - b).norm() / b.norm())
    });
    report.push(Check::within(
        "conjugation_symmetry",
        worst,
        0.0,
        TOL_REFLECTION,
    ));

    let worst = max_over(&points, |&z| {
        let a = lens_map(p, z)?;
        let b = lens_map(&p.negated(), -z)?;
        Ok((a - b).norm() / a.norm())
    });
    report.push(Check::within(
        "interior_parameter_symmetry",
        worst,
        0.0,
        TOL_REFLECTION,
    ));
}

/// Round trip through `sin_from_b` and strict monotonicity of `b` on the
/// upper grid.
pub fn parametrization_checks(alpha: f64, grid: &BoundaryGrid) -> VerifyReport {
    let mut report = VerifyReport::new(alpha);
    let worst = max_over(grid.angles(), |&a| {
        let b = boundary_b(alpha, a)?;
        Ok(rel(sin_from_b(alpha, b)?, a.t().sin()))
    });
    report.push(Check::within(
        "sin_from_b_round_trip",
        worst,
        0.0,
        TOL_ROUND_TRIP,
    ));

    let values: Result<Vec<f64>> = grid
        .angles()
        .iter()
        .map(|&a| boundary_b(alpha, a))
        .collect();
    let check = match values {
        Ok(v) => {
            // b = cot(t/2)^α decreases for α > 0 and increases for α < 0.
            let violations = v
                .windows(2)
                .filter(|w| {
                    if alpha > 0.0 {
                        w[1] >= w[0]
                    } else {
                        w[1] <= w[0]
                    }
                })
                .count();
            Check::within("b_strictly_monotone", violations as f64, 0.0, 0.0)
        }
        Err(e) => Check::failed("b_strictly_monotone", &e.to_string()),
    };
    report.push(check);
    report
}

/// The two boundary-value routes for convexity against each other, and both
/// boundary values against their reduced one-variable functions.
pub fn reduction_checks(alpha: f64, full: &BoundaryGrid, upper: &BoundaryGrid) -> VerifyReport {
    let mut report = VerifyReport::new(alpha);
    if alpha.abs() > 1.0 {
        report.push(Check::skipped(
            "convexity_value_vs_alt_form",
            "convexity needs |alpha| <= 1",
        ));
    } else {
        let worst = max_over(full.angles(), |&a| {
            Ok(rel(
                boundary_convexity_value_alt(alpha, a)?,
                boundary_convexity_value(alpha, a)?,
            ))
        });
        report.push(Check::within(
            "convexity_value_vs_alt_form",
            worst,
            0.0,
            TOL_REDUCTION,
        ));
    }

    if !reducible(alpha) {
        let reason = "reduced functions need alpha in (0, 1]";
        report.push(Check::skipped("starlike_value_vs_reduced_g", reason));
        report.push(Check::skipped("convexity_value_vs_reduced_g", reason));
        return report;
    }
    let s = (FRAC_PI_2 * alpha).sin();
    let worst = max_over(upper.angles(), |&a| {
        let b = boundary_b(alpha, a)?;
        Ok(rel(
            alpha * s * reduced_starlike_g(alpha, b)?,
            boundary_starlike_value(alpha, a)?,
        ))
    });
    report.push(Check::within(
        "starlike_value_vs_reduced_g",
        worst,
        0.0,
        TOL_REDUCTION,
    ));

    let worst = max_over(upper.angles(), |&a| {
        let b = boundary_b(alpha, a)?;
        let x = (b.ln() / alpha).exp();
        Ok(rel(
            alpha * s * reduced_convex_g(alpha, x)?,
            boundary_convexity_value(alpha, a)?,
        ))
    });
    report.push(Check::within(
        "convexity_value_vs_reduced_g",
        worst,
        0.0,
        TOL_REDUCTION,
    ));
    report
}

/// `(negative, zero, positive)` at `x = 0.5, 1, 2`, agreement of the sign
/// functions with finite differences, and the minima of both reduced
/// functions over `logspace(−3, 3, 600)`.
pub fn critical_point_checks(alpha: f64) -> VerifyReport {
    let mut report = VerifyReport::new(alpha);
    if !reducible(alpha) {
        let reason = "reduced functions need alpha in (0, 1]";
        for name in [
            "starlike_g_at_one_equals_m",
            "starlike_g_lower_bound",
            "convex_g_at_one_equals_minimum",
            "convex_g_lower_bound",
        ] {
            report.push(Check::skipped(name, reason));
        }
    } else {
        let m = m_of_alpha(alpha).unwrap_or(f64::NAN);
        let c = (FRAC_PI_2 * alpha).cos();
        let convex_min = 1.0 / (1.0 + c);
        let xs = logspace(-3.0, 3.0, 600);
        let lowest = |f: &dyn Fn(f64) -> Result<f64>| {
            xs.iter()
                .map(|&x| f(x).unwrap_or(f64::NAN))
                .fold(
                    f64::INFINITY,
                    |acc, v| if v.is_nan() { v } else { acc.min(v) },
                )
        };

        let g1 = reduced_starlike_g(alpha, 1.0).unwrap_or(f64::NAN);
        report.push(Check::within(
            "starlike_g_at_one_equals_m",
            g1,
            m,
            TOL_REDUCED_MINIMUM,
        ));
        let low = lowest(&|x| reduced_starlike_g(alpha, x));
        report.push(Check::at_least(
            "starlike_g_lower_bound",
            low,
            m,
            TOL_REDUCED_MINIMUM * m,
        ));

        let g1 = reduced_convex_g(alpha, 1.0).unwrap_or(f64::NAN);
        report.push(Check::within(
            "convex_g_at_one_equals_minimum",
            g1,
            convex_min,
            TOL_REDUCED_MINIMUM,
        ));
        let low = lowest(&|x| reduced_convex_g(alpha, x));
        report.push(Check::at_least(
            "convex_g_lower_bound",
            low,
            convex_min,
            TOL_REDUCED_MINIMUM,
        ));
    }

    if !(alpha > 0.0 && alpha < 1.0) {
        let reason = "derivative signs need alpha in (0, 1)";
        for name in [
            "starlike_critical_point_structure",
            "convex_critical_point_structure",
            "starlike_sign_vs_fd",
            "convex_sign_vs_fd",
        ] {
            report.push(Check::skipped(name, reason));
        }
        return report;
    }

    let expected = [Sign::Negative, Sign::Zero, Sign::Positive];
    let structure = |f: &dyn Fn(f64) -> Result<Sign>| {
        [0.5, 1.0, 2.0]
            .iter()
            .zip(expected)
            .filter(|(&x, e)| f(x).ok() != Some(*e))
            .count() as f64
    };
    let bad = structure(&|x| reduced_starlike_g_derivative_sign(alpha, x));
    report.push(Check::within(
        "starlike_critical_point_structure",
        bad,
        0.0,
        0.0,
    ));
    let bad = structure(&|x| reduced_convex_g_derivative_sign(alpha, x));
    report.push(Check::within(
        "convex_critical_point_structure",
        bad,
        0.0,
        0.0,
    ));

    let xs = logspace(-2.0, 2.0, 200);
    let mismatches = |g: &dyn Fn(f64) -> Result<f64>, sign: &dyn Fn(f64) -> Result<Sign>| {
        xs.iter()
            .filter(|&&x| {
                let d = fd::real_central_difference(g, x, 1e-5 * x);
                let fd_sign = match d {
                    Ok(d) if d < 0.0 => Some(Sign::Negative),
                    Ok(d) if d > 0.0 => Some(Sign::Positive),
                    Ok(_) => Some(Sign::Zero),
                    Err(_) => None,
                };
                fd_sign.is_none() || sign(x).ok() != fd_sign
            })
            .count() as f64
    };
    let bad = mismatches(&|x| reduced_starlike_g(alpha, x), &|x| {
        reduced_starlike_g_derivative_sign(alpha, x)
    });
    report.push(Check::within("starlike_sign_vs_fd", bad, 0.0, 0.0));
    let bad = mismatches(&|x| reduced_convex_g(alpha, x), &|x| {
        reduced_convex_g_derivative_sign(alpha, x)
    });
    report.push(Check::within("convex_sign_vs_fd", bad, 0.0, 0.0));
    report
}

/// Strictly decreasing samples of `Re{z ℓ'/ℓ}` at `z = ±(1 − 10^{−k})`,
/// `k = 2..7`, and the sample at `k = 7` below `threshold`.
pub fn endpoint_decay_check(alpha: f64, threshold: f64) -> Check {
    let name = "starlike_endpoint_decay";
    match endpoint_samples(alpha) {
        Ok(samples) => {
            let decreasing = samples
                .windows(2)
                .all(|w| w[1].1 < w[0].1 && w[1].2 < w[0].2);
            let last = samples.last().map(|s| s.1.max(s.2)).unwrap_or(f64::NAN);
            let pass = decreasing && last < threshold;
            let check = Check::with_pass(name, last, threshold, 0.0, pass);
            if decreasing {
                check
            } else {
                check.note("samples are not strictly decreasing")
            }
        }
        Err(e) => Check::failed(name, &e.to_string()),
    }
}

fn order_checks(alpha: f64, cfg: &VerifyConfig, report: &mut VerifyReport) -> [Option<f64>; 2] {
    let opts = cfg.numeric_options();
    let mut boundary_orders = [None, None];
    for (slot, kind) in [OrderKind::Starlike, OrderKind::Convex]
        .into_iter()
        .enumerate()
    {
        let name = kind.name();
        let order_name = format!("{name}_order_numeric_vs_closed");
        let where_name = format!("{name}_minimizer_at_quarter_turn");
        if kind.check(alpha).is_err() {
            let reason = format!("{name} order needs |alpha| <= {}", kind.bound());
            report.push(Check::skipped(&order_name, &reason));
            report.push(Check::skipped(&where_name, &reason));
            continue;
        }
        match numeric_order_with(alpha, kind, cfg.tol, &opts) {
            Ok(r) => {
                report.push(Check::with_pass(
                    &order_name,
                    r.numeric,
                    r.closed_form,
                    r.tol,
                    r.pass,
                ));
                if r.endpoint_limit {
                    report.push(Check::skipped(&where_name, "infimum is the limit z -> 1"));
                } else {
                    report.push(Check::within(
                        &where_name,
                        r.minimizer_t,
                        FRAC_PI_2,
                        cfg.minimizer_tol,
                    ));
                }
                boundary_orders[slot] = Some(r.numeric);
            }
            Err(e) => {
                report.push(Check::failed(&order_name, &e.to_string()));
                report.push(Check::failed(&where_name, &e.to_string()));
            }
        }
    }

    let star = closed_form_starlike_order(alpha);
    let star_neg = closed_form_starlike_order(-alpha);
    if let (Ok(a), Ok(b)) = (&star, &star_neg) {
        let (a, b) = (*a, *b);
        report.push(Check::within("starlike_order_even_in_alpha", a, b, 0.0));
    }
    if alpha.abs() <= 1.0 {
        let conv = closed_form_convex_order(alpha).unwrap_or(f64::NAN);
        let conv_neg = closed_form_convex_order(-alpha).unwrap_or(f64::NAN);
        let star = star.unwrap_or(f64::NAN);
        report.push(Check::within(
            "convex_order_even_in_alpha",
            conv,
            conv_neg,
            0.0,
        ));
        report.push(Check::at_least(
            "starlike_order_at_least_half",
            star,
            0.5,
            0.0,
        ));
        report.push(Check::at_least(
            "starlike_order_dominates_convex",
            star,
            conv,
            0.0,
        ));
    } else {
        report.push(endpoint_decay_check(alpha, cfg.endpoint_threshold));
    }
    boundary_orders
}

fn interior_checks(
    p: &LensParam<f64>,
    cfg: &VerifyConfig,
    boundary_orders: [Option<f64>; 2],
    report: &mut VerifyReport,
) {
    let alpha = p.alpha();
    for (slot, kind) in [OrderKind::Starlike, OrderKind::Convex]
        .into_iter()
        .enumerate()
    {
        let name = kind.name();
        let names = [
            format!("{name}_minimum_principle_lower_bound"),
            format!("{name}_interior_infimum_monotone"),
            format!("{name}_interior_infimum_converges"),
            format!("{name}_radial_limit"),
        ];
        let Some(order) = boundary_orders[slot] else {
            for n in &names {
                report.push(Check::skipped(n, "no boundary order for this alpha"));
            }
            continue;
        };
        let infima: Result<Vec<f64>> = cfg
            .radii
            .iter()
            .map(|&r| interior_grid_infimum(p, kind, r, cfg.grid_radial, cfg.grid_angular))
            .collect();
        let infima = match infima {
            Ok(v) => v,
            Err(e) => {
                for n in &names[..3] {
                    report.push(Check::failed(n, &e.to_string()));
                }
                Vec::new()
            }
        };
        if !infima.is_empty() {
            let lowest = infima.iter().copied().fold(f64::INFINITY, f64::min);
            report.push(Check::at_least(
                &names[0],
                lowest,
                order,
                cfg.min_principle_slack,
            ));
            let rises = infima
                .windows(2)
                .filter(|w| w[1] > w[0] + cfg.min_principle_slack)
                .count();
            report.push(Check::within(&names[1], rises as f64, 0.0, 0.0));
            let outer = *infima.last().expect("radii is non-empty");
            if kind == OrderKind::Starlike && alpha.abs() > 1.0 {
                report.push(Check::skipped(
                    &names[2],
                    "infimum is an endpoint limit; covered by starlike_endpoint_decay",
                ));
            } else {
                report.push(Check::within(
                    &names[2],
                    outer,
                    order,
                    cfg.interior_convergence_tol,
                ));
            }
        }

        if kind.check(alpha).is_err() || (kind == OrderKind::Starlike && alpha.abs() > 1.0) {
            report.push(Check::skipped(
                &names[3],
                "no closed boundary value for this alpha",
            ));
            continue;
        }
        let r_seq = [0.99, 0.999, 0.9999];
        let worst = max_over([PI / 3.0, FRAC_PI_2, 2.0, 2.0 * PI - 1.0], |t| {
            let angle = BoundaryAngle::new(t, cfg.eps_t)?;
            Ok(radial_limit_check(p, kind, angle, &r_seq)?.gap())
        });
        report.push(Check::within(&names[3], worst, 0.0, cfg.radial_tol));
    }
}

/// Runs every check that applies to `α` and collects them in a fixed order.
///
/// Checks that need the convex regime (or `α ∈ (0, 1]`) are recorded as
/// skipped when `α` is outside it.
pub fn full_verify(p: &LensParam<f64>, cfg: &VerifyConfig) -> VerifyReport {
    let alpha = p.alpha();
    let mut report = VerifyReport::new(alpha);
    let grids = BoundaryGrid::full_circle(cfg.boundary_points)
        .and_then(|full| Ok((full, BoundaryGrid::upper(cfg.boundary_points, cfg.eps_t)?)));
    match grids {
        Ok((full, upper)) => {
            report.extend(identity_suite(p, &full));
            report.extend(parametrization_checks(alpha, &upper));
            report.extend(reduction_checks(alpha, &full, &upper));
        }
        Err(e) => report.push(Check::failed("boundary_grids", &e.to_string())),
    }
    derivative_checks(p, cfg, &mut report);
    report.extend(critical_point_checks(alpha));
    let orders = order_checks(alpha, cfg, &mut report);
    interior_checks(p, cfg, orders, &mut report);
    report
}
