use std::f64::consts::{PI, TAU};

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{LensError, Result};
use crate::kernel::{convexity_operator, starlike_operator, BoundaryAngle, LensParam, OrderKind};
use crate::order::{boundary_convexity_value, boundary_starlike_value};

const MIN_GRID: usize = 8;

/// A list of boundary angles, all clear of `0`, `π` and `2π`.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundaryGrid {
    angles: Vec<BoundaryAngle<f64>>,
}

impl BoundaryGrid {
    /// `n` cell midpoints `2π(k + ½)/n` around the whole circle. For even
    /// `n` the grid is closed under conjugation and misses `π/2`.
    pub fn full_circle(n: usize) -> Result<Self> {
        let angles = (0..n)
            .map(|k| TAU * (k as f64 + 0.5) / n as f64)
            .filter(|&t| t != PI)
            .map(|t| BoundaryAngle::new(t, 0.0))
            .collect::<Result<Vec<_>>>()?;
        Self::from_angles(angles)
    }

    /// `n` evenly spaced angles from `eps` to `π − eps` inclusive.
    pub fn upper(n: usize, eps: f64) -> Result<Self> {
        if n < 2 {
            return Err(LensError::TooFewPoints {
                what: "grid points",
                min: 2,
                value: n,
            });
        }
        let lo = eps * 2.0;
        let hi = PI - eps * 2.0;
        let angles = (0..n)
            .map(|k| lo + (hi - lo) * k as f64 / (n - 1) as f64)
            .map(|t| BoundaryAngle::new(t, eps))
            .collect::<Result<Vec<_>>>()?;
        Self::from_angles(angles)
    }

    pub fn from_angles(angles: Vec<BoundaryAngle<f64>>) -> Result<Self> {
        if angles.is_empty() {
            return Err(LensError::TooFewPoints {
                what: "grid points",
                min: 1,
                value: 0,
            });
        }
        Ok(Self { angles })
    }

    pub fn angles(&self) -> &[BoundaryAngle<f64>] {
        &self.angles
    }

    pub fn len(&self) -> usize {
        self.angles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.angles.is_empty()
    }
}

/// Evaluates the operator of the given kind at an interior point.
pub fn operator(p: &LensParam<f64>, kind: OrderKind, z: Complex64) -> Result<f64> {
    match kind {
        OrderKind::Starlike => starlike_operator(p, z),
        OrderKind::Convex => convexity_operator(p, z),
    }
}

/// Boundary value of the operator of the given kind.
pub fn boundary_value(alpha: f64, kind: OrderKind, t: BoundaryAngle<f64>) -> Result<f64> {
    match kind {
        OrderKind::Starlike => boundary_starlike_value(alpha, t),
        OrderKind::Convex => boundary_convexity_value(alpha, t),
    }
}

/// Minimum of the operator over the polar grid
/// `{ radius·j/n_radial · e^{2πik/n_angular} : 1 ≤ j ≤ n_radial, 0 ≤ k < n_angular }`.
pub fn interior_grid_infimum(
    p: &LensParam<f64>,
    kind: OrderKind,
    radius: f64,
    n_radial: usize,
    n_angular: usize,
) -> Result<f64> {
    if !(radius > 0.0 && radius < 1.0) {
        return Err(LensError::InvalidRadius { value: radius });
    }
    for (what, value) in [("n_radial", n_radial), ("n_angular", n_angular)] {
        if value < MIN_GRID {
            return Err(LensError::TooFewPoints {
                what,
                min: MIN_GRID,
                value,
            });
        }
    }
    let mut inf = f64::INFINITY;
    for j in 1..=n_radial {
        let r = radius * j as f64 / n_radial as f64;
        for k in 0..n_angular {
            let z = Complex64::from_polar(r, TAU * k as f64 / n_angular as f64);
            inf = inf.min(operator(p, kind, z)?);
        }
    }
    Ok(inf)
}

/// Interior operator extrapolated to the boundary next to its closed-form
/// boundary value.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RadialLimit {
    pub measured: f64,
    pub boundary: f64,
}

impl RadialLimit {
    pub fn gap(&self) -> f64 {
        (self.measured - self.boundary).abs()
    }
}

/// Follows `z = r e^{it}` through `r_seq` and extrapolates linearly in
/// `1 − r` through the last two samples.
pub fn radial_limit_check(
    p: &LensParam<f64>,
    kind: OrderKind,
    t: BoundaryAngle<f64>,
    r_seq: &[f64],
) -> Result<RadialLimit> {
    let valid = r_seq.len() >= 2
        && r_seq.iter().all(|&r| r > 0.0 && r < 1.0)
        && r_seq.windows(2).all(|w| w[0] < w[1]);
    if !valid {
        return Err(LensError::InvalidRadialSequence);
    }
    let boundary = boundary_value(p.alpha(), kind, t)?;
    let n = r_seq.len();
    let (r1, r2) = (r_seq[n - 2], r_seq[n - 1]);
    let v1 = operator(p, kind, Complex64::from_polar(r1, t.t()))?;
    let v2 = operator(p, kind, Complex64::from_polar(r2, t.t()))?;
    let (h1, h2) = (1.0 - r1, 1.0 - r2);
    let measured = v2 + (v2 - v1) * h2 / (h1 - h2);
    Ok(RadialLimit { measured, boundary })
}
