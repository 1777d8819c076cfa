use serde::Serialize;

use crate::error::{LensError, Result};
use crate::scalar::Real;

/// Number of coarse-scan points used before golden-section refinement.
pub const DEFAULT_SCAN_POINTS: usize = 2048;

const MIN_SCAN_POINTS: usize = 8;
const MAX_GOLDEN_ITERS: usize = 200;

/// Location and value of a minimum on a bracket.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Minimum<T> {
    pub t: T,
    pub value: T,
    pub evaluations: usize,
}

/// [`minimize_boundary_with`] using [`DEFAULT_SCAN_POINTS`].
pub fn minimize_boundary<T, F>(objective: F, bracket: (T, T), tol: T) -> Result<Minimum<T>>
where
    T: Real,
    F: Fn(T) -> T,
{
    minimize_boundary_with(objective, bracket, tol, DEFAULT_SCAN_POINTS)
}

/// Minimizes a scalar function on a closed bracket.
///
/// An evenly spaced scan of `scan_points` points locates the best grid
/// point; golden-section search then refines inside the two neighbouring
/// grid cells until the bracket is narrower than `tol`. Non-finite objective
/// values count as `+∞`. An objective that is constant to rounding over the
/// scan reports the bracket midpoint.
pub fn minimize_boundary_with<T, F>(
    objective: F,
    bracket: (T, T),
    tol: T,
    scan_points: usize,
) -> Result<Minimum<T>>
where
    T: Real,
    F: Fn(T) -> T,
{
    let (lo, hi) = bracket;
    if !(lo.is_finite() && hi.is_finite() && lo < hi) {
        return Err(LensError::InvalidBracket {
            lo: lo.as_f64(),
            hi: hi.as_f64(),
        });
    }
    if scan_points < MIN_SCAN_POINTS {
        return Err(LensError::TooFewPoints {
            what: "scan_points",
            min: MIN_SCAN_POINTS,
            value: scan_points,
        });
    }
    if !(tol > T::zero()) {
        return Err(LensError::NonPositive {
            what: "tol",
            value: tol.as_f64(),
        });
    }

    let eval = |t: T| {
        let v = objective(t);
        if v.is_finite() {
            v
        } else {
            T::infinity()
        }
    };

    let last = scan_points - 1;
    let step = (hi - lo) / T::lit(last as f64);
    let node = |i: usize| {
        if i == last {
            hi
        } else {
            lo + step * T::lit(i as f64)
        }
    };

    let values: Vec<T> = (0..scan_points).map(|i| eval(node(i))).collect();
    let mut evaluations = scan_points;

    let mut best = 0;
    let mut worst = T::neg_infinity();
    for (i, &v) in values.iter().enumerate() {
        if v < values[best] {
            best = i;
        }
        if v > worst {
            worst = v;
        }
    }
    let fmin = values[best];
    if !fmin.is_finite() {
        return Err(LensError::ScanFailed);
    }

    if worst.is_finite()
        && worst - fmin <= T::lit(64.0) * T::epsilon() * fmin.abs().max(worst.abs())
    {
        let mid = lo + (hi - lo) / T::lit(2.0);
        return Ok(Minimum {
            t: mid,
            value: eval(mid),
            evaluations: evaluations + 1,
        });
    }

    let mut a = node(best.saturating_sub(1));
    let mut b = node((best + 1).min(last));
    let mut best_t = node(best);
    let mut best_v = fmin;

    let ratio = T::lit(0.618_033_988_749_894_8);
    let mut c = b - ratio * (b - a);
    let mut d = a + ratio * (b - a);
    let mut fc = eval(c);
    let mut fd = eval(d);
    evaluations += 2;

    let floor = T::lit(4.0) * T::epsilon() * best_t.abs().max(T::one());
    let width_tol = tol.max(floor);
    for _ in 0..MAX_GOLDEN_ITERS {
        if b - a <= width_tol {
            break;
        }
        if fc < fd {
            b = d;
            d = c;
            fd = fc;
            c = b - ratio * (b - a);
            fc = eval(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + ratio * (b - a);
            fd = eval(d);
        }
        evaluations += 1;
    }

    for (t, v) in [(c, fc), (d, fd)] {
        if v < best_v {
            best_t = t;
            best_v = v;
        }
    }
    Ok(Minimum {
        t: best_t,
        value: best_v,
        evaluations,
    })
}
