use thiserror::Error;

/// Errors raised by the lens-map library.
///
/// Payloads are stored as `f64` regardless of the scalar type the failing
/// computation ran in.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum LensError {
    #[error("alpha must be nonzero")]
    ZeroAlpha,
    #[error("alpha = {alpha} is outside the {regime} range [{lo}, {hi}]")]
    AlphaOutOfRange {
        alpha: f64,
        regime: &'static str,
        lo: f64,
        hi: f64,
    },
    #[error("alpha is not a finite number")]
    NonFiniteAlpha,
    #[error("point z = {re}{im:+}i is a pole of the map")]
    Pole { re: f64, im: f64 },
    #[error("point z = {re}{im:+}i is within {guard:e} of the singular points ±1")]
    NearSingularity { re: f64, im: f64, guard: f64 },
    #[error("point z = {re}{im:+}i lies outside the open unit disc")]
    OutsideDisc { re: f64, im: f64 },
    #[error("the operator is undefined at the origin (its limit there is 1)")]
    AtOrigin,
    #[error("power base must be nonzero")]
    ZeroBase,
    #[error("power base {re}{im:+}i lies in the open left half-plane")]
    LeftHalfPlane { re: f64, im: f64 },
    #[error("|xi + 1| = {value:e} is below the denominator guard")]
    DenominatorGuard { value: f64 },
    #[error("boundary angle t = {t} is within {eps:e} of 0, pi or 2 pi")]
    AngleGuard { t: f64, eps: f64 },
    #[error("{what} must be positive, got {value}")]
    NonPositive { what: &'static str, value: f64 },
    #[error("invalid bracket [{lo}, {hi}]")]
    InvalidBracket { lo: f64, hi: f64 },
    #[error("coarse scan found no finite objective values")]
    ScanFailed,
    #[error("{what} must be at least {min}, got {value}")]
    TooFewPoints {
        what: &'static str,
        min: usize,
        value: usize,
    },
    #[error("radius must lie in (0, 1), got {value}")]
    InvalidRadius { value: f64 },
    #[error("radial sequence must be increasing and inside (0, 1)")]
    InvalidRadialSequence,
}

pub type Result<T, E = LensError> = std::result::Result<T, E>;
