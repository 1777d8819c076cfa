//! Finite-difference oracles and deterministic sample points.
//!
//! Everything here is computed from `lens_map` values alone (or from
//! `lens_first_derivative` values for the second derivative), independent of
//! the closed forms it is compared against.

use std::f64::consts::TAU;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::kernel::{lens_first_derivative, lens_map, LensParam};

/// `n` pseudo-random interior points with modulus in `[r_min, r_max]`,
/// fixed by `seed`.
pub fn sample_points(n: usize, seed: u64, r_min: f64, r_max: f64) -> Vec<Complex64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|_| {
            let u: f64 = rng.random();
            let v: f64 = rng.random();
            // area-uniform in the annulus
            let r = (r_min * r_min + u * (r_max * r_max - r_min * r_min)).sqrt();
            Complex64::from_polar(r, TAU * v)
        })
        .collect()
}

/// Central difference of an analytic function along the real direction.
pub fn central_difference<F>(f: F, z: Complex64, h: f64) -> Result<Complex64>
where
    F: Fn(Complex64) -> Result<Complex64>,
{
    Ok((f(z + h)? - f(z - h)?) / (2.0 * h))
}

/// `ℓ'` by central differences of `ℓ`.
pub fn fd_first_derivative(p: &LensParam<f64>, z: Complex64, h: f64) -> Result<Complex64> {
    central_difference(|w| lens_map(p, w), z, h)
}

/// `ℓ''` by central differences of the analytic `ℓ'`.
pub fn fd_second_derivative(p: &LensParam<f64>, z: Complex64, h: f64) -> Result<Complex64> {
    central_difference(|w| lens_first_derivative(p, w), z, h)
}

/// `z ℓ'/ℓ` from the map and its analytic derivative.
pub fn starlike_ratio(p: &LensParam<f64>, z: Complex64) -> Result<Complex64> {
    Ok(z * lens_first_derivative(p, z)? / lens_map(p, z)?)
}

/// `1 + Re{z ℓ''/ℓ'}` with `ℓ''` from finite differences.
pub fn convexity_by_fd(p: &LensParam<f64>, z: Complex64, h: f64) -> Result<f64> {
    let second = fd_second_derivative(p, z, h)?;
    Ok(1.0 + (z * second / lens_first_derivative(p, z)?).re)
}

/// Central difference of a real function.
pub fn real_central_difference<F: Fn(f64) -> Result<f64>>(f: F, x: f64, h: f64) -> Result<f64> {
    Ok((f(x + h)? - f(x - h)?) / (2.0 * h))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn samples_are_deterministic_and_in_range() {
        let a = sample_points(50, 7, 0.05, 0.9);
        let b = sample_points(50, 7, 0.05, 0.9);
        assert_eq!(a, b);
        assert!(a
            .iter()
            .all(|z| z.norm() >= 0.05 - 1e-15 && z.norm() <= 0.9 + 1e-15));
        assert_ne!(a, sample_points(50, 8, 0.05, 0.9));
    }

    #[test]
    fn identity_map_second_derivative_vanishes() {
        let p = LensParam::new(1.0).unwrap();
        let z = Complex64::new(0.2, -0.4);
        assert!(fd_second_derivative(&p, z, 1e-5).unwrap().norm() < 1e-9);
        assert!((convexity_by_fd(&p, z, 1e-5).unwrap() - 1.0).abs() < 1e-9);
    }
}
