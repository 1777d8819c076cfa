//! Images of a polar grid under `ℓ_α`, rendered as SVG 1.1.

use std::f64::consts::TAU;
use std::fmt::Write as _;

use lenslab::{lens_map, Complex64, LensParam64, OrderKind};

use crate::CliError;

/// Rays stop this far short of the unit circle, where `ℓ_α` is singular
/// at `z = ±1`.
pub const RAY_END_GAP: f64 = 1e-3;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GridSpec {
    pub rays: usize,
    pub circles: usize,
    pub samples_per_curve: usize,
}

impl Default for GridSpec {
    fn default() -> Self {
        Self {
            rays: 12,
            circles: 6,
            samples_per_curve: 256,
        }
    }
}

/// A sampled source curve in the disc and its image.
#[derive(Debug, Clone, PartialEq)]
pub struct Curve {
    pub source: Vec<Complex64>,
    pub image: Vec<Complex64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct GridImage {
    pub alpha: f64,
    /// Circle `k` (from 1) has radius `k / (circles + 1)`.
    pub circles: Vec<Curve>,
    /// Ray `k` (from 0) leaves the origin at angle `2πk / rays`.
    pub rays: Vec<Curve>,
}

/// Closed circle of `n` points plus the repeated start point. The lower
/// half is the exact conjugate of the upper half, so the image inherits the
/// symmetry without rounding noise.
fn circle_points(radius: f64, n: usize) -> Vec<Complex64> {
    let mut pts: Vec<Complex64> = (0..=n / 2)
        .map(|j| Complex64::from_polar(radius, TAU * j as f64 / n as f64))
        .collect();
    for j in (n / 2 + 1)..n {
        let mirrored = pts[n - j].conj();
        pts.push(mirrored);
    }
    pts.push(pts[0]);
    pts
}

fn ray_points(angle: f64, n: usize) -> Vec<Complex64> {
    let reach = 1.0 - RAY_END_GAP;
    (0..=n)
        .map(|j| Complex64::from_polar(reach * j as f64 / n as f64, angle))
        .collect()
}

fn map_curve(p: &LensParam64, source: Vec<Complex64>) -> Result<Curve, CliError> {
    let image = source
        .iter()
        .map(|&z| lens_map(p, z))
        .collect::<lenslab::Result<Vec<_>>>()?;
    Ok(Curve { source, image })
}

pub fn grid_image(alpha: f64, spec: &GridSpec) -> Result<GridImage, CliError> {
    if spec.rays < 2 {
        return Err(CliError::Range(format!(
            "rays must be at least 2, got {}",
            spec.rays
        )));
    }
    if spec.circles < 1 {
        return Err(CliError::Range("circles must be at least 1".into()));
    }
    if spec.samples_per_curve < 8 {
        return Err(CliError::Range(format!(
            "samples per curve must be at least 8, got {}",
            spec.samples_per_curve
        )));
    }
    let p = LensParam64::new(alpha)?;
    p.require(OrderKind::Starlike)?;

    let n = spec.samples_per_curve;
    let denom = (spec.circles + 1) as f64;
    let circles = (1..=spec.circles)
        .map(|k| map_curve(&p, circle_points(k as f64 / denom, n)))
        .collect::<Result<_, _>>()?;
    let rays = (0..spec.rays)
        .map(|k| map_curve(&p, ray_points(TAU * k as f64 / spec.rays as f64, n)))
        .collect::<Result<_, _>>()?;
    Ok(GridImage {
        alpha,
        circles,
        rays,
    })
}

fn polyline(out: &mut String, pts: &[Complex64]) {
    out.push_str("<polyline points=\"");
    for (i, w) in pts.iter().enumerate() {
        if i > 0 {
            out.push(' ');
        }
        // SVG's y axis points down.
        let _ = write!(out, "{:.6},{:.6}", w.re, -w.im);
    }
    out.push_str("\"/>\n");
}

pub fn render_svg(img: &GridImage) -> String {
    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n");
    out.push_str(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" \
         width=\"800\" height=\"800\" viewBox=\"-1.1 -1.1 2.2 2.2\">\n",
    );
    let _ = writeln!(
        out,
        "<title>Image of a polar grid ({} circles, {} rays) under the lens map, alpha = {}</title>",
        img.circles.len(),
        img.rays.len(),
        img.alpha
    );
    out.push_str("<rect x=\"-1.1\" y=\"-1.1\" width=\"2.2\" height=\"2.2\" fill=\"#ffffff\"/>\n");
    out.push_str(
        "<circle cx=\"0\" cy=\"0\" r=\"1\" fill=\"none\" stroke=\"#999999\" \
         stroke-width=\"0.004\" stroke-dasharray=\"0.02 0.02\"/>\n",
    );
    out.push_str(
        "<g id=\"circles\" fill=\"none\" stroke=\"#1f4e99\" stroke-width=\"0.004\" \
         stroke-linejoin=\"round\">\n",
    );
    for c in &img.circles {
        polyline(&mut out, &c.image);
    }
    out.push_str("</g>\n");
    out.push_str(
        "<g id=\"rays\" fill=\"none\" stroke=\"#b03020\" stroke-width=\"0.004\" \
         stroke-linejoin=\"round\">\n",
    );
    for r in &img.rays {
        polyline(&mut out, &r.image);
    }
    out.push_str("</g>\n</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn circle_is_closed_and_conjugate_symmetric() {
        let pts = circle_points(0.5, 16);
        assert_eq!(pts.len(), 17);
        assert_eq!(pts[0], pts[16]);
        for j in 1..8 {
            assert_eq!(pts[16 - j], pts[j].conj());
        }
    }

    #[test]
    fn rays_start_at_origin() {
        let img = grid_image(0.5, &GridSpec::default()).unwrap();
        assert_eq!(img.rays.len(), 12);
        assert_eq!(img.circles.len(), 6);
        for r in &img.rays {
            assert_eq!(r.image[0], Complex64::new(0.0, 0.0));
        }
    }

    #[test]
    fn rejects_degenerate_grids() {
        let spec = GridSpec {
            rays: 1,
            ..GridSpec::default()
        };
        assert!(grid_image(0.5, &spec).is_err());
        assert!(grid_image(2.5, &GridSpec::default()).is_err());
    }
}
