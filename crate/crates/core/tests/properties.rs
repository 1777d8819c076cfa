use lenslab::{
    boundary_b, boundary_convexity_value, boundary_convexity_value_alt, closed_form_convex_order,
    closed_form_starlike_order, convexity_operator, lens_first_derivative, lens_map,
    reduced_convex_g, reduced_starlike_g, sin_from_b, starlike_operator, BoundaryAngle64,
    Complex64, LensParam64,
};
use proptest::prelude::*;

fn disc_point() -> impl Strategy<Value = Complex64> {
    (0.0f64..0.98, -std::f64::consts::PI..std::f64::consts::PI)
        .prop_map(|(r, t)| Complex64::from_polar(r, t))
}

fn lens_alpha() -> impl Strategy<Value = f64> {
    prop_oneof![0.01f64..=2.0, -2.0f64..=-0.01]
}

fn convex_alpha() -> impl Strategy<Value = f64> {
    prop_oneof![0.01f64..=1.0, -1.0f64..=-0.01]
}

proptest! {
    #[test]
    fn image_lies_in_disc_for_convex_regime(alpha in convex_alpha(), z in disc_point()) {
        let p = LensParam64::new(alpha).unwrap();
        prop_assert!(lens_map(&p, z).unwrap().norm() < 1.0);
    }

    #[test]
    fn conjugation_symmetry(alpha in lens_alpha(), z in disc_point()) {
        let p = LensParam64::new(alpha).unwrap();
        let a = lens_map(&p, z.conj()).unwrap();
        let b = lens_map(&p, z).unwrap().conj();
        prop_assert!((a - b).norm() <= 1e-12 * (1.0 + b.norm()));
    }

    #[test]
    fn parameter_symmetry(alpha in lens_alpha(), z in disc_point()) {
        let p = LensParam64::new(alpha).unwrap();
        let a = lens_map(&p, z).unwrap();
        let b = lens_map(&p.negated(), -z).unwrap();
        prop_assert!((a - b).norm() <= 1e-12 * (1.0 + a.norm()));
    }

    #[test]
    fn map_fixes_origin_with_unit_scaled_derivative(alpha in lens_alpha()) {
        let p = LensParam64::new(alpha).unwrap();
        let zero = Complex64::new(0.0, 0.0);
        prop_assert_eq!(lens_map(&p, zero).unwrap(), zero);
        let d = lens_first_derivative(&p, zero).unwrap();
        prop_assert!((d - Complex64::new(alpha, 0.0)).norm() < 1e-14);
    }

    #[test]
    fn operators_respect_closed_form_orders(alpha in 0.05f64..=1.0, z in disc_point()) {
        let p = LensParam64::new(alpha).unwrap();
        let star = starlike_operator(&p, z).unwrap();
        let conv = convexity_operator(&p, z).unwrap();
        prop_assert!(star >= closed_form_starlike_order(alpha).unwrap() - 1e-9);
        prop_assert!(conv >= closed_form_convex_order(alpha).unwrap() - 1e-9);
    }

    #[test]
    fn sin_round_trip(alpha in lens_alpha(), t in 1e-3f64..(std::f64::consts::PI - 1e-3)) {
        let angle = BoundaryAngle64::new(t, 1e-9).unwrap();
        let b = boundary_b(alpha, angle).unwrap();
        let s = sin_from_b(alpha, b).unwrap();
        prop_assert!((s - t.sin()).abs() <= 1e-10 * t.sin());
    }

    #[test]
    fn convexity_routes_agree(alpha in convex_alpha(), t in 1e-3f64..(2.0 * std::f64::consts::PI - 1e-3)) {
        prop_assume!((t - std::f64::consts::PI).abs() > 1e-3);
        let angle = BoundaryAngle64::new(t, 1e-9).unwrap();
        let a = boundary_convexity_value(alpha, angle).unwrap();
        let b = boundary_convexity_value_alt(alpha, angle).unwrap();
        prop_assert!((a - b).abs() <= 1e-10 * a.abs());
    }

    #[test]
    fn reduced_functions_bounded_by_value_at_one(alpha in 0.05f64..=1.0, lx in -6.0f64..6.0) {
        let x = lx.exp();
        let g_star = reduced_starlike_g(alpha, x).unwrap();
        let g_conv = reduced_convex_g(alpha, x).unwrap();
        prop_assert!(g_star >= reduced_starlike_g(alpha, 1.0).unwrap() * (1.0 - 1e-12));
        prop_assert!(g_conv >= reduced_convex_g(alpha, 1.0).unwrap() * (1.0 - 1e-12));
    }

    #[test]
    fn reduced_functions_are_inversion_symmetric(alpha in 0.05f64..=1.0, lx in -6.0f64..6.0) {
        let x = lx.exp();
        let a = reduced_starlike_g(alpha, x).unwrap();
        let b = reduced_starlike_g(alpha, 1.0 / x).unwrap();
        prop_assert!((a - b).abs() <= 1e-12 * a);
        let a = reduced_convex_g(alpha, x).unwrap();
        let b = reduced_convex_g(alpha, 1.0 / x).unwrap();
        prop_assert!((a - b).abs() <= 1e-12 * a);
    }
}
