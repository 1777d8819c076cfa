//! Acceptance suite. Each criterion prints exactly one `PASS` or `FAIL`
//! line; the process exits non-zero if any criterion fails. Tolerances are
//! the published defaults and are not relaxed here.

use std::f64::consts::FRAC_PI_2;
use std::path::Path;
use std::process::{Command, Output};
use std::time::{Duration, Instant};

use lenslab::order::endpoint_samples;
use lenslab::verify::fd::{fd_first_derivative, sample_points};
use lenslab::verify::{identity_suite, interior_grid_infimum, reduction_checks, BoundaryGrid};
use lenslab::{
    closed_form_convex_order, closed_form_starlike_order, lens_first_derivative, lens_map,
    m_of_alpha, numeric_order, reduced_convex_g, reduced_convex_g_derivative_sign,
    reduced_starlike_g, reduced_starlike_g_derivative_sign, LensParam64, OrderKind, Sign,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

const ORDER_TOL: f64 = 1e-8;
const MINIMIZER_TOL: f64 = 1e-6;
const SEED: u64 = 0x1e45_0001;

/// α ∈ {0.05, 0.10, …, 1.00}.
fn alpha_grid() -> Vec<f64> {
    (1..=20).map(|i| i as f64 / 20.0).collect()
}

fn ensure(ok: bool, detail: String) -> Outcome {
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn order_reproduction(kind: OrderKind) -> Outcome {
    let start = Instant::now();
    let mut worst_residual = 0.0f64;
    let mut worst_t = 0.0f64;
    let mut bad = Vec::new();
    for alpha in alpha_grid() {
        let r = numeric_order(alpha, kind, ORDER_TOL).map_err(|e| format!("alpha={alpha}: {e}"))?;
        let dt = (r.minimizer_t - FRAC_PI_2).abs();
        worst_residual = worst_residual.max(r.residual);
        worst_t = worst_t.max(dt);
        if !(r.residual <= ORDER_TOL && dt <= MINIMIZER_TOL) {
            bad.push(format!("{alpha}"));
        }
    }
    let elapsed = start.elapsed();
    ensure(
        bad.is_empty() && elapsed < Duration::from_secs(5),
        format!(
            "20 alphas, max residual {worst_residual:.3e} (tol {ORDER_TOL:e}), max |t*-pi/2| {worst_t:.3e} \
             (tol {MINIMIZER_TOL:e}), {:.2}s (limit 5s){}",
            elapsed.as_secs_f64(),
            if bad.is_empty() { String::new() } else { format!(", failing alpha: {}", bad.join(" ")) }
        ),
    )
}

fn starlike_orders() -> Outcome {
    order_reproduction(OrderKind::Starlike)
}

fn convex_orders() -> Outcome {
    order_reproduction(OrderKind::Convex)
}

fn order_zero_regime() -> Outcome {
    let mut parts = Vec::new();
    let mut ok = true;
    for alpha in [1.25, 1.5, 1.75, 2.0] {
        let samples = endpoint_samples(alpha).map_err(|e| format!("alpha={alpha}: {e}"))?;
        // z = 1 − 10^{−k}
        let values: Vec<f64> = samples.iter().map(|s| s.1).collect();
        let decreasing = values.windows(2).all(|w| w[1] < w[0]);
        let last = *values.last().unwrap();
        let good = decreasing && last < 1e-2;
        ok &= good;
        parts.push(format!(
            "alpha={alpha}: k=7 value {last:.4e}{}{}",
            if decreasing { "" } else { " not decreasing" },
            if good { "" } else { " [miss]" }
        ));
    }
    ensure(
        ok,
        format!(
            "{} (need strictly decreasing, < 1e-2 at k=7)",
            parts.join("; ")
        ),
    )
}

fn identity_suite_criterion() -> Outcome {
    let grid = BoundaryGrid::full_circle(500).map_err(|e| e.to_string())?;
    let mut failures = Vec::new();
    let mut checks = 0;
    for alpha in [0.25, 0.5, 0.75, 1.0] {
        let p = LensParam64::new(alpha).map_err(|e| e.to_string())?;
        let report = identity_suite(&p, &grid);
        checks += report.checks.len();
        failures.extend(report.failures().map(|c| {
            format!(
                "alpha={alpha} {} measured {:?} tol {:e}",
                c.name, c.measured, c.tol
            )
        }));
    }
    ensure(
        failures.is_empty(),
        if failures.is_empty() {
            format!("{checks} identity checks on a 500-point grid, 4 alphas, all within tolerance")
        } else {
            failures.join("; ")
        },
    )
}

fn reduction_equivalence() -> Outcome {
    let full = BoundaryGrid::full_circle(500).map_err(|e| e.to_string())?;
    let upper = BoundaryGrid::upper(500, 1e-9).map_err(|e| e.to_string())?;
    let mut worst_alt = 0.0f64;
    let mut worst_star = 0.0f64;
    let mut ok = true;
    for alpha in [0.25, 0.5, 0.75, 1.0] {
        let report = reduction_checks(alpha, &full, &upper);
        for (name, worst) in [
            ("convexity_value_vs_alt_form", &mut worst_alt),
            ("starlike_value_vs_reduced_g", &mut worst_star),
        ] {
            let c = report
                .get(name)
                .ok_or_else(|| format!("missing check {name}"))?;
            ok &= c.pass && !c.skipped;
            *worst = worst.max(c.measured.unwrap_or(f64::NAN));
        }
    }
    ensure(
        ok,
        format!(
            "max rel err convex vs alt {worst_alt:.3e}, starlike vs a*sin*g(b) {worst_star:.3e} (tol 1e-10)"
        ),
    )
}

fn critical_points() -> Outcome {
    let expected = [Sign::Negative, Sign::Zero, Sign::Positive];
    let mut worst_m = 0.0f64;
    let mut problems = Vec::new();
    for alpha in [0.25, 0.5, 0.75] {
        for (label, f) in [
            (
                "starlike",
                reduced_starlike_g_derivative_sign as fn(f64, f64) -> lenslab::Result<Sign>,
            ),
            ("convex", reduced_convex_g_derivative_sign),
        ] {
            let signs: Vec<Sign> = [0.5, 1.0, 2.0]
                .iter()
                .map(|&x| f(alpha, x))
                .collect::<lenslab::Result<_>>()
                .map_err(|e| e.to_string())?;
            if signs != expected {
                problems.push(format!("alpha={alpha} {label} signs {signs:?}"));
            }
        }
        let s = (FRAC_PI_2 * alpha).sin();
        let c = (FRAC_PI_2 * alpha).cos();
        let m = m_of_alpha(alpha).map_err(|e| e.to_string())?;
        let g_star = reduced_starlike_g(alpha, 1.0).map_err(|e| e.to_string())?;
        let g_conv = reduced_convex_g(alpha, 1.0).map_err(|e| e.to_string())?;
        for (label, got, want) in [
            ("m(alpha)", m, 1.0 / (s * s)),
            ("starlike g(1)", g_star, 1.0 / (s * s)),
            ("convex g(1)", g_conv, 1.0 / (1.0 + c)),
        ] {
            let err = (got - want).abs();
            worst_m = worst_m.max(err);
            if err > 1e-12 {
                problems.push(format!("alpha={alpha} {label} off by {err:.3e}"));
            }
        }
    }
    ensure(
        problems.is_empty(),
        if problems.is_empty() {
            format!("signs (-, 0, +) at x = 0.5, 1, 2 for both kinds; max minimum error {worst_m:.3e} (tol 1e-12)")
        } else {
            problems.join("; ")
        },
    )
}

fn minimum_principle() -> Outcome {
    let start = Instant::now();
    let radii = [0.9, 0.99, 0.999, 0.9999];
    let mut worst_gap = 0.0f64;
    let mut min_margin = f64::INFINITY;
    let mut problems = Vec::new();
    for alpha in [0.25, 0.5, 0.75, 1.0] {
        let p = LensParam64::new(alpha).map_err(|e| e.to_string())?;
        for kind in [OrderKind::Starlike, OrderKind::Convex] {
            let order = numeric_order(alpha, kind, ORDER_TOL)
                .map_err(|e| e.to_string())?
                .numeric;
            for &r in &radii {
                let inf = interior_grid_infimum(&p, kind, r, 64, 512).map_err(|e| e.to_string())?;
                min_margin = min_margin.min(inf - order);
                if inf < order - 1e-9 {
                    problems.push(format!(
                        "alpha={alpha} {} r={r}: {inf} < {order}",
                        kind.name()
                    ));
                }
                if r == 0.9999 {
                    worst_gap = worst_gap.max(inf - order);
                    if inf - order > 5e-3 {
                        problems.push(format!(
                            "alpha={alpha} {} gap {:.3e} at r=0.9999",
                            kind.name(),
                            inf - order
                        ));
                    }
                }
            }
        }
    }
    let elapsed = start.elapsed();
    if elapsed >= Duration::from_secs(10) {
        problems.push(format!("took {:.2}s", elapsed.as_secs_f64()));
    }
    ensure(
        problems.is_empty(),
        if problems.is_empty() {
            format!(
                "4 alphas x 2 kinds x 4 radii on 64x512: min(inf - order) {min_margin:.3e} (>= -1e-9), \
                 gap at r=0.9999 {worst_gap:.3e} (<= 5e-3), {:.2}s (limit 10s)",
                elapsed.as_secs_f64()
            )
        } else {
            problems.join("; ")
        },
    )
}

fn consistency() -> Outcome {
    let mut problems = Vec::new();
    let mut worst_even = 0.0f64;
    for alpha in alpha_grid() {
        let star = closed_form_starlike_order(alpha).map_err(|e| e.to_string())?;
        let conv = closed_form_convex_order(alpha).map_err(|e| e.to_string())?;
        if !(star >= 0.5 && star >= conv) {
            problems.push(format!("alpha={alpha}: starlike {star}, convex {conv}"));
        }
        for kind in [OrderKind::Starlike, OrderKind::Convex] {
            let pos = numeric_order(alpha, kind, ORDER_TOL).map_err(|e| e.to_string())?;
            let neg = numeric_order(-alpha, kind, ORDER_TOL).map_err(|e| e.to_string())?;
            let d = (pos.closed_form - neg.closed_form)
                .abs()
                .max((pos.numeric - neg.numeric).abs());
            worst_even = worst_even.max(d);
            if d > ORDER_TOL {
                problems.push(format!("alpha={alpha} {} not even: {d:e}", kind.name()));
            }
        }
    }

    let points = sample_points(100, SEED, 0.0, 0.99);
    let mut worst_sym = 0.0f64;
    for alpha in alpha_grid() {
        let p = LensParam64::new(alpha).map_err(|e| e.to_string())?;
        for &z in &points {
            let a = lens_map(&p, z).map_err(|e| e.to_string())?;
            let b = lens_map(&p.negated(), -z).map_err(|e| e.to_string())?;
            worst_sym = worst_sym.max((a - b).norm());
        }
    }
    if worst_sym > 1e-12 {
        problems.push(format!("lens symmetry error {worst_sym:.3e}"));
    }
    ensure(
        problems.is_empty(),
        if problems.is_empty() {
            format!(
                "starlike >= 1/2 and >= convex on 20 alphas; max evenness gap {worst_even:.3e}; \
                 max |l_a(z) - l_-a(-z)| {worst_sym:.3e} over 100 points (tol 1e-12)"
            )
        } else {
            problems.join("; ")
        },
    )
}

fn derivative_correctness() -> Outcome {
    let points = sample_points(100, SEED, 0.05, 0.9);
    let mut worst = 0.0f64;
    for alpha in [0.3, 0.7, 1.3] {
        let p = LensParam64::new(alpha).map_err(|e| e.to_string())?;
        for &z in &points {
            let an = lens_first_derivative(&p, z).map_err(|e| e.to_string())?;
            let fd = fd_first_derivative(&p, z, 1e-5).map_err(|e| e.to_string())?;
            worst = worst.max((fd - an).norm() / an.norm());
        }
    }
    ensure(
        worst < 1e-6,
        format!("max relative error {worst:.3e} over 100 points x 3 alphas (tol 1e-6)"),
    )
}

fn lenslab(args: &[&str]) -> Result<Output, String> {
    Command::new(env!("CARGO_BIN_EXE_lenslab"))
        .args(args)
        .output()
        .map_err(|e| format!("cannot run lenslab: {e}"))
}

fn cli_determinism() -> Outcome {
    let verify = lenslab(&["verify", "--alpha", "0.5"])?;
    let verify_code = verify.status.code();

    let scan_args = [
        "scan",
        "--alpha-min",
        "0.1",
        "--alpha-max",
        "1.0",
        "--steps",
        "10",
        "--kind",
        "convex",
    ];
    let scan_a = lenslab(&scan_args)?;
    let scan_b = lenslab(&scan_args)?;
    let scan_same =
        scan_a.status.success() && !scan_a.stdout.is_empty() && scan_a.stdout == scan_b.stdout;

    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let render = |name: &str| -> Result<Vec<u8>, String> {
        let path = dir.path().join(name);
        let path_str = path.to_str().ok_or("non-UTF-8 temp path")?;
        let out = lenslab(&[
            "grid-image",
            "--alpha",
            "0.5",
            "--rays",
            "12",
            "--circles",
            "6",
            "--out",
            path_str,
        ])?;
        if !out.status.success() {
            return Err(format!("grid-image exited {:?}", out.status.code()));
        }
        std::fs::read(Path::new(&path)).map_err(|e| e.to_string())
    };
    let svg_a = render("a.svg")?;
    let svg_b = render("b.svg")?;
    let svg_same = !svg_a.is_empty() && svg_a == svg_b;

    ensure(
        verify_code == Some(0) && scan_same && svg_same,
        format!(
            "verify --alpha 0.5 exit {verify_code:?}; scan outputs identical: {scan_same} ({} bytes); \
             grid-image outputs identical: {svg_same} ({} bytes)",
            scan_a.stdout.len(),
            svg_a.len()
        ),
    )
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("starlike order reproduction", starlike_orders),
        ("convex order reproduction", convex_orders),
        ("order-0 regime endpoint decay", order_zero_regime),
        ("boundary identity suite", identity_suite_criterion),
        ("reduction equivalence", reduction_equivalence),
        ("critical-point structure", critical_points),
        ("minimum principle", minimum_principle),
        ("consistency inequalities", consistency),
        ("derivative correctness", derivative_correctness),
        ("cli determinism", cli_determinism),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        match run() {
            Ok(detail) => println!("PASS  {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL  {name}: {detail}");
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
