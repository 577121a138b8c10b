//! Acceptance criteria. Each criterion prints one `[PASS]` or `[FAIL]` line
//! to stderr, visible without `--nocapture`; the test fails if any criterion
//! fails.

use std::f64::consts::PI;
use std::io::Write;

use harmonic_koebe::area::{area_quadrature, area_series, extremal_map};
use harmonic_koebe::bounds::{
    class_constants, coefficient_bound, kh3_radius_interval, koebe_lower_bound, koebe_radius_lower,
    ClassIndex,
};
use harmonic_koebe::extremal::{proof_integral, theorem1_delta_chain};
use harmonic_koebe::harmonic::{eval_closed_form, ClosedFormId, DilatationSpec};
use harmonic_koebe::radius::{boundary_profile, koebe_radius_estimate, min_modulus, MapSource};
use harmonic_koebe::shear::shear_koebe;
use harmonic_koebe::Complex;

type Outcome = (bool, String);
type Criterion = (&'static str, fn() -> Outcome);

fn spec(k: f64, m: f64) -> DilatationSpec {
    DilatationSpec::new(k, m, 0.0).unwrap()
}

fn kh(m: u8) -> ClosedFormId {
    ClosedFormId::HarmonicKoebe(m)
}

fn c1_kh2_at_minus_one() -> Outcome {
    let v = eval_closed_form(kh(2), Complex::new(-1.0, 0.0)).unwrap();
    let err = (v - Complex::new(-1.0 / 3.0, 0.0)).norm();
    (
        err <= 1e-12,
        format!("K_H2(-1) = {v}, |err| = {err:.2e} (tol 1e-12)"),
    )
}

fn c2_kh3_kh4_at_minus_one() -> Outcome {
    let v3 = eval_closed_form(kh(3), Complex::new(-1.0, 0.0)).unwrap();
    let v4 = eval_closed_form(kh(4), Complex::new(-1.0, 0.0)).unwrap();
    let e3 = (v3 - Complex::new(-0.231289, 0.0)).norm();
    let e4 = (v4 - Complex::new(-0.273968, 0.0)).norm();
    (
        e3 <= 5e-7 && e4 <= 5e-7,
        format!(
            "K_H3(-1) = {:.10}, K_H4(-1) = {:.10}, errs {e3:.1e}, {e4:.1e} (tol 5e-7)",
            v3.re, v4.re
        ),
    )
}

fn c3_boundary_minimum() -> Outcome {
    let src = MapSource::Closed(kh(1));
    let profile = boundary_profile(&src, 1.0, 1024).unwrap();
    let min = min_modulus(&src, &profile, true).unwrap();
    let at_pi = src.eval(Complex::new(-1.0, 0.0)).unwrap().norm();
    let err = (min.value - 1.0 / 6.0).abs();
    (
        err <= 1e-6 && (at_pi - min.value).abs() <= 1e-6,
        format!(
            "min |K_H| on |z|=1 = {:.12}, |K_H(e^{{iπ}})| = {at_pi:.12}, err {err:.1e} (tol 1e-6)",
            min.value
        ),
    )
}

fn c4_exact_constants() -> Outcome {
    let r = koebe_radius_lower(&spec(1.0, 1.0));
    let r3 = class_constants(3).unwrap().r_q;
    (
        r == 1.0 / 16.0 && r3 == 1.0 / 8.0,
        format!("koebe_radius_lower(1, 1) = {r}, R_3 = {r3} (exact)"),
    )
}

fn c5_coefficient_bounds() -> Outcome {
    let a3 = coefficient_bound(ClassIndex::new(3, 3).unwrap());
    let a2: Vec<f64> = (6..=20)
        .map(|q| coefficient_bound(ClassIndex::new(2, q).unwrap()))
        .collect();
    let worst = a2.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    (
        (318.0..=319.0).contains(&a3) && a3.ceil() == 319.0 && worst < 16.5,
        format!("bound(3, 3) = {a3:.6}, max_{{q=6..20}} bound(2, q) = {worst:.6} (< 16.5)"),
    )
}

fn c6_kh3_interval() -> Outcome {
    let (lo, hi) = kh3_radius_interval();
    (
        (lo - 0.15749).abs() <= 1e-5 && (hi - 0.231289).abs() <= 5e-7,
        format!("({lo:.8}, {hi:.8}) vs (0.15749 ± 1e-5, 0.231289 ± 5e-7)"),
    )
}

fn c7_kh_coefficients() -> Outcome {
    let f = shear_koebe(&spec(1.0, 1.0), 20).unwrap();
    let mut worst: f64 = 0.0;
    for n in 1..=20usize {
        let nf = n as f64;
        let (a, b) = (f.h().coeff(n), f.g().coeff(n));
        worst = worst
            .max((a - (nf + 1.0) * (2.0 * nf + 1.0) / 6.0).norm())
            .max((b - (nf - 1.0) * (2.0 * nf - 1.0) / 6.0).norm())
            .max((a - b - nf).norm());
    }
    (
        worst <= 1e-10,
        format!("max coefficient error for n <= 20: {worst:.2e} (tol 1e-10)"),
    )
}

fn c8_closed_form_vs_series() -> Outcome {
    // 10 radii in (0, 0.8] times 10 angles
    let grid: Vec<Complex> = (1..=10)
        .flat_map(|i| {
            (0..10).map(move |j| Complex::from_polar(0.08 * i as f64, 0.3 + PI * j as f64 / 5.0))
        })
        .collect();
    assert_eq!(grid.len(), 100);
    let mut errs = Vec::new();
    for m in 2..=4u8 {
        let f = shear_koebe(&spec(1.0, m as f64), 128).unwrap();
        let worst = grid
            .iter()
            .map(|&z| (f.eval(z).unwrap() - eval_closed_form(kh(m), z).unwrap()).norm())
            .fold(0.0, f64::max);
        errs.push(worst);
    }
    (
        errs.iter().all(|e| *e <= 1e-8),
        format!(
            "max |closed - series| for m = 2, 3, 4: {:.2e}, {:.2e}, {:.2e} (tol 1e-8)",
            errs[0], errs[1], errs[2]
        ),
    )
}

fn c9_extremal_area() -> Outcome {
    let mut worst: f64 = 0.0;
    for k in [0.25, 0.5, 1.0] {
        for m in [1.0, 2.0, 3.0] {
            let area = area_series(&extremal_map(&spec(k, m)).unwrap(), 1.0).unwrap();
            worst = worst.max((area - PI * (1.0 - k * k / (m + 1.0))).abs());
        }
    }
    (
        worst <= 1e-14,
        format!("max |area - π(1 - k²/(m+1))| = {worst:.2e} (tol 1e-14)"),
    )
}

fn c10_area_cross_method() -> Outcome {
    let mut parts = Vec::new();
    let mut pass = true;
    for m in [1.0, 2.0] {
        let f = shear_koebe(&spec(1.0, m), 128).unwrap();
        let a = area_series(&f, 0.9).unwrap();
        let b = area_quadrature(&f, 0.9, 64, 256).unwrap();
        pass &= (a - b).abs() <= 1e-6;
        parts.push(format!("m={m}: {a:.10} vs {b:.10}"));
    }
    (pass, format!("{} (tol 1e-6)", parts.join("; ")))
}

fn c11_proof_integral_and_chain() -> Outcome {
    let mut worst: f64 = 0.0;
    for t0 in [1e-3, 1e-2, 0.05, 0.2, 0.5] {
        for k_amp in [0.0, 0.1, 0.3, 0.6, 1.0] {
            for m in [1.0, 2.0, 3.0, 4.0] {
                worst = worst.max(proof_integral(t0, 1.0, k_amp, m).unwrap().residual);
            }
        }
    }
    let gaps: Vec<f64> = [
        (1e-3, 1.1),
        (1e-4, 1.01),
        (1e-5, 1.001),
        (1e-6, 1.0001),
        (1e-7, 1.00001),
    ]
    .iter()
    .map(|&(eps, beta)| {
        let chain = theorem1_delta_chain(1.0, 0.9, 2.0, eps, beta).unwrap();
        assert!(chain.holds);
        chain.gap
    })
    .collect();
    let monotone = gaps.windows(2).all(|w| w[1] < w[0]) && gaps.iter().all(|g| *g >= 0.0);
    let last = *gaps.last().unwrap();
    (
        worst <= 1e-8 && monotone && last < 1e-4,
        format!(
            "proof_integral residual {worst:.2e} (tol 1e-8); chain gaps {}",
            gaps.iter()
                .map(|g| format!("{g:.2e}"))
                .collect::<Vec<_>>()
                .join(" > ")
        ),
    )
}

fn c12_theorem1_sweep() -> Outcome {
    let mut margin = f64::INFINITY;
    let mut rungs = 0;
    for k in [0.25, 0.5, 1.0] {
        for m in [1.0, 2.0, 3.0, 4.0] {
            let s = spec(k, m);
            let src = MapSource::Series(shear_koebe(&s, 4096).unwrap());
            let est = koebe_radius_estimate(&src, 4, 12, 1024).unwrap();
            for (r, min) in est.r_ladder {
                margin = margin.min(min - koebe_lower_bound(r, &s).unwrap());
                rungs += 1;
            }
        }
    }
    (
        rungs >= 12 && margin >= -1e-9,
        format!("smallest rung margin over bound {margin:.6e} across {rungs} rungs of 12 maps (tol -1e-9)"),
    )
}

#[test]
fn acceptance_criteria() {
    let criteria: [Criterion; 12] = [
        ("1 K_H2(-1) = -1/3", c1_kh2_at_minus_one),
        ("2 K_H3(-1), K_H4(-1)", c2_kh3_kh4_at_minus_one),
        ("3 boundary minimum of |K_H|", c3_boundary_minimum),
        ("4 exact covering constants", c4_exact_constants),
        ("5 coefficient bounds", c5_coefficient_bounds),
        ("6 K_H3 radius interval", c6_kh3_interval),
        ("7 K_H coefficients", c7_kh_coefficients),
        ("8 closed form vs series", c8_closed_form_vs_series),
        ("9 extremal area", c9_extremal_area),
        ("10 area cross-method", c10_area_cross_method),
        (
            "11 proof integral and δ chain",
            c11_proof_integral_and_chain,
        ),
        ("12 covering bound sweep", c12_theorem1_sweep),
    ];
    let mut failed = Vec::new();
    // the raw handle bypasses libtest output capture
    let mut err = std::io::stderr().lock();
    writeln!(err).unwrap();
    for (name, check) in criteria {
        let (pass, detail) = check();
        writeln!(
            err,
            "[{}] {name}: {detail}",
            if pass { "PASS" } else { "FAIL" }
        )
        .unwrap();
        if !pass {
            failed.push(name);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
