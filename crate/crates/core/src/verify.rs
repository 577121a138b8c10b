//! The self-contained verification suite behind `harmonic-koebe verify`.

use std::f64::consts::PI;

use serde::Serialize;

use crate::area::{area_quadrature, area_series, extremal_map};
use crate::bounds::{
    area_lower_bound, class_constants, coefficient_bound, kh3_radius_interval, koebe_lower_bound,
    koebe_radius_lower, ClassIndex,
};
use crate::error::Result;
use crate::extremal::{proof_integral, theorem1_delta_chain};
use crate::harmonic::{eval_closed_form, ClosedFormId, DilatationSpec};
use crate::radius::{boundary_profile, koebe_radius_estimate, min_modulus, MapSource};
use crate::shear::shear_koebe;
use crate::tolerances::{
    AREA_ANGULAR_NODES, AREA_RADIAL_NODES, DEFAULT_J_MAX, DEFAULT_J_MIN, DEFAULT_PROFILE_SAMPLES,
};
use crate::Complex;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckOutcome {
    pub name: String,
    pub expected: String,
    pub got: String,
    pub pass: bool,
}

type CheckFn = fn() -> Result<(String, String, bool)>;

/// Names and bodies of every check, in report order.
pub const CHECKS: &[(&str, CheckFn)] = &[
    ("kh2-minus-one", kh2_minus_one),
    ("kh3-kh4-minus-one", kh3_kh4_minus_one),
    ("kh-boundary-min", kh_boundary_min),
    ("covering-constants", covering_constants),
    ("coefficient-bounds", coefficient_bounds),
    ("kh3-interval", kh3_interval),
    ("kh-coefficients", kh_coefficients),
    ("closed-form-vs-series", closed_form_vs_series),
    ("extremal-area", extremal_area),
    ("area-cross-method", area_cross_method),
    ("proof-integral-delta-chain", proof_integral_delta_chain),
    ("theorem1-sweep", theorem1_sweep),
];

pub fn check_names() -> impl Iterator<Item = &'static str> {
    CHECKS.iter().map(|(name, _)| *name)
}

/// Runs the checks whose names pass `filter`. A check that errors fails.
pub fn run(filter: impl Fn(&str) -> bool) -> Vec<CheckOutcome> {
    CHECKS
        .iter()
        .filter(|(name, _)| filter(name))
        .map(|(name, check)| {
            let (expected, got, pass) =
                check().unwrap_or_else(|e| ("no error".into(), format!("error: {e}"), false));
            CheckOutcome {
                name: name.to_string(),
                expected,
                got,
                pass,
            }
        })
        .collect()
}

fn spec(k: f64, m: f64) -> DilatationSpec {
    DilatationSpec::new(k, m, 0.0).expect("fixed parameters are valid")
}

fn at_minus_one(m: u8) -> Result<f64> {
    Ok(eval_closed_form(ClosedFormId::HarmonicKoebe(m), Complex::new(-1.0, 0.0))?.re)
}

fn kh2_minus_one() -> Result<(String, String, bool)> {
    let v = at_minus_one(2)?;
    Ok((
        "-1/3 ± 1e-12".into(),
        format!("{v:.15}"),
        (v + 1.0 / 3.0).abs() <= 1e-12,
    ))
}

fn kh3_kh4_minus_one() -> Result<(String, String, bool)> {
    let (v3, v4) = (at_minus_one(3)?, at_minus_one(4)?);
    Ok((
        "-0.231289, -0.273968 ± 5e-7".into(),
        format!("{v3:.9}, {v4:.9}"),
        (v3 + 0.231289).abs() <= 5e-7 && (v4 + 0.273968).abs() <= 5e-7,
    ))
}

fn kh_boundary_min() -> Result<(String, String, bool)> {
    let src = MapSource::Closed(ClosedFormId::HarmonicKoebe(1));
    let profile = boundary_profile(&src, 1.0, 256)?;
    let min = min_modulus(&src, &profile, false)?;
    let at_pi = src.eval(Complex::new(-1.0, 0.0))?.norm();
    Ok((
        "min |K_H| on |z|=1 = 1/6 ± 1e-6, attained at θ=π".into(),
        format!("min {:.12}, |K_H(-1)| {at_pi:.12}", min.value),
        (min.value - 1.0 / 6.0).abs() <= 1e-6 && (at_pi - min.value).abs() <= 1e-6,
    ))
}

fn covering_constants() -> Result<(String, String, bool)> {
    let r11 = koebe_radius_lower(&spec(1.0, 1.0));
    let r3 = class_constants(3)?.r_q;
    Ok((
        "1/16 and R_3 = 1/8, exact".into(),
        format!("{r11}, {r3}"),
        r11 == 1.0 / 16.0 && r3 == 0.125,
    ))
}

fn coefficient_bounds() -> Result<(String, String, bool)> {
    let a3 = coefficient_bound(ClassIndex::new(3, 3)?);
    let mut worst_a2: f64 = 0.0;
    for q in 6..=20 {
        worst_a2 = worst_a2.max(coefficient_bound(ClassIndex::new(2, q)?));
    }
    Ok((
        "|a_3| bound in [318, 319]; max_{q=6..20} |a_2| bound < 16.5".into(),
        format!("{a3:.6}; {worst_a2:.6}"),
        (318.0..=319.0).contains(&a3) && worst_a2 < 16.5,
    ))
}

fn kh3_interval() -> Result<(String, String, bool)> {
    let (lo, hi) = kh3_radius_interval();
    Ok((
        "(0.15749 ± 1e-5, 0.231289 ± 5e-7)".into(),
        format!("({lo:.8}, {hi:.8})"),
        (lo - 0.15749).abs() <= 1e-5 && (hi - 0.231289).abs() <= 5e-7 && lo < hi,
    ))
}

fn kh_coefficients() -> Result<(String, String, bool)> {
    let f = shear_koebe(&spec(1.0, 1.0), 20)?;
    let mut worst: f64 = 0.0;
    for n in 1..=20 {
        let nf = n as f64;
        let a = f.h().coeff(n);
        let b = f.g().coeff(n);
        worst = worst
            .max((a - (nf + 1.0) * (2.0 * nf + 1.0) / 6.0).norm())
            .max((b - (nf - 1.0) * (2.0 * nf - 1.0) / 6.0).norm())
            .max((a - b - nf).norm());
    }
    Ok((
        "max coefficient error ≤ 1e-10".into(),
        format!("{worst:.3e}"),
        worst <= 1e-10,
    ))
}

/// 100 points: 10 radii in (0, 0.8] times 10 angles offset from the axes.
pub fn comparison_grid() -> Vec<Complex> {
    (1..=10)
        .flat_map(|i| {
            (0..10).map(move |j| Complex::from_polar(0.08 * i as f64, 0.3 + PI * j as f64 / 5.0))
        })
        .collect()
}

fn closed_form_vs_series() -> Result<(String, String, bool)> {
    let mut worst: f64 = 0.0;
    for m in 2..=4u8 {
        let f = shear_koebe(&spec(1.0, m as f64), 128)?;
        for z in comparison_grid() {
            let closed = eval_closed_form(ClosedFormId::HarmonicKoebe(m), z)?;
            worst = worst.max((f.eval(z)? - closed).norm());
        }
    }
    Ok((
        "max error ≤ 1e-8 (m = 2, 3, 4; N = 128)".into(),
        format!("{worst:.3e}"),
        worst <= 1e-8,
    ))
}

fn extremal_area() -> Result<(String, String, bool)> {
    let mut worst: f64 = 0.0;
    for k in [0.25, 0.5, 1.0] {
        for m in 1..=3 {
            let s = spec(k, m as f64);
            let area = area_series(&extremal_map(&s)?, 1.0)?;
            worst = worst.max((area - PI * (1.0 - k * k / (m as f64 + 1.0))).abs());
            worst = worst.max((area - area_lower_bound(&s)?).abs());
        }
    }
    Ok(("≤ 1e-14".into(), format!("{worst:.3e}"), worst <= 1e-14))
}

fn area_cross_method() -> Result<(String, String, bool)> {
    let mut worst: f64 = 0.0;
    for m in [1.0, 2.0] {
        let f = shear_koebe(&spec(1.0, m), 128)?;
        let a = area_series(&f, 0.9)?;
        let b = area_quadrature(&f, 0.9, AREA_RADIAL_NODES, AREA_ANGULAR_NODES)?;
        worst = worst.max((a - b).abs());
    }
    Ok((
        "≤ 1e-6 at r = 0.9".into(),
        format!("{worst:.3e}"),
        worst <= 1e-6,
    ))
}

/// `(t0, K_amp, m)` grid for the radial identity, `t1 = 1`.
pub const PROOF_T0: [f64; 5] = [1e-3, 1e-2, 0.05, 0.2, 0.5];
pub const PROOF_K: [f64; 5] = [0.0, 0.1, 0.3, 0.6, 1.0];
pub const PROOF_M: [f64; 4] = [1.0, 2.0, 3.0, 4.0];

/// Joint path `(ε, β) -> (0, 1)` for the covering chain.
pub const CHAIN_PATH: [(f64, f64); 4] = [(1e-3, 1.1), (1e-4, 1.01), (1e-5, 1.001), (1e-6, 1.0001)];

fn proof_integral_delta_chain() -> Result<(String, String, bool)> {
    let mut worst: f64 = 0.0;
    for t0 in PROOF_T0 {
        for k in PROOF_K {
            for m in PROOF_M {
                worst = worst.max(proof_integral(t0, 1.0, k, m)?.residual);
            }
        }
    }
    let gaps = CHAIN_PATH
        .iter()
        .map(|&(eps, beta)| {
            theorem1_delta_chain(1.0, 0.9, 2.0, eps, beta).map(|c| (c.gap, c.holds))
        })
        .collect::<Result<Vec<_>>>()?;
    let monotone = gaps.windows(2).all(|w| w[1].0 < w[0].0);
    let holds = gaps.iter().all(|g| g.1 && g.0 >= 0.0);
    let last = gaps.last().map(|g| g.0).unwrap_or(f64::NAN);
    Ok((
        "residual ≤ 1e-8; gap ↓ 0 along (ε, β)".into(),
        format!("residual {worst:.3e}; final gap {last:.3e}"),
        worst <= 1e-8 && monotone && holds && last < 1e-3,
    ))
}

/// `(k, m)` corpus for the covering-bound sweep.
pub const SWEEP_K: [f64; 3] = [0.25, 0.5, 1.0];
pub const SWEEP_M: [f64; 4] = [1.0, 2.0, 3.0, 4.0];
pub const SWEEP_ORDER: usize = 4096;

fn theorem1_sweep() -> Result<(String, String, bool)> {
    let mut worst = f64::INFINITY;
    let mut rungs = 0;
    for k in SWEEP_K {
        for m in SWEEP_M {
            let s = spec(k, m);
            let src = MapSource::Series(shear_koebe(&s, SWEEP_ORDER)?);
            let est =
                koebe_radius_estimate(&src, DEFAULT_J_MIN, DEFAULT_J_MAX, DEFAULT_PROFILE_SAMPLES)?;
            for (r, min) in est.r_ladder {
                worst = worst.min(min - koebe_lower_bound(r, &s)?);
                rungs += 1;
            }
        }
    }
    Ok((
        "every rung min ≥ lower bound - 1e-9".into(),
        format!("min margin {worst:.6e} over {rungs} rungs"),
        rungs > 0 && worst >= -1e-9,
    ))
}
