//! Closed-form moduli and identities behind the covering estimate: annulus
//! modulus, the radial metric integral, the slit-plane modulus and the chain
//! of inequalities that pins the boundary distance `δ`.

use std::collections::BTreeMap;
use std::f64::consts::TAU;

use serde::Serialize;

use crate::bounds::BoundReport;
use crate::error::{Error, Result};
use crate::quadrature::adaptive_simpson;
use crate::tolerances::{SIMPSON_MAX_DEPTH, SIMPSON_TOL, SLIT_TOL};
use crate::Complex;

/// A closed-form quantity next to an independent numerical evaluation.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ModulusCheck {
    pub params: BTreeMap<String, f64>,
    pub closed_form: f64,
    pub numeric: f64,
    pub residual: f64,
}

impl ModulusCheck {
    fn new<'a>(
        params: impl IntoIterator<Item = (&'a str, f64)>,
        closed_form: f64,
        numeric: f64,
    ) -> Self {
        Self {
            params: params
                .into_iter()
                .map(|(k, v)| (k.to_string(), v))
                .collect(),
            closed_form,
            numeric,
            residual: (closed_form - numeric).abs(),
        }
    }
}

/// `log(b / a) / 2π`.
pub fn annulus_modulus(a: f64, b: f64) -> Result<f64> {
    if !(a > 0.0 && a < b && b.is_finite()) {
        return Err(Error::Domain(format!(
            "annulus needs 0 < a < b, got a = {a}, b = {b}"
        )));
    }
    Ok((b / a).ln() / TAU)
}

/// `∫_{t0}^{t1} (1 - K t^m) / (1 + K t^m) dt / t` by its antiderivative
/// `ln t - (2/m) ln(1 + K t^m)` and by adaptive Simpson.
pub fn proof_integral(t0: f64, t1: f64, k_amp: f64, m: f64) -> Result<ModulusCheck> {
    if !(t0 > 0.0 && t0 < t1 && t1 <= 1.0) {
        return Err(Error::Domain(format!(
            "need 0 < t0 < t1 <= 1, got [{t0}, {t1}]"
        )));
    }
    if !(k_amp >= 0.0 && k_amp.is_finite()) || !(m >= 1.0 && m.is_finite()) {
        return Err(Error::Domain(format!(
            "need K >= 0 and m >= 1, got K = {k_amp}, m = {m}"
        )));
    }
    let antiderivative = |t: f64| t.ln() - (2.0 / m) * (k_amp * t.powf(m)).ln_1p();
    let closed = antiderivative(t1) - antiderivative(t0);
    let integrand = |t: f64| {
        let kt = k_amp * t.powf(m);
        (1.0 - kt) / (1.0 + kt) / t
    };
    let numeric = adaptive_simpson(&integrand, t0, t1, SIMPSON_TOL, SIMPSON_MAX_DEPTH);
    Ok(ModulusCheck::new(
        [("t0", t0), ("t1", t1), ("K_amp", k_amp), ("m", m)],
        closed,
        numeric,
    ))
}

/// `log(4δ / ε) / 2π`, the small-`ε` modulus of the slit plane
/// `ℂ \ (-∞, -δ]` with the disk `|w| <= ε` removed.
pub fn slit_modulus_asymptotic(delta: f64, epsilon: f64) -> Result<f64> {
    if !(epsilon > 0.0 && epsilon < delta && delta.is_finite()) {
        return Err(Error::Domain(format!(
            "need 0 < ε < δ, got ε = {epsilon}, δ = {delta}"
        )));
    }
    Ok((4.0 * delta / epsilon).ln() / TAU)
}

/// `ψ(e^{iθ}) = 4δ K(e^{iθ})`, evaluated from the complex formula.
pub fn slit_map_value(delta: f64, theta: f64) -> Complex {
    let z = Complex::from_polar(1.0, theta);
    let one_minus = 1.0 - z;
    4.0 * delta * z / (one_minus * one_minus)
}

/// Checks that `ψ = 4δK` sends `e^{iθ_j}` (`θ_j = 2πj/n`, `j != 0`) onto the
/// slit `(-∞, -δ]`, and that the values match `-δ / sin^2(θ/2)`.
pub fn slit_map_check(delta: f64, n: usize) -> Result<BoundReport> {
    if !(delta > 0.0 && delta.is_finite()) || n < 8 {
        return Err(Error::Domain(format!(
            "need δ > 0 and n >= 8, got δ = {delta}, n = {n}"
        )));
    }
    let mut max_im: f64 = 0.0;
    let mut max_formula_gap: f64 = 0.0;
    let mut worst = (f64::NEG_INFINITY, Complex::new(0.0, 0.0));
    for j in 1..n {
        let theta = TAU * j as f64 / n as f64;
        let psi = slit_map_value(delta, theta);
        let s = (theta / 2.0).sin();
        let expected = -delta / (s * s);
        max_im = max_im.max(psi.im.abs() / psi.norm());
        max_formula_gap = max_formula_gap.max((psi.re - expected).abs() / expected.abs());
        if psi.re > worst.0 {
            worst = (psi.re, Complex::from_polar(1.0, theta));
        }
    }
    let mut report = BoundReport::formula("slit_map", [("delta", delta), ("n", n as f64)], -delta)
        .upper(worst.0, SLIT_TOL)
        .with_witness(worst.1);
    report.pass = report
        .pass
        .map(|p| p && max_im <= SLIT_TOL && max_formula_gap <= SLIT_TOL);
    Ok(report)
}

/// Both sides of the final inequality of the covering argument.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DeltaChain {
    /// `closed_form` is the right side `ln(4δ*/ε)`, `numeric` the left side
    /// `(2/m) ln((1 + k a^m β^m ε^m) / (1 + k a^m)) - ln(βε)`.
    pub check: ModulusCheck,
    /// `1 / (4 (1 + k a^m)^{2/m})`.
    pub delta_star: f64,
    /// Right side minus left side.
    pub gap: f64,
    /// Whether `lhs <= rhs + 2βε`.
    pub holds: bool,
}

pub fn theorem1_delta_chain(k: f64, a: f64, m: f64, epsilon: f64, beta: f64) -> Result<DeltaChain> {
    if !(0.0..=1.0).contains(&k) || !(m >= 1.0 && m.is_finite()) {
        return Err(Error::Domain(format!(
            "need k in [0, 1] and m >= 1, got k = {k}, m = {m}"
        )));
    }
    if !(a > 0.0 && a < 1.0) || !(beta > 1.0 && beta.is_finite()) {
        return Err(Error::Domain(format!(
            "need 0 < a < 1 and β > 1, got a = {a}, β = {beta}"
        )));
    }
    if !(epsilon > 0.0 && epsilon * beta < 0.1) {
        return Err(Error::Domain(format!(
            "need 0 < βε < 0.1, got ε = {epsilon}, β = {beta}"
        )));
    }
    let ka = k * a.powf(m);
    let delta_star = 1.0 / (4.0 * (1.0 + ka).powf(2.0 / m));
    let lhs =
        (2.0 / m) * ((ka * (beta * epsilon).powf(m)).ln_1p() - ka.ln_1p()) - (beta * epsilon).ln();
    let rhs = (4.0 * delta_star / epsilon).ln();
    let check = ModulusCheck::new(
        [
            ("k", k),
            ("a", a),
            ("m", m),
            ("epsilon", epsilon),
            ("beta", beta),
            ("delta", delta_star),
        ],
        rhs,
        lhs,
    );
    Ok(DeltaChain {
        check,
        delta_star,
        gap: rhs - lhs,
        holds: lhs <= rhs + 2.0 * beta * epsilon,
    })
}
