//! The shearing construction.
//!
//! Given a normalized conformal `φ` and a dilatation `w`, the harmonic map
//! `f = h + conj(g)` with `h - g = φ` and `g' = w h'` is obtained from
//! `h' = φ' / (1 - w)` and `g' = w φ' / (1 - w)`.

use crate::error::{Error, Result};
use crate::harmonic::{DilatationSpec, HarmonicMap};
use crate::series::PowerSeries;
use crate::tolerances::{NORMALIZATION_TOL, ZERO_TOL};
use crate::Complex;

/// `K(z) = z / (1 - z)^2 = Σ n z^n`, truncated at `order`.
pub fn koebe_series(order: usize) -> PowerSeries {
    let coeffs = (0..=order.max(1))
        .map(|n| Complex::new(n as f64, 0.0))
        .collect();
    PowerSeries::from_coeffs(coeffs).expect("Koebe coefficients are finite")
}

/// `k e^{iα} z^m` as a series of the given order.
pub fn monomial_dilatation(spec: &DilatationSpec, order: usize) -> Result<PowerSeries> {
    let m = spec.integer_m()?;
    if order < m {
        return Err(Error::InsufficientOrder {
            order,
            reason: format!("dilatation z^{m} does not fit"),
        });
    }
    Ok(PowerSeries::monomial(m, spec.amplitude(), order))
}

/// Shear of `phi` with dilatation `w`, truncated at `order`.
pub fn shear(phi: &PowerSeries, w: &PowerSeries, order: usize) -> Result<HarmonicMap> {
    if order == 0 {
        return Err(Error::InsufficientOrder {
            order,
            reason: "shear output needs order >= 1".into(),
        });
    }
    if phi.coeff(0).norm() > NORMALIZATION_TOL || (phi.coeff(1) - 1.0).norm() > NORMALIZATION_TOL {
        return Err(Error::Normalization(format!(
            "need phi(0) = 0 and phi'(0) = 1, got {} and {}",
            phi.coeff(0),
            phi.coeff(1)
        )));
    }
    let w0 = w.coeff(0);
    if (1.0 - w0).norm() <= ZERO_TOL {
        return Err(Error::DivisionByNonUnit((1.0 - w0).norm()));
    }
    if w0.norm() >= 1.0 {
        return Err(Error::Domain(format!(
            "|w(0)| = {} must be below 1",
            w0.norm()
        )));
    }

    let inner = order - 1;
    let dphi = phi.with_order(order).derive();
    let w = w.with_order(inner);
    let one_minus_w = &PowerSeries::one(inner) - &w;
    let dh = dphi.div_to(&one_minus_w, inner)?;
    let dg = w.mul_to(&dh, inner);
    Ok(HarmonicMap::with_derivatives(
        dh.integrate(),
        dg.integrate(),
        dh,
        dg,
    ))
}

/// `shear(K, k e^{iα} z^m)`.
pub fn shear_koebe(spec: &DilatationSpec, order: usize) -> Result<HarmonicMap> {
    shear(
        &koebe_series(order),
        &monomial_dilatation(spec, order)?,
        order,
    )
}
