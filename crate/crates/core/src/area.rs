//! Image area of a harmonic map: Parseval coefficient sum and polar
//! quadrature of the Jacobian.

use std::f64::consts::{PI, TAU};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::harmonic::{DilatationSpec, HarmonicMap};
use crate::quadrature::GaussLegendre;
use crate::series::PowerSeries;
use crate::tolerances::{AREA_DIVERGENCE, SERIES_RADIUS_CAP};
use crate::Complex;

/// `π Σ n (|a_n|^2 - |b_n|^2) r^{2n}` over the stored coefficients.
pub fn area_series(map: &HarmonicMap, r: f64) -> Result<f64> {
    check_radius(r, 1.0)?;
    let r2 = r * r;
    let mut weight = 1.0;
    let mut sum = 0.0;
    for n in 1..=map.order() {
        weight *= r2;
        sum += n as f64 * (map.h().coeff(n).norm_sqr() - map.g().coeff(n).norm_sqr()) * weight;
    }
    Ok(PI * sum)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum AreaOutcome {
    Finite {
        area: f64,
    },
    /// The running Parseval sum crossed [`AREA_DIVERGENCE`] at term `n`.
    Divergent {
        partial: f64,
        n: usize,
    },
}

/// [`area_series`] with the divergence sentinel applied to the running sum.
pub fn area_series_checked(map: &HarmonicMap, r: f64) -> Result<AreaOutcome> {
    check_radius(r, 1.0)?;
    let r2 = r * r;
    let mut weight = 1.0;
    let mut sum = 0.0;
    for n in 1..=map.order() {
        weight *= r2;
        sum += n as f64 * (map.h().coeff(n).norm_sqr() - map.g().coeff(n).norm_sqr()) * weight;
        if PI * sum.abs() > AREA_DIVERGENCE {
            return Ok(AreaOutcome::Divergent {
                partial: PI * sum,
                n,
            });
        }
    }
    Ok(AreaOutcome::Finite { area: PI * sum })
}

/// Integral of the Jacobian over `|z| < r`: Gauss-Legendre in the radius,
/// trapezoid in the angle.
pub fn area_quadrature(map: &HarmonicMap, r: f64, n_rad: usize, n_ang: usize) -> Result<f64> {
    check_radius(r, SERIES_RADIUS_CAP)?;
    if r >= 1.0 {
        return Err(Error::Domain("quadrature needs r < 1".into()));
    }
    if n_rad == 0 || n_ang == 0 {
        return Err(Error::Domain(
            "quadrature needs at least one node per axis".into(),
        ));
    }
    let gl = GaussLegendre::new(n_rad);
    let nodes: Vec<(f64, f64)> = gl.on_interval(0.0, r).collect();
    let dtheta = TAU / n_ang as f64;
    let rings: Vec<Result<f64>> = nodes
        .par_iter()
        .map(|&(rho, w)| {
            let mut ring = 0.0;
            for j in 0..n_ang {
                ring += map.jacobian(Complex::from_polar(rho, j as f64 * dtheta))?;
            }
            Ok(w * rho * ring * dtheta)
        })
        .collect();
    rings.into_iter().sum()
}

fn check_radius(r: f64, max: f64) -> Result<()> {
    if r > 0.0 && r <= max {
        Ok(())
    } else {
        Err(Error::Domain(format!("area radius {r} outside (0, {max}]")))
    }
}

/// `z + (k e^{iα} / (m + 1)) conj(z)^{m+1}`.
pub fn extremal_map(spec: &DilatationSpec) -> Result<HarmonicMap> {
    let m = spec.integer_m()?;
    let g = PowerSeries::monomial(m + 1, spec.amplitude() / (m + 1) as f64, m + 1);
    Ok(HarmonicMap::new(PowerSeries::identity(m + 1), g))
}
