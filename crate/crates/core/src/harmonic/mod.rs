//! Harmonic maps `f = h + conj(g)` of the unit disk.

mod closed_form;

use std::f64::consts::{PI, TAU};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bounds::BoundReport;
use crate::error::{Error, Result};
use crate::series::PowerSeries;
use crate::tolerances::{CLASS_GRID_OUTER, CLASS_TOL, NORMALIZATION_TOL, SERIES_RADIUS_CAP};
use crate::Complex;

pub use closed_form::{
    arctan_principal, arctan_radial, closed_form_parts, eval_closed_form, eval_closed_form_with,
    ArctanRoute, ClosedFormId,
};

/// A harmonic map given by the Maclaurin jets of its holomorphic part `h`
/// and its anti-holomorphic part `g`.
#[derive(Debug, Clone)]
pub struct HarmonicMap {
    h: PowerSeries,
    g: PowerSeries,
    dh: PowerSeries,
    dg: PowerSeries,
    normalized: bool,
}

impl PartialEq for HarmonicMap {
    fn eq(&self, other: &Self) -> bool {
        self.h == other.h && self.g == other.g
    }
}

impl HarmonicMap {
    pub fn new(h: PowerSeries, g: PowerSeries) -> Self {
        let dh = h.derive();
        let dg = g.derive();
        Self::with_derivatives(h, g, dh, dg)
    }

    /// Keeps derivatives known exactly by the caller instead of
    /// differentiating `h` and `g` again.
    pub(crate) fn with_derivatives(
        h: PowerSeries,
        g: PowerSeries,
        dh: PowerSeries,
        dg: PowerSeries,
    ) -> Self {
        let normalized = h.coeff(0).norm() <= NORMALIZATION_TOL
            && g.coeff(0).norm() <= NORMALIZATION_TOL
            && (h.coeff(1) - 1.0).norm() <= NORMALIZATION_TOL
            && g.coeff(1).norm() <= NORMALIZATION_TOL;
        Self {
            h,
            g,
            dh,
            dg,
            normalized,
        }
    }

    /// `h = z`, `g = 0`.
    pub fn identity(order: usize) -> Self {
        Self::new(
            PowerSeries::identity(order),
            PowerSeries::zero(order.max(1)),
        )
    }

    pub fn h(&self) -> &PowerSeries {
        &self.h
    }

    pub fn g(&self) -> &PowerSeries {
        &self.g
    }

    /// Whether the map carries the `S_H^0` normalization
    /// `h(0) = g(0) = g'(0) = 0`, `h'(0) = 1`.
    pub fn is_normalized(&self) -> bool {
        self.normalized
    }

    pub fn order(&self) -> usize {
        self.h.order().max(self.g.order())
    }

    /// Largest `n` with `a_n` or `b_n` nonzero.
    pub fn degree(&self) -> usize {
        (0..=self.order())
            .rev()
            .find(|&n| self.h.coeff(n).norm() + self.g.coeff(n).norm() > 0.0)
            .unwrap_or(0)
    }

    pub fn eval(&self, z: Complex) -> Result<Complex> {
        check_series_point(z)?;
        Ok(self.h.eval(z) + self.g.eval(z).conj())
    }

    pub fn jacobian(&self, z: Complex) -> Result<f64> {
        check_series_point(z)?;
        Ok(self.dh.eval(z).norm_sqr() - self.dg.eval(z).norm_sqr())
    }

    /// Analytic dilatation `g'/h'` as a series of order `N - 1`.
    pub fn dilatation_series(&self) -> Result<PowerSeries> {
        let order = self.dh.order().max(self.dg.order());
        self.dg.div_to(&self.dh, order)
    }

    /// Rough size of `sum_{n>N} (|a_n| + |b_n|) r^n`, extrapolating the
    /// coefficient growth ratio of the last few stored terms. Zero for
    /// polynomial maps whose top coefficients vanish.
    pub fn tail_estimate(&self, r: f64) -> f64 {
        let n = self.order();
        let c = |k: usize| self.h.coeff(k).norm() + self.g.coeff(k).norm();
        if self.degree() < n {
            return 0.0;
        }
        let window = n.saturating_sub(8).max(1);
        let mut ratio: f64 = 1.0;
        for k in window + 1..=n {
            let prev = c(k - 1);
            if prev > 0.0 {
                ratio = ratio.max(c(k) / prev);
            } else {
                return f64::INFINITY;
            }
        }
        let q = ratio * r;
        if q >= 1.0 {
            return f64::INFINITY;
        }
        c(n) * r.powi(n as i32) * q / (1.0 - q)
    }
}

fn check_series_point(z: Complex) -> Result<()> {
    if !z.is_finite() || z.norm() > SERIES_RADIUS_CAP {
        return Err(Error::Domain(format!(
            "series maps are evaluated only for |z| <= {SERIES_RADIUS_CAP}, got |z| = {}",
            z.norm()
        )));
    }
    Ok(())
}

/// Parameters `(k, m, alpha)` of the dilatation `w(z) = k e^{i alpha} z^m`
/// and of the class `S_H^0(k, m)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DilatationSpec {
    k: f64,
    m: f64,
    alpha: f64,
}

impl DilatationSpec {
    pub fn new(k: f64, m: f64, alpha: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&k) {
            return Err(Error::InvalidSpec(format!("k = {k} outside [0, 1]")));
        }
        if !(m.is_finite() && m >= 1.0) {
            return Err(Error::InvalidSpec(format!("m = {m} must be >= 1")));
        }
        if !alpha.is_finite() {
            return Err(Error::InvalidSpec("alpha must be finite".into()));
        }
        Ok(Self {
            k,
            m,
            alpha: alpha.rem_euclid(TAU),
        })
    }

    pub fn k(&self) -> f64 {
        self.k
    }

    pub fn m(&self) -> f64 {
        self.m
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    /// `m` as an exponent of a monomial; fails for fractional `m`.
    pub fn integer_m(&self) -> Result<usize> {
        if self.m.fract() != 0.0 || self.m > u32::MAX as f64 {
            return Err(Error::InvalidSpec(format!(
                "m = {} is not a positive integer",
                self.m
            )));
        }
        Ok(self.m as usize)
    }

    /// `k e^{i alpha}`.
    pub fn amplitude(&self) -> Complex {
        Complex::from_polar(self.k, self.alpha)
    }
}

/// Chebyshev-Lobatto radii in `(0, outer]`, clustered at both ends.
fn chebyshev_radii(n: usize, outer: f64) -> Vec<f64> {
    (1..=n)
        .map(|i| outer * 0.5 * (1.0 - (PI * i as f64 / n as f64).cos()))
        .collect()
}

/// Sweeps `|w_f(z)| - k |z|^m` over a polar grid and reports its maximum.
/// Passes iff the maximum is at most [`CLASS_TOL`].
pub fn check_class(
    map: &HarmonicMap,
    spec: &DilatationSpec,
    n_radial: usize,
    n_angular: usize,
) -> Result<BoundReport> {
    if n_radial == 0 || n_angular == 0 {
        return Err(Error::Domain(
            "class grid needs at least one point per axis".into(),
        ));
    }
    let w = map.dilatation_series()?;
    let radii = chebyshev_radii(n_radial, CLASS_GRID_OUTER);

    let slices: Vec<(f64, Complex)> = (0..n_angular)
        .into_par_iter()
        .map(|j| {
            let theta = TAU * j as f64 / n_angular as f64;
            let mut best = (f64::NEG_INFINITY, Complex::new(0.0, 0.0));
            for &r in &radii {
                let z = Complex::from_polar(r, theta);
                let residual = w.eval(z).norm() - spec.k * r.powf(spec.m);
                if residual > best.0 {
                    best = (residual, z);
                }
            }
            best
        })
        .collect();

    let (worst, witness) =
        slices
            .into_iter()
            .fold((f64::NEG_INFINITY, Complex::new(0.0, 0.0)), |acc, s| {
                if s.0 > acc.0 {
                    s
                } else {
                    acc
                }
            });

    Ok(BoundReport::formula(
        "class_membership",
        [
            ("k", spec.k),
            ("m", spec.m),
            ("alpha", spec.alpha),
            ("n_radial", n_radial as f64),
            ("n_angular", n_angular as f64),
        ],
        0.0,
    )
    .upper(worst, CLASS_TOL)
    .with_witness(witness))
}
