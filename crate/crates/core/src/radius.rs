//! Empirical covering radius: minimum of `|f|` over circles `|z| = r`
//! approaching the unit circle, with golden-section refinement in angle and
//! Richardson extrapolation in `1 - r`.

use std::f64::consts::TAU;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::harmonic::{eval_closed_form, ClosedFormId, HarmonicMap};
use crate::quadrature::golden_section;
use crate::tolerances::{GOLDEN_WIDTH, RUNG_TAIL_TOL, SERIES_RADIUS_CAP};
use crate::Complex;

/// Anything a boundary profile can be sampled from.
#[derive(Debug, Clone)]
pub enum MapSource {
    Series(HarmonicMap),
    Closed(ClosedFormId),
}

impl MapSource {
    pub fn eval(&self, z: Complex) -> Result<Complex> {
        match self {
            Self::Series(map) => map.eval(z),
            Self::Closed(id) => eval_closed_form(*id, z),
        }
    }

    fn check_radius(&self, r: f64) -> Result<()> {
        let ok = match self {
            Self::Series(_) => r > 0.0 && r <= SERIES_RADIUS_CAP,
            Self::Closed(_) => r > 0.0 && r <= 1.0,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::Domain(format!(
                "radius {r} out of range for this map"
            )))
        }
    }
}

impl From<HarmonicMap> for MapSource {
    fn from(map: HarmonicMap) -> Self {
        Self::Series(map)
    }
}

impl From<ClosedFormId> for MapSource {
    fn from(id: ClosedFormId) -> Self {
        Self::Closed(id)
    }
}

/// Samples of `f(r e^{iθ})`.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundaryProfile {
    pub r: f64,
    pub thetas: Vec<f64>,
    pub values: Vec<Complex>,
    pub moduli: Vec<f64>,
}

impl BoundaryProfile {
    pub fn len(&self) -> usize {
        self.thetas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.thetas.is_empty()
    }
}

/// Samples `f` at `θ_j = 2πj/n`. On the unit circle, closed forms skip the
/// pole at `z = 1` and any arctan branch point that a sample lands on.
pub fn boundary_profile(source: &MapSource, r: f64, n: usize) -> Result<BoundaryProfile> {
    if n < 16 {
        return Err(Error::Domain(format!("need at least 16 samples, got {n}")));
    }
    source.check_radius(r)?;
    let on_circle = matches!(source, MapSource::Closed(_)) && r == 1.0;

    let samples: Vec<Result<Option<(f64, Complex)>>> = (0..n)
        .into_par_iter()
        .map(|j| {
            let theta = TAU * j as f64 / n as f64;
            let z = if j == 0 {
                Complex::new(r, 0.0)
            } else {
                Complex::from_polar(r, theta)
            };
            match source.eval(z) {
                Ok(v) => Ok(Some((theta, v))),
                Err(Error::Pole | Error::BranchPoint { .. }) if on_circle => Ok(None),
                Err(e) => Err(e),
            }
        })
        .collect();

    let mut profile = BoundaryProfile {
        r,
        thetas: Vec::with_capacity(n),
        values: Vec::with_capacity(n),
        moduli: Vec::with_capacity(n),
    };
    for sample in samples {
        if let Some((theta, v)) = sample? {
            profile.thetas.push(theta);
            profile.values.push(v);
            profile.moduli.push(v.norm());
        }
    }
    Ok(profile)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MinModulus {
    pub theta: f64,
    pub value: f64,
}

/// Smallest sampled modulus (first index wins ties), optionally refined by
/// golden-section search between the neighbouring samples.
pub fn min_modulus(
    source: &MapSource,
    profile: &BoundaryProfile,
    refine: bool,
) -> Result<MinModulus> {
    let (idx, &value) = profile
        .moduli
        .iter()
        .enumerate()
        .fold(None, |best: Option<(usize, &f64)>, (i, v)| match best {
            Some((_, b)) if *v >= *b => best,
            _ => Some((i, v)),
        })
        .ok_or_else(|| Error::Domain("empty boundary profile".into()))?;
    let coarse = MinModulus {
        theta: profile.thetas[idx],
        value,
    };
    if !refine || profile.len() < 3 {
        return Ok(coarse);
    }

    let n = profile.len();
    let step = |a: f64, b: f64| (b - a).rem_euclid(TAU);
    let lo = profile.thetas[idx] - step(profile.thetas[(idx + n - 1) % n], profile.thetas[idx]);
    let hi = profile.thetas[idx] + step(profile.thetas[idx], profile.thetas[(idx + 1) % n]);
    let r = profile.r;
    let objective = |theta: f64| {
        source
            .eval(Complex::from_polar(r, theta))
            .map(|v| v.norm())
            .unwrap_or(f64::INFINITY)
    };
    let (theta, refined) = golden_section(objective, lo, hi, GOLDEN_WIDTH);
    if refined < coarse.value {
        Ok(MinModulus {
            theta: theta.rem_euclid(TAU),
            value: refined,
        })
    } else {
        Ok(coarse)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RadiusEstimate {
    /// Minimum modulus on the outermost rung used.
    pub value: f64,
    pub argmin_theta: f64,
    /// `(r_j, min_{|z| = r_j} |f|)` for every rung used.
    pub r_ladder: Vec<(f64, f64)>,
    /// Two-point Richardson limit of the rung minima at `r = 1`.
    pub extrapolated: f64,
    /// Ladder exponents skipped because the series tail is not negligible there.
    pub dropped_rungs: Vec<u32>,
}

/// Runs the ladder `r_j = 1 - 2^{-j}`, `j_min <= j <= j_max`.
///
/// Series maps only use rungs where [`HarmonicMap::tail_estimate`] is below
/// [`RUNG_TAIL_TOL`]; if none qualifies the series order is too low for the
/// requested ladder.
pub fn koebe_radius_estimate(
    source: &MapSource,
    j_min: u32,
    j_max: u32,
    n: usize,
) -> Result<RadiusEstimate> {
    if !(4 <= j_min && j_min < j_max && j_max <= 16) {
        return Err(Error::Domain(format!(
            "ladder needs 4 <= j_min < j_max <= 16, got {j_min}..{j_max}"
        )));
    }
    let mut rungs = Vec::new();
    let mut dropped = Vec::new();
    let mut last = None;
    for j in j_min..=j_max {
        let r = 1.0 - 0.5f64.powi(j as i32);
        if let MapSource::Series(map) = source {
            if r > SERIES_RADIUS_CAP || map.tail_estimate(r) > RUNG_TAIL_TOL {
                dropped.push(j);
                continue;
            }
        }
        let profile = boundary_profile(source, r, n)?;
        let min = min_modulus(source, &profile, true)?;
        rungs.push((r, min.value));
        last = Some(min);
    }
    let last = last.ok_or_else(|| Error::InsufficientOrder {
        order: match source {
            MapSource::Series(map) => map.order(),
            MapSource::Closed(_) => 0,
        },
        reason: format!("no ladder rung in {j_min}..={j_max} has a negligible series tail"),
    })?;

    let extrapolated = match rungs.as_slice() {
        [.., (ra, ma), (rb, mb)] => {
            let (ha, hb) = (1.0 - ra, 1.0 - rb);
            (ha * mb - hb * ma) / (ha - hb)
        }
        _ => last.value,
    };
    Ok(RadiusEstimate {
        value: last.value,
        argmin_theta: last.theta,
        r_ladder: rungs,
        extrapolated,
        dropped_rungs: dropped,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harmonic::DilatationSpec;
    use crate::shear::shear_koebe;
    use std::f64::consts::PI;

    fn sheared(k: f64, m: f64, order: usize) -> MapSource {
        shear_koebe(&DilatationSpec::new(k, m, 0.0).unwrap(), order)
            .unwrap()
            .into()
    }

    /// Dense-sampling oracle for the boundary minimum.
    fn dense_min(source: &MapSource, r: f64) -> f64 {
        // cancellation against the pole at z = 1 spoils the last digits there
        let p = boundary_profile(source, r, 4096).unwrap();
        p.thetas
            .iter()
            .zip(&p.moduli)
            .filter(|(t, _)| t.min(TAU - **t) > 0.05)
            .map(|(_, m)| *m)
            .fold(f64::INFINITY, f64::min)
    }

    #[test]
    fn identity_profile() {
        let id = MapSource::Series(HarmonicMap::identity(3));
        let p = boundary_profile(&id, 0.5, 16).unwrap();
        assert!(p.moduli.iter().all(|m| (m - 0.5).abs() < 1e-15));
        let min = min_modulus(&id, &p, false).unwrap();
        assert_eq!(min.theta, 0.0);
        assert!((min.value - 0.5).abs() < 1e-15);
    }

    #[test]
    fn profile_validation() {
        let id = MapSource::Series(HarmonicMap::identity(3));
        assert!(boundary_profile(&id, 0.5, 8).is_err());
        assert!(boundary_profile(&id, 1.0, 16).is_err());
        let k = MapSource::Closed(ClosedFormId::AnalyticKoebe);
        assert!(boundary_profile(&k, 1.01, 16).is_err());
        assert_eq!(boundary_profile(&k, 1.0, 16).unwrap().len(), 15);
    }

    #[test]
    fn analytic_koebe_on_circle() {
        let k = MapSource::Closed(ClosedFormId::AnalyticKoebe);
        let p = boundary_profile(&k, 1.0, 256).unwrap();
        let min = min_modulus(&k, &p, true).unwrap();
        assert!((min.value - 0.25).abs() < 1e-12);
        assert!((min.theta - PI).abs() < 1e-4);
    }

    #[test]
    fn harmonic_koebe_on_circle() {
        let kh = MapSource::Closed(ClosedFormId::HarmonicKoebe(1));
        let p = boundary_profile(&kh, 1.0, 256).unwrap();
        let min = min_modulus(&kh, &p, false).unwrap();
        assert!((min.value - 1.0 / 6.0).abs() < 1e-9);
        let at_pi = p.moduli[p
            .thetas
            .iter()
            .position(|t| (t - PI).abs() < 1e-12)
            .unwrap()];
        assert!((at_pi - 1.0 / 6.0).abs() < 1e-15);
    }

    #[test]
    fn kh2_and_kh4_boundary_minima() {
        for (m, want, tol) in [(2u8, 1.0 / 3.0, 1e-8), (4, 0.273968, 5e-7)] {
            let src = MapSource::Closed(ClosedFormId::HarmonicKoebe(m));
            let p = boundary_profile(&src, 1.0, 1024).unwrap();
            let min = min_modulus(&src, &p, true).unwrap();
            assert!((min.value - want).abs() <= tol, "m = {m}: {min:?}");
            let dense = dense_min(&src, 1.0);
            assert!(
                (min.value - dense).abs() <= tol,
                "m = {m}: {} vs dense {dense}",
                min.value
            );
        }
    }

    #[test]
    fn refinement_never_increases_minimum() {
        for src in [
            sheared(1.0, 1.0, 256),
            sheared(0.5, 3.0, 256),
            MapSource::Closed(ClosedFormId::HarmonicKoebe(3)),
        ] {
            for r in [0.5, 0.8, 0.9] {
                let p = boundary_profile(&src, r, 64).unwrap();
                let coarse = min_modulus(&src, &p, false).unwrap();
                let fine = min_modulus(&src, &p, true).unwrap();
                assert!(fine.value <= coarse.value + 1e-12);
            }
        }
    }

    #[test]
    fn radius_of_identity() {
        let est =
            koebe_radius_estimate(&MapSource::Series(HarmonicMap::identity(2)), 4, 12, 64).unwrap();
        assert!((est.extrapolated - 1.0).abs() < 1e-12);
        assert!((est.value - (1.0 - 0.5f64.powi(12))).abs() < 1e-12);
        assert!(est.dropped_rungs.is_empty());
    }

    #[test]
    fn radius_of_sheared_koebe() {
        let est = koebe_radius_estimate(&sheared(1.0, 1.0, 4096), 4, 12, 1024).unwrap();
        assert!((est.extrapolated - 1.0 / 6.0).abs() <= 1e-3, "{est:?}");
        assert!(est.r_ladder.len() >= 2);
        assert!((est.argmin_theta - PI).abs() < 1e-3);

        let est = koebe_radius_estimate(&sheared(1.0, 3.0, 4096), 4, 12, 1024).unwrap();
        assert!(est.extrapolated <= 0.2313 + 1e-3);
        assert!(est.extrapolated >= 0.15749 - 1e-6);
    }

    #[test]
    fn low_order_series_drops_every_rung() {
        let err = koebe_radius_estimate(&sheared(1.0, 1.0, 64), 4, 12, 256).unwrap_err();
        assert!(matches!(err, Error::InsufficientOrder { .. }));
    }

    #[test]
    fn ladder_validation() {
        let id = MapSource::Series(HarmonicMap::identity(2));
        assert!(koebe_radius_estimate(&id, 3, 8, 64).is_err());
        assert!(koebe_radius_estimate(&id, 8, 8, 64).is_err());
        assert!(koebe_radius_estimate(&id, 4, 17, 64).is_err());
    }

    #[test]
    fn closed_form_rung_minima_increase_towards_circle() {
        for m in 1..=4u8 {
            let src = MapSource::Closed(ClosedFormId::HarmonicKoebe(m));
            let est = koebe_radius_estimate(&src, 4, 12, 512).unwrap();
            for pair in est.r_ladder.windows(2) {
                assert!(
                    pair[1].1 >= pair[0].1 - 1e-12,
                    "m = {m}: {:?}",
                    est.r_ladder
                );
            }
        }
    }
}
