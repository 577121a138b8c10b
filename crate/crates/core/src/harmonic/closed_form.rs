//! Closed-form Koebe-type maps: the analytic Koebe function `K` and the
//! harmonic shears `K_{H,m}` of `K` with dilatation `z^m`, `m = 1..=4`.
//!
//! The `m = 3` and `m = 4` formulas contain `arctan` of an affine function
//! of `z`. Its branch points land on the unit circle (at `e^{±2πi/3}` and
//! `±i` respectively) and the principal cuts stay outside the open disk, so
//! the principal branch is continuous on `𝔻`. The radial route integrates
//! the derivative from the origin and serves as an independent check.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::quadrature::GaussLegendre;
use crate::Complex;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClosedFormId {
    /// `K(z) = z / (1 - z)^2`.
    AnalyticKoebe,
    /// `K_{H,m}`, the shear of `K` with dilatation `z^m`; `m = 1` is `K_H`.
    HarmonicKoebe(u8),
}

impl ClosedFormId {
    pub fn harmonic(m: u8) -> Result<Self> {
        if (1..=4).contains(&m) {
            Ok(Self::HarmonicKoebe(m))
        } else {
            Err(Error::InvalidSpec(format!(
                "closed forms exist for m in 1..=4, got {m}"
            )))
        }
    }
}

impl fmt::Display for ClosedFormId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::AnalyticKoebe => write!(f, "K"),
            Self::HarmonicKoebe(m) => write!(f, "KH_{m}"),
        }
    }
}

impl FromStr for ClosedFormId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "K" {
            return Ok(Self::AnalyticKoebe);
        }
        s.strip_prefix("KH_")
            .and_then(|m| m.parse::<u8>().ok())
            .ok_or_else(|| Error::Format(format!("unknown closed form {s:?}")))
            .and_then(|m| Self::harmonic(m).map_err(|e| Error::Format(e.to_string())))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ArctanRoute {
    #[default]
    Principal,
    /// Integrate `ζ'(tz) z / (1 + ζ(tz)^2)` over `t ∈ [0, 1]`.
    Radial,
}

/// `arctan ζ = log((1 + iζ) / (1 - iζ)) / (2i)` on the principal log.
pub fn arctan_principal(zeta: Complex) -> Complex {
    let i = Complex::i();
    ((1.0 + i * zeta) / (1.0 - i * zeta)).ln() / (2.0 * i)
}

/// `arctan(a + b z)` continued along the segment `[0, z]` from its
/// principal value at `a` (taken real).
pub fn arctan_radial(a: f64, b: f64, z: Complex) -> Complex {
    const PANELS: usize = 8;
    let gl = GaussLegendre::new(24);
    let step = 1.0 / PANELS as f64;
    let mut acc = Complex::new(0.0, 0.0);
    for p in 0..PANELS {
        let lo = p as f64 * step;
        for (t, w) in gl.on_interval(lo, lo + step) {
            let zeta = a + b * (z * t);
            acc += w * b * z / (1.0 + zeta * zeta);
        }
    }
    Complex::new(a.atan(), 0.0) + acc
}

/// Holomorphic and anti-holomorphic parts `(h(z), g(z))` of a closed form.
pub fn closed_form_parts(
    id: ClosedFormId,
    z: Complex,
    route: ArctanRoute,
) -> Result<(Complex, Complex)> {
    if !z.is_finite() || z.norm() > 1.0 + 1e-12 {
        return Err(Error::Domain(format!(
            "closed forms need |z| <= 1, got {z}"
        )));
    }
    let zm1 = z - 1.0;
    if zm1 == Complex::new(0.0, 0.0) {
        return Err(Error::Pole);
    }
    let cube = zm1 * zm1 * zm1;
    let zero = Complex::new(0.0, 0.0);
    let parts = match id {
        ClosedFormId::AnalyticKoebe => (z / (zm1 * zm1), zero),
        ClosedFormId::HarmonicKoebe(1) => {
            let z2 = z * z;
            let z3 = z2 * z;
            let neg_cube = -cube;
            (
                (z - z2 / 2.0 + z3 / 6.0) / neg_cube,
                (z2 / 2.0 + z3 / 6.0) / neg_cube,
            )
        }
        ClosedFormId::HarmonicKoebe(2) => {
            let third = 1.0 / 3.0;
            let h = -third - 1.0 / (3.0 * cube);
            let g = -third + (-1.0 + 3.0 * z - 3.0 * z * z) / (3.0 * cube);
            (h, g)
        }
        ClosedFormId::HarmonicKoebe(3) => {
            let s3 = 3f64.sqrt();
            let at = match route {
                ArctanRoute::Principal => arctan_principal((1.0 + 2.0 * z) / s3),
                ArctanRoute::Radial => arctan_radial(1.0 / s3, 2.0 / s3, z),
            };
            let base = -27.0 + 2.0 * PI / s3;
            let h = (base - 3.0 * (9.0 - 7.0 * z + 2.0 * z * z) / cube - 4.0 * s3 * at) / 54.0;
            let g = (base - (27.0 - 75.0 * z + 60.0 * z * z) / cube - 4.0 * s3 * at) / 54.0;
            (h, g)
        }
        ClosedFormId::HarmonicKoebe(4) => {
            let at = match route {
                ArctanRoute::Principal => arctan_principal(z),
                ArctanRoute::Radial => arctan_radial(0.0, 1.0, z),
            };
            let h = -2.0 / 3.0 - (8.0 - 9.0 * z + 3.0 * z * z) / (12.0 * cube) - at / 4.0;
            let g = -2.0 / 3.0 - (8.0 - 21.0 * z + 15.0 * z * z) / (12.0 * cube) - at / 4.0;
            (h, g)
        }
        ClosedFormId::HarmonicKoebe(m) => {
            return Err(Error::InvalidSpec(format!("no closed form for m = {m}")))
        }
    };
    if !(parts.0.is_finite() && parts.1.is_finite()) {
        return Err(Error::BranchPoint { re: z.re, im: z.im });
    }
    Ok(parts)
}

/// `h(z) + conj(g(z))` on the principal arctan branch.
pub fn eval_closed_form(id: ClosedFormId, z: Complex) -> Result<Complex> {
    eval_closed_form_with(id, z, ArctanRoute::Principal)
}

pub fn eval_closed_form_with(id: ClosedFormId, z: Complex, route: ArctanRoute) -> Result<Complex> {
    let (h, g) = closed_form_parts(id, z, route)?;
    Ok(h + g.conj())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn minus_one() -> Complex {
        Complex::new(-1.0, 0.0)
    }

    #[test]
    fn values_at_minus_one() {
        let v = eval_closed_form(ClosedFormId::HarmonicKoebe(2), minus_one()).unwrap();
        assert!((v - Complex::new(-1.0 / 3.0, 0.0)).norm() <= 1e-12);
        let v = eval_closed_form(ClosedFormId::HarmonicKoebe(3), minus_one()).unwrap();
        assert!((v - Complex::new(-0.231289, 0.0)).norm() <= 5e-7, "{v}");
        let v = eval_closed_form(ClosedFormId::HarmonicKoebe(4), minus_one()).unwrap();
        assert!((v - Complex::new(-0.273968, 0.0)).norm() <= 5e-7, "{v}");
    }

    #[test]
    fn harmonic_koebe_parts_at_minus_one() {
        let (h, g) = closed_form_parts(
            ClosedFormId::HarmonicKoebe(1),
            minus_one(),
            ArctanRoute::Principal,
        )
        .unwrap();
        assert!((h - Complex::new(-5.0 / 24.0, 0.0)).norm() < 1e-15);
        assert!((g - Complex::new(1.0 / 24.0, 0.0)).norm() < 1e-15);
        let v = eval_closed_form(ClosedFormId::HarmonicKoebe(1), minus_one()).unwrap();
        assert!((v + 1.0 / 6.0).norm() < 1e-15);
    }

    #[test]
    fn all_forms_vanish_at_origin() {
        for id in [
            ClosedFormId::AnalyticKoebe,
            ClosedFormId::HarmonicKoebe(1),
            ClosedFormId::HarmonicKoebe(2),
            ClosedFormId::HarmonicKoebe(3),
            ClosedFormId::HarmonicKoebe(4),
        ] {
            let (h, g) =
                closed_form_parts(id, Complex::new(0.0, 0.0), ArctanRoute::Principal).unwrap();
            assert!(h.norm() < 1e-14 && g.norm() < 1e-14, "{id}: h={h}, g={g}");
        }
    }

    #[test]
    fn pole_and_domain_errors() {
        let one = Complex::new(1.0, 0.0);
        assert_eq!(
            eval_closed_form(ClosedFormId::HarmonicKoebe(3), one),
            Err(Error::Pole)
        );
        assert!(matches!(
            eval_closed_form(ClosedFormId::AnalyticKoebe, Complex::new(1.5, 0.0)),
            Err(Error::Domain(_))
        ));
        let branch = Complex::new(0.0, 1.0);
        assert!(matches!(
            eval_closed_form(ClosedFormId::HarmonicKoebe(4), branch),
            Err(Error::BranchPoint { .. })
        ));
    }

    #[test]
    fn radial_route_agrees_with_principal_inside_disk() {
        for m in [3u8, 4] {
            let id = ClosedFormId::HarmonicKoebe(m);
            for j in 0..40 {
                let z =
                    Complex::from_polar(0.9 * ((j % 5) as f64 + 1.0) / 5.0, 0.37 + j as f64 * 0.61);
                let a = eval_closed_form_with(id, z, ArctanRoute::Principal).unwrap();
                let b = eval_closed_form_with(id, z, ArctanRoute::Radial).unwrap();
                assert!((a - b).norm() < 1e-11, "m={m}, z={z}: {a} vs {b}");
            }
        }
    }

    #[test]
    fn parse_and_display() {
        for s in ["K", "KH_1", "KH_2", "KH_3", "KH_4"] {
            assert_eq!(s.parse::<ClosedFormId>().unwrap().to_string(), s);
        }
        assert!("KH_5".parse::<ClosedFormId>().is_err());
        assert!("KH".parse::<ClosedFormId>().is_err());
    }
}
