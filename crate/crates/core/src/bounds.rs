//! Closed-form covering, coefficient and area estimates for the classes
//! `S_H^0(k, m)` and `S_H^{p,q}`, and the report type used to compare them
//! against measured quantities.

use std::collections::BTreeMap;
use std::f64::consts::PI;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::harmonic::{eval_closed_form, ClosedFormId, DilatationSpec};
use crate::Complex;

/// A named bound value, its inputs, and optionally a measured quantity
/// checked against it.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundReport {
    pub name: String,
    pub inputs: BTreeMap<String, f64>,
    pub value: f64,
    pub measured: Option<f64>,
    pub pass: Option<bool>,
    #[serde(serialize_with = "serialize_witness")]
    pub witness: Option<Complex>,
}

fn serialize_witness<S: Serializer>(
    w: &Option<Complex>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    match w {
        Some(z) => [z.re, z.im].serialize(s),
        None => s.serialize_none(),
    }
}

impl BoundReport {
    pub fn formula<'a>(
        name: &str,
        inputs: impl IntoIterator<Item = (&'a str, f64)>,
        value: f64,
    ) -> Self {
        Self {
            name: name.to_string(),
            inputs: inputs
                .into_iter()
                .map(|(k, v)| (k.to_string(), v))
                .collect(),
            value,
            measured: None,
            pass: None,
            witness: None,
        }
    }

    /// `value` is an upper bound: passes iff `measured <= value + tol`.
    pub fn upper(mut self, measured: f64, tol: f64) -> Self {
        self.measured = Some(measured);
        self.pass = Some(measured <= self.value + tol);
        self
    }

    /// `value` is a lower bound: passes iff `measured >= value - tol`.
    pub fn lower(mut self, measured: f64, tol: f64) -> Self {
        self.measured = Some(measured);
        self.pass = Some(measured >= self.value - tol);
        self
    }

    pub fn with_witness(mut self, z: Complex) -> Self {
        self.witness = Some(z);
        self
    }
}

/// `r / (4 (1 + k r^m)^{2/m})`: lower bound on `|F(z)|` at `|z| = r`.
pub fn koebe_lower_bound(r: f64, spec: &DilatationSpec) -> Result<f64> {
    if !(0.0..=1.0).contains(&r) {
        return Err(Error::Domain(format!("r = {r} outside [0, 1]")));
    }
    let (k, m) = (spec.k(), spec.m());
    Ok(r / (4.0 * (1.0 + k * r.powf(m)).powf(2.0 / m)))
}

/// Radius of the disk covered by every map of `S_H^0(k, m)`.
pub fn koebe_radius_lower(spec: &DilatationSpec) -> f64 {
    1.0 / (4.0 * (1.0 + spec.k()).powf(2.0 / spec.m()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CoveringPredicate {
    /// The hypothesis `k <= 1/2 or m >= 4`.
    pub stated: bool,
    /// `(1 + k)^{2/m} <= 3/2`, i.e. the covered radius reaches `1/6`.
    pub exact: bool,
}

pub fn corollary1_predicate(spec: &DilatationSpec) -> CoveringPredicate {
    CoveringPredicate {
        stated: spec.k() <= 0.5 || spec.m() >= 4.0,
        exact: (1.0 + spec.k()).powf(2.0 / spec.m()) <= 1.5,
    }
}

/// Indices of the first nonzero coefficients `a_p`, `b_q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ClassIndex {
    p: u32,
    q: u32,
}

impl ClassIndex {
    pub fn new(p: u32, q: u32) -> Result<Self> {
        if p < 2 || q < 2 {
            return Err(Error::InvalidSpec(format!(
                "need p, q >= 2, got p = {p}, q = {q}"
            )));
        }
        Ok(Self { p, q })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn q(&self) -> u32 {
        self.q
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ClassConstants {
    pub r_q: f64,
    pub d_q: f64,
}

/// `R_q = 2^{-2q/(q-1)}` and `d_q = 2π / (3√3 R_q)`.
pub fn class_constants(q: u32) -> Result<ClassConstants> {
    if q < 2 {
        return Err(Error::InvalidSpec(format!("need q >= 2, got {q}")));
    }
    let qf = q as f64;
    let r_q = 2f64.powf(-2.0 * qf / (qf - 1.0));
    let d_q = 2.0 * PI / (3.0 * 3f64.sqrt() * r_q);
    Ok(ClassConstants { r_q, d_q })
}

/// `d^{p-1} (d R / p + p)`.
pub fn coefficient_bound_general(idx: ClassIndex) -> f64 {
    let ClassConstants { r_q, d_q } = class_constants(idx.q).expect("validated index");
    let p = idx.p as f64;
    d_q.powi(idx.p as i32 - 1) * (d_q * r_q / p + p)
}

/// `d (d R / 2 + 2) - 2`, the bound on `|a_2|`.
pub fn coefficient_bound_a2(q: u32) -> Result<f64> {
    let ClassConstants { r_q, d_q } = class_constants(q)?;
    Ok(d_q * (d_q * r_q / 2.0 + 2.0) - 2.0)
}

/// Bound on `|a_p|` over `S_H^{p,q}`; the sharper of the two formulas when `p = 2`.
pub fn coefficient_bound(idx: ClassIndex) -> f64 {
    let general = coefficient_bound_general(idx);
    if idx.p == 2 {
        general.min(coefficient_bound_a2(idx.q).expect("validated index"))
    } else {
        general
    }
}

/// `3√3 R / (2π)`.
pub fn heinz_lower(r: f64) -> Result<f64> {
    if r.is_nan() || r <= 0.0 {
        return Err(Error::Domain(format!("R = {r} must be positive")));
    }
    Ok(3.0 * 3f64.sqrt() * r / (2.0 * PI))
}

/// `π (1 - k^2 / (m + 1))`, defined for integer `m`.
pub fn area_lower_bound(spec: &DilatationSpec) -> Result<f64> {
    let m = spec.integer_m()? as f64;
    Ok(PI * (1.0 - spec.k() * spec.k() / (m + 1.0)))
}

/// Lower and upper estimate of the covering radius of `S_H^0(1, 3)`.
pub fn kh3_radius_interval() -> (f64, f64) {
    let spec = DilatationSpec::new(1.0, 3.0, 0.0).expect("valid spec");
    let upper = eval_closed_form(ClosedFormId::HarmonicKoebe(3), Complex::new(-1.0, 0.0))
        .expect("K_{H,3} is regular at -1")
        .norm();
    (koebe_radius_lower(&spec), upper)
}
