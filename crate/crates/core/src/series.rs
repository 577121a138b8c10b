//! Truncated power series with complex coefficients.
//!
//! A [`PowerSeries`] of order `N` stores `c_0..=c_N`. Operations between
//! series of different orders zero-pad the shorter operand.

use std::ops::{Add, Neg, Sub};

use crate::error::{Error, Result};
use crate::tolerances::ZERO_TOL;
use crate::Complex;

#[derive(Debug, Clone, PartialEq)]
pub struct PowerSeries {
    coeffs: Vec<Complex>,
}

impl PowerSeries {
    /// Builds a series from `c_0..=c_N`. Rejects empty or non-finite input.
    pub fn from_coeffs(coeffs: Vec<Complex>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Domain(
                "a series needs at least one coefficient".into(),
            ));
        }
        if let Some(n) = coeffs.iter().position(|c| !c.is_finite()) {
            return Err(Error::Domain(format!("coefficient {n} is not finite")));
        }
        Ok(Self { coeffs })
    }

    pub fn from_real(coeffs: &[f64]) -> Result<Self> {
        Self::from_coeffs(coeffs.iter().map(|&c| Complex::new(c, 0.0)).collect())
    }

    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![Complex::new(0.0, 0.0); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(0, Complex::new(1.0, 0.0), order)
    }

    /// `c * z^power`, truncated to `order` (the term vanishes if `power > order`).
    pub fn monomial(power: usize, c: Complex, order: usize) -> Self {
        let mut s = Self::zero(order);
        if power <= order {
            s.coeffs[power] = c;
        }
        s
    }

    /// The identity `z`.
    pub fn identity(order: usize) -> Self {
        Self::monomial(1, Complex::new(1.0, 0.0), order.max(1))
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Complex] {
        &self.coeffs
    }

    /// `c_n`, zero beyond the truncation order.
    pub fn coeff(&self, n: usize) -> Complex {
        self.coeffs.get(n).copied().unwrap_or_default()
    }

    /// Pads with zeros or drops high terms so that the order becomes `order`.
    pub fn with_order(&self, order: usize) -> Self {
        let coeffs = (0..=order).map(|n| self.coeff(n)).collect();
        Self { coeffs }
    }

    pub fn max_abs(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    pub fn scale(&self, s: Complex) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    /// Cauchy product truncated to `max(order(a), order(b))`.
    pub fn mul(&self, other: &Self) -> Self {
        self.mul_to(other, self.order().max(other.order()))
    }

    /// Cauchy product truncated to `order`.
    pub fn mul_to(&self, other: &Self, order: usize) -> Self {
        let mut out = vec![Complex::new(0.0, 0.0); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if *a == Complex::new(0.0, 0.0) {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                out[i + j] += a * b;
            }
        }
        Self { coeffs: out }
    }

    /// Series quotient `self / other` to order `max(order(a), order(b))`.
    pub fn div(&self, other: &Self) -> Result<Self> {
        self.div_to(other, self.order().max(other.order()))
    }

    /// Series quotient truncated to `order`. The divisor must have a constant
    /// term of modulus above [`ZERO_TOL`].
    pub fn div_to(&self, other: &Self, order: usize) -> Result<Self> {
        let b0 = other.coeff(0);
        if b0.norm() <= ZERO_TOL {
            return Err(Error::DivisionByNonUnit(b0.norm()));
        }
        // Divisors here are mostly sparse (1 - k z^m), so only the nonzero
        // tail of `other` takes part in the recurrence.
        let tail: Vec<(usize, Complex)> = other
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .take(order)
            .filter(|(_, c)| **c != Complex::new(0.0, 0.0))
            .map(|(j, c)| (j, *c))
            .collect();
        let inv_b0 = b0.inv();
        let mut out: Vec<Complex> = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let mut acc = self.coeff(n);
            for &(j, bj) in &tail {
                if j > n {
                    break;
                }
                acc -= bj * out[n - j];
            }
            out.push(acc * inv_b0);
        }
        Ok(Self { coeffs: out })
    }

    /// Termwise derivative; order drops by one (an order-0 series yields `0`).
    pub fn derive(&self) -> Self {
        if self.order() == 0 {
            return Self::zero(0);
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(n, c)| c * n as f64)
            .collect();
        Self { coeffs }
    }

    /// Termwise antiderivative with zero constant term; order grows by one.
    pub fn integrate(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(Complex::new(0.0, 0.0));
        coeffs.extend(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(n, c)| c / (n + 1) as f64),
        );
        Self { coeffs }
    }

    /// Horner evaluation of the truncated polynomial.
    pub fn eval(&self, z: Complex) -> Complex {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex::new(0.0, 0.0), |acc, c| acc * z + c)
    }
}

fn zip_with(
    a: &PowerSeries,
    b: &PowerSeries,
    f: impl Fn(Complex, Complex) -> Complex,
) -> PowerSeries {
    let order = a.order().max(b.order());
    PowerSeries {
        coeffs: (0..=order).map(|n| f(a.coeff(n), b.coeff(n))).collect(),
    }
}

impl Add for &PowerSeries {
    type Output = PowerSeries;
    fn add(self, rhs: &PowerSeries) -> PowerSeries {
        zip_with(self, rhs, |a, b| a + b)
    }
}

impl Sub for &PowerSeries {
    type Output = PowerSeries;
    fn sub(self, rhs: &PowerSeries) -> PowerSeries {
        zip_with(self, rhs, |a, b| a - b)
    }
}

impl Neg for &PowerSeries {
    type Output = PowerSeries;
    fn neg(self) -> PowerSeries {
        self.scale(Complex::new(-1.0, 0.0))
    }
}
