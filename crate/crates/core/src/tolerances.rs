//! Numerical thresholds shared across the crate.
//!
//! Every threshold that decides a pass/fail or an error path lives here so
//! that the library, the `verify` command and the acceptance suite agree.

/// A divisor's constant term must exceed this in modulus.
pub const ZERO_TOL: f64 = 1e-14;

/// Default truncation order for analytic work.
pub const DEFAULT_ORDER: usize = 64;

/// Default output order of the shear construction.
pub const DEFAULT_SHEAR_ORDER: usize = 128;

/// Normalization slack for `h(0)`, `g(0)`, `h'(0) - 1`, `g'(0)`.
pub const NORMALIZATION_TOL: f64 = 1e-12;

/// Series maps are never evaluated closer to the unit circle than this.
pub const SERIES_RADIUS_CAP: f64 = 1.0 - 1e-6;

/// Slack on `|w_f(z)| <= k |z|^m` in class-membership checks.
pub const CLASS_TOL: f64 = 1e-9;

/// Default class-check grid (radial x angular).
pub const CLASS_GRID_RADIAL: usize = 64;
pub const CLASS_GRID_ANGULAR: usize = 256;

/// Outer radius of the Chebyshev-spaced class-check grid.
pub const CLASS_GRID_OUTER: f64 = 0.999;

/// Golden-section refinement stops once the bracket is narrower than this.
pub const GOLDEN_WIDTH: f64 = 1e-10;

/// Default angular sample count for boundary profiles.
pub const DEFAULT_PROFILE_SAMPLES: usize = 1024;

/// Default radial ladder `r_j = 1 - 2^-j`.
pub const DEFAULT_J_MIN: u32 = 4;
pub const DEFAULT_J_MAX: u32 = 12;

/// A rung of the radial ladder is used only when the estimated truncation
/// tail of a series map at that radius is below this.
pub const RUNG_TAIL_TOL: f64 = 1e-10;

/// Partial sums of the Parseval area series above this are declared divergent.
pub const AREA_DIVERGENCE: f64 = 1e6;

/// Default polar quadrature for the area integral.
pub const AREA_RADIAL_NODES: usize = 64;
pub const AREA_ANGULAR_NODES: usize = 256;

/// Adaptive Simpson settings for the radial identity check.
pub const SIMPSON_TOL: f64 = 1e-10;
pub const SIMPSON_MAX_DEPTH: u32 = 40;

/// Slit-map check slack on imaginary parts and on the tip position.
pub const SLIT_TOL: f64 = 1e-10;
