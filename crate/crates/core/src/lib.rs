//! Univalent harmonic maps of the unit disk built by shearing the Koebe
//! function, together with their covering, coefficient and area bounds.
//!
//! The pieces, bottom up:
//!
//! * [`series`]: truncated complex power series.
//! * [`harmonic`]: `f = h + conj(g)`, dilatation, Jacobian, class checks and
//!   the closed forms `K`, `K_{H,1..4}`.
//! * [`shear`]: the shear construction `h' = φ'/(1 - w)`, `g' = w h'`.
//! * [`bounds`]: closed-form estimates and [`bounds::BoundReport`].
//! * [`radius`]: boundary profiles and the radial-ladder radius estimate.
//! * [`area`]: Parseval and quadrature image areas.
//! * [`extremal`]: moduli and the identities of the covering argument.
//! * [`verify`], [`cli`], [`io`]: the command-line surface.

pub mod area;
pub mod bounds;
pub mod cli;
pub mod error;
pub mod extremal;
pub mod harmonic;
pub mod io;
pub mod quadrature;
pub mod radius;
pub mod series;
pub mod shear;
pub mod tolerances;
pub mod verify;

pub use error::{Error, Result};

pub type Complex = num_complex::Complex64;
