//! Exact Vassiliev invariants of torus knots up to order six.
//!
//! The pipeline expands the HOMFLY, Kauffman and Akutsu-Wadati invariants of a
//! torus knot `{n, m}` as truncated power series in `x` at concrete group
//! parameters, evaluates the Casimir-built group factors for the same
//! instantiations, and solves the resulting exact linear systems for the
//! geometric coefficients `α̃_ij` and `α_ij`. Closed-form tables for `α̃`, `α`
//! and the integer normalization `β` are provided as independent oracles, and
//! [`analysis`] hosts the scans over families of torus knots.
//!
//! Everything is exact: rationals are arbitrary precision and no floating
//! point is used anywhere in the computation.

pub mod analysis;
pub mod ansatz;
pub mod closed_form;
pub mod error;
pub mod extract;
pub mod group;
pub mod invariants;
pub mod knot;
pub mod linalg;
pub mod output;
pub mod poly;
pub mod polynomials;
pub mod rational;
pub mod series;
pub mod verify;

pub use error::{Error, Result};
pub use group::{CasimirSet, GroupFactorVector, GroupFamily, GroupInstance};
pub use invariants::{InvariantKind, InvariantTable, Slot};
pub use knot::{CanonicalForm, CanonicalTorusKnot, TorusKnot};
pub use poly::ExactPoly;
pub use rational::Rational;
pub use series::TruncSeries;

/// Highest perturbative order handled by the library.
pub const MAX_ORDER: u8 = 6;

/// Default number of guard terms carried beyond the structural pole budget
/// of each evaluator.
pub const DEFAULT_GUARD: u32 = 2;
