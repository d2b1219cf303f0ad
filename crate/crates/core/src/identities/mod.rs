//! Registry of closed-form identities for error sums, each with a pair of
//! independently evaluated sides.
//!
//! Below, `E(α) = Σ |qₙα − pₙ|` and `I(c) = ∫₀¹ e^{−t²/c} dt`. Left-hand
//! sides of error-sum identities go through continued fractions; right-hand
//! sides only through elementary functions and explicit series.

pub mod closed_forms;
pub mod error_sums;
mod registry;
mod verify;

pub use registry::{cartesian, lookup, registry, Identity, ParamSpec, Params, Status};
pub use verify::{verify, verify_with, IdentityReport, CONJ_MAX_TERMS, HETYEI_CHECKED_QUOTIENTS};
