//! Rigorous enclosures for continued-fraction error sums.
//!
//! The error sum of a positive real `α` is `E(α) = Σ |qₙα − pₙ|`, where `pₙ/qₙ`
//! runs over the convergents of the regular continued fraction of `α`. This
//! crate computes `E(α)` and a family of closed forms for it as exact rational
//! intervals, so that every reported digit is backed by an explicit error
//! bound.
//!
//! The crate is `no_std` and only needs `alloc`. IO, reporting formats and
//! the command-line front end live in the companion `errsumlab` crate.
//!
//! Layout:
//!
//! * [`numerics`]: exact rationals, [`Enclosure`], and enclosures of `exp`,
//!   `sqrt`, `sin`/`cos` and `∫₀¹ e^{−t²/c} dt`.
//! * [`constexpr`]: a small language of real constants (`e^(1/6)`,
//!   `(1+sqrt(5))/2`, ...).
//! * [`contfrac`]: convergents, rigorous digit extraction, the Hurwitzian
//!   families `s·e^{1/(ℓs)}` and `s·e^{1/s}`, and generalized continued
//!   fractions.
//! * [`errorsum`]: the error sum itself, its power-series relative, the
//!   integral form of the residuals `pₘ − αqₘ`, and the series `A(ℓ, s)`.
//! * [`identities`]: the registry of closed-form identities and their
//!   verification reports.

#![no_std]

extern crate alloc;

pub mod constexpr;
pub mod contfrac;
pub mod error;
pub mod errorsum;
pub mod identities;
pub mod numerics;

#[cfg(test)]
mod testutil;

pub use constexpr::{eval_enclosure, parse, ConstExpr};
pub use contfrac::{Convergent, HurwitzFamily};
pub use error::{Error, Result};
pub use errorsum::ErrorSumResult;
pub use identities::{IdentityReport, Status};
pub use numerics::{Enclosure, Precision, Rational};
