//! Exact rationals and rigorous rational-interval enclosures.
//!
//! Every irrational quantity in this crate is represented by an
//! [`Enclosure`]: a closed interval with exact rational endpoints that is
//! guaranteed to contain the true value. The elementary functions here return
//! enclosures of width at most `10^-D` for a requested [`Precision`] of `D`
//! digits.

mod elementary;
pub(crate) mod elementary_ops {
    pub(crate) use super::elementary::{exp_of, sin_cos_of, sqrt_of};
}
mod enclosure;
mod precision;
mod rational;
mod series;

pub use elementary::{exp_enclosure, gauss_integral, sin_cos_enclosure, sqrt_enclosure};
pub use enclosure::Enclosure;
pub use precision::{refine, Precision};
pub use rational::{
    agreed_digits, ceil, decimal_directed, decimal_truncated, floor, int, pow10, ratio, Rational,
    MAX_AGREED_DIGITS,
};
pub use series::{sum_alternating, sum_positive, DEFAULT_TERM_CAP};
