//! The error sum `E(α) = Σ |qₙα − pₙ|` and its companions.

mod a_function;
mod abs;
mod komatsu;
mod power_series;

pub use a_function::{a_closed, a_closed_linear_poly, a_series};
pub use abs::{error_sum_abs, error_sum_of_enclosure, signed_residuals, ErrorSumResult};
pub use komatsu::{beta_exp_integral, convergent_side_residual, komatsu_residual};
pub use power_series::error_sum_power_series;
