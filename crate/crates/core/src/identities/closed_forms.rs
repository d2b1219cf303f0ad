//! Right-hand sides built from elementary functions and explicit series.
//!
//! Nothing here may touch continued fractions or error sums; the
//! `independent_of_error_sums` test below reads this file to make sure.

use num_traits::One;

use crate::error::Result;
use crate::errorsum::{a_closed, a_series};
use crate::numerics::{exp_enclosure, gauss_integral, int, ratio, sqrt_enclosure, sum_alternating, sum_positive, Enclosure, Precision, Rational};

fn e_pow(r: Rational, wp: Precision) -> Result<Enclosure> {
    exp_enclosure(&r, wp)
}

/// `(e/4)(−1 + 10·A(1,1))`.
pub fn eq1_rhs(wp: Precision) -> Result<Enclosure> {
    let e = e_pow(int(1), wp)?;
    let a = a_series(&int(1), &int(1), wp)?;
    let inner = a.scale(&int(10)).shift(&int(-1));
    Ok((&e * &inner).scale(&ratio(1, 4)))
}

/// `(2/ℓ)·e^{1/(ℓs)}·I(ℓs)`.
pub fn thm3_f1_rhs(l: i64, s: i64, wp: Precision) -> Result<Enclosure> {
    let c = int(l * s);
    let e = e_pow(c.recip(), wp)?;
    let i = gauss_integral(&c, wp)?;
    Ok((&e * &i).scale(&ratio(2, l)))
}

/// `2e^{1/s}·I(s) + s(1 − e^{1/s}) − 1`.
pub fn thm3_f2_rhs(s: i64, wp: Precision) -> Result<Enclosure> {
    let c = int(s);
    let e = e_pow(c.recip(), wp)?;
    let i = gauss_integral(&c, wp)?;
    let main = (&e * &i).scale(&int(2));
    let linear = (-&e).shift(&int(1)).scale(&c);
    Ok((&main + &linear).shift(&int(-1)))
}

/// `2e·I(1) − e`.
pub fn cor4_e_rhs(wp: Precision) -> Result<Enclosure> {
    let e = e_pow(int(1), wp)?;
    let i = gauss_integral(&int(1), wp)?;
    Ok(&(&e * &i).scale(&int(2)) - &e)
}

/// `2·I(1) − e`, the same expression without the factor `e`.
pub fn cor4_e_without_factor(wp: Precision) -> Result<Enclosure> {
    let e = e_pow(int(1), wp)?;
    let i = gauss_integral(&int(1), wp)?;
    Ok(&i.scale(&int(2)) - &e)
}

/// `(2/ℓ)·e^{1/ℓ}·I(ℓ)`.
pub fn cor4_epow_rhs(l: i64, wp: Precision) -> Result<Enclosure> {
    thm3_f1_rhs(l, 1, wp)
}

pub fn cor5_lhs(l: i64, s: i64, wp: Precision) -> Result<Enclosure> {
    a_series(&int(l), &int(s), wp)
}

pub fn cor5_rhs(l: i64, s: i64, wp: Precision) -> Result<Enclosure> {
    a_closed(&int(l), &int(s), wp)
}

/// `Σ (−1)ⁿ/((n+1)!(2n+1))`; the terms decrease in size from `n = 0`.
fn signed_factorial_odd_sum(wp: Precision) -> Result<Enclosure> {
    let mut fact = Rational::one();
    sum_alternating(
        |n| {
            fact /= int(n as i64 + 1);
            let t = &fact / int(2 * n as i64 + 1);
            if n % 2 == 0 {
                t
            } else {
                -t
            }
        },
        0,
        wp,
    )
}

/// `Σ (−1)^{n+1}/((n+1)!(2n+1))`.
pub fn eq2_helper_lhs(wp: Precision) -> Result<Enclosure> {
    Ok(-signed_factorial_odd_sum(wp)?)
}

/// `1 − e^{−1} − 2·I(1)`.
pub fn eq2_helper_rhs(wp: Precision) -> Result<Enclosure> {
    let inv_e = e_pow(int(-1), wp)?;
    let i = gauss_integral(&int(1), wp)?;
    Ok((-&(&inv_e + &i.scale(&int(2)))).shift(&int(1)))
}

/// `e·Σ (−1)ⁿ/((n+1)!(2n+1)) − 1`.
pub fn eq2_easier_rhs(wp: Precision) -> Result<Enclosure> {
    let e = e_pow(int(1), wp)?;
    Ok((&e * &signed_factorial_odd_sum(wp)?).shift(&int(-1)))
}

/// `Σ 2^{2n+1} n!/(ℓ^{n+1}(2n+1)!)`. Consecutive terms have ratio
/// `2/(ℓ(2n+3))`, which only decreases.
fn odd_factorial_sum(l: i64, wp: Precision) -> Result<Enclosure> {
    let lr = int(l);
    let mut t = ratio(2, l);
    sum_positive(
        |n| {
            if n > 0 {
                t = &t * ratio(2, 2 * n as i64 + 1) / &lr;
            }
            t.clone()
        },
        |n| ratio(2, l * (2 * n as i64 + 3)),
        wp,
    )
}

/// `Σ 2^{2n+1} n!/(2n+1)! − e`.
pub fn eq3_rhs(wp: Precision) -> Result<Enclosure> {
    let e = e_pow(int(1), wp)?;
    Ok(&odd_factorial_sum(1, wp)? - &e)
}

/// `Σ 2^{2n+1} n!/(ℓ^{n+1}(2n+1)!)`.
pub fn eq4_rhs(l: i64, wp: Precision) -> Result<Enclosure> {
    odd_factorial_sum(l, wp)
}

/// `(7 + 5√7)/14`.
pub fn sqrt7_rhs(wp: Precision) -> Result<Enclosure> {
    let r = sqrt_enclosure(&int(7), wp)?;
    Ok(r.scale(&int(5)).shift(&int(7)).scale(&ratio(1, 14)))
}

/// `1/((m + √(4+m²))/2 − 1)`.
pub fn metallic_rhs(m: i64, wp: Precision) -> Result<Enclosure> {
    let r = sqrt_enclosure(&int(4 + m * m), wp)?;
    r.shift(&int(m)).scale(&ratio(1, 2)).shift(&int(-1)).recip()
}

/// `(1 + √5)/2`.
pub fn golden_rhs(wp: Precision) -> Result<Enclosure> {
    let r = sqrt_enclosure(&int(5), wp)?;
    Ok(r.shift(&int(1)).scale(&ratio(1, 2)))
}

/// `I(1) = ∫₀¹ e^{−t²} dt`.
pub fn gauss_one(wp: Precision) -> Result<Enclosure> {
    gauss_integral(&int(1), wp)
}
