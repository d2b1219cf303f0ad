use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::numerics::{int, ratio, Enclosure, Rational};

/// `K_n = a₀/(b₀ + a₁/(b₁ + ⋯ + aₙ₋₁/bₙ₋₁))`, evaluated bottom-up.
fn truncation<N, D>(numerators: &N, denominators: &D, n: usize) -> Rational
where
    N: Fn(usize) -> Rational,
    D: Fn(usize) -> Rational,
{
    let mut v = numerators(n - 1) / denominators(n - 1);
    for i in (0..n - 1).rev() {
        v = numerators(i) / (denominators(i) + v);
    }
    v
}

/// Encloses the value of a generalized continued fraction with positive
/// elements by the hull of its last two truncations `K_{N−1}` and `K_N`.
///
/// With positive elements consecutive truncations lie on opposite sides of
/// the limit. `terms = 1` returns the single level `K_1` as a point.
pub fn eval_generalized_cf<N, D>(numerators: N, denominators: D, terms: usize) -> Result<Enclosure>
where
    N: Fn(usize) -> Rational,
    D: Fn(usize) -> Rational,
{
    if terms == 0 {
        return Err(Error::domain("generalized continued fraction needs at least one level"));
    }
    for i in 0..terms {
        if !numerators(i).is_positive() || !denominators(i).is_positive() {
            return Err(Error::domain(alloc::format!(
                "element {i} is not positive; truncations no longer bracket the value"
            )));
        }
    }
    let last = truncation(&numerators, &denominators, terms);
    if terms == 1 {
        return Ok(Enclosure::point(last));
    }
    let prev = truncation(&numerators, &denominators, terms - 1);
    Ok(Enclosure::spanning(prev, last))
}

/// [`eval_generalized_cf`] over explicit element lists of equal length.
pub fn eval_generalized_cf_slices(
    numerators: &[Rational],
    denominators: &[Rational],
) -> Result<Enclosure> {
    if numerators.len() != denominators.len() {
        return Err(Error::domain("numerator and denominator lists differ in length"));
    }
    eval_generalized_cf(
        |i| numerators[i].clone(),
        |i| denominators[i].clone(),
        numerators.len(),
    )
}

/// Constant term in front of the `∫₀¹ e^{−t²} dt` fraction.
pub const ERFINT_OFFSET: (i64, i64) = (3, 8);

/// Numerators of the conjectured fraction for `∫₀¹ e^{−t²} dt − 3/8`:
/// `5/4`, then `n(n+2)²(2n−1)²` for `n ≥ 1`.
pub fn erfint_numerator(i: usize) -> Rational {
    if i == 0 {
        return ratio(5, 4);
    }
    let n = int(i as i64);
    let n2 = &n + int(2);
    let m = &n * int(2) - Rational::one();
    &n * &n2 * &n2 * &m * &m
}

/// Denominators: `3`, then `(2n+5)(n²+n+1)` for `n ≥ 1`.
pub fn erfint_denominator(i: usize) -> Rational {
    if i == 0 {
        return int(3);
    }
    let n = i as i64;
    int((2 * n + 5) * (n * n + n + 1))
}

/// `3/8 + K_N` for the conjectured fraction, as an enclosure.
pub fn eval_erfint_cf(terms: usize) -> Result<Enclosure> {
    let k = eval_generalized_cf(erfint_numerator, erfint_denominator, terms)?;
    Ok(k.shift(&ratio(ERFINT_OFFSET.0, ERFINT_OFFSET.1)))
}
