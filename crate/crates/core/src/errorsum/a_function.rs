use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive};

use crate::error::{Error, Result};
use crate::numerics::{ceil, exp_enclosure, gauss_integral, int, ratio, refine, sum_alternating, Enclosure, Precision, Rational};

fn product_of(l: &Rational, s: &Rational) -> Result<Rational> {
    let c = l * s;
    if !c.is_positive() {
        return Err(Error::domain("A(l, s) needs l*s > 0"));
    }
    Ok(c)
}

/// `A(ℓ,s) = Σₙ (−1)ⁿ / ((n+1)!·(2n²+7n+3)·(ℓs)ⁿ)`.
pub fn a_series(l: &Rational, s: &Rational, prec: Precision) -> Result<Enclosure> {
    let c = product_of(l, s)?;
    let n0 = ceil(&c.recip())
        .to_usize()
        .ok_or_else(|| Error::domain("l*s too small for the alternating series"))?;
    let mut base = Rational::one();
    sum_alternating(
        |n| {
            if n > 0 {
                base = -&base / (&c * int(n as i64 + 1));
            }
            let n = BigInt::from(n);
            let poly: BigInt = &n * &n * 2 + &n * 7 + 3;
            &base / Rational::from_integer(poly)
        },
        n0,
        prec,
    )
}

fn closed_form(c: &Rational, linear: &Rational, cubic: &Rational, prec: Precision) -> Result<Enclosure> {
    refine(prec, 10, |wp| {
        let e = exp_enclosure(&-c.recip(), wp)?;
        let i = gauss_integral(c, wp)?;
        let middle = c * (int(2) - c - c * c) / int(5);
        let poly = linear * c + cubic * c * c * c;
        Ok((&e.scale(&middle) + &i.scale(&ratio(4, 5))).shift(&poly).compact(wp))
    })
}

/// Closed form of `A(ℓ,s)` with `c = ℓs`:
/// `−c/2 + c³/5 + (1/5)c(2 − c − c²)e^{−1/c} + (4/5)∫₀¹ e^{−t²/c} dt`.
pub fn a_closed(l: &Rational, s: &Rational, prec: Precision) -> Result<Enclosure> {
    let c = product_of(l, s)?;
    closed_form(&c, &ratio(-1, 2), &ratio(1, 5), prec)
}

/// The same closed form with the polynomial part written as `−(3/10)c`.
/// It agrees with [`a_closed`] only at `c = 1`; the two differ by `c(c²−1)/5`.
pub fn a_closed_linear_poly(l: &Rational, s: &Rational, prec: Precision) -> Result<Enclosure> {
    let c = product_of(l, s)?;
    closed_form(&c, &ratio(-3, 10), &Rational::from_integer(0.into()), prec)
}
